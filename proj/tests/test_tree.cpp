#include <doctest.h>

#include <algorithm>
#include <set>

#include "mshuff/oracle.hpp"
#include "mshuff/tree.hpp"

using namespace mshuff;

namespace {

Multiset ms(std::string_view text) {
    return Multiset::parse(text);
}

// (((a)+(b))+(2c)), built in display order.
Tree example_tree() {
    return Tree::join(Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("b"))),
                      Tree::leaf(ms("2c")));
}

using LeafList = std::vector<std::pair<Multiset, std::uint64_t>>;

std::multiset<std::pair<std::string, std::uint64_t>> leaf_set(const Tree& t) {
    std::multiset<std::pair<std::string, std::uint64_t>> out;
    for (const auto& [content, depth] : leaves(t))
        out.insert({content.render(), depth});
    return out;
}

} // namespace

TEST_SUITE("tree") {

TEST_CASE("leaf") {
    CHECK(Tree::leaf(ms("2c")).render() == "(2c)");
    CHECK(Tree::leaf(ms("a")).content() == ms("a"));
    CHECK_THROWS_AS(Tree::leaf(Multiset()), DomainError);
}

TEST_CASE("join") {
    const Tree t = Tree::join(Tree::leaf(ms("a+b")), Tree::leaf(ms("2c")));
    CHECK(t.render() == "((a+b)+(2c))");
    CHECK(t.content() == ms("a+b+2c"));
    CHECK_THROWS_AS(Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("a"))), DisjointnessError);
    CHECK(example_tree().content() == ms("a+b+2c"));
}

TEST_CASE("join is commutative up to canonical equality") {
    const Tree l = Tree::leaf(ms("a+b"));
    const Tree r = Tree::leaf(ms("2c"));
    CHECK(Tree::join(l, r) == Tree::join(r, l));
    CHECK(Tree::join(l, r).render() != Tree::join(r, l).render()); // display keeps order
    CHECK(canonical_key(Tree::join(l, r)) == canonical_key(Tree::join(r, l)));
}

TEST_CASE("render matches the fully parenthesized form") {
    CHECK(example_tree().render() == "(((a)+(b))+(2c))");
}

TEST_CASE("leaves with depths") {
    const LeafList got = leaves(example_tree());
    const LeafList expected{{ms("a"), 2}, {ms("b"), 2}, {ms("2c"), 1}};
    CHECK(got == expected);
    CHECK(leaves(Tree::leaf(ms("4x"))) == LeafList{{ms("4x"), 0}});
}

TEST_CASE("depth_of") {
    CHECK(depth_of(ms("2c"), example_tree()) == 1);
    CHECK(depth_of(ms("a"), example_tree()) == 2);
    CHECK(depth_of(ms("x+y"), Tree::leaf(ms("x+y"))) == 0);
    CHECK_THROWS_AS(depth_of(ms("a+b"), example_tree()), NotALeafError); // inner node
    CHECK_THROWS_AS(depth_of(ms("q"), example_tree()), NotALeafError);
}

TEST_CASE("weight") {
    CHECK(weight(example_tree()) == 6); // 1*2 + 1*2 + 2*1
    CHECK(weight(Tree::leaf(ms("9z"))) == 0);
}

TEST_CASE("internal_sum equals weight") {
    CHECK(internal_sum(example_tree()) == 6);
    CHECK(internal_sum(Tree::leaf(ms("9z"))) == 0);
    SplitMix64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Tree t = random_tree(rng, random_multiset(rng, 8, 16));
        CHECK(weight(t) == internal_sum(t));
    }
}

TEST_CASE("scalar_thicken") {
    CHECK(scalar_thicken(2, Tree::leaf(ms("a"))).content() == ms("2a"));
    const Tree t = example_tree();
    CHECK(scalar_thicken(1, t) == t);
    CHECK_THROWS_AS(scalar_thicken(0, t), DomainError);
    SUBCASE("weight scales") {
        const Tree huff = Tree::join(
            Tree::join(Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("b"))), Tree::leaf(ms("2c"))),
            Tree::leaf(ms("4d")));
        CHECK(weight(huff) == 14);
        CHECK(weight(scalar_thicken(3, huff)) == 42);
    }
}

TEST_CASE("multiset_thicken") {
    const Tree thick = multiset_thicken(ms("a+b"), Tree::leaf(ms("2c")));
    CHECK(thick.content() == ms("2(a,c)+2(b,c)"));
    CHECK(thick.is_leaf());
    CHECK_THROWS_AS(multiset_thicken(Multiset(), Tree::leaf(ms("a"))), DomainError);

    // Norm-1 thickening preserves weight; the example tree uses b' as its
    // second atom so (a+b)-thickening stays disjoint.
    Tree primed = Tree::join(Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("b'"))),
                             Tree::leaf(ms("2c")));
    CHECK(weight(multiset_thicken(ms("e"), primed)) == weight(primed));
    CHECK(weight(multiset_thicken(ms("a+b"), primed)) == 12); // |a+b| * 6
}

TEST_CASE("thickening preserves structure and contents") {
    SplitMix64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Tree t = random_tree(rng, random_multiset(rng, 6, 8));
        const Nat k = 1 + rng.below(8);
        const Multiset y = random_multiset(rng, 3, 4, 9);
        const Tree scaled = scalar_thicken(k, t);
        const Tree thickened = multiset_thicken(y, t);
        CHECK(scaled.content() == scalar_mul(k, t.content()));
        CHECK(thickened.content() == product(y, t.content()));
        CHECK(check_invariants(scaled));
        CHECK(check_invariants(thickened));
        CHECK(weight(scaled) == k * weight(t));
        CHECK(weight(thickened) == y.norm() * weight(t));
    }
}

TEST_CASE("attach") {
    const Tree host = Tree::join(Tree::leaf(ms("a+b")), Tree::leaf(ms("2c")));
    const Tree sub = Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("b")));
    CHECK(attach(host, sub).render() == "(((a)+(b))+(2c))");
    CHECK(attach(host, sub) == example_tree());
    CHECK(attach(host, sub).content() == host.content());

    // Attaching a bare leaf is the identity.
    CHECK(attach(example_tree(), Tree::leaf(ms("2c"))) == example_tree());
    CHECK(attach(Tree::leaf(ms("x")), Tree::leaf(ms("x"))) == Tree::leaf(ms("x")));

    CHECK_THROWS_AS(attach(example_tree(), Tree::leaf(ms("q"))), NotALeafError);
}

TEST_CASE("attach splices leaves at shifted depths") {
    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Multiset x = random_multiset(rng, 6, 8);
        const Tree host = random_tree(rng, x);
        const auto host_leaves = leaves(host);
        const auto& [target, target_depth] = host_leaves[rng.below(host_leaves.size())];
        const Tree sub = random_tree(rng, target);
        const Tree result = attach(host, sub);
        CHECK(check_invariants(result));

        auto expected = leaf_set(host);
        expected.erase(expected.find({target.render(), target_depth}));
        for (const auto& [content, depth] : leaves(sub))
            expected.insert({content.render(), target_depth + depth});
        CHECK(leaf_set(result) == expected);
    }
}

TEST_CASE("tree_product") {
    const Tree ty = Tree::join(Tree::leaf(ms("c")), Tree::leaf(ms("d")));
    SUBCASE("leaf host is a thickening") {
        CHECK(tree_product(Tree::leaf(ms("a+b")), ty) == multiset_thicken(ms("a+b"), ty));
    }
    SUBCASE("leaf factor thickens every leaf") {
        const Tree tx = Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("b")));
        const Tree prod = tree_product(tx, Tree::leaf(ms("y")));
        CHECK(prod.content() == ms("(a,y)+(b,y)"));
        CHECK(leaves(prod).size() == 2);
    }
    SUBCASE("weight is a derivation") {
        const Tree tx = Tree::join(Tree::leaf(ms("a")), Tree::leaf(ms("b")));
        CHECK(weight(tree_product(tx, ty)) == 8); // 2*2 + 2*2
    }
}

TEST_CASE("tree_product structure and derivation, randomized") {
    SplitMix64 rng(19);
    for (int i = 0; i < 200; ++i) {
        const Multiset x = random_multiset(rng, 4, 8);
        const Multiset y = random_multiset(rng, 4, 8, 9);
        const Tree tx = random_tree(rng, x);
        const Tree ty = random_tree(rng, y);
        const Tree prod = tree_product(tx, ty);
        CHECK(check_invariants(prod));
        CHECK(prod.content() == product(x, y));
        CHECK(weight(prod) == x.norm() * weight(ty) + weight(tx) * y.norm());
    }
}

TEST_CASE("is_monomial_tree") {
    CHECK(is_monomial_tree(example_tree()));
    CHECK_FALSE(is_monomial_tree(Tree::join(Tree::leaf(ms("a+b")), Tree::leaf(ms("2c")))));
    CHECK(is_monomial_tree(Tree::leaf(ms("2c"))));
}

TEST_CASE("validator accepts every constructed tree") {
    SplitMix64 rng(29);
    for (int i = 0; i < 300; ++i)
        CHECK(check_invariants(random_tree(rng, random_multiset(rng, 8, 16))));
}

TEST_CASE("dot output is deterministic and canonical") {
    const Tree a = Tree::join(Tree::leaf(ms("a+b")), Tree::leaf(ms("2c")));
    const Tree b = Tree::join(Tree::leaf(ms("2c")), Tree::leaf(ms("a+b")));
    CHECK(to_dot(a) == to_dot(b));
    const std::string dot = to_dot(example_tree());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("shape=box, label=\"2c\"") != std::string::npos);
    CHECK(dot.find("shape=ellipse, label=\"a+b+2c\"") != std::string::npos);
    CHECK(dot.find("[label=\"0\"]") != std::string::npos);
}

} // TEST_SUITE
