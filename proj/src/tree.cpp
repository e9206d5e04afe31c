#include "mshuff/tree.hpp"

#include <algorithm>
#include <optional>

namespace mshuff {

Tree Tree::make(Multiset content, std::vector<Tree> kids) {
    auto node = std::make_shared<Node>();
    node->content = std::move(content);
    node->kids = std::move(kids);
    return Tree(std::move(node));
}

Tree Tree::leaf(Multiset content) {
    if (content.is_zero())
        throw DomainError("leaf over the zero multiset");
    return make(std::move(content), {});
}

Tree Tree::join(const Tree& l, const Tree& r) {
    if (!disjoint(l.content(), r.content()))
        throw DisjointnessError("join of overlapping multisets " + l.content().render() +
                                " and " + r.content().render());
    return make(add(l.content(), r.content()), {l, r});
}

const Tree& Tree::left() const {
    if (is_leaf())
        throw Error("left() on a leaf");
    return node_->kids[0];
}

const Tree& Tree::right() const {
    if (is_leaf())
        throw Error("right() on a leaf");
    return node_->kids[1];
}

std::string Tree::render() const {
    if (is_leaf())
        return "(" + content().render() + ")";
    return "(" + left().render() + "+" + right().render() + ")";
}

Tree canonical(const Tree& t) {
    if (t.is_leaf())
        return t;
    Tree l = canonical(t.left());
    Tree r = canonical(t.right());
    if (r.content().render() < l.content().render())
        std::swap(l, r);
    return Tree::make(t.content(), {l, r});
}

std::string canonical_key(const Tree& t) {
    return canonical(t).render();
}

bool Tree::operator==(const Tree& other) const {
    return canonical_key(*this) == canonical_key(other);
}

std::vector<std::pair<Multiset, std::uint64_t>> leaves(const Tree& t) {
    std::vector<std::pair<Multiset, std::uint64_t>> out;
    struct Frame {
        Tree tree;
        std::uint64_t depth;
    };
    std::vector<Frame> stack{{t, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.tree.is_leaf()) {
            out.emplace_back(f.tree.content(), f.depth);
        } else {
            stack.push_back({f.tree.right(), f.depth + 1});
            stack.push_back({f.tree.left(), f.depth + 1});
        }
    }
    return out;
}

std::uint64_t depth_of(const Multiset& x, const Tree& t) {
    for (const auto& [content, depth] : leaves(t))
        if (content == x)
            return depth;
    throw NotALeafError(x.render() + " is not a leaf of " + t.render());
}

Nat weight(const Tree& t) {
    Nat total = 0;
    for (const auto& [content, depth] : leaves(t))
        total += Nat(depth) * content.norm();
    return total;
}

Nat internal_sum(const Tree& t) {
    if (t.is_leaf())
        return 0;
    return t.content().norm() + internal_sum(t.left()) + internal_sum(t.right());
}

Tree scalar_thicken(const Nat& k, const Tree& t) {
    if (k <= 0)
        throw DomainError("scalar_thicken needs k >= 1");
    if (t.is_leaf())
        return Tree::leaf(scalar_mul(k, t.content()));
    return Tree::join(scalar_thicken(k, t.left()), scalar_thicken(k, t.right()));
}

Tree multiset_thicken(const Multiset& x, const Tree& t) {
    if (x.is_zero())
        throw DomainError("multiset_thicken by the zero multiset");
    if (t.is_leaf())
        return Tree::leaf(product(x, t.content()));
    return Tree::join(multiset_thicken(x, t.left()), multiset_thicken(x, t.right()));
}

namespace {

std::optional<Tree> attach_at(const Tree& host, const Tree& sub) {
    if (host.is_leaf())
        return host.content() == sub.content() ? std::optional<Tree>(sub) : std::nullopt;
    if (auto l = attach_at(host.left(), sub))
        return Tree::join(*l, host.right());
    if (auto r = attach_at(host.right(), sub))
        return Tree::join(host.left(), *r);
    return std::nullopt;
}

} // namespace

Tree attach(const Tree& host, const Tree& sub) {
    if (auto result = attach_at(host, sub))
        return *result;
    throw NotALeafError(sub.content().render() + " is not a leaf of " + host.render());
}

Tree tree_product(const Tree& tx, const Tree& ty) {
    if (tx.is_leaf())
        return multiset_thicken(tx.content(), ty);
    return Tree::join(tree_product(tx.left(), ty), tree_product(tx.right(), ty));
}

bool is_monomial_tree(const Tree& t) {
    for (const auto& [content, depth] : leaves(t))
        if (!content.is_monomial())
            return false;
    return true;
}

bool check_invariants(const Tree& t) {
    if (t.is_leaf())
        return !t.content().is_zero();
    const Tree& l = t.left();
    const Tree& r = t.right();
    return disjoint(l.content(), r.content()) && t.content() == add(l.content(), r.content()) &&
           check_invariants(l) && check_invariants(r);
}

namespace {

void dot_node(const Tree& t, std::size_t& next_id, std::string& out) {
    const std::size_t id = next_id++;
    out += "  n" + std::to_string(id) + " [shape=" + (t.is_leaf() ? "box" : "ellipse") +
           ", label=\"" + t.content().render() + "\"];\n";
    if (t.is_leaf())
        return;
    for (int side = 0; side < 2; ++side) {
        const std::size_t kid_id = next_id;
        dot_node(side == 0 ? t.left() : t.right(), next_id, out);
        out += "  n" + std::to_string(id) + " -> n" + std::to_string(kid_id) + " [label=\"" +
               std::to_string(side) + "\"];\n";
    }
}

} // namespace

std::string to_dot(const Tree& t) {
    std::string out = "digraph mshuff {\n";
    std::size_t next_id = 0;
    dot_node(canonical(t), next_id, out);
    out += "}\n";
    return out;
}

} // namespace mshuff
