#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "mshuff/oracle.hpp"

namespace mshuff {

namespace {

double rel_gap(double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

constexpr std::size_t kFailureCap = 1000;
constexpr double kRelTol = 1e-9;

struct Checker {
    const LawOptions& options;
    LawReport report;

    explicit Checker(std::string law, const LawOptions& opts) : options(opts) {
        report.law = std::move(law);
        report.seed = opts.seed;
    }

    Nat tree_weight(const Tree& t) const {
        return options.weight_fn ? options.weight_fn(t) : weight(t);
    }

    void fail(std::string input, std::string expected, std::string actual) {
        if (report.failures.size() < kFailureCap)
            report.failures.push_back({std::move(input), std::move(expected), std::move(actual)});
    }

    void expect_nat(const std::string& input, const Nat& expected, const Nat& actual) {
        if (expected != actual)
            fail(input, nat_str(expected), nat_str(actual));
    }

    void expect_close(const std::string& input, double expected, double actual) {
        if (rel_gap(expected, actual) > kRelTol)
            fail(input, fmt(expected), fmt(actual));
    }

    std::uint64_t samples(std::uint64_t fallback) const {
        return options.samples ? options.samples : fallback;
    }

    std::vector<Multiset> family(std::size_t support_fallback, std::uint64_t count_fallback) const {
        return count_multiset_family(
            options.family_max_support ? options.family_max_support : support_fallback,
            options.family_max_count ? options.family_max_count : count_fallback);
    }
};

// Eq (1): splitting a sequence into blocks loses no entropy:
// w(all) = w(block sums) + sum of w(block).
LawReport law_eq1(const LawOptions& options) {
    Checker c("eq1", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const std::size_t blocks = 1 + rng.below(5);
        std::vector<double> flat, sums;
        double block_total = 0.0;
        std::string input = "[";
        for (std::size_t b = 0; b < blocks; ++b) {
            const std::size_t len = 1 + rng.below(5);
            double sum = 0.0;
            for (std::size_t j = 0; j < len; ++j) {
                double v = rng.below(8) == 0 ? 0.0
                                             : static_cast<double>(rng.below(1 << 20)) / 1024.0;
                flat.push_back(v);
                sum += v;
                char buf[32];
                std::snprintf(buf, sizeof buf, "%s%.10f", j ? "," : "", v);
                input += buf;
            }
            sums.push_back(sum);
            input += b + 1 < blocks ? " | " : "]";
            block_total += entropy_w_seq(std::span<const double>(flat).subspan(
                flat.size() - len, len));
        }
        const double lhs = entropy_w_seq(flat);
        const double rhs = entropy_w_seq(sums) + block_total;
        c.expect_close(input, lhs, rhs);
    }
    return c.report;
}

// Eq (2): w(kX) = k w(X).
LawReport law_eq2(const LawOptions& options) {
    Checker c("eq2", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const Multiset x = random_multiset(rng, 6, 64);
        const Nat k = rng.below(17);
        c.expect_close("k=" + nat_str(k) + ", X=" + x.render(),
                       nat_to_double(k) * entropy_w(x), entropy_w(scalar_mul(k, x)));
    }
    return c.report;
}

// Eq (3): w is a derivation, w(XY) = |X| w(Y) + w(X) |Y|.
LawReport law_eq3(const LawOptions& options) {
    Checker c("eq3", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const Multiset x = random_multiset(rng, 6, 64);
        const Multiset y = random_multiset(rng, 6, 64, 13);
        const double expected =
            nat_to_double(x.norm()) * entropy_w(y) + entropy_w(x) * nat_to_double(y.norm());
        c.expect_close("X=" + x.render() + ", Y=" + y.render(), expected,
                       entropy_w(product(x, y)));
    }
    return c.report;
}

// W respects thickenings: W(k.t) = k W(t) and W(Y.t) = |Y| W(t).
LawReport law_thm7(const LawOptions& options) {
    Checker c("thm7", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const Multiset x = random_multiset(rng, 5, 8);
        const Tree t = random_tree(rng, x);
        const Nat k = 1 + rng.below(8);
        const Multiset y = random_multiset(rng, 2, 4, 9);
        const Nat w = c.tree_weight(t);
        c.expect_nat("k=" + nat_str(k) + ", t=" + t.render(), k * w,
                     c.tree_weight(scalar_thicken(k, t)));
        c.expect_nat("Y=" + y.render() + ", t=" + t.render(), y.norm() * w,
                     c.tree_weight(multiset_thicken(y, t)));
    }
    return c.report;
}

// W is a derivation on trees: W(tx * ty) = |X| W(ty) + W(tx) |Y|.
LawReport law_thm8(const LawOptions& options) {
    Checker c("thm8", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const Multiset x = random_multiset(rng, 4, 8);
        const Multiset y = random_multiset(rng, 4, 8, 9);
        const Tree tx = random_tree(rng, x);
        const Tree ty = random_tree(rng, y);
        c.expect_nat("tX=" + tx.render() + ", tY=" + ty.render(),
                     x.norm() * c.tree_weight(ty) + c.tree_weight(tx) * y.norm(),
                     c.tree_weight(tree_product(tx, ty)));
    }
    return c.report;
}

// W(t^n) = n |X|^(n-1) W(t).
LawReport law_cute(const LawOptions& options) {
    Checker c("cute", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const Multiset x = random_multiset(rng, 3, 6);
        const Tree t = random_tree(rng, x);
        const unsigned n = 1 + static_cast<unsigned>(rng.below(4));
        Tree power = t;
        for (unsigned j = 1; j < n; ++j)
            power = tree_product(power, t);
        c.expect_nat("n=" + std::to_string(n) + ", t=" + t.render(),
                     Nat(n) * nat_pow(x.norm(), n - 1) * c.tree_weight(t),
                     c.tree_weight(power));
    }
    return c.report;
}

// The product of monomial trees is monomial.
LawReport law_lemma10(const LawOptions& options) {
    Checker c("lemma10", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(500); ++i) {
        ++c.report.instances;
        const Tree tx = random_monomial_tree(rng, random_multiset(rng, 4, 6));
        const Tree ty = random_monomial_tree(rng, random_multiset(rng, 4, 6, 9));
        const Tree prod = tree_product(tx, ty);
        if (!is_monomial_tree(prod))
            c.fail("tX=" + tx.render() + ", tY=" + ty.render(), "monomial product",
                   prod.render());
    }
    return c.report;
}

// w(X) <= W(monomial tree) for every monomial tree over X.
LawReport law_thm11(const LawOptions& options) {
    Checker c("thm11", options);
    for (const Multiset& x : c.family(4, 4)) {
        ++c.report.instances;
        const double w = entropy_w(x);
        for (const Tree& t : enumerate_monomial_trees(x)) {
            const double tree_w = nat_to_double(c.tree_weight(t));
            if (w > tree_w + 1e-9)
                c.fail("X=" + x.render() + ", tree=" + t.render(), "w <= " + fmt(tree_w),
                       fmt(w));
        }
    }
    return c.report;
}

// Greedy trees minimize W (forward), and every W-minimal monomial tree is
// reachable by a greedy run (converse). The converse has genuine
// counterexamples when merge costs tie (a+b+2c+2d is the smallest), so this
// law reports them rather than hiding them.
LawReport law_thm13(const LawOptions& options) {
    Checker c("thm13", options);
    AllTreesOptions all_options;
    all_options.max_states = options.max_states;
    for (const Multiset& x : c.family(4, 4)) {
        ++c.report.instances;
        const std::vector<Tree> trees = enumerate_monomial_trees(x);
        Nat best = c.tree_weight(trees[0]);
        for (const Tree& t : trees)
            best = std::min(best, c.tree_weight(t));
        const Nat greedy = c.tree_weight(huffman_tree(x));
        c.expect_nat("X=" + x.render() + " (greedy weight vs enumerated minimum)", best,
                     greedy);
        std::set<std::string> reachable;
        for (const Tree& t : all_huffman_trees(x, all_options))
            reachable.insert(canonical_key(t));
        for (const Tree& t : trees) {
            if (c.tree_weight(t) != best)
                continue;
            const std::string key = canonical_key(t);
            if (!reachable.contains(key))
                c.fail("X=" + x.render(), "minimal tree reachable by a greedy run",
                       "unreachable minimal tree " + key);
        }
    }
    return c.report;
}

// All greedy trees over one multiset share one weight.
LawReport law_cor14(const LawOptions& options) {
    Checker c("cor14", options);
    AllTreesOptions all_options;
    all_options.max_states = options.max_states;
    for (const Multiset& x : c.family(4, 4)) {
        ++c.report.instances;
        const std::vector<Tree> trees = all_huffman_trees(x, all_options);
        const Nat first = c.tree_weight(trees[0]);
        for (const Tree& t : trees)
            c.expect_nat("X=" + x.render() + ", tree=" + t.render(), first, c.tree_weight(t));
    }
    return c.report;
}

// w(X) = W(X) exactly when X is a scalar multiple of a dyadic multiset.
LawReport law_thm16(const LawOptions& options) {
    Checker c("thm16", options);
    for (const Multiset& x : c.family(4, 8)) {
        ++c.report.instances;
        const double w = entropy_w(x);
        const double tree_w = nat_to_double(c.tree_weight(huffman_tree(x)));
        const std::string input = "X=" + x.render();
        if (classify_dyadic(x).is_scalar_multiple_of_dyadic()) {
            if (std::fabs(tree_w - w) > 1e-9)
                c.fail(input, "w = W = " + fmt(tree_w), "w = " + fmt(w));
        } else if (tree_w - w <= 1e-6) {
            c.fail(input, "W - w > 1e-6 for a non-dyadic multiset",
                   "gap = " + fmt(tree_w - w));
        }
    }
    return c.report;
}

// Thickening a greedy tree for dyadic X by k is weight-optimal for kX.
LawReport law_cor17(const LawOptions& options) {
    Checker c("cor17", options);
    for (unsigned e = 0; e <= 4; ++e) {
        for (const Multiset& x : dyadic_multisets(e)) {
            const Tree gx = huffman_tree(x);
            for (std::uint64_t k = 1; k <= 5; ++k) {
                ++c.report.instances;
                c.expect_nat("k=" + std::to_string(k) + ", X=" + x.render(),
                             c.tree_weight(huffman_tree(scalar_mul(Nat(k), x))),
                             c.tree_weight(scalar_thicken(Nat(k), gx)));
            }
        }
    }
    return c.report;
}

// For disjoint dyadic X, Y with X+Y dyadic:
// W(X+Y) = W(Tree(X+Y, Gamma_X, Tree(Y))) + W(Y).
LawReport law_thm18(const LawOptions& options) {
    Checker c("thm18", options);
    for (unsigned e = 0; e <= 4; ++e) {
        // |X| and |Y| must both be 2^e for X+Y to be dyadic; |X+Y| <= 32.
        const std::vector<Multiset> xs = dyadic_multisets(e, 0);
        const std::vector<Multiset> ys = dyadic_multisets(e, 16);
        for (const Multiset& x : xs) {
            for (const Multiset& y : ys) {
                ++c.report.instances;
                const Nat lhs = c.tree_weight(huffman_tree(add(x, y)));
                const Nat rhs = c.tree_weight(Tree::join(huffman_tree(x), Tree::leaf(y))) +
                                c.tree_weight(huffman_tree(y));
                c.expect_nat("X=" + x.render() + ", Y=" + y.render(), lhs, rhs);
            }
        }
    }
    return c.report;
}

// Greedy trees are a derivation: Gamma_X x Gamma_Y is weight-optimal for
// X x Y when X and Y are scalar multiples of dyadic multisets.
LawReport law_thm19(const LawOptions& options) {
    Checker c("thm19", options);
    SplitMix64 rng(options.seed);
    for (std::uint64_t i = 0; i < c.samples(200); ++i) {
        ++c.report.instances;
        const Multiset x = random_scalar_dyadic(rng, 16);
        const Multiset y = random_scalar_dyadic(rng, 16, 16);
        const std::string input = "X=" + x.render() + ", Y=" + y.render();
        const Tree gx = huffman_tree(x);
        const Tree gy = huffman_tree(y);
        const Multiset xy = product(x, y);
        const Nat product_weight = c.tree_weight(tree_product(gx, gy));
        const Nat derivation = x.norm() * c.tree_weight(gy) + c.tree_weight(gx) * y.norm();
        c.expect_nat(input + " (product tree vs greedy weight)", product_weight,
                     c.tree_weight(huffman_tree(xy)));
        c.expect_nat(input + " (product tree vs |X|W(Y)+W(X)|Y|)", product_weight, derivation);
        if (xy.support_size() <= 6) {
            const std::vector<Tree> trees = enumerate_monomial_trees(xy);
            Nat best = c.tree_weight(trees[0]);
            for (const Tree& t : trees)
                best = std::min(best, c.tree_weight(t));
            c.expect_nat(input + " (product tree vs enumerated minimum)", best, product_weight);
        }
    }
    return c.report;
}

using LawFn = LawReport (*)(const LawOptions&);

const std::vector<std::pair<std::string, LawFn>>& registry() {
    static const std::vector<std::pair<std::string, LawFn>> laws = {
        {"eq1", law_eq1},     {"eq2", law_eq2},         {"eq3", law_eq3},
        {"thm7", law_thm7},   {"thm8", law_thm8},       {"cute", law_cute},
        {"lemma10", law_lemma10}, {"thm11", law_thm11}, {"thm13", law_thm13},
        {"cor14", law_cor14}, {"thm16", law_thm16},     {"cor17", law_cor17},
        {"thm18", law_thm18}, {"thm19", law_thm19},
    };
    return laws;
}

} // namespace

LawReport check_law(std::string_view law, const LawOptions& options) {
    for (const auto& [id, fn] : registry())
        if (id == law)
            return fn(options);
    throw UnknownLawError("unknown law id: '" + std::string(law) + "'");
}

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry())
            out.push_back(id);
        return out;
    }();
    return ids;
}

} // namespace mshuff
