#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mshuff/huffman.hpp"
#include "mshuff/rng.hpp"
#include "mshuff/tree.hpp"

namespace mshuff {

struct EnumOptions {
    std::size_t max_support = 7; // (2n-3)!! trees; 7 gives 10395
};

// Every canonical monomial tree over x, each exactly once, by recursive
// bipartition of the monomial set (the part containing a fixed pivot is the
// left part, which kills the child-swap symmetry). Deterministic order.
// Throws DomainError on zero, TooLargeError over the support cap.
std::vector<Tree> enumerate_monomial_trees(const Multiset& x, const EnumOptions& options = {});

struct MinWeightResult {
    Nat weight;
    Tree tree;              // first witness in enumeration order
    std::size_t tree_count; // number of monomial trees considered
};

MinWeightResult min_weight(const Multiset& x, const EnumOptions& options = {});

struct ConvergencePoint {
    unsigned n = 0;
    Nat weight;      // W(X^n) via the greedy construction
    Nat denominator; // n * |X|^(n-1)
    double ratio = 0.0;
};

struct ConvergeOptions {
    // support(X)^n_max must stay within this many product symbols.
    std::size_t max_product_symbols = 100000;
};

// Ratio sequence W(X^n) / (n |X|^(n-1)) for n = 1..n_max; the ratios are
// bounded below by entropy_w(x) and pin it exactly on scalar-dyadic inputs.
std::vector<ConvergencePoint> convergence(const Multiset& x, unsigned n_max,
                                          const ConvergeOptions& options = {});

struct LawFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct LawReport {
    std::string law;
    std::uint64_t seed = 0;
    std::uint64_t instances = 0;
    std::vector<LawFailure> failures; // capped at 1000 entries
    bool passed() const { return failures.empty(); }
};

struct LawOptions {
    std::uint64_t seed = 17;
    // 0 means the per-law default. Applies to sampled laws only.
    std::uint64_t samples = 0;
    // 0 means the per-law default. Applies to exhaustive-family laws only.
    std::size_t family_max_support = 0;
    std::uint64_t family_max_count = 0;
    std::size_t max_states = 1000000;
    // Test hook: replaces the tree-weight function inside the checkers so a
    // corrupted weight provably produces a failing report.
    std::function<Nat(const Tree&)> weight_fn;
};

// Law ids: eq1 eq2 eq3 thm7 thm8 cute lemma10 thm11 thm13 cor14 thm16 cor17
// thm18 thm19. Throws UnknownLawError for anything else. Reports are
// deterministic functions of (law, options).
LawReport check_law(std::string_view law, const LawOptions& options = {});

const std::vector<std::string>& law_ids();

// ---- shared instance generators (used by the laws, the acceptance suite
// ---- and the property tests) ----

// The n-th distinct atom: a..z, then s26, s27, ...
Symbol nth_atom(std::size_t i);

// All multisets with support size 1..max_support and counts drawn
// nondecreasing from 1..max_count (one representative per relabeling class),
// over the atoms a, b, c, ...
std::vector<Multiset> count_multiset_family(std::size_t max_support, std::uint64_t max_count);

// All dyadic multisets of norm exactly 2^norm_log2 (counts are the binary
// partitions of 2^norm_log2), over atoms starting at pool_offset.
std::vector<Multiset> dyadic_multisets(unsigned norm_log2, std::size_t pool_offset = 0);

// Random non-zero multiset with support <= max_support, counts in
// 1..max_count, over atoms starting at pool_offset.
Multiset random_multiset(SplitMix64& rng, std::size_t max_support, std::uint64_t max_count,
                         std::size_t pool_offset = 0);

// Random tree over x: random support bipartitions with early stops, so
// leaves need not be monomials.
Tree random_tree(SplitMix64& rng, const Multiset& x);

// Random monomial tree over x: random support bipartitions all the way down.
Tree random_monomial_tree(SplitMix64& rng, const Multiset& x);

// Random scalar multiple of a dyadic multiset with norm <= max_norm.
Multiset random_scalar_dyadic(SplitMix64& rng, std::uint64_t max_norm,
                              std::size_t pool_offset = 0);

} // namespace mshuff
