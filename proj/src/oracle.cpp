#include "mshuff/oracle.hpp"

#include <algorithm>
#include <string>

namespace mshuff {

namespace {

// Recursive bipartition: every tree over `monomials` splits them at the root
// into the part holding monomials[0] and the rest, which uniquely orients
// the two children of the quotient.
void enumerate_over(const std::vector<Multiset>& monomials, std::vector<Tree>& out) {
    if (monomials.size() == 1) {
        out.push_back(Tree::leaf(monomials[0]));
        return;
    }
    const std::size_t rest = monomials.size() - 1;
    for (std::uint64_t mask = 0; mask < (1ull << rest); ++mask) {
        std::vector<Multiset> with_pivot{monomials[0]};
        std::vector<Multiset> without;
        for (std::size_t i = 0; i < rest; ++i) {
            if (mask >> i & 1)
                with_pivot.push_back(monomials[i + 1]);
            else
                without.push_back(monomials[i + 1]);
        }
        if (without.empty())
            continue;
        std::vector<Tree> left, right;
        enumerate_over(with_pivot, left);
        enumerate_over(without, right);
        for (const Tree& l : left)
            for (const Tree& r : right)
                out.push_back(Tree::join(l, r));
    }
}

std::vector<Multiset> monomials_of(const Multiset& x) {
    std::vector<Multiset> out;
    for (const auto& [symbol, count] : x.entries())
        out.push_back(Multiset::monomial(symbol, count));
    return out;
}

} // namespace

std::vector<Tree> enumerate_monomial_trees(const Multiset& x, const EnumOptions& options) {
    if (x.is_zero())
        throw DomainError("enumerate_monomial_trees over the zero multiset");
    if (x.support_size() > options.max_support)
        throw TooLargeError("enumerate_monomial_trees: support " +
                            std::to_string(x.support_size()) + " exceeds cap " +
                            std::to_string(options.max_support));
    std::vector<Tree> out;
    enumerate_over(monomials_of(x), out);
    return out;
}

MinWeightResult min_weight(const Multiset& x, const EnumOptions& options) {
    const std::vector<Tree> trees = enumerate_monomial_trees(x, options);
    std::size_t best = 0;
    Nat best_weight = weight(trees[0]);
    for (std::size_t i = 1; i < trees.size(); ++i) {
        Nat w = weight(trees[i]);
        if (w < best_weight) {
            best_weight = std::move(w);
            best = i;
        }
    }
    return {best_weight, trees[best], trees.size()};
}

std::vector<ConvergencePoint> convergence(const Multiset& x, unsigned n_max,
                                          const ConvergeOptions& options) {
    if (x.is_zero())
        throw DomainError("convergence over the zero multiset");
    if (n_max == 0)
        throw DomainError("convergence needs n_max >= 1");
    if (nat_pow(Nat(x.support_size()), n_max) > Nat(options.max_product_symbols))
        throw TooLargeError("convergence: support^n_max exceeds the product-symbol cap");

    const Nat norm = x.norm();
    std::vector<ConvergencePoint> out;
    Multiset power = x;
    for (unsigned n = 1; n <= n_max; ++n) {
        ConvergencePoint point;
        point.n = n;
        point.weight = huffman_weight(power);
        point.denominator = Nat(n) * nat_pow(norm, n - 1);
        point.ratio = nat_to_double(point.weight) / nat_to_double(point.denominator);
        out.push_back(std::move(point));
        if (n < n_max)
            power = product(power, x);
    }
    return out;
}

Symbol nth_atom(std::size_t i) {
    if (i < 26)
        return Symbol::atom(std::string(1, static_cast<char>('a' + i)));
    return Symbol::atom("s" + std::to_string(i));
}

namespace {

void count_tuples(std::size_t size, std::uint64_t max_count, std::uint64_t from,
                  std::vector<std::uint64_t>& current, std::vector<Multiset>& out) {
    if (current.size() == size) {
        Multiset ms;
        for (std::size_t i = 0; i < size; ++i)
            ms.add(nth_atom(i), Nat(current[i]));
        out.push_back(std::move(ms));
        return;
    }
    for (std::uint64_t c = from; c <= max_count; ++c) {
        current.push_back(c);
        count_tuples(size, max_count, c, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Multiset> count_multiset_family(std::size_t max_support, std::uint64_t max_count) {
    std::vector<Multiset> out;
    for (std::size_t size = 1; size <= max_support; ++size) {
        std::vector<std::uint64_t> current;
        count_tuples(size, max_count, 1, current, out);
    }
    return out;
}

namespace {

// Binary partitions of `remaining` into powers of two <= max_part,
// nonincreasing part order.
void binary_partitions(std::uint64_t remaining, std::uint64_t max_part,
                       std::vector<std::uint64_t>& current,
                       std::vector<std::vector<std::uint64_t>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    std::uint64_t part = max_part;
    while (part > remaining)
        part >>= 1;
    for (; part >= 1; part >>= 1) {
        current.push_back(part);
        binary_partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Multiset> dyadic_multisets(unsigned norm_log2, std::size_t pool_offset) {
    std::vector<std::vector<std::uint64_t>> partitions;
    std::vector<std::uint64_t> current;
    const std::uint64_t norm = 1ull << norm_log2;
    binary_partitions(norm, norm, current, partitions);
    std::vector<Multiset> out;
    for (const auto& parts : partitions) {
        Multiset ms;
        for (std::size_t i = 0; i < parts.size(); ++i)
            ms.add(nth_atom(pool_offset + i), Nat(parts[i]));
        out.push_back(std::move(ms));
    }
    return out;
}

Multiset random_multiset(SplitMix64& rng, std::size_t max_support, std::uint64_t max_count,
                         std::size_t pool_offset) {
    const std::size_t support = 1 + rng.below(max_support);
    Multiset out;
    for (std::size_t i = 0; i < support; ++i)
        out.add(nth_atom(pool_offset + i), Nat(1 + rng.below(max_count)));
    return out;
}

namespace {

Tree random_tree_over(SplitMix64& rng, const std::vector<std::pair<Symbol, Nat>>& entries,
                      bool monomial_leaves) {
    if (entries.size() == 1)
        return Tree::leaf(Multiset::monomial(entries[0].first, entries[0].second));
    if (!monomial_leaves && rng.below(4) == 0) {
        Multiset content;
        for (const auto& [symbol, count] : entries)
            content.add(symbol, count);
        return Tree::leaf(content);
    }
    // Random proper bipartition of the support.
    std::vector<std::pair<Symbol, Nat>> left, right;
    while (left.empty() || right.empty()) {
        left.clear();
        right.clear();
        for (const auto& entry : entries)
            (rng.below(2) ? left : right).push_back(entry);
    }
    return Tree::join(random_tree_over(rng, left, monomial_leaves),
                      random_tree_over(rng, right, monomial_leaves));
}

std::vector<std::pair<Symbol, Nat>> entry_list(const Multiset& x) {
    return {x.entries().begin(), x.entries().end()};
}

} // namespace

Tree random_tree(SplitMix64& rng, const Multiset& x) {
    if (x.is_zero())
        throw DomainError("random_tree over the zero multiset");
    return random_tree_over(rng, entry_list(x), false);
}

Tree random_monomial_tree(SplitMix64& rng, const Multiset& x) {
    if (x.is_zero())
        throw DomainError("random_monomial_tree over the zero multiset");
    return random_tree_over(rng, entry_list(x), true);
}

Multiset random_scalar_dyadic(SplitMix64& rng, std::uint64_t max_norm, std::size_t pool_offset) {
    // Pick a dyadic norm 2^e <= max_norm, a random binary partition of it,
    // and a random admissible scalar.
    unsigned max_e = 0;
    while ((2ull << max_e) <= max_norm)
        ++max_e;
    const unsigned e = static_cast<unsigned>(rng.below(max_e + 1));
    std::uint64_t parts_left = 1ull << e;
    std::uint64_t part = parts_left;
    Multiset dyadic;
    std::size_t next_symbol = pool_offset;
    while (parts_left > 0) {
        while (part > parts_left)
            part >>= 1;
        while (part > 1 && rng.below(2))
            part >>= 1;
        dyadic.add(nth_atom(next_symbol++), Nat(part));
        parts_left -= part;
    }
    const std::uint64_t max_k = max_norm / (1ull << e);
    return scalar_mul(Nat(1 + rng.below(max_k)), dyadic);
}

} // namespace mshuff
