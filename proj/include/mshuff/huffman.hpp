#pragma once

#include <cstddef>
#include <vector>

#include "mshuff/tree.hpp"

namespace mshuff {

// Greedy bottom-up construction: start with one leaf per monomial of x and
// repeatedly join the pair of roots whose merged norm is minimal. Ties are
// broken deterministically by the lexicographically least content rendering
// (the weight of the result is tie-independent; the shape is pinned so runs
// are reproducible). Throws DomainError on the zero multiset.
Tree huffman_tree(const Multiset& x);

// Weight of any greedy tree over x; well defined because all of them share
// one weight.
Nat huffman_weight(const Multiset& x);

struct AllTreesOptions {
    std::size_t max_support = 8;      // TooLargeError beyond this
    std::size_t max_states = 1000000; // cap on distinct forests explored
};

// Every tree reachable by some sequence of minimal-norm pair merges (the
// construction is nondeterministic under ties), deduplicated by canonical
// form and sorted by canonical key. Intended for small supports.
std::vector<Tree> all_huffman_trees(const Multiset& x, const AllTreesOptions& options = {});

} // namespace mshuff
