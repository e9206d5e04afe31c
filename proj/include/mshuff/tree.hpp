#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mshuff/multiset.hpp"

namespace mshuff {

// A binary tree whose every vertex carries a multiset. Invariants, enforced
// at construction:
//   - a leaf's multiset is never zero;
//   - at every inner node the children's multisets are disjoint and sum to
//     the node's multiset.
// Children are kept in construction order for display, but trees are a
// quotient: operator== compares canonical forms, where at each node children
// are ordered by the rendered string of their multiset. Trees are immutable
// and cheap to copy (shared structure).
class Tree {
public:
    static Tree leaf(Multiset content);                 // DomainError on zero
    static Tree join(const Tree& l, const Tree& r);     // DisjointnessError

    const Multiset& content() const { return node_->content; }
    Nat norm() const { return node_->content.norm(); }
    bool is_leaf() const { return node_->kids.empty(); }
    const Tree& left() const;
    const Tree& right() const;

    // Fully parenthesized display form in stored child order, with every
    // subtree wrapped: "(((a)+(b))+(2c))".
    std::string render() const;

    bool operator==(const Tree& other) const;

private:
    struct Node {
        Multiset content;
        std::vector<Tree> kids; // empty or exactly two
    };
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Tree make(Multiset content, std::vector<Tree> kids);
    std::shared_ptr<const Node> node_;

    friend Tree canonical(const Tree& t);
};

// Canonical representative: children sorted (recursively) by their content
// rendering. render() of the canonical form is the tree's identity key.
Tree canonical(const Tree& t);
std::string canonical_key(const Tree& t);

// Leaf multisets with their depths (root = 0), stored-child-order DFS.
std::vector<std::pair<Multiset, std::uint64_t>> leaves(const Tree& t);

// Depth of the unique leaf equal to x; NotALeafError if x is not a leaf.
std::uint64_t depth_of(const Multiset& x, const Tree& t);

// Depth-weighted sum of leaf norms. weight(leaf) = 0.
Nat weight(const Tree& t);

// Sum of inner-node norms; equals weight(t) (the classical path-length
// identity, kept as an independent second route).
Nat internal_sum(const Tree& t);

// Structure-preserving actions: every vertex multiset is scaled / multiplied.
Tree scalar_thicken(const Nat& k, const Tree& t);       // k >= 1
Tree multiset_thicken(const Multiset& x, const Tree& t); // x non-zero

// Replaces the unique leaf of host equal to sub's root multiset by sub.
Tree attach(const Tree& host, const Tree& sub);          // NotALeafError

// Product of trees: every leaf L of tx is replaced by the L-thickening of
// ty; inner contents become products. Monomial trees stay monomial.
Tree tree_product(const Tree& tx, const Tree& ty);

// True iff every leaf is a monomial (support of size one).
bool is_monomial_tree(const Tree& t);

// Walks the whole tree re-checking the construction invariants.
bool check_invariants(const Tree& t);

// Graphviz rendering of the canonical form: leaves as boxes, inner nodes as
// ellipses, edges to canonical-ordered children labeled 0/1. Identical
// canonical trees produce identical output.
std::string to_dot(const Tree& t);

} // namespace mshuff
