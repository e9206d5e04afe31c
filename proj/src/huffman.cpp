#include "mshuff/huffman.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace mshuff {

namespace {

struct QueueEntry {
    Nat norm;
    std::string key; // content rendering, the deterministic tie-break
    Tree tree;
};

struct QueueOrder {
    // std::priority_queue pops the largest, so invert.
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.norm != b.norm)
            return a.norm > b.norm;
        return a.key > b.key;
    }
};

} // namespace

Tree huffman_tree(const Multiset& x) {
    if (x.is_zero())
        throw DomainError("huffman_tree over the zero multiset");
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;
    for (const auto& [symbol, count] : x.entries()) {
        Multiset monomial = Multiset::monomial(symbol, count);
        std::string key = monomial.render();
        queue.push({count, std::move(key), Tree::leaf(std::move(monomial))});
    }
    while (queue.size() > 1) {
        QueueEntry a = queue.top();
        queue.pop();
        QueueEntry b = queue.top();
        queue.pop();
        Tree merged = Tree::join(a.tree, b.tree);
        std::string key = merged.content().render();
        queue.push({a.norm + b.norm, std::move(key), std::move(merged)});
    }
    return queue.top().tree;
}

Nat huffman_weight(const Multiset& x) {
    return weight(huffman_tree(x));
}

namespace {

struct ForestEntry {
    Tree tree;
    Nat norm;
    std::string key; // canonical key, for state deduplication
};

std::string forest_key(const std::vector<ForestEntry>& forest) {
    std::vector<std::string> keys;
    keys.reserve(forest.size());
    for (const auto& entry : forest)
        keys.push_back(entry.key);
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) {
        out += k;
        out += '|';
    }
    return out;
}

struct AllTreesSearch {
    const AllTreesOptions& options;
    std::set<std::string> visited;
    std::map<std::string, Tree> results;

    void explore(const std::vector<ForestEntry>& forest) {
        if (!visited.insert(forest_key(forest)).second)
            return;
        if (visited.size() > options.max_states)
            throw TooLargeError("all_huffman_trees: state cap exceeded");
        if (forest.size() == 1) {
            results.emplace(forest[0].key, canonical(forest[0].tree));
            return;
        }
        Nat best = forest[0].norm + forest[1].norm;
        for (std::size_t i = 0; i < forest.size(); ++i)
            for (std::size_t j = i + 1; j < forest.size(); ++j)
                best = std::min(best, Nat(forest[i].norm + forest[j].norm));
        for (std::size_t i = 0; i < forest.size(); ++i) {
            for (std::size_t j = i + 1; j < forest.size(); ++j) {
                if (forest[i].norm + forest[j].norm != best)
                    continue;
                Tree merged = Tree::join(forest[i].tree, forest[j].tree);
                std::vector<ForestEntry> next;
                next.reserve(forest.size() - 1);
                for (std::size_t k = 0; k < forest.size(); ++k)
                    if (k != i && k != j)
                        next.push_back(forest[k]);
                next.push_back({merged, forest[i].norm + forest[j].norm, canonical_key(merged)});
                explore(next);
            }
        }
    }
};

} // namespace

std::vector<Tree> all_huffman_trees(const Multiset& x, const AllTreesOptions& options) {
    if (x.is_zero())
        throw DomainError("all_huffman_trees over the zero multiset");
    if (x.support_size() > options.max_support)
        throw TooLargeError("all_huffman_trees: support " + std::to_string(x.support_size()) +
                            " exceeds cap " + std::to_string(options.max_support));
    std::vector<ForestEntry> forest;
    for (const auto& [symbol, count] : x.entries()) {
        Tree leaf = Tree::leaf(Multiset::monomial(symbol, count));
        forest.push_back({leaf, count, canonical_key(leaf)});
    }
    AllTreesSearch search{options, {}, {}};
    search.explore(forest);
    std::vector<Tree> out;
    out.reserve(search.results.size());
    for (const auto& [key, tree] : search.results)
        out.push_back(tree);
    return out;
}

} // namespace mshuff
