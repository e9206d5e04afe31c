// Acceptance suite: every shipped guarantee, one pass/fail line each.
// Exit status is the number of failed criteria (0 when all hold).

#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "mshuff/codec.hpp"
#include "mshuff/freq.hpp"
#include "mshuff/oracle.hpp"
#include "mshuff/serialize.hpp"

using namespace mshuff;

namespace {

int failures = 0;

void report(int id, bool passed, const std::string& text) {
    std::printf("[%2d] %s  %s\n", id, passed ? "PASS" : "FAIL", text.c_str());
    if (!passed)
        ++failures;
}

Multiset ms(std::string_view text) {
    return Multiset::parse(text);
}

// 1. The worked dyadic example: W(a+b+2c+4d) = 14 = w(a+b+2c+4d).
void criterion_1() {
    const Multiset x = ms("a+b+2c+4d");
    const Nat w_tree = huffman_weight(x);
    const double w = entropy_w(x);
    const bool ok = w_tree == 14 && std::fabs(w - 14.0) <= 1e-9;
    report(1, ok, "worked example: W(a+b+2c+4d) = " + nat_str(w_tree) + ", w = " +
                      format_fixed9(w));
}

// 2. Greedy weight equals the exhaustive minimum over every multiset with
//    support <= 5 and counts in 1..6 (one representative per relabeling).
void criterion_2() {
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (const Multiset& x : count_multiset_family(5, 6)) {
        ++checked;
        if (huffman_weight(x) != min_weight(x).weight) {
            if (bad++ == 0)
                first = x.render();
        }
    }
    report(2, bad == 0,
           "greedy weight equals the enumerated minimum on " + std::to_string(checked) +
               " multisets (support <= 5, counts <= 6)" +
               (bad ? "; " + std::to_string(bad) + " mismatches, first: " + first : ""));
}

// 3. Converse at micro scale: every weight-minimal canonical tree is
//    reachable by some greedy run, for support <= 4 and counts <= 4.
void criterion_3() {
    std::size_t checked = 0, bad = 0;
    std::vector<std::string> counterexamples;
    for (const Multiset& x : count_multiset_family(4, 4)) {
        ++checked;
        Nat best;
        bool have = false;
        std::vector<Tree> trees = enumerate_monomial_trees(x);
        for (const Tree& t : trees) {
            const Nat w = weight(t);
            if (!have || w < best) {
                best = w;
                have = true;
            }
        }
        std::set<std::string> reachable;
        for (const Tree& t : all_huffman_trees(x))
            reachable.insert(canonical_key(t));
        bool all_reachable = true;
        for (const Tree& t : trees)
            if (weight(t) == best && !reachable.contains(canonical_key(t)))
                all_reachable = false;
        if (!all_reachable) {
            ++bad;
            counterexamples.push_back(x.render());
        }
    }
    std::string text = "every weight-minimal tree is greedily reachable on " +
                       std::to_string(checked) + " multisets (support <= 4, counts <= 4)";
    if (bad) {
        text += "; " + std::to_string(bad) + " counterexamples:";
        for (const std::string& c : counterexamples)
            text += " " + c;
    }
    report(3, bad == 0, text);
}

// 4. All greedy trees over one multiset share one weight, exactly.
void criterion_4() {
    std::size_t checked = 0, bad = 0;
    for (const Multiset& x : count_multiset_family(4, 4)) {
        ++checked;
        const std::vector<Tree> trees = all_huffman_trees(x);
        const Nat first = weight(trees[0]);
        for (const Tree& t : trees)
            if (weight(t) != first)
                ++bad;
    }
    report(4, bad == 0,
           "all greedy trees share one weight on " + std::to_string(checked) + " multisets");
}

void law_criterion(int id, const std::vector<std::string>& laws, std::uint64_t samples,
                   const std::string& text) {
    LawOptions options;
    options.samples = samples;
    bool ok = true;
    std::uint64_t instances = 0;
    std::string detail;
    for (const std::string& law : laws) {
        const LawReport r = check_law(law, options);
        instances += r.instances;
        if (!r.passed()) {
            ok = false;
            detail += " " + law + " failed on " + r.failures[0].input + ";";
        }
    }
    report(id, ok, text + " (" + std::to_string(instances) + " instances, seed 17)" + detail);
}

// 5. The three entropy laws at 1e-9 relative tolerance, 500 instances each.
void criterion_5() {
    law_criterion(5, {"eq1", "eq2", "eq3"}, 500,
                  "entropy grouping, homogeneity and derivation laws");
}

// 6. Weight thickening, tree derivation and the n-fold product formula,
//    exact, 500 seeded random trees each.
void criterion_6() {
    law_criterion(6, {"thm7", "thm8", "cute"}, 500,
                  "weight thickening, derivation and n-fold product identities");
}

// 7. w = W within 1e-9 exactly for scalar multiples of dyadic multisets;
//    gap > 1e-6 for everything else, over the criterion-2 family.
void criterion_7() {
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (const Multiset& x : count_multiset_family(5, 6)) {
        ++checked;
        const double w = entropy_w(x);
        const double tree_w = nat_to_double(huffman_weight(x));
        const bool scalar_dyadic = classify_dyadic(x).is_scalar_multiple_of_dyadic();
        const bool ok = scalar_dyadic ? std::fabs(tree_w - w) <= 1e-9 : tree_w - w > 1e-6;
        if (!ok && bad++ == 0)
            first = x.render();
    }
    report(7, bad == 0,
           "w = W exactly on scalar-dyadic multisets and strictly below otherwise (" +
               std::to_string(checked) + " multisets)" + (bad ? "; first: " + first : ""));
}

// 8. Dyadic sum rule and scalar thickening optimality, exhaustive families.
void criterion_8() {
    const LawReport sum_rule = check_law("thm18");
    const LawReport thickening = check_law("cor17");
    const bool ok = sum_rule.passed() && thickening.passed();
    report(8, ok,
           "dyadic sum rule (" + std::to_string(sum_rule.instances) +
               " pairs, |X+Y| <= 32) and scalar thickening optimality (" +
               std::to_string(thickening.instances) + " instances, k <= 5)");
}

// 9. The product of greedy trees is a minimum-weight tree for the product
//    multiset, 200 seeded scalar-dyadic pairs with |X|, |Y| <= 16.
void criterion_9() {
    LawOptions options;
    options.samples = 200;
    const LawReport r = check_law("thm19", options);
    report(9, r.passed(),
           "product of greedy trees is greedy for the product (" +
               std::to_string(r.instances) + " scalar-dyadic pairs, oracle below support 6)" +
               (r.passed() ? "" : "; first: " + r.failures[0].input));
}

// Optimal external path length for M equally likely symbols: codeword
// lengths k and k+1 with k = floor(log2 M). Independent of the library.
std::uint64_t uniform_external_path(std::uint64_t m) {
    std::uint64_t k = 0;
    while ((2ull << k) <= m)
        ++k;
    return m * k + 2 * (m - (1ull << k));
}

// 10. Convergence experiment: exact uniform ratios 5, 29/6, 130/27 for
//     a+b+c, strictly decreasing and bounded by 3 log2 3; exact ratio 14
//     for the dyadic example at every n <= 4.
void criterion_10() {
    bool ok = true;
    std::string detail;

    const auto uniform = convergence(ms("a+b+c"), 3);
    const Nat expected_weights[] = {5, 29, 130};
    const Nat expected_denoms[] = {1, 6, 27};
    for (std::size_t i = 0; i < 3; ++i) {
        ok = ok && uniform[i].weight == expected_weights[i] &&
             uniform[i].denominator == expected_denoms[i] &&
             uniform[i].weight == uniform_external_path(nat_to_u64(nat_pow(Nat(3), i + 1)));
    }
    ok = ok && uniform[0].ratio > uniform[1].ratio && uniform[1].ratio > uniform[2].ratio;
    const double floor = 3.0 * std::log2(3.0);
    for (const auto& p : uniform)
        ok = ok && p.ratio >= floor - 1e-9;
    if (!ok)
        detail = "; uniform a+b+c ratios off";

    bool dyadic_ok = true;
    for (const auto& p : convergence(ms("a+b+2c+4d"), 4))
        dyadic_ok = dyadic_ok && p.weight == 14 * p.denominator;
    if (!dyadic_ok)
        detail += "; dyadic ratio drifted from 14";

    report(10, ok && dyadic_ok,
           "convergence ratios: 5, 29/6, 130/27 for a+b+c (uniform-code cross-check), "
           "exactly 14 for a+b+2c+4d up to n = 4" +
               detail);
}

std::uint64_t container_bit_length(const std::vector<std::uint8_t>& packed) {
    std::uint64_t n = 0;
    for (int i = 0; i < 4; ++i)
        n |= static_cast<std::uint64_t>(packed[4 + i]) << (8 * i);
    const std::size_t offset = 8 + 9 * n;
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(packed[offset + i]) << (8 * i);
    return bits;
}

// 11. Codec: 100 seeded files up to 64 KiB round-trip byte-identically and
//     the payload bit length matches sum(count * depth) from the table.
void criterion_11() {
    SplitMix64 rng(2024);
    std::size_t bad = 0;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        std::vector<std::uint8_t> data;
        if (i == 1) {
            data.assign(1 + rng.below(4096), static_cast<std::uint8_t>(rng.below(256)));
        } else if (i > 1) {
            const unsigned alphabet = 1 + static_cast<unsigned>(rng.below(256));
            data.resize(rng.below(65536 + 1));
            for (auto& b : data)
                b = static_cast<std::uint8_t>(rng.below(alphabet));
        }
        const auto packed = compress(data);
        bool ok = decompress(packed) == data;
        if (ok && !data.empty()) {
            const CodeTable table = code_table(huffman_tree(byte_multiset(data)));
            Nat expected_bits = 0;
            for (const auto& e : table.entries())
                expected_bits += e.count * Nat(e.depth());
            ok = Nat(container_bit_length(packed)) == expected_bits;
        }
        if (!ok && bad++ == 0)
            first = "file " + std::to_string(i) + " (" + std::to_string(data.size()) + " bytes)";
    }
    report(11, bad == 0,
           "codec round trip and payload bit accounting on 100 seeded files (0 B - 64 KiB)" +
               (bad ? "; first: " + first : ""));
}

// 12. Path-length identity: weight equals the sum of inner-node norms on
//     1000 seeded random trees, exactly.
void criterion_12() {
    SplitMix64 rng(4096);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const Tree t = random_tree(rng, random_multiset(rng, 8, 16));
        if (weight(t) != internal_sum(t))
            ++bad;
    }
    report(12, bad == 0, "weight equals inner-norm sum on 1000 seeded random trees");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("acceptance: %d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
