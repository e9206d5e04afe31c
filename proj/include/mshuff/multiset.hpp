#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "mshuff/nat.hpp"
#include "mshuff/symbol.hpp"

namespace mshuff {

// A finite formal sum of symbols with natural-number coefficients. The zero
// multiset is the empty map; stored counts are always >= 1. Multisets are
// immutable values once built (add() is the builder hook) and safe to share
// across threads.
class Multiset {
public:
    Multiset() = default;
    Multiset(std::initializer_list<std::pair<Symbol, Nat>> entries);

    static Multiset monomial(const Symbol& s, const Nat& count);

    // Parses the rendered form, e.g. "a+b+2c" or "2(a,b)+c". "0" is the zero
    // multiset. A term's leading digit run is its coefficient, so atoms that
    // begin with a digit cannot round-trip through this helper.
    static Multiset parse(std::string_view text);

    // Accumulates count onto s; adding zero is a no-op.
    void add(const Symbol& s, const Nat& count);

    const std::map<Symbol, Nat>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    bool is_monomial() const { return entries_.size() == 1; }
    Nat count(const Symbol& s) const;
    Nat norm() const;

    // Terms sorted by symbol, coefficient omitted when 1, joined by '+':
    // "a+b+2c". The zero multiset renders as "0". Bit-stable.
    std::string render() const;

    bool operator==(const Multiset&) const = default;

private:
    std::map<Symbol, Nat> entries_;
};

Multiset add(const Multiset& x, const Multiset& y);
Multiset scalar_mul(const Nat& k, const Multiset& x);
Multiset product(const Multiset& x, const Multiset& y);
Multiset intersect(const Multiset& x, const Multiset& y);
bool disjoint(const Multiset& x, const Multiset& y);

inline Multiset operator+(const Multiset& x, const Multiset& y) { return add(x, y); }
inline Multiset operator*(const Multiset& x, const Multiset& y) { return product(x, y); }
inline Multiset operator*(const Nat& k, const Multiset& x) { return scalar_mul(k, x); }

// Un-normalized entropy in bits, sign fixed so the value is non-negative:
//   w(X) = |X| log2 |X| - sum_a n_a log2 n_a
// with 0 log 0 = 0. Computed as sum_a n_a (log2 |X| - log2 n_a), a sum of
// non-negative terms, so the result never rounds below zero.
double entropy_w(const Multiset& x);

// Same functional on a raw sequence of non-negative reals. Throws
// DomainError on negative input.
double entropy_w_seq(std::span<const double> values);

enum class DyadicKind {
    not_dyadic,
    dyadic,        // every count a power of two and |X| a power of two
    scalar_dyadic, // k * D with D dyadic, k >= 2 minimal
};

struct DyadicClass {
    DyadicKind kind = DyadicKind::not_dyadic;
    Nat scalar;    // k for scalar_dyadic, 1 for dyadic, 0 otherwise
    Multiset base; // D; for dyadic this is X itself

    bool is_scalar_multiple_of_dyadic() const { return kind != DyadicKind::not_dyadic; }
    std::string render() const;
};

// Decision procedure: all counts must share one odd part m, and |X|/m must be
// a power of two; then k = m and D = X/m. Validated against a brute-force
// divisor search in the tests. Throws DomainError on the zero multiset.
DyadicClass classify_dyadic(const Multiset& x);

} // namespace mshuff
