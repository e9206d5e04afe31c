#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "mshuff/errors.hpp"

namespace mshuff {

// Exact non-negative integer. Counts, norms and weights never round:
// products of multisets inflate counts well past 64 bits once the
// convergence guard is raised, so everything count-like is a Nat.
using Nat = boost::multiprecision::cpp_int;

inline bool is_power_of_two(const Nat& n) {
    return n > 0 && boost::multiprecision::lsb(n) == boost::multiprecision::msb(n);
}

// Index of the lowest set bit; n must be >= 1.
inline std::size_t trailing_zero_bits(const Nat& n) {
    if (n <= 0)
        throw DomainError("trailing_zero_bits: argument must be >= 1");
    return boost::multiprecision::lsb(n);
}

// Largest odd divisor, i.e. n with all factors of two removed.
inline Nat odd_part(const Nat& n) {
    return n >> trailing_zero_bits(n);
}

inline Nat nat_pow(const Nat& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline double nat_to_double(const Nat& n) {
    return n.convert_to<double>();
}

// log2 of an arbitrarily large positive integer. Values beyond the double
// range are handled via the top 64 bits plus the discarded bit count.
inline double nat_log2(const Nat& n) {
    if (n <= 0)
        throw DomainError("nat_log2: argument must be >= 1");
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    if (bits <= 63)
        return std::log2(n.convert_to<double>());
    const std::size_t shift = bits - 63;
    const auto top = (n >> shift).convert_to<std::uint64_t>();
    return static_cast<double>(shift) + std::log2(static_cast<double>(top));
}

inline std::uint64_t nat_to_u64(const Nat& n) {
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
        throw TooLargeError("value does not fit in 64 bits: " + n.str());
    return n.convert_to<std::uint64_t>();
}

inline std::string nat_str(const Nat& n) {
    return n.str();
}

inline Nat nat_parse(std::string_view text) {
    if (text.empty())
        throw ParseError("empty number");
    for (char c : text)
        if (c < '0' || c > '9')
            throw ParseError("invalid natural number: '" + std::string(text) + "'");
    return Nat(std::string(text));
}

} // namespace mshuff
