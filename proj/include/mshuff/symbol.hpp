#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mshuff/errors.hpp"

namespace mshuff {

// A symbol is an atomic token or a flat tuple of atoms. Tuples arise from
// multiset products (pairs, triples, ...) and never nest: concatenating two
// symbols concatenates their atom lists.
//
// Atoms are non-empty and may not contain whitespace, control characters or
// the characters ( ) , * + which are reserved by the text formats. Internally
// a symbol is its atoms joined by a 0x1f separator; because the separator
// sorts below every legal atom byte, plain string comparison of the joined
// form is exactly componentwise lexicographic order on the atom lists.
class Symbol {
public:
    static Symbol atom(std::string_view name);
    static Symbol tuple(const std::vector<std::string>& atoms);

    // Parses the rendered form: "a" or "(a,b,c)".
    static Symbol parse(std::string_view text);

    bool is_atom() const { return key_.find(kSep) == std::string::npos; }
    bool is_tuple() const { return !is_atom(); }
    std::size_t arity() const;
    std::vector<std::string> atoms() const;

    // "a" for atoms, "(a,b)" for tuples.
    std::string render() const;

    // Tuple concatenation: (a,b) * c = (a,b,c).
    Symbol concat(const Symbol& rhs) const;

    auto operator<=>(const Symbol&) const = default;

private:
    static constexpr char kSep = '\x1f';
    explicit Symbol(std::string key) : key_(std::move(key)) {}
    std::string key_;
};

// Naming convention for byte alphabets: byte 0x3f is the atom "b3f".
Symbol byte_atom(std::uint8_t value);

// Inverse of byte_atom; nullopt when the symbol is not of that shape.
std::optional<std::uint8_t> byte_atom_value(const Symbol& s);

} // namespace mshuff
