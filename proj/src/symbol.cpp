#include "mshuff/symbol.hpp"

#include <cstdio>

namespace mshuff {

namespace {

bool legal_atom_byte(unsigned char c) {
    if (c <= 0x20 || c == 0x7f)
        return false; // control characters and whitespace
    switch (c) {
    case '(':
    case ')':
    case ',':
    case '*':
    case '+':
        return false; // reserved by the text formats
    default:
        return true;
    }
}

void validate_atom(std::string_view name) {
    if (name.empty())
        throw ParseError("empty atom");
    for (unsigned char c : std::string_view(name))
        if (!legal_atom_byte(c))
            throw ParseError("illegal character in atom '" + std::string(name) + "'");
}

} // namespace

Symbol Symbol::atom(std::string_view name) {
    validate_atom(name);
    return Symbol(std::string(name));
}

Symbol Symbol::tuple(const std::vector<std::string>& atoms) {
    if (atoms.size() < 2)
        throw ParseError("tuple needs at least two atoms");
    std::string key;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        validate_atom(atoms[i]);
        if (i)
            key += kSep;
        key += atoms[i];
    }
    return Symbol(std::move(key));
}

Symbol Symbol::parse(std::string_view text) {
    if (text.empty())
        throw ParseError("empty symbol");
    if (text.front() != '(')
        return atom(text);
    if (text.back() != ')')
        throw ParseError("unterminated tuple: '" + std::string(text) + "'");
    std::vector<std::string> atoms;
    std::string current;
    for (char c : text.substr(1, text.size() - 2)) {
        if (c == ',') {
            atoms.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    atoms.push_back(current);
    return tuple(atoms);
}

std::size_t Symbol::arity() const {
    std::size_t n = 1;
    for (char c : key_)
        if (c == kSep)
            ++n;
    return n;
}

std::vector<std::string> Symbol::atoms() const {
    std::vector<std::string> out;
    std::string current;
    for (char c : key_) {
        if (c == kSep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

std::string Symbol::render() const {
    if (is_atom())
        return key_;
    std::string out = "(";
    for (char c : key_)
        out += (c == kSep) ? ',' : c;
    out += ')';
    return out;
}

Symbol Symbol::concat(const Symbol& rhs) const {
    return Symbol(key_ + kSep + rhs.key_);
}

Symbol byte_atom(std::uint8_t value) {
    char buf[4];
    std::snprintf(buf, sizeof buf, "b%02x", value);
    return Symbol::atom(buf);
}

std::optional<std::uint8_t> byte_atom_value(const Symbol& s) {
    if (!s.is_atom())
        return std::nullopt;
    const std::string text = s.render();
    if (text.size() != 3 || text[0] != 'b')
        return std::nullopt;
    auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        return -1;
    };
    const int hi = hex(text[1]), lo = hex(text[2]);
    if (hi < 0 || lo < 0)
        return std::nullopt;
    return static_cast<std::uint8_t>(hi * 16 + lo);
}

} // namespace mshuff
