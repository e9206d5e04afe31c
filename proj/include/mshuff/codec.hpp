#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mshuff/huffman.hpp"
#include "mshuff/tree.hpp"

namespace mshuff {

// A growable bit sequence, packed MSB-first inside each byte.
class Bits {
public:
    Bits() = default;

    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool get(std::uint64_t i) const;
    void push_back(bool bit);
    void append(const Bits& other);

    // Packed form; unused bits of the final byte are zero.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    // "0101"; empty bits render as "".
    std::string to_string() const;
    static Bits from_string(std::string_view text); // ParseError on non-0/1

    bool operator==(const Bits&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t size_ = 0;
};

struct CodeEntry {
    Symbol symbol;
    Nat count;  // multiplicity in the source multiset
    Bits code;  // root-to-leaf path in canonical child order, first child = 0

    std::uint64_t depth() const { return code.size(); }
};

// Prefix-free code read off a monomial tree; entries sorted by symbol.
// Kraft equality (sum of 2^-len = 1) holds because the trees are full.
class CodeTable {
public:
    explicit CodeTable(std::vector<CodeEntry> entries);

    const std::vector<CodeEntry>& entries() const { return entries_; }
    const CodeEntry* find(const Symbol& s) const;

    // Exact check that sum_i 2^{-len_i} == 1.
    bool kraft_equality() const;

private:
    std::vector<CodeEntry> entries_; // sorted by symbol
};

// Reads the code table off a monomial tree. NotMonomialError otherwise.
CodeTable code_table(const Tree& t);

// Symbol-by-symbol coding of byte data; symbols are byte atoms (b<hex>).
// encode throws UnknownSymbolError for bytes missing from the table.
Bits encode(std::span<const std::uint8_t> data, const CodeTable& table);

// Walks the tree bit-by-bit. When expected_symbols is given, exactly that
// many symbols are decoded and leftover bits are an InvalidCodewordError;
// otherwise decoding stops when the bits run out. Ending mid-codeword is a
// TruncatedStreamError. With a single-leaf tree the codeword is empty, so
// expected_symbols is what determines the output length.
std::vector<std::uint8_t> decode(const Bits& bits, const Tree& t,
                                 std::optional<std::uint64_t> expected_symbols = {});

// Self-describing container:
//   magic "HFC1"
//   u32 LE  number of table entries N
//   N x { u8 byte value, u64 LE count }, sorted by byte value
//   u64 LE  payload bit length
//   payload bits, MSB-first, final byte zero-padded
// The decoder rebuilds the same deterministic tree from the counts, so the
// format round-trips bit-exactly.
std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> container);

inline constexpr char kContainerMagic[4] = {'H', 'F', 'C', '1'};

} // namespace mshuff
