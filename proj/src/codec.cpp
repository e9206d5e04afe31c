#include "mshuff/codec.hpp"

#include <algorithm>
#include <array>

#include "mshuff/freq.hpp"

namespace mshuff {

bool Bits::get(std::uint64_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
}

void Bits::push_back(bool bit) {
    if ((size_ & 7) == 0)
        bytes_.push_back(0);
    if (bit)
        bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (size_ & 7)));
    ++size_;
}

void Bits::append(const Bits& other) {
    for (std::uint64_t i = 0; i < other.size_; ++i)
        push_back(other.get(i));
}

std::string Bits::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i)
        out += get(i) ? '1' : '0';
    return out;
}

Bits Bits::from_string(std::string_view text) {
    Bits out;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError("bitstring may only contain 0 and 1");
        out.push_back(c == '1');
    }
    return out;
}

CodeTable::CodeTable(std::vector<CodeEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const CodeEntry& a, const CodeEntry& b) { return a.symbol < b.symbol; });
}

const CodeEntry* CodeTable::find(const Symbol& s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const CodeEntry& e, const Symbol& sym) { return e.symbol < sym; });
    if (it == entries_.end() || !(it->symbol == s))
        return nullptr;
    return &*it;
}

bool CodeTable::kraft_equality() const {
    // sum 2^-len == 1, exactly: sum 2^(L - len) == 2^L for L = max len.
    std::uint64_t max_len = 0;
    for (const auto& e : entries_)
        max_len = std::max(max_len, e.depth());
    Nat total = 0;
    for (const auto& e : entries_)
        total += Nat(1) << (max_len - e.depth());
    return total == (Nat(1) << max_len);
}

namespace {

void collect_codes(const Tree& t, Bits path, std::vector<CodeEntry>& out) {
    if (t.is_leaf()) {
        const auto& entries = t.content().entries();
        if (entries.size() != 1)
            throw NotMonomialError("code_table needs a monomial tree; leaf " +
                                   t.content().render());
        out.push_back({entries.begin()->first, entries.begin()->second, std::move(path)});
        return;
    }
    Bits left_path = path;
    left_path.push_back(false);
    collect_codes(t.left(), std::move(left_path), out);
    path.push_back(true);
    collect_codes(t.right(), std::move(path), out);
}

} // namespace

CodeTable code_table(const Tree& t) {
    std::vector<CodeEntry> entries;
    collect_codes(canonical(t), Bits(), entries);
    return CodeTable(std::move(entries));
}

Bits encode(std::span<const std::uint8_t> data, const CodeTable& table) {
    // Dense per-byte cache; the symbols of a codec table are byte atoms.
    std::array<const CodeEntry*, 256> by_byte{};
    for (const auto& entry : table.entries())
        if (auto value = byte_atom_value(entry.symbol))
            by_byte[*value] = &entry;
    Bits out;
    for (std::uint8_t byte : data) {
        const CodeEntry* entry = by_byte[byte];
        if (!entry)
            throw UnknownSymbolError("byte " + byte_atom(byte).render() + " not in code table");
        out.append(entry->code);
    }
    return out;
}

std::vector<std::uint8_t> decode(const Bits& bits, const Tree& t,
                                 std::optional<std::uint64_t> expected_symbols) {
    const Tree root = canonical(t);
    auto leaf_byte = [](const Tree& leaf) -> std::uint8_t {
        const auto& entries = leaf.content().entries();
        if (entries.size() != 1)
            throw CodecError("decode tree has a non-monomial leaf");
        auto value = byte_atom_value(entries.begin()->first);
        if (!value)
            throw CodecError("decode tree leaf is not a byte atom: " +
                             entries.begin()->first.render());
        return *value;
    };

    std::vector<std::uint8_t> out;
    if (root.is_leaf()) {
        // The codeword is empty; only an expected count gives a length.
        if (bits.size() != 0)
            throw InvalidCodewordError("single-leaf tree cannot consume bits");
        if (expected_symbols)
            out.assign(*expected_symbols, leaf_byte(root));
        return out;
    }

    std::uint64_t pos = 0;
    while (true) {
        if (expected_symbols && out.size() == *expected_symbols) {
            if (pos != bits.size())
                throw InvalidCodewordError("trailing bits after the final codeword");
            break;
        }
        if (pos == bits.size()) {
            if (expected_symbols)
                throw TruncatedStreamError("bit stream ended before all symbols were decoded");
            break;
        }
        const Tree* node = &root;
        while (!node->is_leaf()) {
            if (pos == bits.size())
                throw TruncatedStreamError("bit stream ends mid-codeword");
            node = bits.get(pos++) ? &node->right() : &node->left();
        }
        out.push_back(leaf_byte(*node));
    }
    return out;
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

struct Reader {
    std::span<const std::uint8_t> data;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos + 1 > data.size())
            throw TruncatedStreamError("container ends inside the header");
        return data[pos++];
    }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(u8()) << (8 * i);
        return v;
    }
};

} // namespace

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data) {
    std::uint64_t counts[256] = {};
    for (std::uint8_t byte : data)
        ++counts[byte];

    std::vector<std::uint8_t> out;
    out.insert(out.end(), std::begin(kContainerMagic), std::end(kContainerMagic));
    std::uint32_t distinct = 0;
    for (int b = 0; b < 256; ++b)
        if (counts[b])
            ++distinct;
    put_u32(out, distinct);
    for (int b = 0; b < 256; ++b) {
        if (!counts[b])
            continue;
        out.push_back(static_cast<std::uint8_t>(b));
        put_u64(out, counts[b]);
    }
    if (data.empty()) {
        put_u64(out, 0);
        return out;
    }

    const Multiset freq = byte_multiset(data);
    const Bits payload = encode(data, code_table(huffman_tree(freq)));
    put_u64(out, payload.size());
    out.insert(out.end(), payload.bytes().begin(), payload.bytes().end());
    return out;
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> container) {
    Reader in{container};
    for (char magic : kContainerMagic)
        if (in.u8() != static_cast<std::uint8_t>(magic))
            throw CodecError("bad container magic");

    const std::uint32_t distinct = in.u32();
    if (distinct > 256)
        throw CodecError("container claims more than 256 distinct bytes");
    Multiset freq;
    std::uint64_t total_symbols = 0;
    int previous_byte = -1;
    for (std::uint32_t i = 0; i < distinct; ++i) {
        const std::uint8_t byte = in.u8();
        const std::uint64_t count = in.u64();
        if (static_cast<int>(byte) <= previous_byte)
            throw CodecError("container byte table is not strictly ascending");
        if (count == 0)
            throw CodecError("container byte table has a zero count");
        previous_byte = byte;
        freq.add(byte_atom(byte), Nat(count));
        total_symbols += count;
    }

    const std::uint64_t bit_length = in.u64();
    const std::uint64_t payload_bytes = (bit_length + 7) / 8;
    if (container.size() - in.pos < payload_bytes)
        throw TruncatedStreamError("container payload is shorter than its bit length");
    if (container.size() - in.pos > payload_bytes)
        throw CodecError("trailing bytes after the payload");

    if (distinct == 0) {
        if (bit_length != 0)
            throw CodecError("empty byte table with a non-empty payload");
        return {};
    }

    Bits bits;
    for (std::uint64_t i = 0; i < bit_length; ++i) {
        const std::uint8_t byte = container[in.pos + (i >> 3)];
        bits.push_back((byte >> (7 - (i & 7))) & 1);
    }
    if (payload_bytes > 0) {
        const std::uint8_t last = container[in.pos + payload_bytes - 1];
        const unsigned used = bit_length & 7 ? static_cast<unsigned>(bit_length & 7) : 8;
        if (static_cast<std::uint8_t>(last << used) != 0)
            throw InvalidCodewordError("non-zero padding bits");
    }

    const Tree tree = huffman_tree(freq);
    const CodeTable table = code_table(tree);
    Nat expected_bits = 0;
    for (const auto& entry : table.entries())
        expected_bits += entry.count * Nat(entry.depth());
    if (expected_bits != Nat(bit_length))
        throw CodecError("payload bit length does not match the byte counts");

    return decode(bits, tree, total_symbols);
}

} // namespace mshuff
