#include "mshuff/freq.hpp"

#include <fstream>
#include <sstream>

namespace mshuff {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Multiset parse_counts_text(std::string_view text) {
    Multiset out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = strip(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw ParseError("counts line " + std::to_string(line_no) +
                             ": expected 'symbol<TAB>count'");
        const Symbol symbol = Symbol::parse(strip(line.substr(0, tab)));
        const Nat count = nat_parse(strip(line.substr(tab + 1)));
        out.add(symbol, count);
    }
    return out;
}

Multiset parse_inline_counts(std::string_view text) {
    Multiset out;
    std::size_t start = 0;
    int depth = 0;
    auto take_item = [&](std::string_view item) {
        item = strip(item);
        if (item.empty())
            throw ParseError("empty item in inline counts");
        const std::size_t eq = item.rfind('=');
        if (eq == std::string_view::npos)
            throw ParseError("inline item '" + std::string(item) + "' needs symbol=count");
        const Symbol symbol = Symbol::parse(strip(item.substr(0, eq)));
        const Nat count = nat_parse(strip(item.substr(eq + 1)));
        out.add(symbol, count);
    };
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            take_item(text.substr(start, i - start));
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        }
    }
    return out;
}

Multiset byte_multiset(std::span<const std::uint8_t> data) {
    std::uint64_t counts[256] = {};
    for (std::uint8_t byte : data)
        ++counts[byte];
    Multiset out;
    for (int b = 0; b < 256; ++b)
        if (counts[b])
            out.add(byte_atom(static_cast<std::uint8_t>(b)), Nat(counts[b]));
    return out;
}

namespace {

std::string read_file(std::string_view path) {
    std::ifstream in{std::string(path), std::ios::binary};
    if (!in)
        throw Error("cannot open file: " + std::string(path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

} // namespace

FrequencySpec resolve_frequency(FreqSource source, std::string_view file_or_text) {
    FrequencySpec spec;
    spec.source = source;
    switch (source) {
    case FreqSource::counts_file:
        spec.multiset = parse_counts_text(read_file(file_or_text));
        break;
    case FreqSource::inline_list:
        spec.multiset = parse_inline_counts(file_or_text);
        break;
    case FreqSource::raw_bytes: {
        const std::string data = read_file(file_or_text);
        spec.multiset = byte_multiset(
            std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
        break;
    }
    }
    if (spec.multiset.is_zero())
        throw DomainError("resolved frequency multiset is zero");
    return spec;
}

} // namespace mshuff
