#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "mshuff/multiset.hpp"

namespace mshuff {

enum class FreqSource {
    counts_file, // "symbol<TAB>count" lines
    inline_list, // "a=1,b=2"
    raw_bytes,   // histogram of a byte buffer
};

struct FrequencySpec {
    FreqSource source = FreqSource::inline_list;
    Multiset multiset; // always non-zero once resolved
};

// One "symbol<TAB>count" per line, UTF-8, '#' starts a comment line, blank
// lines ignored, duplicate symbols summed. Symbols use the rendered form
// ("a" or "(a,b)"). ParseError on malformed lines.
Multiset parse_counts_text(std::string_view text);

// "a=1,b=2,(a,b)=3" - commas inside parentheses belong to tuple symbols.
Multiset parse_inline_counts(std::string_view text);

// Byte histogram; byte 0x3f with count n becomes n * b3f.
Multiset byte_multiset(std::span<const std::uint8_t> data);

// Loads and resolves one of the three sources (file paths for counts_file
// and raw_bytes, the literal list for inline_list). DomainError if the
// resolved multiset is zero; Error if the file cannot be read.
FrequencySpec resolve_frequency(FreqSource source, std::string_view file_or_text);

} // namespace mshuff
