#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "mshuff/freq.hpp"

using namespace mshuff;

namespace {

Multiset ms(std::string_view text) {
    return Multiset::parse(text);
}

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(std::string_view contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("mshuff-freq-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_SUITE("freq") {

TEST_CASE("counts text") {
    const Multiset x = parse_counts_text("# header comment\n"
                                         "a\t1\n"
                                         "b\t1\n"
                                         "\n"
                                         "c\t1\n"
                                         "c\t1\n"
                                         "(a,b)\t3\n");
    Multiset expected = ms("a+b+2c");
    expected.add(Symbol::tuple({"a", "b"}), 3);
    CHECK(x == expected);

    CHECK_THROWS_AS(parse_counts_text("a 1\n"), ParseError);  // no tab
    CHECK_THROWS_AS(parse_counts_text("a\tone\n"), ParseError);
    CHECK_THROWS_AS(parse_counts_text("\t3\n"), ParseError);  // empty symbol
}

TEST_CASE("inline counts") {
    CHECK(parse_inline_counts("a=1,b=2") == ms("a+2b"));
    CHECK(parse_inline_counts("a=1, a=2") == ms("3a"));
    Multiset with_tuple = ms("a");
    with_tuple.add(Symbol::tuple({"a", "b"}), 3);
    CHECK(parse_inline_counts("(a,b)=3,a=1") == with_tuple);
    CHECK_THROWS_AS(parse_inline_counts("a"), ParseError);
    CHECK_THROWS_AS(parse_inline_counts("a=1,,b=2"), ParseError);
    CHECK_THROWS_AS(parse_inline_counts(""), ParseError);
}

TEST_CASE("byte histogram") {
    const std::vector<std::uint8_t> data{'a', 'a', 'b', 0x00, 0xff};
    const Multiset x = byte_multiset(data);
    CHECK(x.count(Symbol::atom("b61")) == 2);
    CHECK(x.count(Symbol::atom("b62")) == 1);
    CHECK(x.count(Symbol::atom("b00")) == 1);
    CHECK(x.count(Symbol::atom("bff")) == 1);
    CHECK(x.norm() == 5);
    CHECK(byte_multiset({}).is_zero());
    CHECK(byte_atom_value(Symbol::atom("b61")) == 'a');
    CHECK_FALSE(byte_atom_value(Symbol::atom("q")).has_value());
    CHECK_FALSE(byte_atom_value(Symbol::atom("bzz")).has_value());
}

TEST_CASE("resolve_frequency") {
    TempFile counts("x\t2\ny\t1\n");
    const FrequencySpec from_counts = resolve_frequency(FreqSource::counts_file,
                                                        counts.path.string());
    CHECK(from_counts.source == FreqSource::counts_file);
    CHECK(from_counts.multiset == ms("2x+y"));

    const FrequencySpec from_inline = resolve_frequency(FreqSource::inline_list, "a=4");
    CHECK(from_inline.multiset == ms("4a"));

    TempFile raw("aba");
    const FrequencySpec from_bytes = resolve_frequency(FreqSource::raw_bytes,
                                                       raw.path.string());
    CHECK(from_bytes.multiset.count(Symbol::atom("b61")) == 2);

    TempFile empty("");
    CHECK_THROWS_AS(resolve_frequency(FreqSource::counts_file, empty.path.string()),
                    DomainError);
    CHECK_THROWS_AS(resolve_frequency(FreqSource::raw_bytes, empty.path.string()),
                    DomainError);
    CHECK_THROWS_AS(resolve_frequency(FreqSource::counts_file, "/no/such/file"), Error);
}

} // TEST_SUITE
