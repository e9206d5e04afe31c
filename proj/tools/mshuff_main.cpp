// mshuff: multiset algebra, greedy weight-minimal trees over multisets,
// entropy law checking and a prefix-code file codec, from the terminal.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mshuff/codec.hpp"
#include "mshuff/freq.hpp"
#include "mshuff/oracle.hpp"
#include "mshuff/serialize.hpp"

namespace {

using namespace mshuff;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // law failure or codec corruption
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

struct FreqFlags {
    std::string counts_file;
    std::string inline_list;
    std::string bytes_file;

    void attach(CLI::App* cmd) {
        auto* counts =
            cmd->add_option("--counts", counts_file, "counts file, symbol<TAB>count per line");
        auto* inl = cmd->add_option("--inline", inline_list, "inline counts, e.g. a=1,b=2");
        auto* bytes = cmd->add_option("--bytes", bytes_file, "derive counts from a file's bytes");
        counts->excludes(inl)->excludes(bytes);
        inl->excludes(bytes);
    }

    Multiset resolve() const {
        if (!counts_file.empty())
            return resolve_frequency(FreqSource::counts_file, counts_file).multiset;
        if (!inline_list.empty())
            return resolve_frequency(FreqSource::inline_list, inline_list).multiset;
        if (!bytes_file.empty())
            return resolve_frequency(FreqSource::raw_bytes, bytes_file).multiset;
        throw DomainError("one of --counts/--inline/--bytes is required");
    }
};

std::vector<std::uint8_t> read_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_binary(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open file for writing: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out)
        throw Error("failed writing file: " + path);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open file for writing: " + path);
    out << text;
}

int cmd_entropy(const FreqFlags& freq, bool json) {
    const Multiset x = freq.resolve();
    const DyadicClass cls = classify_dyadic(x);
    if (json) {
        nlohmann::json out{{"multiset", x.render()},
                           {"norm", json_nat(x.norm())},
                           {"w", json_fixed9(entropy_w(x))},
                           {"class", to_json(cls)}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "X = " << x.render() << "\n";
    std::cout << "|X| = " << nat_str(x.norm()) << "\n";
    std::cout << "w = " << format_fixed9(entropy_w(x)) << "\n";
    std::cout << "class = " << cls.render() << "\n";
    return kExitOk;
}

int cmd_tree(const FreqFlags& freq, bool json, const std::string& dot_file) {
    const Multiset x = freq.resolve();
    const Tree tree = huffman_tree(x);
    const CodeTable table = code_table(tree);
    if (!dot_file.empty())
        write_text(dot_file, to_dot(tree));
    if (json) {
        nlohmann::json out{{"multiset", x.render()},
                           {"norm", json_nat(x.norm())},
                           {"weight", json_nat(weight(tree))},
                           {"tree", tree.render()},
                           {"table", to_json(table)}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "X = " << x.render() << "\n";
    std::cout << "|X| = " << nat_str(x.norm()) << "\n";
    std::cout << "W = " << nat_str(weight(tree)) << "\n";
    std::cout << "tree = " << tree.render() << "\n";
    std::cout << "symbol\tcount\tdepth\tcode\n";
    for (const auto& entry : table.entries()) {
        std::cout << entry.symbol.render() << "\t" << nat_str(entry.count) << "\t"
                  << entry.depth() << "\t" << entry.code.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_encode(const std::string& input, const std::string& output) {
    const auto data = read_binary(input);
    const auto packed = compress(data);
    write_binary(output, packed);
    std::cout << "encoded " << data.size() << " -> " << packed.size() << " bytes\n";
    return kExitOk;
}

int cmd_decode(const std::string& input, const std::string& output) {
    const auto packed = read_binary(input);
    const auto data = decompress(packed);
    write_binary(output, data);
    std::cout << "decoded " << packed.size() << " -> " << data.size() << " bytes\n";
    return kExitOk;
}

int cmd_check(std::vector<std::string> laws, bool all, std::uint64_t seed, bool json,
              std::size_t max_support) {
    if (all)
        laws = law_ids();
    if (laws.empty())
        throw DomainError("check needs --law or --all");
    for (const std::string& id : laws)
        if (std::find(law_ids().begin(), law_ids().end(), id) == law_ids().end())
            throw UnknownLawError("unknown law id: '" + id + "'");

    LawOptions options;
    options.seed = seed;
    if (max_support)
        options.family_max_support = max_support;

    bool ok = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const std::string& id : laws) {
        const LawReport report = check_law(id, options);
        ok = ok && report.passed();
        if (json) {
            reports.push_back(to_json(report));
            continue;
        }
        if (report.passed()) {
            std::cout << id << ": PASS (" << report.instances << " instances)\n";
        } else {
            std::cout << id << ": FAIL (" << report.failures.size() << " failures / "
                      << report.instances << " instances)\n";
            for (const LawFailure& f : report.failures)
                std::cout << "  " << f.input << " | expected " << f.expected << " | actual "
                          << f.actual << "\n";
        }
    }
    if (json)
        std::cout << reports.dump(2) << "\n";
    return ok ? kExitOk : kExitFailure;
}

int cmd_converge(const FreqFlags& freq, unsigned n_max, bool json, std::size_t max_product) {
    const Multiset x = freq.resolve();
    ConvergeOptions options;
    if (max_product)
        options.max_product_symbols = max_product;
    const auto points = convergence(x, n_max, options);
    if (json)
        std::cout << to_json(points).dump(2) << "\n";
    else
        std::cout << convergence_csv(points);
    return kExitOk;
}

int cmd_oracle(const FreqFlags& freq, bool json, const std::string& dot_file,
               std::size_t max_support) {
    const Multiset x = freq.resolve();
    EnumOptions options;
    if (max_support)
        options.max_support = max_support;
    const MinWeightResult result = min_weight(x, options);
    if (!dot_file.empty())
        write_text(dot_file, to_dot(result.tree));
    if (json) {
        nlohmann::json out{{"multiset", x.render()},
                           {"trees", result.tree_count},
                           {"min_weight", json_nat(result.weight)},
                           {"witness", result.tree.render()}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "X = " << x.render() << "\n";
    std::cout << "trees = " << result.tree_count << "\n";
    std::cout << "min W = " << nat_str(result.weight) << "\n";
    std::cout << "witness = " << result.tree.render() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Huffman trees over multisets: exact entropy, law checks, prefix codes"};
    app.require_subcommand(1);

    bool json = false;
    FreqFlags entropy_freq, tree_freq, converge_freq, oracle_freq;
    std::string tree_dot, oracle_dot;
    std::string encode_in, encode_out, decode_in, decode_out;
    std::vector<std::string> check_laws;
    bool check_all = false;
    std::uint64_t seed = 17;
    unsigned n_max = 4;
    std::size_t max_support = 0, max_product = 0;

    CLI::App* entropy = app.add_subcommand("entropy", "un-normalized entropy and dyadic class");
    entropy->add_flag("--json", json, "machine-readable output");
    entropy_freq.attach(entropy);

    CLI::App* tree = app.add_subcommand("tree", "greedy tree, weight and code table");
    tree->add_flag("--json", json, "machine-readable output");
    tree_freq.attach(tree);
    tree->add_option("--dot", tree_dot, "write Graphviz output to this file");

    CLI::App* encode = app.add_subcommand("encode", "compress a file into the HFC1 container");
    encode->add_option("input", encode_in, "file to compress")->required();
    encode->add_option("output", encode_out, "container to write")->required();

    CLI::App* decode = app.add_subcommand("decode", "expand an HFC1 container");
    decode->add_option("input", decode_in, "container to read")->required();
    decode->add_option("output", decode_out, "file to write")->required();

    CLI::App* check = app.add_subcommand("check", "run law checks");
    check->add_flag("--json", json, "machine-readable output");
    check->add_option("--law", check_laws, "law id (repeatable); --all runs the full set");
    check->add_flag("--all", check_all, "run every registered law");
    check->add_option("--seed", seed, "seed for sampled laws");
    check->add_option("--max-support", max_support, "family support override");

    CLI::App* converge = app.add_subcommand("converge", "W(X^n) / (n |X|^(n-1)) ratios");
    converge->add_flag("--json", json, "machine-readable output");
    converge_freq.attach(converge);
    converge->add_option("--n-max", n_max, "largest exponent (default 4)");
    converge->add_option("--max-product", max_product, "product-symbol guard override");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive minimum over monomial trees");
    oracle->add_flag("--json", json, "machine-readable output");
    oracle_freq.attach(oracle);
    oracle->add_option("--dot", oracle_dot, "write the witness as Graphviz");
    oracle->add_option("--max-support", max_support, "enumeration support cap override");

    try {
        app.parse(argc, argv);
        if (entropy->parsed())
            return cmd_entropy(entropy_freq, json);
        if (tree->parsed())
            return cmd_tree(tree_freq, json, tree_dot);
        if (encode->parsed())
            return cmd_encode(encode_in, encode_out);
        if (decode->parsed())
            return cmd_decode(decode_in, decode_out);
        if (check->parsed())
            return cmd_check(check_laws, check_all, seed, json, max_support);
        if (converge->parsed())
            return cmd_converge(converge_freq, n_max, json, max_product);
        if (oracle->parsed())
            return cmd_oracle(oracle_freq, json, oracle_dot, max_support);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const CodecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const UnknownLawError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
