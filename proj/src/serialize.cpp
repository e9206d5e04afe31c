#include "mshuff/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace mshuff {

std::string format_fixed9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", value);
    return buf;
}

nlohmann::json json_fixed9(double value) {
    return std::stod(format_fixed9(value));
}

nlohmann::json json_nat(const Nat& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return n.convert_to<std::uint64_t>();
    return nat_str(n);
}

nlohmann::json to_json(const DyadicClass& c) {
    switch (c.kind) {
    case DyadicKind::not_dyadic:
        return {{"kind", "NotDyadic"}};
    case DyadicKind::dyadic:
        return {{"kind", "Dyadic"}};
    case DyadicKind::scalar_dyadic:
        return {{"kind", "ScalarDyadic"}, {"k", json_nat(c.scalar)}, {"base", c.base.render()}};
    }
    return {{"kind", "NotDyadic"}};
}

nlohmann::json to_json(const CodeTable& table) {
    // Export order is the rendered-symbol order (it differs from the
    // componentwise symbol order once tuples are involved).
    std::vector<const CodeEntry*> sorted;
    for (const auto& entry : table.entries())
        sorted.push_back(&entry);
    std::sort(sorted.begin(), sorted.end(), [](const CodeEntry* a, const CodeEntry* b) {
        return a->symbol.render() < b->symbol.render();
    });
    nlohmann::json out = nlohmann::json::array();
    for (const CodeEntry* entry : sorted) {
        out.push_back({{"symbol", entry->symbol.render()},
                       {"count", json_nat(entry->count)},
                       {"code", entry->code.to_string()},
                       {"depth", entry->depth()}});
    }
    return out;
}

nlohmann::json to_json(const LawReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"law", report.law},
            {"seed", report.seed},
            {"instances", report.instances},
            {"passed", report.passed()},
            {"failures", std::move(failures)}};
}

nlohmann::json to_json(const std::vector<ConvergencePoint>& points) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : points) {
        out.push_back({{"n", p.n},
                       {"weight", json_nat(p.weight)},
                       {"denominator", json_nat(p.denominator)},
                       {"ratio", json_fixed9(p.ratio)}});
    }
    return out;
}

std::string convergence_csv(const std::vector<ConvergencePoint>& points) {
    std::string out = "n,weight,denominator,ratio\n";
    for (const auto& p : points) {
        out += std::to_string(p.n) + "," + nat_str(p.weight) + "," + nat_str(p.denominator) +
               "," + format_fixed9(p.ratio) + "\n";
    }
    return out;
}

} // namespace mshuff
