// Python bindings for the core operations: multiset algebra, decorated
// trees, the greedy construction, the codec and the law checkers. Counts are
// arbitrary-precision on both sides (Nat <-> python int).

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mshuff/codec.hpp"
#include "mshuff/freq.hpp"
#include "mshuff/oracle.hpp"
#include "mshuff/serialize.hpp"

namespace py = pybind11;
using namespace mshuff;

namespace {

py::int_ to_py(const Nat& n) {
    PyObject* obj = PyLong_FromString(nat_str(n).c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Nat to_nat(const py::int_& value) {
    return nat_parse(py::str(value).cast<std::string>());
}

Multiset multiset_from_dict(const py::dict& counts) {
    Multiset out;
    for (const auto& [key, value] : counts)
        out.add(Symbol::parse(py::str(key).cast<std::string>()),
                to_nat(py::reinterpret_borrow<py::int_>(value)));
    return out;
}

py::dict entries_dict(const Multiset& x) {
    py::dict out;
    for (const auto& [symbol, count] : x.entries())
        out[py::str(symbol.render())] = to_py(count);
    return out;
}

py::dict classify_dict(const DyadicClass& c) {
    py::dict out;
    switch (c.kind) {
    case DyadicKind::not_dyadic:
        out["kind"] = "NotDyadic";
        break;
    case DyadicKind::dyadic:
        out["kind"] = "Dyadic";
        break;
    case DyadicKind::scalar_dyadic:
        out["kind"] = "ScalarDyadic";
        out["k"] = to_py(c.scalar);
        out["base"] = c.base.render();
        break;
    }
    return out;
}

py::list table_list(const CodeTable& table) {
    py::list out;
    for (const auto& entry : table.entries()) {
        py::dict item;
        item["symbol"] = entry.symbol.render();
        item["count"] = to_py(entry.count);
        item["code"] = entry.code.to_string();
        item["depth"] = entry.depth();
        out.append(item);
    }
    return out;
}

py::dict report_dict(const LawReport& report) {
    py::dict out;
    out["law"] = report.law;
    out["seed"] = report.seed;
    out["instances"] = report.instances;
    out["passed"] = report.passed();
    py::list failures;
    for (const auto& f : report.failures) {
        py::dict item;
        item["input"] = f.input;
        item["expected"] = f.expected;
        item["actual"] = f.actual;
        failures.append(item);
    }
    out["failures"] = failures;
    return out;
}

py::bytes bytes_of(const std::vector<std::uint8_t>& data) {
    return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

std::vector<std::uint8_t> to_bytes(const py::bytes& data) {
    const std::string_view view = data.cast<std::string_view>();
    return {view.begin(), view.end()};
}

} // namespace

PYBIND11_MODULE(mshuff, m) {
    m.doc() = "exact multiset algebra, weight-minimal trees and prefix codes";

    py::register_exception<Error>(m, "MshuffError", PyExc_RuntimeError);

    py::class_<Multiset>(m, "Multiset")
        .def(py::init<>())
        .def(py::init(&multiset_from_dict), py::arg("counts"))
        .def_static("parse", [](const std::string& text) { return Multiset::parse(text); },
                    py::arg("text"))
        .def("norm", [](const Multiset& x) { return to_py(x.norm()); })
        .def("count",
             [](const Multiset& x, const std::string& symbol) {
                 return to_py(x.count(Symbol::parse(symbol)));
             })
        .def("entries", &entries_dict)
        .def("is_zero", &Multiset::is_zero)
        .def("support_size", &Multiset::support_size)
        .def("render", &Multiset::render)
        .def("entropy", &entropy_w)
        .def("classify", [](const Multiset& x) { return classify_dict(classify_dyadic(x)); })
        .def("intersect", &intersect)
        .def("disjoint", &disjoint)
        .def("scaled",
             [](const Multiset& x, const py::int_& k) { return scalar_mul(to_nat(k), x); })
        .def(py::self + py::self)
        .def(py::self * py::self)
        .def("__rmul__",
             [](const Multiset& x, const py::int_& k) { return scalar_mul(to_nat(k), x); })
        .def("__eq__", [](const Multiset& a, const Multiset& b) { return a == b; })
        .def("__str__", &Multiset::render)
        .def("__repr__", [](const Multiset& x) { return "Multiset('" + x.render() + "')"; });

    py::class_<Tree>(m, "Tree")
        .def_property_readonly("content", &Tree::content)
        .def_property_readonly("is_leaf", &Tree::is_leaf)
        .def_property_readonly("left", &Tree::left)
        .def_property_readonly("right", &Tree::right)
        .def("render", &Tree::render)
        .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
        .def("__str__", &Tree::render)
        .def("__repr__", [](const Tree& t) { return "Tree('" + t.render() + "')"; });

    m.def("leaf", &Tree::leaf, py::arg("content"));
    m.def("join", &Tree::join, py::arg("left"), py::arg("right"));
    m.def("canonical", &canonical);
    m.def("canonical_key", &canonical_key);
    m.def("leaves", [](const Tree& t) {
        py::list out;
        for (const auto& [content, depth] : leaves(t))
            out.append(py::make_tuple(content, depth));
        return out;
    });
    m.def("depth_of", &depth_of, py::arg("x"), py::arg("tree"));
    m.def("weight", [](const Tree& t) { return to_py(weight(t)); });
    m.def("internal_sum", [](const Tree& t) { return to_py(internal_sum(t)); });
    m.def("scalar_thicken",
          [](const py::int_& k, const Tree& t) { return scalar_thicken(to_nat(k), t); });
    m.def("multiset_thicken", &multiset_thicken, py::arg("x"), py::arg("tree"));
    m.def("attach", &attach, py::arg("host"), py::arg("sub"));
    m.def("tree_product", &tree_product);
    m.def("is_monomial_tree", &is_monomial_tree);
    m.def("to_dot", &to_dot);

    m.def("entropy_w", &entropy_w, py::arg("x"));
    m.def("entropy_w_seq", [](const std::vector<double>& values) {
        return entropy_w_seq(values);
    });

    m.def("huffman_tree", &huffman_tree, py::arg("x"));
    m.def("huffman_weight", [](const Multiset& x) { return to_py(huffman_weight(x)); });
    m.def(
        "all_huffman_trees",
        [](const Multiset& x, std::size_t max_support, std::size_t max_states) {
            AllTreesOptions options;
            options.max_support = max_support;
            options.max_states = max_states;
            return all_huffman_trees(x, options);
        },
        py::arg("x"), py::arg("max_support") = 8, py::arg("max_states") = 1000000);

    m.def("code_table", [](const Tree& t) { return table_list(code_table(t)); });
    m.def("compress", [](const py::bytes& data) { return bytes_of(compress(to_bytes(data))); });
    m.def("decompress",
          [](const py::bytes& data) { return bytes_of(decompress(to_bytes(data))); });

    m.def(
        "enumerate_monomial_trees",
        [](const Multiset& x, std::size_t max_support) {
            EnumOptions options;
            options.max_support = max_support;
            return enumerate_monomial_trees(x, options);
        },
        py::arg("x"), py::arg("max_support") = 7);
    m.def(
        "min_weight",
        [](const Multiset& x, std::size_t max_support) {
            EnumOptions options;
            options.max_support = max_support;
            const MinWeightResult result = min_weight(x, options);
            return py::make_tuple(to_py(result.weight), result.tree, result.tree_count);
        },
        py::arg("x"), py::arg("max_support") = 7);

    m.def("law_ids", [] { return law_ids(); });
    m.def(
        "check_law",
        [](const std::string& law, std::uint64_t seed, std::uint64_t samples,
           std::size_t family_max_support, std::uint64_t family_max_count) {
            LawOptions options;
            options.seed = seed;
            options.samples = samples;
            options.family_max_support = family_max_support;
            options.family_max_count = family_max_count;
            return report_dict(check_law(law, options));
        },
        py::arg("law"), py::arg("seed") = 17, py::arg("samples") = 0,
        py::arg("family_max_support") = 0, py::arg("family_max_count") = 0);

    m.def(
        "convergence",
        [](const Multiset& x, unsigned n_max, std::size_t max_product_symbols) {
            ConvergeOptions options;
            options.max_product_symbols = max_product_symbols;
            py::list out;
            for (const auto& p : convergence(x, n_max, options)) {
                py::dict item;
                item["n"] = p.n;
                item["weight"] = to_py(p.weight);
                item["denominator"] = to_py(p.denominator);
                item["ratio"] = p.ratio;
                out.append(item);
            }
            return out;
        },
        py::arg("x"), py::arg("n_max"), py::arg("max_product_symbols") = 100000);

    m.def("byte_multiset", [](const py::bytes& data) { return byte_multiset(to_bytes(data)); });
}
