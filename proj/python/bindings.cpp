#include "prook/algebra.hpp"
#include "prook/characters.hpp"
#include "prook/diagram.hpp"
#include "prook/io.hpp"
#include "prook/matrix.hpp"
#include "prook/representation.hpp"
#include "prook/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace prook;

namespace {

std::vector<int> mask_to_list(Mask m) { return elements(m); }

std::vector<std::vector<int>> int_matrix(const RationalMatrix& m) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        auto& row = out[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(static_cast<int>(numerator(m.at(r, c))));
    }
    return out;
}

std::vector<std::vector<std::string>> string_matrix(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> out(
        static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        auto& row = out[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(rational_to_string(m.at(r, c)));
    }
    return out;
}

RationalMatrix matrix_from_strings(
    const std::vector<std::vector<std::string>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.front().size()) : 0;
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rational_from_string(
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

std::vector<std::pair<PlanarDiagram, std::string>> term_list(
    const AlgebraElement& a) {
    std::vector<std::pair<PlanarDiagram, std::string>> out;
    out.reserve(a.terms().size());
    for (const auto& [d, c] : a.terms())
        out.emplace_back(d, rational_to_string(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "planar rook monoid and diagram algebra (exact arithmetic)";

    py::class_<PlanarDiagram>(m, "Diagram")
        .def(py::init([](int n, const std::vector<int>& top,
                         const std::vector<int>& bottom) {
                 return PlanarDiagram::from_sets(n, mask_of(top),
                                                 mask_of(bottom));
             }),
             py::arg("n"), py::arg("top"), py::arg("bottom"))
        .def_property_readonly("n", &PlanarDiagram::size)
        .def_property_readonly(
            "top", [](const PlanarDiagram& d) { return mask_to_list(d.top()); })
        .def_property_readonly(
            "bottom",
            [](const PlanarDiagram& d) { return mask_to_list(d.bottom()); })
        .def_property_readonly("rank", &PlanarDiagram::rank)
        .def_property_readonly("vertical_edges",
                               [](const PlanarDiagram& d) {
                                   return vertical_edge_count(d);
                               })
        .def("edges", [](const PlanarDiagram& d) { return edges(d); })
        .def(
            "apply",
            [](const PlanarDiagram& d, const std::vector<int>& s)
                -> std::optional<std::vector<int>> {
                auto image = apply(d, mask_of(s));
                if (!image)
                    return std::nullopt;
                return mask_to_list(*image);
            },
            py::arg("subset"),
            "image of a subset, or None when the action is undefined")
        .def("image_of",
             [](const PlanarDiagram& d, int v) { return image_of(d, v); })
        .def("embed", [](const PlanarDiagram& d) { return embed(d); })
        .def("to_matrix",
             [](const PlanarDiagram& d) {
                 const RookMatrix rm = to_matrix(d);
                 std::vector<std::vector<int>> out(
                     static_cast<std::size_t>(rm.size()));
                 for (int i = 1; i <= rm.size(); ++i)
                     for (int j = 1; j <= rm.size(); ++j)
                         out[static_cast<std::size_t>(i - 1)].push_back(
                             rm.at(i, j));
                 return out;
             })
        .def("compact",
             [](const PlanarDiagram& d) { return diagram_to_compact(d); })
        .def("to_json",
             [](const PlanarDiagram& d) { return diagram_to_json(d).dump(); })
        .def("__mul__", &compose)
        .def("__eq__",
             [](const PlanarDiagram& a, const PlanarDiagram& b) {
                 return a == b;
             })
        .def("__lt__",
             [](const PlanarDiagram& a, const PlanarDiagram& b) {
                 return a < b;
             })
        .def("__hash__",
             [](const PlanarDiagram& d) {
                 return py::hash(py::make_tuple(d.size(), d.top(), d.bottom()));
             })
        .def("__repr__", [](const PlanarDiagram& d) {
            return "Diagram('" + diagram_to_compact(d) + "')";
        });

    py::class_<AlgebraElement>(m, "Element")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &AlgebraElement::size)
        .def("is_zero", &AlgebraElement::is_zero)
        .def("terms", &term_list)
        .def("coeff",
             [](const AlgebraElement& a, const PlanarDiagram& d) {
                 return rational_to_string(a.coeff(d));
             })
        .def("add_term",
             [](AlgebraElement& a, const PlanarDiagram& d,
                const std::string& c) { a.add_term(d, rational_from_string(c)); },
             py::arg("diagram"), py::arg("coeff") = "1")
        .def("scale",
             [](const AlgebraElement& a, const std::string& c) {
                 return rational_from_string(c) * a;
             })
        .def("x_coords", [](const AlgebraElement& a) {
            std::vector<std::pair<PlanarDiagram, std::string>> out;
            for (const auto& [d, c] : to_x_coords(a))
                out.emplace_back(d, rational_to_string(c));
            return out;
        })
        .def("to_json",
             [](const AlgebraElement& a) { return element_to_json(a).dump(); })
        .def("__add__",
             [](const AlgebraElement& a, const AlgebraElement& b) {
                 return a + b;
             })
        .def("__sub__",
             [](const AlgebraElement& a, const AlgebraElement& b) {
                 return a - b;
             })
        .def("__mul__",
             [](const AlgebraElement& a, const AlgebraElement& b) {
                 return a * b;
             })
        .def("__eq__",
             [](const AlgebraElement& a, const AlgebraElement& b) {
                 return a == b;
             })
        .def("__repr__", [](const AlgebraElement& a) {
            return "Element(" + element_to_json(a).dump() + ")";
        });

    m.def("identity", &PlanarDiagram::identity, py::arg("n"));
    m.def("edgeless", &PlanarDiagram::edgeless, py::arg("n"));
    m.def("pi", &pi, py::arg("n"), py::arg("l"),
          "rank-l idempotent matching {1..l} identically");
    m.def("p_drop", &p_drop, py::arg("n"), py::arg("i"),
          "identity with the edge at vertex i removed");
    m.def("compose", &compose, py::arg("d1"), py::arg("d2"));
    m.def("diagram_count", &diagram_count, py::arg("n"));
    m.def("all_diagrams", &all_diagrams, py::arg("n"));
    m.def("parse_diagram",
          [](const std::string& text) { return parse_diagram(text); },
          "decode a compact string or JSON object");
    m.def("diagram_from_json",
          [](const std::string& text) {
              return diagram_from_json(Json::parse(text));
          });
    m.def("element_from_json", [](const std::string& text) {
        return element_from_json(Json::parse(text));
    });

    m.def("element",
          [](const PlanarDiagram& d) { return AlgebraElement::from_diagram(d); },
          "the algebra element with a single unit coefficient");
    m.def("x_of", &x_of, py::arg("d"));
    m.def("x_unit",
          [](int n, const std::vector<int>& s, const std::vector<int>& t) {
              return x_unit(n, mask_of(s), mask_of(t));
          },
          py::arg("n"), py::arg("top"), py::arg("bottom"));

    m.def("rho",
          [](int n, int k, const PlanarDiagram& d) {
              return int_matrix(rho(n, k, d));
          },
          py::arg("n"), py::arg("k"), py::arg("d"),
          "0/1 matrix of d on the k-subset module");
    m.def("rho_algebra",
          [](int n, int k, const AlgebraElement& a) {
              return string_matrix(rho_algebra(n, k, a));
          },
          py::arg("n"), py::arg("k"), py::arg("a"));
    m.def("irreducibility_dimension", &irreducibility_dimension, py::arg("n"),
          py::arg("k"));
    m.def("restriction_blocks",
          [](int n, int k) {
              RestrictionBlocks b = restriction_blocks(n, k);
              py::dict out;
              out["n"] = b.n;
              out["k"] = b.k;
              out["permutation"] = b.permutation;
              out["first_block"] = b.first_block;
              out["second_block"] = b.second_block;
              out["verified"] = b.verified;
              out["witness"] = b.witness;
              return out;
          },
          py::arg("n"), py::arg("k"));
    m.def("wedderburn",
          [](const AlgebraElement& a) {
              std::vector<std::vector<std::vector<std::string>>> out;
              for (const RationalMatrix& block : wedderburn_map(a))
                  out.push_back(string_matrix(block));
              return out;
          },
          py::arg("a"), "one rational block per rank 0..n");
    m.def("wedderburn_inv",
          [](int n,
             const std::vector<std::vector<std::vector<std::string>>>& blocks) {
              std::vector<RationalMatrix> ms;
              ms.reserve(blocks.size());
              for (const auto& b : blocks)
                  ms.push_back(matrix_from_strings(b));
              return wedderburn_inv(n, ms);
          },
          py::arg("n"), py::arg("blocks"));

    m.def("chi", &chi, py::arg("n"), py::arg("k"), py::arg("d"));
    m.def("chi_on_x", &chi_on_x, py::arg("n"), py::arg("k"), py::arg("d"));
    m.def("character_table",
          [](int n) { return character_table(n).values; }, py::arg("n"));
    m.def("regular_trace", &regular_trace, py::arg("n"), py::arg("d"));
    m.def("tensor_multiplicities",
          [](int n, int i, int j) { return tensor_multiplicities(n, i, j).m; },
          py::arg("n"), py::arg("i"), py::arg("j"));
    m.def("decompose_character",
          [](int n, const std::vector<long long>& f) {
              return decompose_character(n, f).m;
          },
          py::arg("n"), py::arg("values"));
    m.def("center_basis", &center_basis, py::arg("n"));
    m.def("is_central", &is_central, py::arg("a"));
    m.def("centralizer_dimension", &centralizer_dimension, py::arg("n"));

    m.def("bratteli_dot",
          [](int rows) { return bratteli_dot(bratteli(rows)); },
          py::arg("rows"));
    m.def("character_table_csv",
          [](int n) { return character_table_csv(character_table(n)); },
          py::arg("n"));

    m.def("verify",
          [](const std::string& suite, int n_max, std::uint64_t seed) {
              VerifyReport report = run_verify(suite, n_max, seed);
              std::vector<py::dict> checks;
              for (const auto& c : report.checks) {
                  py::dict item;
                  item["name"] = c.name;
                  item["passed"] = c.passed;
                  item["cases"] = c.cases;
                  item["witness"] = c.witness;
                  checks.push_back(std::move(item));
              }
              return py::make_tuple(report.all_passed(), checks);
          },
          py::arg("suite") = "all", py::arg("n_max") = 3,
          py::arg("seed") = 1729);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
