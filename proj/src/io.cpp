#include "prook/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace prook {

namespace {

int parse_int(std::string_view text) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("malformed integer");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<int> parse_vertex_list(std::string_view text) {
    std::vector<int> out;
    text = trim(text);
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view item = comma == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, comma - start);
        out.push_back(parse_int(trim(item)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> vertex_list_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing vertex list: ") + key);
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw std::invalid_argument("vertex is not an integer");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

Json diagram_to_json(const PlanarDiagram& d) {
    Json j;
    j["n"] = d.size();
    j["top"] = elements(d.top());
    j["bottom"] = elements(d.bottom());
    return j;
}

PlanarDiagram diagram_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("diagram object needs an integer n");
    int n = j["n"].get<int>();
    Mask top = mask_of(vertex_list_from_json(j, "top"));
    Mask bottom = mask_of(vertex_list_from_json(j, "bottom"));
    return PlanarDiagram::from_sets(n, top, bottom);
}

std::string diagram_to_compact(const PlanarDiagram& d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

PlanarDiagram diagram_from_compact(std::string_view text) {
    text = trim(text);
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("compact diagram needs 'n:bottom->top'");
    std::size_t arrow = text.find("->", colon + 1);
    if (arrow == std::string_view::npos)
        throw std::invalid_argument("compact diagram needs 'n:bottom->top'");
    int n = parse_int(trim(text.substr(0, colon)));
    Mask bottom =
        mask_of(parse_vertex_list(text.substr(colon + 1, arrow - colon - 1)));
    Mask top = mask_of(parse_vertex_list(text.substr(arrow + 2)));
    return PlanarDiagram::from_sets(n, top, bottom);
}

PlanarDiagram parse_diagram(std::string_view text) {
    std::string_view t = trim(text);
    if (!t.empty() && t.front() == '{')
        return diagram_from_json(Json::parse(t));
    return diagram_from_compact(t);
}

Json element_to_json(const AlgebraElement& a) {
    Json j;
    j["n"] = a.size();
    Json terms = Json::array();
    for (const auto& [d, c] : a.terms()) {
        Json term;
        term["coeff"] = rational_to_string(c);
        term["diagram"] = diagram_to_json(d);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

AlgebraElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("element object needs an integer n");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("element object needs a terms array");
    AlgebraElement a(j["n"].get<int>());
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("coeff") ||
            !term.contains("diagram") || !term["coeff"].is_string())
            throw std::invalid_argument(
                "term needs a coeff string and a diagram object");
        Rational c = rational_from_string(term["coeff"].get<std::string>());
        PlanarDiagram d = diagram_from_json(term["diagram"]);
        if (d.size() != a.size())
            throw std::invalid_argument("term size differs from element size");
        a.add_term(d, c);
    }
    return a;
}

Json irrep_matrix_to_json(int n, int k, const RationalMatrix& m) {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            entries.push_back(rational_to_string(m.at(r, c)));
    j["entries"] = std::move(entries);
    return j;
}

std::string character_table_csv(const CharacterTable& t) {
    std::ostringstream os;
    for (int l = 0; l <= t.n; ++l)
        os << (l ? "," : "") << l;
    os << '\n';
    for (const auto& row : t.values) {
        for (std::size_t l = 0; l < row.size(); ++l)
            os << (l ? "," : "") << row[l];
        os << '\n';
    }
    return os.str();
}

Json character_table_json(const CharacterTable& t) {
    Json j;
    j["n"] = t.n;
    j["values"] = t.values;
    return j;
}

std::string bratteli_dot(const BratteliGraph& g) {
    std::ostringstream os;
    os << "digraph bratteli {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=circle];\n";
    for (int r = 0; r <= g.rows; ++r) {
        os << "  { rank=same;";
        for (int k = 0; k <= r; ++k)
            os << " \"" << r << '_' << k << "\" [label=\""
               << g.labels[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]
               << "\"];";
        os << " }\n";
    }
    for (const auto& e : g.edges)
        os << "  \"" << e.n << '_' << e.k << "\" -> \"" << (e.n - 1) << '_'
           << e.parent_k << "\";\n";
    os << "}\n";
    return os.str();
}

Json bratteli_json(const BratteliGraph& g) {
    Json j;
    j["rows"] = g.rows;
    Json nodes = Json::array();
    for (int r = 0; r <= g.rows; ++r) {
        for (int k = 0; k <= r; ++k) {
            Json node;
            node["n"] = r;
            node["k"] = k;
            node["dim"] =
                g.labels[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            nodes.push_back(std::move(node));
        }
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json edge;
        edge["child"] = {e.n, e.k};
        edge["parent"] = {e.n - 1, e.parent_k};
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json multiplicities_json(const MultiplicityVector& v) {
    Json j;
    j["n"] = v.n;
    j["m"] = v.m;
    return j;
}

Mask set_from_string(int n, std::string_view text) {
    Mask m = mask_of(parse_vertex_list(text));
    if (m & ~full_mask(n))
        throw std::out_of_range("set element outside {1..n}");
    return m;
}

} // namespace prook
