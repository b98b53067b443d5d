#include "kazhdan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "kazhdan/error.hpp"

namespace kazhdan::io {

using linalg::Complex;
using linalg::CVector;

namespace {

std::size_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

double as_real(const Json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
    return j.get<double>();
}

Complex entry_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InputError("vector entries must be numbers or [re, im] pairs");
}

std::size_t parse_vertex_key(const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad vertex key '" + s + "'");
    return v;
}

Json number(double v) {
    // Round-trip exact at 17 significant digits; nlohmann prints shortest form.
    return Json(v);
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

Json subspace_to_json(const linalg::Subspace& s) {
    Json cols = Json::array();
    for (std::size_t k = 0; k < s.dim(); ++k) {
        Json col = Json::array();
        for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
            const Complex z = s.basis()(i, k);
            col.push_back(Json::array({number(z.real()), number(z.imag())}));
        }
        cols.push_back(std::move(col));
    }
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["columns"] = std::move(cols);
    return j;
}

linalg::Subspace subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("columns"))
        throw InputError("subspace needs ambient_dim and columns");
    const std::size_t n = as_index(j["ambient_dim"], "ambient_dim");
    if (n == 0) throw InputError("ambient_dim must be positive");
    if (!j["columns"].is_array()) throw InputError("columns must be an array");
    std::vector<CVector> vectors;
    for (const auto& col : j["columns"]) {
        if (!col.is_array() || col.size() != n) throw InputError("every column needs ambient_dim entries");
        CVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = entry_from_json(col[i]);
        for (const auto& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("non-finite entry");
        vectors.push_back(std::move(v));
    }
    return linalg::orthonormalize(vectors, {}, n);
}

std::vector<linalg::Subspace> subspaces_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("subspaces") || !j["subspaces"].is_array())
        throw InputError("expected {\"subspaces\": [...]}");
    std::vector<linalg::Subspace> out;
    for (const auto& s : j["subspaces"]) out.push_back(subspace_from_json(s));
    return out;
}

Json subspaces_to_json(const std::vector<linalg::Subspace>& list) {
    Json arr = Json::array();
    for (const auto& s : list) arr.push_back(subspace_to_json(s));
    Json j;
    j["subspaces"] = std::move(arr);
    return j;
}

graph::WeightedGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph needs vertices and edges");
    const std::size_t n = as_index(j["vertices"], "vertices");
    if (!j["edges"].is_array()) throw InputError("edges must be an array");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge is a pair [u, v]");
        edges.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
    }
    std::map<std::size_t, double> alpha;
    if (j.contains("alpha")) {
        if (!j["alpha"].is_object()) throw InputError("alpha must be an object");
        for (const auto& [k, v] : j["alpha"].items()) alpha[parse_vertex_key(k)] = as_real(v, "alpha");
    }
    graph::EdgeWeights c;
    if (j.contains("c")) {
        if (!j["c"].is_object()) throw InputError("c must be an object");
        for (const auto& [k, v] : j["c"].items()) {
            const auto comma = k.find(',');
            if (comma == std::string::npos) throw InputError("c keys look like \"u,v\"");
            c[{parse_vertex_key(k.substr(0, comma)), parse_vertex_key(k.substr(comma + 1))}] = as_real(v, "c");
        }
    }
    return graph::WeightedGraph::from_undirected(n, edges, alpha, c);
}

Json graph_to_json(const graph::WeightedGraph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    Json edges = Json::array();
    Json c = Json::object();
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& ed = g.edges()[e];
        if (e % 2 == 0) edges.push_back(Json::array({ed.tail, ed.head}));
        c[std::to_string(ed.tail) + "," + std::to_string(ed.head)] = number(g.c()[e]);
    }
    Json alpha = Json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) alpha[std::to_string(v)] = number(g.alpha()[v]);
    j["edges"] = std::move(edges);
    j["alpha"] = std::move(alpha);
    j["c"] = std::move(c);
    return j;
}

presentation::HilbertSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gens")) throw InputError("series needs gens");
    presentation::HilbertSeries h;
    h.gens = as_index(j["gens"], "gens");
    if (j.contains("p")) {
        const std::size_t p = as_index(j["p"], "p");
        if (p < 2) throw InputError("p must be at least 2");
        h.p = static_cast<unsigned>(p);
    }
    if (j.contains("relations")) {
        if (!j["relations"].is_object()) throw InputError("relations must be an object");
        for (const auto& [k, v] : j["relations"].items()) {
            int deg = 0;
            if (k == "p") {
                if (!h.p) throw InputError("relation degree \"p\" needs a top-level p");
                deg = static_cast<int>(*h.p);
            } else {
                deg = static_cast<int>(parse_vertex_key(k));
            }
            if (deg < 1) throw InputError("relation degrees must be >= 1");
            const double count = as_real(v, "relation count");
            if (!(count >= 0) || !std::isfinite(count)) throw InputError("relation counts must be finite and >= 0");
            h.r[deg] += count;
        }
    }
    if (h.gens == 0 && h.r.empty()) throw InputError("empty series");
    return h;
}

Json series_to_json(const presentation::HilbertSeries& h) {
    Json j;
    j["gens"] = h.gens;
    Json rel = Json::object();
    for (const auto& [deg, count] : h.r) rel[std::to_string(deg)] = number(count);
    j["relations"] = std::move(rel);
    if (h.p) j["p"] = *h.p;
    return j;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json report_to_json(const criteria::BoundReport& r) {
    Json j;
    j["criterion"] = r.criterion;
    Json in = Json::object();
    for (const auto& [k, v] : r.inputs) in[k] = number(v);
    j["inputs"] = std::move(in);
    Json mid = Json::object();
    for (const auto& [k, v] : r.intermediates) mid[k] = std::isfinite(v) ? number(v) : Json(format_double(v));
    j["intermediates"] = std::move(mid);
    if (!r.labels.empty()) {
        Json lab = Json::object();
        for (const auto& [k, v] : r.labels) lab[k] = v;
        j["labels"] = std::move(lab);
    }
    j["bound_name"] = r.bound_name;
    j["bound"] = number(r.bound);
    j["satisfied"] = r.satisfied;
    j["notes"] = r.notes;
    return j;
}

std::string report_to_table(const criteria::BoundReport& r) {
    std::ostringstream out;
    std::size_t width = 10;
    for (const auto& [k, v] : r.inputs) width = std::max(width, k.size());
    for (const auto& [k, v] : r.intermediates) width = std::max(width, k.size());
    for (const auto& [k, v] : r.labels) width = std::max(width, k.size());
    auto row = [&](const std::string& k, const std::string& v) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
    };
    out << "criterion: " << r.criterion << '\n';
    if (!r.inputs.empty()) out << "inputs:\n";
    for (const auto& [k, v] : r.inputs) row(k, format_double(v));
    if (!r.intermediates.empty()) out << "intermediates:\n";
    for (const auto& [k, v] : r.intermediates) row(k, format_double(v));
    for (const auto& [k, v] : r.labels) row(k, v);
    out << r.bound_name << ": " << format_double(r.bound) << '\n';
    out << "satisfied: " << (r.satisfied ? "yes" : "no") << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    return out.str();
}

}  // namespace kazhdan::io

namespace kazhdan::io {

GroupSpec group_from_json(const Json& j, std::size_t closure_cap) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) throw InputError("group spec needs a type");
    const std::string type = j["type"].get<std::string>();
    GroupSpec out;
    if (type == "heisenberg") {
        if (!j.contains("p")) throw InputError("heisenberg spec needs p");
        const auto h = group::heisenberg(static_cast<unsigned>(as_index(j["p"], "p")));
        out.group = h.group;
        out.named = {{"X", h.X}, {"Y", h.Y}, {"Z", h.Z}};
    } else if (type == "EL") {
        if (!j.contains("n") || !j.contains("ring") || !j["ring"].is_object() || !j["ring"].contains("mod"))
            throw InputError("EL spec needs n and ring.mod");
        const auto sys = group::eln_root_subgroups(as_index(j["n"], "n"),
                                                   group::RingZm{static_cast<unsigned>(as_index(j["ring"]["mod"], "mod"))},
                                                   closure_cap);
        out.group = sys.group;
        for (const auto& [pr, sub] : sys.X) out.named["X" + std::to_string(pr.first) + std::to_string(pr.second)] = sub;
        for (const auto& [pr, sub] : sys.vertex)
            out.named["G" + std::to_string(pr.first) + std::to_string(pr.second)] = sub;
    } else if (type == "table") {
        if (!j.contains("mult") || !j["mult"].is_array()) throw InputError("table spec needs mult");
        std::vector<std::vector<std::size_t>> mult;
        for (const auto& row : j["mult"]) {
            if (!row.is_array()) throw InputError("mult rows must be arrays");
            std::vector<std::size_t> r;
            for (const auto& x : row) r.push_back(as_index(x, "table entry"));
            mult.push_back(std::move(r));
        }
        out.group = group::FiniteGroup::from_table(mult);
    } else {
        throw InputError("unknown group type '" + type + "'");
    }
    return out;
}

group::Subgroup subgroup_from_json(const GroupSpec& g, const Json& j) {
    if (j.is_string()) {
        const auto it = g.named.find(j.get<std::string>());
        if (it == g.named.end()) throw InputError("unknown subgroup name '" + j.get<std::string>() + "'");
        return it->second;
    }
    if (!j.is_array()) throw InputError("subgroup spec must be a name or a list");
    std::vector<std::size_t> gens;
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            const std::size_t idx = as_index(e, "element index");
            if (idx >= g.group->order()) throw InputError("element index out of range");
            gens.push_back(idx);
            continue;
        }
        if (!g.group->is_matrix_group() || !e.is_array()) throw InputError("subgroup entries must be indices");
        const std::size_t n = g.group->matrix_dim();
        if (e.size() != n) throw InputError("matrix literal has the wrong size");
        group::IntMatrix m;
        for (const auto& row : e) {
            if (!row.is_array() || row.size() != n) throw InputError("matrix literal has the wrong size");
            for (const auto& x : row) {
                if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
                const long long v = x.get<long long>();
                const long long mod = g.group->modulus();
                m.push_back(static_cast<std::uint32_t>(((v % mod) + mod) % mod));
            }
        }
        const auto idx = g.group->find(m);
        if (!idx) throw InputError("matrix literal is not an element of the group");
        gens.push_back(*idx);
    }
    return group::subgroup_closure(g.group, gens);
}

}  // namespace kazhdan::io
