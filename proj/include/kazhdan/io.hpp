#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "kazhdan/criteria.hpp"
#include "kazhdan/graph.hpp"
#include "kazhdan/group.hpp"
#include "kazhdan/linalg.hpp"
#include "kazhdan/presentation.hpp"

namespace kazhdan::io {

using Json = nlohmann::ordered_json;

// Parse failures and schema violations throw InputError.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);
void write_text_file(const std::string& path, const std::string& text);

// {"ambient_dim": n, "columns": [[[re,im], …], …]}; an entry may also be a
// plain real number.
Json subspace_to_json(const linalg::Subspace& s);
linalg::Subspace subspace_from_json(const Json& j);
// {"subspaces": [<subspace>, …]}
std::vector<linalg::Subspace> subspaces_from_json(const Json& j);
Json subspaces_to_json(const std::vector<linalg::Subspace>& list);

// {"vertices": n, "edges": [[u,v], …], "alpha": {"u": a}, "c": {"u,v": w}}
graph::WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const graph::WeightedGraph& g);

// {"gens": n, "relations": {"2": r2, "3": r3, "p": rp}, "p": p}
presentation::HilbertSeries series_from_json(const Json& j);
Json series_to_json(const presentation::HilbertSeries& h);

// Group spec: {"type":"heisenberg","p":5} | {"type":"EL","n":3,"ring":{"mod":2}}
// | {"type":"table","mult":[[…]]}. Named subgroups come with the group:
// "X", "Y", "Z" for Heisenberg groups and "X12", …, "G12", … for EL.
struct GroupSpec {
    group::GroupPtr group;
    std::map<std::string, group::Subgroup> named;
};
GroupSpec group_from_json(const Json& j, std::size_t closure_cap = group::kDefaultClosureCap);
// A subgroup spec is a name, or a list whose entries are element indices or
// matrix literals [[row], …] (matrix groups only); it denotes the closure.
group::Subgroup subgroup_from_json(const GroupSpec& g, const Json& j);

Json report_to_json(const criteria::BoundReport& r);
// Human-readable table of the same fields.
std::string report_to_table(const criteria::BoundReport& r);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace kazhdan::io
