#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "kazhdan/error.hpp"
#include "kazhdan/io.hpp"
#include "test_support.hpp"

using namespace kazhdan;
using io::Json;

TEST_CASE("subspace round trip") {
    std::mt19937_64 rng(testsupport::kSeed);
    const auto s = testsupport::random_subspace(rng, 5, 3);
    const auto back = io::subspace_from_json(io::parse_json(io::subspace_to_json(s).dump()));
    CHECK(back.dim() == 3);
    CHECK(back.ambient_dim() == 5);
    // same subspace: orthogonality constant 1 and equal codistance with itself
    CHECK(linalg::orthogonality_constant(s, back) == doctest::Approx(1.0));
    CHECK(linalg::max_abs_diff(testsupport::projector(s), testsupport::projector(back)) < 1e-12);
}

TEST_CASE("subspace parsing accepts real entries and orthonormalizes") {
    const auto s = io::subspace_from_json(Json::parse(R"({"ambient_dim": 2, "columns": [[3, 4], [6, 8]]})"));
    CHECK(s.dim() == 1);
    CHECK(std::abs(s.basis()(0, 0)) == doctest::Approx(0.6));
    const auto list = io::subspaces_from_json(io::read_json_file(KAZHDAN_DATA_DIR "/two_orthogonal_lines.json"));
    CHECK(list.size() == 2);
    CHECK(linalg::codistance(list) == doctest::Approx(0.5));
}

TEST_CASE("malformed input raises InputError") {
    CHECK_THROWS_AS(io::parse_json("{not json"), InputError);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
    CHECK_THROWS_AS(io::subspace_from_json(Json::parse(R"({"columns": []})")), InputError);
    CHECK_THROWS_AS(io::subspace_from_json(Json::parse(R"({"ambient_dim": 2, "columns": [[1, 2, 3]]})")),
                    InputError);
    CHECK_THROWS_AS(io::subspace_from_json(Json::parse(R"({"ambient_dim": 2, "columns": [["a", 1]]})")),
                    InputError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0, 2]]})")), InputError);
    CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"edges": [[0, 1]]})")), InputError);
    CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"gens": 3, "relations": {"x": 1}})")), InputError);
    CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"type": "nope"})")), InputError);
}

TEST_CASE("graph round trip keeps weights") {
    const auto g = graph::WeightedGraph::from_undirected(3, {{0, 1}, {1, 2}}, {{1, 2.5}}, {{{0, 1}, 0.75}});
    const auto back = io::graph_from_json(io::graph_to_json(g));
    CHECK(back.vertex_count() == 3);
    CHECK(back.alpha() == g.alpha());
    CHECK(back.c() == g.c());
    const auto magic = io::graph_from_json(io::read_json_file(KAZHDAN_DATA_DIR "/magic.json"));
    CHECK(graph::exact_lambda1(graph::standard_laplacian(magic)) == 4);
}

TEST_CASE("series round trip") {
    const auto h = io::series_from_json(io::read_json_file(KAZHDAN_DATA_DIR "/gs1_d6_p5.json"));
    CHECK(h.gens == 6);
    CHECK(h.r.at(3) == 30.0);
    CHECK(h.r.at(5) == 6.0);
    const auto back = io::series_from_json(io::series_to_json(h));
    CHECK(back.r == h.r);
    CHECK(back.p == h.p);
}

TEST_CASE("group specs") {
    const auto h = io::group_from_json(io::read_json_file(KAZHDAN_DATA_DIR "/heisenberg5_xy.json").at("group"));
    CHECK(h.group->order() == 125);
    CHECK(h.named.at("X").order() == 5);
    const auto el = io::group_from_json(Json::parse(R"({"type": "EL", "n": 3, "ring": {"mod": 2}})"));
    CHECK(el.group->order() == 168);
    CHECK(el.named.at("G12").order() == 8);
    const auto sub = io::subgroup_from_json(el, Json::parse("[[[1,1,0],[0,1,0],[0,0,1]]]"));
    CHECK(sub.elements() == el.named.at("X12").elements());
    const auto table = io::group_from_json(Json::parse(R"({"type": "table", "mult": [[0,1],[1,0]]})"));
    CHECK(table.group->order() == 2);
    CHECK(io::subgroup_from_json(table, Json::parse("[1]")).order() == 2);
    CHECK_THROWS_AS(io::subgroup_from_json(table, Json::parse(R"("X")")), InputError);
    CHECK_THROWS_AS(io::subgroup_from_json(table, Json::parse("[7]")), InputError);
}

TEST_CASE("reports serialize every field") {
    const auto r = criteria::kms_bound(3, 5);
    const Json j = io::report_to_json(r);
    CHECK(j.at("criterion") == "kms");
    CHECK(j.at("satisfied") == true);
    CHECK(j.at("bound").get<double>() == r.bound);
    CHECK(j.at("inputs").at("d") == 3);
    auto inf = criteria::corollary_tn(4, 0.5);
    CHECK(io::report_to_json(inf).dump().find("inf") != std::string::npos);
    CHECK(io::report_to_table(r).find("kappa") != std::string::npos);
}

TEST_CASE("format_double is shortest round-trip") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(io::format_double(2.0) == "2");
}
