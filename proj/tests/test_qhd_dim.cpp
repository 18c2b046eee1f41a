#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qhd/pipeline.hpp"
#include "qhd/qhd_dim.hpp"

using namespace qhd;
namespace fs = std::filesystem;

namespace {

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

const fs::path kData = QHD_DATA_DIR;

}  // namespace

TEST_CASE("smoothing component dimension") {
  for (auto f : {Family::A4, Family::B4, Family::C4}) {
    CHECK(smoothing_component_dimension({log_canonical_graph(f), 0, true}) == 1);
    for (int p = 2; p <= 10; ++p) CHECK(smoothing_component_dimension({family_graph({f, p, 1}), 1, std::nullopt}) == 1);
  }
  for (int n = 1; n <= 12; ++n) CHECK(smoothing_component_dimension({y_n_graph(n), 0, true}) == 0);
  CHECK(smoothing_component_dimension({h_graph(2, 2, 3, {3}, {2, 2}, {5}), 0, true}) ==
        sum_d_minus_3(h_graph(2, 2, 3, {3}, {2, 2}, {5})));
  ResolutionGraph pos;
  pos.add_vertex(-1);
  pos.add_chain(0, {1});
  CHECK_THROWS(smoothing_component_dimension({pos, 0, true}));
  CHECK_THROWS(smoothing_component_dimension({y_n_graph(1), -1, true}));
}

TEST_CASE("sum(d_i - 3) changes by w - 3 when a vertex of weight -w is appended") {
  for (int w = 1; w <= 8; ++w) {
    ResolutionGraph g = y_n_graph(3);
    std::int64_t before = sum_d_minus_3(g);
    g.add_chain(0, {w});
    CHECK(sum_d_minus_3(g) == before + w - 3);
  }
}

TEST_CASE("exclusion verdicts") {
  for (int n = 1; n <= 12; ++n) {
    auto v = exclusion_verdict(y_n_graph(n), true);
    CHECK(v.verdict == Verdict::Excluded);
    CHECK(v.sum_d_minus_3 == 0);
  }
  auto nt = exclusion_verdict(rational_nontaut_graph(), false);
  CHECK(nt.verdict == Verdict::Inconclusive);
  CHECK(nt.sum_d_minus_3 == 0);
  CHECK(is_rational(rational_nontaut_graph()));
  for (std::int64_t e = 3; e <= 6; ++e)
    CHECK(exclusion_verdict(h_graph(3, 3, e, {3}, {4, 2}, {2, 4}), true).verdict ==
          (e <= 3 ? Verdict::Excluded : Verdict::Inconclusive));
  // positive sum is never excluded
  CHECK(exclusion_verdict(log_canonical_graph(Family::A4), true).verdict == Verdict::Inconclusive);
  CHECK(exclusion_verdict(y_n_graph(2), true).to_string().rfind("EXCLUDED", 0) == 0);
}

TEST_CASE("bundled graphs match the constructors") {
  auto load = [](const std::string& name) { return ResolutionGraph::from_json(read_json(kData / "graphs" / (name + ".json"))); };
  auto same = [](const ResolutionGraph& a, const ResolutionGraph& b) { return a.to_json() == b.to_json(); };
  const std::vector<std::pair<Family, std::string>> fams{{Family::A4, "a4"}, {Family::B4, "b4"}, {Family::C4, "c4"}};
  for (const auto& [f, s] : fams) {
    CHECK(same(load("log_canonical_" + s), log_canonical_graph(f)));
    for (int p = 1; p <= 6; ++p) CHECK(same(load("family_" + s + "_p" + std::to_string(p)), family_graph({f, p, 1})));
  }
  for (int n = 1; n <= 12; ++n) CHECK(same(load("y_n_" + std::to_string(n)), y_n_graph(n)));
  CHECK(same(load("rational_nontaut"), rational_nontaut_graph()));

  auto tmpl = read_json(kData / "graphs" / "h_graph_template.json");
  const auto& P = tmpl["parameters"];
  auto built = h_graph(P["a"], P["b"], P["e"], P["left_chain"].get<std::vector<std::int64_t>>(),
                       P["right_chain"].get<std::vector<std::int64_t>>(), P["top_chain"].get<std::vector<std::int64_t>>());
  CHECK(same(ResolutionGraph::from_json(tmpl), built));
}

TEST_CASE("bundled defaults drive the verdicts") {
  auto d = read_json(kData / "dim_defaults.json");
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kData / "graphs")) {
    ++files;
    const std::string name = entry.path().stem().string();
    CAPTURE(name);
    REQUIRE(d["graphs"].contains(name));
    const auto& info = d["graphs"][name];
    auto g = ResolutionGraph::from_json(read_json(entry.path()));
    CHECK(is_negative_definite(g));
    if (info["h1"].is_number()) {
      auto dim = smoothing_component_dimension({g, info["h1"].get<std::int64_t>(), std::nullopt});
      CHECK(dim == (name.rfind("y_n_", 0) == 0 || name == "h_graph_template" ? 0 : 1));
    }
    if (info["taut"].is_boolean()) {
      auto v = exclusion_verdict(g, info["taut"].get<bool>());
      bool expect_excluded = info["taut"].get<bool>() && sum_d_minus_3(g) <= 0;
      CHECK((v.verdict == Verdict::Excluded) == expect_excluded);
    }
  }
  CHECK(files == d["graphs"].size());
}
