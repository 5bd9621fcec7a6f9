#include <doctest.h>

#include <cstdint>
#include <string>

#include "bruhat/combinatorics.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/report.hpp"

using namespace bruhat;

TEST_CASE("analyze [45132]") {
  const ReducedWord w({2, 3, 1, 2, 4, 3, 2}, 4);
  const AnalysisReport r = analyze(w);
  CHECK(r.sigma == parse_permutation("45132"));
  CHECK(r.buckets.size() == 32);
  CHECK(r.vertices_total == 128);
  std::int64_t orbit_total = 0, n_total = 0;
  for (const auto& o : r.orbits) orbit_total += o.size;
  for (const auto& b : r.buckets) {
    CHECK(b.n_value == b.vertices);
    CHECK(b.isolated <= b.components);
    n_total += b.n_value;
  }
  CHECK(orbit_total == 32);
  CHECK(n_total == 128);
  for (std::size_t i = 1; i < r.orbits.size(); ++i) CHECK(r.orbits[i - 1].representative < r.orbits[i].representative);
}

TEST_CASE("analysis JSON round trip") {
  for (const char* perm : {"4312", "45132", "21", "1"}) {
    const Permutation p = parse_permutation(perm);
    if (p.size() < 2) continue;
    const AnalysisReport r = analyze(canonical_word(p));
    const nlohmann::json j = to_json(r);
    CHECK(analysis_from_json(nlohmann::json::parse(j.dump())) == r);
  }
}

TEST_CASE("analysis JSON rejects malformed input") {
  CHECK_THROWS(analysis_from_json(nlohmann::json::parse(R"({"word": "x"})")));
  CHECK_THROWS(analysis_from_json(nlohmann::json::array()));
}

TEST_CASE("strata export round trips and renders DOT") {
  const ReducedWord w({1, 2, 3, 1, 2}, 3);
  const SpinWeylElement z = lift_word(w, std::vector<int>{1, 1, -1, 1, -1});
  const StrataExport e = make_export(w, z);
  CHECK(e.vertices.size() == 3);
  CHECK(e.edges.size() == 2);
  CHECK(e.components == 1);
  CHECK(export_from_json(nlohmann::json::parse(to_json(e).dump())) == e);
  const std::string dot = to_dot(e);
  CHECK(dot.rfind("graph strata {", 0) == 0);
  std::size_t edge_lines = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edge_lines;
  CHECK(edge_lines == 2);
  CHECK(dot.back() == '\n');
}

TEST_CASE("export of the empty word") {
  const ReducedWord w(std::vector<int>{}, 1);
  const StrataExport e = make_export(w, SpinWeylElement::one(1));
  CHECK(e.vertices.size() == 1);
  CHECK(e.edges.empty());
  CHECK(e.isolated == 1);
  CHECK(export_from_json(to_json(e)) == e);
}

TEST_CASE("element JSON") {
  const SpinWeylElement z = acute_lift(ReducedWord({2, 3, 1, 2, 4, 3, 2}, 4));
  CHECK(element_from_json(element_to_json(z), 4) == z);
  CHECK(element_to_json(z).contains("ahat"));
}
