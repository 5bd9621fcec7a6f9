#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruhat/spinweyl.hpp"
#include "bruhat/strata.hpp"

namespace bruhat {

struct OrbitRow {
  SpinWeylElement representative;
  std::int64_t size = 0;
  ScaledDyadic re;
  std::int64_t n_value = 0;
  int c_anti = 0;
  std::int64_t isolated = 0;

  friend bool operator==(const OrbitRow&, const OrbitRow&) = default;
};

struct BucketRow {
  SpinWeylElement z;
  std::int64_t n_value = 0;  // closed formula
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t components = 0;
  std::int64_t isolated = 0;
  std::optional<std::int64_t> d2_strata;

  friend bool operator==(const BucketRow&, const BucketRow&) = default;
};

/// Everything the analyze command reports for one reduced word.
struct AnalysisReport {
  ReducedWord word;
  Permutation sigma;
  int cycles = 0;
  std::set<int> blocks;
  std::vector<OrbitRow> orbits;    // sorted by representative
  std::vector<BucketRow> buckets;  // whole coset, sorted by z
  std::int64_t vertices_total = 0;
  std::int64_t edges_total = 0;
  std::int64_t components_total = 0;
  std::int64_t d2_preancestries = 0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Throws Inconsistent if enumeration and closed formula disagree.
AnalysisReport analyze(const ReducedWord& word, int threads = 1);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport analysis_from_json(const nlohmann::json& j);

/// One BL_z 1-skeleton in exportable form.
struct StrataExport {
  ReducedWord word;
  SpinWeylElement z;
  std::vector<AncestryVector> vertices;
  std::vector<StrataEdge> edges;
  std::vector<D2Attribution> d2;
  std::int64_t components = 0;
  std::int64_t isolated = 0;

  friend bool operator==(const StrataExport&, const StrataExport&) = default;
};

StrataExport make_export(const ReducedWord& word, const SpinWeylElement& z);

nlohmann::json to_json(const StrataExport& e);
StrataExport export_from_json(const nlohmann::json& j);
std::string to_dot(const StrataExport& e);

nlohmann::json element_to_json(const SpinWeylElement& z);
SpinWeylElement element_from_json(const nlohmann::json& j, int rank);

}  // namespace bruhat
