#include "bruhat/report.hpp"

#include <algorithm>
#include <sstream>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

using nlohmann::json;

json dyadic_to_json(const ScaledDyadic& x) {
  const auto mono = x.as_monomial();
  if (!mono) throw std::domain_error("value " + x.to_string(Notation::ascii) + " is not a monomial");
  return {{"text", x.to_exponent_string()}, {"mantissa", mono->first}, {"halfexp", mono->second}};
}

ScaledDyadic dyadic_from_json(const json& j) {
  return ScaledDyadic::from_mantissa(j.at("mantissa").get<std::int64_t>(), j.at("halfexp").get<int>());
}

json word_to_json(const ReducedWord& word) { return json(std::vector<int>(word.letters().begin(), word.letters().end())); }

ReducedWord word_from_json(const json& j) {
  try {
    return ReducedWord(j.at("word").get<std::vector<int>>(), j.at("rank").get<int>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad word field: ") + e.what());
  }
}

// Checked wrapper turning JSON library errors into ParseError.
template <typename F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

json element_to_json(const SpinWeylElement& z) {
  return {{"ahat", to_ahat_string(z.value(), Notation::unicode)}, {"terms", clifford_to_json(z.value())}};
}

SpinWeylElement element_from_json(const json& j, int rank) {
  return parsing([&] { return SpinWeylElement(clifford_from_json(j.at("terms"), rank)); });
}

AnalysisReport analyze(const ReducedWord& word, int threads) {
  AnalysisReport r;
  r.word = word;
  r.sigma = perm_from_word(word);
  r.cycles = cycle_count(r.sigma);
  r.blocks = block_set(r.sigma);

  const StrataComplex complex = strata_complex(word, threads);
  std::vector<OrbitReport> orbits = orbit_decomposition(word);
  attach_isolated_counts(orbits, complex);
  for (const auto& o : orbits) {
    r.orbits.push_back({o.representative, static_cast<std::int64_t>(o.members.size()), o.re_value, o.n_value, o.c_anti,
                        o.isolated_count.value_or(0)});
  }

  for (const auto& z : coset(word)) {
    BucketRow row;
    row.z = z;
    row.n_value = n_of_z(word, z);
    if (const BucketSummary* b = complex.find(z)) {
      row.vertices = b->vertices;
      row.edges = b->edges;
      row.components = b->components;
      row.isolated = b->isolated;
      row.d2_strata = b->d2_strata;
    } else if (word.length() <= max_d2_length) {
      row.d2_strata = 0;
    }
    if (row.n_value != row.vertices) {
      throw Inconsistent("N(z) = " + std::to_string(row.n_value) + " but enumeration found " +
                         std::to_string(row.vertices) + " sign vectors for z = " +
                         to_ahat_string(z.value(), Notation::ascii));
    }
    r.buckets.push_back(std::move(row));
  }
  r.vertices_total = complex.vertices_total;
  r.edges_total = complex.edges_total;
  r.components_total = complex.components_total;
  r.d2_preancestries = static_cast<std::int64_t>(enumerate_d2_preancestries(word).size());
  return r;
}

json to_json(const AnalysisReport& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back({{"representative", element_to_json(o.representative)},
                      {"size", o.size},
                      {"re", dyadic_to_json(o.re)},
                      {"N", o.n_value},
                      {"c_anti", o.c_anti},
                      {"isolated", o.isolated}});
  }
  json buckets = json::array();
  for (const auto& b : r.buckets) {
    buckets.push_back({{"z", element_to_json(b.z)},
                       {"N", b.n_value},
                       {"vertices", b.vertices},
                       {"edges", b.edges},
                       {"components", b.components},
                       {"isolated", b.isolated},
                       {"d2_strata", b.d2_strata ? json(*b.d2_strata) : json(nullptr)}});
  }
  return {{"word", word_to_json(r.word)},
          {"rank", r.word.rank()},
          {"permutation", r.sigma.to_string()},
          {"length", r.word.length()},
          {"cycles", r.cycles},
          {"blocks", json(std::vector<int>(r.blocks.begin(), r.blocks.end()))},
          {"orbits", orbits},
          {"buckets", buckets},
          {"totals",
           {{"vertices", r.vertices_total},
            {"edges", r.edges_total},
            {"components", r.components_total},
            {"d2_preancestries", r.d2_preancestries}}}};
}

AnalysisReport analysis_from_json(const json& j) {
  return parsing([&] {
    AnalysisReport r;
    r.word = word_from_json(j);
    const int n = r.word.rank();
    r.sigma = parse_permutation(j.at("permutation").get<std::string>());
    r.cycles = j.at("cycles").get<int>();
    for (int b : j.at("blocks")) r.blocks.insert(b);
    for (const auto& o : j.at("orbits")) {
      r.orbits.push_back({element_from_json(o.at("representative"), n), o.at("size").get<std::int64_t>(),
                          dyadic_from_json(o.at("re")), o.at("N").get<std::int64_t>(), o.at("c_anti").get<int>(),
                          o.at("isolated").get<std::int64_t>()});
    }
    for (const auto& b : j.at("buckets")) {
      BucketRow row;
      row.z = element_from_json(b.at("z"), n);
      row.n_value = b.at("N").get<std::int64_t>();
      row.vertices = b.at("vertices").get<std::int64_t>();
      row.edges = b.at("edges").get<std::int64_t>();
      row.components = b.at("components").get<std::int64_t>();
      row.isolated = b.at("isolated").get<std::int64_t>();
      if (!b.at("d2_strata").is_null()) row.d2_strata = b.at("d2_strata").get<std::int64_t>();
      r.buckets.push_back(std::move(row));
    }
    const json& totals = j.at("totals");
    r.vertices_total = totals.at("vertices").get<std::int64_t>();
    r.edges_total = totals.at("edges").get<std::int64_t>();
    r.components_total = totals.at("components").get<std::int64_t>();
    r.d2_preancestries = totals.at("d2_preancestries").get<std::int64_t>();
    return r;
  });
}

StrataExport make_export(const ReducedWord& word, const SpinWeylElement& z) {
  StrataGraph g = strata_graph(word, z);
  StrataExport e;
  e.word = word;
  e.z = z;
  e.vertices = std::move(g.vertices);
  e.edges = std::move(g.edges);
  e.components = g.components;
  e.isolated = g.isolated;
  if (word.length() <= max_d2_length) e.d2 = d2_attribution(word, z);
  return e;
}

json to_json(const StrataExport& e) {
  json vertices = json::array();
  for (const auto& v : e.vertices) vertices.push_back(v.to_string());
  json edges = json::array();
  for (const auto& edge : e.edges) {
    edges.push_back({{"label", edge.label.to_string()},
                     {"endpoints", {edge.first.to_string(), edge.second.to_string()}},
                     {"face", {edge.face.k1, edge.face.k2}}});
  }
  json d2 = json::array();
  for (const auto& a : e.d2) {
    d2.push_back({{"positions", a.skeleton.positions},
                  {"signs", a.skeleton.signs},
                  {"type", to_string(a.skeleton.type)},
                  {"strata", a.strata}});
  }
  return {{"word", word_to_json(e.word)}, {"rank", e.word.rank()}, {"z", element_to_json(e.z)},
          {"vertices", vertices},         {"edges", edges},         {"d2_preancestries", d2},
          {"components", e.components},   {"isolated", e.isolated}};
}

StrataExport export_from_json(const json& j) {
  return parsing([&] {
    StrataExport e;
    e.word = word_from_json(j);
    e.z = element_from_json(j.at("z"), e.word.rank());
    for (const auto& v : j.at("vertices")) e.vertices.push_back(parse_ancestry(v.get<std::string>()));
    const std::vector<Face> fs = faces(e.word);
    for (const auto& edge : j.at("edges")) {
      const auto ends = edge.at("face").get<std::vector<int>>();
      const auto it = std::find_if(fs.begin(), fs.end(), [&](const Face& f) {
        return ends.size() == 2 && f.k1 == ends[0] && f.k2 == ends[1];
      });
      if (it == fs.end()) throw ParseError("edge refers to a face the word does not have");
      const auto& endpoints = edge.at("endpoints");
      e.edges.push_back({*it, parse_ancestry(endpoints.at(0).get<std::string>()),
                         parse_ancestry(endpoints.at(1).get<std::string>()),
                         parse_ancestry(edge.at("label").get<std::string>())});
    }
    for (const auto& a : j.at("d2_preancestries")) {
      D2Attribution d;
      d.skeleton.positions = a.at("positions").get<std::array<int, 4>>();
      d.skeleton.signs = a.at("signs").get<std::array<int, 4>>();
      const std::string type = a.at("type").get<std::string>();
      d.skeleton.type = type == "I" ? D2Type::I : type == "II" ? D2Type::II : D2Type::Invalid;
      d.strata = a.at("strata").get<std::int64_t>();
      e.d2.push_back(d);
    }
    e.components = j.at("components").get<std::int64_t>();
    e.isolated = j.at("isolated").get<std::int64_t>();
    return e;
  });
}

std::string to_dot(const StrataExport& e) {
  std::ostringstream out;
  out << "graph strata {\n";
  out << "  label=\"" << dot_escape("word " + e.word.to_string() + ", z = " + to_ahat_string(e.z.value(), Notation::ascii))
      << "\";\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << e.vertices[i].to_sign_string() << "\"];\n";
  }
  auto index_of = [&](const AncestryVector& v) {
    return std::lower_bound(e.vertices.begin(), e.vertices.end(), v) - e.vertices.begin();
  };
  for (const auto& edge : e.edges) {
    out << "  v" << index_of(edge.first) << " -- v" << index_of(edge.second) << " [label=\""
        << edge.label.to_string() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bruhat
