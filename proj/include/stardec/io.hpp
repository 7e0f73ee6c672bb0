#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stardec/graph.hpp"

namespace stardec {

namespace detail {

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("JSON parse error: ") + e.what());
  }
}

inline long long require_int(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) throw parse_error("field '" + field + "' must be an integer");
  return j.get<long long>();
}

}  // namespace detail

// Instance JSON:
//   {"n": int, "edges": [[u,v],...], "multiplicity": [int,...] (optional),
//    "s": [int,...], "a": [int,...]}
// Vertex ids may be arbitrary non-negative integers when "n" is absent; they
// are compacted to 0..n-1 and the original labels are retained.
inline Instance load_instance_json(const std::string& text) {
  nlohmann::json j = detail::parse_json(text);
  if (!j.is_object()) throw parse_error("instance must be a JSON object");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw parse_error("missing 'edges' array");
  if (!j.contains("s") || !j["s"].is_array()) throw parse_error("missing 's' array");
  if (!j.contains("a") || !j["a"].is_array()) throw parse_error("missing 'a' array");

  std::vector<std::pair<long long, long long>> raw;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw parse_error("each edge must be a pair [u, v]");
    raw.push_back({detail::require_int(e[0], "edges"), detail::require_int(e[1], "edges")});
  }
  std::vector<long long> mults;
  if (j.contains("multiplicity")) {
    if (!j["multiplicity"].is_array())
      throw parse_error("'multiplicity' must be an array");
    for (const auto& m : j["multiplicity"]) mults.push_back(detail::require_int(m, "multiplicity"));
    if (mults.size() != raw.size())
      throw parse_error("'multiplicity' length does not match 'edges'");
  }

  Instance inst;
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("n")) {
    long long n = detail::require_int(j["n"], "n");
    if (n < 0 || n > 10'000'000) throw parse_error("'n' out of range");
    for (auto [a, b] : raw) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw parse_error("edge endpoint out of range: (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
      pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    inst.graph = Graph::from_pairs(static_cast<int>(n), pairs, mults);
    if (j.contains("labels")) {
      if (!j["labels"].is_array() || static_cast<long long>(j["labels"].size()) != n)
        throw parse_error("'labels' must list one label per vertex");
      for (const auto& l : j["labels"]) inst.labels.push_back(l.get<std::string>());
    }
  } else {
    // Compact arbitrary labels to dense ids, keeping the mapping.
    std::vector<long long> labels;
    for (auto [a, b] : raw) {
      if (a < 0 || b < 0) throw parse_error("vertex labels must be non-negative");
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id_of = [&](long long x) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
    };
    for (auto [a, b] : raw) pairs.push_back({id_of(a), id_of(b)});
    inst.graph = Graph::from_pairs(static_cast<int>(labels.size()), pairs, mults);
    bool identity = true;
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != static_cast<long long>(i)) identity = false;
    if (!identity)
      for (long long l : labels) inst.labels.push_back(std::to_string(l));
  }

  std::vector<long long> s, a;
  for (const auto& x : j["s"]) s.push_back(detail::require_int(x, "s"));
  for (const auto& x : j["a"]) a.push_back(detail::require_int(x, "a"));
  inst.spec = StarSpec::normalized(s, a, &inst.spec_normalized);
  return inst;
}

// Plain edge-list text: one "u v" pair per line, '#' starts a comment. The
// star spec is supplied separately (CLI flags). Labels may be sparse.
inline Instance load_instance_edgelist(const std::string& text,
                                       const std::vector<long long>& s,
                                       const std::vector<long long>& a) {
  std::vector<std::pair<long long, long long>> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw parse_error("line " + std::to_string(lineno) + ": expected two vertex ids");
    if (u < 0 || v < 0)
      throw parse_error("line " + std::to_string(lineno) + ": vertex labels must be non-negative");
    raw.push_back({u, v});
  }
  std::vector<long long> labels;
  for (auto [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto id_of = [&](long long x) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  std::vector<std::pair<int, int>> pairs;
  for (auto [u, v] : raw) pairs.push_back({id_of(u), id_of(v)});
  Instance inst;
  inst.graph = Graph::from_pairs(static_cast<int>(labels.size()), pairs);
  bool identity = true;
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<long long>(i)) identity = false;
  if (!identity)
    for (long long l : labels) inst.labels.push_back(std::to_string(l));
  inst.spec = StarSpec::normalized(s, a, &inst.spec_normalized);
  return inst;
}

// Dispatches on the first non-space byte: '{' means JSON.
inline Instance load_instance(const std::string& text,
                              const std::vector<long long>& cli_s = {},
                              const std::vector<long long>& cli_a = {}) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return load_instance_json(text);
  if (cli_s.empty()) throw parse_error("edge-list input requires a spec (--s/--a flags)");
  return load_instance_edgelist(text, cli_s, cli_a);
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["n"] = inst.graph.n;
  nlohmann::json edges = nlohmann::json::array();
  bool all_simple = true;
  nlohmann::json mult = nlohmann::json::array();
  for (const Edge& e : inst.graph.edges) {
    edges.push_back({e.u, e.v});
    mult.push_back(e.mult);
    if (e.mult != 1) all_simple = false;
  }
  j["edges"] = edges;
  if (!all_simple) j["multiplicity"] = mult;
  j["s"] = inst.spec.lengths;
  j["a"] = inst.spec.counts;
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  return j;
}

// Canonical serialization: load(dump(load(x))) == load(x), byte-identical
// across runs.
inline std::string dump_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline nlohmann::json decomposition_to_json(const StarDecomposition& dec) {
  nlohmann::json stars = nlohmann::json::array();
  for (const Star& s : dec.stars) {
    nlohmann::json star;
    star["center"] = s.center;
    star["leaves"] = s.leaves;
    stars.push_back(star);
  }
  nlohmann::json j;
  j["stars"] = stars;
  return j;
}

inline std::string dump_decomposition(const StarDecomposition& dec) {
  return decomposition_to_json(dec).dump(2) + "\n";
}

inline StarDecomposition load_decomposition(const std::string& text) {
  nlohmann::json j = detail::parse_json(text);
  // Solve reports nest the decomposition under "witness"; accept those too.
  if (j.is_object() && j.contains("witness") && j["witness"].is_object()) j = j["witness"];
  if (!j.is_object() || !j.contains("stars") || !j["stars"].is_array())
    throw parse_error("decomposition must be an object with a 'stars' array");
  StarDecomposition dec;
  for (const auto& sj : j["stars"]) {
    if (!sj.is_object() || !sj.contains("center") || !sj.contains("leaves"))
      throw parse_error("each star needs 'center' and 'leaves'");
    Star s;
    s.center = static_cast<int>(detail::require_int(sj["center"], "center"));
    for (const auto& l : sj["leaves"])
      s.leaves.push_back(static_cast<int>(detail::require_int(l, "leaves")));
    dec.stars.push_back(std::move(s));
  }
  return dec;
}

inline std::string dump_report(const SolveReport& report, const Instance* inst = nullptr) {
  nlohmann::json j;
  j["answer"] = answer_name(report.answer);
  j["algorithm"] = report.algorithm;
  if (!report.reason.empty()) j["reason"] = report.reason;
  if (report.witness) j["witness"] = decomposition_to_json(*report.witness);
  nlohmann::json stats;
  stats["nodes"] = report.stats.nodes;
  stats["augmentations"] = report.stats.augmentations;
  stats["millis"] = report.stats.millis;
  j["stats"] = stats;
  if (inst) {
    if (inst->spec_normalized) j["normalized"] = true;
    if (!inst->labels.empty()) j["labels"] = inst->labels;
  }
  return j.dump(2) + "\n";
}

// Graph-only input for commands that ignore the spec: an instance JSON (spec
// optional) or plain edge-list text.
inline Graph load_graph(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') {
    nlohmann::json j = detail::parse_json(text);
    if (j.contains("s") && j.contains("a")) return load_instance_json(text).graph;
    nlohmann::json patched = j;
    patched["s"] = {1};
    patched["a"] = {1};
    return load_instance_json(patched.dump()).graph;
  }
  return load_instance_edgelist(text, {1}, {1}).graph;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file: " + path);
  out << data;
}

}  // namespace stardec
