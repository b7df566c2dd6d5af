/*
 * Copyright 2026 The gtcent Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef GTCENT_IO_HPP_
#define GTCENT_IO_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtcent/centrality.hpp"
#include "gtcent/errors.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/solution.hpp"

namespace gtcent {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

}  // namespace detail

// Edge-list text: "u v [w]" per line, '#' comments, optional leading
// "%directed" directive, single-token lines declare isolated nodes.
inline Graph parse_graph(const std::string& text, bool force_directed = false) {
  std::istringstream in(text);
  bool directed = force_directed;
  bool seen_content = false;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> ids;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen_edges;
  std::vector<std::pair<int, int>> pending;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(s);
    return it->second;
  };
  struct Raw {
    int u, v;
    double w;
    int line;
  };
  std::vector<Raw> raw;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (tokens[0][0] == '%') {
      if (tokens.size() != 1 || tokens[0] != "%directed" || seen_content) {
        throw InvalidInput(where + "unknown or misplaced directive '" +
                           tokens[0] + "'");
      }
      directed = true;
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens.size() > 3) {
      throw InvalidInput(where + "expected 'u v [w]'");
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      auto parsed = detail::parse_double(tokens[2]);
      if (!parsed) throw InvalidInput(where + "weight is not a number");
      w = *parsed;
      if (!(std::isfinite(w) && w > 0.0)) {
        throw InvalidInput(where + "weight must be positive");
      }
    }
    if (tokens[0] == tokens[1]) {
      throw InvalidInput(where + "self-loop on '" + tokens[0] + "'");
    }
    const int u = intern(tokens[0]);
    const int v = intern(tokens[1]);
    raw.push_back({u, v, w, lineno});
  }
  for (const Raw& r : raw) {
    auto key = std::make_pair(r.u, r.v);
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    if (!seen_edges.insert(key).second) {
      throw InvalidInput("line " + std::to_string(r.line) + ": duplicate edge " +
                         labels[r.u] + " " + labels[r.v]);
    }
    edges.push_back({r.u, r.v, r.w});
  }
  return Graph(static_cast<int>(labels.size()), edges, directed, labels);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path, bool force_directed = false) {
  return parse_graph(read_file(path), force_directed);
}

// "label community_id" lines. A label listed under several ids yields an
// overlapping cover. Community order follows first appearance.
inline CoalitionStructure parse_communities(const std::string& text,
                                            const Graph& g) {
  require(g.num_nodes() <= Coalition::kMaxPlayers,
          "community structures support at most 64 nodes");
  std::istringstream in(text);
  std::map<std::string, int> index;
  CoalitionStructure cs;
  std::vector<int> memberships(static_cast<std::size_t>(g.num_nodes()), 0);
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (tokens.size() != 2) throw InvalidInput(where + "expected 'label community_id'");
    const auto v = g.find(tokens[0]);
    if (!v) throw InvalidInput(where + "unknown node '" + tokens[0] + "'");
    auto [it, fresh] = index.emplace(tokens[1], static_cast<int>(cs.communities.size()));
    if (fresh) cs.communities.emplace_back();
    Coalition& q = cs.communities[it->second];
    if (!q.contains(*v)) {
      q.insert(*v);
      ++memberships[*v];
    }
  }
  for (int m : memberships) {
    if (m > 1) cs.overlapping = true;
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Result documents.

// Rounds to 12 significant digits.
inline double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

struct ScoreEntry {
  std::string label;
  double score = 0.0;
  std::optional<double> std_error;

  bool operator==(const ScoreEntry&) const = default;
};

struct ResultDocument {
  std::string measure;
  std::map<std::string, std::string> params;
  bool directed = false;
  int n = 0;
  std::size_t m = 0;
  std::vector<ScoreEntry> scores;
  std::string method;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  double runtime_ms = 0.0;
  std::vector<std::string> warnings;

  bool operator==(const ResultDocument&) const = default;
};

// Scores sorted by value (descending), ties by label; values rounded to 12
// significant digits.
inline ResultDocument make_document(const Graph& g, const CentralityResult& r,
                                    double runtime_ms = 0.0) {
  require(static_cast<int>(r.scores.size()) == g.num_nodes(),
          "result does not have one score per node");
  ResultDocument doc;
  doc.measure = r.measure;
  doc.params = r.params;
  doc.directed = g.directed();
  doc.n = g.num_nodes();
  doc.m = g.num_edges();
  doc.method = method_name(r.method);
  if (r.method == Method::kMonteCarlo) {
    doc.samples = r.samples;
    doc.seed = r.seed;
  }
  doc.runtime_ms = round12(runtime_ms);
  doc.warnings = r.warnings;
  if (!r.higher_is_better) doc.warnings.push_back("lower score means more central");
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    ScoreEntry e{g.label(v), round12(r.scores[v]), std::nullopt};
    if (!r.std_errors.empty()) e.std_error = round12(r.std_errors[v]);
    doc.scores.push_back(std::move(e));
  }
  std::stable_sort(doc.scores.begin(), doc.scores.end(),
                   [](const ScoreEntry& a, const ScoreEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.label < b.label;
                   });
  return doc;
}

inline nlohmann::ordered_json to_json(const ResultDocument& doc) {
  nlohmann::ordered_json j;
  j["measure"] = doc.measure;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.params) j["params"][k] = v;
  j["directed"] = doc.directed;
  j["n"] = doc.n;
  j["m"] = doc.m;
  auto scores = nlohmann::ordered_json::array();
  for (const auto& e : doc.scores) {
    nlohmann::ordered_json s;
    s["label"] = e.label;
    s["score"] = e.score;
    if (e.std_error) s["stderr"] = *e.std_error;
    scores.push_back(std::move(s));
  }
  j["scores"] = std::move(scores);
  nlohmann::ordered_json meta;
  meta["method"] = doc.method;
  if (doc.samples) meta["samples"] = *doc.samples;
  if (doc.seed) meta["seed"] = *doc.seed;
  meta["runtime_ms"] = doc.runtime_ms;
  meta["warnings"] = doc.warnings;
  j["meta"] = std::move(meta);
  return j;
}

inline ResultDocument document_from_json(const nlohmann::ordered_json& j) {
  ResultDocument doc;
  try {
    doc.measure = j.at("measure").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
      doc.params[k] = v.get<std::string>();
    }
    doc.directed = j.at("directed").get<bool>();
    doc.n = j.at("n").get<int>();
    doc.m = j.at("m").get<std::size_t>();
    for (const auto& s : j.at("scores")) {
      ScoreEntry e;
      e.label = s.at("label").get<std::string>();
      e.score = s.at("score").get<double>();
      if (s.contains("stderr")) e.std_error = s.at("stderr").get<double>();
      doc.scores.push_back(std::move(e));
    }
    const auto& meta = j.at("meta");
    doc.method = meta.at("method").get<std::string>();
    if (meta.contains("samples")) doc.samples = meta.at("samples").get<std::uint64_t>();
    if (meta.contains("seed")) doc.seed = meta.at("seed").get<std::uint64_t>();
    doc.runtime_ms = meta.at("runtime_ms").get<double>();
    doc.warnings = meta.at("warnings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed result document: ") + e.what());
  }
  return doc;
}

inline std::string serialize_json(const ResultDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

inline ResultDocument parse_json(const std::string& text) {
  try {
    return document_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string serialize_csv(const ResultDocument& doc) {
  std::string out = "label,score,stderr\n";
  for (const auto& e : doc.scores) {
    out += e.label + "," + format_number(e.score) + ",";
    if (e.std_error) out += format_number(*e.std_error);
    out += "\n";
  }
  return out;
}

// Parses the CSV form back into (label, score, stderr) rows.
inline std::vector<ScoreEntry> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == "label,score,stderr",
          "missing CSV header");
  std::vector<ScoreEntry> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    require(c1 != std::string::npos && c2 != std::string::npos, "bad CSV row");
    ScoreEntry e;
    e.label = line.substr(0, c1);
    e.score = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
    const std::string se = line.substr(c2 + 1);
    if (!se.empty()) e.std_error = std::strtod(se.c_str(), nullptr);
    rows.push_back(std::move(e));
  }
  return rows;
}

// Writes through a temporary file and renames it into place.
inline void write_file_atomic(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp + "'");
    out << data;
    if (!out) throw InvalidInput("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InvalidInput("cannot rename into '" + path + "'");
  }
}

}  // namespace gtcent

#endif  // GTCENT_IO_HPP_
