#include "oscopt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oscopt/errors.hpp"
#include "oscopt/solve.hpp"

namespace oscopt::io {

namespace {

using nlohmann::json;

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '%' || c == '#';
  }
  return true;  // blank
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ValidationError("write failed: " + path);
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> m)) {
        throw ValidationError("line " + std::to_string(line_no) + ": expected header \"n m\"");
      }
      std::string extra;
      if (fields >> extra) {
        throw ValidationError("line " + std::to_string(line_no) + ": trailing tokens in header");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }
    std::int64_t i = 0, j = 0;
    double w = 0.0;
    if (!(fields >> i >> j >> w)) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected \"i j w\"");
    }
    std::string extra;
    if (fields >> extra) {
      throw ValidationError("line " + std::to_string(line_no) + ": trailing tokens");
    }
    if (edges.size() == m) {
      throw ValidationError("line " + std::to_string(line_no) + ": more edges than the header's " +
                            std::to_string(m));
    }
    if (i < 1 || j < 1) {
      throw ValidationError("line " + std::to_string(line_no) + ": node indices are 1-based");
    }
    if (w == 0.0) {
      throw ValidationError("line " + std::to_string(line_no) + ": zero edge weight");
    }
    edges.push_back({static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1),
                     std::fabs(w)});
  }
  if (!have_header) throw ValidationError("missing header \"n m\"");
  if (edges.size() != m) {
    throw ValidationError("edge count mismatch: header says " + std::to_string(m) + ", file has " +
                          std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<std::uint32_t>(n), std::move(edges));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("invalid edge list: ") + e.what());
  }
}

Graph load_edge_list(const std::string& path) { return parse_edge_list(read_file(path)); }

std::vector<std::vector<double>> parse_distance_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::vector<double> row;
    std::string cell;
    std::istringstream cells(line);
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument("trailing");
        row.push_back(v);
      } catch (const std::exception&) {
        throw ValidationError("line " + std::to_string(line_no) + ": bad number \"" + cell + "\"");
      }
    }
    if (row.empty()) {
      throw ValidationError("line " + std::to_string(line_no) + ": empty row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("empty distance matrix");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("ragged distance matrix: row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
  }
  validate_distance_matrix(rows);
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 0.0;  // clamp 1e-9 noise
  return rows;
}

std::vector<std::vector<double>> load_distance_matrix(const std::string& path) {
  return parse_distance_matrix(read_file(path));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << fmt_double(e.w) << '\n';
  }
  return out.str();
}

std::string serialize_result(const ResultRecord& r) {
  json doc;
  doc["problem"] = r.problem;
  doc["instance"] = r.instance;
  doc["n"] = r.n;
  doc["m"] = r.m;
  json params;
  params["k"] = r.k;
  params["sigma"] = r.sigma;
  params["dt"] = r.dt;
  params["cycles"] = r.cycles;
  params["c1_start"] = r.c1_start;
  params["anneal_a"] = r.anneal_a;
  params["c_sync"] = r.c_sync;
  params["c2"] = r.c2;
  params["seed"] = r.seed;
  params["restarts"] = r.restarts;
  params["weighted"] = r.weighted;
  doc["params"] = params;
  json best;
  best["score"] = r.best_score;
  best["valid"] = r.best_valid;
  best["discreteness"] = r.best_discreteness;
  best["energy_start"] = r.energy_start;
  best["energy_end"] = r.energy_end;
  best["assignment"] = r.best_labels;
  doc["best"] = best;
  json trials = json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"seed", t.seed},
                      {"score", t.score},
                      {"valid", t.valid},
                      {"discreteness", t.discreteness},
                      {"energy_start", t.energy_start},
                      {"energy_end", t.energy_end}});
  }
  doc["trials"] = trials;
  doc["timestamp"] = r.timestamp;
  return doc.dump(2) + "\n";
}

ResultRecord deserialize_result(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("bad result file: ") + e.what());
  }
  try {
    ResultRecord r;
    r.problem = doc.at("problem").get<std::string>();
    r.instance = doc.at("instance").get<std::string>();
    r.n = doc.at("n").get<std::uint32_t>();
    r.m = doc.at("m").get<std::uint64_t>();
    const auto& params = doc.at("params");
    r.k = params.at("k").get<int>();
    r.sigma = params.at("sigma").get<double>();
    r.dt = params.at("dt").get<double>();
    r.cycles = params.at("cycles").get<double>();
    r.c1_start = params.at("c1_start").get<double>();
    r.anneal_a = params.at("anneal_a").get<double>();
    r.c_sync = params.at("c_sync").get<double>();
    r.c2 = params.at("c2").get<double>();
    r.seed = params.at("seed").get<std::uint64_t>();
    r.restarts = params.at("restarts").get<int>();
    r.weighted = params.at("weighted").get<bool>();
    const auto& best = doc.at("best");
    r.best_score = best.at("score").get<double>();
    r.best_valid = best.at("valid").get<bool>();
    r.best_discreteness = best.at("discreteness").get<double>();
    r.energy_start = best.at("energy_start").get<double>();
    r.energy_end = best.at("energy_end").get<double>();
    r.best_labels = best.at("assignment").get<std::vector<int>>();
    for (const auto& t : doc.at("trials")) {
      r.trials.push_back({t.at("seed").get<std::uint64_t>(), t.at("score").get<double>(),
                          t.at("valid").get<bool>(), t.at("discreteness").get<double>(),
                          t.at("energy_start").get<double>(), t.at("energy_end").get<double>()});
    }
    r.timestamp = doc.at("timestamp").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad result file: ") + e.what());
  }
}

void write_result(const ResultRecord& record, const std::string& path) {
  write_file(path, serialize_result(record));
}

ResultRecord read_result(const std::string& path) { return deserialize_result(read_file(path)); }

std::string format_trajectory(const RunResult& run, const Schedule& sched) {
  std::ostringstream out;
  const bool with_phases = !run.phase_trace.empty();
  out << 't';
  if (with_phases) {
    for (std::size_t i = 0; i < run.phase_trace.front().second.size(); ++i) out << ",phi_" << i;
  }
  out << ",energy,C1\n";
  for (std::size_t row = 0; row < run.energy_trace.size(); ++row) {
    const auto [t, e] = run.energy_trace[row];
    out << fmt_double(t);
    if (with_phases) {
      for (double p : run.phase_trace[row].second) out << ',' << fmt_double(p);
    }
    out << ',' << fmt_double(e) << ',' << fmt_double(sched.c1_at(t)) << '\n';
  }
  return out.str();
}

void write_trajectory(const RunResult& run, const Schedule& sched, const std::string& path) {
  write_file(path, format_trajectory(run, sched));
}

}  // namespace oscopt::io
