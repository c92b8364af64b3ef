#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nbjordan/errors.hpp"
#include "nbjordan/graph.hpp"
#include "nbjordan/jordan.hpp"
#include "nbjordan/nb_matrices.hpp"
#include "nbjordan/report.hpp"

namespace nbj {

enum class SurveyMatrix { K, B };
enum class Certify { Always, Defects };

struct SurveyOptions {
  std::size_t jobs = 1;
  Certify certify = Certify::Defects;
  SurveyMatrix matrix = SurveyMatrix::K;
};

/// Outcome for one input line.
struct GraphOutcome {
  enum Status { Blank, Malformed, Filtered, Analyzed } status = Blank;
  std::string error;
  std::string graph6;
  std::size_t n = 0;
  std::vector<std::string> defective;  // factor strings
  std::vector<std::size_t> blocks;     // largest block per defective factor
};

struct SurveyRow {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t defective = 0;
  std::map<std::string, std::size_t> per_factor;
  std::vector<std::string> large_blocks;  // graphs with a block of size >= 3
};

struct SurveyResult {
  std::vector<SurveyRow> rows;  // ascending n
  std::size_t lines = 0, filtered = 0, malformed = 0;
  std::vector<std::pair<std::size_t, std::string>> errors;  // 1-based line, message
  std::vector<std::pair<std::size_t, GraphOutcome>> analyzed;  // input order
};

/// Profile of the matrix the survey counts. For B, a graph with two or more
/// independent cycles has B similar to diag(K, I, -I), so its defective
/// factors are those of K; unicyclic graphs use B itself.
inline JordanReport survey_profile(const Graph& g, SurveyMatrix which, RankMode mode) {
  if (which == SurveyMatrix::B && g.m() == g.n()) return jordan_profile(build_B(g), mode, "B");
  return jordan_profile(build_K(g), mode, which == SurveyMatrix::B ? "B" : "K");
}

inline GraphOutcome survey_line(const std::string& raw, const SurveyOptions& opt) {
  GraphOutcome out;
  std::string line = raw;
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) line.pop_back();
  if (line.empty()) return out;
  Graph g;
  try {
    g = parse_graph6(line);
  } catch (const ParseError& e) {
    out.status = GraphOutcome::Malformed;
    out.error = e.what();
    return out;
  }
  out.graph6 = line;
  out.n = g.n();
  if (g.n() < 3 || g.min_degree() < 2 || !is_connected(g)) {
    out.status = GraphOutcome::Filtered;
    return out;
  }
  out.status = GraphOutcome::Analyzed;
  const RankMode mode = opt.certify == Certify::Always ? RankMode::Exact : RankMode::ModularConsensus;
  JordanReport rep = survey_profile(g, opt.matrix, mode);
  // Defective verdicts are re-derived with exact ranks before counting.
  if (mode != RankMode::Exact && rep.defective()) rep = survey_profile(g, opt.matrix, RankMode::Exact);
  for (const auto* f : rep.defective_factors()) {
    out.defective.push_back(f->display());
    out.blocks.push_back(f->largest_block());
  }
  return out;
}

/// Analyzes every line with a bounded pool of workers and merges the
/// outcomes in input order, so the result does not depend on `jobs`.
inline SurveyResult run_survey(const std::vector<std::string>& lines, const SurveyOptions& opt) {
  std::vector<GraphOutcome> outcomes(lines.size());
  std::vector<std::exception_ptr> failures(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      try {
        outcomes[i] = survey_line(lines[i], opt);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, lines.size()));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  SurveyResult res;
  std::map<std::size_t, SurveyRow> rows;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    GraphOutcome& o = outcomes[i];
    if (o.status == GraphOutcome::Blank) continue;
    ++res.lines;
    if (o.status == GraphOutcome::Malformed) {
      ++res.malformed;
      res.errors.emplace_back(i + 1, o.error);
      continue;
    }
    if (o.status == GraphOutcome::Filtered) {
      ++res.filtered;
      continue;
    }
    SurveyRow& row = rows[o.n];
    row.n = o.n;
    ++row.total;
    if (!o.defective.empty()) ++row.defective;
    for (const auto& f : o.defective) ++row.per_factor[f];
    if (!o.blocks.empty() && *std::max_element(o.blocks.begin(), o.blocks.end()) >= 3)
      row.large_blocks.push_back(o.graph6);
    res.analyzed.emplace_back(i + 1, std::move(o));
  }
  for (auto& [n, row] : rows) res.rows.push_back(std::move(row));
  return res;
}

inline std::string per_factor_string(const SurveyRow& row) {
  std::string s;
  for (const auto& [f, c] : row.per_factor) s += (s.empty() ? "" : ",") + f + ":" + std::to_string(c);
  return s.empty() ? "-" : s;
}

inline std::string survey_tsv(const SurveyResult& res) {
  std::ostringstream os;
  os << "n\ttotal\tdefective\tper_factor\tlarge_blocks\n";
  for (const auto& r : res.rows)
    os << r.n << '\t' << r.total << '\t' << r.defective << '\t' << per_factor_string(r) << '\t'
       << r.large_blocks.size() << '\n';
  return os.str();
}

inline Json survey_json(const SurveyResult& res) {
  Json rows = Json::array();
  for (const auto& r : res.rows)
    rows.push_back(Json{{"n", r.n},
                        {"total", r.total},
                        {"defective", r.defective},
                        {"per_factor", r.per_factor},
                        {"large_blocks", r.large_blocks}});
  Json errors = Json::array();
  for (const auto& [line, msg] : res.errors) errors.push_back(Json{{"line", line}, {"error", msg}});
  return Json{{"rows", rows},
              {"lines", res.lines},
              {"filtered", res.filtered},
              {"malformed", res.malformed},
              {"errors", errors}};
}

/// One JSON object per analyzed graph, in input order.
inline std::string survey_stream(const SurveyResult& res) {
  std::ostringstream os;
  for (const auto& [line, o] : res.analyzed)
    os << Json{{"line", line}, {"graph6", o.graph6}, {"n", o.n}, {"defective", o.defective}, {"blocks", o.blocks}}
              .dump()
       << '\n';
  return os.str();
}

}  // namespace nbj
