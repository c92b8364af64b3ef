#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbjordan/constructions.hpp"
#include "nbjordan/graph.hpp"
#include "nbjordan/jordan.hpp"
#include "nbjordan/nb_matrices.hpp"

namespace nbj {

using Json = nlohmann::ordered_json;

inline Json coeffs_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline Json profile_json(const FactorProfile& f) {
  return Json{{"poly", coeffs_json(f.factor)},
              {"display", f.display()},
              {"roots", roots_display(f.factor)},
              {"alg_mult", f.multiplicity},
              {"degree", f.degree()},
              {"nullities", f.nullities},
              {"blocks", f.blocks},
              {"defective", f.defective()},
              {"refined", f.refined}};
}

inline Json report_json(const JordanReport& r) {
  Json factors = Json::array(), defective = Json::array();
  for (const auto& f : r.factors) {
    factors.push_back(profile_json(f));
    if (f.defective()) defective.push_back(f.display());
  }
  return Json{{"matrix", r.matrix}, {"dim", r.dim}, {"defective", defective}, {"factors", factors}};
}

inline Json vector_json(const Vector<NfElement>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string("a"));
  return a;
}

/// Chain certificate; "a" denotes the field generator, a root of the factor
/// (or, for a non-monic quadratic, of the recorded field modulus).
inline Json chain_json(const JordanChain& ch, const IntMatrix& m) {
  Json vectors = Json::array();
  for (const auto& v : ch.vectors) vectors.push_back(vector_json(v));
  Json j{{"factor", to_string(ch.factor)}, {"length", ch.length()}};
  j["field_modulus"] = ch.field ? Json(to_string(ch.field->modulus())) : Json(nullptr);
  j["lambda"] = ch.lambda.to_string("a");
  j["vectors"] = vectors;
  j["verified"] = verify_chain(m, ch);
  return j;
}

inline Json structure_json(const Graph& g) {
  const StructureReport s = structure_report(g);
  return Json{{"n", g.n()},
              {"m", g.m()},
              {"connected", s.connected},
              {"min_degree", s.min_degree},
              {"cycle_rank", s.cycle_rank},
              {"bipartite", s.bipartition.has_value()}};
}

inline Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_si());
    rows.push_back(row);
  }
  return rows;
}

/// Certificates for every defective factor of m: a verified chain of the
/// largest block length when the factor has degree <= 2, the exact nullity
/// sequence otherwise.
inline Json certificates_json(const IntMatrix& m, const JordanReport& rep) {
  Json out = Json::array();
  for (const auto* f : rep.defective_factors()) {
    if (f->degree() <= 2 && f->largest_block() > 0) {
      auto ch = extract_chain(m, f->factor, f->largest_block());
      if (!ch) throw StructuralError("no chain of length " + std::to_string(f->largest_block()) + " for " +
                                     f->display());
      Json c = chain_json(*ch, m);
      c["matrix"] = rep.matrix;
      out.push_back(c);
    } else {
      out.push_back(Json{{"matrix", rep.matrix}, {"factor", f->display()}, {"nullities", f->nullities}});
    }
  }
  return out;
}

struct AnalyzeOptions {
  bool K = true, B = false, M = false;
  bool chains = false;
  bool dump_matrices = false;
};

/// Deterministic analysis record for one connected graph.
inline Json analyze(const Graph& g, const AnalyzeOptions& opt) {
  if (!is_connected(g)) throw DomainError("graph is disconnected");
  Json out{{"graph6", encode_graph6(g)}, {"structure", structure_json(g)}};
  Json reports = Json::array(), certs = Json::array(), mats = Json::object();
  auto add = [&](const std::string& label, const IntMatrix& m) {
    const JordanReport rep = jordan_profile(m, RankMode::Exact, label);
    reports.push_back(report_json(rep));
    if (opt.chains)
      for (auto& c : certificates_json(m, rep)) certs.push_back(c);
    if (opt.dump_matrices) mats[label] = int_matrix_json(m);
  };
  if (opt.K) add("K", build_K(g));
  if (opt.B) add("B", build_B(g));
  if (opt.M) {
    if (g.m() < g.n()) throw DomainError("M needs m >= n");
    add("M", build_M(g));
  }
  out["reports"] = reports;
  if (opt.chains) out["certificates"] = certs;
  if (opt.dump_matrices) out["matrices"] = mats;
  return out;
}

inline Json family_json(const FamilyChain& fc) {
  auto labels = [](const std::vector<Vertex>& vs) {
    Json a = Json::array();
    for (Vertex v : vs) a.push_back(v + 1);
    return a;
  };
  Json j{{"family", fc.name}, {"graph6", encode_graph6(fc.graph)}, {"structure", structure_json(fc.graph)}};
  j["certificate"] = chain_json(fc.chain, build_K(fc.graph));
  j["closed_form_verified"] = fc.closed_form_verified;
  if (!fc.note.empty()) j["note"] = fc.note;
  j["gluing_set"] = labels(fc.gluing_set);
  j["zero_support"] = labels(fc.zero_support);
  return j;
}

}  // namespace nbj
