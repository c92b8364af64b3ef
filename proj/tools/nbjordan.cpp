// Command-line front end: analyze, survey, verify, construct, enumerate.
//
// Exit codes: 0 success, 1 input error, 2 domain error, 3 internal or
// theorem failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbjordan/constructions.hpp"
#include "nbjordan/enumerate.hpp"
#include "nbjordan/report.hpp"
#include "nbjordan/survey.hpp"
#include "nbjordan/verify.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kDomainError = 2;
constexpr int kInternalError = 3;

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::string s;
  if (path.empty() || path == "-") {
    while (std::getline(std::cin, s)) lines.push_back(s);
    return lines;
  }
  std::ifstream in(path);
  if (!in) throw nbj::ParseError("cannot open " + path, 0);
  while (std::getline(in, s)) lines.push_back(s);
  return lines;
}

// "2,3" -> {1, 2}
std::vector<nbj::Vertex> parse_labels(const std::string& s) {
  std::vector<nbj::Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1) throw nbj::ParseError("bad vertex label '" + tok + "'", 0);
    out.push_back(v - 1);
  }
  return out;
}

// "1:1,2:1" -> {(0,0), (1,0)}
std::vector<std::pair<nbj::Vertex, nbj::Vertex>> parse_attach(const std::string& s) {
  std::vector<std::pair<nbj::Vertex, nbj::Vertex>> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw nbj::ParseError("attachment '" + tok + "' needs the form g:h", 0);
    const auto a = parse_labels(tok.substr(0, colon)), b = parse_labels(tok.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1) throw nbj::ParseError("bad attachment '" + tok + "'", 0);
    out.emplace_back(a[0], b[0]);
  }
  return out;
}

nbj::Graph graph_arg(const std::string& s) {
  for (const auto& name : nbj::fixture_names())
    if (s == name) return nbj::fixture(name);
  return nbj::named_graph(s);
}

// Chain certificate for the longest block among the defective factors of K.
nbj::Json fixture_certificate(const std::string& name) {
  const nbj::Graph g = nbj::fixture(name);
  const nbj::IntMatrix k = nbj::build_K(g);
  const nbj::JordanReport rep = nbj::jordan_profile(k, nbj::RankMode::Exact, "K");
  nbj::Json j{{"fixture", name}, {"graph6", nbj::encode_graph6(g)}, {"structure", nbj::structure_json(g)}};
  j["profile"] = nbj::report_json(rep);
  j["certificates"] = nbj::certificates_json(k, rep);
  return j;
}

int run_analyze(const std::vector<std::string>& inputs, const std::vector<std::string>& matrices, bool chains,
                bool dump) {
  nbj::AnalyzeOptions opt;
  opt.K = opt.B = opt.M = false;
  for (const auto& m : matrices) {
    if (m == "K" || m == "all") opt.K = true;
    if (m == "B" || m == "all") opt.B = true;
    if (m == "M" || m == "all") opt.M = true;
  }
  opt.chains = chains;
  opt.dump_matrices = dump;
  std::vector<std::string> lines = inputs;
  if (lines.empty() || (lines.size() == 1 && lines[0] == "-")) lines = read_lines("-");
  for (const auto& raw : lines) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::cout << nbj::analyze(graph_arg(line), opt).dump() << '\n';
  }
  return 0;
}

int run_survey(const std::string& path, std::size_t jobs, const std::string& certify, const std::string& matrix,
               const std::string& format, bool stream, const std::string& json_out) {
  nbj::SurveyOptions opt;
  opt.jobs = jobs;
  opt.certify = certify == "always" ? nbj::Certify::Always : nbj::Certify::Defects;
  opt.matrix = matrix == "B" ? nbj::SurveyMatrix::B : nbj::SurveyMatrix::K;
  const nbj::SurveyResult res = nbj::run_survey(read_lines(path), opt);
  for (const auto& [line, msg] : res.errors) std::cerr << "line " << line << ": " << msg << '\n';
  if (stream) std::cout << nbj::survey_stream(res);
  if (format == "json")
    std::cout << nbj::survey_json(res).dump(2) << '\n';
  else
    std::cout << nbj::survey_tsv(res);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << nbj::survey_json(res).dump(2) << '\n';
  }
  std::cerr << "lines " << res.lines << ", filtered " << res.filtered << ", malformed " << res.malformed << '\n';
  return res.malformed > 0 ? kInputError : 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::size_t samples) {
  nbj::VerifyOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  bool ok = true;
  for (const auto& r : nbj::run_verify(suite, opt)) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.checked << " checks, " << r.failed
              << " failed)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    ok = ok && r.passed();
  }
  return ok ? 0 : kInternalError;
}

struct ConstructArgs {
  std::string family, name, g, h, attach, base, at, vertex, y;
};

int run_construct(const ConstructArgs& a) {
  nbj::Json out;
  if (a.family == "bipartite") {
    if (a.g.empty() || a.h.empty()) throw nbj::DomainError("bipartite needs --g and --h");
    const nbj::Graph g4 = graph_arg(a.g), h = graph_arg(a.h);
    std::vector<std::pair<nbj::Vertex, nbj::Vertex>> attach;
    if (!a.attach.empty()) {
      attach = parse_attach(a.attach);
    } else if (h.n() == 1) {
      for (std::size_t v = 0; v < g4.n(); ++v) attach.emplace_back(static_cast<nbj::Vertex>(v), 0);
    } else {
      throw nbj::DomainError("--attach is required when H has more than one vertex");
    }
    out = nbj::family_json(nbj::bipartite_base_family(g4, h, attach));
  } else if (a.family == "glue") {
    if (a.base.empty() || a.h.empty()) throw nbj::DomainError("glue needs --base and --h");
    const nbj::FamilyChain base = nbj::family_chain(a.base);
    const nbj::Graph h = graph_arg(a.h);
    std::vector<nbj::Vertex> x;
    if (!a.vertex.empty()) {
      x = parse_labels(a.vertex);
    } else {
      for (nbj::Vertex i : parse_labels(a.at.empty() ? "1" : a.at)) {
        if (static_cast<std::size_t>(i) >= base.gluing_set.size())
          throw nbj::DomainError("--at " + std::to_string(i + 1) + " exceeds the " +
                                 std::to_string(base.gluing_set.size()) + " legal gluing vertices");
        x.push_back(base.gluing_set[i]);
      }
    }
    std::vector<nbj::Vertex> y;
    if (!a.y.empty()) {
      y = parse_labels(a.y);
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) y.push_back(static_cast<nbj::Vertex>(i));
    }
    const nbj::GluedChain gc = nbj::glue_preserves_chain(base, h, x, y);
    const nbj::IntMatrix k = nbj::build_K(gc.graph);
    out = nbj::Json{{"base", base.name}, {"graph6", nbj::encode_graph6(gc.graph)},
                    {"structure", nbj::structure_json(gc.graph)}};
    out["certificate"] = nbj::chain_json(gc.chain, k);
    out["profile"] = nbj::report_json(nbj::jordan_profile(k, nbj::RankMode::Exact, "K"));
  } else if (a.family == "fixture") {
    if (a.name.empty()) throw nbj::DomainError("fixture needs a name");
    out = fixture_certificate(a.name);
  } else {
    out = nbj::family_json(nbj::family_chain(a.family == "family" ? a.name : a.family));
  }
  std::cout << out.value("graph6", std::string()) << '\n' << out.dump(2) << '\n';
  return 0;
}

int run_enumerate(std::size_t n, bool unicyclic) {
  const auto graphs = unicyclic ? nbj::enumerate_unicyclic(n) : nbj::enumerate_small(n);
  for (const auto& g : graphs) std::cout << nbj::encode_graph6(g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan structure of non-backtracking matrices"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Jordan profile of one graph per input (graph6 or name)");
  std::vector<std::string> inputs;
  std::vector<std::string> matrices{"K"};
  bool chains = false, dump = false;
  analyze->add_option("graphs", inputs, "graph6 strings, fixture or named graphs; stdin if omitted");
  analyze->add_option("--matrix", matrices, "K, B, M or all")->check(CLI::IsMember({"K", "B", "M", "all"}));
  analyze->add_flag("--chains", chains, "emit verified chain certificates for defective factors");
  analyze->add_flag("--dump-matrices", dump, "include the integer matrices");

  auto* survey = app.add_subcommand("survey", "Count defective graphs in a graph6 stream");
  std::string survey_path = "-", certify = "defects", smatrix = "K", format = "tsv", json_out;
  std::size_t jobs = 1;
  bool stream = false;
  survey->add_option("input", survey_path, "graph6 file; stdin if omitted or -");
  survey->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--certify", certify, "exact ranks always, or only to confirm defects")
      ->check(CLI::IsMember({"always", "defects"}));
  survey->add_option("--matrix", smatrix, "count defects of K or of B")->check(CLI::IsMember({"K", "B"}));
  survey->add_option("--format", format, "summary format")->check(CLI::IsMember({"tsv", "json"}));
  survey->add_flag("--stream", stream, "one JSON object per analyzed graph before the summary");
  survey->add_option("--json-out", json_out, "also write the JSON summary to this file");

  auto* verify = app.add_subcommand("verify", "Run a theorem verification suite");
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  if (const char* env = std::getenv("SEED")) seed = std::strtoull(env, nullptr, 10);
  verify->add_option("suite", suite, "ihara, decomposition, jordan-equality, unicyclic, torres, twins, gluing, all")
      ->required();
  verify->add_option("--seed", seed, "random seed (SEED in the environment is equivalent)");
  verify->add_option("--samples", samples, "random graphs added to the exhaustive corpus");

  auto* construct = app.add_subcommand("construct", "Build a defective family member with its certificate");
  ConstructArgs ca;
  construct->set_help_flag("--help", "Print this help message and exit");
  construct->add_option("family", ca.family, "bipartite, glue, fixture, or a base family name")->required();
  construct->add_option("name", ca.name, "fixture or family name");
  construct->add_option("--g", ca.g, "4-regular bipartite graph (bipartite)");
  construct->add_option("--h", ca.h, "graph to attach or glue");
  construct->add_option("--attach", ca.attach, "attachments g:h, 1-based (bipartite)");
  construct->add_option("--base", ca.base, "base family (glue)");
  construct->add_option("--at", ca.at, "positions in the base's legal gluing set, 1-based (glue)");
  construct->add_option("--vertex", ca.vertex, "base vertex labels to glue at, 1-based (glue)");
  construct->add_option("--y", ca.y, "vertex labels of H, 1-based; defaults to 1..k (glue)");

  auto* enumerate = app.add_subcommand("enumerate", "List graphs up to isomorphism as graph6");
  std::size_t en = 0;
  bool unicyclic = false;
  enumerate->add_option("n", en, "number of vertices")->required();
  enumerate->add_flag("--unicyclic", unicyclic, "connected unicyclic graphs instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze) return run_analyze(inputs, matrices, chains, dump);
    if (*survey) return run_survey(survey_path, jobs, certify, smatrix, format, stream, json_out);
    if (*verify) return run_verify(suite, seed, samples);
    if (*construct) return run_construct(ca);
    if (*enumerate) return run_enumerate(en, unicyclic);
  } catch (const nbj::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nbj::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return 0;
}
