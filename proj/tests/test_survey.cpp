#include <catch_amalgamated.hpp>

#include "nbjordan/enumerate.hpp"
#include "nbjordan/report.hpp"
#include "nbjordan/survey.hpp"
#include "nbjordan/verify.hpp"

using namespace nbj;

namespace {

std::vector<std::string> lines_for(std::size_t n) {
  std::vector<std::string> out;
  for (const auto& g : enumerate_small(n)) out.push_back(encode_graph6(g));
  return out;
}

}  // namespace

TEST_CASE("empty stream", "[survey]") {
  const SurveyResult r = run_survey({}, {});
  CHECK(r.rows.empty());
  CHECK(r.malformed == 0);
  CHECK(survey_tsv(r) == "n\ttotal\tdefective\tper_factor\tlarge_blocks\n");
}

TEST_CASE("filtering and malformed lines", "[survey]") {
  const std::vector<std::string> lines{"Bw", "", "not graph6!", "A_", "C]", "Bw\r"};
  const SurveyResult r = run_survey(lines, {});
  CHECK(r.lines == 5);
  CHECK(r.malformed == 1);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].first == 3);
  CHECK(r.filtered == 1);  // K2
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].n == 3);
  CHECK(r.rows[0].total == 2);
  CHECK(r.rows[0].defective == 2);  // the triangle, twice
  CHECK(r.rows[1].n == 4);
  CHECK(r.rows[1].per_factor.at("x+1") == 1);  // C4 is defective at both 1 and -1
  CHECK(r.rows[1].per_factor.at("x-1") == 1);
  CHECK(r.rows[1].defective == 1);
}

TEST_CASE("worker count does not change the output", "[survey][property]") {
  const auto lines = lines_for(6);
  SurveyOptions one, four;
  four.jobs = 4;
  const SurveyResult a = run_survey(lines, one), b = run_survey(lines, four);
  CHECK(survey_tsv(a) == survey_tsv(b));
  CHECK(survey_json(a).dump() == survey_json(b).dump());
  CHECK(survey_stream(a) == survey_stream(b));
}

TEST_CASE("certification modes agree", "[survey]") {
  const auto lines = lines_for(6);
  SurveyOptions exact;
  exact.certify = Certify::Always;
  CHECK(survey_tsv(run_survey(lines, exact)) == survey_tsv(run_survey(lines, {})));
}

TEST_CASE("K and B counts differ by the cycle alone", "[survey]") {
  // C_n is the only unicyclic graph with minimum degree 2; it is defective
  // for K and not for B, and every other graph has matching verdicts.
  for (std::size_t n = 3; n <= 6; ++n) {
    const SurveyResult k = run_survey(lines_for(n), {});
    SurveyOptions bopt;
    bopt.matrix = SurveyMatrix::B;
    const SurveyResult b = run_survey(lines_for(n), bopt);
    REQUIRE(k.rows.size() == 1);
    REQUIRE(b.rows.size() == 1);
    CHECK(k.rows[0].defective == b.rows[0].defective + 1);
  }
}

TEST_CASE("analysis record", "[survey][report]") {
  AnalyzeOptions opt;
  opt.chains = true;
  opt.B = true;
  const Json j = analyze(fixture("restricted_diamonds"), opt);
  CHECK(j["reports"][0]["defective"] == Json::array({"x^2+x+2"}));
  CHECK(j["reports"][1]["matrix"] == "B");
  for (const auto& c : j["certificates"]) CHECK(c["verified"] == true);
  CHECK_THROWS_AS(analyze(Graph(3), opt), DomainError);
  // Deterministic output.
  CHECK(analyze(fixture("restricted_diamonds"), opt).dump() == j.dump());
}

TEST_CASE("verify suites pass on a small corpus", "[survey][verify]") {
  VerifyOptions opt;
  opt.samples = 10;
  opt.max_enum_n = 5;
  for (const auto& s : {"ihara", "decomposition", "jordan-equality", "torres", "twins"})
    for (const auto& r : run_verify(s, opt)) CHECK(r.passed());
  CHECK(verify_unicyclic(6).passed());
  CHECK_THROWS_AS(run_verify("nope", opt), DomainError);
}
