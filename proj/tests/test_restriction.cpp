#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sylres/errors.hpp"
#include "sylres/restriction.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace sylres;

namespace {

constexpr std::size_t kBudget = std::size_t(1) << 20;

std::map<std::string, Int> as_map(const MultiplicityReport& r) {
  return {r.multiplicities.begin(), r.multiplicities.end()};
}

Int mult_sum(const MultiplicityReport& r) {
  Int s = 0;
  for (const auto& [label, m] : r.multiplicities) s += m;
  return s;
}

}  // namespace

TEST_CASE("hook of four against the full tower") {
  RestrictionEngine engine(kBudget);
  const MultiplicityReport r =
      engine.restrict_linear_multiplicities(Partition::parse("3,1"), 4, 2, Ambient::P,
                                            CharKind::chi);
  CHECK(r.group == "P_4");
  CHECK(r.degree == 3);
  CHECK(as_map(r) ==
        std::map<std::string, Int>{{"00", 0}, {"01", 1}, {"10", 0}, {"11", 0}});
  CHECK(r.distinct_count == 1);
  CHECK(r.residual_degree == 2);
  CHECK(r.multiplicity_of("01") == 1);
  CHECK_THROWS_WITH(r.multiplicity_of("xx"), "unknown label: xx");
}

TEST_CASE("square shape against the full tower") {
  RestrictionEngine engine(kBudget);
  const MultiplicityReport r =
      engine.restrict_linear_multiplicities(Partition::parse("2,2"), 4, 2, Ambient::P,
                                            CharKind::chi);
  CHECK(as_map(r) ==
        std::map<std::string, Int>{{"00", 1}, {"01", 0}, {"10", 1}, {"11", 0}});
  CHECK(r.distinct_count == 2);
  CHECK(r.residual_degree == 0);
}

TEST_CASE("square shape against the even part") {
  RestrictionEngine engine(kBudget);
  const MultiplicityReport r =
      engine.restrict_linear_multiplicities(Partition::parse("2,2"), 4, 2, Ambient::Q,
                                            CharKind::chi);
  CHECK(r.group == "Q_4");
  CHECK(r.multiplicity_of("q00") == 2);
  CHECK(mult_sum(r) == 2);
  CHECK(r.distinct_count == 1);
  CHECK(r.residual_degree == 0);
}

TEST_CASE("near hook of five against the even part") {
  RestrictionEngine engine(kBudget);
  const MultiplicityReport r =
      engine.restrict_linear_multiplicities(Partition::parse("4,1"), 5, 2, Ambient::Q,
                                            CharKind::phi);
  CHECK(r.group == "Q_5");
  CHECK(r.character == "phi");
  CHECK(r.degree == 4);
  CHECK(as_map(r) ==
        std::map<std::string, Int>{{"q00", 1}, {"q01", 1}, {"q02", 1}, {"q03", 1}});
  CHECK(r.distinct_count == 4);
  CHECK(r.residual_degree == 0);
}

TEST_CASE("split constituents for an odd prime") {
  RestrictionEngine engine(kBudget);
  // 2,2 restricted to the alternating group of four points: the split
  // constituents are the two nontrivial linear characters of C_3
  const MultiplicityReport plus =
      engine.restrict_linear_multiplicities(Partition::parse("2,2"), 4, 3, Ambient::Q,
                                            CharKind::phi_plus);
  CHECK(plus.degree == 1);
  CHECK(as_map(plus) == std::map<std::string, Int>{{"0|-", 0}, {"1|-", 1}, {"2|-", 0}});
  const MultiplicityReport minus =
      engine.restrict_linear_multiplicities(Partition::parse("2,2"), 4, 3, Ambient::Q,
                                            CharKind::phi_minus);
  CHECK(as_map(minus) == std::map<std::string, Int>{{"0|-", 0}, {"1|-", 0}, {"2|-", 1}});
}

TEST_CASE("split constituents with an irrational character value") {
  RestrictionEngine engine(kBudget);
  // 3,1,1 on five points: the constituents take golden ratio values on the
  // split five-cycle classes, and the sqrt(5) contributions fold away
  const MultiplicityReport plus =
      engine.restrict_linear_multiplicities(Partition::parse("3,1,1"), 5, 5, Ambient::Q,
                                            CharKind::phi_plus);
  CHECK(plus.degree == 3);
  CHECK(as_map(plus) == std::map<std::string, Int>{
                            {"0", 1}, {"1", 1}, {"2", 0}, {"3", 0}, {"4", 1}});
  const MultiplicityReport minus =
      engine.restrict_linear_multiplicities(Partition::parse("3,1,1"), 5, 5, Ambient::Q,
                                            CharKind::phi_minus);
  CHECK(as_map(minus) == std::map<std::string, Int>{
                             {"0", 1}, {"1", 0}, {"2", 1}, {"3", 1}, {"4", 0}});
}

TEST_CASE("split constituents agree for two as the prime") {
  // no two-element of the tower has odd distinct cycle type, so the two
  // constituents restrict identically
  RestrictionEngine engine(kBudget);
  for (const Partition& lam : {Partition::parse("2,2"), Partition::parse("3,2,1")}) {
    const int n = lam.n();
    const MultiplicityReport plus =
        engine.restrict_linear_multiplicities(lam, n, 2, Ambient::Q, CharKind::phi_plus);
    const MultiplicityReport minus =
        engine.restrict_linear_multiplicities(lam, n, 2, Ambient::Q, CharKind::phi_minus);
    CHECK(as_map(plus) == as_map(minus));
  }
}

TEST_CASE("kind validation") {
  RestrictionEngine engine(kBudget);
  CHECK_THROWS_WITH(engine.restrict_linear_multiplicities(Partition::parse("3,1"), 4, 2,
                                                          Ambient::P, CharKind::phi),
                    "phi lives on the even part; use group Q");
  CHECK_THROWS_WITH(engine.restrict_linear_multiplicities(Partition::parse("3,1"), 4, 2,
                                                          Ambient::Q, CharKind::phi_plus),
                    "not self-conjugate");
  CHECK_THROWS_WITH(engine.restrict_linear_multiplicities(Partition::parse("2,2"), 4, 2,
                                                          Ambient::Q, CharKind::phi),
                    "self-conjugate shape splits; pick phi+ or phi-");
  CHECK_THROWS_WITH(engine.restrict_linear_multiplicities(Partition::parse("1"), 1, 2,
                                                          Ambient::Q, CharKind::phi_plus),
                    "parameters outside range");
  CHECK_THROWS_AS(engine.restrict_linear_multiplicities(Partition::parse("3,1"), 5, 2,
                                                        Ambient::P, CharKind::chi),
                  std::invalid_argument);
}

TEST_CASE("degree accounting and caching") {
  RestrictionEngine engine(kBudget);
  const AuditCounters before = engine.audit();
  const MultiplicityReport r1 =
      engine.restrict_linear_multiplicities(Partition::parse("4,2"), 6, 2, Ambient::P,
                                            CharKind::chi);
  CHECK(Int(r1.residual_degree) == r1.degree - mult_sum(r1));
  CHECK(r1.residual_degree >= 0);
  const AuditCounters mid = engine.audit();
  CHECK(mid.reports == before.reports + 1);
  CHECK(mid.degree_checks == before.degree_checks + 1);
  CHECK(mid.integrality_checks == mid.multiplicity_entries);
  // a second identical call is served from the cache
  const MultiplicityReport r2 =
      engine.restrict_linear_multiplicities(Partition::parse("4,2"), 6, 2, Ambient::P,
                                            CharKind::chi);
  CHECK(as_map(r1) == as_map(r2));
  CHECK(engine.audit().reports == mid.reports);
}

TEST_CASE("report serialization") {
  RestrictionEngine engine(kBudget);
  const MultiplicityReport r =
      engine.restrict_linear_multiplicities(Partition::parse("3,1"), 4, 2, Ambient::P,
                                            CharKind::chi);
  const auto j = r.to_json();
  CHECK(j["group"] == "P_4");
  CHECK(j["n"] == 4);
  CHECK(j["p"] == 2);
  CHECK(j["lambda"] == "3,1");
  CHECK(j["character"] == "chi");
  CHECK(j["degree"] == 3);
  CHECK(j["multiplicities"]["01"] == 1);
  CHECK(j["multiplicities"]["00"] == 0);
  CHECK(j["distinct_count"] == 1);
  CHECK(j["residual_degree"] == 2);
}

TEST_CASE("vanishing statement outcomes") {
  RestrictionEngine engine(kBudget);
  const VerificationOutcome v4 = engine.verify_theorem_a(4, 2);
  CHECK(v4.pass);
  CHECK(v4.vacuous);
  const VerificationOutcome v5 = engine.verify_theorem_a(5, 2);
  CHECK(v5.pass);
  CHECK_FALSE(v5.vacuous);
  const VerificationOutcome v8 = engine.verify_theorem_a(8, 2);
  CHECK(v8.pass);
  CHECK(v8.counterexamples.empty());
  // the sampled index-two cross-check leaves a note behind
  bool noted = false;
  for (const std::string& note : v8.notes)
    if (note.find("frobenius cross-check") != std::string::npos) noted = true;
  CHECK(noted);
  const auto j = v8.to_json();
  CHECK(j["statement"] == "theorem-a");
  CHECK(j["params"]["n"] == 8);
  CHECK(j["pass"] == true);
}

TEST_CASE("hook characters pick out each linear character once") {
  RestrictionEngine engine(kBudget);
  for (int k = 1; k <= 3; ++k) {
    const VerificationOutcome out = engine.verify_f_bijection(k);
    CHECK(out.pass);
    CHECK_FALSE(out.vacuous);
    CHECK(out.notes.size() == std::size_t(1) << k);
  }
}

TEST_CASE("statement battery on small instances") {
  RestrictionEngine engine(kBudget);
  CHECK(engine.verify_two_linears(2).pass);
  CHECK(engine.verify_two_linears(3).pass);
  CHECK(engine.verify_odd_degree(12).pass);
  CHECK(engine.verify_lr_oracle(6).pass);
  CHECK(engine.verify_ecycle_products(8, 4).pass);
  CHECK(engine.verify_gamma_omega(3).pass);
  CHECK(engine.verify_g_lambda(12).pass);
  CHECK(engine.verify_q_descent(6).pass);
  CHECK(engine.verify_nu2_structure(2).pass);
  CHECK(engine.verify_two_power_boundary(2).pass);
  CHECK(engine.verify_odd_p_pipeline(6, 3).pass);
  CHECK(engine.verify_odd_p_pipeline(5, 5).pass);
  CHECK_THROWS_WITH(engine.verify_odd_p_pipeline(6, 2),
                    "odd-p-pipeline requires an odd prime");
}

TEST_CASE("default campaign rows dispatch by statement name") {
  RestrictionEngine engine(kBudget);
  const std::vector<CampaignSpec> suite = default_campaign_suite();
  CHECK(suite.size() == 15);
  std::set<std::string> statements;
  for (const CampaignSpec& spec : suite) statements.insert(spec.statement);
  CHECK(statements.count("theorem-a") == 1);
  CHECK(statements.count("jlms-bijection") == 1);
  CHECK(statements.count("q-descent") == 1);
  // run one small row end to end
  CampaignSpec spec;
  spec.statement = "gamma-omega";
  spec.ks = {1, 2};
  const auto outs = run_campaign(engine, spec);
  REQUIRE(outs.size() == 2);
  CHECK(outs[0].pass);
  CHECK(outs[1].pass);
  CampaignSpec bad;
  bad.statement = "no-such-statement";
  bad.ns = {1};
  CHECK_THROWS_AS(run_campaign(engine, bad), std::invalid_argument);
}

TEST_CASE("worker count does not change the reports") {
  RestrictionEngine serial(kBudget, 1);
  RestrictionEngine parallel(kBudget, 4);
  for (const Partition& lam :
       {Partition::parse("6,2"), Partition::parse("4,3,1"), Partition::parse("5,2,1")}) {
    const MultiplicityReport a =
        serial.restrict_linear_multiplicities(lam, 8, 2, Ambient::P, CharKind::chi);
    const MultiplicityReport b =
        parallel.restrict_linear_multiplicities(lam, 8, 2, Ambient::P, CharKind::chi);
    CHECK(as_map(a) == as_map(b));
    CHECK(a.residual_degree == b.residual_degree);
  }
}

TEST_CASE("budget violations surface as budget errors") {
  RestrictionEngine tiny(64);
  CHECK_THROWS_AS(tiny.restrict_linear_multiplicities(Partition::parse("6,2"), 8, 2,
                                                      Ambient::P, CharKind::chi),
                  BudgetError);
}
