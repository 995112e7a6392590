#pragma once

#include "sylres/characters.hpp"
#include "sylres/sylow.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sylres {

// Which subgroup the restriction lands in: the full Sylow subgroup P_n of
// S_n, or its even part Q_n = P_n cap A_n.  For odd p every p-element is
// even, so Q_n and P_n coincide as groups and differ only in the report
// header.
enum class Ambient { P, Q };

// Which irreducible is being restricted: chi^lam of S_n; phi^lam of A_n
// (lam not self-conjugate, or n < 2); or the two halves phi^lam_{+-} when
// lam is self-conjugate and chi^lam splits.
enum class CharKind { chi, phi, phi_plus, phi_minus };

std::string to_string(Ambient a);
std::string to_string(CharKind k);

// Multiplicity of every linear character of the target group in one
// restricted irreducible.  `multiplicities` lists every label, zeros
// included, in label order; `residual_degree` is the dimension left to
// nonlinear constituents and is always >= 0.
struct MultiplicityReport {
  std::string group;
  int n = 0;
  int p = 2;
  Partition lambda;
  std::string character;
  Int degree = 0;
  std::vector<std::pair<std::string, Int>> multiplicities;
  int distinct_count = 0;
  Int residual_degree = 0;

  const Int& multiplicity_of(const std::string& label) const;
  nlohmann::ordered_json to_json() const;
};

// Outcome of one verification statement instance.  A failing outcome always
// carries at least one counterexample string; `vacuous` marks instances
// whose hypothesis selects nothing (they pass).
struct VerificationOutcome {
  std::string statement;
  nlohmann::ordered_json params;
  bool pass = true;
  bool vacuous = false;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  long long ms = 0;

  nlohmann::ordered_json to_json() const;
};

// Cross-cutting accounting for every report the engine hands out: each
// multiplicity entry passed an exact integrality check, and each report
// passed the degree bound.  Campaign drivers read these to audit a run.
struct AuditCounters {
  long long reports = 0;
  long long multiplicity_entries = 0;
  long long integrality_checks = 0;
  long long degree_checks = 0;
};

class RestrictionEngine {
 public:
  explicit RestrictionEngine(std::size_t budget = std::size_t(1) << 20,
                             int workers = 1);
  ~RestrictionEngine();

  RestrictionEngine(const RestrictionEngine&) = delete;
  RestrictionEngine& operator=(const RestrictionEngine&) = delete;

  // <restriction, theta> for every linear theta of the target group in
  // Frobenius form, computed over cycle-type buckets of the enumerated
  // group.  Throws IntegralityError if any inner product fails to be a
  // nonnegative rational integer or the degree accounting fails, and
  // domain/invalid argument errors on kind/shape mismatches.
  MultiplicityReport restrict_linear_multiplicities(const Partition& lam, int n,
                                                    int p, Ambient ambient,
                                                    CharKind kind);

  // lam |- n with p | deg of the alternating-group constituent: at least p
  // distinct linear characters of Q_n appear in the restriction.
  VerificationOutcome verify_theorem_a(int n, int p);
  // The 2^k hook shapes of n = 2^k hit each linear character of P_n exactly
  // once: every restriction has one distinct constituent and the induced map
  // is a bijection onto all of Lin(P_n).
  VerificationOutcome verify_f_bijection(int k);
  // lam |- 2^k with nu_2(deg) = 1 and a unique Q-linear label: chi^lam
  // restricted to P has exactly two linear constituents, both of
  // multiplicity one, and they restrict to that Q-label.
  VerificationOutcome verify_two_linears(int k);
  // is_odd_degree agrees with nu_2(deg) = 0 for all lam |- n, n <= n_max,
  // and the per-n count matches the binary-digit product.
  VerificationOutcome verify_odd_degree(int n_max = 25);
  // lr_coefficient agrees with the character-theoretic inner product for all
  // |mu| + |nu| <= total_max, plus symmetry and conjugation invariance.
  VerificationOutcome verify_lr_oracle(int total_max = 8);
  // ecycle_products_value agrees with mn_value on every admissible
  // (lam, e, w, gamma) with n <= n_max and 2 <= e <= e_max.
  VerificationOutcome verify_ecycle_products(int n_max = 12, int e_max = 5);
  // The linear characters of P_{2^k} take values +-1 at gamma(2^k) and
  // omega2(2^k), and both centralizers have order exactly 2^k.
  VerificationOutcome verify_gamma_omega(int k);
  // construct_g_lambda yields an even type realizable inside Q_n on which
  // chi^lam vanishes, for every even-degree lam |- n.
  VerificationOutcome verify_g_lambda(int n);
  // Odd p: omega has unimodular linear values, its centralizer order equals
  // |Lin(P_n)|, the theorem-a bound holds, and (small n) an odd element of
  // order p-1 normalizing P_n exists.
  VerificationOutcome verify_odd_p_pipeline(int n, int p);
  // p = 2: every linear constituent of chi^lam on P_n survives restriction
  // to Q_n inside each alternating-group constituent.
  VerificationOutcome verify_q_descent(int n);
  // Hook-length characterization of nu_2(deg) on |lam| = 2^k, the
  // two-hook-shape parametrization of the nu_2 = 1 layer, and its
  // restriction consequences.
  VerificationOutcome verify_nu2_structure(int k);
  // theorem-a at both n = 2^k and n = 2^k + 1, with each candidate tagged by
  // whether 4 divides the symmetric-group degree.
  VerificationOutcome verify_two_power_boundary(int k);

  std::size_t budget() const { return budget_; }
  int workers() const { return workers_; }
  AuditCounters audit() const;

 private:
  struct Session;

  Session& session(int n, int p);
  Session& session_q(int n, int p);  // ensures the even part is built
  MultiplicityReport restrict_impl(Session& s, const Partition& lam,
                                   Ambient ambient, CharKind kind);
  // Shared candidate scan behind theorem-a style statements; returns the
  // number of shapes the hypothesis selected.
  int theorem_a_scan(int n, int p, VerificationOutcome& out, bool tag_nu2,
                     bool frobenius_sample);
  void two_linears_scan(int k, VerificationOutcome& out, int* checked);
  // Multiplicity of the linear character with the given digit vector in
  // chi^lam restricted to P_{2^k}, by the index-two Frobenius recursion
  // (outer products on the base subgroup plus a twisted sum over the odd
  // coset); used only as a cross-check against the bucket route.
  Int frobenius_multiplicity(const Partition& lam, const std::vector<int>& v);

  std::size_t budget_;
  int workers_;
  std::map<std::pair<int, int>, std::unique_ptr<Session>> sessions_;
  std::map<std::tuple<int, int, int, int, Partition>, MultiplicityReport> cache_;
  std::mutex mu_;
  mutable std::mutex audit_mu_;
  AuditCounters audit_;
};

// One row of a verification campaign: a statement name plus the parameter
// axis it ranges over (`ns` for per-n statements and size bounds, `ks` for
// per-k statements).
struct CampaignSpec {
  std::string statement;
  int p = 2;
  std::vector<int> ns;
  std::vector<int> ks;
};

// The stock campaign rows mirroring the shipped guarantees; `verify --all`
// runs exactly these.
std::vector<CampaignSpec> default_campaign_suite();

// Runs one campaign row and returns its outcomes in order.  Throws
// std::invalid_argument for an unknown statement name.
std::vector<VerificationOutcome> run_campaign(RestrictionEngine& engine,
                                              const CampaignSpec& spec);

}  // namespace sylres
