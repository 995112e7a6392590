#include "sylres/restriction.hpp"

#include "sylres/errors.hpp"
#include "sylres/kernels.hpp"
#include "sylres/lr.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace sylres {

namespace {

class Timer {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

long long json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi)
    throw std::overflow_error("value exceeds 64-bit range in JSON output: " + v.str());
  return v.convert_to<long long>();
}

// Strictly decreasing odd parts: the cycle types whose symmetric-group class
// splits under the alternating group, hence the only types where a
// per-element orientation can matter.
bool splitting_type(const CycleType& t) {
  const std::vector<int>& ps = t.parts();
  if (ps.empty()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] % 2 == 0) return false;
    if (i > 0 && ps[i] == ps[i - 1]) return false;
  }
  return true;
}

void add_counterexample(VerificationOutcome& out, const std::string& msg) {
  out.pass = false;
  if (out.counterexamples.size() < 32)
    out.counterexamples.push_back(msg);
  else if (out.counterexamples.size() == 32)
    out.counterexamples.push_back("(further counterexamples suppressed)");
}

CycleType union_type(const CycleType& a, const CycleType& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<int>());
  return CycleType(std::move(parts));
}

CycleType with_cycles(const CycleType& gamma, int e, int w) {
  std::vector<int> extra(static_cast<std::size_t>(w), e);
  return union_type(gamma, CycleType(std::move(extra)));
}

std::string digits_string(const std::vector<int>& v) {
  std::string s;
  for (int d : v) s += static_cast<char>('0' + d);
  return s.empty() ? "-" : s;
}

}  // namespace

std::string to_string(Ambient a) { return a == Ambient::P ? "P" : "Q"; }

std::string to_string(CharKind k) {
  switch (k) {
    case CharKind::chi: return "chi";
    case CharKind::phi: return "phi";
    case CharKind::phi_plus: return "phi+";
    case CharKind::phi_minus: return "phi-";
  }
  return "chi";
}

const Int& MultiplicityReport::multiplicity_of(const std::string& label) const {
  for (const auto& [lab, m] : multiplicities)
    if (lab == label) return m;
  throw std::invalid_argument("unknown label: " + label);
}

nlohmann::ordered_json MultiplicityReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["n"] = n;
  j["p"] = p;
  j["lambda"] = lambda.to_string();
  j["character"] = character;
  j["degree"] = json_int(degree);
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [lab, v] : multiplicities) m[lab] = json_int(v);
  j["multiplicities"] = std::move(m);
  j["distinct_count"] = distinct_count;
  j["residual_degree"] = json_int(residual_degree);
  return j;
}

nlohmann::ordered_json VerificationOutcome::to_json() const {
  nlohmann::ordered_json j;
  j["statement"] = statement;
  j["params"] = params;
  j["pass"] = pass;
  if (vacuous) j["vacuous"] = true;
  j["counterexamples"] = counterexamples;
  if (!notes.empty()) j["notes"] = notes;
  j["ms"] = ms;
  return j;
}

// ---------------------------------------------------------------------------
// Per-(n, p) working set: the enumerated Sylow subgroup, its linear
// characters, and the element list collapsed into class buckets keyed by
// cycle type, character-separating data, and (where it matters) the
// alternating-class orientation.
// ---------------------------------------------------------------------------

struct RestrictionEngine::Session {
  int n;
  int p;
  SylowStructure st;
  EnumeratedGroup P;
  PLinearCharacters lp;

  std::unique_ptr<EnumeratedGroup> Q;     // p = 2 only; for odd p, Q = P
  std::unique_ptr<QLinearCharacters> lq;  // p = 2 only
  std::vector<std::size_t> p_to_q;
  bool q_ready = false;

  struct Bucket {
    CycleType type;
    std::vector<int> aux;  // exponent vector on the P side, {coset} on Q
    int orient = 0;
    long long count = 0;
  };
  std::vector<Bucket> p_buckets;
  std::vector<Bucket> q_buckets;

  Session(int n_, int p_, std::size_t budget, int workers)
      : n(n_),
        p(p_),
        st(SylowStructure::of(n_, p_)),
        P(enumerate_sylow(n_, p_, budget)),
        lp(PLinearCharacters::build(st)) {
    p_buckets = bucketize(P.elements, workers,
                          [this](const Perm& g) { return lp.exponent_vector(g); });
  }

  void ensure_q(std::size_t budget, int workers) {
    if (q_ready) return;
    if (p == 2) {
      Q = std::make_unique<EnumeratedGroup>(even_part(P));
      lq = std::make_unique<QLinearCharacters>(QLinearCharacters::build(*Q, budget));
      p_to_q = restriction_map(lp, *lq);
      q_buckets = bucketize(Q->elements, workers, [this](const Perm& g) {
        return std::vector<int>{lq->coset_of(g)};
      });
    }
    // odd p: every p-element is even, so the even part is the whole group
    // and the P-side structures are reused as they stand.
    q_ready = true;
  }

  template <class AuxFn>
  std::vector<Bucket> bucketize(const std::vector<Perm>& els, int workers, AuxFn&& aux) {
    struct Key {
      std::vector<int> type;
      std::vector<int> aux;
      int orient;
      auto operator<=>(const Key&) const = default;
    };
    auto key_of = [&aux](const Perm& g) {
      CycleType t = g.cycle_type();
      Key k{t.parts(), aux(g), 0};
      if (splitting_type(t)) k.orient = split_orientation(g);
      return k;
    };
    auto counted = bucket_elements_parallel(els, key_of, workers);
    std::vector<Bucket> out;
    out.reserve(counted.size());
    for (const auto& [k, c] : counted)
      out.push_back(Bucket{CycleType(std::vector<int>(k.type)), k.aux, k.orient, c});
    return out;
  }
};

RestrictionEngine::RestrictionEngine(std::size_t budget, int workers)
    : budget_(budget), workers_(workers < 1 ? 1 : workers) {}

RestrictionEngine::~RestrictionEngine() = default;

RestrictionEngine::Session& RestrictionEngine::session(int n, int p) {
  const auto key = std::make_pair(n, p);
  auto it = sessions_.find(key);
  if (it == sessions_.end())
    it = sessions_.emplace(key, std::make_unique<Session>(n, p, budget_, workers_)).first;
  return *it->second;
}

RestrictionEngine::Session& RestrictionEngine::session_q(int n, int p) {
  Session& s = session(n, p);
  s.ensure_q(budget_, workers_);
  return s;
}

MultiplicityReport RestrictionEngine::restrict_impl(Session& s, const Partition& lam,
                                                    Ambient ambient, CharKind kind) {
  const int n = s.n;
  const int p = s.p;
  if (lam.n() != n)
    throw std::invalid_argument("shape has size " + std::to_string(lam.n()) +
                                ", expected " + std::to_string(n));
  const bool selfc = lam.is_self_conjugate();
  if (kind != CharKind::chi && ambient == Ambient::P)
    throw std::invalid_argument("phi lives on the even part; use group Q");
  const bool half = kind == CharKind::phi_plus || kind == CharKind::phi_minus;
  if (half) {
    if (!selfc) throw std::domain_error("not self-conjugate");
    if (n < 2) throw std::domain_error("parameters outside range");
  }
  if (kind == CharKind::phi && selfc && n >= 2)
    throw std::invalid_argument("self-conjugate shape splits; pick phi+ or phi-");

  const auto cache_key = std::make_tuple(n, p, static_cast<int>(ambient),
                                         static_cast<int>(kind), lam);
  if (auto hit = cache_.find(cache_key); hit != cache_.end()) return hit->second;

  const Int deg = degree(lam);
  Int char_deg = deg;
  if (half) {
    if (deg % 2 != 0) throw std::logic_error("split constituent of odd total degree");
    char_deg = deg / 2;
  }

  const bool q_side = ambient == Ambient::Q && p == 2;
  const std::vector<Session::Bucket>& buckets = q_side ? s.q_buckets : s.p_buckets;
  const std::size_t nchars = q_side ? s.lq->count() : s.lp.count();
  const int order = q_side ? static_cast<int>(s.lq->modulus()) : p;
  const Int gsize(q_side ? s.Q->size() : s.P.size());

  SplitClassData sc;
  CycleType sct;
  if (half) {
    sc = split_class(lam);
    sct = sc.type();
  }
  const int sgn = kind == CharKind::phi_minus ? -1 : 1;

  // Per-bucket character value, as rational part + coefficient of
  // sqrt(sc.radicand).  Everything except the one splitting class of a split
  // constituent is plain mn_value (halved for phi+-).
  std::vector<Rat> brat(buckets.size()), bsurd(buckets.size());
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const Session::Bucket& b = buckets[i];
    if (half && b.orient != 0 && b.type == sct) {
      brat[i] = Rat(sc.epsilon, 2);
      bsurd[i] = Rat(sgn * b.orient, 2);
    } else {
      brat[i] = Rat(mn_value(lam, b.type));
      if (half) brat[i] /= 2;
    }
  }

  MultiplicityReport rep;
  rep.group = (ambient == Ambient::Q ? "Q_" : "P_") + std::to_string(n);
  rep.n = n;
  rep.p = p;
  rep.lambda = lam;
  rep.character = to_string(kind);
  rep.degree = char_deg;

  Int mult_sum = 0;
  for (std::size_t ci = 0; ci < nchars; ++ci) {
    std::vector<Rat> racc(static_cast<std::size_t>(order));
    std::vector<Rat> sacc(static_cast<std::size_t>(order));
    for (std::size_t bi = 0; bi < buckets.size(); ++bi) {
      const Session::Bucket& b = buckets[bi];
      const int e = q_side ? s.lq->exponent_at_coset(ci, b.aux[0])
                           : s.lp.pairing(ci, b.aux);
      const int r = (order - e % order) % order;
      if (!brat[bi].is_zero()) racc[r] += brat[bi] * b.count;
      if (!bsurd[bi].is_zero()) sacc[r] += bsurd[bi] * b.count;
    }
    AlgebraicValue total = AlgebraicValue::zero();
    for (int r = 0; r < order; ++r) {
      if (!racc[r].is_zero()) {
        AlgebraicValue term = AlgebraicValue::root_of_unity(order, r);
        term *= racc[r];
        total += term;
      }
      if (!sacc[r].is_zero())
        total += AlgebraicValue::surd(sacc[r], sc.radicand) *
                 AlgebraicValue::root_of_unity(order, r);
    }
    total *= Rat(Int(1), gsize);
    const std::string& label = q_side ? s.lq->label(ci) : s.lp.label(ci);
    Int m;
    if (!total.is_rational_integer(&m) || m < 0)
      throw IntegralityError("multiplicity is not a nonnegative integer: group=" +
                             rep.group + " lambda=" + lam.to_string() + " character=" +
                             rep.character + " label=" + label + " value=" +
                             total.to_string());
    rep.multiplicities.emplace_back(label, m);
    if (m > 0) ++rep.distinct_count;
    mult_sum += m;
  }
  rep.residual_degree = char_deg - mult_sum;
  if (rep.residual_degree < 0)
    throw IntegralityError("degree accounting failed: group=" + rep.group +
                           " lambda=" + lam.to_string() + " character=" + rep.character +
                           " linear part " + mult_sum.str() + " exceeds degree " +
                           char_deg.str());

  {
    std::lock_guard<std::mutex> lock(audit_mu_);
    ++audit_.reports;
    audit_.multiplicity_entries += static_cast<long long>(nchars);
    audit_.integrality_checks += static_cast<long long>(nchars);
    ++audit_.degree_checks;
  }
  cache_.emplace(cache_key, rep);
  return rep;
}

MultiplicityReport RestrictionEngine::restrict_linear_multiplicities(
    const Partition& lam, int n, int p, Ambient ambient, CharKind kind) {
  std::lock_guard<std::mutex> lock(mu_);
  Session& s = ambient == Ambient::Q ? session_q(n, p) : session(n, p);
  return restrict_impl(s, lam, ambient, kind);
}

AuditCounters RestrictionEngine::audit() const {
  std::lock_guard<std::mutex> lock(audit_mu_);
  return audit_;
}

// ---------------------------------------------------------------------------
// Index-two Frobenius recursion, used only to cross-check the bucket route.
// For n = 2^k the base subgroup is P_q x P_q with q = 2^(k-1); the
// multiplicity of the linear character with digit vector v splits into the
// outer-product part over that subgroup and a twisted average over the odd
// coset, which collapses to a single sum over P_q against doubled cycle
// types.
// ---------------------------------------------------------------------------

Int RestrictionEngine::frobenius_multiplicity(const Partition& lam,
                                              const std::vector<int>& v) {
  const int k = static_cast<int>(v.size());
  if (k == 0) {
    if (!(lam == Partition(std::vector<int>{1})))
      throw std::logic_error("recursion base expects the unit shape");
    return Int(1);
  }
  const int q = 1 << (k - 1);
  const std::vector<int> vp(v.begin(), v.end() - 1);
  const int vk = v.back();

  Rat acc = 0;
  for (const auto& [pair, c] : restriction_pairs(lam, q))
    acc += Rat(c) *
           Rat(frobenius_multiplicity(pair.first, vp) *
               frobenius_multiplicity(pair.second, vp));

  const EnumeratedGroup& pq = session(q, 2).P;
  Rat coset = 0;
  for (const Perm& u : pq.elements) {
    const std::vector<int> e = shift_sums(wreath_coords(u, 2));
    int dot = 0;
    for (std::size_t j = 0; j < vp.size(); ++j) dot += vp[j] * e[j];
    CycleType tu = u.cycle_type();
    std::vector<int> doubled;
    doubled.reserve(tu.parts().size());
    for (int part : tu.parts()) doubled.push_back(2 * part);
    const Int val = mn_value(lam, CycleType(std::move(doubled)));
    if (dot % 2 != 0)
      coset -= Rat(val);
    else
      coset += Rat(val);
  }
  coset /= static_cast<long long>(pq.size());
  if (vk % 2 != 0) coset = -coset;
  acc = (acc + coset) / 2;
  if (boost::multiprecision::denominator(acc) != 1)
    throw IntegralityError("index-two recursion produced a non-integer for lambda=" +
                           lam.to_string());
  return boost::multiprecision::numerator(acc);
}

// ---------------------------------------------------------------------------
// Verification statements.
// ---------------------------------------------------------------------------

int RestrictionEngine::theorem_a_scan(int n, int p, VerificationOutcome& out,
                                      bool tag_nu2, bool frobenius_sample) {
  Session& s = session_q(n, p);
  const std::string where = "n=" + std::to_string(n) + " p=" + std::to_string(p);
  int candidates = 0;
  std::set<Partition> seen;
  for (const Partition& lam : partitions_of(n)) {
    const Partition lc = lam.conjugate();
    const Partition rep = std::max(lam, lc);
    if (!seen.insert(rep).second) continue;
    const bool split = lam == lc && n >= 2;
    const Int deg = degree(rep);
    const Int phi_deg = split ? deg / 2 : deg;
    if (phi_deg % p != 0) continue;
    ++candidates;
    const std::vector<CharKind> kinds =
        split ? std::vector<CharKind>{CharKind::phi_plus, CharKind::phi_minus}
              : std::vector<CharKind>{CharKind::phi};
    std::vector<int> distinct;
    for (CharKind kind : kinds) {
      const MultiplicityReport r = restrict_impl(s, rep, Ambient::Q, kind);
      distinct.push_back(r.distinct_count);
      if (r.distinct_count < p)
        add_counterexample(out, where + " lambda=" + rep.to_string() + " character=" +
                                    to_string(kind) + " distinct_count=" +
                                    std::to_string(r.distinct_count) + " < " +
                                    std::to_string(p));
    }
    if (split && distinct.size() == 2 && distinct[0] != distinct[1])
      add_counterexample(out, where + " lambda=" + rep.to_string() +
                                  " phi+ and phi- disagree on distinct_count");
    if (tag_nu2)
      out.notes.push_back(where + " lambda=" + rep.to_string() + " " +
                          (nu_p_degree(rep, 2) >= 2 ? "4-divides" : "nu2=1"));
  }

  if (frobenius_sample && p == 2 && (n == 2 || n == 4 || n == 8)) {
    std::mt19937 rng(0x53524553u ^ static_cast<unsigned>(97 * n));
    const std::vector<Partition> all = partitions_of(n);
    const Partition lam = all[rng() % all.size()];
    int k = 0;
    while ((1 << k) < n) ++k;
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int& d : v) d = static_cast<int>(rng() % 2);
    const Int expect = frobenius_multiplicity(lam, v);
    Session& sp = session(n, 2);
    const MultiplicityReport r = restrict_impl(sp, lam, Ambient::P, CharKind::chi);
    std::size_t idx = sp.lp.count();
    for (std::size_t i = 0; i < sp.lp.count(); ++i)
      if (sp.lp.digits(i) == v) idx = i;
    if (idx == sp.lp.count() || r.multiplicities[idx].second != expect)
      add_counterexample(out, where + " frobenius cross-check mismatch: lambda=" +
                                  lam.to_string() + " v=" + digits_string(v) +
                                  " recursion=" + expect.str());
    else
      out.notes.push_back(where + " frobenius cross-check: lambda=" + lam.to_string() +
                          " v=" + digits_string(v) + " multiplicity=" + expect.str());
  }
  return candidates;
}

VerificationOutcome RestrictionEngine::verify_theorem_a(int n, int p) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "theorem-a";
  out.params = nlohmann::ordered_json{{"n", n}, {"p", p}};
  const int candidates = theorem_a_scan(n, p, out, false, true);
  out.vacuous = candidates == 0;
  out.notes.push_back("candidates: " + std::to_string(candidates));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_f_bijection(int k) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "jlms-bijection";
  out.params = nlohmann::ordered_json{{"k", k}};
  const int n = 1 << k;
  Session& s = session(n, 2);
  std::set<std::string> labels;
  for (int ones = 0; ones < n; ++ones) {
    const Partition hook = hook_shape(n, ones);
    const MultiplicityReport r = restrict_impl(s, hook, Ambient::P, CharKind::chi);
    if (r.distinct_count != 1) {
      add_counterexample(out, "hook=" + hook.to_string() + " has " +
                                  std::to_string(r.distinct_count) +
                                  " linear constituents, expected 1");
      continue;
    }
    for (const auto& [lab, m] : r.multiplicities) {
      if (m == 0) continue;
      if (!labels.insert(lab).second)
        add_counterexample(out, "hook=" + hook.to_string() + " repeats label " + lab);
      else
        out.notes.push_back("hook=" + hook.to_string() + " -> " + lab +
                            " multiplicity=" + m.str());
    }
  }
  if (labels.size() != s.lp.count())
    add_counterexample(out, "labels cover " + std::to_string(labels.size()) + " of " +
                                std::to_string(s.lp.count()) + " linear characters");
  out.ms = t.ms();
  return out;
}

void RestrictionEngine::two_linears_scan(int k, VerificationOutcome& out, int* checked) {
  const int n = 1 << k;
  Session& s = session_q(n, 2);
  for (const Partition& lam : partitions_of(n)) {
    if (nu_p_degree(lam, 2) != 1) continue;
    const MultiplicityReport qrep = restrict_impl(s, lam, Ambient::Q, CharKind::chi);
    if (qrep.distinct_count != 1) {
      out.notes.push_back("lambda=" + lam.to_string() + " has " +
                          std::to_string(qrep.distinct_count) +
                          " Q-linear constituents; unique-constituent case not met");
      continue;
    }
    ++*checked;
    std::string qlabel;
    for (const auto& [lab, m] : qrep.multiplicities)
      if (m > 0) qlabel = lab;
    const MultiplicityReport prep = restrict_impl(s, lam, Ambient::P, CharKind::chi);
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < prep.multiplicities.size(); ++i)
      if (prep.multiplicities[i].second > 0) positive.push_back(i);
    if (positive.size() != 2) {
      add_counterexample(out, "lambda=" + lam.to_string() + " has " +
                                  std::to_string(positive.size()) +
                                  " linear constituents on P, expected 2");
      continue;
    }
    for (std::size_t i : positive) {
      if (prep.multiplicities[i].second != 1)
        add_counterexample(out, "lambda=" + lam.to_string() + " label=" +
                                    prep.multiplicities[i].first + " multiplicity=" +
                                    prep.multiplicities[i].second.str() + ", expected 1");
      if (s.lq->label(s.p_to_q[i]) != qlabel)
        add_counterexample(out, "lambda=" + lam.to_string() + " label=" +
                                    prep.multiplicities[i].first +
                                    " restricts away from " + qlabel);
    }
  }
}

VerificationOutcome RestrictionEngine::verify_two_linears(int k) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "two-linears";
  out.params = nlohmann::ordered_json{{"k", k}};
  int checked = 0;
  two_linears_scan(k, out, &checked);
  out.vacuous = checked == 0;
  out.notes.push_back("instances checked: " + std::to_string(checked));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_odd_degree(int n_max) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "odd-degree";
  out.params = nlohmann::ordered_json{{"n_max", n_max}};
  long long shapes = 0;
  for (int n = 1; n <= n_max; ++n) {
    Int count = 0;
    for (const Partition& lam : partitions_of(n)) {
      ++shapes;
      const bool via_digits = is_odd_degree(lam);
      const bool via_valuation = nu_p_degree(lam, 2) == 0;
      if (via_digits != via_valuation)
        add_counterexample(out, "lambda=" + lam.to_string() +
                                    " digit recursion and valuation disagree");
      if (via_digits) ++count;
    }
    const Int predicted = odd_degree_count_predicted(n);
    if (count != predicted)
      add_counterexample(out, "n=" + std::to_string(n) + " counted " + count.str() +
                                  " odd degrees, predicted " + predicted.str());
  }
  out.notes.push_back("shapes checked: " + std::to_string(shapes));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_lr_oracle(int total_max) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "lr-oracle";
  out.params = nlohmann::ordered_json{{"total_max", total_max}};
  std::vector<std::vector<Partition>> parts(static_cast<std::size_t>(total_max) + 1);
  for (int m = 0; m <= total_max; ++m) parts[m] = partitions_of(m);
  long long triples = 0;
  for (int m = 0; m <= total_max; ++m) {
    for (int a = 0; a <= m; ++a) {
      const int b = m - a;
      for (const Partition& mu : parts[a]) {
        for (const Partition& nu : parts[b]) {
          for (const Partition& lam : parts[m]) {
            const long long c = lr_coefficient(lam, mu, nu, 0).coefficient;
            Rat acc = 0;
            for (const Partition& alpha : parts[a]) {
              const Int xa = mn_value(mu, alpha);
              if (xa == 0) continue;
              const Rat za(centralizer_order_symmetric(alpha));
              for (const Partition& beta : parts[b]) {
                const Int xb = mn_value(nu, beta);
                if (xb == 0) continue;
                acc += Rat(xa * xb * mn_value(lam, union_type(alpha, beta))) /
                       (za * Rat(centralizer_order_symmetric(beta)));
              }
            }
            ++triples;
            if (boost::multiprecision::denominator(acc) != 1 ||
                boost::multiprecision::numerator(acc) != c) {
              add_counterexample(out, "lambda=" + lam.to_string() + " mu=" +
                                          mu.to_string() + " nu=" + nu.to_string() +
                                          " enumerator=" + std::to_string(c) +
                                          " character route=" + acc.str());
              continue;
            }
            if (lr_coefficient(lam, nu, mu, 0).coefficient != c)
              add_counterexample(out, "asymmetric coefficient at lambda=" +
                                          lam.to_string() + " mu=" + mu.to_string() +
                                          " nu=" + nu.to_string());
            if (lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate(), 0)
                    .coefficient != c)
              add_counterexample(out, "conjugation breaks coefficient at lambda=" +
                                          lam.to_string() + " mu=" + mu.to_string() +
                                          " nu=" + nu.to_string());
          }
        }
      }
    }
  }
  out.notes.push_back("triples checked: " + std::to_string(triples));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_ecycle_products(int n_max, int e_max) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "ecycle-products";
  out.params = nlohmann::ordered_json{{"n_max", n_max}, {"e_max", e_max}};
  long long cases = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (int e = 2; e <= e_max; ++e) {
        const int weight = core_quotient(lam, e).weight;
        for (int w = weight; e * w <= n; ++w) {
          for (const Partition& gamma : partitions_of(n - e * w)) {
            const Int lhs = ecycle_products_value(lam, e, w, gamma);
            const Int rhs = mn_value(lam, with_cycles(gamma, e, w));
            ++cases;
            if (lhs != rhs)
              add_counterexample(out, "lambda=" + lam.to_string() + " e=" +
                                          std::to_string(e) + " w=" + std::to_string(w) +
                                          " gamma=" + gamma.to_string() + ": " +
                                          lhs.str() + " != " + rhs.str());
          }
        }
      }
    }
  }
  out.notes.push_back("cases checked: " + std::to_string(cases));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_gamma_omega(int k) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "gamma-omega";
  out.params = nlohmann::ordered_json{{"k", k}};
  const int n = 1 << k;
  Session& s = session(n, 2);
  const AlgebraicValue one = AlgebraicValue::rational(Rat(1));
  const AlgebraicValue minus_one = AlgebraicValue::rational(Rat(-1));
  const std::pair<const char*, Perm> probes[] = {{"gamma", gamma(n)}, {"omega", omega2(n)}};
  for (const auto& [name, g] : probes) {
    for (std::size_t i = 0; i < s.lp.count(); ++i) {
      const AlgebraicValue v = s.lp.value(i, g);
      if (!v.equals(one) && !v.equals(minus_one))
        add_counterexample(out, std::string(name) + ": character " + s.lp.label(i) +
                                    " takes value " + v.to_string());
    }
    const long long cent = centralizer_scan_parallel(s.P.elements, g, workers_);
    if (cent != n || static_cast<std::size_t>(cent) != s.lp.count())
      add_counterexample(out, std::string(name) + ": centralizer order " +
                                  std::to_string(cent) + ", expected " +
                                  std::to_string(n));
    out.notes.push_back(std::string(name) + ": centralizer order " +
                        std::to_string(cent) + ", linear values in {1,-1}");
  }
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_g_lambda(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "g-lambda";
  out.params = nlohmann::ordered_json{{"n", n}};
  const SylowStructure st = SylowStructure::of(n, 2);
  std::map<CycleType, Perm> realized;
  int shapes = 0;
  for (const Partition& lam : partitions_of(n)) {
    if (degree(lam) % 2 != 0) continue;
    ++shapes;
    const CycleType type = construct_g_lambda(lam, n, 2);
    if (type_parity(type) != 1)
      add_counterexample(out, "lambda=" + lam.to_string() + " type=" + type.to_string() +
                                  " is odd");
    auto [it, fresh] = realized.try_emplace(type, Perm());
    if (fresh) {
      it->second = realize_in_sylow(type, n, 2);
      const Perm& g = it->second;
      if (!(g.cycle_type() == type))
        add_counterexample(out, "type=" + type.to_string() + " realized with type " +
                                    g.cycle_type().to_string());
      if (!in_sylow(g, st))
        add_counterexample(out, "type=" + type.to_string() +
                                    " realization escapes the Sylow subgroup");
      if (g.parity() != 1)
        add_counterexample(out, "type=" + type.to_string() + " realization is odd");
    }
    if (mn_value(lam, type) != 0)
      add_counterexample(out, "lambda=" + lam.to_string() + " type=" + type.to_string() +
                                  " character value " + mn_value(lam, type).str() +
                                  " != 0");
  }
  out.vacuous = shapes == 0;
  out.notes.push_back("even-degree shapes: " + std::to_string(shapes) +
                      "; distinct vanishing types: " + std::to_string(realized.size()));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_odd_p_pipeline(int n, int p) {
  if (p == 2) throw std::invalid_argument("odd-p-pipeline requires an odd prime");
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "odd-p-pipeline";
  out.params = nlohmann::ordered_json{{"n", n}, {"p", p}};
  Session& s = session_q(n, p);
  const Perm omega = omega_padic(n, p);

  const AlgebraicValue one = AlgebraicValue::rational(Rat(1));
  for (std::size_t i = 0; i < s.lp.count(); ++i) {
    const AlgebraicValue v = s.lp.value(i, omega);
    if (!(v * v.conj()).equals(one))
      add_counterexample(out, "character " + s.lp.label(i) +
                                  " is not unimodular at omega");
  }

  const long long cent = centralizer_scan_parallel(s.P.elements, omega, workers_);
  if (static_cast<std::size_t>(cent) != s.lp.count())
    add_counterexample(out, "centralizer order " + std::to_string(cent) +
                                " != linear character count " +
                                std::to_string(s.lp.count()));
  out.notes.push_back("omega=" + omega.to_cycle_string() + " centralizer order " +
                      std::to_string(cent));

  const int candidates = theorem_a_scan(n, p, out, false, false);
  out.notes.push_back("candidates: " + std::to_string(candidates));

  if (n <= 9) {
    const auto sigma = find_odd_normalizing_element(s.P, s.st);
    if (sigma) {
      out.notes.push_back("normalizing element of order " + std::to_string(p - 1) +
                          ": " + sigma->to_cycle_string());
    } else if (s.st.blocks.empty() || s.st.blocks[0].level == 0) {
      out.notes.push_back("Sylow subgroup is trivial; no conjugating witness required");
    } else {
      add_counterexample(out, "no odd normalizing element of order " +
                                  std::to_string(p - 1) + " found");
    }
  } else {
    out.notes.push_back("normalizer witness search skipped for n > 9");
  }
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_q_descent(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "q-descent";
  out.params = nlohmann::ordered_json{{"n", n}};
  Session& s = session_q(n, 2);
  long long pairs = 0;
  for (const Partition& lam : partitions_of(n)) {
    const MultiplicityReport prep = restrict_impl(s, lam, Ambient::P, CharKind::chi);
    const bool split = lam.is_self_conjugate() && n >= 2;
    const std::vector<CharKind> kinds =
        split ? std::vector<CharKind>{CharKind::phi_plus, CharKind::phi_minus}
              : std::vector<CharKind>{CharKind::phi};
    std::vector<MultiplicityReport> qreps;
    qreps.reserve(kinds.size());
    for (CharKind kind : kinds) qreps.push_back(restrict_impl(s, lam, Ambient::Q, kind));
    for (std::size_t i = 0; i < prep.multiplicities.size(); ++i) {
      if (prep.multiplicities[i].second == 0) continue;
      const std::size_t j = s.p_to_q[i];
      for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
        ++pairs;
        if (qreps[ki].multiplicities[j].second < 1)
          add_counterexample(out, "lambda=" + lam.to_string() + " theta=" +
                                      prep.multiplicities[i].first +
                                      " lost under restriction to " +
                                      to_string(kinds[ki]));
      }
    }
  }
  out.notes.push_back("constituent pairs checked: " + std::to_string(pairs));
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_nu2_structure(int k) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "nu2-structure";
  out.params = nlohmann::ordered_json{{"k", k}};
  const int n = 1 << k;
  const int q = n / 2;

  std::set<Partition> layer;
  for (const Partition& lam : partitions_of(n)) {
    const int nu = nu_p_degree(lam, 2);
    const std::size_t full = hooks_divisible(lam, n).size();
    // every hook length is divisible by 1, so k = 1 counts all cells
    const std::size_t half =
        q >= 2 ? hooks_divisible(lam, q).size() : static_cast<std::size_t>(lam.n());
    if ((nu == 1) != (full == 0 && half == 2))
      add_counterexample(out, "lambda=" + lam.to_string() + " nu2=" + std::to_string(nu) +
                                  " but hook counts are (" + std::to_string(full) + ", " +
                                  std::to_string(half) + ")");
    if ((nu >= 2) != (half <= 1))
      add_counterexample(out, "lambda=" + lam.to_string() + " nu2=" + std::to_string(nu) +
                                  " does not match " + std::to_string(half) +
                                  " halfweight hooks");
    if (nu == 1) layer.insert(lam);
  }

  std::map<Partition, std::pair<int, int>> shapes;
  for (int x = 1; x <= q - 1; ++x) {
    for (int y = x - 1; y <= q - 2; ++y) {
      const Partition shape = two_hook_shape(q, x, y);
      auto [it, fresh] = shapes.try_emplace(shape, std::make_pair(x, y));
      if (!fresh)
        add_counterexample(out, "two-hook parameters (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") and (" +
                                    std::to_string(it->second.first) + "," +
                                    std::to_string(it->second.second) +
                                    ") share shape " + shape.to_string());
      if (layer.count(shape) == 0)
        add_counterexample(out, "two-hook shape " + shape.to_string() +
                                    " is missing from the nu2=1 layer");
    }
  }
  for (const Partition& lam : layer)
    if (shapes.count(lam) == 0)
      add_counterexample(out, "nu2=1 shape " + lam.to_string() +
                                  " is not a two-hook shape");
  out.notes.push_back("nu2=1 layer size: " + std::to_string(layer.size()));

  int checked = 0;
  two_linears_scan(k, out, &checked);
  out.notes.push_back("two-linear instances checked: " + std::to_string(checked));

  Session& s = session_q(n, 2);
  std::set<Partition> seen;
  for (const Partition& lam : layer) {
    if (lam.is_self_conjugate()) continue;
    const Partition rep = std::max(lam, lam.conjugate());
    if (!seen.insert(rep).second) continue;
    const MultiplicityReport r = restrict_impl(s, rep, Ambient::Q, CharKind::phi);
    if (r.distinct_count < 2)
      add_counterexample(out, "lambda=" + rep.to_string() +
                                  " phi restriction has distinct_count=" +
                                  std::to_string(r.distinct_count) + " < 2");
  }
  out.ms = t.ms();
  return out;
}

VerificationOutcome RestrictionEngine::verify_two_power_boundary(int k) {
  std::lock_guard<std::mutex> lock(mu_);
  Timer t;
  VerificationOutcome out;
  out.statement = "two-power-boundary";
  out.params = nlohmann::ordered_json{{"k", k}};
  int total = 0;
  for (const int n : {1 << k, (1 << k) + 1}) {
    const int candidates = theorem_a_scan(n, 2, out, true, false);
    total += candidates;
    out.notes.push_back("n=" + std::to_string(n) +
                        " candidates: " + std::to_string(candidates));
  }
  out.vacuous = total == 0;
  out.ms = t.ms();
  return out;
}

// ---------------------------------------------------------------------------
// Campaigns.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::vector<CampaignSpec> default_campaign_suite() {
  std::vector<CampaignSpec> suite;
  std::vector<int> n2 = range_inclusive(1, 13);
  n2.push_back(16);
  suite.push_back({"theorem-a", 2, n2, {}});
  suite.push_back({"theorem-a", 3, range_inclusive(1, 12), {}});
  suite.push_back({"theorem-a", 5, range_inclusive(1, 10), {}});
  suite.push_back({"jlms-bijection", 2, {}, range_inclusive(1, 4)});
  suite.push_back({"two-linears", 2, {}, range_inclusive(1, 4)});
  suite.push_back({"odd-degree", 2, {25}, {}});
  suite.push_back({"lr-oracle", 2, {8}, {}});
  suite.push_back({"ecycle-products", 2, {12}, {}});
  suite.push_back({"gamma-omega", 2, {}, range_inclusive(1, 4)});
  suite.push_back({"g-lambda", 2, {12, 14, 20}, {}});
  suite.push_back({"odd-p-pipeline", 3, range_inclusive(1, 12), {}});
  suite.push_back({"odd-p-pipeline", 5, range_inclusive(1, 10), {}});
  suite.push_back({"q-descent", 2, range_inclusive(1, 8), {}});
  suite.push_back({"nu2-structure", 2, {}, range_inclusive(1, 4)});
  suite.push_back({"two-power-boundary", 2, {}, range_inclusive(1, 4)});
  return suite;
}

std::vector<VerificationOutcome> run_campaign(RestrictionEngine& engine,
                                              const CampaignSpec& spec) {
  std::vector<VerificationOutcome> outs;
  const std::string& st = spec.statement;
  if (st == "theorem-a") {
    for (int n : spec.ns) outs.push_back(engine.verify_theorem_a(n, spec.p));
  } else if (st == "jlms-bijection") {
    for (int k : spec.ks) outs.push_back(engine.verify_f_bijection(k));
  } else if (st == "two-linears") {
    for (int k : spec.ks) outs.push_back(engine.verify_two_linears(k));
  } else if (st == "odd-degree") {
    outs.push_back(engine.verify_odd_degree(spec.ns.empty() ? 25 : spec.ns.front()));
  } else if (st == "lr-oracle") {
    outs.push_back(engine.verify_lr_oracle(spec.ns.empty() ? 8 : spec.ns.front()));
  } else if (st == "ecycle-products") {
    outs.push_back(engine.verify_ecycle_products(spec.ns.empty() ? 12 : spec.ns.front()));
  } else if (st == "gamma-omega") {
    for (int k : spec.ks) outs.push_back(engine.verify_gamma_omega(k));
  } else if (st == "g-lambda") {
    for (int n : spec.ns) outs.push_back(engine.verify_g_lambda(n));
  } else if (st == "odd-p-pipeline") {
    for (int n : spec.ns) outs.push_back(engine.verify_odd_p_pipeline(n, spec.p));
  } else if (st == "q-descent") {
    for (int n : spec.ns) outs.push_back(engine.verify_q_descent(n));
  } else if (st == "nu2-structure") {
    for (int k : spec.ks) outs.push_back(engine.verify_nu2_structure(k));
  } else if (st == "two-power-boundary") {
    for (int k : spec.ks) outs.push_back(engine.verify_two_power_boundary(k));
  } else {
    throw std::invalid_argument("unknown statement: " + st);
  }
  return outs;
}

}  // namespace sylres
