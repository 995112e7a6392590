// Command line front end.  Subcommands cover the exact kernels (char-eval,
// degree, hooks, core-quotient, delta2, lr), the restriction reports
// (restrict), and the verification campaigns (verify).  Exit codes: 0 all
// good, 1 a mathematical statement failed or a budget was exceeded, 2 usage.

#include "sylres/errors.hpp"
#include "sylres/lr.hpp"
#include "sylres/restriction.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sylres;

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty component in range " + text);
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(tok));
    } else {
      const int lo = std::stoi(tok.substr(0, dots));
      const int hi = std::stoi(tok.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range " + tok);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty range: " + text);
  return out;
}

nlohmann::ordered_json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) return v.str();
  return v.convert_to<long long>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::string format = "text";
  std::string out_path;
  std::size_t budget = std::size_t(1) << 20;
  int workers = 1;
};

void print_report(const MultiplicityReport& rep, const Options& opt, std::ostream& os) {
  if (opt.format == "json") {
    os << rep.to_json().dump() << "\n";
  } else if (opt.format == "csv") {
    os << "label,multiplicity\n";
    for (const auto& [lab, m] : rep.multiplicities)
      os << csv_field(lab) << "," << m.str() << "\n";
  } else {
    os << "group: " << rep.group << "\n";
    os << "lambda: " << rep.lambda.to_string() << "\n";
    os << "character: " << rep.character << "\n";
    os << "degree: " << rep.degree.str() << "\n";
    os << "multiplicities:\n";
    for (const auto& [lab, m] : rep.multiplicities)
      os << "  " << lab << ": " << m.str() << "\n";
    os << "distinct_count: " << rep.distinct_count << "\n";
    os << "residual_degree: " << rep.residual_degree.str() << "\n";
  }
}

void print_outcome(const VerificationOutcome& o, const Options& opt, std::ostream& os) {
  if (opt.format == "json") {
    os << o.to_json().dump() << "\n" << std::flush;
  } else if (opt.format == "csv") {
    os << csv_field(o.statement) << "," << csv_field(o.params.dump()) << ","
       << (o.pass ? "pass" : "fail") << "," << (o.vacuous ? "vacuous" : "") << ","
       << o.counterexamples.size() << "," << o.ms << "\n";
  } else {
    os << (o.pass ? "[PASS] " : "[FAIL] ") << o.statement << " " << o.params.dump()
       << (o.vacuous ? " (vacuous)" : "") << " " << o.ms << "ms\n";
    for (const std::string& c : o.counterexamples) os << "  !! " << c << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"restrictions of symmetric-group characters to Sylow subgroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");
  app.add_option("--budget", opt.budget, "element budget for group enumeration")
      ->envname("SYLOWRESTRICT_BUDGET");
  app.add_option("--workers", opt.workers, "worker threads for the scan kernels");

  std::string lam_s, type_s, mu_s, nu_s;
  int arg_e = 2, arg_p = 0, witnesses = 0;
  std::string group = "P", sign, statement, n_range, k_range;
  bool run_all = false;
  int restrict_n = 0;

  CLI::App* c_eval = app.add_subcommand("char-eval", "character value on a cycle type");
  c_eval->add_option("lambda", lam_s)->required();
  c_eval->add_option("type", type_s)->required();

  CLI::App* c_degree = app.add_subcommand("degree", "hook length formula degree");
  c_degree->add_option("lambda", lam_s)->required();
  c_degree->add_option("--p", arg_p, "also report the p-adic valuation");

  CLI::App* c_hooks = app.add_subcommand("hooks", "hook lengths cell by cell");
  c_hooks->add_option("lambda", lam_s)->required();

  CLI::App* c_cq = app.add_subcommand("core-quotient", "e-core and e-quotient");
  c_cq->add_option("lambda", lam_s)->required();
  c_cq->add_option("e", arg_e)->required()->check(CLI::Range(2, 1 << 20));

  CLI::App* c_delta = app.add_subcommand("delta2", "half-size shape of an even shape");
  c_delta->add_option("lambda", lam_s)->required();

  CLI::App* c_lr = app.add_subcommand("lr", "outer product multiplicity");
  c_lr->add_option("lambda", lam_s)->required();
  c_lr->add_option("mu", mu_s)->required();
  c_lr->add_option("nu", nu_s)->required();
  c_lr->add_option("--witnesses", witnesses, "print up to this many certifying fillings");

  CLI::App* c_restrict = app.add_subcommand("restrict", "linear multiplicity report");
  c_restrict->add_option("lambda", lam_s)->required();
  c_restrict->add_option("--n", restrict_n, "degree of the ambient symmetric group");
  c_restrict->add_option("--p", arg_p, "prime (default 2)");
  c_restrict->add_option("--group", group)->check(CLI::IsMember({"P", "Q"}));
  c_restrict->add_option("--sign", sign, "+ or - for a self-conjugate shape")
      ->check(CLI::IsMember({"+", "-"}));

  CLI::App* c_verify = app.add_subcommand("verify", "run verification statements");
  c_verify->add_option("--statement", statement, "statement name");
  c_verify->add_flag("--all", run_all, "run the full stock campaign suite");
  c_verify->add_option("--p", arg_p, "prime (default 2)");
  c_verify->add_option("--n", n_range, "n values, e.g. 12 or 1..12 or 1..13,16");
  c_verify->add_option("--k", k_range, "k values, e.g. 3 or 1..4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Sink sink(opt.out_path);
  std::ostream& os = sink.os();

  if (c_eval->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    const CycleType type = Partition::parse(type_s);
    const Int v = mn_value(lam, type);
    if (opt.format == "json") {
      nlohmann::ordered_json j{{"lambda", lam.to_string()},
                               {"type", type.to_string()},
                               {"value", int_json(v)}};
      os << j.dump() << "\n";
    } else if (opt.format == "csv") {
      os << "lambda,type,value\n"
         << csv_field(lam.to_string()) << "," << csv_field(type.to_string()) << ","
         << v.str() << "\n";
    } else {
      os << v.str() << "\n";
    }
    return 0;
  }

  if (c_degree->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    const Int d = degree(lam);
    if (opt.format == "json") {
      nlohmann::ordered_json j{{"lambda", lam.to_string()}, {"degree", int_json(d)}};
      if (arg_p != 0) {
        j["p"] = arg_p;
        j["nu"] = nu_p_degree(lam, arg_p);
      }
      os << j.dump() << "\n";
    } else {
      os << d.str() << "\n";
      if (arg_p != 0) os << "nu_" << arg_p << "=" << nu_p_degree(lam, arg_p) << "\n";
    }
    return 0;
  }

  if (c_hooks->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    if (opt.format == "json") {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int r = 1; r <= lam.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 1; c <= lam.part(r); ++c) row.push_back(hook_length(lam, r, c));
        rows.push_back(row);
      }
      os << nlohmann::ordered_json{{"lambda", lam.to_string()}, {"hooks", rows}}.dump()
         << "\n";
    } else {
      for (int r = 1; r <= lam.rows(); ++r) {
        for (int c = 1; c <= lam.part(r); ++c)
          os << (c > 1 ? " " : "") << hook_length(lam, r, c);
        os << "\n";
      }
    }
    return 0;
  }

  if (c_cq->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    const CoreQuotient cq = core_quotient(lam, arg_e);
    if (opt.format == "json") {
      nlohmann::ordered_json quo = nlohmann::ordered_json::array();
      for (const Partition& part : cq.quotient) quo.push_back(part.to_string());
      os << nlohmann::ordered_json{{"lambda", lam.to_string()},
                                   {"e", arg_e},
                                   {"core", cq.core.to_string()},
                                   {"quotient", quo},
                                   {"weight", cq.weight}}
                .dump()
         << "\n";
    } else {
      os << "core: " << cq.core.to_string() << "\n";
      os << "quotient:";
      for (const Partition& part : cq.quotient) os << " " << part.to_string();
      os << "\n";
      os << "weight: " << cq.weight << "\n";
    }
    return 0;
  }

  if (c_delta->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    const Partition half = delta2(lam);
    if (opt.format == "json")
      os << nlohmann::ordered_json{{"lambda", lam.to_string()},
                                   {"delta2", half.to_string()}}
                .dump()
         << "\n";
    else
      os << half.to_string() << "\n";
    return 0;
  }

  if (c_lr->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    const Partition mu = Partition::parse(mu_s);
    const Partition nu = Partition::parse(nu_s);
    const LRResult res = lr_coefficient(lam, mu, nu, witnesses);
    if (opt.format == "json") {
      nlohmann::ordered_json wit = nlohmann::ordered_json::array();
      for (const LRConfiguration& c : res.witnesses) wit.push_back(c.render());
      os << nlohmann::ordered_json{{"lambda", lam.to_string()},
                                   {"mu", mu.to_string()},
                                   {"nu", nu.to_string()},
                                   {"coefficient", res.coefficient},
                                   {"witnesses", wit}}
                .dump()
         << "\n";
    } else if (opt.format == "csv") {
      os << "lambda,mu,nu,coefficient\n"
         << csv_field(lam.to_string()) << "," << csv_field(mu.to_string()) << ","
         << csv_field(nu.to_string()) << "," << res.coefficient << "\n";
    } else {
      os << res.coefficient << "\n";
      for (const LRConfiguration& c : res.witnesses) {
        os << "\n";
        for (const std::string& line : c.render()) os << line << "\n";
      }
    }
    return 0;
  }

  if (c_restrict->parsed()) {
    const Partition lam = Partition::parse(lam_s);
    const int p = arg_p == 0 ? 2 : arg_p;
    const int n = restrict_n == 0 ? lam.n() : restrict_n;
    if (lam.n() != n)
      throw std::invalid_argument("lambda has size " + std::to_string(lam.n()) +
                                  " but --n is " + std::to_string(n));
    const Ambient ambient = group == "Q" ? Ambient::Q : Ambient::P;
    CharKind kind = CharKind::chi;
    if (ambient == Ambient::Q) {
      if (lam.is_self_conjugate() && n >= 2) {
        kind = sign == "-" ? CharKind::phi_minus : CharKind::phi_plus;
      } else {
        if (!sign.empty()) throw std::domain_error("not self-conjugate");
        kind = CharKind::phi;
      }
    } else if (!sign.empty()) {
      throw std::invalid_argument("--sign applies to group Q only");
    }
    RestrictionEngine engine(opt.budget, opt.workers);
    const MultiplicityReport rep =
        engine.restrict_linear_multiplicities(lam, n, p, ambient, kind);
    print_report(rep, opt, os);
    return 0;
  }

  if (c_verify->parsed()) {
    RestrictionEngine engine(opt.budget, opt.workers);
    bool all_pass = true;
    auto emit = [&](const VerificationOutcome& o) {
      print_outcome(o, opt, os);
      all_pass = all_pass && o.pass;
    };
    if (run_all) {
      for (const CampaignSpec& spec : default_campaign_suite())
        for (const VerificationOutcome& o : run_campaign(engine, spec)) emit(o);
      const AuditCounters a = engine.audit();
      VerificationOutcome audit;
      audit.statement = "report-audit";
      audit.params = nlohmann::ordered_json{{"reports", a.reports},
                                            {"multiplicity_entries", a.multiplicity_entries},
                                            {"integrality_checks", a.integrality_checks},
                                            {"degree_checks", a.degree_checks}};
      audit.pass = a.reports > 0 && a.integrality_checks == a.multiplicity_entries &&
                   a.degree_checks == a.reports;
      if (!audit.pass) audit.counterexamples.push_back("audit counters are inconsistent");
      emit(audit);
    } else if (!statement.empty()) {
      CampaignSpec spec;
      spec.statement = statement;
      spec.p = arg_p == 0 ? 2 : arg_p;
      if (!n_range.empty()) spec.ns = parse_range(n_range);
      if (!k_range.empty()) spec.ks = parse_range(k_range);
      const std::vector<VerificationOutcome> outs = run_campaign(engine, spec);
      if (outs.empty())
        throw std::invalid_argument("statement " + statement +
                                    " selected no instances; pass --n or --k");
      for (const VerificationOutcome& o : outs) emit(o);
    } else {
      throw std::invalid_argument("verify needs --statement or --all");
    }
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sylres::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const sylres::IntegralityError& e) {
    std::cerr << "integrality failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return 2;
  }
}
