// Command-line surface: identity verification, coefficient
// computation, star evaluations, sumset checking, permutation
// searches, and the full verification suite. Reports are JSON on
// stdout (exact values as strings, never floats); a human summary
// goes to stderr. Exit codes: 0 pass, 1 fail, 2 hypothesis-not-met,
// 3 usage or error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starsum/json_io.hpp"
#include "starsum/permutations.hpp"
#include "starsum/suite.hpp"

namespace {

using namespace starsum;
using nlohmann::json;

enum class Status { pass, fail, hypothesis_not_met, error };

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::hypothesis_not_met: return "hypothesis-not-met";
    default: return "error";
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::hypothesis_not_met: return 2;
    default: return 3;
  }
}

std::vector<long> split_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stol(tok));
  }
  return out;
}

long default_cap() {
  if (const char* env = std::getenv("STARSUM_CAP")) {
    try {
      return std::stol(env);
    } catch (...) {
      // fall through to the built-in default
    }
  }
  return 10'000'000;
}

int emit(const std::string& command, Status status, json payload,
         const std::vector<std::string>& argv_echo) {
  json report{{"command", command}, {"status", to_string(status)}, {"argv", argv_echo},
              {"payload", std::move(payload)}};
  std::cout << report.dump(2) << "\n";
  std::cerr << command << ": " << to_string(status) << "\n";
  return exit_code(status);
}

struct IdentityArgs {
  std::string id;
  std::string params;
  long cap = 80;
};

int run_identity(const IdentityArgs& a, const std::vector<std::string>& argv_echo) {
  IdentityId id = parse_identity_id(a.id);
  IdentityParams params = identity_params_from_json(json::parse(a.params));
  IdentityReport rep = verify_identity(id, params, a.cap);
  json payload{{"id", starsum::to_string(id)},
               {"params", identity_params_to_json(params)},
               {"lhs", rep.lhs},
               {"rhs", rep.rhs},
               {"pass", rep.pass}};
  return emit("identity", rep.pass ? Status::pass : Status::fail, payload, argv_echo);
}

struct CoeffArgs {
  std::string poly;
  std::string k;
  long long mod = 0;
};

template <typename F>
json coeff_payload(const F& field, const std::string& poly_text, const std::vector<long>& k) {
  auto p = parse_poly(field, static_cast<int>(k.size()), poly_text);
  auto fast = coeff_via_star(p, k);
  long total = 0, deg = p.degree();
  for (long ki : k) total += ki;
  auto expanded = p * variable_sum(field, p.arity()).pow(static_cast<unsigned>(total - deg));
  Monomial target(k.begin(), k.end());
  auto direct = expanded.coefficient_of(target);
  return json{{"poly", p.to_string()},
              {"k", k},
              {"coefficient", field.to_string(fast)},
              {"oracle", field.to_string(direct)},
              {"pass", fast == direct}};
}

int run_coeff(const CoeffArgs& a, const std::vector<std::string>& argv_echo) {
  auto k = split_longs(a.k);
  if (k.empty()) throw std::invalid_argument("coeff: --k needs at least one exponent");
  json payload = a.mod ? coeff_payload(PrimeField(a.mod), a.poly, k)
                       : coeff_payload(RationalField{}, a.poly, k);
  return emit("coeff", payload.at("pass").get<bool>() ? Status::pass : Status::fail, payload,
              argv_echo);
}

struct StarArgs {
  std::string poly;
  std::string at;
  std::string shifts;
  long long mod = 0;
};

template <typename F>
json star_payload(const F& field, const StarArgs& a) {
  json payload;
  if (!a.at.empty()) {
    auto args_raw = split_longs(a.at);
    auto p = parse_poly(field, static_cast<int>(args_raw.size()), a.poly);
    std::vector<typename F::elem> args;
    for (long v : args_raw) args.push_back(field.from_int(v));
    payload["poly"] = p.to_string();
    payload["at"] = args_raw;
    payload["value"] = field.to_string(star_evaluate(p, args));
  } else {
    auto shifts = split_longs(a.shifts);
    auto p = parse_poly(field, static_cast<int>(shifts.size()), a.poly);
    payload["poly"] = p.to_string();
    payload["shifts"] = shifts;
    payload["value"] = star_shifted_diagonal(p, shifts).to_string();
  }
  return payload;
}

int run_star(const StarArgs& a, const std::vector<std::string>& argv_echo) {
  if (a.at.empty() == a.shifts.empty())
    throw std::invalid_argument("star: exactly one of --at or --shifts is required");
  json payload =
      a.mod ? star_payload(PrimeField(a.mod), a) : star_payload(RationalField{}, a);
  return emit("star", Status::pass, payload, argv_echo);
}

struct SumsetArgs {
  std::string config;
  std::string check;
  long m = 0;
  long cap = 0;
};

int run_sumset(const SumsetArgs& a, const std::vector<std::string>& argv_echo) {
  std::ifstream in(a.config);
  if (!in) throw std::invalid_argument("sumset: cannot open config file " + a.config);
  json config = json::parse(in);
  AnyProblem any = parse_problem(config);
  const long cap = a.cap > 0 ? a.cap : default_cap();

  if (a.check.empty()) {
    return std::visit(
        [&](const auto& prob) {
          auto sums = enumerate_restricted_sumset(prob, cap);
          json listed = json::array();
          for (const auto& s : sums) listed.push_back(element_to_json(prob.field, s));
          json payload{{"sumset", listed}, {"size", sums.size()}};
          return emit("sumset", Status::pass, payload, argv_echo);
        },
        any);
  }

  ResultId rid = parse_result_id(a.check);
  CheckParams cp;
  cp.m = a.m;
  if (config.contains("params") && config.at("params").contains("m") && cp.m == 0)
    cp.m = config.at("params").at("m").get<long>();
  return std::visit(
      [&](const auto& prob) {
        BoundReport rep = check_bound(prob, rid, cp, cap);
        Status st = rep.pass ? Status::pass
                             : (rep.hypotheses_met ? Status::fail : Status::hypothesis_not_met);
        return emit("sumset", st, bound_report_to_json(rep), argv_echo);
      },
      any);
}

struct PermArgs {
  bool snevily = false, hall = false, parker = false, explore = false, force = false;
  long m = 0;
  int n = 0;
  std::string a, b;
};

int run_perm(const PermArgs& a, const std::vector<std::string>& argv_echo) {
  const int modes = int(a.snevily) + int(a.hall) + int(a.parker) + int(a.explore);
  if (modes != 1)
    throw std::invalid_argument("perm: exactly one of --snevily, --hall, --parker, --explore");
  json payload;
  Status status = Status::pass;
  if (a.snevily) {
    auto b = split_longs(a.b);
    auto sigma = snevily_permutation(a.m, a.n, b);
    payload = json{{"mode", "snevily"}, {"m", a.m}, {"n", a.n}, {"b", b}, {"found", sigma.has_value()}};
    if (sigma) {
      payload["permutation"] = *sigma;
      json residues = json::array();
      for (int i = 0; i < a.n; ++i) residues.push_back((((i + 1 + b[(*sigma)[i] - 1]) % a.m) + a.m) % a.m);
      payload["residues"] = residues;
    } else {
      status = Status::fail;
    }
  } else if (a.hall) {
    auto av = split_longs(a.a), bv = split_longs(a.b);
    auto sigma = hall_permutation(a.n, av, bv, a.force);
    payload = json{{"mode", "hall"}, {"n", a.n}, {"a", av}, {"b", bv}, {"found", sigma.has_value()}};
    if (sigma) {
      payload["permutation"] = *sigma;
      json sums = json::array();
      for (int i = 0; i < a.n; ++i) sums.push_back(((av[i] + bv[(*sigma)[i] - 1]) % a.n + a.n) % a.n);
      payload["sums"] = sums;
    } else {
      status = Status::fail;
    }
  } else if (a.parker) {
    auto bv = split_longs(a.b);
    auto dec = parker_decomposition(a.n, bv);
    payload = json{{"mode", "parker"},
                   {"n", a.n},
                   {"b", bv},
                   {"sigma_prime", dec.sigma_prime},
                   {"tau", dec.tau}};
  } else {
    auto cex = snevily_counterexample(a.m, a.n);
    payload = json{{"mode", "snevily-explore"},
                   {"m", a.m},
                   {"n", a.n},
                   {"counterexample_found", cex.has_value()}};
    if (cex) payload["counterexample"] = *cex;
  }
  return emit("perm", status, payload, argv_echo);
}

struct SuiteArgs {
  int max_n = 4;
  std::uint64_t seed = 12345;
  long cap = 0;
};

int run_suite(const SuiteArgs& a, const std::vector<std::string>& argv_echo) {
  SuiteOptions opt;
  opt.max_n = std::max(1, std::min(a.max_n, 6));
  opt.seed = a.seed;
  opt.cap = a.cap > 0 ? a.cap : default_cap();
  auto results = run_acceptance_suite(opt);
  bool all_pass = true;
  json criteria = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    criteria.push_back(json{{"index", r.index},
                            {"name", r.name},
                            {"status", r.pass ? "pass" : "fail"},
                            {"checks", r.checks},
                            {"detail", r.detail}});
    std::cerr << "criterion " << r.index << " (" << r.name << "): "
              << (r.pass ? "pass" : "fail") << " [" << r.checks << " checks, "
              << static_cast<long>(r.seconds * 1000) << " ms]\n";
  }
  json payload{{"seed", a.seed}, {"max_n", a.max_n}, {"criteria", criteria}};
  return emit("suite", all_pass ? Status::pass : Status::fail, payload, argv_echo);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polynomial-method toolkit for restricted sumsets"};
  app.require_subcommand(1);

  std::vector<std::string> argv_echo(argv, argv + argc);

  IdentityArgs identity_args;
  auto* identity = app.add_subcommand("identity", "verify a catalog identity against its oracle");
  identity->add_option("--id", identity_args.id, "identity id (eq2.2..eq2.8, hs3.1, thm2.1, dyson)")
      ->required();
  identity->add_option("--params", identity_args.params, "JSON parameter object")->required();
  identity->add_option("--cap", identity_args.cap, "expansion degree cap");

  CoeffArgs coeff_args;
  auto* coeff = app.add_subcommand("coeff", "coefficient of x^k in P*(sum x)^K, star route vs direct");
  coeff->add_option("--poly", coeff_args.poly, "polynomial in x1..xn")->required();
  coeff->add_option("--k", coeff_args.k, "target exponents, comma-separated")->required();
  coeff->add_option("--mod", coeff_args.mod, "work in Z/pZ instead of Q");

  StarArgs star_args;
  auto* star = app.add_subcommand("star", "falling-factorial transform evaluations");
  star->add_option("--poly", star_args.poly, "polynomial in x1..xn")->required();
  star->add_option("--at", star_args.at, "evaluate P* at these points");
  star->add_option("--shifts", star_args.shifts, "univariate P*(x-s_1,...,x-s_n)");
  star->add_option("--mod", star_args.mod, "work in Z/pZ instead of Q");

  SumsetArgs sumset_args;
  auto* sumset = app.add_subcommand("sumset", "enumerate a restricted sumset or check a bound");
  sumset->add_option("--config", sumset_args.config, "problem JSON file")->required();
  sumset->add_option("--check", sumset_args.check, "result id (cd,dh,anr,hs,ls,su,thm1.1,thm1.2,thm1.3)");
  sumset->add_option("--m", sumset_args.m, "constraint-size parameter m where required");
  sumset->add_option("--cap", sumset_args.cap, "tuple enumeration cap");

  PermArgs perm_args;
  auto* perm = app.add_subcommand("perm", "permutation searches");
  perm->add_flag("--snevily", perm_args.snevily, "sigma with i+b_sigma(i) distinct mod m");
  perm->add_flag("--hall", perm_args.hall, "sigma with a_i+b_sigma(i) distinct in Z/n");
  perm->add_flag("--parker", perm_args.parker, "decompose b_i = a_sigma'(i) + a_tau(i)");
  perm->add_flag("--explore", perm_args.explore, "scan all b for a Snevily counterexample");
  perm->add_flag("--force", perm_args.force, "search even when the hypothesis fails");
  perm->add_option("--m", perm_args.m, "modulus");
  perm->add_option("--n", perm_args.n, "size");
  perm->add_option("--a", perm_args.a, "group enumeration, comma-separated");
  perm->add_option("--b", perm_args.b, "offsets, comma-separated");

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "run the full verification suite");
  suite->add_option("--max-n", suite_args.max_n, "arity ceiling (default 4)");
  suite->add_option("--seed", suite_args.seed, "random seed (default 12345)");
  suite->add_option("--cap", suite_args.cap, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;  // usage errors are exit 3; --help is 0
  }

  try {
    if (*identity) return run_identity(identity_args, argv_echo);
    if (*coeff) return run_coeff(coeff_args, argv_echo);
    if (*star) return run_star(star_args, argv_echo);
    if (*sumset) return run_sumset(sumset_args, argv_echo);
    if (*perm) return run_perm(perm_args, argv_echo);
    if (*suite) return run_suite(suite_args, argv_echo);
  } catch (const starsum::hypothesis_error& e) {
    json payload{{"error", e.what()}};
    std::cout << json{{"command", app.get_subcommands().front()->get_name()},
                      {"status", "hypothesis-not-met"},
                      {"argv", argv_echo},
                      {"payload", payload}}
                     .dump(2)
              << "\n";
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json payload{{"error", e.what()}};
    std::cout << json{{"command", app.get_subcommands().front()->get_name()},
                      {"status", "error"},
                      {"argv", argv_echo},
                      {"payload", payload}}
                     .dump(2)
              << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
