// optpred: optimal prediction designs on [-1, 1].
//
// Exit codes: 0 certified / pass, 1 input error, 2 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "optpred/design.hpp"
#include "optpred/errors.hpp"
#include "optpred/imaginary.hpp"
#include "optpred/io.hpp"
#include "optpred/regression.hpp"
#include "optpred/verify.hpp"

namespace {

using optpred::cplx;
using optpred::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("OPTPRED_THREADS")) {
    try {
      const long v = std::stol(cap);
      if (v >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed OPTPRED_THREADS='" << cap << "'\n";
    }
  }
  return workers;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw optpred::InputError("cannot open '" + out + "' for writing");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw optpred::InputError("cannot read '" + path + "'");
  try {
    return json::parse(file);
  } catch (const json::exception& e) {
    throw optpred::InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct Config {
  int n = 1;
  std::vector<double> z0{0.0, 0.0};
  double a = 0.0;
  std::uint64_t seed = 0;
  int replicates = 100000;
  std::string out;
  std::string format = "json";
  std::string suite = "all";
  std::string plan;
  std::string input;
};

int cmd_design(const Config& cfg) {
  const cplx z0(cfg.z0[0], cfg.z0[1]);
  if (!optpred::is_exterior(z0)) {
    std::cerr << "error: z0 = (" << z0.real() << ", " << z0.imag() << ") is not exterior to [-1, 1]\n";
    return kExitInput;
  }
  optpred::OptimizerOptions opts;
  opts.seed = cfg.seed;
  opts.threads = worker_count();
  const auto design = optpred::optimize_support(cfg.n, z0, opts);
  if (cfg.format == "csv") {
    emit(optpred::io::poly_samples_csv(design.extremal_poly), cfg.out);
  } else {
    emit(dump(optpred::io::to_json(design)), cfg.out);
  }
  if (design.certificate.certified()) return kExitOk;
  std::cerr << "design not certified: max_violation " << design.certificate.max_violation << ", duality_gap "
            << design.certificate.duality_gap << (design.converged ? "" : " (optimizer did not converge)") << "\n";
  return kExitNumeric;
}

int cmd_growth(const Config& cfg) {
  if (cfg.a == 0.0) {
    std::cerr << "error: a must be nonzero\n";
    return kExitInput;
  }
  namespace im = optpred::imaginary;
  const auto gap = im::growth_gap(cfg.n, cfg.a);
  json j{{"n", cfg.n},
         {"a", cfg.a},
         {"growth_value", im::growth_value(cfg.n, cfg.a)},
         {"K_value", im::optimal_K(cfg.n, cfg.a)},
         {"gap", {{"lhs", gap.lhs}, {"rhs", gap.rhs}}}};
  // Q_n is defined for a > 0; a < 0 uses the mirrored polynomial Q_n(-z).
  const auto q = im::q_poly(cfg.n, std::abs(cfg.a));
  j["Q_n"] = optpred::io::to_json(cfg.a > 0.0 ? q : q.reflected());
  if (cfg.format == "csv") {
    emit(optpred::io::poly_samples_csv(cfg.a > 0.0 ? q : q.reflected()), cfg.out);
  } else {
    emit(dump(j), cfg.out);
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg) {
  const auto results = optpred::verify::run(cfg.suite, cfg.seed);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  worst=" << r.worst << " (threshold " << r.threshold
              << ", " << r.cases << " cases) " << r.detail << "\n";
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitNumeric;
}

int cmd_simulate(const Config& cfg) {
  const auto plan = optpred::io::plan_from_json(read_json(cfg.plan));
  const cplx z0(cfg.z0[0], cfg.z0[1]);
  const auto est = optpred::regression::mc_predictor_variance(plan, z0, cfg.replicates, cfg.seed, worker_count());
  emit(dump(optpred::io::to_json(est, plan, z0)), cfg.out);
  return est.rel_error <= 0.05 ? kExitOk : kExitNumeric;
}

int cmd_certify(const Config& cfg) {
  const auto design = optpred::io::design_from_json(read_json(cfg.input));
  emit(dump(optpred::io::to_json(design)), cfg.out);
  return design.certificate.certified() ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal polynomial prediction measures on [-1, 1]"};
  app.require_subcommand(1);
  Config cfg;

  auto* design = app.add_subcommand("design", "Optimize the support for an exterior point z0");
  design->add_option("--n", cfg.n, "Polynomial degree")->required()->check(CLI::Range(1, 64));
  design->add_option("--z0", cfg.z0, "Exterior point as RE IM")->required()->expected(2);
  design->add_option("--seed", cfg.seed, "Seed for dithered starts");
  design->add_option("--out", cfg.out, "Output file (default stdout)");
  design->add_option("--format", cfg.format, "json or csv (extremal polynomial samples)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* growth = app.add_subcommand("growth", "Closed-form extremal growth at z0 = a i");
  growth->add_option("--n", cfg.n, "Polynomial degree")->required()->check(CLI::Range(1, 512));
  growth->add_option("--a", cfg.a, "Imaginary part of z0 (nonzero)")->required();
  growth->add_option("--out", cfg.out, "Output file (default stdout)");
  growth->add_option("--format", cfg.format, "json or csv (Q_n samples)")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite, "pell, equivalence, duality or all")
      ->check(CLI::IsMember({"pell", "equivalence", "duality", "all"}));
  verify->add_option("--seed", cfg.seed, "Seed for random sampling");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo predictor variance for a regression plan");
  simulate->add_option("--plan", cfg.plan, "Plan JSON file")->required();
  simulate->add_option("--z0", cfg.z0, "Prediction point as RE IM")->required()->expected(2);
  simulate->add_option("--replicates", cfg.replicates, "Monte Carlo replicates (>= 1000)");
  simulate->add_option("--seed", cfg.seed, "Random seed");
  simulate->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "Re-certify a design JSON file");
  certify->add_option("--in", cfg.input, "Design JSON file")->required();
  certify->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*design) return cmd_design(cfg);
    if (*growth) return cmd_growth(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*simulate) return cmd_simulate(cfg);
    if (*certify) return cmd_certify(cfg);
  } catch (const optpred::RankDeficiencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const optpred::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
