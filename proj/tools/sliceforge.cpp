// Command-line front end: verification suites, growth-type estimation,
// operator coefficient extraction, and the superoscillation demo.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad usage.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sliceforge/cauchy.hpp"
#include "sliceforge/growth.hpp"
#include "sliceforge/io.hpp"
#include "sliceforge/operators.hpp"
#include "sliceforge/superosc.hpp"
#include "sliceforge/verify.hpp"

namespace sf = sliceforge;

namespace {

struct CommonOpts {
  std::uint64_t seed = 2026;
  int threads = 0;  // 0 keeps the library default
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "seed for every randomized check");
  cmd->add_option("--threads", c.threads,
                  "worker thread cap (0 = library default)");
  cmd->add_option("--out", c.out, "write the JSON report to this path");
}

void apply_threads(int threads) {
  if (threads > 0)
    setenv("SLICEFORGE_THREADS", std::to_string(threads).c_str(), 1);
}

int run_verify(const CommonOpts& common, const sf::SuiteConfig& cfg,
               const std::string& suite) {
  apply_threads(common.threads);
  const std::vector<sf::SuiteReport> reports = sf::run_suites(suite, cfg);
  bool all = true;
  for (const sf::SuiteReport& r : reports) {
    std::printf("suite %s (seed %llu)\n", r.suite.c_str(),
                static_cast<unsigned long long>(r.seed));
    for (const sf::CheckResult& c : r.checks) {
      std::printf("  [%s] %-38s violation=% .3e constant=%.6g\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_violation,
                  c.empirical_constant);
      all = all && c.pass;
    }
  }
  std::printf("result: %s\n", all ? "PASS" : "FAIL");
  if (!common.out.empty()) {
    sf::io::json j;
    j["seed"] = cfg.seed;
    j["all_pass"] = all;
    j["suites"] = sf::io::json::array();
    for (const sf::SuiteReport& r : reports)
      j["suites"].push_back(sf::io::to_json(r));
    sf::io::write_json_file(common.out, j);
    std::printf("report written to %s\n", common.out.c_str());
  }
  return all ? 0 : 1;
}

int run_estimate(const CommonOpts& common, const std::string& input,
                 double rho) {
  apply_threads(common.threads);
  const sf::SliceSeries f =
      sf::io::series_from_json(sf::io::read_json_file(input));
  const sf::ProximateOrder po = sf::ProximateOrder::constant(rho);
  const sf::TypeEstimate coeff = sf::coeff_type_estimate(f, po);
  const sf::GrowthTypeEstimate growth = sf::growth_type_estimate(f, po);

  // ratio of the two routes; both vanishing counts as consistent
  double consistency = 1.0;
  if (coeff.implied_type > 0.0)
    consistency = growth.type / coeff.implied_type;
  else if (growth.type > 0.01)
    consistency = std::numeric_limits<double>::infinity();

  std::printf("coefficient route: implied type %.6g (limsup %.6g on [%ld, %ld])\n",
              coeff.implied_type, coeff.coefficient_limsup, coeff.window_lo,
              coeff.window_hi);
  std::printf("growth route:      type %.6g on radii [%.4g, %.4g]\n",
              growth.type, growth.r_lo, growth.r_hi);
  if (growth.validity)
    std::printf("validity radius:   %.6g\n", *growth.validity);
  std::printf("order consistency: %.6g\n", consistency);

  if (!common.out.empty()) {
    sf::io::json j;
    j["rho"] = rho;
    j["implied_type"] = sf::io::number_to_json(coeff.implied_type);
    j["coefficient_limsup"] = sf::io::number_to_json(coeff.coefficient_limsup);
    j["window"] = {coeff.window_lo, coeff.window_hi};
    j["growth_type"] = sf::io::number_to_json(growth.type);
    j["growth_radii"] = {sf::io::number_to_json(growth.r_lo),
                         sf::io::number_to_json(growth.r_hi)};
    if (growth.validity)
      j["validity_radius"] = sf::io::number_to_json(*growth.validity);
    j["order_consistency"] = sf::io::number_to_json(consistency);
    sf::io::write_json_file(common.out, j);
    std::printf("report written to %s\n", common.out.c_str());
  }
  return 0;
}

int run_extract(const CommonOpts& common, const std::string& op, double a,
                long L, int n, long M, int trials) {
  apply_threads(common.threads);
  const long maxdeg = std::max(L, M);
  sf::AbstractOperator T = [&] {
    if (op == "identity") return sf::abstract_identity(n, maxdeg);
    if (op == "translate") return sf::abstract_translation(n, a, maxdeg);
    if (op == "derivative") return sf::abstract_derivative(n, maxdeg);
    // translate(a) after d/dx: u_0 = 0, u_m = a^{m-1}/(m-1)!
    return sf::abstract_compose(sf::abstract_translation(n, a, maxdeg),
                                sf::abstract_derivative(n, maxdeg));
  }();
  const sf::ProximateOrder one = sf::ProximateOrder::constant(1.0);
  const sf::InfOrderOperator P = sf::coefficients_from_operator(T, L, one, one);
  const sf::CheckResult check =
      sf::representation_identity_check(T, L, M, trials, common.seed);

  std::printf("operator %s: %ld coefficient series, n = %d\n", op.c_str(),
              P.truncation() + 1, P.n());
  std::printf("  [%s] %s violation=% .3e\n", check.pass ? "PASS" : "FAIL",
              check.name.c_str(), check.max_violation);
  if (!common.out.empty()) {
    sf::io::json j;
    j["operator"] = sf::io::to_json(P);
    j["identity_check"] = sf::io::to_json(check);
    sf::io::write_json_file(common.out, j);
    std::printf("operator written to %s\n", common.out.c_str());
  }
  return check.pass ? 0 : 1;
}

int run_superosc(const CommonOpts& common, double a, double t,
                 const std::vector<int>& ns, const std::vector<double>& weights,
                 bool allow_boundary, const std::string& csv_path,
                 const std::string& plot_path, int plot_n) {
  apply_threads(common.threads);
  const auto rows = sf::convergence_measure(ns, a, t, weights);
  const std::string csv = sf::io::convergence_csv(rows);
  if (csv_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    sf::io::write_text_file(csv_path, csv);
    std::printf("table written to %s\n", csv_path.c_str());
  }

  if (!plot_path.empty()) {
    const int pn = plot_n > 0 ? plot_n : ns.back();
    sf::io::write_json_file(plot_path,
                            sf::io::to_json(sf::plane_wave_comparison(pn, a, t)));
    std::printf("plot data written to %s\n", plot_path.c_str());
  }
  (void)allow_boundary;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice-regular growth spaces: verification and demos"};
  app.require_subcommand(1);

  CommonOpts vc, ec, xc, sc;

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  sf::SuiteConfig cfg;
  verify->add_option("--suite", suite, "suite name, or 'all'")->required();
  verify->add_option("--family", cfg.family,
                     "proximate order family: constant | log-shift | table");
  verify->add_option("--rho", cfg.rho, "order value");
  verify->add_option("--b", cfg.b, "log-shift offset");
  verify->add_option("--r0", cfg.r0, "log-shift threshold radius");
  verify->add_option("--n", cfg.n, "Clifford dimension for randomized checks");
  verify->add_option("--trials", cfg.trials, "randomized cases per check");
  add_common(verify, vc);

  auto* estimate = app.add_subcommand(
      "estimate", "type estimates for a coefficient file (JSON series)");
  std::string input;
  double est_rho = 1.0;
  estimate->add_option("--input", input, "SliceSeries JSON file")->required();
  estimate->add_option("--rho", est_rho, "constant order for both estimators");
  add_common(estimate, ec);

  auto* extract = app.add_subcommand(
      "extract", "coefficients of a built-in operator, with identity check");
  std::string op;
  double xa = 0.7;
  long L = 20, M = 12;
  int xn = 2, xtrials = 20;
  extract->add_option("--op", op, "identity | translate | derivative | compose")
      ->required()
      ->check(CLI::IsMember({"identity", "translate", "derivative", "compose"}));
  extract->add_option("--a", xa, "translation step");
  extract->add_option("--L", L, "coefficient truncation");
  extract->add_option("--n", xn, "Clifford dimension");
  extract->add_option("--M", M, "polynomial degree for the identity check");
  extract->add_option("--trials", xtrials, "random polynomials in the check");
  add_common(extract, xc);

  auto* superosc = app.add_subcommand(
      "superosc", "superoscillation convergence table and plot data");
  double sa = 2.0, st = 0.3;
  std::vector<int> ns = {5, 10, 20, 40, 80};
  std::vector<double> weights = {1.0};
  bool allow_boundary = false;
  std::string csv_path, plot_path;
  int plot_n = 0;
  superosc->add_option("--a", sa, "target frequency, > 1 (= 1 with the flag)");
  superosc->add_option("--t", st, "evolution time");
  superosc->add_option("--n", ns, "superposition sizes")->delimiter(',');
  superosc->add_option("--weights", weights, "exponential weights B")
      ->delimiter(',');
  superosc->add_flag("--allow-boundary", allow_boundary,
                     "accept the degenerate a = 1");
  superosc->add_option("--csv", csv_path, "write the table here (else stdout)");
  superosc->add_option("--plot", plot_path, "write plot-trace JSON here");
  superosc->add_option("--plot-n", plot_n, "n for the plot traces");
  add_common(superosc, sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      cfg.seed = vc.seed;
      return run_verify(vc, cfg, suite);
    }
    if (estimate->parsed()) return run_estimate(ec, input, est_rho);
    if (extract->parsed()) {
      // the identity check needs M <= L; follow a shrunken L unless the
      // user pinned M explicitly
      if (extract->count("--M") == 0) M = std::min(M, L);
      return run_extract(xc, op, xa, L, xn, M, xtrials);
    }
    if (superosc->parsed()) {
      if (!(sa > 1.0) && !(allow_boundary && sa == 1.0)) {
        std::fprintf(stderr,
                     "error: --a must exceed 1 (or equal 1 with "
                     "--allow-boundary); got %g\n",
                     sa);
        return 2;
      }
      if (ns.empty()) {
        std::fprintf(stderr, "error: --n needs at least one entry\n");
        return 2;
      }
      return run_superosc(sc, sa, st, ns, weights, allow_boundary, csv_path,
                          plot_path, plot_n);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
