#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lieder/campaign.hpp"
#include "lieder/error.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification campaigns for derivations on skew-adjoint matrix Lie rings"};
  lieder::CampaignConfig config;
  std::string n_text = "3";
  std::string gauge = "central";
  app.add_option("--mode", config.mode, "twolocal | local | symcheck | axioms | all")->capture_default_str();
  app.add_option("--n", n_text, "matrix size, single value or range a..b")->capture_default_str();
  app.add_option("--ring", config.ring, "gauss | fnring | poly")->capture_default_str();
  app.add_option("--omega", config.omega, "number of points for the function ring")->capture_default_str();
  app.add_option("--trials", config.trials, "oracles per n, or axiom samples")->capture_default_str();
  app.add_option("--seed", config.seed, "replay seed")->capture_default_str();
  app.add_option("--gauge", gauge, "witness gauge: none | central")->capture_default_str();
  app.add_flag("--p-sweep", config.p_sweep, "also check independence of the third index and of (io, jo)");
  app.add_option("--lemma", config.lemma, "symbolic identity to certify (default: all)");
  app.add_option("--out", config.out, "path of the JSON report");
  app.add_option("--workers", config.workers, "concurrent trials")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  lieder::VerificationReport report;
  std::ofstream file;
  try {
    const auto [lo, hi] = lieder::parse_n_range(n_text);
    config.n_min = lo;
    config.n_max = hi;
    config.gauge = lieder::parse_gauge(gauge);
    lieder::validate(config);
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) {
        std::cerr << "IOError: cannot open '" << config.out << "' for writing\n";
        return kExitIo;
      }
    }
    report = lieder::run_campaign(config);
  } catch (const lieder::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == lieder::ErrorKind::ConfigError ? kExitConfig : kExitFailure;
  }

  if (file.is_open()) {
    file << report.to_json().dump(2) << "\n";
    file.close();
    if (!file) {
      std::cerr << "IOError: writing '" << config.out << "' failed\n";
      return kExitIo;
    }
  }
  std::cout << lieder::summary_table(report);
  for (const auto& f : report.failures()) std::cout << "FAIL " << f.name << " [" << f.anchor << "]\n";
  return report.all_passed() ? 0 : kExitFailure;
}
