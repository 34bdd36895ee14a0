#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "lieder/report.hpp"
#include "lieder/twolocal.hpp"

namespace lieder {

struct CampaignConfig {
  /// "twolocal", "local", "symcheck", "axioms" or "all".
  std::string mode = "all";
  std::size_t n_min = 3;
  std::size_t n_max = 3;
  /// "gauss", "fnring" or "poly".
  std::string ring = "gauss";
  std::size_t omega = 2;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  GaugeModel gauge = GaugeModel::Central;
  bool p_sweep = false;
  /// Symbolic identity to certify; empty certifies every known one.
  std::string lemma;
  std::string out;
  /// Upper bound on concurrent trials; results are merged in trial order.
  std::size_t workers = 1;

  nlohmann::json to_json() const;
};

/// "5" or "3..5". Throws ConfigError.
std::pair<std::size_t, std::size_t> parse_n_range(std::string_view text);

/// Throws ConfigError naming the offending field.
void validate(const CampaignConfig& config);

/// Validates, then runs the selected campaign. Records are ordered by n,
/// campaign and trial index, independent of scheduling.
VerificationReport run_campaign(const CampaignConfig& config);

/// Pass/fail counts per anchor, one line each.
std::string summary_table(const VerificationReport& report);

}  // namespace lieder
