#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lieder {

enum class CheckStatus { Pass, Fail };

std::string_view to_string(CheckStatus status);

struct CheckRecord {
  std::string name;
  /// Identifier of the identity or statement the check exercises.
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json payload = nlohmann::json::object();

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Ordered outcome of a verification campaign. Records are appended in a
/// deterministic order so that replaying the same configuration reproduces
/// the record list byte for byte; wall-clock time is kept out of the records.
class VerificationReport {
 public:
  static constexpr int kSchemaVersion = 3;
  static constexpr const char* kFiniteRankNote =
      "finite rank: every linear map is continuous in every vector topology, so continuity hypotheses hold "
      "automatically and limits over finite subsets reduce to exact finite linear combinations";

  VerificationReport() = default;
  explicit VerificationReport(std::string title, std::uint64_t seed = 0) : title_(std::move(title)), seed_(seed) {}

  void add(std::string name, std::string anchor, bool ok, nlohmann::json payload = nlohmann::json::object());
  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  /// Appends every record of `other`, prefixing names with `prefix` when nonempty.
  void merge(const VerificationReport& other, const std::string& prefix = "");
  void note(std::string text);

  const std::string& title() const { return title_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  std::vector<CheckRecord> failures() const;

  void set_config(nlohmann::json config) { config_ = std::move(config); }
  void set_duration_ms(double ms) { duration_ms_ = ms; }

  /// With `include_timing` false the output depends only on config and seed.
  nlohmann::json to_json(bool include_timing = true) const;

 private:
  std::string title_;
  std::uint64_t seed_ = 0;
  nlohmann::json config_ = nlohmann::json::object();
  std::vector<CheckRecord> records_;
  std::vector<std::string> notes_;
  double duration_ms_ = 0.0;
};

}  // namespace lieder
