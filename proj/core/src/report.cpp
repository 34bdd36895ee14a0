#include "lieder/report.hpp"

#include <algorithm>

namespace lieder {

std::string_view to_string(CheckStatus status) { return status == CheckStatus::Pass ? "pass" : "fail"; }

void VerificationReport::add(std::string name, std::string anchor, bool ok, nlohmann::json payload) {
  records_.push_back({std::move(name), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail,
                      std::move(payload)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& r : other.records_) {
    CheckRecord copy = r;
    if (!prefix.empty()) copy.name = prefix + "/" + copy.name;
    records_.push_back(std::move(copy));
  }
  for (const auto& n : other.notes_) note(n);
}

void VerificationReport::note(std::string text) {
  if (std::find(notes_.begin(), notes_.end(), text) == notes_.end()) notes_.push_back(std::move(text));
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const auto& r) { return r.passed(); }));
}

std::size_t VerificationReport::failed() const { return records_.size() - passed(); }

std::vector<CheckRecord> VerificationReport::failures() const {
  std::vector<CheckRecord> out;
  std::copy_if(records_.begin(), records_.end(), std::back_inserter(out), [](const auto& r) { return !r.passed(); });
  return out;
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : records_) {
    records.push_back({{"name", r.name}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"payload", r.payload}});
  }
  nlohmann::json out = {
      {"schema_version", kSchemaVersion},
      {"title", title_},
      {"header", {{"continuity", kFiniteRankNote}}},
      {"config", config_},
      {"replay_seed", seed_},
      {"notes", notes_},
      {"summary", {{"total", records_.size()}, {"passed", passed()}, {"failed", failed()}}},
      {"records", std::move(records)},
  };
  if (include_timing) out["duration_ms"] = duration_ms_;
  return out;
}

}  // namespace lieder
