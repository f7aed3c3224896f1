#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace minorlab {

struct Counterexample {
  std::string graph6;
  std::string context;
};

// Machine-readable verification record.  Serialized with a fixed key order;
// wall_ms is the only field allowed to differ between equal runs.
struct LemmaReport {
  std::string id;
  nlohmann::ordered_json params;
  uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  uint64_t witnesses_stored = 0;
  double wall_ms = 0.0;
  nlohmann::ordered_json config;

  bool verified() const { return counterexamples.empty(); }
  nlohmann::ordered_json to_json() const;
};

LemmaReport report_from_json(const nlohmann::ordered_json& j);

// Appends one JSON line per report to <dir>/reports.jsonl and stores witness
// documents under <dir>/witnesses/<id>/.  Paths are created on demand.
class ReportWriter {
 public:
  explicit ReportWriter(std::string dir) : dir_(std::move(dir)) {}

  void append(const LemmaReport& report) const;
  // Deterministic witness files: the key is derived from the instance, never
  // from scheduling.
  void store_witness(const std::string& id, const std::string& key,
                     const nlohmann::ordered_json& doc) const;
  std::string witness_dir(const std::string& id) const;
  const std::string& dir() const { return dir_; }
  bool enabled() const { return !dir_.empty(); }

 private:
  std::string dir_;
};

// Re-validates every stored witness document under <dir>/witnesses.
// Returns the number checked; throws on the first invalid one.
uint64_t revalidate_witnesses(const std::string& dir);

}  // namespace minorlab
