#pragma once

#include <map>
#include <string>
#include <vector>

namespace holoball {

inline constexpr const char* kLibraryVersion = "holoball 1.0.0";

/// One numeric assertion of a suite: measured value against a threshold, with
/// the anchor naming the statement being verified.
struct AssertionRow {
  std::string name;
  std::string anchor;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool empty() const { return rows.empty(); }
};

/// Outcome of one suite run. Serialization is deterministic: the wall clock
/// lives in the single "timestamp" field and everything else depends only on
/// the configuration and seed.
struct RunRecord {
  std::string suite;
  std::map<std::string, std::string> config_echo;  // sorted keys
  std::string version = kLibraryVersion;
  long long unix_ms = 0;
  double duration_ms = 0.0;
  bool expected_failure = false;
  std::vector<AssertionRow> assertions;
  std::vector<std::string> notes;
  bool passed = false;

  void add(std::string name, std::string anchor, double measured, double threshold,
           bool pass, std::string detail = "");
  void finalize();  // passed = all assertions pass

  std::string to_json() const;  // pretty, fixed key order
};

std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string csv_to_string(const CsvTable& table);

}  // namespace holoball
