#pragma once

#include "lalg/manifest.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lalg {

struct RunOptions {
  int wlo = -4;
  int whi = 4;
  std::optional<int> max_degree;
  int threads = 1;
  bool verbose = false;
};

// one structured output record, serialized as a tab separated line
struct TaskRecord {
  std::string task;
  std::string object;
  std::string key;
  std::string value;
};

struct RunReport {
  std::vector<TaskRecord> records;
  std::string table;    // human readable rendering of the same results
  bool failed = false;  // a verification task failed or a task errored
  int exit_code() const { return failed ? 1 : 0; }
};

// executes the task blocks in declaration order; task errors become error
// records and never abort the remaining tasks
RunReport run_tasks(const Manifest& m, const RunOptions& opt);

std::string records_to_tsv(const std::vector<TaskRecord>& records);

}  // namespace lalg
