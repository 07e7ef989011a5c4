#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "satkit/dsl/workspace.hpp"

namespace satkit::dsl {

struct RunOptions {
  std::vector<std::string> selection;  // empty: every task
  std::uint64_t seed = 0;
  std::size_t max_enum_size = 3;  // component sets of audit candidates
  std::size_t candidates = 6;     // candidate functors per universality audit
  std::size_t enumeration_limit = 100000;
  std::size_t jobs = 1;
};

struct TaskResult {
  std::string name;
  std::string kind;
  std::string status;  // "ok" or "failed"
  nlohmann::json payload = nlohmann::json::object();
  std::string error_kind;
  std::string error_message;

  bool ok() const { return status == "ok"; }
};

// Runs the selected tasks (file order) and returns one result per task in
// that order. Task i draws its randomness from Rng(seed).fork(i) with i its
// position in the file, so results do not depend on the selection or on
// `jobs`. Task errors become failed results. Throws UnknownReference for a
// selected name that is not a task.
std::vector<TaskResult> run_tasks(const Workspace& w, const RunOptions& options);

enum class Format { Text, Structured };

// Structured: compact JSON with sorted keys. Text: an indented report.
std::string serialize(const TaskResult& result, Format format);
// The whole run: structured output is {"results":[...],"seed":N} on one line.
std::string serialize(const std::vector<TaskResult>& results, Format format, std::uint64_t seed);

nlohmann::json to_json(const TaskResult& result);
TaskResult from_json(const nlohmann::json& j);

}  // namespace satkit::dsl
