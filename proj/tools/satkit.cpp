#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "satkit/dsl/tasks.hpp"
#include "satkit/dsl/workspace.hpp"
#include "satkit/error.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kTaskFailed = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Parses `path`, reporting problems as file:line:col on stderr.
bool load(const std::string& path, satkit::dsl::Workspace& w) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << path << ": cannot read file\n";
    return false;
  }
  try {
    w = satkit::dsl::parse_spec(text);
    return true;
  } catch (const satkit::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": " << e.kind() << ": " << e.detail() << "\n";
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"satkit: satellites of set- and group-valued functors along span schemas"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "parse and validate a DSL file");
  check->add_option("file", file, "DSL file")->required();

  satkit::dsl::RunOptions options;
  std::string format = "text";
  auto* run = app.add_subcommand("run", "run the tasks of a DSL file");
  run->add_option("file", file, "DSL file")->required();
  run->add_option("--task", options.selection, "run only this task (repeatable)");
  run->add_option("--seed", options.seed, "seed for randomized audits")->default_val(0);
  run->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}))->default_val("text");
  run->add_option("--max-enum-size", options.max_enum_size, "largest component set of audit candidates")
      ->default_val(3);
  run->add_option("--jobs", options.jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  satkit::dsl::Workspace w;
  if (!load(file, w)) return kInvalid;
  if (check->parsed()) {
    std::cout << file << ": ok (" << w.categories.size() << " categories, " << w.set_functors.size()
              << " set functors, " << w.ab_functors.size() << " ab functors, " << w.spans.size() << " spans, "
              << w.tasks.size() << " tasks)\n";
    return kOk;
  }

  std::vector<satkit::dsl::TaskResult> results;
  try {
    results = satkit::dsl::run_tasks(w, options);
  } catch (const satkit::Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kInvalid;
  }
  const auto fmt = format == "structured" ? satkit::dsl::Format::Structured : satkit::dsl::Format::Text;
  std::cout << satkit::dsl::serialize(results, fmt, options.seed);
  for (const auto& r : results)
    if (!r.ok()) return kTaskFailed;
  return kOk;
}
