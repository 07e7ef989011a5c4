#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "satkit/dsl/tasks.hpp"
#include "satkit/dsl/workspace.hpp"
#include "satkit/error.hpp"

using namespace satkit;
using namespace satkit::dsl;
using nlohmann::json;

namespace {

const char* kE1 = R"(
category PQ {
  object p, q;
  arrow u: p -> q;
  arrow v: p -> q;
}
category One { object pt; }
setfunctor T2: PQ -> Set {
  on p = {0, 1};
  on q = {x, y, z};
  on u = {0 -> x, 1 -> y};
  on v = {0 -> x, 1 -> z};
}
span E1: PQ, One {
  node n_p, n_q;
  edge e_u: n_p -> n_q;
  edge e_v: n_p -> n_q;
  F n_p = p; F n_q = q; F e_u = u; F e_v = v;
  G n_p = pt; G n_q = pt; G e_u = id(pt); G e_v = id(pt);
}
task right_satellite R(E1, T2);
)";

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(SATKIT_CORPUS_DIR))
    if (e.path().extension() == ".dsl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError("none", 0, 0, "");
}

std::string run_structured(const Workspace& w, RunOptions options) {
  return serialize(run_tasks(w, options), Format::Structured, options.seed);
}

}  // namespace

TEST_CASE("minimal file") {
  Workspace w = parse_spec("category One { object pt; }\n");
  REQUIRE(w.categories.size() == 1);
  CHECK(w.categories[0].cat->object_count() == 1);
  CHECK(w.tasks.empty());
  CHECK(run_tasks(w, {}).empty());
  CHECK(parse_spec("# nothing\n").categories.empty());
}

TEST_CASE("errors carry kind and position") {
  auto e = parse_error("category C {\n  object a;\n  arrow f: a -> b;\n}\n");
  CHECK(e.kind() == "UnknownReference");
  CHECK(e.line() == 3);
  CHECK(e.column() == 17);

  e = parse_error("category C { object a }");
  CHECK(e.kind() == "SyntaxError");
  CHECK(e.line() == 1);

  e = parse_error("category C { object a; }\ncategory C { object b; }\n");
  CHECK(e.kind() == "ValidationError");
  CHECK(e.line() == 2);

  // A cycle without a composition table.
  e = parse_error("category C {\n object a, b;\n arrow f: a -> b;\n arrow g: b -> a;\n}\n");
  CHECK(e.kind() == "CyclicGraph");

  // An incomplete table.
  e = parse_error("category C {\n object a;\n arrow e: a -> a;\n arrow k: a -> a;\n compose e.e = e;\n}\n");
  CHECK(e.kind() == "ValidationError");

  // Functor laws are checked at parse time.
  e = parse_error(
      "category Z2 { object g; arrow s: g -> g; compose s.s = id(g); }\n"
      "setfunctor T: Z2 -> Set { on g = {0, 1}; on s = {0 -> 0, 1 -> 0}; }\n");
  CHECK(e.kind() == "ValidationError");
  CHECK(e.line() == 2);

  e = parse_error(std::string(kE1) + "task right_satellite R2(E1, Nope);\n");
  CHECK(e.kind() == "UnknownReference");
  CHECK(e.line() == 22);

  e = parse_error(std::string(kE1) + "task right_satellite R2(T2, E1);\n");
  CHECK(e.kind() == "ValidationError");

  e = parse_error(std::string(kE1) + "task no_such_kind K(E1);\n");
  CHECK(e.line() == 22);

  // G e_u = u lands in the wrong category.
  std::string wrong = kE1;
  wrong.replace(wrong.find("G e_u = id(pt)"), 14, "G e_u = u");
  CHECK(parse_error(wrong).kind() == "UnknownReference");
}

TEST_CASE("every parse error has a position") {
  for (const auto& path : corpus()) {
    const std::string text = slurp(path);
    const std::size_t lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    auto probe = [&](const std::string& variant) {
      try {
        parse_spec(variant);
      } catch (const ParseError& e) {
        CHECK(e.line() >= 1);
        CHECK(e.line() <= lines + 1);
        CHECK(e.column() >= 1);
      } catch (const std::exception& e) {
        FAIL("positionless error: " << e.what());
      }
    };
    for (std::size_t i = 0; i < text.size(); i += 3) {
      probe(text.substr(0, i));
      probe(text.substr(0, i) + text.substr(i + 1));
    }
  }
}

TEST_CASE("E1 file runs to the two-class result") {
  Workspace w = parse_spec(kE1);
  auto results = run_tasks(w, {});
  REQUIRE(results.size() == 1);
  CHECK(results[0].ok());
  const json& pt = results[0].payload["objects"]["pt"];
  CHECK(pt["size"] == 2);
  REQUIRE(pt["classes"].size() == 2);
  CHECK(pt["classes"][0]["representative"] == "cls(id(pt),n_p,0)");
  CHECK(pt["classes"][1]["representative"] == "cls(id(pt),n_p,1)");
  CHECK(pt["classes"][1]["members"] == json{"cls(id(pt),n_p,1)", "cls(id(pt),n_q,y)", "cls(id(pt),n_q,z)"});
  CHECK(results[0].payload["universality"]["passed"] == true);
}

TEST_CASE("tasks run in file order and failures stay local") {
  Workspace w = parse_spec(
      "category One { object pt; }\n"
      "abfunctor Z: One -> Ab { on pt = group(a); }\n"
      "abfunctor Zero: One -> Ab { on pt = group(); }\n"
      "span I = identity(One);\n"
      "task ab_right_satellite infinite(I, Z);\n"
      "task ab_right_satellite trivial(I, Zero);\n");
  auto results = run_tasks(w, {});
  REQUIRE(results.size() == 2);
  CHECK(results[0].name == "infinite");
  CHECK(results[0].status == "failed");
  CHECK(results[0].error_kind == "InfiniteGroup");
  CHECK(results[1].name == "trivial");
  CHECK(results[1].ok());
  const json& pt = results[1].payload["objects"]["pt"];
  CHECK(pt["rank"] == 0);
  CHECK(pt["torsion"] == json::array());

  const std::string s = serialize(results[1], Format::Structured);
  CHECK(s.find("\"rank\":0") != std::string::npos);
  CHECK(s.find("\"torsion\":[]") != std::string::npos);

  RunOptions only;
  only.selection = {"trivial"};
  auto one = run_tasks(w, only);
  REQUIRE(one.size() == 1);
  CHECK(serialize(one[0], Format::Structured) == s);
  only.selection = {"missing"};
  CHECK_THROWS_AS(run_tasks(w, only), UnknownReference);
}

TEST_CASE("structured output is canonical") {
  for (const auto& path : corpus()) {
    Workspace w = parse_spec(slurp(path));
    for (const auto& r : run_tasks(w, {})) {
      const std::string s = serialize(r, Format::Structured);
      CHECK(json::parse(s).dump() == s);
      CHECK(serialize(from_json(json::parse(s)), Format::Structured) == s);
      CHECK_FALSE(serialize(r, Format::Text).empty());
    }
  }
}

TEST_CASE("determinism across runs and worker counts") {
  for (const auto& path : corpus()) {
    Workspace w = parse_spec(slurp(path));
    RunOptions a;
    a.seed = 17;
    RunOptions b = a;
    b.jobs = 4;
    const std::string first = run_structured(w, a);
    CHECK(first == run_structured(w, a));
    CHECK(first == run_structured(w, b));
  }
}

TEST_CASE("round trip through the DSL writer") {
  std::vector<std::string> texts{kE1};
  for (const auto& path : corpus()) texts.push_back(slurp(path));
  for (const auto& text : texts) {
    Workspace w = parse_spec(text);
    const std::string written = to_dsl(w);
    Workspace again = parse_spec(written);
    CHECK(equivalent(w, again));
    CHECK(to_dsl(again) == written);
    CHECK(run_structured(w, {}) == run_structured(again, {}));
  }
  CHECK_FALSE(equivalent(parse_spec("category A { object x; }"), parse_spec("category A { object y; }")));
}

TEST_CASE("corpus covers every task kind") {
  std::set<std::string> kinds;
  for (const auto& path : corpus())
    for (const auto& t : parse_spec(slurp(path)).tasks) kinds.insert(t.kind);
  CHECK(corpus().size() >= 6);
  CHECK(kinds == std::set<std::string>(task_kinds().begin(), task_kinds().end()));
}
