#include <algorithm>
#include <memory>
#include <random>

#include "doctest.h"
#include "satkit/cat/category.hpp"
#include "satkit/cat/functor.hpp"
#include "satkit/cat/nat.hpp"
#include "satkit/error.hpp"

using namespace satkit;
using namespace satkit::cat;

namespace {

CatPtr parallel_pair() {
  return std::make_shared<FinCat>(free_category(FinGraph({"p", "q"}, {{"u", "p", "q"}, {"v", "p", "q"}})));
}

// T2(p) = {0,1}, T2(q) = {x,y,z}, T2(u) = (0->x, 1->y), T2(v) = (0->x, 1->z).
SetFunctorPtr t2(const CatPtr& c) {
  return std::make_shared<SetFunctor>(SetFunctor::from_names(
      c, {{"p", {"0", "1"}}, {"q", {"x", "y", "z"}}},
      {{"u", {{"0", "x"}, {"1", "y"}}}, {"v", {{"0", "x"}, {"1", "z"}}}}));
}

// Counts directed paths (including empty ones) by depth-first expansion.
std::size_t count_paths(const FinGraph& g) {
  std::size_t total = 0;
  auto walk = [&](auto&& self, std::size_t node) -> void {
    ++total;
    for (const auto& e : g.edges())
      if (e.source == node) self(self, e.target);
  };
  for (std::size_t n = 0; n < g.node_count(); ++n) walk(walk, n);
  return total;
}

// Every family of component functions, filtered by naturality.
std::vector<std::vector<std::vector<std::size_t>>> blind_nat_oracle(const SetFunctor& f, const SetFunctor& g) {
  const FinCat& c = f.category();
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (object, element)
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t i = 0; i < f.size(x); ++i) slots.emplace_back(x, i);
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> digits(slots.size(), 0);
  for (const auto& [x, i] : slots)
    if (g.size(x) == 0) return out;
  while (true) {
    std::vector<std::vector<std::size_t>> comps(c.object_count());
    for (std::size_t s = 0; s < slots.size(); ++s) comps[slots[s].first].push_back(digits[s]);
    bool natural = true;
    for (std::size_t m = 0; m < c.morphism_count() && natural; ++m)
      for (std::size_t i = 0; i < f.size(c.domain(m)); ++i)
        if (g.apply(m, comps[c.domain(m)][i]) != comps[c.codomain(m)][f.apply(m, i)]) natural = false;
    if (natural) out.push_back(comps);
    std::size_t s = 0;
    while (s < slots.size() && ++digits[s] == g.size(slots[s].first)) digits[s++] = 0;
    if (s == slots.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<std::size_t>>> tables(const std::vector<NatTransformation>& nats) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (const auto& a : nats) out.push_back(a.components);
  return out;
}

CatPtr random_free_category(std::mt19937_64& rng, std::size_t max_objects, std::size_t max_edges) {
  std::size_t n = 1 + rng() % max_objects;
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("o" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  std::size_t m = rng() % (max_edges + 1);
  for (std::size_t e = 0; e < m && n > 1; ++e) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.push_back({"e" + std::to_string(e), nodes[a], nodes[b]});
  }
  return std::make_shared<FinCat>(free_category(FinGraph(nodes, edges)));
}

SetFunctorPtr random_functor(std::mt19937_64& rng, const CatPtr& c, std::size_t max_size) {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::string>> sets;
  for (std::size_t x = 0; x < c->object_count(); ++x) {
    sizes.push_back(rng() % (max_size + 1));
    sets.emplace_back();
    for (std::size_t i = 0; i < sizes.back(); ++i) sets.back().push_back("a" + std::to_string(i));
  }
  std::map<std::size_t, std::vector<std::size_t>> gens;
  for (std::size_t g : c->generators()) {
    std::size_t a = c->domain(g), b = c->codomain(g);
    if (sizes[a] > 0 && sizes[b] == 0) {
      sizes[b] = 1;
      sets[b] = {"a0"};
    }
  }
  for (std::size_t g : c->generators()) {
    std::vector<std::size_t> fn(sizes[c->domain(g)]);
    for (auto& v : fn) v = rng() % sizes[c->codomain(g)];
    gens[g] = fn;
  }
  return std::make_shared<SetFunctor>(c, sets, extend_from_generators(*c, sizes, gens));
}

}  // namespace

TEST_CASE("validate_category on the terminal category") {
  CHECK(validate_category(terminal_category()).empty());
}

TEST_CASE("validate_category names a broken right unit") {
  FinCat c({"a", "b"}, {{"id(a)", "a", "a"}, {"id(b)", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}},
           {{"a", "id(a)"}, {"b", "id(b)"}},
           {{"id(a)", "id(a)", "id(a)"},
            {"id(b)", "id(b)", "id(b)"},
            {"f", "id(a)", "g"},
            {"g", "id(a)", "g"},
            {"id(b)", "f", "f"},
            {"id(b)", "g", "g"}});
  auto report = validate_category(c);
  REQUIRE(report.size() == 1);
  CHECK(report[0].law == "right-unit");
  CHECK(report[0].witnesses == std::vector<std::string>{"f"});
}

TEST_CASE("validate_category reports missing and mistyped entries") {
  FinCat missing({"a"}, {{"id(a)", "a", "a"}, {"e", "a", "a"}}, {{"a", "id(a)"}},
                 {{"id(a)", "id(a)", "id(a)"}, {"e", "id(a)", "e"}, {"id(a)", "e", "e"}});
  auto report = validate_category(missing);
  REQUIRE(report.size() == 1);
  CHECK(report[0].law == "totality");
  CHECK(report[0].witnesses == std::vector<std::string>{"e", "e"});

  FinCat mistyped({"a", "b"}, {{"id(a)", "a", "a"}, {"id(b)", "b", "b"}, {"f", "a", "b"}},
                  {{"a", "id(a)"}, {"b", "id(b)"}},
                  {{"id(a)", "id(a)", "id(a)"}, {"id(b)", "id(b)", "id(b)"}, {"f", "id(a)", "id(a)"},
                   {"id(b)", "f", "f"}});
  auto typing = validate_category(mistyped);
  CHECK(std::any_of(typing.begin(), typing.end(), [](const LawViolation& v) { return v.law == "typing"; }));
}

TEST_CASE("constructor rejects structural errors") {
  CHECK_THROWS_AS(FinCat({"a", "a"}, {}, {}, {}), ValidationError);
  CHECK_THROWS_AS(FinCat({"a"}, {{"id(a)", "a", "z"}}, {{"a", "id(a)"}}, {}), UnknownObject);
  CHECK_THROWS_AS(FinCat({"a"}, {{"id(a)", "a", "a"}}, {}, {}), ValidationError);
  CHECK_THROWS_AS(FinCat({"a", "b"}, {{"id(a)", "a", "a"}, {"id(b)", "b", "b"}}, {{"a", "id(a)"}, {"b", "id(b)"}},
                         {{"id(a)", "id(b)", "id(a)"}}),
                  ValidationError);
}

TEST_CASE("validate_category agrees with a brute-force law check on all 3-element monoid tables") {
  // Element 0 is the designated identity; all 3^9 tables on {0,1,2}.
  const std::vector<std::string> names{"id(m)", "s", "t"};
  std::size_t valid = 0;
  std::vector<std::size_t> table(9, 0);
  for (std::size_t code = 0; code < 19683; ++code) {
    std::size_t rest = code;
    for (auto& v : table) {
      v = rest % 3;
      rest /= 3;
    }
    std::vector<CompositeSpec> entries;
    for (std::size_t g = 0; g < 3; ++g)
      for (std::size_t f = 0; f < 3; ++f) entries.push_back({names[g], names[f], names[table[g * 3 + f]]});
    FinCat c({"m"}, {{names[0], "m", "m"}, {names[1], "m", "m"}, {names[2], "m", "m"}}, {{"m", names[0]}}, entries);

    bool lawful = true;
    for (std::size_t f = 0; f < 3; ++f)
      if (table[f * 3 + 0] != f || table[0 * 3 + f] != f) lawful = false;
    for (std::size_t h = 0; h < 3; ++h)
      for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t f = 0; f < 3; ++f)
          if (table[h * 3 + table[g * 3 + f]] != table[table[h * 3 + g] * 3 + f]) lawful = false;
    REQUIRE(validate_category(c).empty() == lawful);
    valid += lawful;
  }
  // Monoid structures on {0,1,2} with unit 0, counted by an external script.
  CHECK(valid == 11);
}

TEST_CASE("free_category examples") {
  FinCat one = free_category(FinGraph({"pt"}, {}));
  CHECK(one.morphism_count() == 1);
  CHECK(one.objects() == terminal_category("pt").objects());

  auto pq = parallel_pair();
  CHECK(pq->morphism_count() == 4);
  CHECK(validate_category(*pq).empty());
  CHECK(pq->hom(pq->object_index("p"), pq->object_index("q")).size() == 2);

  FinGraph chain({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}});
  FinCat c = free_category(chain);
  CHECK(c.morphism_count() == count_paths(chain));
  CHECK(c.morphism_count() == 6);
  std::size_t gf = c.morphism_index("g.f");
  CHECK(c.compose(c.morphism_index("g"), c.morphism_index("f")) == gf);
  CHECK(c.path(gf) == std::vector<std::size_t>{c.morphism_index("f"), c.morphism_index("g")});
  CHECK(validate_category(c).empty());

  CHECK_THROWS_AS(free_category(FinGraph({"a"}, {{"loop", "a", "a"}})), CyclicGraph);
  CHECK_THROWS_AS(free_category(FinGraph({"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}})), CyclicGraph);
}

TEST_CASE("free categories are valid and count paths") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 5;
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    std::vector<EdgeSpec> edges;
    for (std::size_t e = 0; e < rng() % 7; ++e) {
      std::size_t a = rng() % n, b = rng() % n;
      if (a >= b) continue;
      edges.push_back({"e" + std::to_string(e), nodes[a], nodes[b]});
    }
    FinGraph g(nodes, edges);
    FinCat c = free_category(g);
    CHECK(validate_category(c).empty());
    CHECK(c.morphism_count() == count_paths(g));
  }
}

TEST_CASE("opposite_category") {
  FinCat t = terminal_category();
  CHECK(opposite_category(t) == t);

  FinCat ab = free_category(FinGraph({"a", "b"}, {{"f", "a", "b"}}));
  FinCat op = opposite_category(ab);
  std::size_t f = op.morphism_index("f");
  CHECK(op.domain(f) == op.object_index("b"));
  CHECK(op.codomain(f) == op.object_index("a"));
  CHECK(op.hom(op.object_index("b"), op.object_index("a")).size() == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_free_category(rng, 4, 5);
    FinCat o = opposite_category(*c);
    CHECK(validate_category(o).empty());
    CHECK(opposite_category(o) == *c);
  }
}

TEST_CASE("nat_set examples") {
  auto pq = parallel_pair();
  auto t = t2(pq);
  auto nats = nat_set(t, t);
  CHECK(std::find(nats.begin(), nats.end(), identity_transformation(t)) != nats.end());
  CHECK(tables(nats) == blind_nat_oracle(*t, *t));

  auto one = std::make_shared<FinCat>(terminal_category());
  auto two = std::make_shared<SetFunctor>(SetFunctor::constant(one, {"0", "1"}));
  CHECK(nat_set(two, two).size() == 4);
}

TEST_CASE("nat_set results are canonically ordered") {
  auto one = std::make_shared<FinCat>(terminal_category());
  auto two = std::make_shared<SetFunctor>(SetFunctor::constant(one, {"0", "1"}));
  auto three = std::make_shared<SetFunctor>(SetFunctor::constant(one, {"a", "b", "c"}));
  auto nats = nat_set(two, three);
  REQUIRE(nats.size() == 9);
  CHECK(std::is_sorted(nats.begin(), nats.end(),
                       [](const NatTransformation& a, const NatTransformation& b) { return a.components < b.components; }));
  CHECK_THROWS_AS(nat_set(two, three, 5), EnumerationLimit);
}

TEST_CASE("the empty functor has exactly one transformation out of it") {
  auto empty_cat = std::make_shared<FinCat>(FinCat({}, {}, {}, {}));
  auto e = std::make_shared<SetFunctor>(SetFunctor(empty_cat, {}, {}));
  CHECK(nat_set(e, e).size() == 1);

  auto pq = parallel_pair();
  auto empty = std::make_shared<SetFunctor>(SetFunctor::constant(pq, {}));
  CHECK(nat_set(empty, t2(pq)).size() == 1);
  CHECK(nat_set(t2(pq), empty).empty());
}

TEST_CASE("nat_set matches blind enumeration on random functors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    auto c = random_free_category(rng, 4, 4);
    auto f = random_functor(rng, c, 3);
    auto g = random_functor(rng, c, 3);
    auto nats = nat_set(f, g);
    REQUIRE(tables(nats) == blind_nat_oracle(*f, *g));
    for (const auto& a : nats) CHECK(is_natural(a));
  }
}

TEST_CASE("restricted nat_set equals the filtered blind enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    auto c = random_free_category(rng, 3, 3);
    auto f = random_functor(rng, c, 3);
    auto g = random_functor(rng, c, 3);
    std::vector<ComponentRestriction> rs;
    for (std::size_t x = 0; x < c->object_count(); ++x)
      for (std::size_t i = 0; i < f->size(x); ++i) {
        if (rng() % 3 != 0) continue;
        std::vector<bool> allowed(g->size(x));
        for (std::size_t v = 0; v < allowed.size(); ++v) allowed[v] = rng() % 2 == 0;
        rs.push_back({x, i, allowed});
      }
    std::vector<std::vector<std::vector<std::size_t>>> expected;
    for (const auto& table : blind_nat_oracle(*f, *g))
      if (std::all_of(rs.begin(), rs.end(), [&](const ComponentRestriction& r) { return r.allowed[table[r.object][r.element]]; }))
        expected.push_back(table);
    CHECK(tables(nat_set(f, g, rs)) == expected);
  }
  auto one = std::make_shared<FinCat>(terminal_category());
  auto a = std::make_shared<SetFunctor>(SetFunctor::constant(one, {"0"}));
  CHECK_THROWS_AS(nat_set(a, a, {{0, 1, {true}}}), UnknownObject);
  CHECK(nat_set(a, a, {{0, 0, {true}}, {0, 0, {false}}}).empty());
}

TEST_CASE("nat_set rejects functors on different categories") {
  auto one = std::make_shared<FinCat>(terminal_category());
  auto pq = parallel_pair();
  auto a = std::make_shared<SetFunctor>(SetFunctor::constant(one, {"0"}));
  CHECK_THROWS_AS(nat_set(a, t2(pq)), SourceMismatch);
}

TEST_CASE("hom_functor") {
  auto one = std::make_shared<FinCat>(terminal_category());
  SetFunctor h = hom_functor(one, "pt");
  CHECK(h.set(0) == std::vector<std::string>{"id(pt)"});

  auto pq = parallel_pair();
  SetFunctor hp = hom_functor(pq, "p");
  CHECK(hp.set(pq->object_index("p")) == std::vector<std::string>{"id(p)"});
  CHECK(hp.set(pq->object_index("q")) == std::vector<std::string>{"u", "v"});
  CHECK_THROWS_AS(hom_functor(pq, "r"), UnknownObject);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_free_category(rng, 4, 5);
    for (std::size_t x = 0; x < c->object_count(); ++x) CHECK(functor_law_violations(hom_functor(c, x)).empty());
  }
}

TEST_CASE("SetFunctor canonicalizes labels and validates structure") {
  auto pq = parallel_pair();
  SetFunctor t = *t2(pq);
  CHECK(functor_law_violations(t).empty());
  CHECK(t.apply(pq->morphism_index("v"), t.element_index(0, "1")) == t.element_index(1, "z"));

  // Shuffled input order gives the same functor.
  std::vector<std::vector<std::string>> sets{{"1", "0"}, {"z", "x", "y"}};
  std::vector<std::vector<std::size_t>> fns(4);
  fns[pq->morphism_index("id(p)")] = {0, 1};
  fns[pq->morphism_index("id(q)")] = {0, 1, 2};
  fns[pq->morphism_index("u")] = {2, 1};
  fns[pq->morphism_index("v")] = {0, 1};
  CHECK(SetFunctor(pq, sets, fns) == t);

  CHECK_THROWS_AS(SetFunctor::from_names(pq, {{"p", {"0"}}, {"q", {"x"}}}, {{"u", {{"0", "x"}}}}), ValidationError);
  CHECK_THROWS_AS(SetFunctor::from_names(pq, {{"p", {"0"}}, {"q", {"x"}}}, {{"u", {{"0", "w"}}}, {"v", {{"0", "x"}}}}),
                  UnknownReference);
}

TEST_CASE("functor_law_violations catches a non-functor on an explicit category") {
  // Walking idempotent: e.e = e.
  auto idem = std::make_shared<FinCat>(FinCat({"m"}, {{"id(m)", "m", "m"}, {"e", "m", "m"}}, {{"m", "id(m)"}},
                                              {{"id(m)", "id(m)", "id(m)"}, {"e", "id(m)", "e"}, {"id(m)", "e", "e"}, {"e", "e", "e"}}));
  REQUIRE(validate_category(*idem).empty());
  SetFunctor good = SetFunctor::from_names(idem, {{"m", {"a", "b"}}}, {{"e", {{"a", "a"}, {"b", "a"}}}});
  CHECK(functor_law_violations(good).empty());
  SetFunctor bad = SetFunctor::from_names(idem, {{"m", {"a", "b"}}}, {{"e", {{"a", "b"}, {"b", "a"}}}});
  CHECK_FALSE(functor_law_violations(bad).empty());
}

TEST_CASE("Diagram and CatFunctor validation") {
  auto pq = parallel_pair();
  auto g = std::make_shared<FinGraph>(FinGraph({"s", "t"}, {{"e", "s", "t"}}));
  CHECK_NOTHROW(Diagram::from_names(g, pq, {{"s", "p"}, {"t", "q"}}, {{"e", "u"}}));
  CHECK_THROWS_AS(Diagram::from_names(g, pq, {{"s", "q"}, {"t", "q"}}, {{"e", "u"}}), EndpointMismatch);

  auto op = std::make_shared<FinCat>(opposite_category(*pq));
  std::vector<std::size_t> objects{0, 1}, morphisms{0, 1, 2, 3};
  CatFunctor id(pq, pq, objects, morphisms);
  CHECK(functor_law_violations(id).empty());
  CatFunctor wrong(pq, op, objects, morphisms);
  CHECK_FALSE(functor_law_violations(wrong).empty());
}
