#include <algorithm>
#include <memory>
#include <set>

#include "doctest.h"
#include "satkit/error.hpp"
#include "satkit/lab/random.hpp"
#include "satkit/span/closure.hpp"
#include "satkit/span/satellite.hpp"
#include "satkit/span/span.hpp"

using namespace satkit;
using namespace satkit::cat;
using namespace satkit::span;

namespace {

CatPtr parallel_pair() {
  return std::make_shared<FinCat>(free_category(FinGraph({"p", "q"}, {{"u", "p", "q"}, {"v", "p", "q"}})));
}

CatPtr terminal() { return std::make_shared<FinCat>(terminal_category()); }

SetFunctorPtr t2(const CatPtr& c) {
  return std::make_shared<SetFunctor>(SetFunctor::from_names(
      c, {{"p", {"0", "1"}}, {"q", {"x", "y", "z"}}},
      {{"u", {{"0", "x"}, {"1", "y"}}}, {"v", {{"0", "x"}, {"1", "z"}}}}));
}

SpanPtr e1_span(const CatPtr& pq, const CatPtr& one) {
  auto shape = std::make_shared<FinGraph>(FinGraph({"n_p", "n_q"}, {{"e_u", "n_p", "n_q"}, {"e_v", "n_p", "n_q"}}));
  return std::make_shared<SpanSchema>(build_span(shape, pq, {{{"n_p", "p"}, {"n_q", "q"}}, {{"e_u", "u"}, {"e_v", "v"}}},
                                                 one, {{{"n_p", "pt"}, {"n_q", "pt"}}, {{"e_u", "id(pt)"}, {"e_v", "id(pt)"}}}));
}

SetFunctorPtr constant(const CatPtr& c, std::vector<std::string> elements) {
  return std::make_shared<SetFunctor>(SetFunctor::constant(c, std::move(elements)));
}

std::set<std::string> class_strings(const SatelliteResult& r, std::size_t y, std::size_t k) {
  std::set<std::string> out;
  for (const auto& t : r.classes(y)[k].members) out.insert(r.describe(t));
  return out;
}

// Reflexive-symmetric-transitive closure by repeated relational squaring.
std::vector<std::size_t> naive_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& [a, b] : pairs) rel[a][b] = rel[b][a] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (rel[j][k] && !rel[i][k]) rel[i][k] = rel[k][i] = changed = true;
  }
  std::vector<std::size_t> least(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) {
        least[i] = j;
        break;
      }
  return least;
}

// Blind product-and-filter enumeration of connecting morphisms.
std::vector<std::vector<std::vector<std::size_t>>> blind_connecting(const SpanSchema& s, const SetFunctor& t,
                                                                    const SetFunctor& v) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t n = 0; n < s.shape().node_count(); ++n)
    for (std::size_t i = 0; i < t.size(s.left().node(n)); ++i) slots.emplace_back(n, i);
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (const auto& [n, i] : slots)
    if (v.size(s.right().node(n)) == 0) return out;
  std::vector<std::size_t> digits(slots.size(), 0);
  while (true) {
    std::vector<std::vector<std::size_t>> comps(s.shape().node_count());
    for (std::size_t k = 0; k < slots.size(); ++k) comps[slots[k].first].push_back(digits[k]);
    bool ok = true;
    for (std::size_t e = 0; e < s.shape().edge_count(); ++e) {
      const auto& edge = s.shape().edges()[e];
      for (std::size_t i = 0; i < t.size(s.left().node(edge.source)); ++i)
        if (v.apply(s.right().edge(e), comps[edge.source][i]) != comps[edge.target][t.apply(s.left().edge(e), i)])
          ok = false;
    }
    if (ok) out.push_back(comps);
    std::size_t k = 0;
    while (k < slots.size() && ++digits[k] == v.size(s.right().node(slots[k].first))) digits[k++] = 0;
    if (k == slots.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("build_span") {
  auto pq = parallel_pair();
  auto one = terminal();
  SpanSchema id = identity_span(pq);
  CHECK(id.shape().node_count() == 2);
  CHECK(id.shape().edge_count() == 4);

  auto shape = std::make_shared<FinGraph>(FinGraph({"a", "b"}, {{"e", "a", "b"}}));
  CHECK_THROWS_AS(build_span(shape, pq, {{{"a", "q"}, {"b", "q"}}, {{"e", "u"}}}, one,
                             {{{"a", "pt"}, {"b", "pt"}}, {{"e", "id(pt)"}}}),
                  EndpointMismatch);
  CHECK_NOTHROW(e1_span(pq, one));

  auto other = std::make_shared<FinGraph>(FinGraph({"a"}, {}));
  Diagram f = Diagram::from_names(other, pq, {{"a", "p"}}, {});
  Diagram g = Diagram::from_names(shape, one, {{"a", "pt"}, {"b", "pt"}}, {{"e", "id(pt)"}});
  CHECK_THROWS_AS(build_span(shape, f, g), SourceMismatch);
}

TEST_CASE("opposite_span") {
  auto pq = parallel_pair();
  auto one = terminal();
  SpanSchema t = identity_span(one);
  CHECK(opposite_span(t) == t);

  auto e1 = e1_span(pq, one);
  SpanSchema op = opposite_span(*e1);
  CHECK(op == opposite_span(opposite_span(op)));
  CHECK(opposite_span(op) == *e1);
  CHECK(*op.x() == opposite_category(*one));
  CHECK(*op.y() == opposite_category(*pq));
  for (const auto& e : op.shape().edges()) {
    CHECK(op.shape().nodes()[e.source] == "n_q");
    CHECK(op.shape().nodes()[e.target] == "n_p");
  }
}

TEST_CASE("equivalence_closure") {
  Partition discrete = equivalence_closure(4, {});
  CHECK(discrete.classes.size() == 4);

  auto [items, p] = equivalence_closure<std::string>({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.classes[1] == std::vector<std::size_t>{3});
  CHECK_THROWS_AS((equivalence_closure<std::string>({"a"}, {{"a", "z"}})), UnknownTriple);
  CHECK_THROWS_AS(equivalence_closure(2, {{0, 5}}), UnknownTriple);

  lab::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int i = 0; i < 40; ++i) pairs.emplace_back(rng.below(50), rng.below(50));
    Partition q = equivalence_closure(50, pairs);
    auto least = naive_closure(50, pairs);
    for (std::size_t i = 0; i < 50; ++i) CHECK(q.classes[q.class_of[i]].front() == least[i]);
  }
}

TEST_CASE("right_satellite of the E1 instance has the two hand-expanded classes") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto r = right_satellite(e1_span(pq, one), t2(pq));
  REQUIRE(r.functor()->size(0) == 2);
  CHECK(class_strings(r, 0, 0) == std::set<std::string>{"cls(id(pt),n_p,0)", "cls(id(pt),n_q,x)"});
  CHECK(class_strings(r, 0, 1) ==
        std::set<std::string>{"cls(id(pt),n_p,1)", "cls(id(pt),n_q,y)", "cls(id(pt),n_q,z)"});
  CHECK(r.describe(r.classes(0)[0].representative) == "cls(id(pt),n_p,0)");
  CHECK(r.describe(r.classes(0)[1].representative) == "cls(id(pt),n_p,1)");
  CHECK(functor_law_violations(*r.functor()).empty());
  CHECK(is_connecting(r.unit()));
}

TEST_CASE("right_satellite with no relations keeps every triple") {
  auto one = terminal();
  auto shape = std::make_shared<FinGraph>(FinGraph({"x"}, {}));
  auto s = std::make_shared<SpanSchema>(build_span(shape, one, {{{"x", "pt"}}, {}}, one, {{{"x", "pt"}}, {}}));
  auto r = right_satellite(s, constant(one, {"a", "b"}));
  CHECK(r.functor()->set(0) == std::vector<std::string>{"cls(id(pt),x,a)", "cls(id(pt),x,b)"});
}

TEST_CASE("empty shape gives the empty functor") {
  auto one = terminal();
  auto shape = std::make_shared<FinGraph>();
  auto s = std::make_shared<SpanSchema>(build_span(shape, one, {}, one, {}));
  auto r = right_satellite(s, constant(one, {"a"}));
  CHECK(r.functor()->size(0) == 0);
}

TEST_CASE("right_satellite along the identity span is isomorphic to T") {
  for (const auto& c : lab::standard_categories()) {
    lab::Rng rng(c->object_count() * 31 + c->morphism_count());
    for (int trial = 0; trial < 5; ++trial) {
      auto t = lab::random_set_functor(rng, c, 3);
      auto s = std::make_shared<SpanSchema>(identity_span(c));
      auto r = right_satellite(s, t);
      // cls(f, node_x, t) |-> T(f)(t).
      NatTransformation cmp{r.functor(), t, std::vector<std::vector<std::size_t>>(c->object_count())};
      for (std::size_t y = 0; y < c->object_count(); ++y)
        for (const auto& cls : r.classes(y)) {
          std::set<std::size_t> images;
          for (const auto& tr : cls.members) images.insert(t->apply(tr.morphism, tr.element));
          REQUIRE(images.size() == 1);
          cmp.components[y].push_back(*images.begin());
        }
      CHECK(is_natural(cmp));
      for (std::size_t y = 0; y < c->object_count(); ++y) {
        std::vector<std::size_t> sorted = cmp.components[y];
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expected(t->size(y));
        std::iota(expected.begin(), expected.end(), 0);
        CHECK(sorted == expected);
      }
    }
  }
}

TEST_CASE("right_satellite rejects a functor on the wrong category") {
  auto pq = parallel_pair();
  auto one = terminal();
  CHECK_THROWS_AS(right_satellite(e1_span(pq, one), constant(one, {"a"})), SourceMismatch);
}

TEST_CASE("right_satellite invariants on random spans") {
  lab::Rng master(404);
  lab::InstanceBounds b;
  for (int trial = 0; trial < 60; ++trial) {
    lab::Rng rng = master.fork(trial);
    auto x = lab::random_category(rng, b);
    auto y = lab::random_category(rng, b);
    auto s = lab::random_span(rng, x, y, 4, 5);
    auto t = lab::random_set_functor(rng, x, 3);
    auto r = right_satellite(s, t);
    CHECK(functor_law_violations(*r.functor()).empty());
    CHECK(is_connecting(r.unit()));
    for (std::size_t obj = 0; obj < y->object_count(); ++obj) {
      std::size_t bound = 0;
      for (std::size_t src = 0; src < y->object_count(); ++src)
        for (std::size_t n = 0; n < s->shape().node_count(); ++n)
          if (s->right().node(n) == src) bound += y->hom(src, obj).size() * t->size(s->left().node(n));
      CHECK(r.functor()->size(obj) <= bound);
      CHECK(r.triple_count(obj) == bound);
      for (const auto& cls : r.classes(obj))
        CHECK(cls.representative == *std::min_element(cls.members.begin(), cls.members.end(), [&](const Triple& a, const Triple& c) {
          return std::tuple(y->domain(a.morphism), a.node, a.element, a.morphism) <
                 std::tuple(y->domain(c.morphism), c.node, c.element, c.morphism);
        }));
    }
  }
}

TEST_CASE("mediating_to") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  auto r = right_satellite(s, t2(pq));
  CHECK(mediating_to(r, r.unit()) == identity_transformation(r.functor()));

  auto three = constant(one, {"a", "b", "c"});
  auto alphas = nat_set(r.functor(), three);
  CHECK(alphas.size() == 9);
  for (const auto& alpha : alphas) CHECK(mediating_to(r, after_unit(r, alpha)) == alpha);

  auto star = constant(one, {"*"});
  auto deltas = connecting_morphisms(s, t2(pq), star);
  REQUIRE(deltas.size() == 1);
  auto gamma = mediating_to(r, deltas[0]);
  CHECK(gamma.components == std::vector<std::vector<std::size_t>>{{0, 0}});

  // A family that is not a connecting morphism cannot factor through the unit.
  ConnectingMorphism bogus{s, t2(pq), three, {{0, 1}, {2, 2, 2}}};
  CHECK_THROWS_AS(mediating_to(r, bogus), IllDefined);
}

TEST_CASE("connecting_morphisms") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  CHECK(connecting_morphisms(s, t2(pq), constant(one, {"*"})).size() == 1);

  auto two = constant(one, {"0", "1"});
  auto found = connecting_morphisms(s, t2(pq), two);
  std::vector<std::vector<std::vector<std::size_t>>> tables;
  for (const auto& d : found) {
    CHECK(is_connecting(d));
    tables.push_back(d.components);
  }
  CHECK(tables == blind_connecting(*s, *t2(pq), *two));
  CHECK(found.size() == 4);

  auto shape = std::make_shared<FinGraph>(FinGraph({"a", "b"}, {}));
  auto bare = std::make_shared<SpanSchema>(build_span(shape, pq, {{{"a", "p"}, {"b", "q"}}, {}}, one,
                                                      {{{"a", "pt"}, {"b", "pt"}}, {}}));
  CHECK(connecting_morphisms(bare, t2(pq), two).size() == 32);  // 2^2 * 2^3

  lab::Rng master(8);
  lab::InstanceBounds b;
  for (int trial = 0; trial < 40; ++trial) {
    lab::Rng rng = master.fork(trial);
    auto x = lab::random_category(rng, b);
    auto y = lab::random_category(rng, b);
    auto sp = lab::random_span(rng, x, y, 3, 4);
    auto t = lab::random_set_functor(rng, x, 2);
    auto v = lab::random_set_functor(rng, y, 2);
    std::vector<std::vector<std::vector<std::size_t>>> got;
    for (const auto& d : connecting_morphisms(sp, t, v)) got.push_back(d.components);
    CHECK(got == blind_connecting(*sp, *t, *v));
  }
}

TEST_CASE("left_satellite examples") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);

  auto l = left_satellite(s, constant(one, {"*"}));
  CHECK(l.functor()->size(0) == 1);
  CHECK(l.functor()->size(1) == 1);

  auto empty = left_satellite(s, constant(one, {}));
  for (std::size_t x = 0; x < pq->object_count(); ++x) {
    CHECK(empty.representable(x).functor()->size(0) > 0);
    CHECK(empty.functor()->size(x) == 0);
  }

  auto two = left_satellite(s, constant(one, {"0", "1"}));
  CHECK(functor_law_violations(*two.functor()).empty());
  CHECK(is_connecting(two.counit()));
}

TEST_CASE("left_satellite along the identity span is isomorphic to V") {
  for (const auto& c : lab::standard_categories()) {
    if (c->object_count() > 3) continue;
    lab::Rng rng(17 + c->morphism_count());
    for (int trial = 0; trial < 4; ++trial) {
      auto v = lab::random_set_functor(rng, c, 3);
      auto s = std::make_shared<SpanSchema>(identity_span(c));
      auto l = left_satellite(s, v);
      // Evaluation at the unit class: ϑ at the node of each object.
      NatTransformation eval{l.functor(), v, std::vector<std::vector<std::size_t>>(c->object_count())};
      for (std::size_t x = 0; x < c->object_count(); ++x) {
        eval.components[x] = l.counit().components[s->shape().node_index(c->object_name(x))];
        std::vector<std::size_t> sorted = eval.components[x];
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expected(v->size(x));
        std::iota(expected.begin(), expected.end(), 0);
        CHECK(sorted == expected);
      }
      CHECK(is_natural(eval));
    }
  }
}

TEST_CASE("mediating_from") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  auto v = constant(one, {"0", "1"});
  auto l = left_satellite(s, v);
  CHECK(mediating_from(l, l.counit()) == identity_transformation(l.functor()));

  auto t = t2(pq);
  auto betas = nat_set(t, l.functor());
  CHECK_FALSE(betas.empty());
  for (const auto& beta : betas) CHECK(mediating_from(l, before_counit(l, beta)) == beta);

  auto star = constant(one, {"*"});
  auto ls = left_satellite(s, star);
  auto deltas = connecting_morphisms(s, t, star);
  REQUIRE(deltas.size() == 1);
  auto gamma = mediating_from(ls, deltas[0]);
  CHECK(gamma.components == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 0, 0}});
}

TEST_CASE("universality on random spans") {
  lab::Rng master(1234);
  lab::InstanceBounds b;
  for (int trial = 0; trial < 20; ++trial) {
    lab::Rng rng = master.fork(trial);
    auto x = lab::random_category(rng, b);
    auto y = lab::random_category(rng, b);
    auto s = lab::random_span(rng, x, y, 3, 3);
    auto t = lab::random_set_functor(rng, x, 2);
    auto v = lab::random_set_functor(rng, y, 2);
    auto r = right_satellite(s, t);
    for (const auto& d : connecting_morphisms(s, t, v)) {
      auto gamma = mediating_to(r, d);
      CHECK(after_unit(r, gamma) == d);
    }
    auto l = left_satellite(s, v);
    for (const auto& d : connecting_morphisms(s, t, v)) {
      auto gamma = mediating_from(l, d);
      CHECK(before_counit(l, gamma) == d);
    }
  }
}

TEST_CASE("satellite_of_nat") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  auto t = t2(pq);
  auto r = right_satellite(s, t);
  CHECK(satellite_of_nat(r, r, identity_transformation(t)) == identity_transformation(r.functor()));

  auto star = constant(pq, {"*"});
  auto to_star = nat_set(t, star);
  REQUIRE(to_star.size() == 1);
  auto image = satellite_of_nat(s, to_star[0]);
  CHECK(image.target->size(0) == 1);
  CHECK(image.components == std::vector<std::vector<std::size_t>>{{0, 0}});

  lab::Rng master(55);
  lab::InstanceBounds b;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    lab::Rng rng = master.fork(trial);
    auto x = lab::random_category(rng, b);
    auto y = lab::random_category(rng, b);
    auto sp = lab::random_span(rng, x, y, 3, 4);
    auto t1 = lab::random_set_functor(rng, x, 2);
    auto t2f = lab::random_set_functor(rng, x, 2);
    auto t3 = lab::random_set_functor(rng, x, 2);
    auto ab = nat_set(t1, t2f);
    auto bc = nat_set(t2f, t3);
    if (ab.empty() || bc.empty()) continue;
    const auto& alpha = ab[rng.below(ab.size())];
    const auto& beta = bc[rng.below(bc.size())];
    auto r1 = right_satellite(sp, t1), r2 = right_satellite(sp, t2f), r3 = right_satellite(sp, t3);
    auto composite = satellite_of_nat(r1, r3, compose(beta, alpha));
    auto stepwise = compose(satellite_of_nat(r2, r3, beta), satellite_of_nat(r1, r2, alpha));
    CHECK(composite == stepwise);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("sequence_span") {
  auto chain = std::make_shared<FinCat>(free_category(FinGraph({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}})));
  auto m = [&](const char* id) { return chain->morphism_index(id); };

  SpanSchema single = sequence_span(chain, {{"m", m("f"), m("g")}}, {});
  CHECK(single.shape().node_count() == 1);
  CHECK(single.left().node(0) == chain->object_index("c"));
  CHECK(single.right().node(0) == chain->object_index("a"));

  SpanSchema looped = sequence_span(chain, {{"m", m("f"), m("g")}}, {{"idm", "m", "m", m("id(a)"), m("id(b)"), m("id(c)")}});
  CHECK(looped.left().edge(0) == m("id(c)"));
  CHECK(looped.right().edge(0) == m("id(a)"));

  // m1 = (a -id-> a -f-> b), m2 = (a -f-> b -g-> c), d = (id(a), f, g).
  std::vector<SigmaDiagram> members{{"m1", m("id(a)"), m("f")}, {"m2", m("f"), m("g")}};
  std::vector<SigmaMorphism> arrows{{"d", "m1", "m2", m("id(a)"), m("f"), m("g")}};
  auto s = std::make_shared<SpanSchema>(sequence_span(chain, members, arrows));
  auto t = std::make_shared<SetFunctor>(SetFunctor::from_names(
      chain, {{"a", {"a0"}}, {"b", {"b0", "b1"}}, {"c", {"c0", "c1"}}},
      {{"f", {{"a0", "b0"}}}, {"g", {{"b0", "c0"}, {"b1", "c1"}}}}));
  auto r = right_satellite(s, t);
  for (std::size_t y = 0; y < 3; ++y) CHECK(r.functor()->size(y) == 2);
  std::size_t a = chain->object_index("a");
  CHECK(class_strings(r, a, 0) == std::set<std::string>{"cls(id(a),m1,b0)", "cls(id(a),m2,c0)"});
  CHECK(class_strings(r, a, 1) == std::set<std::string>{"cls(id(a),m1,b1)", "cls(id(a),m2,c1)"});

  std::vector<SigmaMorphism> skew{{"d", "m1", "m2", m("id(a)"), m("id(b)"), m("g")}};
  CHECK_THROWS_AS(sequence_span(chain, members, skew), NotADiagramMorphism);
  std::vector<SigmaDiagram> broken{{"m", m("g"), m("f")}};
  CHECK_THROWS_AS(sequence_span(chain, broken, {}), EndpointMismatch);

  // Squares can fail with correct endpoints: (a -u-> b) vs (a -v-> b) in a parallel pair.
  auto pq = std::make_shared<FinCat>(free_category(FinGraph({"p", "q"}, {{"u", "p", "q"}, {"v", "p", "q"}})));
  auto k = [&](const char* id) { return pq->morphism_index(id); };
  std::vector<SigmaDiagram> pm{{"x", k("u"), k("id(q)")}, {"y", k("v"), k("id(q)")}};
  std::vector<SigmaMorphism> pa{{"d", "x", "y", k("id(p)"), k("id(q)"), k("id(q)")}};
  CHECK_THROWS_AS(sequence_span(pq, pm, pa), NotADiagramMorphism);
}
