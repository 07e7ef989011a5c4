#include <algorithm>
#include <memory>
#include <numeric>

#include "doctest.h"
#include "satkit/cat/nat.hpp"
#include "satkit/error.hpp"
#include "satkit/lab/adjunction.hpp"
#include "satkit/lab/colimit.hpp"
#include "satkit/lab/duality.hpp"
#include "satkit/lab/preservation.hpp"
#include "satkit/lab/random.hpp"
#include "satkit/lab/universality.hpp"

using namespace satkit;
using namespace satkit::cat;
using namespace satkit::span;
using namespace satkit::lab;

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

bool all_bijective(const NatTransformation& a) {
  for (std::size_t x = 0; x < a.components.size(); ++x) {
    std::vector<std::size_t> sorted = a.components[x];
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(a.target->size(x));
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) return false;
  }
  return true;
}

// S¹T -> T along the identity span: cls(f, x, t) |-> T(f)(t).
NatTransformation right_collapse(const SatelliteResult& r) {
  const auto& t = r.input();
  NatTransformation out{r.functor(), t, {}};
  for (std::size_t y = 0; y < t->category().object_count(); ++y) {
    out.components.emplace_back();
    for (const auto& cls : r.classes(y))
      out.components.back().push_back(t->apply(cls.representative.morphism, cls.representative.element));
  }
  return out;
}

// S₁V -> V along the identity span: the counit at the node of each object.
NatTransformation left_collapse(const LeftSatelliteResult& l) {
  NatTransformation out{l.functor(), l.input(), {}};
  const auto& c = l.input()->category();
  for (std::size_t x = 0; x < c.object_count(); ++x)
    out.components.push_back(l.counit().components[l.span()->shape().node_index(c.object_name(x))]);
  return out;
}

struct Instance {
  SpanPtr s;
  SetFunctorPtr t;
  SetFunctorPtr v;
};

Instance random_instance(Rng& rng, bool terminal_y) {
  InstanceBounds b;
  auto x = random_category(rng, b);
  auto y = terminal_y ? terminal() : random_category(rng, b);
  auto s = random_span(rng, x, y, b.max_nodes, b.max_edges);
  return {s, random_set_functor(rng, x, b.max_set), random_set_functor(rng, y, 2)};
}

}  // namespace

TEST_CASE("colimit_oracle examples") {
  FinGraph two({"a", "b"}, {});
  Colimit u = colimit_oracle(two, {{2, 3}, {}});
  CHECK(u.classes.size() == 5);

  FinGraph single({"a"}, {});
  CHECK(colimit_oracle(single, {{1}, {}}).classes.size() == 1);

  auto pq = parallel_pair();
  auto s = e1_span(pq, terminal());
  Colimit c = colimit_oracle(s->shape(), restrict_along(*s, *t2(pq)));
  REQUIRE(c.classes.size() == 2);
  // n_p = node 0, n_q = node 1; q's elements x, y, z are 0, 1, 2.
  CHECK(c.classes[0] == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}});
  CHECK(c.classes[1] == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}, {1, 2}});
  CHECK(agrees_with_oracle(right_satellite(s, t2(pq)), c));
}

TEST_CASE("colimit_oracle agrees with right_satellite for terminal Y") {
  Rng master(2024);
  for (int i = 0; i < 100; ++i) {
    Rng rng = master.fork(i);
    auto inst = random_instance(rng, true);
    auto r = right_satellite(inst.s, inst.t);
    CHECK(agrees_with_oracle(r, colimit_oracle(inst.s->shape(), restrict_along(*inst.s, *inst.t))));
  }
}

TEST_CASE("agrees_with_oracle detects a wrong partition") {
  auto pq = parallel_pair();
  auto s = e1_span(pq, terminal());
  auto r = right_satellite(s, t2(pq));
  Colimit c = colimit_oracle(s->shape(), restrict_along(*s, *t2(pq)));
  std::swap(c.injections[1][0], c.injections[1][1]);
  CHECK_FALSE(agrees_with_oracle(r, c));
}

TEST_CASE("adjunction_check examples") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);

  auto rep = adjunction_check(s, t2(pq), constant(one, {"0", "1"}));
  CHECK(rep.left.size() == 4);
  CHECK(rep.right.size() == 4);
  CHECK(rep.bijection);
  CHECK(rep.natural());
  CHECK_FALSE(rep.spots.empty());

  auto single = adjunction_check(s, t2(pq), constant(one, {"*"}));
  CHECK(single.left.size() == 1);
  CHECK(single.right.size() == 1);
  CHECK(single.bijection);

  CHECK_THROWS_AS(adjunction_check(s, constant(one, {"a"}), constant(one, {"*"})), SourceMismatch);
}

TEST_CASE("adjunction along the identity span is the identity up to collapse") {
  for (const auto& c : standard_categories()) {
    if (c->object_count() > 2) continue;
    Rng rng(c->morphism_count());
    auto t = random_set_functor(rng, c, 2);
    auto v = random_set_functor(rng, c, 2);
    auto s = std::make_shared<SpanSchema>(identity_span(c));
    auto rep = adjunction_check(s, t, v);
    REQUIRE(rep.bijection);
    auto r = right_satellite(s, t);
    auto l = left_satellite(s, v);
    auto ct = right_collapse(r);
    auto ev = left_collapse(l);
    for (std::size_t i = 0; i < rep.left.size(); ++i)
      CHECK(compose(ev, compose(rep.right[rep.forward[i]], ct)) == rep.left[i]);
  }
}

TEST_CASE("adjunction_check on random instances") {
  Rng master(77);
  for (int i = 0; i < 25; ++i) {
    Rng rng = master.fork(i);
    auto inst = random_instance(rng, false);
    auto rep = adjunction_check(inst.s, inst.t, inst.v, 2);
    CHECK(rep.left.size() == rep.right.size());
    CHECK(rep.bijection);
    CHECK(rep.natural());
  }
}

TEST_CASE("left_satellite_of_nat is functorial") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  auto v = constant(one, {"0", "1"});
  auto l = left_satellite(s, v);
  CHECK(left_satellite_of_nat(l, l, identity_transformation(v)) == identity_transformation(l.functor()));
  auto endos = nat_set(v, v);
  for (const auto& a : endos)
    for (const auto& b : endos)
      CHECK(left_satellite_of_nat(l, l, compose(a, b)) ==
            compose(left_satellite_of_nat(l, l, a), left_satellite_of_nat(l, l, b)));
}

TEST_CASE("apply_product and apply_power") {
  auto pq = parallel_pair();
  auto t = t2(pq);
  auto one_c = apply_product(*t, {"c"});
  CHECK(functor_law_violations(one_c).empty());
  auto pc = std::make_shared<SetFunctor>(one_c);
  NatTransformation iso{t, pc, {}};
  for (std::size_t x = 0; x < 2; ++x) {
    iso.components.emplace_back();
    for (std::size_t i = 0; i < t->size(x); ++i) iso.components.back().push_back(product_element(*pc, *t, {"c"}, x, i, 0));
  }
  CHECK(is_natural(iso));
  CHECK(all_bijective(iso));

  Rng master(5);
  for (int i = 0; i < 30; ++i) {
    Rng rng = master.fork(i);
    auto c = random_category(rng, InstanceBounds{});
    auto f = random_set_functor(rng, c, 3);
    std::vector<std::string> factor;
    for (std::size_t k = 0, n = rng.below(4); k < n; ++k) factor.push_back("c" + std::to_string(k));
    SetFunctor prod = apply_product(*f, factor);
    SetFunctor pow = apply_power(*f, factor);
    CHECK(functor_law_violations(prod).empty());
    CHECK(functor_law_violations(pow).empty());
    for (std::size_t x = 0; x < c->object_count(); ++x) {
      CHECK(prod.size(x) == f->size(x) * factor.size());
      std::size_t expected = 1;
      for (std::size_t k = 0; k < factor.size(); ++k) expected *= f->size(x);
      CHECK(pow.size(x) == expected);
    }
  }
  SetFunctor empty_power = apply_power(*t, {});
  CHECK(empty_power.set(0) == std::vector<std::string>{"[]"});
}

TEST_CASE("preservation_check_right examples") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  CHECK(preservation_check_right(s, t2(pq), {"c"}).isomorphism);

  auto rep = preservation_check_right(s, t2(pq), {"c0", "c1"});
  CHECK(rep.comparison.target->size(0) == 4);
  CHECK(rep.isomorphism);

  auto none = preservation_check_right(s, t2(pq), {});
  CHECK(none.comparison.source->size(0) == 0);
  CHECK(none.comparison.target->size(0) == 0);
  CHECK(none.isomorphism);
  CHECK(none.side == "right");
}

TEST_CASE("preservation_check_left examples") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  CHECK(preservation_check_left(s, constant(one, {"0", "1"}), {"c"}).isomorphism);

  auto single = preservation_check_left(s, constant(one, {"*"}), {"c0", "c1"});
  CHECK(single.isomorphism);
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(single.comparison.source->size(x) == 1);
    CHECK(single.comparison.target->size(x) == 1);
  }

  auto ids = std::make_shared<SpanSchema>(identity_span(pq));
  auto rep = preservation_check_left(ids, t2(pq), {"c0", "c1"});
  CHECK(rep.isomorphism);
  CHECK(rep.comparison.target->size(0) == 4);
  CHECK(rep.comparison.target->size(1) == 9);
  CHECK(rep.side == "left");
}

TEST_CASE("preservation on random instances") {
  Rng master(31);
  for (int i = 0; i < 30; ++i) {
    Rng rng = master.fork(i);
    auto inst = random_instance(rng, false);
    for (std::size_t k = 0; k <= 3; ++k) {
      std::vector<std::string> c;
      for (std::size_t j = 0; j < k; ++j) c.push_back(std::to_string(j));
      CHECK(preservation_check_right(inst.s, inst.t, c).isomorphism);
      if (k == 1 || k == 2) CHECK(preservation_check_left(inst.s, inst.v, c).isomorphism);
    }
  }
}

TEST_CASE("duality_audit") {
  auto pq = parallel_pair();
  auto ids = std::make_shared<SpanSchema>(identity_span(pq));
  auto t = t2(pq);
  ConnectingMorphism id{ids, t, t, {}};
  for (std::size_t n = 0; n < ids->shape().node_count(); ++n) {
    id.components.emplace_back(t->size(ids->left().node(n)));
    std::iota(id.components.back().begin(), id.components.back().end(), 0);
  }
  REQUIRE(is_connecting(id));
  auto rep = duality_audit(id);
  CHECK(rep.passed());
  CHECK(rep.connected());

  auto s = e1_span(pq, terminal());
  auto v = constant(s->y(), {"0", "1"});
  auto deltas = connecting_morphisms(s, t, v);
  for (const auto& d : deltas) CHECK(duality_audit(d).passed());

  ConnectingMorphism bad = deltas.front();
  bad.components[1][2] = 1 - bad.components[1][2];
  auto broken = duality_audit(bad);
  CHECK(broken.passed());
  CHECK_FALSE(broken.connected());
  CHECK(broken.direct_failures == std::vector<std::string>{"e_v"});
  CHECK(broken.reversed_failures == broken.direct_failures);

  Rng master(12);
  for (int i = 0; i < 30; ++i) {
    Rng rng = master.fork(i);
    auto inst = random_instance(rng, false);
    CHECK(opposite_span(opposite_span(*inst.s)) == *inst.s);
    for (const auto& d : connecting_morphisms(inst.s, inst.t, inst.v, 200)) CHECK(duality_audit(d).passed());
  }
}

TEST_CASE("universality audits") {
  auto pq = parallel_pair();
  auto one = terminal();
  auto s = e1_span(pq, one);
  auto r = right_satellite(s, t2(pq));
  Rng rng(4);
  auto right = audit_right_universality(r, candidate_functors(rng, one, 3, 6));
  CHECK(right.passed());
  CHECK(right.candidates == 4);  // the terminal category has only four functors with sets <= 3
  CHECK(right.pairs == 0 + 1 + 4 + 9);

  auto l = left_satellite(s, constant(one, {"0", "1"}));
  auto left = audit_left_universality(l, candidate_functors(rng, pq, 2, 6));
  CHECK(left.passed());
  CHECK(left.pairs > 0);

  Rng master(66);
  for (int i = 0; i < 15; ++i) {
    Rng g = master.fork(i);
    auto inst = random_instance(g, false);
    auto rr = right_satellite(inst.s, inst.t);
    CHECK(audit_right_universality(rr, candidate_functors(g, inst.s->y(), 2, 4)).passed());
    auto ll = left_satellite(inst.s, inst.v);
    CHECK(audit_left_universality(ll, candidate_functors(g, inst.s->x(), 2, 4)).passed());
  }
}
