#include "satkit/lab/random.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "satkit/cat/category.hpp"
#include "satkit/error.hpp"

namespace satkit::lab {

using cat::FinCat;
using cat::FinGraph;
using cat::SetFunctor;

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t Rng::below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

Rng Rng::fork(std::uint64_t index) const {
  Rng mixer(state_ ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return Rng(mixer.next());
}

const std::vector<CatPtr>& standard_categories() {
  static const std::vector<CatPtr> cats = [] {
    std::vector<CatPtr> out;
    out.push_back(std::make_shared<FinCat>(cat::terminal_category()));
    out.push_back(std::make_shared<FinCat>(cat::explicit_category({"m"}, {{"e", "m", "m"}}, {{"e", "e", "e"}})));
    out.push_back(std::make_shared<FinCat>(cat::explicit_category({"g"}, {{"s", "g", "g"}}, {{"s", "s", "id(g)"}})));
    out.push_back(std::make_shared<FinCat>(cat::explicit_category(
        {"a", "b"}, {{"f", "a", "b"}, {"i", "b", "a"}}, {{"f", "i", "id(b)"}, {"i", "f", "id(a)"}})));
    out.push_back(std::make_shared<FinCat>(
        cat::free_category(FinGraph({"p", "q"}, {{"u", "p", "q"}, {"v", "p", "q"}}))));
    out.push_back(std::make_shared<FinCat>(
        cat::free_category(FinGraph({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}))));
    out.push_back(std::make_shared<FinCat>(
        cat::free_category(FinGraph({"a", "b", "c"}, {{"l", "a", "b"}, {"r", "a", "c"}}))));
    return out;
  }();
  return cats;
}

CatPtr random_category(Rng& rng, const InstanceBounds& bounds) {
  if (rng.chance(1, 4)) {
    const auto& cats = standard_categories();
    return cats[rng.below(cats.size())];
  }
  const std::size_t n = 1 + rng.below(bounds.max_objects);
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("o" + std::to_string(i));
  std::vector<cat::EdgeSpec> edges;
  const std::size_t wanted = n > 1 ? rng.below(bounds.max_generators + 1) : 0;
  for (std::size_t e = 0; e < wanted; ++e) {
    std::size_t a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.push_back({"g" + std::to_string(e), nodes[a], nodes[b]});
  }
  while (true) {
    FinCat c = cat::free_category(FinGraph(nodes, edges));
    bool small = true;
    for (std::size_t a = 0; a < c.object_count(); ++a)
      for (std::size_t b = 0; b < c.object_count(); ++b)
        if (c.hom(a, b).size() > bounds.max_hom) small = false;
    if (small) return std::make_shared<FinCat>(std::move(c));
    edges.pop_back();
  }
}

namespace {

std::vector<std::vector<std::string>> labelled_sets(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::string>> sets;
  for (std::size_t k : sizes) {
    sets.emplace_back();
    for (std::size_t i = 0; i < k; ++i) sets.back().push_back(std::to_string(i));
  }
  return sets;
}

// Morphisms whose functions are chosen freely: generators of a free
// category, otherwise every non-identity morphism.
std::vector<std::size_t> chosen_morphisms(const FinCat& c) {
  if (c.is_free()) return c.generators();
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) out.push_back(m);
  return out;
}

std::vector<std::vector<std::size_t>> complete(const FinCat& c, const std::vector<std::size_t>& sizes,
                                               const std::map<std::size_t, std::vector<std::size_t>>& chosen) {
  if (c.is_free()) return cat::extend_from_generators(c, sizes, chosen);
  std::vector<std::vector<std::size_t>> fns(c.morphism_count());
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) {
      fns[m].resize(sizes[c.domain(m)]);
      std::iota(fns[m].begin(), fns[m].end(), 0);
    } else {
      fns[m] = chosen.at(m);
    }
  }
  return fns;
}

}  // namespace

SetFunctorPtr random_set_functor(Rng& rng, const CatPtr& c, std::size_t max_set) {
  const auto chosen = chosen_morphisms(*c);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::size_t> sizes(c->object_count());
    for (auto& k : sizes) k = rng.below(max_set + 1);
    // A non-empty domain forces a non-empty codomain.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t m : chosen)
        if (sizes[c->domain(m)] > 0 && sizes[c->codomain(m)] == 0) {
          sizes[c->codomain(m)] = 1;
          changed = true;
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> fns;
    for (std::size_t m : chosen) {
      std::vector<std::size_t> fn(sizes[c->domain(m)]);
      for (auto& v : fn) v = rng.below(sizes[c->codomain(m)]);
      fns[m] = std::move(fn);
    }
    SetFunctor t(c, labelled_sets(sizes), complete(*c, sizes, fns));
    if (cat::functor_law_violations(t).empty()) return std::make_shared<SetFunctor>(std::move(t));
  }
  std::vector<std::string> elements;
  for (std::size_t i = 0, k = rng.below(max_set + 1); i < k; ++i) elements.push_back(std::to_string(i));
  return std::make_shared<SetFunctor>(SetFunctor::constant(c, elements));
}

SpanPtr random_span(Rng& rng, const CatPtr& x, const CatPtr& y, std::size_t max_nodes, std::size_t max_edges) {
  const std::size_t n = 1 + rng.below(max_nodes);
  std::vector<std::string> nodes;
  std::vector<std::size_t> fx, gy;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back("s" + std::to_string(i));
    fx.push_back(rng.below(x->object_count()));
    gy.push_back(rng.below(y->object_count()));
  }
  std::vector<cat::EdgeSpec> edges;
  std::vector<std::pair<std::size_t, std::size_t>> images;
  const std::size_t wanted = rng.below(max_edges + 1);
  for (std::size_t e = 0; e < wanted; ++e) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::size_t a = rng.below(n), b = rng.below(n);
      const auto& hx = x->hom(fx[a], fx[b]);
      const auto& hy = y->hom(gy[a], gy[b]);
      if (hx.empty() || hy.empty()) continue;
      edges.push_back({"d" + std::to_string(e), nodes[a], nodes[b]});
      images.emplace_back(hx[rng.below(hx.size())], hy[rng.below(hy.size())]);
      break;
    }
  }
  auto shape = std::make_shared<FinGraph>(nodes, edges);
  // Node names "s<i>" sort differently from i once n > 10; map by name.
  std::vector<std::size_t> f_nodes(n), g_nodes(n), f_edges(edges.size()), g_edges(edges.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = shape->node_index(nodes[i]);
    f_nodes[k] = fx[i];
    g_nodes[k] = gy[i];
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::size_t k = shape->edge_index(edges[e].id);
    f_edges[k] = images[e].first;
    g_edges[k] = images[e].second;
  }
  return std::make_shared<span::SpanSchema>(shape, cat::Diagram(shape, x, f_nodes, f_edges),
                                            cat::Diagram(shape, y, g_nodes, g_edges));
}

SpanPtr random_terminal_span(Rng& rng, const CatPtr& x, std::size_t max_nodes, std::size_t max_edges) {
  static const CatPtr terminal = std::make_shared<FinCat>(cat::terminal_category());
  return random_span(rng, x, terminal, max_nodes, max_edges);
}

std::vector<SetFunctorPtr> enumerate_set_functors(const CatPtr& c, std::size_t max_set, std::size_t limit) {
  std::vector<SetFunctorPtr> out;
  const auto chosen = chosen_morphisms(*c);
  std::vector<std::size_t> sizes(c->object_count(), 0);
  while (out.size() < limit) {
    bool feasible = true;
    for (std::size_t m : chosen)
      if (sizes[c->domain(m)] > 0 && sizes[c->codomain(m)] == 0) feasible = false;
    if (feasible) {
      // Odometer over one function per chosen morphism.
      std::vector<std::vector<std::size_t>> fns;
      for (std::size_t m : chosen) fns.emplace_back(sizes[c->domain(m)], 0);
      while (out.size() < limit) {
        std::map<std::size_t, std::vector<std::size_t>> table;
        for (std::size_t i = 0; i < chosen.size(); ++i) table[chosen[i]] = fns[i];
        SetFunctor t(c, labelled_sets(sizes), complete(*c, sizes, table));
        if (cat::functor_law_violations(t).empty()) out.push_back(std::make_shared<SetFunctor>(std::move(t)));
        std::size_t i = 0;
        for (; i < fns.size(); ++i) {
          const std::size_t target = sizes[c->codomain(chosen[i])];
          std::size_t j = 0;
          for (; j < fns[i].size(); ++j) {
            if (++fns[i][j] < target) break;
            fns[i][j] = 0;
          }
          if (j < fns[i].size()) break;
        }
        if (i == fns.size()) break;
      }
    }
    std::size_t k = 0;
    for (; k < sizes.size(); ++k) {
      if (++sizes[k] <= max_set) break;
      sizes[k] = 0;
    }
    if (k == sizes.size()) break;
  }
  return out;
}

std::vector<SetFunctorPtr> candidate_functors(Rng& rng, const CatPtr& c, std::size_t max_set, std::size_t count) {
  std::vector<SetFunctorPtr> out;
  out.push_back(std::make_shared<SetFunctor>(SetFunctor::constant(c, {})));
  out.push_back(std::make_shared<SetFunctor>(SetFunctor::constant(c, {"0"})));
  auto pool = enumerate_set_functors(c, max_set, 4096);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) std::swap(order[i], order[i + rng.below(order.size() - i)]);
  for (std::size_t i : order) {
    if (out.size() >= count) break;
    const auto& f = pool[i];
    if (std::none_of(out.begin(), out.end(), [&](const SetFunctorPtr& g) { return *g == *f; })) out.push_back(f);
  }
  if (out.size() > count) out.resize(count);
  return out;
}

}  // namespace satkit::lab
