#include "satkit/cat/nat.hpp"

#include <algorithm>
#include <numeric>

#include "satkit/error.hpp"

namespace satkit::cat {

std::size_t FunctionalCsp::add_variable(std::size_t domain_size) {
  domains_.push_back(domain_size);
  allowed_.emplace_back();
  outgoing_.emplace_back();
  incoming_.emplace_back();
  return domains_.size() - 1;
}

void FunctionalCsp::add_constraint(std::size_t from, std::size_t to, std::vector<std::size_t> map) {
  outgoing_[from].push_back(constraints_.size());
  incoming_[to].push_back(constraints_.size());
  constraints_.push_back(Constraint{from, to, std::move(map)});
}

void FunctionalCsp::restrict(std::size_t variable, const std::vector<bool>& allowed) {
  auto& a = allowed_[variable];
  if (a.empty()) a.assign(domains_[variable], true);
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = a[v] && v < allowed.size() && allowed[v];
}

std::vector<std::vector<std::size_t>> FunctionalCsp::solve(const std::vector<std::size_t>& order,
                                                           std::size_t limit) const {
  std::vector<std::vector<std::size_t>> solutions;
  std::vector<std::size_t> value(domains_.size(), npos);
  std::vector<std::size_t> trail;
  std::vector<std::size_t> queue;

  auto permitted = [&](std::size_t v, std::size_t val) { return allowed_[v].empty() || allowed_[v][val]; };
  auto assign = [&](std::size_t v, std::size_t val) -> bool {
    queue.clear();
    if (!permitted(v, val)) return false;
    value[v] = val;
    trail.push_back(v);
    queue.push_back(v);
    while (!queue.empty()) {
      std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t ci : outgoing_[u]) {
        const Constraint& c = constraints_[ci];
        std::size_t need = c.map[value[u]];
        if (value[c.to] == npos) {
          if (!permitted(c.to, need)) return false;
          value[c.to] = need;
          trail.push_back(c.to);
          queue.push_back(c.to);
        } else if (value[c.to] != need) {
          return false;
        }
      }
      for (std::size_t ci : incoming_[u]) {
        const Constraint& c = constraints_[ci];
        if (value[c.from] != npos && c.map[value[c.from]] != value[u]) return false;
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      value[trail.back()] = npos;
      trail.pop_back();
    }
  };

  auto search = [&](auto&& self, std::size_t pos) -> void {
    while (pos < order.size() && value[order[pos]] != npos) ++pos;
    if (pos == order.size()) {
      if (solutions.size() == limit) throw EnumerationLimit("more than " + std::to_string(limit) + " solutions");
      solutions.push_back(value);
      return;
    }
    const std::size_t v = order[pos];
    for (std::size_t val = 0; val < domains_[v]; ++val) {
      const std::size_t mark = trail.size();
      if (assign(v, val)) self(self, pos + 1);
      undo(mark);
    }
  };
  search(search, 0);
  return solutions;
}

std::vector<NatTransformation> nat_set(const SetFunctorPtr& f, const SetFunctorPtr& g, std::size_t limit) {
  return nat_set(f, g, {}, limit);
}

std::vector<NatTransformation> nat_set(const SetFunctorPtr& f, const SetFunctorPtr& g,
                                       const std::vector<ComponentRestriction>& restrictions, std::size_t limit) {
  if (!(f->source() == g->source() || f->category() == g->category()))
    throw SourceMismatch("nat_set: functors have different source categories");
  const FinCat& c = f->category();

  FunctionalCsp csp;
  std::vector<std::size_t> first(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    first[x] = csp.variable_count();
    for (std::size_t i = 0; i < f->size(x); ++i) csp.add_variable(g->size(x));
  }
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const std::size_t x = c.domain(m);
    const std::size_t y = c.codomain(m);
    for (std::size_t i = 0; i < f->size(x); ++i)
      csp.add_constraint(first[x] + i, first[y] + f->apply(m, i), g->fn(m));
  }
  for (const auto& r : restrictions) {
    if (r.object >= c.object_count() || r.element >= f->size(r.object))
      throw UnknownObject("nat_set: restriction outside the source functor");
    csp.restrict(first[r.object] + r.element, r.allowed);
  }

  // Search sparsely constrained objects first; the result is re-sorted below.
  std::vector<std::size_t> density(c.object_count(), 0);
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    ++density[c.domain(m)];
    ++density[c.codomain(m)];
  }
  std::vector<std::size_t> objects(c.object_count());
  std::iota(objects.begin(), objects.end(), 0);
  std::stable_sort(objects.begin(), objects.end(),
                   [&](std::size_t a, std::size_t b) { return density[a] < density[b]; });
  std::vector<std::size_t> order;
  for (std::size_t x : objects)
    for (std::size_t i = 0; i < f->size(x); ++i) order.push_back(first[x] + i);

  auto solutions = csp.solve(order, limit);
  std::sort(solutions.begin(), solutions.end());

  std::vector<NatTransformation> out;
  out.reserve(solutions.size());
  for (const auto& s : solutions) {
    NatTransformation a{f, g, std::vector<std::vector<std::size_t>>(c.object_count())};
    for (std::size_t x = 0; x < c.object_count(); ++x)
      a.components[x].assign(s.begin() + static_cast<std::ptrdiff_t>(first[x]),
                             s.begin() + static_cast<std::ptrdiff_t>(first[x] + f->size(x)));
    out.push_back(std::move(a));
  }
  return out;
}

SetFunctor hom_functor(const CatPtr& c, std::size_t x) {
  if (x >= c->object_count()) throw UnknownObject("hom_functor: object index out of range");
  std::vector<std::vector<std::string>> sets(c->object_count());
  std::vector<std::vector<std::size_t>> position(c->object_count(), std::vector<std::size_t>(c->morphism_count(), npos));
  for (std::size_t z = 0; z < c->object_count(); ++z)
    for (std::size_t h : c->hom(x, z)) {
      position[z][h] = sets[z].size();
      sets[z].push_back(c->morphism_name(h));
    }
  std::vector<std::vector<std::size_t>> fns(c->morphism_count());
  for (std::size_t f = 0; f < c->morphism_count(); ++f)
    for (std::size_t h : c->hom(x, c->domain(f))) {
      std::size_t fh = c->compose(f, h);
      fns[f].push_back(position[c->codomain(f)][fh]);
    }
  return SetFunctor(c, std::move(sets), std::move(fns));
}

SetFunctor hom_functor(const CatPtr& c, const std::string& x) { return hom_functor(c, c->object_index(x)); }

}  // namespace satkit::cat
