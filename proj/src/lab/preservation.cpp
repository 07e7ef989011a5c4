#include "satkit/lab/preservation.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "satkit/error.hpp"
#include "satkit/span/span.hpp"

namespace satkit::lab {

using cat::NatTransformation;
using cat::SetFunctor;

std::vector<std::string> ProductFunctor::on_set(const std::vector<std::string>& elements) const {
  std::vector<std::string> out;
  for (const auto& t : elements)
    for (const auto& c : factor) out.push_back("(" + t + "," + c + ")");
  return out;
}

std::vector<std::size_t> ProductFunctor::on_function(const std::vector<std::size_t>& f) const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < f.size(); ++t)
    for (std::size_t c = 0; c < factor.size(); ++c) out.push_back(pair_index(f[t], c));
  return out;
}

ProductFunctor product_functor(std::vector<std::string> c) {
  std::sort(c.begin(), c.end());
  return {std::move(c)};
}

SetFunctor apply_product(const SetFunctor& t, const std::vector<std::string>& c) {
  const ProductFunctor k = product_functor(c);
  std::vector<std::vector<std::string>> sets;
  std::vector<std::vector<std::size_t>> fns;
  for (const auto& s : t.object_sets()) sets.push_back(k.on_set(s));
  for (const auto& f : t.arrow_fns()) fns.push_back(k.on_function(f));
  return SetFunctor(t.source(), std::move(sets), std::move(fns));
}

namespace {

std::string tuple_label(const std::vector<std::string>& labels, const std::vector<std::size_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += labels[values[i]];
  }
  return out + "]";
}

// All tuples in {0..n-1}^k, lexicographic.
std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > 0 && n == 0) return out;
  std::vector<std::size_t> cur(k, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && ++cur[i - 1] == n) cur[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool bijective(const std::vector<std::size_t>& f, std::size_t target_size) {
  if (f.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (std::size_t v : f) {
    if (v >= target_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

void finish(PreservationReport& rep) {
  rep.natural = rep.well_defined && cat::is_natural(rep.comparison);
  rep.isomorphism = rep.natural;
  for (std::size_t x = 0; rep.isomorphism && x < rep.comparison.components.size(); ++x)
    rep.isomorphism = bijective(rep.comparison.components[x], rep.comparison.target->size(x));
}

}  // namespace

SetFunctor apply_power(const SetFunctor& v, const std::vector<std::string>& c) {
  const std::size_t k = c.size();
  std::vector<std::vector<std::string>> sets;
  std::vector<std::vector<std::vector<std::size_t>>> all;
  for (std::size_t y = 0; y < v.category().object_count(); ++y) {
    all.push_back(tuples(v.size(y), k));
    sets.emplace_back();
    for (const auto& tup : all.back()) sets.back().push_back(tuple_label(v.set(y), tup));
  }
  std::vector<std::vector<std::size_t>> fns;
  const auto& cat = v.category();
  for (std::size_t f = 0; f < cat.morphism_count(); ++f) {
    const std::size_t n = v.size(cat.codomain(f));
    fns.emplace_back();
    for (const auto& tup : all[cat.domain(f)]) {
      std::size_t index = 0;  // lexicographic rank of the image tuple
      for (std::size_t i : tup) index = index * n + v.apply(f, i);
      fns.back().push_back(index);
    }
  }
  return SetFunctor(v.source(), std::move(sets), std::move(fns));
}

std::size_t product_element(const SetFunctor& product, const SetFunctor& t, const std::vector<std::string>& c,
                            std::size_t x, std::size_t ti, std::size_t ci) {
  const ProductFunctor k = product_functor(c);
  return product.element_index(x, "(" + t.set(x)[ti] + "," + k.factor[ci] + ")");
}

std::size_t power_element(const SetFunctor& power, const SetFunctor& v, std::size_t y,
                          const std::vector<std::size_t>& values) {
  return power.element_index(y, tuple_label(v.set(y), values));
}

PreservationReport preservation_check_right(const span::SpanPtr& s, const cat::SetFunctorPtr& t,
                                            const std::vector<std::string>& c) {
  span::check_left_functor(*s, *t);
  const ProductFunctor k = product_functor(c);
  const auto r = span::right_satellite(s, t);
  auto tc = std::make_shared<SetFunctor>(apply_product(*t, k.factor));
  const auto rc = span::right_satellite(s, tc);
  auto source = std::make_shared<SetFunctor>(apply_product(*r.functor(), k.factor));

  PreservationReport rep{"right", {source, rc.functor(), {}}};
  rep.well_defined = true;
  const auto& y_cat = *s->y();
  for (std::size_t y = 0; y < y_cat.object_count(); ++y) {
    rep.comparison.components.emplace_back(source->size(y), npos);
    for (std::size_t cls = 0; cls < r.functor()->size(y); ++cls)
      for (std::size_t ci = 0; ci < k.factor.size(); ++ci) {
        std::size_t image = npos;
        for (const auto& m : r.classes(y)[cls].members) {
          const std::size_t pair = product_element(*tc, *t, k.factor, s->left().node(m.node), m.element, ci);
          const std::size_t target = rc.class_of({m.morphism, m.node, pair});
          if (image == npos) image = target;
          else if (image != target) rep.well_defined = false;
        }
        rep.comparison.components[y][product_element(*source, *r.functor(), k.factor, y, cls, ci)] = image;
      }
  }
  finish(rep);
  return rep;
}

PreservationReport preservation_check_left(const span::SpanPtr& s, const cat::SetFunctorPtr& v,
                                           const std::vector<std::string>& c) {
  span::check_right_functor(*s, *v);
  std::vector<std::string> factor = product_functor(c).factor;
  const auto l = span::left_satellite(s, v);
  auto vc = std::make_shared<SetFunctor>(apply_power(*v, factor));
  const auto lc = span::left_satellite(s, vc);
  auto source = std::make_shared<SetFunctor>(apply_power(*l.functor(), factor));

  PreservationReport rep{"left", {source, lc.functor(), {}}};
  rep.well_defined = true;
  const auto& x_cat = *s->x();
  const auto& y_cat = *s->y();
  for (std::size_t x = 0; x < x_cat.object_count(); ++x) {
    rep.comparison.components.emplace_back(source->size(x), npos);
    const auto& rep_functor = l.representable(x).functor();
    for (const auto& family : tuples(l.functor()->size(x), factor.size())) {
      NatTransformation psi{rep_functor, vc, {}};
      for (std::size_t y = 0; y < y_cat.object_count(); ++y) {
        psi.components.emplace_back();
        for (std::size_t z = 0; z < rep_functor->size(y); ++z) {
          std::vector<std::size_t> values;
          for (std::size_t phi : family) values.push_back(l.elements(x)[phi].at(y, z));
          psi.components.back().push_back(power_element(*vc, *v, y, values));
        }
      }
      const std::size_t image = lc.element_of(x, psi);
      if (image == npos) rep.well_defined = false;
      rep.comparison.components[x][power_element(*source, *l.functor(), x, family)] = image;
    }
  }
  finish(rep);
  return rep;
}

}  // namespace satkit::lab
