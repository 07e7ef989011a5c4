#include "satkit/ab/satellite.hpp"

#include <set>

#include "satkit/error.hpp"

namespace satkit::ab {

namespace {

std::vector<Integer> unit_vector(std::size_t n, std::size_t j) {
  std::vector<Integer> e(n, 0);
  e[j] = 1;
  return e;
}

// Generator k |-> generator fn[k].
IntMatrix permutation_map(const std::vector<std::size_t>& fn, std::size_t target_size) {
  IntMatrix a(fn.size(), target_size);
  for (std::size_t k = 0; k < fn.size(); ++k) a(k, fn[k]) = 1;
  return a;
}

}  // namespace

AbRightSatellite ab_right_satellite(const span::SpanPtr& s, const AbFunctor& t) {
  UnderlyingSets in = underlying(t);
  span::SatelliteResult r = span::right_satellite(s, in.set);
  const auto& y_cat = *s->y();
  const auto& shape = s->shape();

  std::vector<FpAbelianGroup> groups;
  for (std::size_t y = 0; y < y_cat.object_count(); ++y) {
    const std::size_t n = r.functor()->size(y);
    std::set<std::vector<Integer>> rows;
    auto keep = [&](std::vector<Integer> row) {
      for (const auto& v : row)
        if (v != 0) {
          rows.insert(std::move(row));
          return;
        }
    };
    for (std::size_t node = 0; node < shape.node_count(); ++node) {
      const auto& g = in.groups[s->left().node(node)];
      for (std::size_t m : y_cat.hom(s->right().node(node), y)) {
        auto cls = [&](std::size_t e) { return r.class_of({m, node, e}); };
        std::vector<Integer> zero(n, 0);
        zero[cls(g.zero())] += 1;
        keep(std::move(zero));
        for (std::size_t a = 0; a < g.size(); ++a)
          for (std::size_t b = a; b < g.size(); ++b) {
            std::vector<Integer> row(n, 0);
            row[cls(g.add(a, b))] += 1;
            row[cls(a)] -= 1;
            row[cls(b)] -= 1;
            keep(std::move(row));
          }
      }
    }
    groups.emplace_back(r.functor()->set(y),
                        IntMatrix::from_rows(n, std::vector<std::vector<Integer>>(rows.begin(), rows.end())));
  }
  std::vector<IntMatrix> arrows;
  for (std::size_t f = 0; f < y_cat.morphism_count(); ++f)
    arrows.push_back(permutation_map(r.functor()->fn(f), r.functor()->size(y_cat.codomain(f))));

  AbRightSatellite out{std::make_shared<AbFunctor>(s->y(), std::move(groups), std::move(arrows)), std::move(r),
                       std::move(in), {}};
  for (std::size_t y = 0; y < y_cat.object_count(); ++y) out.groups.emplace_back(out.functor->group(y));

  out.unit_homomorphic = true;
  for (std::size_t node = 0; node < shape.node_count(); ++node) {
    const std::size_t gy = s->right().node(node);
    const auto& from = out.input.groups[s->left().node(node)];
    const auto& to = out.groups[gy];
    std::vector<std::size_t> delta;
    for (std::size_t e = 0; e < from.size(); ++e)
      delta.push_back(to.of_word(unit_vector(out.functor->group(gy).generators.size(), out.set_level.unit().at(node, e))));
    if (!is_homomorphism(from, to, delta)) out.unit_homomorphic = false;
  }
  return out;
}

AbLeftSatellite ab_left_satellite(const span::SpanPtr& s, const AbFunctor& v) {
  UnderlyingSets in = underlying(v);
  span::LeftSatelliteResult l = span::left_satellite(s, in.set);
  const auto& x_cat = *s->x();
  const auto& y_cat = *s->y();

  std::vector<FpAbelianGroup> groups;
  for (std::size_t x = 0; x < x_cat.object_count(); ++x) {
    const auto& elements = l.elements(x);
    const auto& rep = l.representable(x).functor();
    const std::size_t n = elements.size();
    auto pointwise = [&](auto op) {
      cat::NatTransformation psi{rep, in.set, {}};
      for (std::size_t y = 0; y < y_cat.object_count(); ++y) {
        psi.components.emplace_back();
        for (std::size_t c = 0; c < rep->size(y); ++c) psi.components.back().push_back(op(y, c));
      }
      const std::size_t k = l.element_of(x, psi);
      if (k == npos) throw IllDefined("pointwise sum at " + x_cat.object_name(x) + " is not natural");
      return k;
    };
    std::vector<std::vector<std::size_t>> sum(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        sum[a][b] = pointwise([&](std::size_t y, std::size_t c) {
          return in.groups[y].add(elements[a].at(y, c), elements[b].at(y, c));
        });
    const std::size_t zero = pointwise([&](std::size_t y, std::size_t) { return in.groups[y].zero(); });
    groups.push_back(cayley_presentation(l.functor()->set(x), sum, zero));
  }
  std::vector<IntMatrix> arrows;
  for (std::size_t f = 0; f < x_cat.morphism_count(); ++f)
    arrows.push_back(permutation_map(l.functor()->fn(f), l.functor()->size(x_cat.codomain(f))));

  AbLeftSatellite out{std::make_shared<AbFunctor>(s->x(), std::move(groups), std::move(arrows)), std::move(l),
                      std::move(in), {}, {}};
  for (std::size_t x = 0; x < x_cat.object_count(); ++x) {
    out.groups.emplace_back(out.functor->group(x));
    out.element_map.emplace_back();
    for (std::size_t i = 0; i < out.functor->group(x).generators.size(); ++i)
      out.element_map.back().push_back(out.groups.back().generator(i));
  }

  out.counit_homomorphic = true;
  for (std::size_t node = 0; node < s->shape().node_count(); ++node) {
    const std::size_t fx = s->left().node(node);
    const auto& from = out.groups[fx];
    std::vector<std::size_t> theta(from.size(), npos);
    for (std::size_t i = 0; i < out.element_map[fx].size(); ++i)
      theta[out.element_map[fx][i]] = out.set_level.counit().at(node, i);
    for (std::size_t v_el : theta)
      if (v_el == npos) throw IllDefined("set-level elements do not cover the group");
    if (!is_homomorphism(from, out.input.groups[s->right().node(node)], theta)) out.counit_homomorphic = false;
  }
  return out;
}

}  // namespace satkit::ab
