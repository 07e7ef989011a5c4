#include "satkit/lab/adjunction.hpp"

#include <algorithm>

#include "satkit/cat/nat.hpp"
#include "satkit/error.hpp"

namespace satkit::lab {

using cat::NatTransformation;

namespace {

std::size_t position(const std::vector<NatTransformation>& list, const NatTransformation& a) {
  auto it = std::lower_bound(list.begin(), list.end(), a.components,
                             [](const NatTransformation& x, const auto& c) { return x.components < c; });
  return it != list.end() && it->components == a.components ? static_cast<std::size_t>(it - list.begin()) : npos;
}

}  // namespace

bool AdjunctionReport::natural() const {
  return std::all_of(spots.begin(), spots.end(), [](const NaturalitySpot& s) { return s.holds; });
}

NatTransformation left_satellite_of_nat(const span::LeftSatelliteResult& from, const span::LeftSatelliteResult& to,
                                        const NatTransformation& nu) {
  NatTransformation out{from.functor(), to.functor(), {}};
  for (std::size_t x = 0; x < from.functor()->category().object_count(); ++x) {
    out.components.emplace_back();
    for (const auto& phi : from.elements(x)) {
      NatTransformation image = cat::compose(nu, phi);
      const std::size_t k = to.element_of(x, image);
      if (k == npos) throw IllDefined("composite is not an element of the target satellite");
      out.components.back().push_back(k);
    }
  }
  return out;
}

AdjunctionReport adjunction_check(const span::SpanPtr& s, const cat::SetFunctorPtr& t, const cat::SetFunctorPtr& v,
                                  std::size_t spot_limit) {
  span::check_left_functor(*s, *t);
  span::check_right_functor(*s, *v);
  const auto r = span::right_satellite(s, t);
  const auto l = span::left_satellite(s, v);

  AdjunctionReport rep;
  rep.left = cat::nat_set(r.functor(), v);
  rep.right = cat::nat_set(t, l.functor());

  auto transpose = [&](const NatTransformation& alpha) { return span::mediating_from(l, span::after_unit(r, alpha)); };
  auto untranspose = [&](const NatTransformation& beta) { return span::mediating_to(r, span::before_counit(l, beta)); };

  for (const auto& alpha : rep.left) rep.forward.push_back(position(rep.right, transpose(alpha)));
  for (const auto& beta : rep.right) rep.backward.push_back(position(rep.left, untranspose(beta)));

  rep.bijection = rep.left.size() == rep.right.size();
  for (std::size_t i = 0; rep.bijection && i < rep.forward.size(); ++i)
    rep.bijection = rep.forward[i] != npos && rep.backward[rep.forward[i]] == i;
  for (std::size_t j = 0; rep.bijection && j < rep.backward.size(); ++j)
    rep.bijection = rep.backward[j] != npos && rep.forward[rep.backward[j]] == j;

  // Naturality in T: transpose(α ∘ S¹σ) = transpose(α) ∘ σ.
  const auto t_endos = cat::nat_set(t, t);
  for (std::size_t e = 0; e < std::min(spot_limit, t_endos.size()); ++e) {
    const auto lifted = span::satellite_of_nat(r, r, t_endos[e]);
    for (std::size_t i = 0; i < rep.left.size(); ++i) {
      const bool holds = transpose(cat::compose(rep.left[i], lifted)) == cat::compose(transpose(rep.left[i]), t_endos[e]);
      rep.spots.push_back({"T", e, i, holds});
    }
  }
  // Naturality in V: transpose(ν ∘ α) = S₁ν ∘ transpose(α).
  const auto v_endos = cat::nat_set(v, v);
  for (std::size_t e = 0; e < std::min(spot_limit, v_endos.size()); ++e) {
    const auto lifted = left_satellite_of_nat(l, l, v_endos[e]);
    for (std::size_t i = 0; i < rep.left.size(); ++i) {
      const bool holds = transpose(cat::compose(v_endos[e], rep.left[i])) == cat::compose(lifted, transpose(rep.left[i]));
      rep.spots.push_back({"V", e, i, holds});
    }
  }
  return rep;
}

}  // namespace satkit::lab
