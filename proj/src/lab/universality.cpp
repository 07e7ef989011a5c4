#include "satkit/lab/universality.hpp"

#include <optional>

#include "satkit/cat/nat.hpp"
#include "satkit/error.hpp"

namespace satkit::lab {

namespace {

constexpr std::size_t kMaxMessages = 8;

void fail(UniversalityReport& rep, std::string message) {
  ++rep.failures;
  if (rep.messages.size() < kMaxMessages) rep.messages.push_back(std::move(message));
}

// Above this many transformations the filtered enumeration is used per pair
// instead of listing the whole of nat_set once.
constexpr std::size_t kListLimit = 4096;

struct Factorizations {
  std::vector<cat::NatTransformation> maps;
  std::vector<span::ConnectingMorphism> images;  // whiskered maps
};

// `mediate` builds the candidate map and `factoring(d)` returns elements of
// nat_set with their whiskerings, including every one that can equal d.
template <class Mediate, class Factoring>
void audit_pairs(UniversalityReport& rep, std::size_t candidate, const std::vector<span::ConnectingMorphism>& deltas,
                 Mediate mediate, Factoring factoring) {
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    ++rep.pairs;
    const std::string where = "candidate " + std::to_string(candidate) + ", pair " + std::to_string(k);
    std::size_t matches = 0;
    const cat::NatTransformation* match = nullptr;
    const Factorizations& f = factoring(deltas[k]);
    for (std::size_t i = 0; i < f.maps.size(); ++i) {
      if (f.images[i] == deltas[k]) {
        ++matches;
        match = &f.maps[i];
        if (!span::is_connecting(f.images[i])) fail(rep, where + ": whiskered map is not connecting");
      }
    }
    if (matches != 1) {
      fail(rep, where + ": " + std::to_string(matches) + " transformations factor the pair");
      continue;
    }
    try {
      if (!(mediate(deltas[k]) == *match)) fail(rep, where + ": mediating map differs from the factorization");
    } catch (const Error& e) {
      fail(rep, where + ": " + e.what());
    }
  }
}

template <class Whisker>
Factorizations whiskered(std::vector<cat::NatTransformation> maps, Whisker whisker) {
  Factorizations f{std::move(maps), {}};
  for (const auto& m : f.maps) f.images.push_back(whisker(m));
  return f;
}

// nat_set(f, g) with whiskerings, listed once when it is small.
template <class Whisker>
std::optional<Factorizations> small_nat_set(const cat::SetFunctorPtr& f, const cat::SetFunctorPtr& g,
                                            Whisker whisker) {
  try {
    return whiskered(cat::nat_set(f, g, kListLimit), whisker);
  } catch (const EnumerationLimit&) {
    return std::nullopt;
  }
}

}  // namespace

UniversalityReport audit_right_universality(const span::SatelliteResult& r,
                                            const std::vector<cat::SetFunctorPtr>& candidates, std::size_t limit) {
  UniversalityReport rep;
  rep.side = "right";
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    ++rep.candidates;
    const auto& v = candidates[c];
    auto deltas = span::connecting_morphisms(r.span(), r.input(), v, limit);
    auto whisker = [&](const cat::NatTransformation& a) { return span::after_unit(r, a); };
    const auto all = small_nat_set(r.functor(), v, whisker);
    if (all)
      for (const auto& image : all->images)
        if (!span::is_connecting(image)) fail(rep, "candidate " + std::to_string(c) + ": whiskered map is not connecting");
    Factorizations filtered;
    // α ∘ δ = δ' pins α at every unit value: α_{G S}(δ_S(t)) = δ'_S(t).
    auto factoring = [&](const span::ConnectingMorphism& d) -> const Factorizations& {
      if (all) return *all;
      std::vector<cat::ComponentRestriction> pins;
      const auto& s = *r.span();
      for (std::size_t n = 0; n < s.shape().node_count(); ++n) {
        const std::size_t y = s.right().node(n);
        for (std::size_t t = 0; t < d.components[n].size(); ++t) {
          std::vector<bool> allowed(v->size(y), false);
          allowed[d.components[n][t]] = true;
          pins.push_back({y, r.unit().components[n][t], std::move(allowed)});
        }
      }
      filtered = whiskered(cat::nat_set(r.functor(), v, pins, limit), whisker);
      return filtered;
    };
    audit_pairs(
        rep, c, deltas, [&](const span::ConnectingMorphism& d) { return span::mediating_to(r, d); }, factoring);
  }
  return rep;
}

UniversalityReport audit_left_universality(const span::LeftSatelliteResult& l,
                                           const std::vector<cat::SetFunctorPtr>& candidates, std::size_t limit) {
  UniversalityReport rep;
  rep.side = "left";
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    ++rep.candidates;
    const auto& t = candidates[c];
    auto deltas = span::connecting_morphisms(l.span(), t, l.input(), limit);
    auto whisker = [&](const cat::NatTransformation& b) { return span::before_counit(l, b); };
    const auto all = small_nat_set(t, l.functor(), whisker);
    if (all)
      for (const auto& image : all->images)
        if (!span::is_connecting(image)) fail(rep, "candidate " + std::to_string(c) + ": whiskered map is not connecting");
    Factorizations filtered;
    // ϑ ∘ β = δ' restricts β_{F S}(t) to the fibre of ϑ_S over δ'_S(t).
    auto factoring = [&](const span::ConnectingMorphism& d) -> const Factorizations& {
      if (all) return *all;
      std::vector<cat::ComponentRestriction> fibres;
      const auto& s = *l.span();
      for (std::size_t n = 0; n < s.shape().node_count(); ++n) {
        const std::size_t x = s.left().node(n);
        const auto& counit = l.counit().components[n];
        for (std::size_t e = 0; e < d.components[n].size(); ++e) {
          std::vector<bool> allowed(l.functor()->size(x), false);
          for (std::size_t phi = 0; phi < counit.size(); ++phi) allowed[phi] = counit[phi] == d.components[n][e];
          fibres.push_back({x, e, std::move(allowed)});
        }
      }
      filtered = whiskered(cat::nat_set(t, l.functor(), fibres, limit), whisker);
      return filtered;
    };
    audit_pairs(
        rep, c, deltas, [&](const span::ConnectingMorphism& d) { return span::mediating_from(l, d); }, factoring);
  }
  return rep;
}

}  // namespace satkit::lab
