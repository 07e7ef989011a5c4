#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satkit/span/satellite.hpp"

namespace satkit::lab {

struct UniversalityReport {
  std::string side;  // "right" or "left"
  std::size_t candidates = 0;
  std::size_t pairs = 0;  // connected pairs examined
  std::size_t failures = 0;
  std::vector<std::string> messages;  // one per failure, capped

  bool passed() const { return failures == 0; }
};

// For every candidate V' on Y and every connecting δ' : T -> V', the
// mediating map exists and is the only α in nat_set(S¹T, V') with
// α ∘ δ = δ'. A small nat_set is listed whole and every α ∘ δ is checked to
// be connecting; a large one is searched with α pinned at the unit values,
// which enumerates exactly the α with α ∘ δ = δ'.
UniversalityReport audit_right_universality(const span::SatelliteResult& r,
                                            const std::vector<cat::SetFunctorPtr>& candidates,
                                            std::size_t limit = 100000);

// Dual: candidates T' on X, β in nat_set(T', S₁V) with ϑ ∘ β = δ'.
UniversalityReport audit_left_universality(const span::LeftSatelliteResult& l,
                                           const std::vector<cat::SetFunctorPtr>& candidates,
                                           std::size_t limit = 100000);

}  // namespace satkit::lab
