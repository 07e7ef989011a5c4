#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satkit/span/satellite.hpp"

namespace satkit::lab {

struct NaturalitySpot {
  std::string variable;     // "T" or "V"
  std::size_t endomorphism;  // index into nat_set(T, T) or nat_set(V, V)
  std::size_t transformation;  // index into the left-hand list
  bool holds;
};

// Transposition between nat_set(S¹T, V) and nat_set(T, S₁V).
struct AdjunctionReport {
  std::vector<cat::NatTransformation> left;   // S¹T -> V
  std::vector<cat::NatTransformation> right;  // T -> S₁V
  std::vector<std::size_t> forward;           // left index -> right index, npos if unmatched
  std::vector<std::size_t> backward;          // right index -> left index
  bool bijection = false;
  std::vector<NaturalitySpot> spots;

  bool natural() const;
};

// Forward: α |-> mediating_from(α ∘ δ). Backward: β |-> mediating_to(ϑ ∘ β).
// Naturality is spot-checked against up to `spot_limit` endomorphisms of T
// and of V. Throws SourceMismatch.
AdjunctionReport adjunction_check(const span::SpanPtr& s, const cat::SetFunctorPtr& t, const cat::SetFunctorPtr& v,
                                  std::size_t spot_limit = 3);

// S₁ν : S₁V -> S₁V', φ |-> ν ∘ φ.
cat::NatTransformation left_satellite_of_nat(const span::LeftSatelliteResult& from,
                                             const span::LeftSatelliteResult& to, const cat::NatTransformation& nu);

}  // namespace satkit::lab
