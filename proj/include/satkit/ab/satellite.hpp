#pragma once

#include <vector>

#include "satkit/ab/functor.hpp"
#include "satkit/span/satellite.hpp"

namespace satkit::ab {

struct AbRightSatellite {
  AbFunctorPtr functor;  // on Y; generators are the set-level classes
  span::SatelliteResult set_level;
  UnderlyingSets input;
  std::vector<FiniteGroup> groups;  // finite models of functor's groups
  bool unit_homomorphic = false;
};

// Free abelian group on the classes at each Y modulo
// cls(y,S,t1+t2) - cls(y,S,t1) - cls(y,S,t2) and cls(y,S,0) for every
// y : G(S) -> Y. Throws InfiniteGroup unless every T(x) is finite.
AbRightSatellite ab_right_satellite(const span::SpanPtr& s, const AbFunctor& t);

struct AbLeftSatellite {
  AbFunctorPtr functor;  // on X; Cayley presentations over the set-level elements
  span::LeftSatelliteResult set_level;
  UnderlyingSets input;
  std::vector<FiniteGroup> groups;
  // element_map[x][i]: set-level element i as an element of groups[x].
  std::vector<std::vector<std::size_t>> element_map;
  bool counit_homomorphic = false;
};

// Set-level left satellite with pointwise addition of transformations.
// Throws InfiniteGroup, or IllDefined if a pointwise sum is not natural.
AbLeftSatellite ab_left_satellite(const span::SpanPtr& s, const AbFunctor& v);

}  // namespace satkit::ab
