#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satkit/span/satellite.hpp"

namespace satkit::lab {

// K = (-) × C on finite sets, elements labelled "(t,c)".
struct ProductFunctor {
  std::vector<std::string> factor;

  std::vector<std::string> on_set(const std::vector<std::string>& elements) const;
  // Index of (t, c) in on_set's output order, before any sorting.
  std::size_t pair_index(std::size_t t, std::size_t c) const { return t * factor.size() + c; }
  std::vector<std::size_t> on_function(const std::vector<std::size_t>& f) const;
};

ProductFunctor product_functor(std::vector<std::string> c);

// T × C.
cat::SetFunctor apply_product(const cat::SetFunctor& t, const std::vector<std::string>& c);
// V^C: functions C -> V(y) labelled "[v_1,...,v_k]" in the order of C,
// arrows by postcomposition.
cat::SetFunctor apply_power(const cat::SetFunctor& v, const std::vector<std::string>& c);

// Element index of (t, c) in apply_product(t, C) at x.
std::size_t product_element(const cat::SetFunctor& product, const cat::SetFunctor& t,
                            const std::vector<std::string>& c, std::size_t x, std::size_t ti, std::size_t ci);
// Element index of the function with the given values in apply_power(v, C) at y.
std::size_t power_element(const cat::SetFunctor& power, const cat::SetFunctor& v, std::size_t y,
                          const std::vector<std::size_t>& values);

struct PreservationReport {
  std::string side;  // "right" or "left"
  cat::NatTransformation comparison;
  bool well_defined = false;
  bool natural = false;
  bool isomorphism = false;  // well defined, natural and bijective in every component
};

// (S¹T) × C -> S¹(T × C), (cls(y,S,t), c) |-> cls(y,S,(t,c)).
PreservationReport preservation_check_right(const span::SpanPtr& s, const cat::SetFunctorPtr& t,
                                            const std::vector<std::string>& c);
// (S₁V)^C -> S₁(V^C), (φ_c)_c |-> the transformation z |-> (φ_c(z))_c.
PreservationReport preservation_check_left(const span::SpanPtr& s, const cat::SetFunctorPtr& v,
                                           const std::vector<std::string>& c);

}  // namespace satkit::lab
