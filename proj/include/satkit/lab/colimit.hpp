#pragma once

#include <cstddef>
#include <vector>

#include "satkit/cat/functor.hpp"
#include "satkit/cat/graph.hpp"
#include "satkit/span/satellite.hpp"

namespace satkit::lab {

// Shape-indexed finite sets {0..sizes[n]-1} with a function per edge.
struct SetDiagram {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> edge_fns;
};

struct Colimit {
  // classes[k] lists (node, element) pairs, ordered by (node, element).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> classes;
  // injections[node][element] = class index.
  std::vector<std::vector<std::size_t>> injections;
};

// Colimit of a diagram of finite sets: the disjoint union modulo x ~ D(e)(x),
// closed by propagating least labels until nothing changes.
Colimit colimit_oracle(const cat::FinGraph& shape, const SetDiagram& d);

// T ∘ F as a diagram over the shape of s.
SetDiagram restrict_along(const span::SpanSchema& s, const cat::SetFunctor& t);

// For Y terminal: true iff some bijection between the oracle classes and
// S¹T(pt) sends each oracle injection to t |-> cls(id, S, t).
bool agrees_with_oracle(const span::SatelliteResult& r, const Colimit& c);

}  // namespace satkit::lab
