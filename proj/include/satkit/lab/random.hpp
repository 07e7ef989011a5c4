#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "satkit/cat/functor.hpp"
#include "satkit/span/span.hpp"

namespace satkit::lab {

using cat::CatPtr;
using cat::SetFunctorPtr;
using span::SpanPtr;

// splitmix64. Reproducible across platforms and standard libraries, which
// std::uniform_int_distribution is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  bool chance(std::size_t numerator, std::size_t denominator) { return below(denominator) < numerator; }
  // Independent stream for instance `index`, derived from this seed only.
  Rng fork(std::uint64_t index) const;

 private:
  std::uint64_t state_;
};

struct InstanceBounds {
  std::size_t max_objects = 3;
  std::size_t max_generators = 3;
  std::size_t max_hom = 4;
  std::size_t max_nodes = 5;
  std::size_t max_edges = 6;
  std::size_t max_set = 3;
};

// Small hand-built categories, several with non-trivial composition
// tables: terminal, walking idempotent, Z/2, walking isomorphism, parallel
// pair, a 3-chain and a cospan.
const std::vector<CatPtr>& standard_categories();

// A free category on a random DAG (hom-sets bounded by max_hom), or with
// probability 1/4 one of standard_categories().
CatPtr random_category(Rng& rng, const InstanceBounds& bounds);

// Random functor with sets drawn from {0..max_set}. On free categories the
// generators get random functions; otherwise assignments are rejection
// sampled and fall back to a constant functor.
SetFunctorPtr random_set_functor(Rng& rng, const CatPtr& c, std::size_t max_set);

// Random shape with random diagrams into x and y; edges are only placed
// where both hom-sets are non-empty.
SpanPtr random_span(Rng& rng, const CatPtr& x, const CatPtr& y, std::size_t max_nodes, std::size_t max_edges);

// Shape and X random, Y terminal, G constant.
SpanPtr random_terminal_span(Rng& rng, const CatPtr& x, std::size_t max_nodes, std::size_t max_edges);

// Functors with sets {0..k-1}, k <= max_set, in a fixed order; at most
// `limit` of them.
std::vector<SetFunctorPtr> enumerate_set_functors(const CatPtr& c, std::size_t max_set, std::size_t limit);

// Up to `count` functors for universality audits: the constant empty and
// singleton functors, then a seeded sample of enumerate_set_functors.
std::vector<SetFunctorPtr> candidate_functors(Rng& rng, const CatPtr& c, std::size_t max_set, std::size_t count);

}  // namespace satkit::lab
