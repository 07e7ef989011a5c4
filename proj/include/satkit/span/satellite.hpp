#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "satkit/cat/nat.hpp"
#include "satkit/span/span.hpp"

namespace satkit::span {

using cat::NatTransformation;

// (y : Y' -> Y, node with G(node) = Y', element of T(F(node))), by index.
struct Triple {
  std::size_t morphism;
  std::size_t node;
  std::size_t element;

  auto operator<=>(const Triple&) const = default;
};

struct SatelliteClass {
  Triple representative;  // least member, ordered by (Y', node, element, morphism)
  std::vector<Triple> members;
};

// The right satellite S¹T computed pointwise as a quotient of triples,
// together with its unit δ(S) : t |-> cls(1_{G(S)}, S, t).
class SatelliteResult {
 public:
  const SpanPtr& span() const { return span_; }
  const SetFunctorPtr& input() const { return input_; }
  const SetFunctorPtr& functor() const { return functor_; }
  const ConnectingMorphism& unit() const { return unit_; }

  // classes(Y)[i] is the class labelled by element i of functor() at Y.
  const std::vector<SatelliteClass>& classes(std::size_t y) const { return classes_[y]; }
  // Element index at cod(y) of the class of the triple.
  std::size_t class_of(const Triple& t) const;
  std::size_t triple_count(std::size_t y) const { return class_index_[y].size(); }

  std::string describe(const Triple& t) const;

 private:
  friend SatelliteResult right_satellite(const SpanPtr&, const SetFunctorPtr&);

  SpanPtr span_;
  SetFunctorPtr input_;
  SetFunctorPtr functor_;
  ConnectingMorphism unit_;
  std::vector<std::vector<SatelliteClass>> classes_;
  // Triple (y, n, t) sits at block_start_[cod y][n] + t * |hom(G n, cod y)| + hom_position_[y].
  std::vector<std::vector<std::size_t>> block_start_;
  std::vector<std::size_t> hom_position_;
  std::vector<std::vector<std::size_t>> class_index_;
};

// S¹T. Throws SourceMismatch if T is not defined on X.
SatelliteResult right_satellite(const SpanPtr& s, const SetFunctorPtr& t);

// The unique γ : S¹T -> V' with γ_{G(S)} ∘ δ(S) = δ'(S), read off as
// γ(cls(y, S, t)) = V'(y)(δ'(S)(t)). Every member of every class is
// checked; a disagreement or a naturality failure throws IllDefined.
NatTransformation mediating_to(const SatelliteResult& result, const ConnectingMorphism& candidate);

// α ∘ δ : the connecting morphism T -> V' obtained by whiskering.
ConnectingMorphism after_unit(const SatelliteResult& result, const NatTransformation& alpha);

// The left satellite S₁V: at X the natural transformations from the right
// satellite of the representable X(X, ?) to V.
class LeftSatelliteResult {
 public:
  const SpanPtr& span() const { return span_; }
  const SetFunctorPtr& input() const { return input_; }
  const SetFunctorPtr& functor() const { return functor_; }
  const ConnectingMorphism& counit() const { return counit_; }

  // Right satellite of X(x, ?).
  const SatelliteResult& representable(std::size_t x) const { return representables_[x]; }
  // elements(x)[i] is the transformation labelled by element i at x.
  const std::vector<NatTransformation>& elements(std::size_t x) const { return elements_[x]; }
  // Index of a transformation out of representable(x), or npos.
  std::size_t element_of(std::size_t x, const NatTransformation& phi) const;

 private:
  friend LeftSatelliteResult left_satellite(const SpanPtr&, const SetFunctorPtr&, std::size_t);

  SpanPtr span_;
  SetFunctorPtr input_;
  SetFunctorPtr functor_;
  ConnectingMorphism counit_;
  std::vector<SatelliteResult> representables_;
  std::vector<std::vector<NatTransformation>> elements_;
  std::vector<std::map<std::vector<std::vector<std::size_t>>, std::size_t>> lookup_;
};

// S₁V. Throws SourceMismatch if V is not defined on Y, EnumerationLimit if
// some element set would exceed `limit`.
LeftSatelliteResult left_satellite(const SpanPtr& s, const SetFunctorPtr& v,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max());

// The unique γ : T' -> S₁V with ϑ(S) ∘ γ_{F(S)} = δ'(S).
NatTransformation mediating_from(const LeftSatelliteResult& result, const ConnectingMorphism& candidate);

// ϑ ∘ β : the connecting morphism T' -> V obtained by whiskering.
ConnectingMorphism before_counit(const LeftSatelliteResult& result, const NatTransformation& beta);

// S¹α : S¹T -> S¹T', cls(y, S, t) |-> cls(y, S, α_{F(S)}(t)).
NatTransformation satellite_of_nat(const SatelliteResult& from, const SatelliteResult& to,
                                   const NatTransformation& alpha);
NatTransformation satellite_of_nat(const SpanPtr& s, const NatTransformation& alpha);

}  // namespace satkit::span
