#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "satkit/cat/functor.hpp"

namespace satkit::span {

using cat::CatPtr;
using cat::Diagram;
using cat::GraphPtr;
using cat::SetFunctorPtr;

// A graph together with two diagrams X <-F- S -G-> Y.
class SpanSchema {
 public:
  // Throws SourceMismatch when a diagram is not defined on `shape`, and
  // ValidationError when X or Y fails validate_category.
  SpanSchema(GraphPtr shape, Diagram left, Diagram right);

  const cat::FinGraph& shape() const { return *shape_; }
  const GraphPtr& shape_ptr() const { return shape_; }
  const Diagram& left() const { return left_; }    // F : S -> X
  const Diagram& right() const { return right_; }  // G : S -> Y
  const CatPtr& x() const { return left_.target(); }
  const CatPtr& y() const { return right_.target(); }

  bool operator==(const SpanSchema& other) const;

 private:
  GraphPtr shape_;
  Diagram left_;
  Diagram right_;
};

using SpanPtr = std::shared_ptr<const SpanSchema>;

struct DiagramNames {
  std::map<std::string, std::string> nodes;
  std::map<std::string, std::string> edges;  // edge id -> morphism id (or path name)
};

SpanSchema build_span(GraphPtr shape, Diagram left, Diagram right);
// Name-keyed form; mismatched endpoints raise EndpointMismatch naming the
// offending node or edge.
SpanSchema build_span(GraphPtr shape, CatPtr x, const DiagramNames& left, CatPtr y, const DiagramNames& right);

// (X <- S -> Y)  |->  (Y° <- S° -> X°).
SpanSchema opposite_span(const SpanSchema& s);

// Shape = underlying graph of X, F = G = the inclusion.
SpanSchema identity_span(const CatPtr& x);

// A family components[S] : T(F(S)) -> V(G(S)).
struct ConnectingMorphism {
  SpanPtr span;
  SetFunctorPtr left;   // T on X
  SetFunctorPtr right;  // V on Y
  std::vector<std::vector<std::size_t>> components;

  std::size_t at(std::size_t node, std::size_t element) const { return components[node][element]; }
  bool operator==(const ConnectingMorphism& other) const;
};

// Shape edges whose square V(G(s)) ∘ δ(S1) = δ(S2) ∘ T(F(s)) fails.
std::vector<std::size_t> failing_edges(const ConnectingMorphism& d);
bool is_connecting(const ConnectingMorphism& d);

// Throws SourceMismatch unless t lives on X and v on Y.
void check_left_functor(const SpanSchema& s, const cat::SetFunctor& t);
void check_right_functor(const SpanSchema& s, const cat::SetFunctor& v);

// Every connecting morphism T -> V, in lexicographic order of component
// tables. Throws EnumerationLimit past `limit`.
std::vector<ConnectingMorphism> connecting_morphisms(const SpanPtr& s, const SetFunctorPtr& t, const SetFunctorPtr& v,
                                                     std::size_t limit = std::numeric_limits<std::size_t>::max());

// A diagram  start --first--> middle --second--> end  of shape
// Σ'' -> Σ -> Σ' in X.
struct SigmaDiagram {
  std::string name;
  std::size_t first;
  std::size_t second;
};

// Components of a morphism of Σ-diagrams at Σ'', Σ and Σ'.
struct SigmaMorphism {
  std::string name;
  std::string source;
  std::string target;
  std::size_t at_start;
  std::size_t at_middle;
  std::size_t at_end;
};

// One shape node per member and one shape edge per morphism; F reads the
// Σ' end and G the Σ'' end. Throws EndpointMismatch for a member whose
// arrows do not compose, NotADiagramMorphism naming the failing component
// or square.
SpanSchema sequence_span(const CatPtr& x, const std::vector<SigmaDiagram>& members,
                         const std::vector<SigmaMorphism>& morphisms);

}  // namespace satkit::span
