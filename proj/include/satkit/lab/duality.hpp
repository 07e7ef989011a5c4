#pragma once

#include <string>
#include <vector>

#include "satkit/span/span.hpp"

namespace satkit::lab {

struct DualityReport {
  std::vector<std::string> direct_failures;    // edges of s whose square fails in Set
  std::vector<std::string> reversed_failures;  // edges of s° whose square fails in Set°
  bool involution = false;                     // (s°)° == s

  bool consistent() const { return direct_failures == reversed_failures; }
  bool connected() const { return direct_failures.empty(); }
  bool passed() const { return involution && consistent(); }
};

// Reads δ : T -> V over s as δ° : V° -> T° over opposite_span(s), with all
// arrows and composites taken in Set°, and compares the two sets of failing
// squares.
DualityReport duality_audit(const span::ConnectingMorphism& d);

// duality_audit for many pairs over one span; s° and the involution check
// are computed once.
class DualityAuditor {
 public:
  explicit DualityAuditor(span::SpanPtr s);
  // Throws SourceMismatch if d is over another span.
  DualityReport audit(const span::ConnectingMorphism& d) const;

 private:
  span::SpanPtr span_;
  span::SpanSchema op_;
  bool involution_;
};

}  // namespace satkit::lab
