#pragma once

#include <vector>

#include "satkit/ab/matrix.hpp"

namespace satkit::ab {

// U · M · W = D with U, W unimodular, D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix w;
  IntMatrix w_inverse;

  // min(rows, cols) diagonal entries.
  std::vector<Integer> diagonal() const;
};

// Pivots on the smallest nonzero absolute value in the remaining block.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace satkit::ab
