#include "satkit/ab/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace satkit::ab {

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : f_{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())} {}

  SmithForm run() {
    const std::size_t limit = std::min(a().rows(), a().cols());
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = smallest(t);
      if (!pivot) break;
      move_to(pivot->first, pivot->second, t);
      reduce(t);
      if (a()(t, t) < 0) row_negate(t);
    }
    return std::move(f_);
  }

 private:
  IntMatrix& a() { return f_.d; }

  // Smallest nonzero |a(i,j)| with i, j >= t.
  std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a().rows(); ++i)
      for (std::size_t j = t; j < a().cols(); ++j) {
        if (a()(i, j) == 0) continue;
        Integer v = abs(a()(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    return best;
  }

  void move_to(std::size_t i, std::size_t j, std::size_t t) {
    if (i != t) {
      a().swap_rows(i, t);
      f_.u.swap_rows(i, t);
    }
    if (j != t) {
      a().swap_cols(j, t);
      f_.w.swap_cols(j, t);
      f_.w_inverse.swap_rows(j, t);
    }
  }

  void row_add(std::size_t target, std::size_t source, const Integer& k) {
    a().add_row(target, source, k);
    f_.u.add_row(target, source, k);
  }

  void col_add(std::size_t target, std::size_t source, const Integer& k) {
    a().add_col(target, source, k);
    f_.w.add_col(target, source, k);
    f_.w_inverse.add_row(source, target, -k);
  }

  void row_negate(std::size_t r) {
    a().negate_row(r);
    f_.u.negate_row(r);
  }

  // Clears row and column t and makes a(t,t) divide the remaining block.
  void reduce(std::size_t t) {
    const std::size_t rows = a().rows(), cols = a().cols();
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a()(i, t) == 0) continue;
        row_add(i, t, -(a()(i, t) / a()(t, t)));
        if (a()(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a()(t, j) == 0) continue;
        col_add(j, t, -(a()(t, j) / a()(t, t)));
        if (a()(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the old pivot is left somewhere.
        auto p = smallest(t);
        move_to(p->first, p->second, t);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a()(i, j) % a()(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) return;
    }
  }

  SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

}  // namespace satkit::ab
