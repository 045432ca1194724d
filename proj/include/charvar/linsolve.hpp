#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "charvar/rational.hpp"

namespace charvar {

using Matrix = std::vector<std::vector<Rational>>;

// Exact solver for square rational systems.  Forward elimination follows the
// fraction-free (Bareiss) recurrence
//   a[i][j] <- (p_k * a[i][j] - a[i][k] * a[k][j]) / p_{k-1},
// so on integer input every intermediate value is an integer minor and no
// spurious fraction growth occurs.  The elimination is factored once; any
// number of right-hand sides can then be solved by replaying the recorded
// row swaps and multipliers.
class FractionFreeSolver {
 public:
  explicit FractionFreeSolver(Matrix a);  // throws DomainError if not square

  std::size_t size() const { return n_; }
  bool singular() const { return singular_; }
  // Determinant of the input matrix (exact; 0 when singular).
  const Rational& det() const { return det_; }

  // Solve A x = b exactly.  Throws RankDeficient when A is singular and
  // DomainError when b has the wrong length.
  std::vector<Rational> solve(std::vector<Rational> b) const;

 private:
  std::size_t n_ = 0;
  bool singular_ = false;
  Rational det_;
  // Row swaps as (step, partner) pairs, replayed in order on each RHS.
  std::vector<std::pair<std::size_t, std::size_t>> swaps_;
  // Upper triangle: eliminated matrix; strict lower triangle: the multiplier
  // a[i][k] captured at the moment column k was eliminated.
  Matrix lu_;
};

// Determinant by fraction-free elimination.
Rational bareiss_det(Matrix a);

}  // namespace charvar
