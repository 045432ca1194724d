#include "charvar/linsolve.hpp"

#include "charvar/errors.hpp"

namespace charvar {

FractionFreeSolver::FractionFreeSolver(Matrix a) : n_(a.size()), det_(0) {
  for (const auto& row : a)
    if (row.size() != n_)
      throw DomainError("FractionFreeSolver: matrix must be square");
  lu_ = std::move(a);

  bool negate = false;
  Rational prev(1);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot = k;
    while (pivot < n_ && lu_[pivot][k].is_zero()) ++pivot;
    if (pivot == n_) {
      singular_ = true;
      return;
    }
    if (pivot != k) {
      std::swap(lu_[pivot], lu_[k]);
      swaps_.emplace_back(k, pivot);
      negate = !negate;
    }
    const Rational& p = lu_[k][k];
    for (std::size_t i = k + 1; i < n_; ++i) {
      const Rational mult = lu_[i][k];
      for (std::size_t j = k + 1; j < n_; ++j)
        lu_[i][j] = (p * lu_[i][j] - mult * lu_[k][j]) / prev;
      // Keep the multiplier where standard LU would store it; the column is
      // conceptually zero from here on.
      lu_[i][k] = mult;
    }
    prev = p;
  }
  if (n_ == 0) {
    det_ = Rational(1);
  } else {
    det_ = lu_[n_ - 1][n_ - 1];
    if (negate) det_ = -det_;
  }
}

std::vector<Rational> FractionFreeSolver::solve(std::vector<Rational> b) const {
  if (singular_) throw RankDeficient("solve: matrix is singular");
  if (b.size() != n_) throw DomainError("solve: right-hand side has wrong length");

  // Replay the forward elimination on b.  Swaps happened at known steps in
  // order, so walk both sequences together.
  std::size_t next_swap = 0;
  Rational prev(1);
  for (std::size_t k = 0; k < n_; ++k) {
    if (next_swap < swaps_.size() && swaps_[next_swap].first == k) {
      std::swap(b[k], b[swaps_[next_swap].second]);
      ++next_swap;
    }
    const Rational& p = lu_[k][k];
    for (std::size_t i = k + 1; i < n_; ++i)
      b[i] = (p * b[i] - lu_[i][k] * b[k]) / prev;
    prev = p;
  }

  std::vector<Rational> x(n_, Rational(0));
  for (std::size_t ii = n_; ii-- > 0;) {
    Rational acc = b[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) acc -= lu_[ii][j] * x[j];
    x[ii] = acc / lu_[ii][ii];
  }
  return x;
}

Rational bareiss_det(Matrix a) {
  return FractionFreeSolver(std::move(a)).det();
}

}  // namespace charvar
