#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "charvar/mat3.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// Result of evaluating an identity's LHS - RHS on concrete matrices.
// Matrix-valued identities must vanish in all nine entries; scalar ones in
// the single value.
using Residual = std::variant<Rational, Mat3<Rational>>;

bool residual_is_zero(const Residual& r);
// Largest entry magnitude, for diagnostics.
double residual_magnitude(const Residual& r);

// One machine-checkable trace/matrix identity for 3x3 matrices.
//
// Identities quantified over a scalar parameter are checked at the nodes
// lambda in {1, 2, 3, 7}: both sides are cubic in lambda, so agreement at
// four nodes pins the whole polynomial.  The recorded residual is the sum of
// per-node absolute residuals, so it vanishes exactly when every node does.
// The power-recursion identity is likewise summed over exponents 2..5.
struct IdentityRecord {
  std::string name;          // stable CLI-facing identifier
  int arity = 0;             // number of matrix slots
  bool matrix_valued = false;
  // Slots whose matrix gets inverted somewhere in the identity; these inputs
  // must be unimodular.
  std::vector<int> unimodular_slots;
  // Human-readable slot names, in argument order (documentation + CLI help).
  std::string slot_names;
  std::function<Residual(const std::vector<Mat3<Rational>>&)> eval;

  bool needs_unimodular() const { return !unimodular_slots.empty(); }
};

// The full catalog, in fixed order.
const std::vector<IdentityRecord>& identity_catalog();

// Lookup by name; throws UnknownIdentity.
const IdentityRecord& find_identity(const std::string& name);

// Evaluate LHS - RHS of the named identity on the given matrices.
// Throws UnknownIdentity, ArityMismatch, NotUnimodular.
Residual identity_residual(const std::string& name,
                           const std::vector<Mat3<Rational>>& mats);

// The trace-coefficient combination equal to y*x^2 + x^2*y + x*y*x (the
// degree-lowering side of the polarization identity).  Shared by the
// catalog entries that are stated in terms of pol(., .).
Mat3<Rational> pol_rhs(const Mat3<Rational>& x, const Mat3<Rational>& y);

}  // namespace charvar
