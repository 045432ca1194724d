#pragma once

#include <map>
#include <string>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

// One element of the order-8 symmetry group of the trace coordinates,
// generated by
//   i : t(1) <-> t(-1), t(3) <-> t(-4), t(4) <-> t(-3)   (from x1 -> x1^-1)
//   t : t(1) <-> t(2),  t(-1) <-> t(-2), t(4) <-> t(-4)  (from x1 <-> x2).
// Each element permutes the base coordinates t(+-1..+-4) and acts on t(5)
// either trivially or by the ring substitution t(5) -> P - t(5)
// (equivalently, by swapping t(5) and t(-5)).
struct DihedralElement {
  std::string name;         // "id", "i", "t", "it", "ti", "tit", "iti", "titi"
  std::map<int, int> perm;  // total map on {+-1, +-2, +-3, +-4}
  bool flips_t5;            // true when the element swaps t(5) and t(-5)
};

// The eight elements in multiplication-table row order:
//   id, i, t, it, ti, tit, iti, titi.
// Composite names read right to left: "it" applies t first, then i.
const std::vector<DihedralElement>& dihedral_group();

// Lookup by name; throws DomainError for anything not in the list above.
const DihedralElement& dihedral_element(const std::string& name);

// Group product a*b, applying b first.  The result is always one of the
// eight table elements (returned by reference into dihedral_group()).
const DihedralElement& compose(const DihedralElement& a, const DihedralElement& b);

}  // namespace charvar
