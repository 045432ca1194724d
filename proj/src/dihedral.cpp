#include "charvar/dihedral.hpp"

namespace charvar {
namespace {

constexpr int kIndices[8] = {1, -1, 2, -2, 3, -3, 4, -4};

std::map<int, int> perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::map<int, int> p;
  for (int i : kIndices) p[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  return p;
}

std::vector<DihedralElement> build_group() {
  std::vector<DihedralElement> g;
  g.push_back({"id", perm_from_cycles({}), false});
  g.push_back({"i", perm_from_cycles({{1, -1}, {3, -4}, {-3, 4}}), true});
  g.push_back({"t", perm_from_cycles({{1, 2}, {-1, -2}, {4, -4}}), true});
  g.push_back({"it", perm_from_cycles({{1, 2, -1, -2}, {3, -4, -3, 4}}), false});
  g.push_back({"ti", perm_from_cycles({{1, -2, -1, 2}, {3, 4, -3, -4}}), false});
  g.push_back({"tit", perm_from_cycles({{2, -2}, {3, 4}, {-3, -4}}), true});
  g.push_back({"iti", perm_from_cycles({{1, -2}, {2, -1}, {3, -3}}), true});
  g.push_back({"titi", perm_from_cycles({{1, -1}, {2, -2}, {3, -3}, {4, -4}}), false});
  return g;
}

}  // namespace

const std::vector<DihedralElement>& dihedral_group() {
  static const std::vector<DihedralElement> group = build_group();
  return group;
}

const DihedralElement& dihedral_element(const std::string& name) {
  for (const DihedralElement& g : dihedral_group())
    if (g.name == name) return g;
  throw DomainError("dihedral_element: unknown element '" + name + "'");
}

const DihedralElement& compose(const DihedralElement& a, const DihedralElement& b) {
  std::map<int, int> p;
  for (int i : kIndices) p[i] = a.perm.at(b.perm.at(i));
  const bool flips = a.flips_t5 != b.flips_t5;
  for (const DihedralElement& g : dihedral_group())
    if (g.perm == p && g.flips_t5 == flips) return g;
  throw DomainError("compose: product left the group (corrupt element data)");
}

}  // namespace charvar
