#ifndef CURVEPI_FINITE_GROUP_HPP
#define CURVEPI_FINITE_GROUP_HPP

#include <string>
#include <vector>

#include "error.hpp"

namespace curvepi::groups {

// Finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string id;
  int order = 1;
  std::vector<int> table; // row-major, order x order
  std::vector<int> inv;

  int op(int a, int b) const { return table[a * order + b]; }
  int power(int a, int n) const;
  // number of solutions of g^k = 1
  int count_order_dividing(int k) const;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 3
FiniteGroup symmetric_group(int n);  // n <= 5 here
FiniteGroup alternating_group(int n);

enum class CatalogSize { Tiny, Small, Full };

CatalogSize catalog_size_from_string(const std::string& s);
std::string to_string(CatalogSize s);

// Deterministic list of targets, ordered by (order, id).  Tiny: up to S3;
// Small: adds the groups through S4; Full: cyclic up to 24, dihedral up to
// order 24, A4, S4, A5, S5.
std::vector<FiniteGroup> catalog(CatalogSize size);

} // namespace curvepi::groups

#endif
