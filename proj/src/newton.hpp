#ifndef CURVEPI_NEWTON_HPP
#define CURVEPI_NEWTON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace curvepi::newton {

using exactpoly::Rational;
using exactpoly::SparsePolynomial;

struct LatticePoint {
  int i = 0, j = 0;
  bool operator==(const LatticePoint&) const = default;
};

struct Edge {
  LatticePoint from; // higher j endpoint
  LatticePoint to;   // lower j endpoint
  int dir_i = 0;     // primitive direction, dir_i > 0, dir_j < 0
  int dir_j = 0;
  int lattice_length = 0;
};

// Lower-left hull of the support: compact edges only, ordered from the
// vertex of minimal i to the vertex of minimal j.
struct NewtonPolygon {
  std::vector<LatticePoint> support;
  std::vector<LatticePoint> vertices;
  std::vector<Edge> edges;
};

NewtonPolygon polygon(const SparsePolynomial& p);

int multiplicity(const SparsePolynomial& p);

// Factorization of the lowest-degree homogeneous part into axis powers,
// rational-root linear factors y - r*x, and an unfactored remainder.
struct TangentCone {
  int degree = 0; // = multiplicity(p)
  int x_power = 0;
  int y_power = 0;
  std::vector<std::pair<Rational, int>> linear_factors; // (root r, exponent) for y = r*x
  SparsePolynomial remainder;                           // no rational linear factors; may be constant
};

TangentCone tangent_cone(const SparsePolynomial& p);

struct QuasiType {
  bool conclusive = false;
  int p = 0, q = 0;   // polygon is the single segment (0,p)-(q,0), gcd(p,q)=1
  std::string reason; // non-conclusive explanation
};

QuasiType quasi_type(const SparsePolynomial& p);

// Coefficients of the one-variable edge polynomial, constant term first,
// indexed by lattice steps along the edge from `from` to `to`.
std::vector<Rational> edge_polynomial(const SparsePolynomial& p, const Edge& edge);

struct EdgeRoots {
  std::vector<std::pair<Rational, int>> roots; // (root, multiplicity)
  int unresolved_degree = 0;                   // degree of the rational-root-free part
};

EdgeRoots edge_roots(const SparsePolynomial& p, const Edge& edge);

// Rational roots with multiplicity of a dense univariate polynomial
// (constant term first).  Shared with tangent_cone.
EdgeRoots rational_roots(std::vector<Rational> coeffs);

} // namespace curvepi::newton

#endif
