#include "newton.hpp"

#include <algorithm>
#include <numeric>

namespace curvepi::newton {

using exactpoly::Integer;

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long long>(a.i - o.i) * (b.j - o.j) -
         static_cast<long long>(a.j - o.j) * (b.i - o.i);
}

void require_bivariate_nonzero(const SparsePolynomial& p, const char* who) {
  if (p.var_count() != 2) fail(ErrorCode::InvalidArgument, std::string(who) + " expects 2 variables");
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, std::string(who) + " of the zero polynomial");
}

} // namespace

NewtonPolygon polygon(const SparsePolynomial& p) {
  require_bivariate_nonzero(p, "polygon");
  NewtonPolygon np;
  for (const auto& [e, c] : p.terms()) np.support.push_back({e[0], e[1]});
  std::sort(np.support.begin(), np.support.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });

  // Andrew monotone chain, lower hull; collinear points are dropped.
  std::vector<LatticePoint>& hull = np.vertices;
  for (const LatticePoint& pt : np.support) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  // Only the strictly descending chain is the Newton polygon: drop the flat
  // and rising tail (and with it any trailing vertical run).
  while (hull.size() >= 2 && hull.back().j >= hull[hull.size() - 2].j) hull.pop_back();

  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    Edge e;
    e.from = hull[k];
    e.to = hull[k + 1];
    int di = e.to.i - e.from.i;
    int dj = e.to.j - e.from.j;
    int g = std::gcd(di, -dj);
    e.dir_i = di / g;
    e.dir_j = dj / g;
    e.lattice_length = g;
    np.edges.push_back(e);
  }
  return np;
}

int multiplicity(const SparsePolynomial& p) {
  require_bivariate_nonzero(p, "multiplicity");
  return p.multiplicity();
}

EdgeRoots rational_roots(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  EdgeRoots out;
  if (coeffs.empty()) fail(ErrorCode::ZeroPolynomial, "rational_roots of the zero polynomial");
  size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low > 0) {
    out.roots.emplace_back(Rational(0), static_cast<int>(low));
    coeffs.erase(coeffs.begin(), coeffs.begin() + low);
  }

  auto divisors = [](Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> ds;
    for (Integer i = 1; i * i <= n; ++i) {
      if (n % i == 0) {
        ds.push_back(i);
        if (i * i != n) ds.push_back(n / i);
      }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  };

  while (coeffs.size() > 1) {
    // Clear denominators, then run the rational root test on p/q candidates.
    Integer scale = 1;
    for (const Rational& c : coeffs) scale = lcm(scale, denominator(c));
    std::vector<Integer> ic;
    ic.reserve(coeffs.size());
    for (const Rational& c : coeffs) {
      Rational scaled = c * scale;
      ic.push_back(numerator(scaled));
    }

    bool found = false;
    for (const Integer& pn : divisors(ic.front())) {
      for (const Integer& qn : divisors(ic.back())) {
        if (gcd(pn, qn) != 1) continue;
        for (int sign : {1, -1}) {
          Rational r(sign * pn, qn);
          Rational v = 0;
          for (size_t k = coeffs.size(); k-- > 0;) v = v * r + coeffs[k];
          if (v != 0) continue;
          int mult = 0;
          while (true) {
            // synthetic division by (t - r)
            std::vector<Rational> q(coeffs.size() - 1);
            Rational carry = coeffs.back();
            for (size_t k = coeffs.size() - 1; k-- > 0;) {
              q[k] = carry;
              carry = coeffs[k] + carry * r;
            }
            if (carry != 0) break;
            coeffs = q;
            ++mult;
            if (coeffs.size() == 1) break;
          }
          out.roots.emplace_back(r, mult);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.unresolved_degree = static_cast<int>(coeffs.size()) - 1;
  return out;
}

TangentCone tangent_cone(const SparsePolynomial& p) {
  require_bivariate_nonzero(p, "tangent_cone");
  TangentCone tc;
  tc.degree = p.multiplicity();
  int min_i = -1, min_j = -1;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != tc.degree) continue;
    if (min_i < 0 || e[0] < min_i) min_i = e[0];
    if (min_j < 0 || e[1] < min_j) min_j = e[1];
  }
  tc.x_power = min_i;
  tc.y_power = min_j;
  int h = tc.degree - min_i - min_j; // degree of the axis-free part
  std::vector<Rational> u(h + 1, Rational(0));
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] == tc.degree) u[e[1] - min_j] = c;
  EdgeRoots rr = rational_roots(u);
  tc.linear_factors = rr.roots;

  // Deflate the found roots to expose the non-rational remainder.
  std::vector<Rational> rem = u;
  for (const auto& [r, mult] : rr.roots) {
    for (int k = 0; k < mult; ++k) {
      std::vector<Rational> q(rem.size() - 1);
      Rational carry = rem.back();
      for (size_t s = rem.size() - 1; s-- > 0;) {
        q[s] = carry;
        carry = rem[s] + carry * r;
      }
      rem = q;
    }
  }
  SparsePolynomial remainder(p.variables());
  int rdeg = static_cast<int>(rem.size()) - 1;
  for (int s = 0; s <= rdeg; ++s)
    if (rem[s] != 0) remainder.add_term({rdeg - s, s}, rem[s]);
  tc.remainder = remainder;
  return tc;
}

QuasiType quasi_type(const SparsePolynomial& p) {
  require_bivariate_nonzero(p, "quasi_type");
  NewtonPolygon np = polygon(p);
  QuasiType qt;
  if (np.edges.empty()) {
    qt.reason = "no compact edge (monomial support)";
    return qt;
  }
  if (np.edges.size() > 1) {
    qt.reason = "multi-edge polygon";
    return qt;
  }
  const Edge& e = np.edges.front();
  if (e.from.i != 0 || e.to.j != 0) {
    qt.reason = "missing axis endpoint (axis factor divides the germ)";
    return qt;
  }
  int pp = e.from.j, qq = e.to.i;
  if (std::gcd(pp, qq) != 1) {
    qt.reason = "edge endpoints not coprime";
    return qt;
  }
  qt.conclusive = true;
  qt.p = pp;
  qt.q = qq;
  return qt;
}

std::vector<Rational> edge_polynomial(const SparsePolynomial& p, const Edge& edge) {
  require_bivariate_nonzero(p, "edge_polynomial");
  // Index 0 sits at the `to` endpoint (on the x-axis side), so for edges of
  // lattice direction (k,-1) a root r corresponds to a branch y ~ r*x^k.
  std::vector<Rational> coeffs(edge.lattice_length + 1, Rational(0));
  for (int s = 0; s <= edge.lattice_length; ++s) {
    int i = edge.from.i + (edge.lattice_length - s) * edge.dir_i;
    int j = edge.from.j + (edge.lattice_length - s) * edge.dir_j;
    coeffs[s] = p.coefficient({i, j});
  }
  return coeffs;
}

EdgeRoots edge_roots(const SparsePolynomial& p, const Edge& edge) {
  return rational_roots(edge_polynomial(p, edge));
}

} // namespace curvepi::newton
