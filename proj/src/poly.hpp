#ifndef CURVEPI_POLY_HPP
#define CURVEPI_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace curvepi::exactpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vector; length always equals the number of variables.
using Exponents = std::vector<int>;

// Immutable sparse polynomial with exact rational coefficients.  Terms are
// kept in lexicographic order on the exponent vector, no zero coefficients
// are stored, so equal polynomials have identical serializations.
class SparsePolynomial {
public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(std::vector<std::string> variables);

  static SparsePolynomial constant(std::vector<std::string> variables, Rational value);
  static SparsePolynomial monomial(std::vector<std::string> variables, Exponents exponents,
                                   Rational coefficient = 1);
  static SparsePolynomial variable(std::vector<std::string> variables, int index);

  const std::vector<std::string>& variables() const { return vars_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  // Max/min total degree over the support; zero polynomial has degree -1.
  int total_degree() const;
  int multiplicity() const;
  bool is_homogeneous() const;
  bool is_integral() const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  SparsePolynomial operator-() const;
  SparsePolynomial operator+(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-(const SparsePolynomial& rhs) const;
  SparsePolynomial operator*(const SparsePolynomial& rhs) const;
  SparsePolynomial operator*(const Rational& scalar) const;
  SparsePolynomial pow(int exponent) const;
  bool operator==(const SparsePolynomial& rhs) const = default;

  void add_term(const Exponents& e, const Rational& coefficient); // used by builders

private:
  void check_compatible(const SparsePolynomial& rhs) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

std::string to_string(const SparsePolynomial& p);
// Inverse of to_string on canonical forms; accepts whitespace anywhere and
// optional `*` separators.  Variables not listed are rejected.
SparsePolynomial parse_polynomial(std::string_view text, std::vector<std::string> variables);

// Parameters of the curve family.  N odd, N = 2m+1, d = a+b, gcd(N,d) = 1,
// gcd(a,b) = 1; the constructor rejects anything else.
struct CurveParams {
  CurveParams(int N, int a, int b);
  int N, a, b;
  int m;
  int d;
};

// The projective curve x^{aN} y^{bN} + (x^N + y^N + x^m y^m z)^d in (x,y,z),
// homogeneous of degree d*N.
SparsePolynomial build_curve(const CurveParams& params);

// Substitute 1 for the chart variable; result lives in the remaining two.
SparsePolynomial dehomogenize(const SparsePolynomial& p, int chart);
// Insert a variable back at `position` so every term gets total degree `degree`.
SparsePolynomial homogenize(const SparsePolynomial& p, const std::string& name, int degree,
                            int position);

enum class BlowupChart { A, B }; // A: (u,v) <- (u, u*v), B: (u,v) <- (u*v, v)

struct BlowupResult {
  SparsePolynomial strict;
  int exceptional_multiplicity;
};

// Strict transform in one chart of the blow-up at the origin.  The returned
// multiplicity is the exact power of the exceptional variable divided out,
// which always equals multiplicity(p).
BlowupResult blowup_chart(const SparsePolynomial& p, BlowupChart chart);

// Substitutes y <- y1 - c*x^k (variables keep their names).
SparsePolynomial shift(const SparsePolynomial& p, const Rational& c, int k);

// Swap the two variables of a bivariate polynomial.
SparsePolynomial transpose(const SparsePolynomial& p);

} // namespace curvepi::exactpoly

#endif
