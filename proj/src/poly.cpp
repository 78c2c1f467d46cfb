#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace curvepi::exactpoly {

SparsePolynomial::SparsePolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.size() < 2 || vars_.size() > 3)
    fail(ErrorCode::InvalidArgument, "polynomials carry 2 or 3 variables");
}

SparsePolynomial SparsePolynomial::constant(std::vector<std::string> variables, Rational value) {
  SparsePolynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(std::vector<std::string> variables, Exponents exponents,
                                            Rational coefficient) {
  SparsePolynomial p(std::move(variables));
  if (exponents.size() != p.vars_.size())
    fail(ErrorCode::InvalidArgument, "exponent vector length mismatch");
  for (int e : exponents)
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  p.add_term(exponents, coefficient);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::vector<std::string> variables, int index) {
  SparsePolynomial p(std::move(variables));
  if (index < 0 || index >= p.var_count()) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void SparsePolynomial::add_term(const Exponents& e, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coefficient);
  } else {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

int SparsePolynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

int SparsePolynomial::multiplicity() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "multiplicity of the zero polynomial");
  int mult = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (mult < 0 || t < mult) mult = t;
  }
  return mult;
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree() == multiplicity();
}

bool SparsePolynomial::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (denominator(c) != 1) return false;
  return true;
}

Rational SparsePolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void SparsePolynomial::check_compatible(const SparsePolynomial& rhs) const {
  if (vars_ != rhs.vars_) fail(ErrorCode::InvalidArgument, "mixed variable sets");
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
  check_compatible(rhs);
  SparsePolynomial r(*this);
  for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
  check_compatible(rhs);
  SparsePolynomial r(*this);
  for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
  check_compatible(rhs);
  SparsePolynomial r(vars_);
  Exponents e(vars_.size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& scalar) const {
  SparsePolynomial r(vars_);
  if (scalar == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, c] : r.terms_) c *= scalar;
  return r;
}

SparsePolynomial SparsePolynomial::pow(int exponent) const {
  if (exponent < 0) fail(ErrorCode::InvalidArgument, "negative power");
  SparsePolynomial acc = constant(vars_, 1);
  SparsePolynomial base(*this);
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

} // namespace

std::string to_string(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    bool coef_shown = (a != 1) || !any_var;
    if (coef_shown) os << rational_str(a);
    bool lead = !coef_shown;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << p.variables()[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const std::vector<std::string>& vars;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Integer parse_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(ErrorCode::InvalidArgument, "expected number in polynomial text");
    return Integer(std::string(text.substr(start, pos - start)));
  }

  int parse_var() { // returns variable index or -1
    skip_ws();
    for (size_t i = 0; i < vars.size(); ++i) {
      const std::string& v = vars[i];
      if (text.substr(pos, v.size()) == v) {
        pos += v.size();
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  // term := [number] ('*'? var ['^' number])*
  void parse_term(SparsePolynomial& out, int sign) {
    Rational coef = sign;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_integer();
      if (accept('/'))
        coef *= Rational(num, parse_integer());
      else
        coef *= num;
      have_coef = true;
    }
    Exponents e(vars.size(), 0);
    bool have_var = false;
    for (;;) {
      size_t save = pos;
      bool starred = accept('*');
      int v = parse_var();
      if (v < 0) {
        if (starred) pos = save;
        break;
      }
      have_var = true;
      int k = 1;
      if (accept('^')) k = static_cast<int>(parse_integer());
      e[v] += k;
    }
    if (!have_coef && !have_var) fail(ErrorCode::InvalidArgument, "empty term in polynomial text");
    out.add_term(e, coef);
  }
};

} // namespace

SparsePolynomial parse_polynomial(std::string_view text, std::vector<std::string> variables) {
  SparsePolynomial out(std::move(variables));
  Parser p{text, 0, out.variables()};
  if (p.eof()) fail(ErrorCode::InvalidArgument, "empty polynomial text");
  int sign = 1;
  if (p.accept('-'))
    sign = -1;
  else
    p.accept('+');
  p.parse_term(out, sign);
  while (!p.eof()) {
    if (p.accept('+'))
      sign = 1;
    else if (p.accept('-'))
      sign = -1;
    else
      fail(ErrorCode::InvalidArgument, "expected '+' or '-' in polynomial text");
    p.parse_term(out, sign);
  }
  return out;
}

CurveParams::CurveParams(int N_, int a_, int b_) : N(N_), a(a_), b(b_) {
  if (N < 3 || N % 2 == 0) fail(ErrorCode::InvalidArgument, "N must be odd and >= 3");
  if (a < 1 || b < 1) fail(ErrorCode::InvalidArgument, "a and b must be positive");
  m = (N - 1) / 2;
  d = a + b;
  if (std::gcd(N, d) != 1) fail(ErrorCode::InvalidArgument, "N and d = a+b must be coprime");
  if (std::gcd(a, b) != 1) fail(ErrorCode::InvalidArgument, "a and b must be coprime");
}

SparsePolynomial build_curve(const CurveParams& params) {
  std::vector<std::string> xyz{"x", "y", "z"};
  auto mono = [&](int i, int j, int k) { return SparsePolynomial::monomial(xyz, {i, j, k}); };
  SparsePolynomial inner = mono(params.N, 0, 0) + mono(0, params.N, 0) + mono(params.m, params.m, 1);
  return mono(params.a * params.N, params.b * params.N, 0) + inner.pow(params.d);
}

SparsePolynomial dehomogenize(const SparsePolynomial& p, int chart) {
  if (p.var_count() != 3) fail(ErrorCode::InvalidArgument, "dehomogenize expects 3 variables");
  if (chart < 0 || chart >= 3) fail(ErrorCode::InvalidArgument, "chart index out of range");
  std::vector<std::string> rest;
  for (int i = 0; i < 3; ++i)
    if (i != chart) rest.push_back(p.variables()[i]);
  SparsePolynomial r(rest);
  for (const auto& [e, c] : p.terms()) {
    Exponents f;
    for (int i = 0; i < 3; ++i)
      if (i != chart) f.push_back(e[i]);
    r.add_term(f, c);
  }
  return r;
}

SparsePolynomial homogenize(const SparsePolynomial& p, const std::string& name, int degree,
                            int position) {
  if (p.var_count() != 2) fail(ErrorCode::InvalidArgument, "homogenize expects 2 variables");
  if (position < 0 || position > 2) fail(ErrorCode::InvalidArgument, "position out of range");
  std::vector<std::string> vars;
  for (int i = 0, j = 0; i < 3; ++i)
    vars.push_back(i == position ? name : p.variables()[j++]);
  SparsePolynomial r(vars);
  for (const auto& [e, c] : p.terms()) {
    int missing = degree - e[0] - e[1];
    if (missing < 0) fail(ErrorCode::InvalidArgument, "degree too small to homogenize");
    Exponents f;
    for (int i = 0, j = 0; i < 3; ++i)
      f.push_back(i == position ? missing : e[j++]);
    r.add_term(f, c);
  }
  return r;
}

BlowupResult blowup_chart(const SparsePolynomial& p, BlowupChart chart) {
  if (p.var_count() != 2) fail(ErrorCode::InvalidArgument, "blowup_chart expects 2 variables");
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "blow-up of the zero polynomial");
  if (p.constant_term() != 0) fail(ErrorCode::InvalidArgument, "blow-up center must lie on the curve");
  // Both charts act monomially: chart A maps (i,j) to (i+j, j) with
  // exceptional u, chart B to (i, i+j) with exceptional v.
  int mult = p.multiplicity();
  SparsePolynomial r(p.variables());
  for (const auto& [e, c] : p.terms()) {
    int t = e[0] + e[1];
    Exponents f = (chart == BlowupChart::A) ? Exponents{t - mult, e[1]} : Exponents{e[0], t - mult};
    r.add_term(f, c);
  }
  return {r, mult};
}

SparsePolynomial shift(const SparsePolynomial& p, const Rational& c, int k) {
  if (p.var_count() != 2) fail(ErrorCode::InvalidArgument, "shift expects 2 variables");
  if (k < 1) fail(ErrorCode::InvalidArgument, "shift exponent must be positive");
  if (c == 0) return p;
  // y = y1 - c*x^k, expanded binomially per term.
  SparsePolynomial r(p.variables());
  for (const auto& [e, coef] : p.terms()) {
    int j = e[1];
    Rational binom = 1; // C(j, s) * (-c)^s accumulated incrementally
    Rational power = 1;
    for (int s = 0; s <= j; ++s) {
      r.add_term({e[0] + k * s, j - s}, coef * binom * power);
      binom = binom * (j - s) / (s + 1);
      power *= -c;
    }
  }
  return r;
}

SparsePolynomial transpose(const SparsePolynomial& p) {
  if (p.var_count() != 2) fail(ErrorCode::InvalidArgument, "transpose expects 2 variables");
  SparsePolynomial r(p.variables());
  for (const auto& [e, c] : p.terms()) r.add_term({e[1], e[0]}, c);
  return r;
}

} // namespace curvepi::exactpoly
