#include "free_product.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace curvepi::groups {

bool FreeProductWord::operator<(const FreeProductWord& rhs) const {
  if (syllables.size() != rhs.syllables.size()) return syllables.size() < rhs.syllables.size();
  return syllables < rhs.syllables;
}

namespace {

int factor_order(const FreeProductWord& w, char tag) { return tag == 'a' ? w.p : w.q; }

void check_orders(int p, int q) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidArgument, "cyclic factor orders must be positive");
}

} // namespace

FreeProductWord fp_identity(int p, int q) {
  check_orders(p, q);
  return {p, q, {}};
}

FreeProductWord fp_normal_form(int p, int q, const std::vector<std::pair<char, int>>& syllables) {
  check_orders(p, q);
  FreeProductWord w{p, q, {}};
  for (const auto& [tag, exp] : syllables) {
    if (tag != 'a' && tag != 'b') fail(ErrorCode::InvalidArgument, "syllable tag must be a or b");
    int ord = tag == 'a' ? p : q;
    long long e = exp;
    if (!w.syllables.empty() && w.syllables.back().first == tag) {
      e += w.syllables.back().second;
      w.syllables.pop_back();
    }
    e %= ord;
    if (e < 0) e += ord;
    if (e != 0) w.syllables.emplace_back(tag, static_cast<int>(e));
  }
  return w;
}

FreeProductWord fp_generator(int p, int q, char tag, int exponent) {
  return fp_normal_form(p, q, {{tag, exponent}});
}

FreeProductWord fp_multiply(const FreeProductWord& w1, const FreeProductWord& w2) {
  if (w1.p != w2.p || w1.q != w2.q) fail(ErrorCode::InvalidArgument, "free product factor mismatch");
  std::vector<std::pair<char, int>> all = w1.syllables;
  all.insert(all.end(), w2.syllables.begin(), w2.syllables.end());
  return fp_normal_form(w1.p, w1.q, all);
}

FreeProductWord fp_inverse(const FreeProductWord& w) {
  std::vector<std::pair<char, int>> rev;
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    rev.emplace_back(it->first, factor_order(w, it->first) - it->second);
  return fp_normal_form(w.p, w.q, rev);
}

FreeProductWord fp_power(const FreeProductWord& w, int n) {
  FreeProductWord base = n < 0 ? fp_inverse(w) : w;
  FreeProductWord acc = fp_identity(w.p, w.q);
  for (int i = 0; i < std::abs(n); ++i) acc = fp_multiply(acc, base);
  return acc;
}

std::string to_string(const FreeProductWord& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.syllables.size(); ++i) {
    if (i) os << " ";
    os << w.syllables[i].first;
    if (w.syllables[i].second != 1) os << "^" << w.syllables[i].second;
  }
  return os.str();
}

FreeProductWord parse_fp_word(const std::string& text, int p, int q) {
  std::vector<std::pair<char, int>> syl;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok[0] != 'a' && tok[0] != 'b') fail(ErrorCode::InvalidArgument, "bad syllable: " + tok);
    int exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') fail(ErrorCode::InvalidArgument, "bad syllable: " + tok);
      exp = std::stoi(tok.substr(2));
    }
    syl.emplace_back(tok[0], exp);
  }
  return fp_normal_form(p, q, syl);
}

std::vector<FreeProductWord> fp_enumerate(int p, int q, int max_syllables) {
  check_orders(p, q);
  std::vector<FreeProductWord> out{fp_identity(p, q)};
  std::vector<FreeProductWord> frontier = out;
  for (int len = 1; len <= max_syllables; ++len) {
    std::vector<FreeProductWord> next;
    for (const FreeProductWord& w : frontier) {
      for (char tag : {'a', 'b'}) {
        if (!w.syllables.empty() && w.syllables.back().first == tag) continue;
        for (int e = 1; e < (tag == 'a' ? p : q); ++e) {
          FreeProductWord v = w;
          v.syllables.emplace_back(tag, e);
          next.push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool fp_generates_within(int p, int q, const std::vector<FreeProductWord>& images, int max_len,
                         int* depth_out) {
  FreeProductWord gen_a = fp_generator(p, q, 'a');
  FreeProductWord gen_b = fp_generator(p, q, 'b');
  std::vector<FreeProductWord> steps;
  for (const FreeProductWord& w : images) {
    steps.push_back(w);
    steps.push_back(fp_inverse(w));
  }
  std::set<FreeProductWord> seen{fp_identity(p, q)};
  std::vector<FreeProductWord> frontier{fp_identity(p, q)};
  for (int depth = 1; depth <= max_len; ++depth) {
    std::vector<FreeProductWord> next;
    for (const FreeProductWord& w : frontier)
      for (const FreeProductWord& s : steps) {
        FreeProductWord v = fp_multiply(w, s);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
    bool have_a = p == 1 || seen.count(gen_a);
    bool have_b = q == 1 || seen.count(gen_b);
    if (have_a && have_b) {
      if (depth_out) *depth_out = depth;
      return true;
    }
    if (frontier.empty()) break;
  }
  return false;
}

HomVerdict eval_hom(const Presentation& pres, const std::vector<FreeProductWord>& images) {
  if (images.size() != pres.generators.size())
    fail(ErrorCode::InvalidArgument, "image count differs from generator count");
  for (size_t r = 0; r < pres.relators.size(); ++r) {
    FreeProductWord acc = images.empty() ? fp_identity(2, 3) : fp_identity(images[0].p, images[0].q);
    for (const braid::Letter& l : pres.relators[r].letters()) {
      const FreeProductWord& g = images[l.index - 1];
      acc = fp_multiply(acc, l.sign > 0 ? g : fp_inverse(g));
    }
    if (!acc.is_identity()) return {false, static_cast<int>(r)};
  }
  return {true, -1};
}

HopfReport bounded_hopf_check(int p, int q, const std::vector<FreeProductWord>& images,
                              int ball_radius, int search_length) {
  if (images.size() != 2) fail(ErrorCode::InvalidArgument, "expected images for the two generators");
  HopfReport rep;
  const FreeProductWord& ia = images[0];
  const FreeProductWord& ib = images[1];
  rep.is_hom = fp_power(ia, p).is_identity() && fp_power(ib, q).is_identity();
  if (!rep.is_hom) return rep;

  rep.surjective_within_L =
      fp_generates_within(p, q, images, search_length, &rep.surjectivity_depth);

  // injectivity on the syllable ball: substitute and compare normal forms
  std::vector<FreeProductWord> ball = fp_enumerate(p, q, ball_radius);
  rep.ball_size = static_cast<int>(ball.size());
  std::set<FreeProductWord> values;
  rep.injective_on_ball_R = true;
  for (const FreeProductWord& w : ball) {
    FreeProductWord v = fp_identity(p, q);
    for (const auto& [tag, e] : w.syllables)
      v = fp_multiply(v, fp_power(tag == 'a' ? ia : ib, e));
    if (!values.insert(v).second) {
      rep.injective_on_ball_R = false;
      break;
    }
  }
  return rep;
}

Presentation orbifold_pi1(const OrbifoldSpec& spec) {
  if (spec.punctures < 0) fail(ErrorCode::InvalidArgument, "negative puncture count");
  for (int m : spec.cone_multiplicities)
    if (m < 2) fail(ErrorCode::InvalidArgument, "cone multiplicities must be >= 2");
  int n = static_cast<int>(spec.cone_multiplicities.size());
  int total = n + spec.punctures;
  Presentation pres;
  for (int i = 1; i <= total; ++i) pres.generators.push_back("u" + std::to_string(i));
  if (total > 0) {
    FreeWord prod(total);
    for (int i = total; i >= 1; --i) prod = prod * FreeWord::generator(total, i);
    pres.relators.push_back(prod);
  }
  for (int j = 0; j < n; ++j)
    pres.relators.push_back(FreeWord::generator(total, j + 1).pow(spec.cone_multiplicities[j]));
  pres.normalize();
  return pres;
}

TorusPencilOrbifold torus_pencil_orbifold(int p, int q) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidArgument, "pencil exponents must be positive");
  if (std::gcd(p, q) != 1) fail(ErrorCode::InvalidArgument, "pencil exponents must be coprime");
  TorusPencilOrbifold t;
  t.p = p;
  t.q = q;
  t.fiber_over_zero = "f_" + std::to_string(p) + "^" + std::to_string(q);
  t.multiplicity_over_zero = q;
  t.fiber_over_infinity = "f_" + std::to_string(q) + "^" + std::to_string(p);
  t.multiplicity_over_infinity = p;
  t.pencil_degree = p * q;
  t.spec.punctures = 1;
  // phi = 1 points are not orbifold points
  if (q >= 2) t.spec.cone_multiplicities.push_back(q);
  if (p >= 2) t.spec.cone_multiplicities.push_back(p);
  return t;
}

} // namespace curvepi::groups
