#ifndef CURVEPI_FREE_PRODUCT_HPP
#define CURVEPI_FREE_PRODUCT_HPP

#include <string>
#include <vector>

#include "groups.hpp"

namespace curvepi::groups {

// Element of Z/p * Z/q in alternating normal form.  Factor 'a' has order p,
// factor 'b' has order q; exponents are reduced into (0, order).
struct FreeProductWord {
  int p = 2, q = 3;
  std::vector<std::pair<char, int>> syllables;

  bool is_identity() const { return syllables.empty(); }
  int syllable_length() const { return static_cast<int>(syllables.size()); }
  bool operator==(const FreeProductWord&) const = default;
  bool operator<(const FreeProductWord& rhs) const;
};

FreeProductWord fp_identity(int p, int q);
FreeProductWord fp_generator(int p, int q, char tag, int exponent = 1);
// Normal form of an arbitrary syllable list (merges, reduces, cascades).
FreeProductWord fp_normal_form(int p, int q, const std::vector<std::pair<char, int>>& syllables);
FreeProductWord fp_multiply(const FreeProductWord& w1, const FreeProductWord& w2);
FreeProductWord fp_inverse(const FreeProductWord& w);
FreeProductWord fp_power(const FreeProductWord& w, int n);

std::string to_string(const FreeProductWord& w); // "a b^2 a"
FreeProductWord parse_fp_word(const std::string& text, int p, int q);

// All normal-form words of syllable length <= max_syllables, ordered by
// (length, lex); the identity comes first.
std::vector<FreeProductWord> fp_enumerate(int p, int q, int max_syllables);

// True when products of the images and their inverses of length <= max_len
// reach both generators a and b; depth_out receives the first such length.
bool fp_generates_within(int p, int q, const std::vector<FreeProductWord>& images, int max_len,
                         int* depth_out);

// Substitute generator images into every relator of the presentation.
struct HomVerdict {
  bool is_hom = false;
  int failing_relator = -1;
};

HomVerdict eval_hom(const Presentation& pres, const std::vector<FreeProductWord>& images);

struct HopfReport {
  bool is_hom = false;
  bool surjective_within_L = false;
  bool injective_on_ball_R = false;
  int ball_size = 0;       // words checked for injectivity
  int surjectivity_depth = 0; // product length at which both generators appeared
};

// Endomorphism candidate a -> images[0], b -> images[1] of Z/p * Z/q:
// relator preservation, surjectivity by breadth-first search over products
// up to length L, injectivity on the syllable ball of radius R.
HopfReport bounded_hopf_check(int p, int q, const std::vector<FreeProductWord>& images, int ball_radius,
                              int search_length);

// ---------------------------------------------------------------------------

// Genus-0 orbifold data: punctures plus cone points.
struct OrbifoldSpec {
  int punctures = 0;
  std::vector<int> cone_multiplicities; // each >= 2
};

// Generators u_1..u_{n+k} (cone points first, then punctures); relators: the
// global product u_{n+k}...u_1 and u_j^{m_j} for each cone point.
Presentation orbifold_pi1(const OrbifoldSpec& spec);

// Structural certificate for the pencil [f_p^q : f_q^p]: the fiber over
// [0:1] is the q-th power of f_p and the fiber over [1:0] the p-th power of
// f_q, read off the exponents; the curve itself sits over [1:-1].
struct TorusPencilOrbifold {
  int p = 0, q = 0;
  OrbifoldSpec spec;
  std::string fiber_over_zero;     // e.g. "f_2^3"
  int multiplicity_over_zero = 0;  // q
  std::string fiber_over_infinity; // e.g. "f_3^2"
  int multiplicity_over_infinity = 0; // p
  std::string puncture = "[1:-1]";
  int pencil_degree = 0; // p*q, the common degree of all members
};

TorusPencilOrbifold torus_pencil_orbifold(int p, int q);

} // namespace curvepi::groups

#endif
