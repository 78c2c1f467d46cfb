#ifndef CURVEPI_BRAID_HPP
#define CURVEPI_BRAID_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace curvepi::braid {

// Letter of a word: 1-based generator index, exponent +1/-1.
struct Letter {
  int index = 1;
  int sign = 1;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in the free group on `rank` generators m1..m_rank.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}
  FreeWord(int rank, std::vector<Letter> letters);

  static FreeWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  FreeWord pow(int n) const;
  // conjugate by g: g * w * g^-1
  FreeWord conjugated_by(const FreeWord& g) const;
  FreeWord cyclically_reduced() const;
  bool operator==(const FreeWord&) const = default;
  bool operator<(const FreeWord& rhs) const;

private:
  void push_reduced(const Letter& l);

  int rank_ = 0;
  std::vector<Letter> letters_;
};

std::string to_string(const FreeWord& w);                       // "m1 m2^-1"
FreeWord parse_free_word(const std::string& text, int rank);

// Word in the Artin generators s1..s_{d-1}; no normal form is imposed.
struct BraidWord {
  int strands = 2;
  std::vector<Letter> letters;

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord pow(int n) const;
};

std::string to_string(const BraidWord& w);                      // "s1 s2^-1"
BraidWord parse_braid_word(const std::string& text, int strands);

// Hurwitz action: s_i sends m_i -> m_{i+1}, m_{i+1} -> m_{i+1} m_i m_{i+1}^-1
// and fixes the rest; a word acts with its leftmost letter applied last, so
// (w1*w2) acts as act(w1) after act(w2).  The descending product m_d...m_1 is
// fixed by every braid.
FreeWord hurwitz_act(const BraidWord& w, const FreeWord& x);

// Images of all generators under the action of w.
std::vector<FreeWord> hurwitz_images(const BraidWord& w);

struct MonodromyBraids {
  BraidWord beta0;   // (s_{d-1}...s_1)^{aN}
  BraidWord beta_inf; // (s_{d-1}...s_1)^{bN}
  BraidWord beta;    // (s_{d-1}...s_1)^N
};

MonodromyBraids monodromy_braids(const exactpoly::CurveParams& params);

// Positive generator of the center, (s_{d-1}...s_1)^d.
BraidWord full_twist(int d);

// Descending product m_d ... m_1.
FreeWord descending_product(int d);

} // namespace curvepi::braid

#endif
