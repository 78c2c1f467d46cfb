#include "braid.hpp"

#include <sstream>

namespace curvepi::braid {

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank) {
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > rank_) fail(ErrorCode::InvalidArgument, "generator index out of range");
    if (l.sign != 1 && l.sign != -1) fail(ErrorCode::InvalidArgument, "letter exponent must be +-1");
    push_reduced(l);
  }
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  return FreeWord(rank, {Letter{index, sign}});
}

void FreeWord::push_reduced(const Letter& l) {
  if (!letters_.empty() && letters_.back().index == l.index && letters_.back().sign == -l.sign)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  if (rank_ != rhs.rank_) fail(ErrorCode::InvalidArgument, "rank mismatch");
  FreeWord r(*this);
  for (const Letter& l : rhs.letters_) r.push_reduced(l);
  return r;
}

FreeWord FreeWord::inverse() const {
  FreeWord r(rank_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back({it->index, -it->sign});
  return r;
}

FreeWord FreeWord::pow(int n) const {
  FreeWord base = n < 0 ? inverse() : *this;
  FreeWord r(rank_);
  for (int i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

FreeWord FreeWord::conjugated_by(const FreeWord& g) const { return g * *this * g.inverse(); }

FreeWord FreeWord::cyclically_reduced() const {
  FreeWord r(*this);
  while (r.letters_.size() >= 2 && r.letters_.front().index == r.letters_.back().index &&
         r.letters_.front().sign == -r.letters_.back().sign) {
    r.letters_.pop_back();
    r.letters_.erase(r.letters_.begin());
  }
  return r;
}

bool FreeWord::operator<(const FreeWord& rhs) const {
  if (letters_.size() != rhs.letters_.size()) return letters_.size() < rhs.letters_.size();
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].index != rhs.letters_[i].index) return letters_[i].index < rhs.letters_[i].index;
    if (letters_[i].sign != rhs.letters_[i].sign) return letters_[i].sign > rhs.letters_[i].sign;
  }
  return false;
}

namespace {

std::string word_str(const std::vector<Letter>& letters, const char* stem) {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << stem << letters[i].index;
    if (letters[i].sign < 0) os << "^-1";
  }
  return os.str();
}

std::vector<Letter> parse_letters(const std::string& text, const char* stem, int max_index) {
  std::vector<Letter> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1" && out.empty() && is.peek() == EOF) break; // identity
    size_t stem_len = std::string(stem).size();
    if (tok.substr(0, stem_len) != stem)
      fail(ErrorCode::InvalidArgument, "bad word token: " + tok);
    size_t pos = stem_len;
    size_t caret = tok.find('^', pos);
    int index = std::stoi(tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos));
    int exp = 1;
    if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    if (index < 1 || index > max_index) fail(ErrorCode::InvalidArgument, "index out of range in " + tok);
    if (exp == 0) continue;
    for (int k = 0; k < std::abs(exp); ++k) out.push_back({index, exp > 0 ? 1 : -1});
  }
  return out;
}

} // namespace

std::string to_string(const FreeWord& w) { return word_str(w.letters(), "m"); }

FreeWord parse_free_word(const std::string& text, int rank) {
  return FreeWord(rank, parse_letters(text, "m", rank));
}

BraidWord BraidWord::inverse() const {
  BraidWord r{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back({it->index, -it->sign});
  return r;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands != rhs.strands) fail(ErrorCode::InvalidArgument, "strand mismatch");
  BraidWord r(*this);
  r.letters.insert(r.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return r;
}

BraidWord BraidWord::pow(int n) const {
  BraidWord base = n < 0 ? inverse() : *this;
  BraidWord r{strands, {}};
  for (int i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

std::string to_string(const BraidWord& w) { return word_str(w.letters, "s"); }

BraidWord parse_braid_word(const std::string& text, int strands) {
  if (strands < 2) fail(ErrorCode::InvalidArgument, "need at least 2 strands");
  return BraidWord{strands, parse_letters(text, "s", strands - 1)};
}

namespace {

// One Artin generator applied to a reduced word, letter by letter.
FreeWord apply_sigma(int i, int sign, const FreeWord& x) {
  const int d = x.rank();
  FreeWord out(d);
  for (const Letter& l : x.letters()) {
    FreeWord image(d);
    if (sign > 0) {
      if (l.index == i)
        image = FreeWord::generator(d, i + 1);
      else if (l.index == i + 1)
        image = FreeWord::generator(d, i + 1) * FreeWord::generator(d, i) *
                FreeWord::generator(d, i + 1, -1);
      else
        image = FreeWord::generator(d, l.index);
    } else {
      if (l.index == i)
        image = FreeWord::generator(d, i, -1) * FreeWord::generator(d, i + 1) *
                FreeWord::generator(d, i);
      else if (l.index == i + 1)
        image = FreeWord::generator(d, i);
      else
        image = FreeWord::generator(d, l.index);
    }
    out = out * (l.sign > 0 ? image : image.inverse());
  }
  return out;
}

} // namespace

FreeWord hurwitz_act(const BraidWord& w, const FreeWord& x) {
  if (x.rank() != w.strands) fail(ErrorCode::InvalidArgument, "rank must equal strand count");
  FreeWord cur = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    cur = apply_sigma(it->index, it->sign, cur);
  return cur;
}

std::vector<FreeWord> hurwitz_images(const BraidWord& w) {
  std::vector<FreeWord> images;
  images.reserve(w.strands);
  for (int i = 1; i <= w.strands; ++i)
    images.push_back(hurwitz_act(w, FreeWord::generator(w.strands, i)));
  return images;
}

namespace {

BraidWord descending_generators(int d) { // s_{d-1} s_{d-2} ... s_1
  BraidWord w{d, {}};
  for (int i = d - 1; i >= 1; --i) w.letters.push_back({i, 1});
  return w;
}

} // namespace

MonodromyBraids monodromy_braids(const exactpoly::CurveParams& params) {
  MonodromyBraids mb;
  BraidWord base = descending_generators(params.d);
  mb.beta = base.pow(params.N);
  mb.beta0 = base.pow(params.a * params.N);
  mb.beta_inf = base.pow(params.b * params.N);
  return mb;
}

BraidWord full_twist(int d) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "full twist needs d >= 2");
  return descending_generators(d).pow(d);
}

FreeWord descending_product(int d) {
  FreeWord w(d);
  for (int i = d; i >= 1; --i) w = w * FreeWord::generator(d, i);
  return w;
}

} // namespace curvepi::braid
