#include "groups.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace curvepi::groups {

namespace {

using braid::Letter;

// Lexicographically minimal rotation of the word or its inverse: a canonical
// conjugacy-class representative for cyclically reduced words.
FreeWord conjugacy_normal_form(const FreeWord& w) {
  FreeWord c = w.cyclically_reduced();
  if (c.is_identity()) return c;
  FreeWord best = c;
  for (const FreeWord& base : {c, c.inverse()}) {
    std::vector<Letter> ls = base.letters();
    for (size_t r = 0; r < ls.size(); ++r) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      FreeWord rot(base.rank(), ls);
      if (rot < best) best = rot;
    }
  }
  return best;
}

} // namespace

void Presentation::normalize() {
  std::vector<FreeWord> cleaned;
  std::set<std::vector<Letter>> seen;
  for (const FreeWord& r : relators) {
    if (r.rank() != rank()) fail(ErrorCode::InvalidArgument, "relator rank mismatch");
    FreeWord c = conjugacy_normal_form(r);
    if (c.is_identity()) continue;
    if (seen.insert(c.letters()).second) cleaned.push_back(r.cyclically_reduced());
  }
  std::sort(cleaned.begin(), cleaned.end());
  relators = std::move(cleaned);
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "<";
  for (const std::string& g : p.generators) os << " " << g;
  os << " |";
  auto print_word = [&](const std::vector<braid::Letter>& ls) {
    for (size_t i = 0; i < ls.size();) {
      size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      int exp = ls[i].sign * static_cast<int>(j - i);
      if (i) os << " ";
      os << p.generators[ls[i].index - 1];
      if (exp != 1) os << "^" << exp;
      i = j;
    }
  };
  for (size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ");
    const auto& ls = p.relators[i].letters();
    if (ls.empty()) {
      os << "1";
      continue;
    }
    // print w = u^k with the shortest cyclic period u
    size_t n = ls.size(), period = n;
    for (size_t d = 1; d <= n / 2; ++d) {
      if (n % d) continue;
      bool ok = true;
      for (size_t k = d; k < n && ok; ++k) ok = ls[k] == ls[k - d];
      if (ok) {
        period = d;
        break;
      }
    }
    if (period == n) {
      print_word(ls);
    } else if (period == 1) {
      os << p.generators[ls[0].index - 1] << "^" << ls[0].sign * static_cast<int>(n);
    } else {
      os << "(";
      print_word({ls.begin(), ls.begin() + period});
      os << ")^" << n / period;
    }
  }
  os << " >";
  return os.str();
}

namespace {

struct PresParser {
  const std::string& text;
  size_t pos = 0;

  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool accept(char c) {
    ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(ErrorCode::InvalidArgument, std::string("expected '") + c + "' in presentation");
  }
  bool peek_is(char c) {
    ws();
    return pos < text.size() && text[pos] == c;
  }
  std::string name() {
    ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail(ErrorCode::InvalidArgument, "expected name in presentation");
    return text.substr(start, pos - start);
  }
  int integer() {
    ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(ErrorCode::InvalidArgument, "expected integer in presentation");
    return std::stoi(text.substr(start, pos - start));
  }

  FreeWord word(const std::vector<std::string>& gens) {
    int rank = static_cast<int>(gens.size());
    FreeWord w(rank);
    for (;;) {
      ws();
      if (pos >= text.size() || text[pos] == ',' || text[pos] == '>' || text[pos] == ')') break;
      FreeWord factor(rank);
      if (accept('(')) {
        factor = word(gens);
        expect(')');
      } else if (std::isdigit(static_cast<unsigned char>(text[pos])) && text[pos] == '1') {
        ++pos; // bare identity
      } else {
        std::string n = name();
        auto it = std::find(gens.begin(), gens.end(), n);
        if (it == gens.end()) fail(ErrorCode::InvalidArgument, "unknown generator " + n);
        factor = FreeWord::generator(rank, static_cast<int>(it - gens.begin()) + 1);
      }
      int e = 1;
      if (accept('^')) e = integer();
      w = w * factor.pow(e);
    }
    return w;
  }
};

} // namespace

Presentation parse_presentation(const std::string& text) {
  PresParser p{text};
  p.expect('<');
  Presentation pres;
  while (!p.peek_is('|') && !p.peek_is('>')) pres.generators.push_back(p.name());
  if (p.accept('|')) {
    while (!p.peek_is('>')) {
      pres.relators.push_back(p.word(pres.generators));
      if (!p.accept(',')) break;
    }
  }
  p.expect('>');
  std::set<std::string> uniq(pres.generators.begin(), pres.generators.end());
  if (uniq.size() != pres.generators.size())
    fail(ErrorCode::InvalidArgument, "duplicate generator names");
  pres.normalize();
  return pres;
}

Presentation zvk_presentation(const std::vector<BraidWord>& braids, int d,
                              std::optional<int> central_exponent) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "need at least one generator");
  Presentation pres;
  for (int i = 1; i <= d; ++i) pres.generators.push_back("m" + std::to_string(i));
  for (const BraidWord& w : braids) {
    if (w.strands != d) fail(ErrorCode::InvalidArgument, "braid strand count differs from d");
    std::vector<FreeWord> images = braid::hurwitz_images(w);
    for (int i = 1; i <= d; ++i) {
      FreeWord rel = FreeWord::generator(d, i, -1) * images[i - 1];
      pres.relators.push_back(rel);
    }
  }
  if (central_exponent) pres.relators.push_back(braid::descending_product(d).pow(*central_exponent));
  pres.normalize();
  return pres;
}

// ---------------------------------------------------------------------------
// Tietze simplification

namespace {

// substitute generator `g` (1-based) by the word `expr` everywhere, then drop g
Presentation eliminate_generator(const Presentation& p, int g, const FreeWord& expr,
                                 size_t relator_index) {
  int old_rank = p.rank();
  int new_rank = old_rank - 1;
  auto remap = [&](int idx) { return idx < g ? idx : idx - 1; };
  FreeWord expr_new(new_rank);
  for (const Letter& l : expr.letters()) {
    if (l.index == g) fail(ErrorCode::Internal, "elimination expression mentions the generator");
    expr_new = expr_new * FreeWord::generator(new_rank, remap(l.index), l.sign);
  }
  Presentation out;
  for (int i = 1; i <= old_rank; ++i)
    if (i != g) out.generators.push_back(p.generators[i - 1]);
  for (size_t r = 0; r < p.relators.size(); ++r) {
    if (r == relator_index) continue;
    FreeWord w(new_rank);
    for (const Letter& l : p.relators[r].letters()) {
      if (l.index == g)
        w = w * (l.sign > 0 ? expr_new : expr_new.inverse());
      else
        w = w * FreeWord::generator(new_rank, remap(l.index), l.sign);
    }
    out.relators.push_back(w);
  }
  out.normalize();
  return out;
}

// If some relator uses a generator exactly once, solve for it.
bool try_eliminate(Presentation& p, int& passes_left) {
  for (size_t r = 0; r < p.relators.size(); ++r) {
    const FreeWord& rel = p.relators[r];
    std::vector<int> occurrences(p.rank() + 1, 0);
    for (const Letter& l : rel.letters()) ++occurrences[l.index];
    for (int g = 1; g <= p.rank(); ++g) {
      if (occurrences[g] != 1) continue;
      // rotate the relator so the g-letter is first: g^s * t = 1 => g = t^-s
      std::vector<Letter> ls = rel.letters();
      size_t at = 0;
      while (ls[at].index != g) ++at;
      std::rotate(ls.begin(), ls.begin() + at, ls.end());
      FreeWord tail(p.rank(), std::vector<Letter>(ls.begin() + 1, ls.end()));
      FreeWord expr = ls[0].sign > 0 ? tail.inverse() : tail;
      p = eliminate_generator(p, g, expr, r);
      --passes_left;
      return true;
    }
  }
  return false;
}

// Greedy length descent: replace a relator by a strictly shorter product
// with a cyclic conjugate of another relator.
bool try_shorten(Presentation& p, int& passes_left) {
  for (size_t i = 0; i < p.relators.size(); ++i) {
    const FreeWord& ri = p.relators[i];
    FreeWord best = ri;
    for (size_t j = 0; j < p.relators.size(); ++j) {
      if (i == j) continue;
      for (int s : {1, -1}) {
        FreeWord rj = s > 0 ? p.relators[j] : p.relators[j].inverse();
        std::vector<Letter> ls = rj.letters();
        for (size_t rot = 0; rot < ls.size(); ++rot) {
          std::rotate(ls.begin(), ls.begin() + 1, ls.end());
          FreeWord conj(rj.rank(), ls);
          for (const FreeWord& cand : {(ri * conj).cyclically_reduced(),
                                       (conj * ri).cyclically_reduced()}) {
            if (cand.length() < best.length() || (cand.length() == best.length() && cand < best &&
                                                  best.length() < ri.length()))
              best = cand;
          }
        }
      }
    }
    if (best.length() < ri.length()) {
      p.relators[i] = best;
      p.normalize();
      --passes_left;
      return true;
    }
  }
  return false;
}

} // namespace

SimplifyResult tietze_simplify(const Presentation& input, int budget) {
  SimplifyResult res;
  res.presentation = input;
  res.presentation.normalize();
  int left = budget;
  for (;;) {
    if (left <= 0) {
      res.budget_exhausted = true;
      break;
    }
    ++res.passes;
    if (try_eliminate(res.presentation, left)) continue;
    if (try_shorten(res.presentation, left)) continue;
    break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Integer matrices

Integer determinant(const Matrix& A) {
  size_t n = A.size();
  for (const auto& row : A)
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  // fraction-free Bareiss elimination
  Matrix m = A;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

Matrix identity_matrix(size_t n) {
  Matrix I(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

} // namespace

SmithResult smith_normal_form(const Matrix& A) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  for (const auto& r : A)
    if (r.size() != cols) fail(ErrorCode::InvalidArgument, "ragged matrix");
  SmithResult res;
  res.D = A;
  res.U = identity_matrix(rows);
  res.V = identity_matrix(cols);
  Matrix& D = res.D;
  Matrix& U = res.U;
  Matrix& V = res.V;

  auto row_op = [&](size_t i, size_t k, const Integer& q) { // row i -= q * row k
    for (size_t j = 0; j < cols; ++j) D[i][j] -= q * D[k][j];
    for (size_t j = 0; j < rows; ++j) U[i][j] -= q * U[k][j];
  };
  auto col_op = [&](size_t j, size_t k, const Integer& q) { // col j -= q * col k
    for (size_t i = 0; i < rows; ++i) D[i][j] -= q * D[i][k];
    for (size_t i = 0; i < cols; ++i) V[i][j] -= q * V[i][k];
  };
  auto row_swap = [&](size_t i, size_t k) {
    std::swap(D[i], D[k]);
    std::swap(U[i], U[k]);
  };
  auto col_swap = [&](size_t j, size_t k) {
    for (size_t i = 0; i < rows; ++i) std::swap(D[i][j], D[i][k]);
    for (size_t i = 0; i < cols; ++i) std::swap(V[i][j], V[i][k]);
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // find the nonzero pivot of least magnitude
    size_t pi = t, pj = t;
    Integer best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (D[i][j] != 0 && (best == 0 || abs(D[i][j]) < abs(best))) {
          best = D[i][j];
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (D[i][t] == 0) continue;
      Integer q = D[i][t] / D[t][t];
      row_op(i, t, q);
      if (D[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (D[t][j] == 0) continue;
      Integer q = D[t][j] / D[t][t];
      col_op(j, t, q);
      if (D[t][j] != 0) clean = false;
    }
    if (!clean) continue; // smaller remainders appeared; repick the pivot

    // divisibility: fold any non-multiple into the pivot row and redo
    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols && divides_all; ++j)
        if (D[i][j] % D[t][t] != 0) {
          row_op(t, i, Integer(-1));
          divides_all = false;
        }
    if (!divides_all) continue;

    if (D[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) D[t][j] = -D[t][j];
      for (size_t j = 0; j < rows; ++j) U[t][j] = -U[t][j];
    }
    ++t;
  }
  return res;
}

std::vector<Integer> abelianization(const Presentation& p) {
  size_t gens = p.generators.size();
  Matrix A(p.relators.size(), std::vector<Integer>(gens, 0));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (const Letter& l : p.relators[r].letters()) A[r][l.index - 1] += l.sign;
  SmithResult snf = smith_normal_form(A);
  std::vector<Integer> factors;
  size_t diag = std::min(A.size(), gens);
  size_t nonzero = 0;
  for (size_t i = 0; i < diag; ++i) {
    if (snf.D[i][i] == 0) continue;
    ++nonzero;
    if (snf.D[i][i] != 1) factors.push_back(snf.D[i][i]);
  }
  for (size_t i = nonzero; i < gens; ++i) factors.push_back(0);
  return factors;
}

// ---------------------------------------------------------------------------
// Counting homomorphisms

namespace {

struct RelatorProgram {
  std::vector<Letter> letters;
  int max_gen = 0;
};

long long count_range(const Presentation& p, const FiniteGroup& G,
                      const std::vector<std::vector<RelatorProgram>>& by_gen, int first_lo,
                      int first_hi) {
  int gens = p.rank();
  std::vector<int> image(gens + 1, 0);
  long long count = 0;
  // depth-first over generator images with early relator rejection
  auto check = [&](int upto) {
    for (const RelatorProgram& rp : by_gen[upto]) {
      int acc = 0;
      for (const Letter& l : rp.letters) {
        int g = image[l.index];
        acc = G.op(acc, l.sign > 0 ? g : G.inv[g]);
      }
      if (acc != 0) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int gen) -> void {
    if (gen > gens) {
      ++count;
      return;
    }
    int lo = gen == 1 ? first_lo : 0;
    int hi = gen == 1 ? first_hi : G.order;
    for (int g = lo; g < hi; ++g) {
      image[gen] = g;
      if (check(gen)) self(self, gen + 1);
    }
  };
  rec(rec, 1);
  return count;
}

} // namespace

long long hom_count(const Presentation& p, const FiniteGroup& G, const HomCountOptions& opts) {
  int gens = p.rank();
  long long tuples = 1;
  for (int i = 0; i < gens; ++i) {
    tuples *= G.order;
    if (tuples > opts.tuple_cap)
      fail(ErrorCode::BudgetExceeded, "hom_count tuple budget exceeded for " + G.id);
  }
  if (gens == 0) return 1;

  std::vector<std::vector<RelatorProgram>> by_gen(gens + 1);
  for (const FreeWord& r : p.relators) {
    RelatorProgram rp;
    rp.letters = r.letters();
    for (const Letter& l : rp.letters) rp.max_gen = std::max(rp.max_gen, l.index);
    by_gen[rp.max_gen].push_back(rp);
  }

  int threads = std::max(1, opts.threads);
  if (threads == 1 || G.order < 2 * threads)
    return count_range(p, G, by_gen, 0, G.order);

  std::vector<std::future<long long>> parts;
  int chunk = (G.order + threads - 1) / threads;
  for (int lo = 0; lo < G.order; lo += chunk) {
    int hi = std::min(G.order, lo + chunk);
    parts.push_back(std::async(std::launch::async,
                               [&, lo, hi] { return count_range(p, G, by_gen, lo, hi); }));
  }
  long long total = 0;
  for (auto& f : parts) total += f.get(); // summed in partition order
  return total;
}

long long free_product_count(int p, int q, const FiniteGroup& target) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidArgument, "cyclic orders must be positive");
  return static_cast<long long>(target.count_order_dividing(p)) * target.count_order_dividing(q);
}

HomFingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& targets,
                           const HomCountOptions& opts) {
  HomFingerprint fp;
  for (const FiniteGroup& g : targets) fp.counts.emplace_back(g.id, hom_count(p, g, opts));
  return fp;
}

HomFingerprint free_product_fingerprint(int p, int q, const std::vector<FiniteGroup>& targets) {
  HomFingerprint fp;
  for (const FiniteGroup& g : targets) fp.counts.emplace_back(g.id, free_product_count(p, q, g));
  return fp;
}

} // namespace curvepi::groups
