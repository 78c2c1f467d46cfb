#ifndef CURVEPI_GROUPS_HPP
#define CURVEPI_GROUPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"
#include "finite_group.hpp"

namespace curvepi::groups {

using braid::BraidWord;
using braid::FreeWord;
using exactpoly::Integer;

// Finite presentation; relators are kept freely and cyclically reduced,
// never empty, and deduplicated up to conjugacy and inversion.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  void normalize();
};

std::string to_string(const Presentation& p); // "< a b | a^2, b^3 >"
Presentation parse_presentation(const std::string& text);

// Zariski-van Kampen presentation: one relator m_i^-1 * braid(m_i) per braid
// and generator (the i = d relator is a consequence of the invariance of the
// descending product and routinely dies in normalization), plus
// (m_d ... m_1)^N when a central exponent is given.
Presentation zvk_presentation(const std::vector<BraidWord>& braids, int d,
                              std::optional<int> central_exponent);

struct SimplifyResult {
  Presentation presentation;
  bool budget_exhausted = false;
  int passes = 0;
};

// Deterministic Tietze simplification: reduction, conjugacy deduplication,
// single-occurrence generator elimination, greedy length descent.
SimplifyResult tietze_simplify(const Presentation& p, int budget = 10000);

using Matrix = std::vector<std::vector<Integer>>;

struct SmithResult {
  Matrix D, U, V; // U*A*V = D, U and V unimodular, diagonal divisibility chain
};

SmithResult smith_normal_form(const Matrix& A);
Integer determinant(const Matrix& A); // exact, fraction-free

// Invariant factors of the abelianization: entries > 1 in divisibility order,
// then one 0 per free rank.
std::vector<Integer> abelianization(const Presentation& p);

struct HomCountOptions {
  long long tuple_cap = 1000000000; // bail out above order^generators
  int threads = 1;                  // split on the first generator image
};

// Exact number of homomorphisms into the finite target.
long long hom_count(const Presentation& p, const FiniteGroup& target, const HomCountOptions& = {});

// (#elements of order dividing p) * (#elements of order dividing q).
long long free_product_count(int p, int q, const FiniteGroup& target);

struct HomFingerprint {
  std::vector<std::pair<std::string, long long>> counts; // catalog id -> count
  bool operator==(const HomFingerprint&) const = default;
};

HomFingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& targets,
                           const HomCountOptions& = {});

// Fingerprint of Z/p * Z/q over the same targets via the closed form.
HomFingerprint free_product_fingerprint(int p, int q, const std::vector<FiniteGroup>& targets);

} // namespace curvepi::groups

#endif
