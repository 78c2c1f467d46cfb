#include "finite_group.hpp"

#include <algorithm>
#include <numeric>

namespace curvepi::groups {

int FiniteGroup::power(int a, int n) const {
  int r = 0;
  for (int k = 0; k < n; ++k) r = op(r, a);
  return r;
}

int FiniteGroup::count_order_dividing(int k) const {
  int c = 0;
  for (int g = 0; g < order; ++g)
    if (power(g, k) == 0) ++c;
  return c;
}

namespace {

void finish(FiniteGroup& g) {
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.op(a, b) == 0) g.inv[a] = b;
  for (int a = 0; a < g.order; ++a)
    if (g.inv[a] < 0) fail(ErrorCode::Internal, "not a group table: " + g.id);
}

FiniteGroup from_permutations(std::string id, std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  FiniteGroup g;
  g.id = std::move(id);
  g.order = static_cast<int>(perms.size());
  g.table.resize(g.order * g.order);
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      std::vector<int> c(perms[a].size());
      for (size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
      g.table[a * g.order + b] = index_of(c);
    }
  // the identity is lexicographically first, hence index 0
  std::vector<int> n(perms[0].size());
  std::iota(n.begin(), n.end(), 0);
  if (index_of(n) != 0) fail(ErrorCode::Internal, "identity permutation not at index 0");
  finish(g);
  return g;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

} // namespace

FiniteGroup trivial_group() {
  FiniteGroup g;
  g.id = "C1";
  g.order = 1;
  g.table = {0};
  g.inv = {0};
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  if (n == 1) return trivial_group();
  FiniteGroup g;
  g.id = "C" + std::to_string(n);
  g.order = n;
  g.table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  finish(g);
  return g;
}

FiniteGroup dihedral_group(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "dihedral group needs n >= 3");
  // element i + n*j is r^i s^j with s r = r^-1 s
  FiniteGroup g;
  g.id = "D" + std::to_string(n);
  g.order = 2 * n;
  g.table.resize(g.order * g.order);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = ((j1 ? n - i2 : i2) + i1) % n;
          int j = j1 ^ j2;
          g.table[(i1 + n * j1) * g.order + (i2 + n * j2)] = i + n * j;
        }
  finish(g);
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 2 || n > 6) fail(ErrorCode::InvalidArgument, "symmetric_group supports 2 <= n <= 6");
  return from_permutations("S" + std::to_string(n), all_permutations(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 3 || n > 6) fail(ErrorCode::InvalidArgument, "alternating_group supports 3 <= n <= 6");
  std::vector<std::vector<int>> perms;
  for (auto& p : all_permutations(n))
    if (is_even(p)) perms.push_back(p);
  return from_permutations("A" + std::to_string(n), perms);
}

CatalogSize catalog_size_from_string(const std::string& s) {
  if (s == "tiny") return CatalogSize::Tiny;
  if (s == "small") return CatalogSize::Small;
  if (s == "full") return CatalogSize::Full;
  fail(ErrorCode::InvalidArgument, "unknown catalog size: " + s);
}

std::string to_string(CatalogSize s) {
  switch (s) {
    case CatalogSize::Tiny: return "tiny";
    case CatalogSize::Small: return "small";
    default: return "full";
  }
}

std::vector<FiniteGroup> catalog(CatalogSize size) {
  std::vector<FiniteGroup> groups;
  auto add = [&](FiniteGroup g) { groups.push_back(std::move(g)); };
  switch (size) {
    case CatalogSize::Tiny:
      for (int n : {2, 3, 4, 5, 6}) add(cyclic_group(n));
      add(symmetric_group(3));
      break;
    case CatalogSize::Small:
      for (int n = 2; n <= 12; ++n) add(cyclic_group(n));
      for (int n : {4, 5, 6}) add(dihedral_group(n));
      add(symmetric_group(3));
      add(alternating_group(4));
      add(symmetric_group(4));
      break;
    case CatalogSize::Full:
      for (int n = 2; n <= 24; ++n) add(cyclic_group(n));
      for (int n = 4; n <= 12; ++n) add(dihedral_group(n));
      add(symmetric_group(3));
      add(alternating_group(4));
      add(symmetric_group(4));
      add(alternating_group(5));
      add(symmetric_group(5));
      break;
  }
  std::stable_sort(groups.begin(), groups.end(), [](const FiniteGroup& x, const FiniteGroup& y) {
    return x.order != y.order ? x.order < y.order : x.id < y.id;
  });
  return groups;
}

} // namespace curvepi::groups
