#include "surface.hpp"

#include <algorithm>
#include <sstream>

namespace curvepi::surface {

PairKey pair_key(const std::string& a, const std::string& b) {
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

int DivisorConfiguration::self(const std::string& d) const {
  auto it = divisors.find(d);
  if (it == divisors.end()) fail(ErrorCode::InvalidArgument, "unknown divisor " + d);
  return it->second.self_intersection;
}

int DivisorConfiguration::intersection(const std::string& a, const std::string& b) const {
  auto it = pairwise.find(pair_key(a, b));
  return it == pairwise.end() ? 0 : it->second;
}

void DivisorConfiguration::validate() const {
  std::map<PairKey, int> local_sums;
  for (const auto& [pname, pt] : points) {
    for (const auto& [d, m] : pt.mult) {
      if (!divisors.count(d)) fail(ErrorCode::Internal, "point " + pname + " on unknown divisor " + d);
      if (m < 1) fail(ErrorCode::Internal, "non-positive multiplicity at " + pname);
    }
    for (const auto& [key, v] : pt.local_int) {
      auto ia = pt.mult.find(key.first), ib = pt.mult.find(key.second);
      if (ia == pt.mult.end() || ib == pt.mult.end())
        fail(ErrorCode::Internal, "local intersection at " + pname + " between non-incident divisors");
      if (v < ia->second * ib->second)
        fail(ErrorCode::Internal, "local intersection below multiplicity product at " + pname);
      local_sums[key] += v;
    }
  }
  for (const auto& [key, v] : pairwise) {
    int s = local_sums.count(key) ? local_sums.at(key) : 0;
    if (s != v)
      fail(ErrorCode::Internal, "local intersections of (" + key.first + "," + key.second +
                                    ") sum to " + std::to_string(s) + ", global is " +
                                    std::to_string(v));
  }
  for (const auto& [key, v] : local_sums)
    if (!pairwise.count(key))
      fail(ErrorCode::Internal, "stray local intersections for (" + key.first + "," + key.second + ")");
}

DivisorConfiguration blowup(const DivisorConfiguration& cfg, const std::string& point,
                            const std::string& exc_name,
                            const std::vector<ResidualPoint>& residuals) {
  auto pit = cfg.points.find(point);
  if (pit == cfg.points.end()) fail(ErrorCode::InvalidArgument, "unknown point " + point);
  if (cfg.divisors.count(exc_name)) fail(ErrorCode::InvalidArgument, "divisor name taken: " + exc_name);
  const PointIncidence& at = pit->second;

  DivisorConfiguration out = cfg;
  out.points.erase(point);
  out.divisors[exc_name] = {-1, "exceptional"};

  // Remaining pair intersections at the blown point, to be distributed over
  // the residual points.
  std::map<PairKey, int> remaining;
  for (const auto& [d, m] : at.mult) {
    out.divisors[d].self_intersection -= m * m;
    out.pairwise[pair_key(d, exc_name)] = m;
    remaining[pair_key(d, exc_name)] = m;
  }
  for (const auto& [key, v] : at.local_int) {
    int drop = at.mult.at(key.first) * at.mult.at(key.second);
    out.pairwise[pair_key(key.first, key.second)] -= drop;
    if (out.pairwise[pair_key(key.first, key.second)] == 0) out.pairwise.erase(pair_key(key.first, key.second));
    if (v - drop > 0) remaining[key] = v - drop;
  }

  for (const ResidualPoint& rp : residuals) {
    if (out.points.count(rp.name)) fail(ErrorCode::InvalidArgument, "point name taken: " + rp.name);
    PointIncidence pi;
    for (const auto& [d, m] : rp.mult) {
      if (d != exc_name && !at.mult.count(d))
        fail(ErrorCode::InvalidArgument, "residual " + rp.name + " names non-incident divisor " + d);
      pi.mult[d] = m;
    }
    for (const auto& [key, v] : rp.local_int) {
      auto k = pair_key(key.first, key.second);
      auto rit = remaining.find(k);
      if (rit == remaining.end() || rit->second < v)
        fail(ErrorCode::InvalidArgument,
             "residual " + rp.name + " over-assigns the intersection of (" + k.first + "," +
                 k.second + ")");
      rit->second -= v;
      if (rit->second == 0) remaining.erase(rit);
      if (v > 0) pi.local_int[k] = v;
    }
    out.points[rp.name] = pi;
  }

  // Whatever is left of each pair meets at its own transversal crossing.
  for (const auto& [key, v] : remaining) {
    if (v <= 0) continue;
    std::string name = "x(" + key.first + "," + key.second + ")";
    while (out.points.count(name)) name += "'";
    PointIncidence pi;
    pi.mult[key.first] = 1;
    pi.mult[key.second] = 1;
    pi.local_int[key] = v;
    out.points[name] = pi;
  }
  out.validate();
  return out;
}

DivisorConfiguration blowdown(const DivisorConfiguration& cfg, const std::string& divisor) {
  auto dit = cfg.divisors.find(divisor);
  if (dit == cfg.divisors.end()) fail(ErrorCode::InvalidArgument, "unknown divisor " + divisor);
  if (dit->second.self_intersection != -1)
    fail(ErrorCode::InvalidArgument, divisor + " has self-intersection " +
                                         std::to_string(dit->second.self_intersection) +
                                         ", cannot contract");

  DivisorConfiguration out;
  std::map<std::string, int> meets; // D -> (D . e)
  for (const auto& [name, div] : cfg.divisors) {
    if (name == divisor) continue;
    out.divisors[name] = div;
    int k = cfg.intersection(name, divisor);
    if (k > 0) meets[name] = k;
    out.divisors[name].self_intersection += k * k;
  }
  for (const auto& [key, v] : cfg.pairwise) {
    if (key.first == divisor || key.second == divisor) continue;
    out.pairwise[key] = v;
  }
  for (const auto& [a, ka] : meets)
    for (const auto& [b, kb] : meets) {
      if (a >= b) continue;
      auto k = pair_key(a, b);
      out.pairwise[k] += ka * kb;
    }

  // Points away from e survive; points on e merge into the image point.
  PointIncidence image;
  bool touched = false;
  for (const auto& [pname, pt] : cfg.points) {
    if (!pt.mult.count(divisor)) {
      out.points[pname] = pt;
      continue;
    }
    touched = true;
    for (const auto& [key, v] : pt.local_int) {
      if (key.first == divisor || key.second == divisor) continue;
      image.local_int[key] += v;
    }
  }
  if (!meets.empty()) {
    for (const auto& [d, k] : meets) image.mult[d] = k;
    for (const auto& [a, ka] : meets)
      for (const auto& [b, kb] : meets) {
        if (a >= b) continue;
        image.local_int[pair_key(a, b)] += ka * kb;
      }
    std::string name = "bd(" + divisor + ")";
    while (out.points.count(name)) name += "'";
    out.points[name] = image;
  } else if (touched) {
    // nothing met e, its points vanish with it
  }
  out.validate();
  return out;
}

namespace {

void record(NagataReplay& r, const char* kind, const std::string& center,
            const DivisorConfiguration& cfg) {
  ReplayStep step;
  step.kind = kind;
  step.center = center;
  for (const auto& [name, d] : cfg.divisors) step.self_after[name] = d.self_intersection;
  r.trace.push_back(std::move(step));
}

void expect(bool ok, const std::string& what, size_t step_index) {
  if (!ok)
    fail(ErrorCode::Internal,
         "surface replay invariant failed at step " + std::to_string(step_index) + ": " + what);
}

} // namespace

NagataReplay replay_nagata(const CurveParams& params, const resolve::BranchResolution& branch_l0,
                           const resolve::BranchResolution& branch_linf) {
  const int N = params.N, m = params.m, d = params.d;
  const int dN = d * N;

  // The replay is script-driven: multiplicities and E-contacts come from the
  // measured branch data, not from re-derived geometry.
  for (const resolve::BranchResolution* br : {&branch_l0, &branch_linf}) {
    std::vector<int> expect_contacts;
    for (int j = m; j >= 1; --j) expect_contacts.push_back(j * d);
    if (br->exceptional_contacts != expect_contacts)
      fail(ErrorCode::InvalidArgument, "branch data does not carry the E-contacts md,...,d");
    if (br->mult_sequence.empty() || br->mult_sequence.front() != m * d)
      fail(ErrorCode::InvalidArgument, "branch data does not carry multiplicity m*d at P");
  }

  NagataReplay r;
  DivisorConfiguration cfg;
  cfg.divisors["C"] = {dN * dN, "curve"};
  cfg.divisors["L0"] = {1, "fiber"};
  cfg.divisors["Linf"] = {1, "fiber"};
  cfg.pairwise[pair_key("C", "L0")] = dN;
  cfg.pairwise[pair_key("C", "Linf")] = dN;
  cfg.pairwise[pair_key("L0", "Linf")] = 1;
  PointIncidence P;
  P.mult = {{"C", (N - 1) * d}, {"L0", 1}, {"Linf", 1}};
  P.local_int[pair_key("C", "L0")] = dN;
  P.local_int[pair_key("C", "Linf")] = dN;
  P.local_int[pair_key("L0", "Linf")] = 1;
  cfg.points["P"] = P;
  cfg.validate();
  r.initial = cfg;

  auto side_point = [](const std::string& side, int j) {
    return "P" + side + "^" + std::to_string(j);
  };
  auto side_exc = [](const std::string& side, int j) { return "E" + side + "^" + std::to_string(j); };

  { // blow up P; both infinitely near points carry contact m*d with E
    std::vector<ResidualPoint> residuals;
    for (const std::string& side : {std::string("0"), std::string("inf")}) {
      ResidualPoint rp;
      rp.name = side_point(side, 0);
      std::string L = side == "0" ? "L0" : "Linf";
      rp.mult = {{"C", d}, {"E", 1}, {L, 1}};
      rp.local_int[pair_key("C", "E")] = m * d;
      rp.local_int[pair_key("C", L)] = d;
      rp.local_int[pair_key("E", L)] = 1;
      residuals.push_back(rp);
    }
    cfg = blowup(cfg, "P", "E", residuals);
    cfg.divisors["E"].role = "section";
    ++r.blowups;
    record(r, "blowup", "P", cfg);
    expect(cfg.self("E") == -1 && cfg.self("L0") == 0 && cfg.self("Linf") == 0,
           "Sigma_1 state: E(-1), fibers 0", r.trace.size());
    expect(cfg.intersection("C", "E") == 2 * m * d, "C.E = 2md on Sigma_1", r.trace.size());
    r.sigma1 = cfg;
  }

  for (const std::string& side : {std::string("0"), std::string("inf")}) {
    for (int j = 1; j <= m; ++j) {
      std::string center = side_point(side, j - 1);
      std::string exc = side_exc(side, j);
      ResidualPoint rp;
      rp.name = side_point(side, j);
      rp.mult = {{"C", d}, {exc, 1}};
      rp.local_int[pair_key("C", exc)] = d;
      if (j < m) {
        rp.mult["E"] = 1;
        rp.local_int[pair_key("C", "E")] = (m - j) * d;
        rp.local_int[pair_key("E", exc)] = 1;
      }
      cfg = blowup(cfg, center, exc, {rp});
      ++r.blowups;
      record(r, "blowup", center, cfg);
    }
  }

  expect(cfg.intersection("C", "E") == 0, "C disjoint from E on Sigma_hat", r.trace.size());

  for (const std::string& side : {std::string("0"), std::string("inf")}) {
    std::string L = side == "0" ? "L0" : "Linf";
    expect(cfg.self(L) == -1, L + " is a (-1)-curve", r.trace.size());
    cfg = blowdown(cfg, L);
    ++r.blowdowns;
    record(r, "blowdown", L, cfg);
    for (int j = 1; j < m; ++j) {
      std::string exc = side_exc(side, j);
      expect(cfg.self(exc) == -1, exc + " cascades to a (-1)-curve", r.trace.size());
      cfg = blowdown(cfg, exc);
      ++r.blowdowns;
      record(r, "blowdown", exc, cfg);
    }
  }

  // Figure-3 state on Sigma_N
  size_t end = r.trace.size();
  expect(cfg.self("E") == -N, "E^2 = -N", end);
  expect(cfg.intersection("C", "E") == 0, "C.E = 0", end);
  expect(cfg.self("C") == d * d * N, "C^2 = d^2 N", end);
  for (const std::string& side : {std::string("0"), std::string("inf")}) {
    std::string f = side_exc(side, m);
    expect(cfg.self(f) == 0, f + " is a fiber", end);
    expect(cfg.intersection("C", f) == d, "C." + f + " = d", end);
    expect(cfg.intersection("E", f) == 1, f + " meets the section once", end);
    cfg.divisors[f].role = "fiber";
  }
  expect(static_cast<int>(cfg.divisors.size()) == 3 + r.blowups - r.blowdowns,
         "divisor count balances blow-ups and blow-downs", end);

  r.final = cfg;
  return r;
}

} // namespace curvepi::surface
