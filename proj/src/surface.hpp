#ifndef CURVEPI_SURFACE_HPP
#define CURVEPI_SURFACE_HPP

#include <map>
#include <string>
#include <vector>

#include "poly.hpp"
#include "resolve.hpp"

namespace curvepi::surface {

using exactpoly::CurveParams;

using PairKey = std::pair<std::string, std::string>; // normalized: first < second

PairKey pair_key(const std::string& a, const std::string& b);

struct Divisor {
  int self_intersection = 0;
  std::string role; // "curve", "fiber", "section", "exceptional"
};

struct PointIncidence {
  std::map<std::string, int> mult;  // divisor -> multiplicity of passage
  std::map<PairKey, int> local_int; // incident pair -> local intersection number
};

struct DivisorConfiguration {
  std::map<std::string, Divisor> divisors;
  std::map<PairKey, int> pairwise; // global intersection numbers (distinct divisors)
  std::map<std::string, PointIncidence> points;

  int self(const std::string& d) const;
  int intersection(const std::string& a, const std::string& b) const;
  // Checks: local >= product of multiplicities, locals of every pair sum to
  // the global number.  Throws with a description on violation.
  void validate() const;
};

// Scripted placement of an infinitely-near point after a blow-up.
struct ResidualPoint {
  std::string name;
  std::map<std::string, int> mult;
  std::map<PairKey, int> local_int;
};

// Blow up a named point: adds `exc_name` with self-intersection -1, applies
// the standard intersection updates, replaces the point by the scripted
// residual points; leftover pair intersections get fresh crossing points so
// local numbers keep summing to the global ones.
DivisorConfiguration blowup(const DivisorConfiguration& cfg, const std::string& point,
                            const std::string& exc_name,
                            const std::vector<ResidualPoint>& residuals);

// Contract a (-1)-divisor: inverse intersection updates, points on it merge
// into one image point.
DivisorConfiguration blowdown(const DivisorConfiguration& cfg, const std::string& divisor);

struct ReplayStep {
  std::string kind; // "blowup" | "blowdown"
  std::string center;
  std::map<std::string, int> self_after;
};

struct NagataReplay {
  DivisorConfiguration initial;
  DivisorConfiguration sigma1; // after the first blow-up
  DivisorConfiguration final;
  std::vector<ReplayStep> trace;
  int blowups = 0;
  int blowdowns = 0;
};

// Replays the Sigma_1 -> Sigma_hat -> Sigma_N sequence, consuming measured
// multiplicities and E-contacts from the branch resolutions; asserts the
// final ruled-surface state (E^2 = -N, C.E = 0, C^2 = d^2 N, fibers).
NagataReplay replay_nagata(const CurveParams& params, const resolve::BranchResolution& branch_l0,
                           const resolve::BranchResolution& branch_linf);

} // namespace curvepi::surface

#endif
