#ifndef CIRCPACK_ORACLE_H_
#define CIRCPACK_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circpack/repair.h"

namespace circpack {

// Count vector over an ordered list of radius classes.
struct Configuration {
  std::vector<int> counts;

  int total() const;
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Radii of the configuration's circles, class by class (the slot order used
// by every verdict).
std::vector<Rational> slot_radii(const std::vector<Rational>& classes, const Configuration& cfg);

enum class BackendKind { kContinuous, kGrid };

const char* backend_name(BackendKind kind);
BackendKind parse_backend(const std::string& name);

struct BackendOptions {
  BackendKind kind = BackendKind::kContinuous;
  int restarts = 6;
  int iterations = 3000;
  std::uint64_t seed = 1;
  // Only accept placements that are exact packings (zero slack).
  bool require_exact = false;
  // Grid backend: abort after this many search nodes (then Unknown).
  std::int64_t grid_node_budget = 2'000'000;
  // Optional starting centers for the first restart, one per slot (missing
  // trailing slots are initialised randomly).
  std::vector<std::pair<double, double>> hint;
};

struct OracleVerdict {
  enum class Kind { kFeasible, kProvenInfeasible, kUnknown };
  enum class Certificate { kNone, kAreaExceeded, kPairwiseLowerBound };

  Kind kind = Kind::kUnknown;
  Certificate certificate = Certificate::kNone;
  int pair_i = -1;  // slots of the pairwise certificate
  int pair_j = -1;
  // Feasible only. Slot k carries id k; epsilon is relative to h and
  // equals 4 alpha / h (zero-slack placements are reported the same way).
  EpsilonPacking packing;
  bool exact = false;  // the placements are an exact packing of w x h
  int restart = -1;    // restart that produced the placements

  bool feasible() const { return kind == Kind::kFeasible; }
};

// Certificates that need no search: total area above w h (lower rational pi)
// or a pair whose center boxes are too close to separate the circles.
std::optional<OracleVerdict> infeasibility_prepass(const std::vector<Rational>& slot_radii, const Rational& w,
                                                   const Rational& h);

// Re-validates a ProvenInfeasible verdict exactly.
bool certificate_holds(const OracleVerdict& verdict, const std::vector<Rational>& slot_radii, const Rational& w,
                       const Rational& h);

// Pre-pass plus the selected backend. Feasible verdicts are verified exactly
// before they are returned: every coordinate lies on a dyadic grid of step
// <= alpha and the placement is a (4 alpha)-packing of w x h.
OracleVerdict check_configuration(const std::vector<Rational>& classes, const Configuration& cfg, const Rational& w,
                                  const Rational& h, const Rational& alpha, const BackendOptions& options);

// Search backends on explicit slot radii (no pre-pass).
OracleVerdict continuous_backend(const std::vector<Rational>& slot_radii, const Rational& w, const Rational& h,
                                 const Rational& alpha, const BackendOptions& options);
// At most five circles. Centers range over multiples of alpha inside
// [r, w - r] x [r, h - r], plus the interval ends; only exact packings are
// accepted, so Feasible is never returned for an infeasible configuration.
OracleVerdict grid_backend(const std::vector<Rational>& slot_radii, const Rational& w, const Rational& h,
                           const Rational& alpha, const BackendOptions& options);

// Grid step used for snapped coordinates: the largest 2^-k not above alpha.
Rational snap_step(const Rational& alpha);

}  // namespace circpack

#endif  // CIRCPACK_ORACLE_H_
