#ifndef CIRCPACK_LARGE_H_
#define CIRCPACK_LARGE_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "circpack/cover_ip.h"
#include "circpack/oracle.h"

namespace circpack {

// A demanded radius class for which no configuration could be certified.
class OracleIncompleteness : public std::runtime_error {
 public:
  OracleIncompleteness(const std::string& context, const Rational& radius)
      : std::runtime_error(context + ": no certified configuration holds a circle of radius " + to_string(radius)),
        radius_(radius) {}
  const Rational& radius() const { return radius_; }

 private:
  Rational radius_;
};

struct LargeParams {
  Rational delta;
  Rational epsilon;
  Rational gamma;
  std::int64_t M = 0;  // ceil(w h / (pi_lower delta^2))
  BigInt K_cap;        // ceil(2 / (epsilon pi_lower delta^2))
};

LargeParams large_params(const Rational& w, const Rational& h, const Rational& delta, const Rational& epsilon,
                         const Rational& gamma);

struct LargeOptions {
  BackendOptions backend;
  // Full downward-closed enumeration is used when at most this many count
  // vectors pass the area filter; otherwise configurations are grown
  // greedily (first fit by decreasing radius).
  std::int64_t enumeration_cap = 200;
  CoverIPOptions ip;
  std::string context = "large";
};

struct FixedRadiiResult {
  Packing packing;                      // bins w x (1 + gamma) h
  std::vector<Rational> classes;        // distinct radii, decreasing
  std::vector<Configuration> configs;   // certified maximal configurations given to the IP
  std::vector<std::int64_t> multiplicity;
  std::int64_t oracle_calls = 0;
  bool ip_optimal = false;
  bool enumerated = false;              // full enumeration (not greedy growth)
};

// Every radius must be >= delta. Configurations are checked with
// eps' = gamma^2 / (6 M^2) and alpha = eps' h / 4, and repaired into
// w x (1 + gamma) h.
FixedRadiiResult pack_fixed_radii(const Instance& inst, const Rational& delta, const Rational& gamma,
                                  const LargeOptions& options);

struct LargeResult {
  Packing packing;
  std::int64_t group_size = 0;          // Q; 0 when the fixed-radii path was taken
  std::int64_t first_group_bins = 0;
  std::int64_t rounded_bins = 0;        // bins of the grouped (rounded) instance
  std::map<int, Rational> surrogate;    // circle id -> radius of the slot it occupies
};

LargeResult pack_large(const Instance& inst, const Rational& delta, const Rational& epsilon, const Rational& gamma,
                       const LargeOptions& options);

struct RoundDownResult {
  Packing packing;                      // bins w x height
  Rational alpha;                       // eps^2 / (6 M^2)
  Rational lift_step;
  std::map<int, Rational> rounded;      // circle id -> rounded radius
  std::int64_t repaired_bins = 0;       // bins that needed the lift
};

// Radii rounded down to delta + k alpha, packed in w x (1 + eps) h, radii
// restored (a 2 alpha-packing) and lifted into w x (1 + M q)(1 + eps) h with
// q^2 >= 12 alpha / ((1 + eps) h).
RoundDownResult pack_large_rounddown(const Instance& inst, const Rational& delta, const Rational& epsilon,
                                     const LargeOptions& options);

// Height of the bins produced by pack_large_rounddown for a w x h bin.
Rational rounddown_bin_height(const Rational& w, const Rational& h, const Rational& delta, const Rational& epsilon);

// Drops configurations dominated componentwise by another one.
std::vector<Configuration> maximal_configurations(std::vector<Configuration> configs);

}  // namespace circpack

#endif  // CIRCPACK_LARGE_H_
