#ifndef CIRCPACK_TESTS_TEST_UTIL_H_
#define CIRCPACK_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "circpack/packing.h"

namespace circpack::testing {

// Canonical p/q (the two-argument mpq_class constructor does not reduce).
inline Rational Q(long p, long q = 1) {
  Rational v(p, q);
  v.canonicalize();
  return v;
}

inline Instance make_instance(const std::vector<Rational>& radii, const Rational& w = Rational(1),
                              const Rational& h = Rational(1)) {
  Instance inst;
  inst.w = w;
  inst.h = h;
  int id = 0;
  for (const auto& r : radii) inst.circles.push_back({id++, r});
  return inst;
}

inline std::vector<Rational> repeat(const Rational& r, int n) { return std::vector<Rational>(n, r); }

// Random rational p/q with q in [1, max_den] and value in [lo, hi].
inline Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long max_den) {
  const long q = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  const Rational a = lo * q;
  const Rational b = hi * q;
  BigInt pa, pb;
  mpz_cdiv_q(pa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_fdiv_q(pb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  if (pa > pb) return lo;
  const long span = BigInt(pb - pa).get_si();
  const long p = pa.get_si() + static_cast<long>(rng() % static_cast<std::uint64_t>(span + 1));
  return Q(p, q);
}

}  // namespace circpack::testing

#endif  // CIRCPACK_TESTS_TEST_UTIL_H_
