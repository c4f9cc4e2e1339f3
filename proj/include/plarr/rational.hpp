/*
   Copyright 2026 The plarr authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PLARR_RATIONAL_HPP
#define PLARR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plarr {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sign(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

inline int compare(const Rational& a, const Rational& b) {
  return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

/// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sign(q) < 0) return std::nullopt;
  Integer num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

/// Chinese remainder combination: value ≡ r1 (mod m1), ≡ r2 (mod m2) with
/// coprime moduli. Result is reduced into [0, m1*m2).
inline Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2,
                        const Integer& m2) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw std::invalid_argument("crt_pair: moduli not coprime");
  Integer t = ((r2 - r1) * inv) % m2;
  if (sign(t) < 0) t += m2;
  return r1 + m1 * t;
}

/// Wang-style rational reconstruction: find n/d with n ≡ d*u (mod m),
/// |n|, d <= sqrt(m/2). Returns nullopt when no admissible pair exists.
inline std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = u % m;
  if (sign(r1) < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Integer t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (sign(t1) == 0) return std::nullopt;
  if (sign(t1) < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) {
    // A common factor means the image is not a valid reduction of r1/t1.
    Integer gm;
    mpz_gcd(gm.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
    if (gm != 1) return std::nullopt;
    return std::nullopt;
  }
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parse "a" or "a/b" with optional sign. Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline int compare_vectors(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

}  // namespace plarr

#endif  // PLARR_RATIONAL_HPP
