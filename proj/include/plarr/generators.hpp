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

#ifndef PLARR_GENERATORS_HPP
#define PLARR_GENERATORS_HPP

#include <vector>

#include "plarr/arrangement.hpp"

namespace plarr {

namespace detail {

inline FieldElement fe(const FieldPtr& f, int a) {
  return FieldElement::from_rational(f, Rational(a));
}

/// c0 + c1*g for a degree-2 field with generator g.
inline FieldElement quad(const FieldPtr& f, int c0, int c1) {
  return FieldElement(f, {Rational(c0), Rational(c1)});
}

}  // namespace detail

/// The 12 lines of the Hesse arrangement over Q(e), e^2+e+1=0:
/// xyz (x+y+z)(x+y+ez)(x+y+e^2 z)(x+ey+z)(x+e^2 y+z)(ex+y+z)(e^2 x+y+z)
/// (ex+e^2 y+z)(ex+y+e^2 z).  Its lattice has n_2=12, n_4=9.
inline Arrangement gen_hesse() {
  FieldPtr F = fields::eisenstein();
  auto c = [&](int a, int b) { return detail::quad(F, a, b); };
  auto e1 = c(0, 1);        // e
  auto e2 = c(-1, -1);      // e^2
  auto one = c(1, 0), zero = c(0, 0);
  std::vector<ProjLine> lines;
  lines.emplace_back(one, zero, zero);  // x
  lines.emplace_back(zero, one, zero);  // y
  lines.emplace_back(zero, zero, one);  // z
  lines.emplace_back(one, one, one);
  lines.emplace_back(one, one, e1);
  lines.emplace_back(one, one, e2);
  lines.emplace_back(one, e1, one);
  lines.emplace_back(one, e2, one);
  lines.emplace_back(e1, one, one);
  lines.emplace_back(e2, one, one);
  lines.emplace_back(e1, e2, one);
  lines.emplace_back(e1, one, e2);
  return build_arrangement(F, lines, "hesse12").arrangement;
}

/// The 8 side lines of a regular octagon over Q(r), r^2=2, in the published
/// coordinates; all 28 intersections are double points.
inline Arrangement gen_c8() {
  FieldPtr F = fields::sqrt2();
  auto c = [&](int a, int b) { return detail::quad(F, a, b); };
  auto one = c(1, 0);
  std::vector<ProjLine> lines;
  lines.emplace_back(one, c(-1, 1), c(-1, 0));   // x + (r-1)y - z
  lines.emplace_back(one, c(1, 1), c(-1, -1));   // x + (r+1)y + (-r-1)z
  lines.emplace_back(one, c(-1, -1), c(1, 1));   // x + (-r-1)y + (r+1)z
  lines.emplace_back(one, c(1, -1), c(1, 0));    // x + (-r+1)y + z
  lines.emplace_back(one, c(-1, 1), c(1, 0));    // x + (r-1)y + z
  lines.emplace_back(one, c(1, 1), c(1, 1));     // x + (r+1)y + (r+1)z
  lines.emplace_back(one, c(-1, -1), c(-1, -1)); // x + (-r-1)y + (-r-1)z
  lines.emplace_back(one, c(1, -1), c(-1, 0));   // x + (-r+1)y - z
  return build_arrangement(F, lines, "c8").arrangement;
}

/// Side lines of the regular n-gon for even n in {8, 10, 12}, over the
/// cyclotomic field Q(zeta_2n): line k is cos(t_k) x + sin(t_k) y = cos(pi/n)
/// with t_k = (2k+1) pi / n, written via zeta powers.
inline Arrangement gen_ngon(int n) {
  if (n != 8 && n != 10 && n != 12)
    throw UnsupportedN("gen_ngon supports n in {8, 10, 12}, got " + std::to_string(n));
  FieldPtr F = fields::cyclotomic(2 * n);
  FieldElement zeta = FieldElement::generator(F);
  FieldElement zinv = zeta.inverse();
  FieldElement half = FieldElement::from_rational(F, Rational(1, 2));
  // i = zeta^(n/2), since zeta has order 2n
  FieldElement imag = zeta.pow(n / 2);
  FieldElement two_i_inv = (imag.scaled(Rational(2))).inverse();
  FieldElement cos_pi_over_n = (zeta + zinv) * half;
  std::vector<ProjLine> lines;
  for (int k = 0; k < n; ++k) {
    FieldElement w = zeta.pow(2 * k + 1);
    FieldElement winv = zinv.pow(2 * k + 1);
    FieldElement cosk = (w + winv) * half;
    FieldElement sink = (w - winv) * two_i_inv;
    lines.emplace_back(cosk, sink, -cos_pi_over_n);
  }
  return build_arrangement(F, lines, "c" + std::to_string(n)).arrangement;
}

}  // namespace plarr

#endif  // PLARR_GENERATORS_HPP
