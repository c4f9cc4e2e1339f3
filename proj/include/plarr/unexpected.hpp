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

#ifndef PLARR_UNEXPECTED_HPP
#define PLARR_UNEXPECTED_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plarr {

/// Existence and degree range of unexpected curves for the dual point set of
/// a line arrangement, from freeness data alone: the point set admits an
/// unexpected curve iff m <= d1 + 1 < d/2, in which case the degrees are
/// exactly d1 < j <= d - d1 - 2.
struct UnexpectedReport {
  int d = 0;         // number of dual points (= number of lines)
  int d1 = 0;        // first exponent
  int max_mult = 0;  // maximal intersection multiplicity m(A_Z)
  bool admits = false;
  std::set<int> degrees;
};

inline UnexpectedReport unexpected_degrees(int d, int d1, int max_mult) {
  if (d < 3) throw std::invalid_argument("unexpected_degrees: need d >= 3");
  if (d1 < 1 || d1 > d - 1)
    throw std::invalid_argument("unexpected_degrees: d1 out of range");
  if (max_mult < 2)
    throw std::invalid_argument("unexpected_degrees: max multiplicity must be >= 2");
  UnexpectedReport rep;
  rep.d = d;
  rep.d1 = d1;
  rep.max_mult = max_mult;
  rep.admits = (max_mult <= d1 + 1) && (2 * (d1 + 1) < d);
  if (rep.admits)
    for (int j = d1 + 1; j <= d - d1 - 2; ++j) rep.degrees.insert(j);
  return rep;
}

/// Translation to strong Lefschetz failures: an unexpected curve of degree
/// u = j+1 corresponds to failure of the SLP in range 2 and degree j-1 for
/// the associated power algebra; both indices are reported.
struct SlpFailure {
  int range = 2;
  int degree = 0;   // j - 1 in the shifted indexing
  int power_j = 0;  // j, with the curve degree being j + 1
};

inline std::vector<SlpFailure> slp_failures(const UnexpectedReport& rep) {
  std::vector<SlpFailure> out;
  for (int u : rep.degrees) out.push_back({2, u - 2, u - 1});
  return out;
}

}  // namespace plarr

#endif  // PLARR_UNEXPECTED_HPP
