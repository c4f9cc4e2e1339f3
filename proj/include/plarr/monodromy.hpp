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

#ifndef PLARR_MONODROMY_HPP
#define PLARR_MONODROMY_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "plarr/arrangement.hpp"
#include "plarr/errors.hpp"

namespace plarr {

/// Total Milnor number of a curve whose singularities are all ordinary
/// quasi-homogeneous: mu = tau = sum (multiplicity-1)^2.
inline long total_milnor(const LatticeSummary& lat) {
  long mu = 0;
  for (const auto& [k, c] : lat.nk) mu += c * static_cast<long>(k - 1) * (k - 1);
  return mu;
}

/// Euler characteristic of the complement: chi(U) = (d-1)(d-2) + 1 - mu.
inline long euler_complement(int d, long mu) {
  return static_cast<long>(d - 1) * (d - 2) + 1 - mu;
}

/// The n_2(q) table produced by the external eigenspace computation, indexed
/// by q in {3, ..., d}; q in {0,1,2} is implicitly zero.
struct MonodromyTable {
  std::map<int, long> rows;

  long n2(int q) const {
    if (q <= 2) return 0;
    auto it = rows.find(q);
    return it == rows.end() ? 0 : it->second;
  }
};

/// Multiplicities m(alpha_q) of the roots alpha_q = exp(-2 pi i q / d) of the
/// degree-1 characteristic polynomial of the monodromy, for q in [0, d).
struct AlexanderSpec {
  int d = 0;
  int r = 0;  // number of irreducible components
  std::vector<long> mults;  // index q

  long degree() const { return std::accumulate(mults.begin(), mults.end(), 0L); }

  /// Group equal multiplicities along eigenvalue orders into cyclotomic
  /// factors Phi_o(t)^m.  Possible exactly when all eigenvalues of one order
  /// share a multiplicity; returns nullopt otherwise.
  std::optional<std::map<int, long>> cyclotomic_factors() const {
    std::map<int, long> out;
    std::map<int, long> seen;  // order -> mult
    for (int q = 0; q < d; ++q) {
      int o = d / std::gcd(q, d);
      auto it = seen.find(o);
      if (it == seen.end())
        seen[o] = mults[q];
      else if (it->second != mults[q])
        return std::nullopt;
    }
    for (const auto& [o, m] : seen)
      if (m > 0) out[o] = m;
    return out;
  }

  std::string factored_str() const {
    auto cyc = cyclotomic_factors();
    if (!cyc) return "(not cyclotomic-groupable)";
    std::string s;
    for (auto it = cyc->rbegin(); it != cyc->rend(); ++it) {
      if (!s.empty()) s += " * ";
      s += "Phi_" + std::to_string(it->first) + "(t)^" + std::to_string(it->second);
    }
    return s.empty() ? "1" : s;
  }
};

/// Reconstruction: m(alpha_q) = n_2(q) + n_2(d-q) for q in {1,...,d-1} and
/// m(alpha_0) = r - 1.
inline AlexanderSpec alexander_from_table(int d, int r, const MonodromyTable& table) {
  AlexanderSpec spec;
  spec.d = d;
  spec.r = r;
  spec.mults.assign(d, 0);
  spec.mults[0] = r - 1;
  for (const auto& [q, v] : table.rows)
    if (v < 0)
      throw NegativeMultiplicity("n_2(" + std::to_string(q) + ") = " + std::to_string(v));
  for (int q = 1; q < d; ++q) spec.mults[q] = table.n2(q) + table.n2(d - q);
  return spec;
}

/// Build the multiplicity vector of a literal product of cyclotomic factors
/// Phi_o(t)^m (orders must divide d).
inline AlexanderSpec alexander_from_cyclotomic(int d, int r,
                                               const std::map<int, long>& factors) {
  AlexanderSpec spec;
  spec.d = d;
  spec.r = r;
  spec.mults.assign(d, 0);
  for (const auto& [o, m] : factors) {
    if (o < 1 || d % o != 0)
      throw std::invalid_argument("cyclotomic order " + std::to_string(o) +
                                  " does not divide d = " + std::to_string(d));
    for (int q = 0; q < d; ++q)
      if (d / std::gcd(q, d) == o) spec.mults[q] += m;
  }
  return spec;
}

enum class DiffStatus { Match, Mismatch, PaperInconsistent };

inline const char* to_string(DiffStatus s) {
  switch (s) {
    case DiffStatus::Match: return "MATCH";
    case DiffStatus::Mismatch: return "MISMATCH";
    default: return "PAPER-INCONSISTENT";
  }
}

struct EigenvalueDiff {
  int q;
  long computed;
  long stated;
  DiffStatus status;
};

/// Per-eigenvalue comparison of a reconstructed spectrum against a stated
/// one.  Disagreements are labeled PAPER-INCONSISTENT: the reconstruction
/// formula and the stated polynomial cannot both be right.
inline std::vector<EigenvalueDiff> compare_alexander(const AlexanderSpec& computed,
                                                     const AlexanderSpec& stated) {
  if (computed.d != stated.d)
    throw std::invalid_argument("compare_alexander: degree mismatch");
  std::vector<EigenvalueDiff> out;
  for (int q = 0; q < computed.d; ++q) {
    EigenvalueDiff ed{q, computed.mults[q], stated.mults[q], DiffStatus::Match};
    if (ed.computed != ed.stated) ed.status = DiffStatus::PaperInconsistent;
    out.push_back(ed);
  }
  return out;
}

struct DegreeIdentityReport {
  long chi = 0;
  long deg_delta1 = 0;
  long deg_delta2 = 0;  // d*chi - 1 - deg_delta1
  bool consistent = false;
};

/// From (t^d - 1)^chi = Delta0 * Delta1 * Delta2 with Delta0 = t - 1:
/// deg Delta2 = d*chi - 1 - deg Delta1.  A negative value is reported raw.
inline DegreeIdentityReport degree_identity_check(int d, long chi,
                                                  const AlexanderSpec& alex) {
  DegreeIdentityReport rep;
  rep.chi = chi;
  rep.deg_delta1 = alex.degree();
  rep.deg_delta2 = static_cast<long>(d) * chi - 1 - rep.deg_delta1;
  rep.consistent = rep.deg_delta2 >= 0;
  return rep;
}

}  // namespace plarr

#endif  // PLARR_MONODROMY_HPP
