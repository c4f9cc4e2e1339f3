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

#ifndef PLARR_RIGIDITY_HPP
#define PLARR_RIGIDITY_HPP

#include <array>
#include <ostream>
#include <vector>

#include "plarr/arrangement.hpp"
#include "plarr/kmatrix.hpp"
#include "plarr/reconstruct.hpp"

namespace plarr {

/// The rank-3 matroid of an arrangement, recorded through its non-bases:
/// triples of concurrent lines (equivalently, collinear dual points).
struct ArrMatroid {
  int n = 0;
  std::vector<std::array<int, 3>> nonbases;  // sorted triples, sorted list
};

inline ArrMatroid matroid_from_lattice(const LatticeSummary& lat, int n) {
  ArrMatroid m;
  m.n = n;
  for (const auto& ip : lat.points) {
    const auto& idx = ip.line_indices;
    size_t k = idx.size();
    if (k < 3) continue;
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b)
        for (size_t c = b + 1; c < k; ++c)
          m.nonbases.push_back({idx[a], idx[b], idx[c]});
  }
  std::sort(m.nonbases.begin(), m.nonbases.end());
  return m;
}

enum class RigidityVerdict { FirstOrderRigid, Inconclusive };

struct RigidityReport {
  int n = 0;
  long jacobian_rows = 0;
  int kernel_dim = 0;   // exact when `exact`, else the agreed modular value
  int trivial_dim = 0;  // n + 8
  RigidityVerdict verdict = RigidityVerdict::Inconclusive;
  int excess = 0;  // kernel_dim - trivial_dim when inconclusive
  bool exact = false;
  std::vector<uint64_t> primes;
};

namespace detail {

inline FieldElement det3(const std::array<std::array<FieldElement, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Columns of the dual coordinate matrix X: column j = coefficients of line j.
inline std::vector<std::array<FieldElement, 3>> dual_matrix(const Arrangement& arr) {
  std::vector<std::array<FieldElement, 3>> X;
  X.reserve(arr.size());
  for (const auto& l : arr.lines()) X.push_back(l.coeffs());
  return X;
}

/// Cofactor matrix of the 3x3 matrix with columns X[t0], X[t1], X[t2]:
/// cof[i][t] = d(det)/d(entry i of column t).
inline std::array<std::array<FieldElement, 3>, 3> cofactors(
    const std::array<FieldElement, 3>& c0, const std::array<FieldElement, 3>& c1,
    const std::array<FieldElement, 3>& c2) {
  std::array<std::array<FieldElement, 3>, 3> M{{{c0[0], c1[0], c2[0]},
                                                {c0[1], c1[1], c2[1]},
                                                {c0[2], c1[2], c2[2]}}};
  std::array<std::array<FieldElement, 3>, 3> cof;
  for (int i = 0; i < 3; ++i)
    for (int t = 0; t < 3; ++t) {
      FieldElement a = M[(i + 1) % 3][(t + 1) % 3];
      FieldElement b = M[(i + 2) % 3][(t + 2) % 3];
      FieldElement c = M[(i + 1) % 3][(t + 2) % 3];
      FieldElement d = M[(i + 2) % 3][(t + 1) % 3];
      cof[i][t] = a * b - c * d;  // even permutation form of the (i,t) minor
    }
  return cof;
}

}  // namespace detail

/// Jacobian rows of the non-basis minor equations, as sparse entries over the
/// field.  Variable layout: column 3*j + i is entry i of line j's dual vector.
struct RigidityJacobian {
  int n = 0;
  std::vector<std::vector<std::pair<int, FieldElement>>> rows;

  size_t cols() const { return static_cast<size_t>(3) * n; }
};

inline RigidityJacobian rigidity_jacobian(const Arrangement& arr, const ArrMatroid& m) {
  auto X = detail::dual_matrix(arr);
  RigidityJacobian J;
  J.n = m.n;
  J.rows.reserve(m.nonbases.size());
  for (const auto& nb : m.nonbases) {
    // precondition: the triple is genuinely concurrent
    auto cof = detail::cofactors(X[nb[0]], X[nb[1]], X[nb[2]]);
    FieldElement det = X[nb[0]][0] * cof[0][0] + X[nb[0]][1] * cof[1][0] + X[nb[0]][2] * cof[2][0];
    if (!det.is_zero())
      throw NotARealization("non-basis (" + std::to_string(nb[0]) + "," +
                            std::to_string(nb[1]) + "," + std::to_string(nb[2]) +
                            ") has nonzero determinant");
    std::vector<std::pair<int, FieldElement>> row;
    for (int t = 0; t < 3; ++t)
      for (int i = 0; i < 3; ++i)
        if (!cof[i][t].is_zero()) row.emplace_back(3 * nb[t] + i, cof[i][t]);
    J.rows.push_back(std::move(row));
  }
  return J;
}

/// The n+9 generators of the trivial deformations: per-line scalings and the
/// 9-dimensional gl_3 action; their span has dimension n+8.
inline std::vector<std::vector<FieldElement>> trivial_deformations(const Arrangement& arr) {
  auto X = detail::dual_matrix(arr);
  int n = static_cast<int>(X.size());
  const FieldPtr& F = arr.field();
  std::vector<std::vector<FieldElement>> vecs;
  for (int j = 0; j < n; ++j) {
    std::vector<FieldElement> v(3 * n, FieldElement::zero(F));
    for (int i = 0; i < 3; ++i) v[3 * j + i] = X[j][i];
    vecs.push_back(std::move(v));
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<FieldElement> v(3 * n, FieldElement::zero(F));
      for (int j = 0; j < n; ++j) v[3 * j + a] = X[j][b];
      vecs.push_back(std::move(v));
    }
  return vecs;
}

/// First-order rigidity: the tangent space of the realization constraints at
/// the given arrangement.  The trivial deformations give an exact lower bound
/// n+8 on the kernel dimension; the modular rank gives an upper bound.  When
/// the two meet, the kernel dimension is exactly n+8 and the arrangement is
/// first-order rigid; otherwise the report stays inconclusive (never a
/// non-rigidity claim).
inline RigidityReport rigidity_check(const Arrangement& arr, const ArrMatroid& m) {
  RigidityReport rep;
  rep.n = m.n;
  rep.trivial_dim = m.n + 8;
  RigidityJacobian J = rigidity_jacobian(arr, m);
  rep.jacobian_rows = static_cast<long>(J.rows.size());

  // exact: every trivial deformation lies in the kernel...
  auto trivial = trivial_deformations(arr);
  for (const auto& v : trivial)
    for (const auto& row : J.rows) {
      FieldElement s = FieldElement::zero(arr.field());
      for (const auto& [c, val] : row) s += val * v[c];
      if (!s.is_zero())
        throw std::logic_error("trivial deformation escapes the tangent space");
    }
  // ...and their span has rank n+8
  {
    KMatrix t(arr.field(), trivial.size(), static_cast<size_t>(3) * m.n);
    for (size_t r = 0; r < trivial.size(); ++r)
      for (size_t c = 0; c < trivial[r].size(); ++c) t.at(r, c) = trivial[r][c];
    int trank = t.rank();
    if (trank != m.n + 8)
      throw std::logic_error("trivial deformation family has unexpected rank " +
                             std::to_string(trank));
  }

  if (J.rows.empty()) {
    rep.kernel_dim = 3 * m.n;
    rep.exact = true;
    rep.excess = rep.kernel_dim - rep.trivial_dim;
    rep.verdict = rep.excess == 0 ? RigidityVerdict::FirstOrderRigid
                                  : RigidityVerdict::Inconclusive;
    return rep;
  }

  modp::FillFn fill = [&J](modp::DenseMod& mat, uint64_t p, uint64_t root) {
    for (size_t r = 0; r < J.rows.size(); ++r)
      for (const auto& [c, val] : J.rows[r]) {
        auto v = modp::reduce_field_element(val, p, root);
        if (!v) return false;
        mat.set(r, static_cast<size_t>(c), *v);
      }
    return true;
  };

  modp::PrimeSequence seq;
  std::vector<int> dims;
  while (dims.size() < 2) {
    uint64_t p = seq.next();
    auto roots = modp::minpoly_roots_mod_p(arr.field()->minpoly(), p);
    if (roots.empty()) continue;
    modp::DenseMod mat(J.rows.size(), J.cols(), p);
    if (!fill(mat, p, roots.front())) continue;
    auto info = mat.echelonize();
    dims.push_back(static_cast<int>(J.cols()) - info.rank);
    rep.primes.push_back(p);
  }
  int upper = std::min(dims[0], dims[1]);
  rep.kernel_dim = upper;
  if (upper == rep.trivial_dim) {
    // sandwich: n+8 <= dim (trivial span) and dim <= modular kernel = n+8
    rep.exact = true;
    rep.verdict = RigidityVerdict::FirstOrderRigid;
    rep.excess = 0;
  } else {
    rep.exact = false;
    rep.verdict = RigidityVerdict::Inconclusive;
    rep.excess = upper - rep.trivial_dim;
  }
  return rep;
}

/// Emit the generators of the realization ideal in plain text, one generator
/// per line: the expanded non-basis determinants in variables x_i_j, followed
/// by the saturation generator 1 - d * prod(basis determinants).
inline void emit_realization_ideal(const ArrMatroid& m, std::ostream& os,
                                   const std::string& label) {
  os << "# realization ideal generators for " << label << "\n";
  os << "# ring: Z[x_i_j : i in 1..3, j in 1.." << m.n << "][d]\n";
  auto det_text = [](int a, int b, int c) {
    auto v = [](int i, int j) {
      return "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    };
    std::string s;
    int cols[3] = {a, b, c};
    // sum over permutations (expanded 3x3 determinant)
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    for (int k = 0; k < 6; ++k) {
      s += (k < 3) ? (k == 0 ? "" : " + ") : " - ";
      s += v(perm[k][0], cols[0]) + "*" + v(perm[k][1], cols[1]) + "*" + v(perm[k][2], cols[2]);
    }
    return s;
  };
  for (const auto& nb : m.nonbases) os << det_text(nb[0], nb[1], nb[2]) << "\n";
  os << "1 - d";
  std::array<int, 3> t{0, 1, 2};
  std::vector<std::array<int, 3>> nb_sorted = m.nonbases;
  for (int a = 0; a < m.n; ++a)
    for (int b = a + 1; b < m.n; ++b)
      for (int c = b + 1; c < m.n; ++c) {
        t = {a, b, c};
        if (!std::binary_search(nb_sorted.begin(), nb_sorted.end(), t))
          os << "*(" << det_text(a, b, c) << ")";
      }
  os << "\n";
}

}  // namespace plarr

#endif  // PLARR_RIGIDITY_HPP
