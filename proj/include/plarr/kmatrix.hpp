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

#ifndef PLARR_KMATRIX_HPP
#define PLARR_KMATRIX_HPP

#include <vector>

#include "plarr/numberfield.hpp"

namespace plarr {

/// Dense matrix over a NumberField with exact Gaussian elimination.  Meant
/// for small systems (point evaluation matrices, trivial-deformation ranks);
/// the big syzygy systems go through the modular machinery instead.
class KMatrix {
 public:
  KMatrix(FieldPtr field, size_t rows, size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        a_(rows * cols, FieldElement::zero(field_)) {}

  FieldElement& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  struct Echelon {
    int rank = 0;
    std::vector<int> pivot_cols;
  };

  /// In-place reduced row echelon form.
  Echelon rref() {
    Echelon info;
    size_t pr = 0;
    for (size_t c = 0; c < cols_ && pr < rows_; ++c) {
      size_t piv = rows_;
      for (size_t r = pr; r < rows_; ++r)
        if (!at(r, c).is_zero()) {
          piv = r;
          break;
        }
      if (piv == rows_) continue;
      if (piv != pr)
        for (size_t j = 0; j < cols_; ++j) std::swap(at(pr, j), at(piv, j));
      FieldElement inv = at(pr, c).inverse();
      for (size_t j = c; j < cols_; ++j) at(pr, j) = at(pr, j) * inv;
      for (size_t r = 0; r < rows_; ++r) {
        if (r == pr || at(r, c).is_zero()) continue;
        FieldElement f = at(r, c);
        for (size_t j = c; j < cols_; ++j) at(r, j) -= f * at(pr, j);
      }
      info.pivot_cols.push_back(static_cast<int>(c));
      ++pr;
    }
    info.rank = static_cast<int>(pr);
    return info;
  }

  int rank() const {
    KMatrix copy = *this;
    return copy.rref().rank;
  }

  /// Kernel basis in reduced normal form (one vector per free column).
  std::vector<std::vector<FieldElement>> kernel_basis() const {
    KMatrix m = *this;
    Echelon e = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<FieldElement> x(cols_, FieldElement::zero(field_));
      x[fc] = FieldElement::one(field_);
      for (size_t i = 0; i < e.pivot_cols.size(); ++i)
        x[e.pivot_cols[i]] = -m.at(i, fc);
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  FieldPtr field_;
  size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

}  // namespace plarr

#endif  // PLARR_KMATRIX_HPP
