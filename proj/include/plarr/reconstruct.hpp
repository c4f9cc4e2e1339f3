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

#ifndef PLARR_RECONSTRUCT_HPP
#define PLARR_RECONSTRUCT_HPP

#include <functional>
#include <optional>
#include <vector>

#include "plarr/errors.hpp"
#include "plarr/modular.hpp"

namespace plarr::modp {

/// Fills a DenseMod matrix with the image of a fixed matrix over a number
/// field under reduction mod p at a chosen root of the minimal polynomial.
/// Returns false when some entry cannot be reduced (p divides a denominator).
using FillFn = std::function<bool(DenseMod&, uint64_t p, uint64_t root)>;

struct ProbeResult {
  bool full_column_rank = false;
  std::vector<uint64_t> primes;  // primes that produced the verdict
  int kernel_dim_mod_p = -1;     // kernel dimension seen when deficient
};

/// Rank probe: full column rank mod one good prime already implies full
/// column rank over the field; emptiness verdicts are only issued when two
/// independent primes agree.
inline ProbeResult probe_full_column_rank(const FillFn& fill, size_t rows, size_t cols,
                                          const NumberField& field, PrimeSequence& seq,
                                          int confirmations = 2, int max_used = 12) {
  ProbeResult out;
  int full_seen = 0, deficient_seen = 0, used = 0;
  int deficient_dim = -1;
  std::vector<uint64_t> full_primes, deficient_primes;
  // primes where the minimal polynomial has no root (or divides a
  // denominator) are skipped without counting against the budget
  while (used < max_used) {
    uint64_t p = seq.next();
    auto roots = minpoly_roots_mod_p(field.minpoly(), p);
    if (roots.empty()) continue;
    DenseMod m(rows, cols, p);
    if (!fill(m, p, roots.front())) continue;
    ++used;
    EchelonInfo info = m.echelonize(/*early_exit_on_deficiency=*/false);
    if (info.full_column_rank) {
      ++full_seen;
      full_primes.push_back(p);
      if (full_seen >= confirmations) {
        out.full_column_rank = true;
        out.primes = full_primes;
        return out;
      }
    } else {
      ++deficient_seen;
      deficient_primes.push_back(p);
      deficient_dim = static_cast<int>(cols) - info.rank;
      if (deficient_seen >= confirmations && full_seen == 0) {
        out.full_column_rank = false;
        out.primes = deficient_primes;
        out.kernel_dim_mod_p = deficient_dim;
        return out;
      }
    }
  }
  // Mixed signals: a single full-rank prime is already conclusive for
  // emptiness over the field, so prefer it.
  if (full_seen > 0) {
    out.full_column_rank = true;
    out.primes = full_primes;
    return out;
  }
  if (deficient_seen == 0)
    throw std::runtime_error("rank probe found no usable prime for " + field.label());
  out.full_column_rank = false;
  out.primes = deficient_primes;
  out.kernel_dim_mod_p = deficient_dim;
  return out;
}

/// Multi-prime reconstruction of the kernel of a matrix over a number field.
/// Each totally split prime is run once per root of the minimal polynomial;
/// the per-root kernel images are merged with a Vandermonde solve into
/// generator coefficients mod p, accumulated by CRT, and finally lifted to
/// rationals.  A candidate is only a candidate: callers must verify it
/// exactly before trusting it.
class KernelReconstructor {
 public:
  KernelReconstructor(FillFn fill, size_t rows, size_t cols, FieldPtr field)
      : fill_(std::move(fill)), rows_(rows), cols_(cols), field_(std::move(field)) {}

  enum class Status { Progress, KernelIsEmpty, PrimeSkipped };

  Status step(PrimeSequence& seq) {
    const int g = field_->degree();
    uint64_t p = 0;
    std::vector<uint64_t> roots;
    // need a totally split prime with g distinct roots
    for (;;) {
      p = seq.next();
      roots = minpoly_roots_mod_p(field_->minpoly(), p);
      if (static_cast<int>(roots.size()) == g) break;
    }
    std::vector<std::vector<std::vector<uint64_t>>> per_root;  // [root][vec][coord]
    std::vector<int> profile;
    for (int s = 0; s < g; ++s) {
      DenseMod m(rows_, cols_, p);
      if (!fill_(m, p, roots[s])) return Status::PrimeSkipped;
      EchelonInfo info = m.echelonize();
      if (info.full_column_rank) return Status::KernelIsEmpty;
      if (s == 0)
        profile = info.pivot_cols;
      else if (profile != info.pivot_cols)
        return Status::PrimeSkipped;  // roots disagree; prime unusable
      per_root.push_back(m.kernel_basis(info));
    }
    int dim = static_cast<int>(per_root[0].size());
    if (accepted_primes_ == 0) {
      dim_ = dim;
      profile_ = profile;
    } else if (dim < dim_) {
      // smaller kernel = higher rank = closer to the truth over the field;
      // everything accumulated so far came from worse primes
      reset();
      dim_ = dim;
      profile_ = profile;
    } else if (dim > dim_ || profile != profile_) {
      return Status::PrimeSkipped;
    }
    // Vandermonde transform: values at the g roots -> generator coefficients.
    std::vector<std::vector<uint64_t>> vdm(g, std::vector<uint64_t>(g));
    for (int s = 0; s < g; ++s) {
      uint64_t pw = 1;
      for (int i = 0; i < g; ++i) {
        vdm[s][i] = pw;
        pw = mulmod(pw, roots[s], p);
      }
    }
    std::vector<Integer> residues;
    residues.reserve(dim * cols_ * g);
    std::vector<uint64_t> vals(g), coef(g);
    for (size_t v = 0; v < static_cast<size_t>(dim); ++v)
      for (size_t j = 0; j < cols_; ++j) {
        for (int s = 0; s < g; ++s) vals[s] = per_root[s][v][j];
        solve_vandermonde(vdm, vals, coef, p);
        for (int i = 0; i < g; ++i) residues.emplace_back(static_cast<unsigned long>(coef[i]));
      }
    Integer pz(static_cast<unsigned long>(p));
    if (accepted_primes_ == 0) {
      crt_residues_ = std::move(residues);
      modulus_ = pz;
    } else {
      for (size_t i = 0; i < crt_residues_.size(); ++i)
        crt_residues_[i] = crt_pair(crt_residues_[i], modulus_, residues[i], pz);
      modulus_ *= pz;
    }
    ++accepted_primes_;
    primes_used_.push_back(p);
    return Status::Progress;
  }

  int modular_dim() const { return dim_; }
  const std::vector<uint64_t>& primes_used() const { return primes_used_; }

  /// Attempt to lift every CRT residue to a rational; null when any entry is
  /// not yet reconstructible with the current modulus.
  std::optional<std::vector<std::vector<FieldElement>>> candidate() const {
    if (accepted_primes_ == 0) return std::nullopt;
    const int g = field_->degree();
    std::vector<std::vector<FieldElement>> out;
    out.reserve(dim_);
    size_t idx = 0;
    for (int v = 0; v < dim_; ++v) {
      std::vector<FieldElement> vec;
      vec.reserve(cols_);
      for (size_t j = 0; j < cols_; ++j) {
        std::vector<Rational> coeffs(g);
        for (int i = 0; i < g; ++i) {
          auto q = rational_reconstruct(crt_residues_[idx++], modulus_);
          if (!q) return std::nullopt;
          coeffs[i] = *q;
        }
        vec.emplace_back(field_, std::move(coeffs));
      }
      out.push_back(std::move(vec));
    }
    return out;
  }

 private:
  void reset() {
    crt_residues_.clear();
    modulus_ = 1;
    accepted_primes_ = 0;
    primes_used_.clear();
  }

  static void solve_vandermonde(std::vector<std::vector<uint64_t>> m,
                                std::vector<uint64_t> rhs, std::vector<uint64_t>& out,
                                uint64_t p) {
    size_t n = rhs.size();
    for (size_t c = 0; c < n; ++c) {
      size_t piv = c;
      while (piv < n && m[piv][c] == 0) ++piv;
      if (piv == n) throw std::runtime_error("singular Vandermonde (repeated roots?)");
      std::swap(m[c], m[piv]);
      std::swap(rhs[c], rhs[piv]);
      uint64_t inv = invmod(m[c][c], p);
      for (size_t j = c; j < n; ++j) m[c][j] = mulmod(m[c][j], inv, p);
      rhs[c] = mulmod(rhs[c], inv, p);
      for (size_t r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        uint64_t f = m[r][c];
        for (size_t j = c; j < n; ++j)
          m[r][j] = (m[r][j] + p - mulmod(f, m[c][j], p)) % p;
        rhs[r] = (rhs[r] + p - mulmod(f, rhs[c], p)) % p;
      }
    }
    out = rhs;
  }

  FillFn fill_;
  size_t rows_, cols_;
  FieldPtr field_;
  int dim_ = -1;
  std::vector<int> profile_;
  std::vector<Integer> crt_residues_;
  Integer modulus_ = 1;
  int accepted_primes_ = 0;
  std::vector<uint64_t> primes_used_;
};

}  // namespace plarr::modp

#endif  // PLARR_RECONSTRUCT_HPP
