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

#ifndef PLARR_MODULAR_HPP
#define PLARR_MODULAR_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "plarr/numberfield.hpp"

namespace plarr::modp {

// Primes stay below 2^25 so that a full elimination pass never needs an
// intermediate reduction: every entry is bounded by p + #pivots * p^2, which
// fits in int64 for #pivots up to ~4000.
constexpr uint64_t kPrimeUpper = (1ull << 25);
constexpr uint64_t kPrimeLower = 30'000'000;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

inline uint64_t reduce_int64(int64_t x, uint64_t p) {
  int64_t r = x % static_cast<int64_t>(p);
  if (r < 0) r += static_cast<int64_t>(p);
  return static_cast<uint64_t>(r);
}

/// Image of a rational mod p; empty when p divides the denominator.
inline std::optional<uint64_t> reduce_rational(const Rational& q, uint64_t p) {
  Integer den = q.get_den();
  uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) return std::nullopt;
  uint64_t n = mpz_fdiv_ui(Integer(q.get_num()).get_mpz_t(), p);
  return mulmod(n, invmod(d, p), p);
}

/// Image of a field element under coefficient reduction and substitution of a
/// root of the minimal polynomial mod p.
inline std::optional<uint64_t> reduce_field_element(const FieldElement& a, uint64_t p,
                                                    uint64_t root) {
  uint64_t acc = 0, rp = 1;
  for (const auto& c : a.coeffs()) {
    if (sign(c) != 0) {
      auto v = reduce_rational(c, p);
      if (!v) return std::nullopt;
      acc = (acc + mulmod(*v, rp, p)) % p;
    }
    rp = mulmod(rp, root, p);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Univariate polynomial arithmetic mod p (dense, ascending coefficients),
// used only for finding roots of minimal polynomials.

namespace poly {

using Poly = std::vector<uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly rem(Poly a, const Poly& b, uint64_t p) {
  uint64_t inv_lead = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    uint64_t f = mulmod(a.back(), inv_lead, p);
    size_t shift = a.size() - b.size();
    if (f != 0)
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = mulmod(f, b[i], p);
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline Poly mulrem(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return rem(std::move(c), mod, p);
}

inline Poly powrem(Poly base, uint64_t e, const Poly& mod, uint64_t p) {
  Poly r{1};
  base = rem(std::move(base), mod, p);
  while (e) {
    if (e & 1) r = mulrem(r, base, mod, p);
    base = mulrem(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

}  // namespace poly

/// Distinct roots of the minimal polynomial mod p, via gcd with x^p - x and
/// deterministic equal-degree splitting.  Empty when p divides a denominator
/// or the reduction is degenerate.
inline std::vector<uint64_t> minpoly_roots_mod_p(const std::vector<Rational>& minpoly,
                                                 uint64_t p) {
  poly::Poly f(minpoly.size());
  for (size_t i = 0; i < minpoly.size(); ++i) {
    auto v = reduce_rational(minpoly[i], p);
    if (!v) return {};
    f[i] = *v;
  }
  if (f.back() == 0) return {};
  // linear-factor part: gcd(x^p - x, f)
  poly::Poly xp = poly::powrem({0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;
  poly::trim(xp);
  poly::Poly lin = poly::gcd(f, xp, p);
  std::vector<uint64_t> roots;
  if (lin.empty() || lin.size() == 1) return roots;
  std::vector<poly::Poly> stack{lin};
  uint64_t shift = 0;
  while (!stack.empty()) {
    poly::Poly g = std::move(stack.back());
    stack.pop_back();
    if (g.size() == 2) {
      // x + c -> root = -c
      roots.push_back((p - g[0]) % p);
      continue;
    }
    // split with (x + a)^((p-1)/2) - 1 for successive shifts a
    bool split = false;
    while (!split) {
      uint64_t a = shift++;
      poly::Poly h = poly::powrem({a, 1}, (p - 1) / 2, g, p);
      if (h.empty())
        h = {p - 1};
      else
        h[0] = (h[0] + p - 1) % p;
      poly::trim(h);
      poly::Poly d = poly::gcd(g, h, p);
      if (!d.empty() && d.size() > 1 && d.size() < g.size()) {
        // g / d
        poly::Poly q;
        {
          poly::Poly a2 = g;
          uint64_t inv_lead = invmod(d.back(), p);
          q.assign(a2.size() - d.size() + 1, 0);
          while (a2.size() >= d.size() && !a2.empty()) {
            uint64_t fct = mulmod(a2.back(), inv_lead, p);
            size_t sh = a2.size() - d.size();
            q[sh] = fct;
            for (size_t i = 0; i < d.size(); ++i) {
              uint64_t sub = mulmod(fct, d[i], p);
              a2[sh + i] = (a2[sh + i] + p - sub) % p;
            }
            poly::trim(a2);
            if (a2.size() < d.size()) break;
          }
          poly::trim(q);
        }
        stack.push_back(std::move(d));
        stack.push_back(std::move(q));
        split = true;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Deterministic sequence of primes in [kPrimeLower, kPrimeUpper).
class PrimeSequence {
 public:
  explicit PrimeSequence(uint64_t start = kPrimeLower) : cur_(start) {}

  uint64_t next() {
    Integer z(static_cast<unsigned long>(cur_));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    cur_ = z.get_ui();
    if (cur_ >= kPrimeUpper)
      throw std::runtime_error("prime pool exhausted");
    return cur_;
  }

 private:
  uint64_t cur_;
};

// ---------------------------------------------------------------------------
// Dense elimination over F_p with lazily reduced int64 entries.  The only
// divisions happen on pivot rows; bulk row updates are pure integer
// multiply-adds, which the compiler vectorizes.

struct EchelonInfo {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;  // original row index of each pivot
  bool full_column_rank = false;
};

class DenseMod {
 public:
  DenseMod(size_t rows, size_t cols, uint64_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0), rowidx_(rows) {
    for (size_t i = 0; i < rows; ++i) rowidx_[i] = i;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint64_t prime() const { return p_; }

  void set(size_t r, size_t c, uint64_t v) { a_[r * cols_ + c] = static_cast<int64_t>(v % p_); }

  int64_t* physical_row(size_t r) { return a_.data() + rowidx_[r] * cols_; }

  /// Forward elimination; optionally stop as soon as a pivotless column shows
  /// that full column rank is impossible.
  EchelonInfo echelonize(bool early_exit_on_deficiency = false) {
    EchelonInfo info;
    size_t pr = 0;
    const int64_t ip = static_cast<int64_t>(p_);
    for (size_t c = 0; c < cols_ && pr < rows_; ++c) {
      // find a pivot in column c at or below row pr
      size_t piv = rows_;
      for (size_t r = pr; r < rows_; ++r) {
        int64_t* row = physical_row(r);
        int64_t v = row[c] % ip;
        if (v < 0) v += ip;
        row[c] = v;
        if (v != 0) {
          piv = r;
          break;
        }
      }
      if (piv == rows_) {
        if (early_exit_on_deficiency) {
          info.full_column_rank = false;
          return info;
        }
        continue;
      }
      std::swap(rowidx_[pr], rowidx_[piv]);
      int64_t* prow = physical_row(pr);
      // fully reduce and scale the pivot row to leading 1
      uint64_t inv = invmod(static_cast<uint64_t>(prow[c]), p_);
      for (size_t j = c; j < cols_; ++j) {
        int64_t v = prow[j] % ip;
        if (v < 0) v += ip;
        prow[j] = static_cast<int64_t>(mulmod(static_cast<uint64_t>(v), inv, p_));
      }
      for (size_t r = pr + 1; r < rows_; ++r) {
        int64_t* row = physical_row(r);
        int64_t f = row[c];  // reduced by the pivot scan only up to piv
        f %= ip;
        if (f < 0) f += ip;
        if (f == 0) {
          row[c] = 0;
          continue;
        }
        row[c] = 0;
        const int64_t* pj = prow;
        for (size_t j = c + 1; j < cols_; ++j) row[j] -= f * pj[j];
      }
      info.pivot_cols.push_back(static_cast<int>(c));
      info.pivot_rows.push_back(static_cast<int>(rowidx_[pr]));
      ++pr;
    }
    info.rank = static_cast<int>(pr);
    info.full_column_rank = (pr == cols_);
    return info;
  }

  /// Kernel basis in reduced echelon normal form: one vector per free column,
  /// with that free coordinate set to 1.  Requires a prior echelonize().
  std::vector<std::vector<uint64_t>> kernel_basis(const EchelonInfo& info) {
    std::vector<bool> is_pivot(cols_, false);
    for (int c : info.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<uint64_t> x(cols_, 0);
      x[fc] = 1;
      for (int i = static_cast<int>(info.pivot_cols.size()) - 1; i >= 0; --i) {
        size_t pc = static_cast<size_t>(info.pivot_cols[i]);
        const int64_t* row = physical_row(static_cast<size_t>(i));
        unsigned __int128 acc = 0;
        for (size_t j = pc + 1; j < cols_; ++j) {
          if (x[j] == 0 || row[j] == 0) continue;
          acc += static_cast<unsigned __int128>(static_cast<uint64_t>(row[j])) * x[j];
        }
        uint64_t s = static_cast<uint64_t>(acc % p_);
        x[pc] = (p_ - s) % p_;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  size_t rows_, cols_;
  uint64_t p_;
  std::vector<int64_t> a_;
  std::vector<size_t> rowidx_;
};

}  // namespace plarr::modp

#endif  // PLARR_MODULAR_HPP
