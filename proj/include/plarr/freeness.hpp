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

#ifndef PLARR_FREENESS_HPP
#define PLARR_FREENESS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plarr/arrangement.hpp"
#include "plarr/multipoly.hpp"
#include "plarr/reconstruct.hpp"

namespace plarr {

/// A reduced curve given by its irreducible components (linear forms and/or
/// conics) together with the expanded product.
struct CurveSpec {
  FieldPtr field;
  std::vector<MultiPoly> components;
  MultiPoly f;
  int d = 0;             // total degree
  int r_components = 0;  // number of components
};

inline CurveSpec defining_poly(const std::vector<MultiPoly>& components) {
  if (components.empty())
    throw std::invalid_argument("defining_poly: no components");
  const FieldPtr& field = components.front().field();
  for (size_t i = 0; i < components.size(); ++i) {
    require_same_field(field, components[i].field(), "defining_poly");
    if (!components[i].is_homogeneous() || components[i].is_zero())
      throw std::invalid_argument("defining_poly: components must be nonzero homogeneous");
    for (size_t j = i + 1; j < components.size(); ++j)
      if (MultiPoly::proportional(components[i], components[j]))
        throw RepeatedComponent("components " + std::to_string(i) + " and " +
                                std::to_string(j) + " are proportional");
  }
  CurveSpec spec;
  spec.field = field;
  spec.components = components;
  spec.f = MultiPoly::constant(field, FieldElement::one(field));
  for (const auto& c : components) spec.f *= c;
  spec.d = spec.f.degree();
  spec.r_components = static_cast<int>(components.size());
  return spec;
}

inline CurveSpec curve_from_arrangement(const Arrangement& arr) {
  std::vector<MultiPoly> comps;
  comps.reserve(arr.size());
  for (const auto& l : arr.lines()) comps.push_back(MultiPoly::linear_form(l.coeffs()));
  return defining_poly(comps);
}

// ---------------------------------------------------------------------------
// Monomial indexing for fixed total degree D: (i,j,k) with i+j+k=D maps to
// T(D-i) + (D-i-j) with T(n)=n(n+1)/2; the range is [0, C(D+2,2)).

inline long monomial_count(int degree) {
  return static_cast<long>(degree + 2) * (degree + 1) / 2;
}

inline long monomial_index(int D, int i, int j) {
  long m = D - i;
  return m * (m + 1) / 2 + (m - j);
}

inline Exponents monomial_at(int D, long index) {
  // invert the pairing; fine for the small D used here
  long m = 0;
  while ((m + 1) * (m + 2) / 2 <= index) ++m;
  long off = index - m * (m + 1) / 2;
  int i = D - static_cast<int>(m);
  int j = static_cast<int>(m - off);
  return {i, j, D - i - j};
}

// ---------------------------------------------------------------------------

struct SyzygyWitness {
  int r = -1;
  std::array<MultiPoly, 3> triple;
};

/// The syzygy system in degree r for curve f of degree d: unknowns are the
/// 3*C(r+2,2) coefficients of (a,b,c), equations are the C(r+d+1,2)
/// coefficients of a*f_x + b*f_y + c*f_z.
class SyzygySystem {
 public:
  SyzygySystem(const CurveSpec& curve, int r)
      : field_(curve.field), d_(curve.d), r_(r) {
    partials_[0] = curve.f.partial(0);
    partials_[1] = curve.f.partial(1);
    partials_[2] = curve.f.partial(2);
    cols_ = 3 * monomial_count(r);
    rows_ = monomial_count(r + d_ - 1);
  }

  size_t rows() const { return static_cast<size_t>(rows_); }
  size_t cols() const { return static_cast<size_t>(cols_); }
  const FieldPtr& field() const { return field_; }
  const std::array<MultiPoly, 3>& partials() const { return partials_; }

  modp::FillFn fill_fn() const {
    return [this](modp::DenseMod& m, uint64_t p, uint64_t root) {
      return fill(m, p, root);
    };
  }

  bool fill(modp::DenseMod& m, uint64_t p, uint64_t root) const {
    const int D = r_ + d_ - 1;
    long mono = monomial_count(r_);
    for (int b = 0; b < 3; ++b) {
      // reduce the partial once
      std::vector<std::pair<Exponents, uint64_t>> terms;
      terms.reserve(partials_[b].term_count());
      for (const auto& [e, c] : partials_[b].terms()) {
        auto v = modp::reduce_field_element(c, p, root);
        if (!v) return false;
        if (*v != 0) terms.emplace_back(e, *v);
      }
      for (long mi = 0; mi < mono; ++mi) {
        Exponents me = monomial_at(r_, mi);
        size_t col = static_cast<size_t>(b) * mono + mi;
        for (const auto& [te, tv] : terms) {
          long row = monomial_index(D, te[0] + me[0], te[1] + me[1]);
          m.set(static_cast<size_t>(row), col, tv);
        }
      }
    }
    return true;
  }

  /// Assemble (a,b,c) from a flat coefficient vector over the field.
  std::array<MultiPoly, 3> witness_from_vector(const std::vector<FieldElement>& v) const {
    long mono = monomial_count(r_);
    std::array<MultiPoly, 3> out{MultiPoly(field_), MultiPoly(field_), MultiPoly(field_)};
    for (int b = 0; b < 3; ++b)
      for (long mi = 0; mi < mono; ++mi) {
        const FieldElement& c = v[static_cast<size_t>(b) * mono + mi];
        if (!c.is_zero()) out[b].add_term(monomial_at(r_, mi), c);
      }
    return out;
  }

  /// Exact check of a*f_x + b*f_y + c*f_z = 0 with dense accumulation.
  bool verify(const std::array<MultiPoly, 3>& triple) const {
    const int D = r_ + d_ - 1;
    bool any = false;
    std::vector<FieldElement> acc(monomial_count(D), FieldElement::zero(field_));
    for (int b = 0; b < 3; ++b) {
      if (triple[b].is_zero()) continue;
      if (triple[b].degree() != r_ || !triple[b].is_homogeneous()) return false;
      any = true;
      for (const auto& [ea, ca] : triple[b].terms())
        for (const auto& [et, ct] : partials_[b].terms()) {
          long row = monomial_index(D, ea[0] + et[0], ea[1] + et[1]);
          acc[static_cast<size_t>(row)] += ca * ct;
        }
    }
    if (!any) return false;
    for (const auto& c : acc)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  FieldPtr field_;
  int d_, r_;
  long rows_ = 0, cols_ = 0;
  std::array<MultiPoly, 3> partials_;
};

// ---------------------------------------------------------------------------

struct DegreeProbe {
  int r = -1;
  bool empty = false;                // no syzygy in this degree (certified)
  int kernel_dim_mod_p = 0;
  std::vector<uint64_t> primes;
};

struct MdrResult {
  int r = -1;  // -1: no syzygy found up to the bound (Undetermined)
  bool exact = false;
  std::optional<SyzygyWitness> witness;
  int kernel_dim_mod_p = 0;
  std::vector<DegreeProbe> probes;       // per-degree scan record
  std::vector<uint64_t> witness_primes;  // primes behind the reconstruction
  std::string note;
};

namespace detail {

/// Reconstruct and exactly verify one kernel vector of the degree-r syzygy
/// system.  Returns nullopt when the kernel turns out to be empty over the
/// field (a bad-prime artifact of the scan).
inline std::optional<SyzygyWitness> exact_witness(const SyzygySystem& sys, int r,
                                                  std::vector<uint64_t>& primes_out,
                                                  int max_primes = 400) {
  modp::KernelReconstructor rec(sys.fill_fn(), sys.rows(), sys.cols(), sys.field());
  modp::PrimeSequence seq;
  std::optional<std::vector<std::vector<FieldElement>>> prev;
  for (int step = 0; step < max_primes; ++step) {
    auto st = rec.step(seq);
    if (st == modp::KernelReconstructor::Status::KernelIsEmpty) return std::nullopt;
    if (st == modp::KernelReconstructor::Status::PrimeSkipped) continue;
    auto cand = rec.candidate();
    if (!cand) {
      prev.reset();
      continue;
    }
    bool stable = prev && *prev == *cand;
    bool small = sys.cols() <= 200;
    if (stable || small) {
      auto triple = sys.witness_from_vector((*cand)[0]);
      if (sys.verify(triple)) {
        primes_out = rec.primes_used();
        return SyzygyWitness{r, triple};
      }
    }
    prev = std::move(cand);
  }
  throw ReconstructionFailed("syzygy witness at degree " + std::to_string(r) +
                             " did not stabilize");
}

}  // namespace detail

/// Minimal degree of a Jacobian relation, searched from below.  Each degree
/// is first cleared by a single-prime full-rank probe (already conclusive
/// over the field); the last empty degree is re-certified with a second
/// prime.  At the first deficient degree the kernel is reconstructed from
/// totally split primes and the witness is verified exactly, unless
/// modular_only is set.
inline MdrResult mdr(const CurveSpec& curve, int bound, bool modular_only = false) {
  MdrResult out;
  modp::PrimeSequence seq;
  int first_deficient = -1;
  for (int r = 0; r <= bound; ++r) {
    SyzygySystem sys(curve, r);
    auto probe = modp::probe_full_column_rank(sys.fill_fn(), sys.rows(), sys.cols(),
                                              *curve.field, seq, /*confirmations=*/1);
    DegreeProbe dp;
    dp.r = r;
    dp.empty = probe.full_column_rank;
    dp.kernel_dim_mod_p = probe.kernel_dim_mod_p;
    dp.primes = probe.primes;
    out.probes.push_back(dp);
    if (!probe.full_column_rank) {
      first_deficient = r;
      break;
    }
  }
  auto recertify = [&](int r) {
    if (r < 0) return;
    SyzygySystem sys(curve, r);
    auto probe = modp::probe_full_column_rank(sys.fill_fn(), sys.rows(), sys.cols(),
                                              *curve.field, seq, /*confirmations=*/2);
    for (auto& dp : out.probes)
      if (dp.r == r) {
        dp.empty = probe.full_column_rank;
        for (uint64_t p : probe.primes)
          if (std::find(dp.primes.begin(), dp.primes.end(), p) == dp.primes.end())
            dp.primes.push_back(p);
      }
  };

  while (true) {
    if (first_deficient < 0) {
      recertify(bound);
      out.note = "no syzygy up to degree " + std::to_string(bound);
      return out;  // r = -1: Undetermined within the bound
    }
    recertify(first_deficient - 1);
    SyzygySystem sys(curve, first_deficient);
    out.kernel_dim_mod_p = out.probes.back().kernel_dim_mod_p;
    if (modular_only) {
      out.r = first_deficient;
      out.exact = false;
      out.note = "modular probe only; witness not reconstructed";
      return out;
    }
    auto witness = detail::exact_witness(sys, first_deficient, out.witness_primes);
    if (witness) {
      out.r = first_deficient;
      out.exact = true;
      out.witness = std::move(witness);
      return out;
    }
    // The scan prime lied: the kernel at first_deficient is empty over the
    // field.  Record and continue scanning upward.
    out.probes.back().empty = true;
    int r = first_deficient + 1;
    first_deficient = -1;
    for (; r <= bound; ++r) {
      SyzygySystem s2(curve, r);
      auto probe = modp::probe_full_column_rank(s2.fill_fn(), s2.rows(), s2.cols(),
                                                *curve.field, seq, 1);
      DegreeProbe dp;
      dp.r = r;
      dp.empty = probe.full_column_rank;
      dp.kernel_dim_mod_p = probe.kernel_dim_mod_p;
      dp.primes = probe.primes;
      out.probes.push_back(dp);
      if (!probe.full_column_rank) {
        first_deficient = r;
        break;
      }
    }
  }
}

/// Exact dimension of the degree-r graded piece of the syzygy module:
/// upper bound from the modular kernel, lower bound from an exactly verified
/// reconstructed basis.
inline int syzygy_space_dim(const CurveSpec& curve, int r) {
  if (r < 0 || r > curve.d - 1)
    throw std::invalid_argument("syzygy_space_dim: degree out of range");
  SyzygySystem sys(curve, r);
  modp::PrimeSequence seq;
  auto probe = modp::probe_full_column_rank(sys.fill_fn(), sys.rows(), sys.cols(),
                                            *curve.field, seq, 2);
  if (probe.full_column_rank) return 0;
  modp::KernelReconstructor rec(sys.fill_fn(), sys.rows(), sys.cols(), sys.field());
  modp::PrimeSequence seq2;
  std::optional<std::vector<std::vector<FieldElement>>> prev;
  for (int step = 0; step < 400; ++step) {
    auto st = rec.step(seq2);
    if (st == modp::KernelReconstructor::Status::KernelIsEmpty) return 0;
    if (st == modp::KernelReconstructor::Status::PrimeSkipped) continue;
    auto cand = rec.candidate();
    if (!cand) {
      prev.reset();
      continue;
    }
    bool stable = prev && *prev == *cand;
    if (stable || sys.cols() <= 200) {
      bool all_ok = true;
      for (const auto& v : *cand)
        if (!sys.verify(sys.witness_from_vector(v))) {
          all_ok = false;
          break;
        }
      // basis vectors are in reduced normal form, hence independent; together
      // with dim <= modular dim this pins the dimension exactly
      if (all_ok) return static_cast<int>(cand->size());
    }
    prev = std::move(cand);
  }
  throw ReconstructionFailed("syzygy space basis at degree " + std::to_string(r) +
                             " did not stabilize");
}

// ---------------------------------------------------------------------------

/// Total Tjurina number of an arrangement with ordinary singularities:
/// tau = sum over points of (multiplicity - 1)^2.
inline long tjurina_from_nk(const std::map<int, long>& nk) {
  long tau = 0;
  for (const auto& [k, c] : nk) tau += c * static_cast<long>(k - 1) * (k - 1);
  return tau;
}

inline long tjurina_total(const LatticeSummary& lat) { return tjurina_from_nk(lat.nk); }

enum class Freeness { Free, NotFree, Undetermined };

inline const char* to_string(Freeness v) {
  switch (v) {
    case Freeness::Free: return "Free";
    case Freeness::NotFree: return "NotFree";
    default: return "Undetermined";
  }
}

struct FreenessCertificate {
  int d = 0;
  int d1 = -1, d2 = -1;
  long tau = -1;
  Freeness verdict = Freeness::Undetermined;
  bool exact = false;  // witness verified exactly (or emptiness fully certified)
  std::optional<SyzygyWitness> witness;
  std::vector<uint64_t> primes_used;
  std::string note;
  MdrResult mdr_result;
};

/// Maximal total Tjurina number for a curve of degree d with mdr r (valid for
/// r <= (d-1)/2); freeness is equivalent to attaining it.
inline long tau_max(int d, int r) {
  return static_cast<long>(d - 1) * (d - 1) - static_cast<long>(r) * (d - 1 - r);
}

/// Freeness via the minimal-degree-relation + Tjurina-maximality criterion.
/// A free curve has d1 <= (d-1)/2, so a certified empty search up to that
/// bound already decides NotFree; when a minimal relation of degree d1 is in
/// hand, the verdict is Free exactly when tau = (d-1)^2 - d1(d-1-d1).
inline FreenessCertificate freeness_certificate(const CurveSpec& curve, long tau,
                                                bool modular_only = false) {
  FreenessCertificate cert;
  cert.d = curve.d;
  cert.tau = tau;
  int bound = (curve.d - 1) / 2;
  MdrResult m = mdr(curve, bound, modular_only);
  cert.mdr_result = m;
  for (const auto& dp : m.probes)
    for (uint64_t p : dp.primes) cert.primes_used.push_back(p);
  for (uint64_t p : m.witness_primes) cert.primes_used.push_back(p);
  if (m.r < 0) {
    cert.verdict = Freeness::NotFree;
    cert.exact = true;  // emptiness up to the bound is a certified claim
    cert.note = "no Jacobian relation of degree <= (d-1)/2 = " + std::to_string(bound);
    return cert;
  }
  cert.d1 = m.r;
  cert.d2 = curve.d - 1 - m.r;
  cert.exact = m.exact;
  cert.witness = m.witness;
  long tmax = tau_max(curve.d, cert.d1);
  if (tau == tmax) {
    cert.verdict = Freeness::Free;
    if (!m.exact)
      cert.note = "d1 from modular probe; relation not reconstructed exactly";
  } else if (tau < tmax) {
    cert.verdict = Freeness::NotFree;
    cert.note = "tau = " + std::to_string(tau) + " < tau_max(d, d1) = " +
                std::to_string(tmax);
  } else {
    cert.verdict = Freeness::Undetermined;
    cert.note = "tau exceeds tau_max(d, d1); input data inconsistent";
  }
  return cert;
}

}  // namespace plarr

#endif  // PLARR_FREENESS_HPP
