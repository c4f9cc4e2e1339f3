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

#ifndef PLARR_NUMBERFIELD_HPP
#define PLARR_NUMBERFIELD_HPP

#include <algorithm>
#include <cassert>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "plarr/errors.hpp"
#include "plarr/rational.hpp"

namespace plarr {

/// A number field Q[t]/(p(t)) with p monic of degree g >= 1.  Degree 1 is Q
/// itself (elements are plain rationals).  Irreducibility of p is not checked
/// up front; a reducible p is detected when an inversion runs into a
/// nontrivial gcd with it.
class NumberField {
 public:
  NumberField(std::string label, std::vector<Rational> minpoly, int conductor = 0)
      : label_(std::move(label)), minpoly_(std::move(minpoly)), conductor_(conductor) {
    if (minpoly_.size() < 2) throw std::invalid_argument("minpoly degree must be >= 1");
    if (minpoly_.back() != 1) throw std::invalid_argument("minpoly must be monic");
    build_reduction_rows();
  }

  const std::string& label() const { return label_; }
  /// Coefficients of the minimal polynomial, constant term first, length g+1.
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  /// Nonzero when the field is known to be the cyclotomic field of this
  /// conductor (generator = a primitive root of unity of that order).
  int cyclotomic_conductor() const { return conductor_; }

  /// t^(g+k) mod p(t) for k in [0, g-2], as coefficient rows of length g.
  const std::vector<std::vector<Rational>>& reduction_rows() const { return reduction_rows_; }

  bool same_as(const NumberField& other) const {
    if (this == &other) return true;
    return degree() == other.degree() &&
           compare_vectors(minpoly_, other.minpoly_) == 0;
  }

 private:
  void build_reduction_rows() {
    int g = degree();
    // row for t^g: -(p - t^g)
    std::vector<Rational> row(g);
    for (int i = 0; i < g; ++i) row[i] = -minpoly_[i];
    reduction_rows_.push_back(row);
    for (int k = 1; k <= g - 2; ++k) {
      // multiply previous row by t and reduce the overflow term
      std::vector<Rational> next(g);
      const auto& prev = reduction_rows_.back();
      Rational carry = prev[g - 1];
      for (int i = g - 1; i >= 1; --i) next[i] = prev[i - 1];
      next[0] = 0;
      const auto& tg = reduction_rows_.front();
      for (int i = 0; i < g; ++i) next[i] += carry * tg[i];
      reduction_rows_.push_back(next);
    }
  }

  std::string label_;
  std::vector<Rational> minpoly_;
  int conductor_ = 0;
  std::vector<std::vector<Rational>> reduction_rows_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b))
    throw FieldMismatch(std::string(where) + ": operands live in different fields");
}

/// An element of a NumberField, stored as g rational coefficients of the
/// powers 1, t, ..., t^(g-1).  Always in canonical form: reduced modulo the
/// minimal polynomial, rationals in lowest terms with positive denominators
/// (mpq_class keeps that automatically).
class FieldElement {
 public:
  FieldElement() = default;

  FieldElement(FieldPtr field, std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(field_->degree());
  }

  static FieldElement zero(const FieldPtr& f) {
    return FieldElement(f, std::vector<Rational>(f->degree()));
  }
  static FieldElement one(const FieldPtr& f) {
    std::vector<Rational> c(f->degree());
    c[0] = 1;
    return FieldElement(f, c);
  }
  static FieldElement from_rational(const FieldPtr& f, const Rational& q) {
    std::vector<Rational> c(f->degree());
    c[0] = q;
    return FieldElement(f, c);
  }
  /// The residue class of t (the field generator).  Requires degree >= 2.
  static FieldElement generator(const FieldPtr& f) {
    if (f->degree() < 2)
      throw std::invalid_argument("generator: field has degree 1");
    std::vector<Rational> c(f->degree());
    c[1] = 1;
    return FieldElement(f, c);
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sign(c) != 0) return false;
    return true;
  }
  bool is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (sign(coeffs_[i]) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (sign(coeffs_[i]) != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return coeffs_[0]; }

  FieldElement operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return FieldElement(field_, std::move(c));
  }

  FieldElement& operator+=(const FieldElement& o) {
    require_same_field(field_, o.field_, "add");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    require_same_field(field_, o.field_, "sub");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "mul");
    int g = a.field_->degree();
    if (g == 1) {
      std::vector<Rational> c{a.coeffs_[0] * b.coeffs_[0]};
      return FieldElement(a.field_, std::move(c));
    }
    std::vector<Rational> prod(2 * g - 1);
    for (int i = 0; i < g; ++i) {
      if (sign(a.coeffs_[i]) == 0) continue;
      for (int j = 0; j < g; ++j) {
        if (sign(b.coeffs_[j]) == 0) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + g);
    const auto& rows = a.field_->reduction_rows();
    for (int k = g; k < 2 * g - 1; ++k) {
      if (sign(prod[k]) == 0) continue;
      const auto& row = rows[k - g];
      for (int i = 0; i < g; ++i) out[i] += prod[k] * row[i];
    }
    return FieldElement(a.field_, std::move(out));
  }

  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement scaled(const Rational& q) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * q;
    return FieldElement(field_, std::move(c));
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// minimal polynomial.  A nonzero element sharing a nontrivial gcd with the
  /// minimal polynomial exposes a reducible modulus.
  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->label());
    int g = field_->degree();
    if (g == 1) {
      std::vector<Rational> c{Rational(1) / coeffs_[0]};
      return FieldElement(field_, std::move(c));
    }
    // extended gcd of (minpoly, this) in Q[t]
    std::vector<Rational> r0 = field_->minpoly();
    std::vector<Rational> r1 = trim(coeffs_);
    std::vector<Rational> s0, s1{Rational(1)};  // coefficients of `this`
    while (!r1.empty()) {
      auto [q, rem] = poly_divmod(r0, r1);
      r0.swap(r1);
      r1 = rem;
      std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
      s0.swap(s1);
      s1 = s2;
    }
    if (r0.size() != 1) {
      std::ostringstream os;
      os << "gcd with minimal polynomial of " << field_->label()
         << " has degree " << (r0.size() - 1) << "; modulus is reducible";
      throw ReducibleMinpoly(os.str());
    }
    Rational lead = r0[0];
    std::vector<Rational> inv(g);
    for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(g); ++i)
      inv[i] = s0[i] / lead;
    return FieldElement(field_, std::move(inv));
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  FieldElement pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this, acc = FieldElement::one(field_);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Image under the field endomorphism sending the generator to gen_image.
  FieldElement substitute_generator(const FieldElement& gen_image) const {
    FieldElement acc = FieldElement::from_rational(gen_image.field(), coeffs_[0]);
    FieldElement p = FieldElement::one(gen_image.field());
    for (size_t i = 1; i < coeffs_.size(); ++i) {
      p *= gen_image;
      if (sign(coeffs_[i]) != 0) acc += p.scaled(coeffs_[i]);
    }
    return acc;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "eq");
    return compare_vectors(a.coeffs_, b.coeffs_) == 0;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order used for deterministic output: lexicographic on coefficients.
  friend int cmp(const FieldElement& a, const FieldElement& b) {
    return compare_vectors(a.coeffs_, b.coeffs_);
  }

  std::string str() const {
    // pretty form in the generator letter taken from the field label, e.g.
    // "Q(e)" -> e; plain "Q" -> rational.
    char gen = 't';
    const std::string& l = field_->label();
    auto lp = l.find('(');
    if (lp != std::string::npos && lp + 1 < l.size()) gen = l[lp + 1];
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (sign(coeffs_[i]) == 0) continue;
      Rational c = coeffs_[i];
      if (!first) {
        os << (sign(c) > 0 ? "+" : "-");
        if (sign(c) < 0) c = -c;
      }
      first = false;
      bool unit = (c == 1) && i > 0;
      if (!unit) os << c.get_str();
      if (i >= 1) {
        if (!unit) os << "*";
        os << gen;
        if (i >= 2) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static std::vector<Rational> trim(std::vector<Rational> v) {
    while (!v.empty() && sign(v.back()) == 0) v.pop_back();
    return v;
  }
  static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
      std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      size_t shift = a.size() - b.size();
      q[shift] = f;
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      a = trim(std::move(a));
      if (a.size() < b.size()) break;
    }
    return {trim(std::move(q)), std::move(a)};
  }
  static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return trim(std::move(c));
  }
  static std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    std::vector<Rational> c = a;
    if (c.size() < b.size()) c.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return trim(std::move(c));
  }

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Built-in field registry.

namespace fields {

inline FieldPtr rationals() {
  static FieldPtr f = std::make_shared<NumberField>(
      "Q", std::vector<Rational>{Rational(0), Rational(1)}, 1);
  return f;
}

/// Q(e) with e^2 + e + 1 = 0 (primitive cube root of unity).
inline FieldPtr eisenstein() {
  static FieldPtr f = std::make_shared<NumberField>(
      "Q(e)", std::vector<Rational>{Rational(1), Rational(1), Rational(1)}, 3);
  return f;
}

/// Q(r) with r^2 = 2.
inline FieldPtr sqrt2() {
  static FieldPtr f = std::make_shared<NumberField>(
      "Q(r)", std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
  return f;
}

inline FieldPtr sqrt3() {
  static FieldPtr f = std::make_shared<NumberField>(
      "Q(s)", std::vector<Rational>{Rational(-3), Rational(0), Rational(1)});
  return f;
}

inline FieldPtr sqrt5() {
  static FieldPtr f = std::make_shared<NumberField>(
      "Q(u)", std::vector<Rational>{Rational(-5), Rational(0), Rational(1)});
  return f;
}

/// Q(zeta_n) for conductor n in {12, 16, 20, 24}: the degree-4 field needed
/// by the conic-line lattice and the degree-8 fields behind the n-gon
/// generators.
inline FieldPtr cyclotomic(int n) {
  auto make = [](const char* label, std::vector<int> coeffs, int cond) {
    std::vector<Rational> p;
    p.reserve(coeffs.size());
    for (int c : coeffs) p.emplace_back(c);
    return std::make_shared<NumberField>(label, std::move(p), cond);
  };
  switch (n) {
    case 12: {  // t^4 - t^2 + 1
      static FieldPtr f = make("Q(w)", {1, 0, -1, 0, 1}, 12);
      return f;
    }
    case 16: {  // t^8 + 1
      static FieldPtr f = make("Q(z)", {1, 0, 0, 0, 0, 0, 0, 0, 1}, 16);
      return f;
    }
    case 20: {  // t^8 - t^6 + t^4 - t^2 + 1
      static FieldPtr f = make("Q(z)", {1, 0, -1, 0, 1, 0, -1, 0, 1}, 20);
      return f;
    }
    case 24: {  // t^8 - t^4 + 1
      static FieldPtr f = make("Q(z)", {1, 0, 0, 0, -1, 0, 0, 0, 1}, 24);
      return f;
    }
    default:
      throw UnsupportedN("no built-in cyclotomic field of conductor " +
                         std::to_string(n));
  }
}

/// Look up a built-in field by label; returns nullptr when unknown.
inline FieldPtr by_label(const std::string& label) {
  if (label == "Q") return rationals();
  if (label == "Q(e)") return eisenstein();
  if (label == "Q(r)") return sqrt2();
  if (label == "Q(s)") return sqrt3();
  if (label == "Q(u)") return sqrt5();
  return nullptr;
}

}  // namespace fields

}  // namespace plarr

#endif  // PLARR_NUMBERFIELD_HPP
