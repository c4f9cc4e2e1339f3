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

#ifndef PLARR_MULTIPOLY_HPP
#define PLARR_MULTIPOLY_HPP

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plarr/errors.hpp"
#include "plarr/numberfield.hpp"

namespace plarr {

using Exponents = std::array<int, 3>;  // (i, j, k) for x^i y^j z^k

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

/// Sparse polynomial in x, y, z over a NumberField.  No zero coefficients are
/// ever stored; term order is lexicographic on exponent triples, which makes
/// iteration (and hence printing and hashing) deterministic.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, FieldElement>;

  MultiPoly() = default;
  explicit MultiPoly(FieldPtr field) : field_(std::move(field)) {}

  static MultiPoly zero(const FieldPtr& f) { return MultiPoly(f); }

  static MultiPoly constant(const FieldPtr& f, const FieldElement& c) {
    MultiPoly p(f);
    p.add_term({0, 0, 0}, c);
    return p;
  }

  static MultiPoly monomial(const FieldPtr& f, const Exponents& e, const FieldElement& c) {
    MultiPoly p(f);
    p.add_term(e, c);
    return p;
  }

  /// a*x + b*y + c*z
  static MultiPoly linear_form(const std::array<FieldElement, 3>& abc) {
    MultiPoly p(abc[0].field());
    p.add_term({1, 0, 0}, abc[0]);
    p.add_term({0, 1, 0}, abc[1]);
    p.add_term({0, 0, 1}, abc[2]);
    return p;
  }

  /// Conic from coefficients of (x^2, xy, xz, y^2, yz, z^2).
  static MultiPoly conic_form(const std::array<FieldElement, 6>& c) {
    MultiPoly p(c[0].field());
    static const Exponents mons[6] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                      {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    for (int i = 0; i < 6; ++i) p.add_term(mons[i], c[i]);
    return p;
  }

  const FieldPtr& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  void add_term(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FieldElement coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement::zero(field_);
    return it->second;
  }

  MultiPoly operator-() const {
    MultiPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_field(field_, o.field_, "poly add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_field(field_, o.field_, "poly sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_field(a.field_, b.field_, "poly mul");
    MultiPoly r(a.field_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const FieldElement& c) const {
    MultiPoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
  }

  /// Partial derivative with respect to variable 0=x, 1=y, 2=z.
  MultiPoly partial(int var) const {
    MultiPoly r(field_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      r.add_term(d, c.scaled(Rational(e[var])));
    }
    return r;
  }

  FieldElement eval(const std::array<FieldElement, 3>& p) const {
    // power caches per variable
    int d = degree();
    if (d < 0) return FieldElement::zero(field_);
    std::array<std::vector<FieldElement>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].resize(d + 1, FieldElement::one(field_));
      for (int i = 1; i <= d; ++i) pw[v][i] = pw[v][i - 1] * p[v];
    }
    FieldElement acc = FieldElement::zero(field_);
    for (const auto& [e, c] : terms_)
      acc += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    require_same_field(a.field_, b.field_, "poly eq");
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// True when a == c*b for some nonzero field scalar c.
  static bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    FieldElement ratio = ia->second / ib->second;
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (!(ia->second == ib->second * ratio)) return false;
    }
    return true;
  }

  /// Exact quotient; throws InexactDivision when the divisor does not divide.
  MultiPoly exact_divide(const MultiPoly& g) const {
    require_same_field(field_, g.field_, "exact_divide");
    if (g.is_zero()) throw DivisionByZero("exact_divide by zero polynomial");
    MultiPoly q(field_);
    MultiPoly rem = *this;
    const auto glead = g.terms_.rbegin();  // largest exponent (lex)
    while (!rem.is_zero()) {
      const auto rlead = rem.terms_.rbegin();
      Exponents e;
      for (int v = 0; v < 3; ++v) {
        e[v] = rlead->first[v] - glead->first[v];
        if (e[v] < 0)
          throw InexactDivision("leading term not divisible; nonzero remainder");
      }
      FieldElement c = rlead->second / glead->second;
      q.add_term(e, c);
      MultiPoly t = MultiPoly::monomial(field_, e, c);
      rem -= t * g;
    }
    return q;
  }

  /// Coefficients of x^a y^b z^c as a univariate polynomial in `var`,
  /// ascending degree; entries are polynomials in the other two variables.
  std::vector<MultiPoly> coefficients_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(field_));
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      int k = r[var];
      r[var] = 0;
      out[k].add_term(r, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
  }

  /// Coefficients of f(s*p0 + t*p1) as a binary form in (s, t), ascending in
  /// t: result[j] multiplies s^(d-j) t^j.  The input must be homogeneous.
  std::vector<FieldElement> restrict_to_line(const std::array<FieldElement, 3>& p0,
                                             const std::array<FieldElement, 3>& p1) const {
    int d = degree();
    std::vector<FieldElement> out(static_cast<size_t>(d) + 1, FieldElement::zero(field_));
    // per-variable binary powers
    std::array<std::vector<std::vector<FieldElement>>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].resize(d + 1);
      pw[v][0] = {FieldElement::one(field_)};
      std::vector<FieldElement> lin{p0[v], p1[v]};
      for (int i = 1; i <= d; ++i) pw[v][i] = binary_mul(pw[v][i - 1], lin);
    }
    for (const auto& [e, c] : terms_) {
      std::vector<FieldElement> term = binary_mul(binary_mul(pw[0][e[0]], pw[1][e[1]]), pw[2][e[2]]);
      for (size_t j = 0; j < term.size(); ++j) out[j] += term[j] * c;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print biggest monomials first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second.str() << ")";
      static const char* names[3] = {"x", "y", "z"};
      for (int v = 0; v < 3; ++v) {
        if (it->first[v] == 0) continue;
        os << "*" << names[v];
        if (it->first[v] > 1) os << "^" << it->first[v];
      }
    }
    return os.str();
  }

 private:
  static std::vector<FieldElement> binary_mul(const std::vector<FieldElement>& a,
                                              const std::vector<FieldElement>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<FieldElement> c(a.size() + b.size() - 1,
                                FieldElement::zero(a.empty() ? nullptr : a[0].field()));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        c[i + j] += a[i] * b[j];
      }
    }
    return c;
  }

  FieldPtr field_;
  TermMap terms_;
};

/// Determinant of a small square matrix of polynomials by Laplace expansion.
inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, const FieldPtr& field) {
  size_t n = m.size();
  if (n == 0) return MultiPoly::constant(field, FieldElement::one(field));
  if (n == 1) return m[0][0];
  MultiPoly acc(field);
  // expand along the first row
  std::vector<std::vector<MultiPoly>> sub(n - 1, std::vector<MultiPoly>(n - 1, MultiPoly(field)));
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        sub[i - 1][jj++] = m[i][j];
      }
    }
    MultiPoly term = m[0][c] * poly_det(sub, field);
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

inline MultiPoly power(const MultiPoly& p, int e) {
  MultiPoly acc = MultiPoly::constant(p.field(), FieldElement::one(p.field()));
  for (int i = 0; i < e; ++i) acc *= p;
  return acc;
}

/// Sylvester resultant of f and g with respect to `var` (0=x,1=y,2=z).
/// Rows hold ascending coefficient lists, matching the classical matrix up to
/// the usual sign conventions.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  require_same_field(f.field(), g.field(), "resultant");
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant of a zero polynomial");
  const FieldPtr& field = f.field();
  std::vector<MultiPoly> fc = f.coefficients_in(var);
  std::vector<MultiPoly> gc = g.coefficients_in(var);
  int m = static_cast<int>(fc.size()) - 1;
  int n = static_cast<int>(gc.size()) - 1;
  if (m == 0 && n == 0)
    return MultiPoly::constant(field, FieldElement::one(field));
  if (m == 0) return power(fc[0], n);
  if (n == 0) return power(gc[0], m);
  int size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(field)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = fc[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = gc[j];
  return poly_det(s, field);
}

}  // namespace plarr

#endif  // PLARR_MULTIPOLY_HPP
