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

#ifndef PLARR_PROJGEOM_HPP
#define PLARR_PROJGEOM_HPP

#include <array>
#include <string>

#include "plarr/errors.hpp"
#include "plarr/numberfield.hpp"

namespace plarr {

namespace detail {

/// Canonical form of a homogeneous coordinate triple: divide through by the
/// first nonzero entry, so that entry becomes 1.  Equality of normalized
/// triples is then exact projective equality.
inline std::array<FieldElement, 3> normalize_triple(std::array<FieldElement, 3> v,
                                                    const char* what) {
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_zero()) {
      FieldElement inv = v[i].inverse();
      for (int j = 0; j < 3; ++j) v[j] = v[j] * inv;
      return v;
    }
  }
  throw std::invalid_argument(std::string(what) + ": all coordinates are zero");
}

inline std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& a,
                                         const std::array<FieldElement, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline int cmp_triple(const std::array<FieldElement, 3>& a,
                      const std::array<FieldElement, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace detail

class ProjLine;

/// A point of the projective plane in canonical coordinates (first nonzero
/// coordinate equals 1).
class ProjPoint {
 public:
  ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z)
      : c_(detail::normalize_triple({x, y, z}, "ProjPoint")) {}
  explicit ProjPoint(std::array<FieldElement, 3> v)
      : c_(detail::normalize_triple(std::move(v), "ProjPoint")) {}

  const std::array<FieldElement, 3>& coords() const { return c_; }
  const FieldPtr& field() const { return c_[0].field(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return detail::cmp_triple(a.c_, b.c_) == 0;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return detail::cmp_triple(a.c_, b.c_) < 0;
  }

  std::string str() const {
    return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
  }

 private:
  std::array<FieldElement, 3> c_;
};

/// A line a*x + b*y + c*z = 0 in canonical coefficients (first nonzero equals 1).
class ProjLine {
 public:
  ProjLine(const FieldElement& a, const FieldElement& b, const FieldElement& c)
      : c_(detail::normalize_triple({a, b, c}, "ProjLine")) {}
  explicit ProjLine(std::array<FieldElement, 3> v)
      : c_(detail::normalize_triple(std::move(v), "ProjLine")) {}

  const std::array<FieldElement, 3>& coeffs() const { return c_; }
  const FieldPtr& field() const { return c_[0].field(); }

  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return detail::cmp_triple(a.c_, b.c_) == 0;
  }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
  friend bool operator<(const ProjLine& a, const ProjLine& b) {
    return detail::cmp_triple(a.c_, b.c_) < 0;
  }

  std::string str() const {
    return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
  }

 private:
  std::array<FieldElement, 3> c_;
};

/// Duality: the line ax+by+cz=0 maps to the point (a:b:c) and back.
inline ProjPoint dualize(const ProjLine& l) { return ProjPoint(l.coeffs()); }
inline ProjLine dualize(const ProjPoint& p) { return ProjLine(p.coords()); }

inline ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  require_same_field(l1.field(), l2.field(), "meet");
  auto v = detail::cross(l1.coeffs(), l2.coeffs());
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    throw ProportionalInputs("meet: lines coincide");
  return ProjPoint(std::move(v));
}

inline ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
  require_same_field(p1.field(), p2.field(), "join");
  auto v = detail::cross(p1.coords(), p2.coords());
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    throw ProportionalInputs("join: points coincide");
  return ProjLine(std::move(v));
}

inline bool incident(const ProjPoint& p, const ProjLine& l) {
  require_same_field(p.field(), l.field(), "incident");
  FieldElement s = l.coeffs()[0] * p.coords()[0];
  s += l.coeffs()[1] * p.coords()[1];
  s += l.coeffs()[2] * p.coords()[2];
  return s.is_zero();
}

}  // namespace plarr

#endif  // PLARR_PROJGEOM_HPP
