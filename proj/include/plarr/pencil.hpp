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

#ifndef PLARR_PENCIL_HPP
#define PLARR_PENCIL_HPP

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "plarr/freeness.hpp"
#include "plarr/kmatrix.hpp"
#include "plarr/projgeom.hpp"

namespace plarr {

// ---------------------------------------------------------------------------
// Square roots inside the field: rational square roots, the generic method
// for degree-2 fields, and Gauss-sum constructions for rational radicands in
// cyclotomic fields (the conic-line lattice of the pencil fixture needs i and
// sqrt(3) inside Q(zeta_12)).

namespace detail {

/// sqrt of a rational inside a cyclotomic field of known conductor, via
/// quadratic Gauss sums; the result is verified exactly, so failures are
/// honest "not representable or not recognized" answers.
inline std::optional<FieldElement> sqrt_of_rational_in_cyclotomic(const Rational& D,
                                                                  const FieldPtr& F) {
  int n = F->cyclotomic_conductor();
  if (n <= 1) return std::nullopt;
  if (sign(D) == 0) return FieldElement::zero(F);
  // D = (num*den) / den^2; split M = num*den into q^2 * m with m squarefree
  Integer M = Integer(D.get_num()) * Integer(D.get_den());
  Integer q = 1;
  Integer A = abs(M);
  std::vector<long> odd_primes;
  bool has_two = false;
  for (long p = 2; p * p <= A && p < 1000000; ++p) {
    if (A % p != 0) continue;
    int e = 0;
    while (A % p == 0) {
      A /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) q *= p;
    if (e % 2 == 1) {
      if (p == 2)
        has_two = true;
      else
        odd_primes.push_back(p);
    }
  }
  if (A > 1) {
    if (mpz_perfect_square_p(A.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), A.get_mpz_t());
      q *= s;
    } else if (A.fits_slong_p() && mpz_probab_prime_p(A.get_mpz_t(), 30)) {
      odd_primes.push_back(A.get_si());
    } else {
      return std::nullopt;  // cannot certify the squarefree part
    }
  }
  FieldElement zeta = FieldElement::generator(F);
  FieldElement w = FieldElement::one(F);
  Integer cur = 1;  // the rational square of w, maintained alongside
  for (long p : odd_primes) {
    if (n % p != 0) return std::nullopt;  // sqrt(+-p) needs zeta_p
    FieldElement zp = zeta.pow(n / p);
    FieldElement gauss = FieldElement::zero(F);
    for (long k = 1; k < p; ++k) {
      long sym = 1;
      {
        // Legendre symbol k^((p-1)/2) mod p
        long r = 1, b = k % p, e = (p - 1) / 2;
        while (e) {
          if (e & 1) r = (r * b) % p;
          b = (b * b) % p;
          e >>= 1;
        }
        sym = (r == 1) ? 1 : -1;
      }
      FieldElement term = zp.pow(k);
      gauss += (sym > 0 ? term : -term);
    }
    w *= gauss;
    cur *= (p % 4 == 1) ? Integer(p) : Integer(-p);
  }
  if (has_two) {
    if (n % 8 != 0) return std::nullopt;
    FieldElement z8 = zeta.pow(n / 8);
    w *= z8 + z8.inverse();  // sqrt(2)
    cur *= 2;
  }
  Integer want = M / (q * q);  // the signed squarefree part
  if (cur != want) {
    if (cur != -want || n % 4 != 0) return std::nullopt;
    w *= zeta.pow(n / 4);  // multiply by i
  }
  // w^2 = m up to the verified sign; assemble sqrt(D) = w * q / den
  Rational scale(q, Integer(D.get_den()));
  scale.canonicalize();
  FieldElement out = w.scaled(scale);
  if (out * out == FieldElement::from_rational(F, D)) return out;
  return std::nullopt;
}

}  // namespace detail

inline std::optional<FieldElement> sqrt_in_field(const FieldElement& D) {
  const FieldPtr& F = D.field();
  int g = F->degree();
  if (D.is_zero()) return FieldElement::zero(F);
  if (g == 1) {
    auto r = rational_sqrt(D.coeffs()[0]);
    if (!r) return std::nullopt;
    return FieldElement::from_rational(F, *r);
  }
  if (D.is_rational() && F->cyclotomic_conductor() > 1) {
    auto w = detail::sqrt_of_rational_in_cyclotomic(D.rational_part(), F);
    if (w) return w;
    if (g != 2) return std::nullopt;
  }
  if (g != 2) return std::nullopt;
  // theta^2 = -beta*theta - gamma; try W = s + u*theta:
  // W^2 = (s^2 - gamma u^2) + (2su - beta u^2) theta
  const Rational beta = F->minpoly()[1];
  const Rational gamma = F->minpoly()[0];
  const Rational D0 = D.coeffs()[0], D1 = D.coeffs()[1];
  auto check = [&](const Rational& s, const Rational& u) -> std::optional<FieldElement> {
    FieldElement W(F, {s, u});
    if (W * W == D) return W;
    return std::nullopt;
  };
  if (sign(D1) == 0) {
    auto s = rational_sqrt(D0);
    if (s) return check(*s, Rational(0));
  }
  // (beta^2 - 4 gamma) u^4 + (2 beta D1 - 4 D0) u^2 + D1^2 = 0, quadratic in u^2
  Rational A = beta * beta - gamma * 4;
  Rational B = D1 * beta * 2 - D0 * 4;
  Rational C = D1 * D1;
  Rational inner = B * B - A * C * 4;
  auto w = rational_sqrt(inner);
  if (!w) return std::nullopt;
  for (int pm = 0; pm < 2; ++pm) {
    Rational v = (-B + (pm == 0 ? *w : -*w)) / (A * 2);
    auto u = rational_sqrt(v);
    if (!u) continue;
    for (int su = 0; su < 2; ++su) {
      Rational uu = (su == 0 ? *u : -*u);
      if (sign(uu) == 0) continue;
      Rational s = (D1 + beta * uu * uu) / (uu * 2);
      if (auto r = check(s, uu)) return r;
    }
  }
  return std::nullopt;
}

/// Roots in P^1 of A s^2 + B st + C t^2 over the field.  in_field is false
/// when the discriminant has no square root in the field.
struct BinaryQuadraticRoots {
  bool in_field = true;
  bool double_root = false;
  std::vector<std::pair<FieldElement, FieldElement>> roots;  // (s, t) pairs
};

inline BinaryQuadraticRoots solve_binary_quadratic(const FieldElement& A,
                                                   const FieldElement& B,
                                                   const FieldElement& C) {
  const FieldPtr& F = A.field();
  BinaryQuadraticRoots out;
  FieldElement one = FieldElement::one(F), zero = FieldElement::zero(F);
  if (A.is_zero()) {
    if (B.is_zero()) {
      if (C.is_zero()) throw std::invalid_argument("zero binary quadratic");
      out.double_root = true;
      out.roots.push_back({one, zero});
      return out;
    }
    out.roots.push_back({one, zero});
    out.roots.push_back({-C, B});
    return out;
  }
  FieldElement disc = B * B - A * C.scaled(Rational(4));
  if (disc.is_zero()) {
    out.double_root = true;
    out.roots.push_back({-B, A.scaled(Rational(2))});
    return out;
  }
  auto w = sqrt_in_field(disc);
  if (!w) {
    out.in_field = false;
    return out;
  }
  out.roots.push_back({-B + *w, A.scaled(Rational(2))});
  out.roots.push_back({-B - *w, A.scaled(Rational(2))});
  return out;
}

// ---------------------------------------------------------------------------

struct CubicPencil {
  std::array<MultiPoly, 2> basis;  // (F, G), reduced-echelon normalized
  std::vector<ProjPoint> base_points;
};

/// The pencil of cubics through 9 points: kernel of the 9x10 evaluation
/// matrix on the cubic monomial basis, required to be exactly 2-dimensional.
inline CubicPencil cubics_through(const std::vector<ProjPoint>& points) {
  if (points.size() != 9)
    throw std::invalid_argument("cubics_through: need exactly 9 points");
  const FieldPtr& F = points.front().field();
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = i + 1; j < 9; ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("cubics_through: points must be distinct");
  KMatrix m(F, 9, 10);
  for (size_t r = 0; r < 9; ++r) {
    const auto& P = points[r].coords();
    // power caches
    std::array<std::array<FieldElement, 4>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v][0] = FieldElement::one(F);
      for (int e = 1; e <= 3; ++e) pw[v][e] = pw[v][e - 1] * P[v];
    }
    for (long c = 0; c < 10; ++c) {
      Exponents e = monomial_at(3, c);
      m.at(r, static_cast<size_t>(c)) = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    }
  }
  auto kernel = m.kernel_basis();
  if (kernel.size() != 2)
    throw NotAPencil(static_cast<int>(kernel.size()),
                     "cubic system through the 9 points has kernel dimension " +
                         std::to_string(kernel.size()) + ", expected 2");
  CubicPencil pencil;
  for (int b = 0; b < 2; ++b) {
    MultiPoly cubic(F);
    for (long c = 0; c < 10; ++c)
      if (!kernel[b][static_cast<size_t>(c)].is_zero())
        cubic.add_term(monomial_at(3, c), kernel[b][static_cast<size_t>(c)]);
    pencil.basis[b] = cubic;
  }
  pencil.base_points = points;
  return pencil;
}

struct PencilMember {
  std::array<FieldElement, 2> params;  // (lambda : mu), first nonzero = 1
  MultiPoly cubic;
  ProjLine line;
  MultiPoly conic;
  bool conic_irreducible = true;
  int base_points_on_line = 0;
};

struct DegenerateMembersResult {
  std::vector<PencilMember> members;
  std::vector<std::string> warnings;  // e.g. a line shared by every member
};

/// Symmetric 3x3 determinant test: an irreducible conic has nonzero
/// determinant; zero means the conic splits into lines.
inline bool conic_is_irreducible(const MultiPoly& q) {
  FieldElement a = q.coeff({2, 0, 0}), b = q.coeff({1, 1, 0}), c = q.coeff({1, 0, 1});
  FieldElement d = q.coeff({0, 2, 0}), e = q.coeff({0, 1, 1}), f = q.coeff({0, 0, 2});
  Rational h(1, 2);
  std::array<std::array<FieldElement, 3>, 3> M{{{a, b.scaled(h), c.scaled(h)},
                                                {b.scaled(h), d, e.scaled(h)},
                                                {c.scaled(h), e.scaled(h), f}}};
  FieldElement det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                     M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                     M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  return !det.is_zero();
}

/// Degenerate fibers of the pencil that contain a line.  Candidate lines are
/// the joins of base-point pairs; a candidate divides some member exactly
/// when the two restricted basis cubics are proportional along it.  Members
/// are deduplicated by their pencil parameter.
inline DegenerateMembersResult degenerate_members(const CubicPencil& pencil) {
  const FieldPtr& F = pencil.basis[0].field();
  DegenerateMembersResult out;
  std::map<ProjLine, std::pair<ProjPoint, ProjPoint>> candidates;
  const auto& bp = pencil.base_points;
  for (size_t i = 0; i < bp.size(); ++i)
    for (size_t j = i + 1; j < bp.size(); ++j)
      candidates.emplace(join(bp[i], bp[j]), std::make_pair(bp[i], bp[j]));
  std::set<std::vector<Rational>> seen_params;
  std::vector<PencilMember> members;
  for (const auto& [line, gen] : candidates) {
    auto cF = pencil.basis[0].restrict_to_line(gen.first.coords(), gen.second.coords());
    auto cG = pencil.basis[1].restrict_to_line(gen.first.coords(), gen.second.coords());
    bool f_zero = true, g_zero = true;
    for (const auto& c : cF) f_zero &= c.is_zero();
    for (const auto& c : cG) g_zero &= c.is_zero();
    if (f_zero && g_zero) {
      out.warnings.push_back("line " + line.str() +
                             " divides every member; pencil is not reduced");
      continue;
    }
    bool rank_le_1 = true;
    for (size_t i = 0; i < cF.size() && rank_le_1; ++i)
      for (size_t j = i + 1; j < cF.size(); ++j)
        if (!(cF[i] * cG[j] - cF[j] * cG[i]).is_zero()) {
          rank_le_1 = false;
          break;
        }
    if (!rank_le_1) continue;
    // unique (lambda : mu) annihilating the restriction
    FieldElement lam = FieldElement::zero(F), mu = FieldElement::zero(F);
    for (size_t i = 0; i < cF.size(); ++i)
      if (!cF[i].is_zero() || !cG[i].is_zero()) {
        lam = cG[i];
        mu = -cF[i];
        break;
      }
    // normalize parameters
    FieldElement scale = (!lam.is_zero() ? lam : mu).inverse();
    lam = lam * scale;
    mu = mu * scale;
    std::vector<Rational> key;
    for (const auto& c : lam.coeffs()) key.push_back(c);
    for (const auto& c : mu.coeffs()) key.push_back(c);
    if (!seen_params.insert(key).second) continue;
    MultiPoly cubic = pencil.basis[0].scaled(lam) + pencil.basis[1].scaled(mu);
    MultiPoly conic = cubic.exact_divide(MultiPoly::linear_form(line.coeffs()));
    bool irred = conic_is_irreducible(conic);
    int on_line = 0;
    for (const auto& p : bp)
      if (incident(p, line)) ++on_line;
    members.push_back(PencilMember{{lam, mu}, std::move(cubic), line, std::move(conic),
                                   irred, on_line});
  }
  out.members = std::move(members);
  return out;
}

// ---------------------------------------------------------------------------
// Conic-line arrangements: components, intersection points with branch data.

struct Component {
  MultiPoly poly;
  bool is_line = false;
  int degree() const { return is_line ? 1 : 2; }
};

struct BranchPoint {
  ProjPoint point;
  std::vector<int> component_indices;
  std::vector<ProjLine> tangents;  // one per branch, same order
  bool ordinary = true;
  int multiplicity() const { return static_cast<int>(component_indices.size()); }
};

struct ConicLineLattice {
  std::vector<BranchPoint> points;  // singular points only (multiplicity >= 2)
  std::map<int, long> nk;
  bool all_ordinary = true;
  long bezout_pairs_lhs = 0;  // sum over points of C(mult, 2)
  long bezout_pairs_rhs = 0;  // sum over component pairs of deg_i * deg_j
};

inline long tjurina_total(const ConicLineLattice& lat) {
  if (!lat.all_ordinary)
    throw NonOrdinarySingularity("tjurina_total: non-ordinary point present");
  return tjurina_from_nk(lat.nk);
}

namespace detail {

inline std::pair<ProjPoint, ProjPoint> two_points_on_line(const ProjLine& l) {
  const auto& c = l.coeffs();
  const FieldPtr& F = l.field();
  FieldElement zero = FieldElement::zero(F), one = FieldElement::one(F);
  std::vector<ProjPoint> pts;
  // intersections with the coordinate frame give three candidates
  if (!(c[0].is_zero() && c[1].is_zero())) pts.emplace_back(-c[1], c[0], zero);
  if (!(c[0].is_zero() && c[2].is_zero())) pts.emplace_back(-c[2], zero, c[0]);
  if (!(c[1].is_zero() && c[2].is_zero())) pts.emplace_back(zero, -c[2], c[1]);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (!(pts[i] == pts[j])) return {pts[i], pts[j]};
  throw std::logic_error("two_points_on_line: degenerate line");
}

/// Divide the binary form (ascending in t) by the linear factor of the root
/// (s0 : t0), i.e. by (t0*s - s0*t); null when it does not divide.
inline std::optional<std::vector<FieldElement>> deflate_binary_root(
    const std::vector<FieldElement>& form, const FieldElement& s0, const FieldElement& t0) {
  // check form(s0, t0) == 0 first
  const FieldPtr& F = s0.field();
  size_t d = form.size() - 1;
  FieldElement acc = FieldElement::zero(F);
  {
    FieldElement sp = FieldElement::one(F);
    std::vector<FieldElement> tp(d + 1, FieldElement::one(F));
    for (size_t i = 1; i <= d; ++i) tp[i] = tp[i - 1] * t0;
    std::vector<FieldElement> spow(d + 1, FieldElement::one(F));
    for (size_t i = 1; i <= d; ++i) spow[i] = spow[i - 1] * s0;
    for (size_t j = 0; j <= d; ++j) acc += form[j] * spow[d - j] * tp[j];
  }
  if (!acc.is_zero()) return std::nullopt;
  // synthetic division by (t0*s - s0*t): treat form as poly in t over K[s],
  // but both coefficients may be nonzero; use the nonzero coordinate.
  std::vector<FieldElement> q(d, FieldElement::zero(F));
  if (!t0.is_zero()) {
    // write form = (t0 s - s0 t) * q; match coefficients of s^(d-j) t^j from j=0 up
    FieldElement inv = t0.inverse();
    FieldElement prev = FieldElement::zero(F);
    for (size_t j = 0; j < d; ++j) {
      // form[j] = t0*q[j] - s0*q[j-1]
      q[j] = (form[j] + s0 * prev) * inv;
      prev = q[j];
    }
  } else {
    // factor is -s0 * t: form[0] must vanish; quotient shifts down
    if (!form[0].is_zero()) return std::nullopt;
    FieldElement inv = (-s0).inverse();
    for (size_t j = 0; j < d; ++j) q[j] = form[j + 1] * inv;
  }
  return q;
}

}  // namespace detail

/// Intersection analysis of a reduced union of lines and irreducible conics.
/// All points are found exactly over the base field; an intersection living
/// in a proper extension raises NotInField with the offending pair and the
/// factor that refuses to split.  Coinciding branch tangents raise
/// NonOrdinarySingularity.  On success the Bezout pair count guarantees the
/// point list is complete.
inline ConicLineLattice conic_line_lattice(const std::vector<Component>& comps) {
  if (comps.empty()) throw std::invalid_argument("conic_line_lattice: no components");
  const FieldPtr& F = comps.front().poly.field();
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_line) {
      if (comps[i].poly.degree() != 1)
        throw std::invalid_argument("component marked line is not linear");
    } else {
      if (comps[i].poly.degree() != 2 || !conic_is_irreducible(comps[i].poly))
        throw std::invalid_argument("conic component is reducible or not a conic");
    }
    for (size_t j = i + 1; j < comps.size(); ++j)
      if (MultiPoly::proportional(comps[i].poly, comps[j].poly))
        throw RepeatedComponent("components " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide");
  }
  std::set<ProjPoint> found;
  auto line_of = [&](const Component& c) {
    return ProjLine(c.poly.coeff({1, 0, 0}), c.poly.coeff({0, 1, 0}), c.poly.coeff({0, 0, 1}));
  };
  // line-line and line-conic intersections
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].is_line && comps[j].is_line) {
        found.insert(meet(line_of(comps[i]), line_of(comps[j])));
      } else if (comps[i].is_line || comps[j].is_line) {
        const Component& L = comps[i].is_line ? comps[i] : comps[j];
        const Component& Q = comps[i].is_line ? comps[j] : comps[i];
        auto [p0, p1] = detail::two_points_on_line(line_of(L));
        auto r = Q.poly.restrict_to_line(p0.coords(), p1.coords());
        auto roots = solve_binary_quadratic(r[0], r[1], r[2]);
        if (!roots.in_field)
          throw NotInField("line " + line_of(L).str() + " meets conic " + Q.poly.str() +
                           " outside the field (discriminant is not a square)");
        for (const auto& [s, t] : roots.roots) {
          std::array<FieldElement, 3> v{p0.coords()[0] * s + p1.coords()[0] * t,
                                        p0.coords()[1] * s + p1.coords()[1] * t,
                                        p0.coords()[2] * s + p1.coords()[2] * t};
          found.insert(ProjPoint(v));
        }
      }
    }
  // conic-conic intersections via resultants, deflating candidates first
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].is_line || comps[j].is_line) continue;
      const MultiPoly& A = comps[i].poly;
      const MultiPoly& B = comps[j].poly;
      int var = -1;
      static const Exponents squares[3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
      for (int v = 0; v < 3; ++v)
        if (!A.coeff(squares[v]).is_zero() && !B.coeff(squares[v]).is_zero()) {
          var = v;
          break;
        }
      if (var < 0)
        throw NotInField("conic pair has no common square variable; unsupported shape");
      int u = (var + 1) % 3, w = (var + 2) % 3;
      if (u > w) std::swap(u, w);
      MultiPoly res = resultant(A, B, var);
      // binary form in (x_u, x_w), ascending in x_w
      std::vector<FieldElement> form(5, FieldElement::zero(F));
      for (const auto& [e, c] : res.terms()) form[e[w]] = c;
      auto eval_zero = [&](const ProjPoint& P) {
        return A.eval(P.coords()).is_zero() && B.eval(P.coords()).is_zero();
      };
      // each transversal common point is one root of the resultant, so
      // deflate one linear factor per known point
      auto deflate_known = [&]() {
        std::vector<FieldElement> rem = form;
        for (const auto& P : found) {
          if (rem.size() <= 1) break;
          if (!eval_zero(P)) continue;
          auto q = detail::deflate_binary_root(rem, P.coords()[u], P.coords()[w]);
          if (q) rem = *q;
        }
        return rem;
      };
      std::vector<FieldElement> rem = deflate_known();
      while (rem.size() > 1) {
        bool all_zero = true;
        for (const auto& c : rem) all_zero = all_zero && c.is_zero();
        if (all_zero) break;  // shared component; excluded upstream
        std::vector<std::pair<FieldElement, FieldElement>> new_roots;
        // roots at (1:0)/(0:1) show up as vanishing end coefficients
        if (rem[0].is_zero())
          new_roots.push_back({FieldElement::one(F), FieldElement::zero(F)});
        if (rem.back().is_zero())
          new_roots.push_back({FieldElement::zero(F), FieldElement::one(F)});
        if (new_roots.empty()) {
          if (rem.size() == 2) {
            // rem[0]*u + rem[1]*w = 0
            new_roots.push_back({-rem[1], rem[0]});
          } else if (rem.size() == 3) {
            // rem[0]*u^2 + rem[1]*u*w + rem[2]*w^2, roots as (u : w)
            auto roots = solve_binary_quadratic(rem[0], rem[1], rem[2]);
            if (!roots.in_field)
              throw NotInField("conic pair (" + A.str() + ", " + B.str() +
                               ") meets in a quadratic factor with no field root");
            new_roots = roots.roots;
          } else {
            throw NotInField("conic pair (" + A.str() + ", " + B.str() +
                             ") leaves an unsplit factor of degree " +
                             std::to_string(rem.size() - 1));
          }
        }
        size_t before = found.size();
        for (const auto& [ru, rw] : new_roots) {
          // recover the eliminated coordinate from the two univariate quadratics
          auto ca = A.coefficients_in(var);
          auto cb = B.coefficients_in(var);
          std::array<FieldElement, 3> probe{FieldElement::zero(F), FieldElement::zero(F),
                                            FieldElement::zero(F)};
          probe[u] = ru;
          probe[w] = rw;
          auto evalc = [&](const std::vector<MultiPoly>& cs, int k) {
            return k < static_cast<int>(cs.size()) ? cs[k].eval(probe)
                                                   : FieldElement::zero(F);
          };
          FieldElement a2 = evalc(ca, 2), a1 = evalc(ca, 1), a0 = evalc(ca, 0);
          FieldElement b2 = evalc(cb, 2), b1 = evalc(cb, 1), b0 = evalc(cb, 0);
          // b2*qa - a2*qb is linear in the eliminated variable
          FieldElement l1 = b2 * a1 - a2 * b1;
          FieldElement l0 = b2 * a0 - a2 * b0;
          std::vector<FieldElement> xs;
          if (!l1.is_zero()) {
            xs.push_back(-l0 / l1);
          } else if (l0.is_zero()) {
            // proportional restrictions: both roots of a2*X^2 + a1*X + a0
            // are common; as a binary form in (s, t) with X = s/t
            auto rr = solve_binary_quadratic(a2, a1, a0);
            if (!rr.in_field)
              throw NotInField("conic pair shares a full fiber with irrational roots");
            for (const auto& [rs, rt] : rr.roots)
              if (!rt.is_zero()) xs.push_back(rs / rt);
          }
          for (const auto& x : xs) {
            std::array<FieldElement, 3> v{FieldElement::zero(F), FieldElement::zero(F),
                                          FieldElement::zero(F)};
            v[u] = ru;
            v[w] = rw;
            v[var] = x;
            ProjPoint P(v);
            if (eval_zero(P)) found.insert(P);
          }
        }
        if (found.size() == before) break;  // no progress (tangency artifact)
        rem = deflate_known();
      }
    }

  // incidence, multiplicities, tangents
  ConicLineLattice lat;
  for (const auto& P : found) {
    BranchPoint bp{P, {}, {}, true};
    for (size_t c = 0; c < comps.size(); ++c)
      if (comps[c].poly.eval(P.coords()).is_zero())
        bp.component_indices.push_back(static_cast<int>(c));
    if (bp.component_indices.size() < 2) continue;
    for (int ci : bp.component_indices) {
      const Component& comp = comps[ci];
      if (comp.is_line) {
        bp.tangents.push_back(ProjLine(comp.poly.coeff({1, 0, 0}), comp.poly.coeff({0, 1, 0}),
                                       comp.poly.coeff({0, 0, 1})));
      } else {
        FieldElement gx = comp.poly.partial(0).eval(P.coords());
        FieldElement gy = comp.poly.partial(1).eval(P.coords());
        FieldElement gz = comp.poly.partial(2).eval(P.coords());
        bp.tangents.push_back(ProjLine(gx, gy, gz));
      }
    }
    for (size_t a = 0; a < bp.tangents.size(); ++a)
      for (size_t b = a + 1; b < bp.tangents.size(); ++b)
        if (bp.tangents[a] == bp.tangents[b]) {
          bp.ordinary = false;
          throw NonOrdinarySingularity(
              "components " + std::to_string(bp.component_indices[a]) + " and " +
              std::to_string(bp.component_indices[b]) + " are tangent at " + P.str());
        }
    lat.nk[bp.multiplicity()] += 1;
    lat.points.push_back(std::move(bp));
  }
  for (const auto& bp : lat.points) {
    long m = bp.multiplicity();
    lat.bezout_pairs_lhs += m * (m - 1) / 2;
  }
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j)
      lat.bezout_pairs_rhs += static_cast<long>(comps[i].degree()) * comps[j].degree();
  if (lat.bezout_pairs_lhs != lat.bezout_pairs_rhs) {
    std::ostringstream os;
    os << "Bezout audit failed: found " << lat.bezout_pairs_lhs
       << " transversal branch pairs, expected " << lat.bezout_pairs_rhs
       << "; some intersections are not defined over " << F->label();
    throw NotInField(os.str());
  }
  return lat;
}

inline std::vector<Component> lift_components(const std::vector<Component>& comps,
                                              const FieldPtr& target,
                                              const FieldElement& gen_image) {
  std::vector<Component> out;
  out.reserve(comps.size());
  for (const auto& c : comps) {
    MultiPoly p(target);
    for (const auto& [e, coeff] : c.poly.terms())
      p.add_term(e, coeff.substitute_generator(gen_image));
    out.push_back({std::move(p), c.is_line});
  }
  return out;
}

struct LatticeWithField {
  ConicLineLattice lattice;
  FieldPtr field;
  std::string note;  // set when the points needed a field extension
};

/// Intersection lattice of a conic-line component list, extending the
/// coefficient field when the points demand it: the double points of a
/// conic-line union over Q or Q(e) routinely need i or sqrt(3), all of which
/// live in the 12th cyclotomic field.
inline LatticeWithField conic_line_lattice_extending(const std::vector<Component>& comps) {
  const FieldPtr& F = comps.front().poly.field();
  try {
    return {conic_line_lattice(comps), F, ""};
  } catch (const NotInField& first) {
    FieldPtr big = fields::cyclotomic(12);
    std::optional<FieldElement> gen_image;
    if (F->degree() == 1) {
      gen_image = FieldElement::zero(big);
    } else if (F->same_as(*fields::eisenstein())) {
      // e = zeta_12^4
      gen_image = FieldElement::generator(big).pow(4);
    }
    if (!gen_image) throw;
    LatticeWithField out{conic_line_lattice(lift_components(comps, big, *gen_image)), big,
                         std::string("intersection points live outside ") + F->label() +
                             "; lattice computed over " + big->label()};
    return out;
  }
}

struct ConicLineAssembly {
  CurveSpec spec;  // over the member field
  ConicLineLattice lattice;
  FieldPtr lattice_field;
  std::string note;
};

/// Assemble the conic-line curve from degenerate pencil members: component
/// list, expanded defining polynomial, and the full intersection lattice.
inline ConicLineAssembly assemble_conic_line(const std::vector<PencilMember>& members) {
  if (members.empty())
    throw std::invalid_argument("assemble_conic_line: no degenerate members");
  std::vector<Component> comps;
  for (const auto& m : members) {
    comps.push_back({MultiPoly::linear_form(m.line.coeffs()), true});
    comps.push_back({m.conic, false});
  }
  std::vector<MultiPoly> polys;
  for (const auto& c : comps) polys.push_back(c.poly);
  CurveSpec spec = defining_poly(polys);
  LatticeWithField lat = conic_line_lattice_extending(comps);
  return {std::move(spec), std::move(lat.lattice), lat.field, lat.note};
}

// ---------------------------------------------------------------------------

struct RationalMap {
  std::array<MultiPoly, 3> components;  // equal-degree homogeneous
};

struct MapEvalResult {
  bool indeterminate = false;
  std::optional<ProjPoint> image;
};

inline MapEvalResult map_evaluate(const RationalMap& map, const ProjPoint& p) {
  std::array<FieldElement, 3> v{map.components[0].eval(p.coords()),
                                map.components[1].eval(p.coords()),
                                map.components[2].eval(p.coords())};
  MapEvalResult res;
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) {
    res.indeterminate = true;
    return res;
  }
  res.image = ProjPoint(v);
  return res;
}

}  // namespace plarr

#endif  // PLARR_PENCIL_HPP
