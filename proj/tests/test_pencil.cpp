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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "plarr/io.hpp"
#include "plarr/pencil.hpp"

using namespace plarr;

namespace {

std::vector<ProjPoint> base_points() {
  return io::points_file_from_json(io::load_json("data/cl_basepoints.json")).points;
}

MultiPoly var(const FieldPtr& F, int v) {
  Exponents e{0, 0, 0};
  e[v] = 1;
  return MultiPoly::monomial(F, e, FieldElement::one(F));
}

/// Lift a polynomial with rational coefficients into a bigger field.
MultiPoly lift(const MultiPoly& p, const FieldPtr& F) {
  MultiPoly out(F);
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw std::logic_error("lift: coefficient not rational");
    out.add_term(e, FieldElement::from_rational(F, c.rational_part()));
  }
  return out;
}

ProjPoint random_point(const FieldPtr& F, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-30, 30);
  for (;;) {
    FieldElement a = FieldElement::from_rational(F, Rational(d(rng)));
    FieldElement b = FieldElement::from_rational(F, Rational(d(rng)));
    FieldElement c = FieldElement::from_rational(F, Rational(d(rng)));
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    return ProjPoint(a, b, c);
  }
}

}  // namespace

TEST_CASE("sqrt inside quadratic fields") {
  FieldPtr R = fields::sqrt2();
  FieldElement two = FieldElement::from_rational(R, Rational(2));
  auto s = sqrt_in_field(two);
  REQUIRE(s.has_value());
  CHECK(*s * *s == two);

  FieldPtr E = fields::eisenstein();
  FieldElement e = FieldElement::generator(E);
  // sqrt(e^2) = +-e
  auto se = sqrt_in_field(e * e);
  REQUIRE(se.has_value());
  CHECK(*se * *se == e * e);
  // -3 = (2e+1)^2
  auto sm3 = sqrt_in_field(FieldElement::from_rational(E, Rational(-3)));
  REQUIRE(sm3.has_value());
  CHECK(*sm3 * *sm3 == FieldElement::from_rational(E, Rational(-3)));
  // 2 is not a square in Q(e)
  CHECK_FALSE(sqrt_in_field(FieldElement::from_rational(E, Rational(2))).has_value());
  // 3 is not a square in Q
  CHECK_FALSE(
      sqrt_in_field(FieldElement::from_rational(fields::rationals(), Rational(3)))
          .has_value());
}

TEST_CASE("the 9 base points span a pencil of cubics") {
  CubicPencil pencil = cubics_through(base_points());
  CHECK(pencil.basis[0].degree() == 3);
  CHECK(pencil.basis[1].degree() == 3);
  // every member vanishes on every base point (5 sampled members)
  const FieldPtr& F = pencil.basis[0].field();
  for (int k = 0; k < 5; ++k) {
    FieldElement lam = FieldElement::from_rational(F, Rational(k + 1));
    FieldElement mu = FieldElement::from_rational(F, Rational(2 * k - 3));
    MultiPoly member = pencil.basis[0].scaled(lam) + pencil.basis[1].scaled(mu);
    for (const auto& p : pencil.base_points)
      CHECK(member.eval(p.coords()).is_zero());
  }
}

TEST_CASE("random 9 points impose independent conditions") {
  FieldPtr Q = fields::rationals();
  for (unsigned seed : {11u, 22u, 33u}) {
    std::mt19937 rng(seed);
    std::vector<ProjPoint> pts;
    while (pts.size() < 9) {
      ProjPoint p = random_point(Q, rng);
      bool dup = false;
      for (const auto& q : pts) dup |= (q == p);
      if (!dup) pts.push_back(p);
    }
    try {
      cubics_through(pts);
      FAIL("expected NotAPencil");
    } catch (const NotAPencil& e) {
      CHECK(e.kernel_dim == 1);
    }
  }
}

TEST_CASE("8 base points plus a generic 9th is not a pencil") {
  auto pts = base_points();
  const FieldPtr& F = pts.front().field();
  pts[8] = ProjPoint(FieldElement::from_rational(F, Rational(5)),
                     FieldElement::from_rational(F, Rational(7)),
                     FieldElement::from_rational(F, Rational(11)));
  try {
    cubics_through(pts);
    FAIL("expected NotAPencil");
  } catch (const NotAPencil& e) {
    CHECK(e.kernel_dim == 1);
  }
}

TEST_CASE("degenerate members of the CL pencil match the printed factors") {
  CubicPencil pencil = cubics_through(base_points());
  DegenerateMembersResult res = degenerate_members(pencil);
  CHECK(res.warnings.empty());
  REQUIRE(res.members.size() == 6);
  const FieldPtr& F = pencil.basis[0].field();

  for (const auto& m : res.members) {
    // exact factorization and irreducible quotient conic
    CHECK(m.cubic == MultiPoly::linear_form(m.line.coeffs()) * m.conic);
    CHECK(m.conic_irreducible);
    CHECK(m.base_points_on_line == 3);
    // both factors vanish on the base points they pass through
    for (const auto& p : pencil.base_points)
      CHECK(m.cubic.eval(p.coords()).is_zero());
  }

  // the 12 factors agree as sets with the shipped factor list
  auto file = io::arrangement_file_from_json(io::load_json("data/cl.json"));
  std::set<ProjLine> expect_lines;
  for (const auto& l : file.lines) {
    ProjLine lifted(lift(MultiPoly::linear_form(l), F).coeff({1, 0, 0}),
                    lift(MultiPoly::linear_form(l), F).coeff({0, 1, 0}),
                    lift(MultiPoly::linear_form(l), F).coeff({0, 0, 1}));
    expect_lines.insert(lifted);
  }
  std::set<ProjLine> got_lines;
  for (const auto& m : res.members) got_lines.insert(m.line);
  CHECK(got_lines == expect_lines);

  // conics match up to scalar
  for (const auto& m : res.members) {
    bool matched = false;
    for (const auto& c : file.conics) {
      MultiPoly printed = lift(MultiPoly::conic_form(c), F);
      matched |= MultiPoly::proportional(m.conic, printed);
    }
    CHECK(matched);
  }

  // product of all 6 cubics = printed degree-18 polynomial up to one scalar
  MultiPoly product = MultiPoly::constant(F, FieldElement::one(F));
  for (const auto& m : res.members) product *= m.cubic;
  MultiPoly printed = MultiPoly::constant(F, FieldElement::one(F));
  for (const auto& l : file.lines) printed *= lift(MultiPoly::linear_form(l), F);
  for (const auto& c : file.conics) printed *= lift(MultiPoly::conic_form(c), F);
  CHECK(MultiPoly::proportional(product, printed));
}

TEST_CASE("3-rich lines of the base points are exactly the member lines") {
  auto pts = base_points();
  RichLineReport rep = rich_lines(pts, Selector::at_least(3));
  CHECK(rep.lr == std::map<int, long>{{2, 18}, {3, 6}});
  REQUIRE(rep.lines.size() == 6);
  CubicPencil pencil = cubics_through(pts);
  DegenerateMembersResult res = degenerate_members(pencil);
  for (const auto& m : res.members) {
    bool present = false;
    for (const auto& e : rep.lines) present |= (e.line == m.line);
    CHECK(present);
  }
}

TEST_CASE("cubic pencil with triangle fibers finds all 4 over Q(e)") {
  {
    FieldPtr E = fields::eisenstein();
    CubicPencil pencil;
    {
      MultiPoly x = var(E, 0), y = var(E, 1), z = var(E, 2);
      pencil.basis[0] = x * x * x + y * y * y + z * z * z;
      pencil.basis[1] = x * y * z;
    }
    // base points of the Hesse pencil over Q(e)
    FieldElement e = FieldElement::generator(E);
    FieldElement one = FieldElement::one(E), zero = FieldElement::zero(E);
    FieldElement me = -e, me2 = -(e * e), mone = -one;
    std::vector<ProjPoint> pts{
        ProjPoint(zero, one, mone),  ProjPoint(zero, one, me),  ProjPoint(zero, one, me2),
        ProjPoint(one, zero, mone),  ProjPoint(one, zero, me),  ProjPoint(one, zero, me2),
        ProjPoint(one, mone, zero),  ProjPoint(one, me, zero),  ProjPoint(one, me2, zero)};
    for (const auto& p : pts) {
      REQUIRE(pencil.basis[0].eval(p.coords()).is_zero());
      REQUIRE(pencil.basis[1].eval(p.coords()).is_zero());
    }
    pencil.base_points = pts;
    DegenerateMembersResult res = degenerate_members(pencil);
    CHECK(res.members.size() == 4);
    // the member xyz sits at (lambda:mu) = (0:1)
    bool found_xyz = false;
    for (const auto& m : res.members)
      if (m.params[0].is_zero()) {
        found_xyz = true;
        CHECK(MultiPoly::proportional(m.cubic, var(E, 0) * var(E, 1) * var(E, 2)));
        CHECK_FALSE(m.conic_irreducible);  // quotient is a line pair
      }
    CHECK(found_xyz);
  }
}

TEST_CASE("a pencil with a shared line is flagged") {
  FieldPtr Q = fields::rationals();
  MultiPoly x = var(Q, 0), y = var(Q, 1), z = var(Q, 2);
  CubicPencil pencil;
  pencil.basis[0] = z * (x * x + y * y - z * z);
  pencil.basis[1] = z * x * y;
  // base points on the shared line z = 0 so candidate z gets probed
  FieldElement one = FieldElement::one(Q), zero = FieldElement::zero(Q);
  pencil.base_points = {ProjPoint(one, zero, zero),
                        ProjPoint(zero, one, zero),
                        ProjPoint(one, one, zero)};
  DegenerateMembersResult res = degenerate_members(pencil);
  REQUIRE_FALSE(res.warnings.empty());
  CHECK(res.warnings[0].find("divides every member") != std::string::npos);
}

TEST_CASE("CL assembly: 12 components, n_2 = 12, n_6 = 9, all ordinary") {
  CubicPencil pencil = cubics_through(base_points());
  DegenerateMembersResult res = degenerate_members(pencil);
  ConicLineAssembly asmb = assemble_conic_line(res.members);
  const CurveSpec& spec = asmb.spec;
  const ConicLineLattice& lat = asmb.lattice;
  // the double points need i and sqrt(3): the lattice lives in Q(zeta_12)
  CHECK(asmb.lattice_field->cyclotomic_conductor() == 12);
  CHECK_FALSE(asmb.note.empty());
  CHECK(spec.d == 18);
  CHECK(spec.r_components == 12);
  CHECK(lat.nk == std::map<int, long>{{2, 12}, {6, 9}});
  CHECK(lat.all_ordinary);
  CHECK(tjurina_total(lat) == 237);
  // Bezout audit: 15*1 + 36*2 + 15*4 = 147 = 12*C(2,2) + 9*C(6,2)
  CHECK(lat.bezout_pairs_rhs == 147);
  CHECK(lat.bezout_pairs_lhs == 147);
  // every multiplicity-6 point is a base point, one branch per member
  FieldElement e_image = FieldElement::generator(asmb.lattice_field).pow(4);
  std::vector<ProjPoint> lifted_base;
  for (const auto& b : pencil.base_points)
    lifted_base.emplace_back(b.coords()[0].substitute_generator(e_image),
                             b.coords()[1].substitute_generator(e_image),
                             b.coords()[2].substitute_generator(e_image));
  int six_fold = 0;
  for (const auto& bp : lat.points)
    if (bp.multiplicity() == 6) {
      ++six_fold;
      bool is_base = false;
      for (const auto& b : lifted_base) is_base |= (b == bp.point);
      CHECK(is_base);
    }
  CHECK(six_fold == 9);
  // every base point carries exactly 6 branches, one per member; the two
  // conjugate points (e:1:1), (e^2:1:1) meet only conic components
  int zero_line_points = 0;
  for (const auto& b : pencil.base_points) {
    int on_lines = 0, on_conics = 0;
    for (const auto& m : res.members) {
      if (incident(b, m.line)) ++on_lines;
      if (m.conic.eval(b.coords()).is_zero()) ++on_conics;
    }
    CHECK(on_lines + on_conics == 6);
    CHECK(on_conics >= 1);
    if (on_lines == 0) ++zero_line_points;
  }
  CHECK(zero_line_points == 2);
}

TEST_CASE("tangent conics are rejected as non-ordinary") {
  FieldPtr Q = fields::rationals();
  MultiPoly x = var(Q, 0), y = var(Q, 1), z = var(Q, 2);
  std::vector<Component> comps{{x * x - y * z, false},
                               {x * x - y * z.scaled(FieldElement::from_rational(Q, Rational(2))), false}};
  CHECK_THROWS_AS(conic_line_lattice(comps), NonOrdinarySingularity);
}

TEST_CASE("repeated components are rejected") {
  FieldPtr Q = fields::rationals();
  MultiPoly x = var(Q, 0), y = var(Q, 1);
  std::vector<Component> comps{{x, true},
                               {x.scaled(FieldElement::from_rational(Q, Rational(3))), true},
                               {y, true}};
  CHECK_THROWS_AS(conic_line_lattice(comps), RepeatedComponent);
}

TEST_CASE("intersections outside the field raise NotInField") {
  FieldPtr Q = fields::rationals();
  MultiPoly x = var(Q, 0), y = var(Q, 1), z = var(Q, 2);
  // y = 0 meets x^2 + y^2 - 3z^2 where x^2 = 3 z^2: needs sqrt(3)
  std::vector<Component> comps{
      {x * x + y * y - (z * z).scaled(FieldElement::from_rational(Q, Rational(3))), false},
      {y, true}};
  CHECK_THROWS_AS(conic_line_lattice(comps), NotInField);
}

TEST_CASE("map evaluation and indeterminacy") {
  RationalMap map = io::map_from_json(io::load_json("data/lambda_map.json"));
  auto pts = base_points();
  for (const auto& p : pts) {
    MapEvalResult r = map_evaluate(map, p);
    CHECK(r.indeterminate);
  }
  const FieldPtr& F = map.components[0].field();
  FieldElement one = FieldElement::one(F);
  MapEvalResult fin = map_evaluate(map, ProjPoint(one, one, one));
  REQUIRE_FALSE(fin.indeterminate);
  REQUIRE(fin.image.has_value());

  std::mt19937 rng(20260809);
  int not_indeterminate = 0;
  for (int i = 0; i < 100; ++i) {
    ProjPoint p = random_point(F, rng);
    if (!map_evaluate(map, p).indeterminate) ++not_indeterminate;
  }
  CHECK(not_indeterminate == 100);
}
