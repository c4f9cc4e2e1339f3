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

#include <sstream>

#include "plarr/io.hpp"
#include "plarr/rigidity.hpp"

using namespace plarr;

namespace {

Arrangement load(const std::string& path) {
  return io::arrangement_file_from_json(io::load_json(path)).to_arrangement();
}

}  // namespace

TEST_CASE("non-basis counts from the lattice") {
  {
    Arrangement h57 = load("data/h57.json");
    ArrMatroid m = matroid_from_lattice(lattice(h57), 57);
    // 108*C(3,3) + 72*C(4,3) + 21*C(8,3)
    CHECK(m.nonbases.size() == 108 + 72 * 4 + 21 * 56);
  }
  {
    Arrangement o33 = load("data/o33.json");
    ArrMatroid m = matroid_from_lattice(lattice(o33), 33);
    CHECK(m.nonbases.size() == 40 + 16 * 10 + 5 * 56);  // 480
  }
  {
    Arrangement g5 = load("data/generic5.json");
    ArrMatroid m = matroid_from_lattice(lattice(g5), 5);
    CHECK(m.nonbases.empty());
  }
}

TEST_CASE("five generic lines: no constraints, excess 2") {
  Arrangement g5 = load("data/generic5.json");
  ArrMatroid m = matroid_from_lattice(lattice(g5), 5);
  RigidityReport rep = rigidity_check(g5, m);
  CHECK(rep.kernel_dim == 15);
  CHECK(rep.trivial_dim == 13);
  CHECK(rep.verdict == RigidityVerdict::Inconclusive);
  CHECK(rep.excess == 2);
  CHECK(rep.exact);
}

TEST_CASE("H57 is first-order rigid with kernel dimension 65") {
  Arrangement h57 = load("data/h57.json");
  ArrMatroid m = matroid_from_lattice(lattice(h57), 57);
  RigidityReport rep = rigidity_check(h57, m);
  CHECK(rep.kernel_dim == 65);
  CHECK(rep.trivial_dim == 65);
  CHECK(rep.verdict == RigidityVerdict::FirstOrderRigid);
  CHECK(rep.exact);
  CHECK(rep.primes.size() == 2);
  CHECK(rep.jacobian_rows == 1572);
}

TEST_CASE("O33 is first-order rigid with kernel dimension 41") {
  Arrangement o33 = load("data/o33.json");
  ArrMatroid m = matroid_from_lattice(lattice(o33), 33);
  RigidityReport rep = rigidity_check(o33, m);
  CHECK(rep.kernel_dim == 41);
  CHECK(rep.verdict == RigidityVerdict::FirstOrderRigid);
  CHECK(rep.exact);
}

TEST_CASE("a perturbed arrangement is rejected as a realization") {
  // tamper with one line of H57 so some non-basis triple is no longer
  // concurrent, keeping the matroid from the original lattice
  Arrangement h57 = load("data/h57.json");
  ArrMatroid m = matroid_from_lattice(lattice(h57), 57);
  std::vector<ProjLine> lines = h57.lines();
  const FieldPtr& F = h57.field();
  lines[10] = ProjLine(lines[10].coeffs()[0],
                       lines[10].coeffs()[1] + FieldElement::one(F),
                       lines[10].coeffs()[2]);
  Arrangement tampered(F, lines, "tampered");
  CHECK_THROWS_AS(rigidity_check(tampered, m), NotARealization);
}

TEST_CASE("realization ideal emitter") {
  ArrMatroid m;
  m.n = 3;
  m.nonbases = {{0, 1, 2}};
  std::ostringstream os;
  emit_realization_ideal(m, os, "demo");
  std::string text = os.str();
  CHECK(text.find("x_1_1*x_2_2*x_3_3") != std::string::npos);
  CHECK(text.find("1 - d") != std::string::npos);
}
