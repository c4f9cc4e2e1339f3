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

#include "plarr/modular.hpp"
#include "plarr/reconstruct.hpp"

using namespace plarr;
using namespace plarr::modp;

TEST_CASE("roots of minimal polynomials mod p") {
  // Q: minpoly t, root 0 everywhere
  auto r = minpoly_roots_mod_p({Rational(0), Rational(1)}, 30000001ull);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == 0);

  // e^2+e+1 splits iff p = 1 mod 3
  PrimeSequence seq;
  std::vector<Rational> eis{Rational(1), Rational(1), Rational(1)};
  int split = 0, inert = 0;
  for (int i = 0; i < 40; ++i) {
    uint64_t p = seq.next();
    auto roots = minpoly_roots_mod_p(eis, p);
    if (p % 3 == 1) {
      REQUIRE(roots.size() == 2);
      for (uint64_t x : roots) {
        CHECK((mulmod(x, x, p) + x + 1) % p == 0);
      }
      ++split;
    } else {
      CHECK(roots.empty());
      ++inert;
    }
  }
  CHECK(split > 0);
  CHECK(inert > 0);

  // degree-8 cyclotomic: fully split iff p = 1 mod 20
  std::vector<Rational> phi20{Rational(1),  Rational(0), Rational(-1), Rational(0),
                              Rational(1),  Rational(0), Rational(-1), Rational(0),
                              Rational(1)};
  bool found_split = false;
  PrimeSequence seq2;
  for (int i = 0; i < 400 && !found_split; ++i) {
    uint64_t p = seq2.next();
    auto roots = minpoly_roots_mod_p(phi20, p);
    if (p % 20 == 1) {
      REQUIRE(roots.size() == 8);
      found_split = true;
    } else {
      CHECK(roots.size() < 8);
    }
  }
  CHECK(found_split);
}

TEST_CASE("dense elimination: rank and kernel") {
  uint64_t p = 30000001ull;
  DenseMod m(3, 3, p);
  uint64_t rows[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.set(r, c, rows[r][c]);
  auto info = m.echelonize();
  CHECK(info.rank == 2);
  auto kernel = m.kernel_basis(info);
  REQUIRE(kernel.size() == 1);
  const auto& v = kernel[0];
  for (int r = 0; r < 3; ++r) {
    unsigned __int128 acc = 0;
    for (int c = 0; c < 3; ++c) acc += static_cast<unsigned __int128>(rows[r][c]) * v[c];
    CHECK(static_cast<uint64_t>(acc % p) == 0);
  }
}

TEST_CASE("lazy elimination matches a straightforward mod-p elimination") {
  uint64_t p = 33554393ull;  // largest prime in the pool band
  std::mt19937_64 rng(4243);
  for (int trial = 0; trial < 20; ++trial) {
    size_t rows = 12, cols = 9;
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
    DenseMod m(rows, cols, p);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        a[r][c] = rng() % (trial < 10 ? 7 : p);
        m.set(r, c, a[r][c]);
      }
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
      size_t piv = pr;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[pr], a[piv]);
      uint64_t inv = invmod(a[pr][c], p);
      for (size_t j = 0; j < cols; ++j) a[pr][j] = mulmod(a[pr][j], inv, p);
      for (size_t r = 0; r < rows; ++r) {
        if (r == pr || a[r][c] == 0) continue;
        uint64_t f = a[r][c];
        for (size_t j = 0; j < cols; ++j)
          a[r][j] = (a[r][j] + p - mulmod(f, a[pr][j], p)) % p;
      }
      ++pr;
    }
    auto info = m.echelonize();
    CHECK(info.rank == static_cast<int>(pr));
  }
}

TEST_CASE("rational reconstruction round trip") {
  std::vector<Rational> samples{Rational(0),        Rational(1, 2),  Rational(-22, 7),
                                Rational(355, 113), Rational(-1, 1), Rational(1234567, 89)};
  PrimeSequence seq;
  Integer modulus = 1;
  std::vector<Integer> residues(samples.size(), Integer(0));
  for (int k = 0; k < 4; ++k) {
    uint64_t p = seq.next();
    for (size_t i = 0; i < samples.size(); ++i) {
      auto v = reduce_rational(samples[i], p);
      REQUIRE(v.has_value());
      residues[i] = k == 0 ? Integer(static_cast<unsigned long>(*v))
                           : crt_pair(residues[i], modulus,
                                      Integer(static_cast<unsigned long>(*v)),
                                      Integer(static_cast<unsigned long>(p)));
    }
    modulus *= static_cast<unsigned long>(p);
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    auto q = rational_reconstruct(residues[i], modulus);
    REQUIRE(q.has_value());
    CHECK(*q == samples[i]);
  }
}

TEST_CASE("kernel reconstruction over Q(e)") {
  FieldPtr F = fields::eisenstein();
  FieldElement e = FieldElement::generator(F);
  FieldElement e2 = e * e;
  // x0 + e*x1 + e^2*x2 = 0 and x1 - x2 = 0: kernel is 1-dimensional
  std::vector<std::vector<FieldElement>> rows{
      {FieldElement::one(F), e, e2},
      {FieldElement::zero(F), FieldElement::one(F), -FieldElement::one(F)}};
  modp::FillFn fill = [&](DenseMod& m, uint64_t p, uint64_t root) {
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < 3; ++c) {
        auto v = reduce_field_element(rows[r][c], p, root);
        if (!v) return false;
        m.set(r, c, *v);
      }
    return true;
  };
  KernelReconstructor rec(fill, 2, 3, F);
  PrimeSequence seq;
  std::optional<std::vector<std::vector<FieldElement>>> got;
  for (int i = 0; i < 20 && !got; ++i) {
    auto st = rec.step(seq);
    REQUIRE(st != KernelReconstructor::Status::KernelIsEmpty);
    if (st != KernelReconstructor::Status::Progress) continue;
    got = rec.candidate();
  }
  REQUIRE(got.has_value());
  REQUIRE(got->size() == 1);
  const auto& v = (*got)[0];
  for (const auto& row : rows) {
    FieldElement s = FieldElement::zero(F);
    for (int c = 0; c < 3; ++c) s += row[c] * v[c];
    CHECK(s.is_zero());
  }
  CHECK(v[1] == v[2]);
}

TEST_CASE("full-rank probe is confirmed by two primes") {
  FieldPtr F = fields::sqrt2();
  FieldElement r = FieldElement::generator(F);
  std::vector<std::vector<FieldElement>> rows{
      {FieldElement::one(F), r},
      {r, FieldElement::one(F)},  // det = 1 - 2 != 0
      {FieldElement::one(F), FieldElement::one(F)}};
  modp::FillFn fill = [&](DenseMod& m, uint64_t p, uint64_t root) {
    for (size_t rr = 0; rr < rows.size(); ++rr)
      for (size_t c = 0; c < 2; ++c) {
        auto v = reduce_field_element(rows[rr][c], p, root);
        if (!v) return false;
        m.set(rr, c, *v);
      }
    return true;
  };
  PrimeSequence seq;
  auto probe = probe_full_column_rank(fill, 3, 2, *F, seq);
  CHECK(probe.full_column_rank);
  CHECK(probe.primes.size() >= 2);
}
