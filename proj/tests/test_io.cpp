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

using namespace plarr;

TEST_CASE("arrangement files round-trip byte-identically after canonicalization") {
  for (const char* path : {"data/h57.json", "data/o33.json", "data/c8.json",
                           "data/hesse12.json", "data/generic5.json", "data/cl.json"}) {
    auto file = io::arrangement_file_from_json(io::load_json(path));
    std::string once = io::dump_json(io::arrangement_file_to_json(file));
    auto again = io::arrangement_file_from_json(io::Json::parse(once));
    std::string twice = io::dump_json(io::arrangement_file_to_json(again));
    CHECK(once == twice);
  }
}

TEST_CASE("big integers survive the string fallback") {
  Integer big("123456789012345678901234567890");
  io::Json j = io::integer_to_json(big);
  CHECK(j.is_string());
  CHECK(io::integer_from_json(j) == big);
  io::Json small = io::integer_to_json(Integer(-42));
  CHECK(small.is_number_integer());
  CHECK(io::integer_from_json(small) == Integer(-42));

  Rational q(big, Integer(7));
  q.canonicalize();
  CHECK(io::rational_from_json(io::rational_to_json(q)) == q);
}

TEST_CASE("field parsing reuses built-ins and rejects junk") {
  io::Json j = io::field_to_json(*fields::eisenstein());
  FieldPtr F = io::field_from_json(j);
  CHECK(F.get() == fields::eisenstein().get());

  io::Json bad = {{"label", "Q(x)"}};
  CHECK_THROWS_AS(io::field_from_json(bad), ParseError);

  io::Json zero_den = {{"label", "Q"}, {"minpoly", {{0, 0}, {1, 1}}}};
  CHECK_THROWS_AS(io::field_from_json(zero_den), ParseError);
}

TEST_CASE("monodromy CSV parsing") {
  std::istringstream in("q,n2\n3,0\n6,1\n18,11\n");
  MonodromyTable t = io::monodromy_table_from_csv(in);
  CHECK(t.n2(3) == 0);
  CHECK(t.n2(6) == 1);
  CHECK(t.n2(18) == 11);
  CHECK(t.n2(2) == 0);   // implicit
  CHECK(t.n2(17) == 0);  // missing rows default to zero

  std::istringstream bad("3;0\n");
  CHECK_THROWS_AS(io::monodromy_table_from_csv(bad), ParseError);
}

TEST_CASE("sha256 known vectors") {
  CHECK(Sha256::of("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(Sha256::of("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // a multi-block message
  std::string long_msg(1000, 'a');
  CHECK(Sha256::of(long_msg) ==
        "41edece42d63e8d9bf515a9ba6932e1c20cbc9f5a5d134645adb5db1b9737ea3");
}

TEST_CASE("malformed arrangement files are rejected") {
  io::Json no_field = {{"lines", io::Json::array()}};
  CHECK_THROWS_AS(io::arrangement_file_from_json(no_field), ParseError);

  io::Json two_coords = io::load_json("data/generic5.json");
  two_coords["lines"][0] = io::Json::array({io::Json::array({io::Json::array({1, 1})})});
  CHECK_THROWS_AS(io::arrangement_file_from_json(two_coords), ParseError);
}
