/*
   Copyright 2026 The u2split Authors

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

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "u2split/field.hpp"

using namespace u2split;

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(f7.from_int(3) + f7.from_int(5) == f7.from_int(1));
  CHECK(f7.from_int(2).inv() == f7.from_int(4));
  CHECK(f7.from_int(-1).str() == "6");
  CHECK((f7.from_int(3) / f7.from_int(5)) * f7.from_int(5) == f7.from_int(3));
  CHECK_THROWS_AS(f7.zero().inv(), Error);
  CHECK(f7.parse("-5/6") == f7.from_int(-5) / f7.from_int(6));
}

TEST_CASE("rational arithmetic") {
  Field q = Field::rationals();
  CHECK((q.parse("1/2") + q.parse("1/3")).str() == "5/6");
  CHECK(q.parse("4/-6").str() == "-2/3");
  CHECK(q.parse("-5/6").str() == "-5/6");
  CHECK_THROWS_AS(q.parse("1/0"), Error);
  CHECK_THROWS_AS(q.parse("abc"), Error);
}

TEST_CASE("unsupported moduli") {
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::prime(1ULL << 31), Error);
  CHECK(Field::prime(2147483647ULL).modulus() == 2147483647U);
}

TEST_CASE("field mismatch is rejected") {
  CHECK_THROWS_AS(Field::prime(3).one() + Field::prime(5).one(), Error);
  CHECK_THROWS_AS(Field::prime(3).one() + Field::rationals().one(), Error);
}

TEST_CASE("square classes match brute-force squaring") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    Field f = Field::prime(p);
    std::set<std::uint32_t> sq;
    for (std::uint32_t x = 0; x < p; ++x) sq.insert(static_cast<std::uint32_t>((1ULL * x * x) % p));
    for (std::uint32_t a = 0; a < p; ++a) {
      Scalar s = f.from_int(a);
      CHECK(f.is_square(s) == (sq.count(a) == 1));
      if (f.is_square(s)) CHECK(f.sqrt(s) * f.sqrt(s) == s);
    }
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b) {
        Scalar x = f.from_int(a), y = f.from_int(b);
        CHECK(f.is_square(x * y) == (f.is_square(x) == f.is_square(y)));
      }
  }
  CHECK(Field::prime(7).is_square(Field::prime(7).from_int(2)));
  CHECK_FALSE(Field::prime(5).is_square(Field::prime(5).from_int(2)));
  CHECK_THROWS_AS(Field::rationals().is_square(Field::rationals().one()), Error);
}

TEST_CASE("sqrt for a large prime") {
  Field f = Field::prime(1000000007ULL);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Scalar x = testutil::rand_scalar(f, rng);
    Scalar s = x * x;
    CHECK(f.sqrt(s) * f.sqrt(s) == s);
  }
}

TEST_CASE("inverse is two-sided and parse/print round trips") {
  std::mt19937_64 rng(3);
  Field f = Field::prime(101);
  for (int i = 0; i < 300; ++i) {
    Scalar a = testutil::rand_unit(f, rng);
    CHECK(a * a.inv() == f.one());
    CHECK(a.inv() * a == f.one());
    CHECK(f.parse(a.str()) == a);
  }
  Field q = Field::rationals();
  for (const char* s : {"0", "7", "-5/6", "123456789012345678901234567890/7"}) CHECK(q.parse(q.parse(s).str()).str() == q.parse(s).str());
}
