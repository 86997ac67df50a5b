// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <string>

#include "oracle_util.hpp"
#include "stabkit/pauli.hpp"
#include "stabkit/rng.hpp"

using namespace stabkit;
using namespace stabkit::testing;

namespace {

std::string random_letters(std::size_t n, std::mt19937_64 &rng, bool xz_only) {
  static constexpr char kXZ[] = {'X', 'Z'};
  static constexpr char kAll[] = {'I', 'X', 'Y', 'Z'};
  std::string s(n, 'I');
  for (auto &ch : s) {
    ch = xz_only ? kXZ[rng() & 1] : kAll[rng() & 3];
  }
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("from_letters builds the documented masks") {
  const auto zz = PauliString::from_letters("ZZ");
  CHECK(zz.z_bit(0));
  CHECK(zz.z_bit(1));
  CHECK(!zz.x_bit(0));
  CHECK(!zz.x_bit(1));
  CHECK(zz.sign() == +1);

  const auto xxxx = PauliString::from_letters("XXXX");
  for (std::size_t q = 0; q < 4; ++q) {
    CHECK(xxxx.x_bit(q));
    CHECK(!xxxx.z_bit(q));
  }

  CHECK(PauliString::from_letters("ZZXX") == PauliString::domain_wall(4, 0.5));
  CHECK(PauliString::from_letters("ZZ", -1).sign() == -1);

  CHECK_THROWS_AS(PauliString::from_letters(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::from_letters("ZQ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::from_letters("Z", 2), std::invalid_argument);
}

TEST_CASE("builders emit Hermitian strings") {
  auto rng = make_rng(7, 0, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto p = PauliString::from_letters(random_letters(n, rng, false), (rng() & 1) ? 1 : -1);
    CHECK(p.is_hermitian());
  }
  CHECK(PauliString::domain_wall(17, 0.3).is_hermitian());
}

TEST_CASE("text form round trips") {
  CHECK(PauliString::from_letters("ZZXX").str() == "+ZZXX");
  CHECK(PauliString::parse("-XX").sign() == -1);
  CHECK(PauliString::parse("ZZXX") == PauliString::from_letters("ZZXX"));
  auto rng = make_rng(11, 0, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = PauliString::from_letters(random_letters(1 + rng() % 12, rng, false),
                                             (rng() & 1) ? 1 : -1);
    CHECK(PauliString::parse(p.str()) == p);
  }
}

TEST_CASE("commutes matches the anticommutation of single letters") {
  const auto x = PauliString::from_letters("X");
  const auto z = PauliString::from_letters("Z");
  CHECK(!commutes(x, z));
  CHECK(commutes(PauliString::from_letters("XX"), PauliString::from_letters("ZZ")));
  CHECK_THROWS_AS(commutes(x, PauliString::from_letters("ZZ")), std::invalid_argument);
}

TEST_CASE("commutes agrees with dense commutators exhaustively up to n=4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<PauliString> strings;
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::string letters(n, 'X');
      for (std::size_t q = 0; q < n; ++q) {
        if (bits >> q & 1) letters[q] = 'Z';
      }
      strings.push_back(PauliString::from_letters(letters));
    }
    for (const auto &p : strings) {
      for (const auto &q : strings) {
        const auto mp = pauli_matrix(p);
        const auto mq = pauli_matrix(q);
        const auto pq = matmul(mp, mq, dim);
        const auto qp = matmul(mq, mp, dim);
        Matrix comm(pq.size());
        for (std::size_t i = 0; i < pq.size(); ++i) comm[i] = pq[i] - qp[i];
        const bool dense_commutes = max_abs(comm) < 1e-12;
        CHECK(commutes(p, q) == dense_commutes);
      }
    }
  }
}

TEST_CASE("commutes agrees with dense commutators on 200 random pairs") {
  auto rng = make_rng(23, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto p = PauliString::from_letters(random_letters(n, rng, false));
    const auto q = PauliString::from_letters(random_letters(n, rng, false));
    const std::size_t dim = std::size_t{1} << n;
    const auto pq = matmul(pauli_matrix(p), pauli_matrix(q), dim);
    const auto qp = matmul(pauli_matrix(q), pauli_matrix(p), dim);
    Matrix comm(pq.size());
    for (std::size_t i = 0; i < pq.size(); ++i) comm[i] = pq[i] - qp[i];
    CHECK(commutes(p, q) == (max_abs(comm) < 1e-12));
  }
}

TEST_CASE("multiply tracks phases exactly") {
  const auto x = PauliString::from_letters("X");
  const auto z = PauliString::from_letters("Z");

  const auto xx = multiply(x, x);
  CHECK(xx.is_identity());
  CHECK(xx.phase_exp() == 0);

  // X * Z = -i Y.
  const auto xz = multiply(x, z);
  CHECK(xz.str() == "-iY");
  CHECK(max_abs_diff(pauli_matrix(xz), matmul(pauli_matrix(x), pauli_matrix(z), 2)) < 1e-15);

  CHECK_THROWS_AS(multiply(x, PauliString::from_letters("ZZ")), std::invalid_argument);
}

TEST_CASE("multiply agrees with dense products exhaustively at n=2") {
  std::vector<PauliString> strings;
  static constexpr const char *kLetters = "IXYZ";
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      std::string s{kLetters[a], kLetters[b]};
      strings.push_back(PauliString::from_letters(s));
      strings.push_back(PauliString::from_letters(s, -1));
    }
  }
  for (const auto &p : strings) {
    for (const auto &q : strings) {
      const auto direct = pauli_matrix(multiply(p, q));
      const auto dense = matmul(pauli_matrix(p), pauli_matrix(q), 4);
      CHECK(max_abs_diff(direct, dense) < 1e-14);
    }
  }
}

TEST_CASE("multiply is associative on exhaustive n<=3 letter strings") {
  static constexpr const char *kLetters = "IXYZ";
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<PauliString> strings;
    strings.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
      std::string s(n, 'I');
      for (std::size_t q = 0; q < n; ++q) s[q] = kLetters[(code >> (2 * q)) & 3];
      strings.push_back(PauliString::from_letters(s));
    }
    // Exhaustive triples at n<=2; a fixed random slice at n=3 keeps the
    // case under a second.
    auto rng = make_rng(31, 0, n);
    const std::size_t triples = n <= 2 ? count * count * count : 20000;
    for (std::size_t t = 0; t < triples; ++t) {
      const auto &p = strings[n <= 2 ? t / (count * count) : rng() % count];
      const auto &q = strings[n <= 2 ? (t / count) % count : rng() % count];
      const auto &r = strings[n <= 2 ? t % count : rng() % count];
      CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
    }
  }
}

TEST_CASE("multiply associates on random triples up to n=8") {
  auto rng = make_rng(37, 0, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto p = PauliString::from_letters(random_letters(n, rng, false));
    const auto q = PauliString::from_letters(random_letters(n, rng, false));
    const auto r = PauliString::from_letters(random_letters(n, rng, false));
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
  }
}

TEST_CASE("domain_wall follows the round-half-up rule") {
  CHECK(PauliString::domain_wall(4, 0.0).str() == "+ZZZZ");
  CHECK(PauliString::domain_wall(4, 1.0).str() == "+XXXX");
  CHECK(PauliString::domain_wall(5, 0.5).str() == "+ZZXXX");

  for (std::size_t n = 1; n <= 64; ++n) {
    for (int ri = 0; ri <= 100; ++ri) {
      const double r = ri * 0.01;
      const auto p = PauliString::domain_wall(n, r);
      std::size_t x_count = 0;
      for (std::size_t q = 0; q < n; ++q) x_count += p.x_bit(q);
      CHECK(x_count == static_cast<std::size_t>(std::floor(r * n + 0.5)));
      // X letters must sit on the highest indices.
      if (x_count > 0) CHECK(p.x_bit(n - 1));
      if (x_count < n) CHECK(p.z_bit(0));
    }
  }

  CHECK_THROWS_AS(PauliString::domain_wall(4, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::domain_wall(4, 1.1), std::invalid_argument);
}

TEST_SUITE_END();
