#include <catch2/catch_amalgamated.hpp>

#include "isospec/cyclotomic.hpp"
#include "oracles.hpp"

using namespace isospec;

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(5, 7) == 6);
  CHECK(multiplicative_order(1, 13) == 1);
  CHECK(multiplicative_order(3, 11) == 5);
  CHECK_THROWS_AS(multiplicative_order(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_order(5, 15), std::invalid_argument);  // composite modulus
}

TEST_CASE("order agrees with the direct power walk") {
  for (std::uint64_t ell : primes_up_to(500)) {
    if (ell < 3) continue;
    for (std::uint64_t g : {2ull, 3ull, 5ull, 7ull, 11ull}) {
      if (g % ell == 0) continue;
      CHECK(multiplicative_order(g, ell) == oracles::naive_order(g, ell));
    }
  }
}

TEST_CASE("primitive root verdicts") {
  CHECK(is_primitive_root(5, 7));
  CHECK_FALSE(is_primitive_root(2, 7));   // 2^3 = 1 mod 7
  CHECK_FALSE(is_primitive_root(5, 11));  // order 5
  CHECK(is_primitive_root(2, 11));
}

TEST_CASE("the two primitive-root routes agree below 10^3") {
  for (std::uint64_t ell : primes_up_to(1000)) {
    if (ell < 3) continue;
    for (std::uint64_t g : {5ull, 7ull, 11ull}) {
      if (g == ell) continue;
      CHECK(is_primitive_root(g, ell) == (multiplicative_order(g, ell) == ell - 1));
    }
  }
}

TEST_CASE("real cyclotomic field data") {
  const auto k11 = real_field_data(11);
  CHECK(k11.degree == 5);
  CHECK(k11.discriminant == 14641);  // 11^4
  CHECK(k11.root_discriminant.base == 11);
  CHECK(k11.root_discriminant.exp_num == 8);
  CHECK(k11.root_discriminant.exp_den == 10);

  const auto k5 = real_field_data(5);
  CHECK(k5.degree == 2);
  CHECK(k5.discriminant == 5);

  const auto k7 = real_field_data(7);
  CHECK(k7.root_discriminant.approx() == Catch::Approx(3.65930571).epsilon(1e-8));  // 7^{2/3}

  CHECK_THROWS_AS(real_field_data(3), std::invalid_argument);
  CHECK_THROWS_AS(real_field_data(4), std::invalid_argument);
  CHECK_THROWS_AS(real_field_data(15), std::invalid_argument);
}

TEST_CASE("root discriminant identity rd = (2d+1)^{1 - 1/d}, symbolically") {
  for (std::uint64_t ell : primes_up_to(10000)) {
    if (ell < 5) continue;
    const auto k = real_field_data(ell);
    const std::uint64_t d = k.degree;
    REQUIRE(k.root_discriminant.base == 2 * d + 1);
    // cross-multiplied exponent equality (ell-3)/(ell-1) == (d-1)/d
    REQUIRE(k.root_discriminant.exp_num * d == (d - 1) * k.root_discriminant.exp_den);
  }
}

TEST_CASE("decomposition in the real subfield") {
  const auto d57 = decomposition_in_real_subfield(5, 7);
  CHECK(d57.residue_degree == 3);  // 5^3 = -1 mod 7
  CHECK(d57.num_primes == 1);
  CHECK(d57.inert());

  // 3 is inert in the real subfield of conductor 11 although it is not a
  // primitive root mod 11
  const auto d311 = decomposition_in_real_subfield(3, 11);
  CHECK(d311.residue_degree == 5);
  CHECK(d311.num_primes == 1);
  CHECK(d311.inert());
  CHECK_FALSE(is_primitive_root(3, 11));

  // p = 1 mod ell splits completely: f = 1, m = d
  const auto d29 = decomposition_in_real_subfield(29, 7);
  CHECK(d29.residue_degree == 1);
  CHECK(d29.num_primes == 3);
  CHECK_FALSE(d29.inert());

  CHECK_THROWS_AS(decomposition_in_real_subfield(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(decomposition_in_real_subfield(6, 7), std::invalid_argument);
}

TEST_CASE("residue degree divides the order with quotient 1 or 2") {
  for (std::uint64_t ell : primes_up_to(1000)) {
    if (ell < 5) continue;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
      if (p == ell) continue;
      const auto dec = decomposition_in_real_subfield(p, ell);
      const auto ord = multiplicative_order(p, ell);
      REQUIRE(ord % dec.residue_degree == 0);
      const auto quotient = ord / dec.residue_degree;
      REQUIRE((quotient == 1 || quotient == 2));
      REQUIRE(dec.residue_degree * dec.num_primes == (ell - 1) / 2);
    }
  }
}

TEST_CASE("primitive root implies inert in the real subfield") {
  for (std::uint64_t ell : primes_up_to(2000)) {
    if (ell < 5) continue;
    for (std::uint64_t g : {5ull, 7ull, 11ull}) {
      if (g == ell) continue;
      if (is_primitive_root(g, ell)) {
        const auto dec = decomposition_in_real_subfield(g, ell);
        REQUIRE(dec.residue_degree == (ell - 1) / 2);
        REQUIRE(dec.inert());
      }
    }
  }
}

TEST_CASE("inert conductor stream") {
  const auto s = inert_conductor_stream({5}, 30);
  // witnessed conductors for candidate 5 up to 30
  auto has = [&](std::uint64_t ell, std::uint64_t w) {
    for (const auto& r : s)
      if (r.conductor == ell) return r.witness == w;
    return false;
  };
  CHECK(has(7, 5));
  CHECK(has(17, 5));
  CHECK(has(23, 5));
  for (const auto& r : s) CHECK(r.conductor != 5);  // candidates are self-excluded

  // a candidate never witnesses its own conductor
  const auto t = inert_conductor_stream({5, 7, 11}, 10);
  REQUIRE(t.size() == 2);
  CHECK(t[0].conductor == 5);
  CHECK(t[0].witness == 7);  // 7 = 2 mod 5 generates; 5 itself is excluded
  CHECK(t[1].conductor == 7);
  CHECK(t[1].witness == 5);  // least candidate wins; 11 has order 3 mod 7

  CHECK(inert_conductor_stream({5}, 3).empty());
  CHECK_THROWS_AS(inert_conductor_stream({}, 100), std::invalid_argument);
  CHECK_THROWS_AS(inert_conductor_stream({13}, 100), std::invalid_argument);

  // conductors keep appearing in every tail of the range
  const auto big = inert_conductor_stream({5, 7, 11}, 10000);
  bool tail_nonempty = false;
  for (const auto& r : big) tail_nonempty |= (r.conductor >= 9000);
  CHECK(tail_nonempty);
  // ascending and witnesses verify
  for (std::size_t i = 1; i < big.size(); ++i) REQUIRE(big[i].conductor > big[i - 1].conductor);
  for (std::size_t i = 0; i < big.size(); i += 97)
    REQUIRE(is_primitive_root(big[i].witness, big[i].conductor));
}
