#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "isospec/finite_field.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

Fq field_for(std::uint64_t q) {
  const auto f = factorize_u64(q);
  REQUIRE(f.size() == 1);
  return Fq(f[0].first, f[0].second);
}

}  // namespace

TEST_CASE("deterministic modulus selection") {
  CHECK(Fq(2, 1).modulus() == std::vector<std::uint32_t>{0, 1});  // prime field convention: x
  CHECK(Fq(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Fq(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  // construction is reproducible
  CHECK(Fq(5, 2).modulus() == Fq(5, 2).modulus());
}

TEST_CASE("modulus is the lexicographically least irreducible (Frobenius-gcd oracle)") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 8}}) {
    Fq f(p, n);
    const auto& m = f.modulus();
    REQUIRE(m.size() == n + 1);
    REQUIRE(m[n] == 1);
    CHECK(oracles::frobenius_irreducible(m, p));
    // every lexicographically smaller monic candidate is reducible
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= p;
    std::vector<std::uint32_t> cand(n + 1, 0);
    cand[n] = 1;
    bool reached = false;
    for (std::uint64_t v = 0; v < total && !reached; ++v) {
      std::uint64_t t = v;
      for (unsigned j = n; j-- > 0;) {
        cand[j] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (cand == m) {
        reached = true;
        break;
      }
      CHECK_FALSE(oracles::frobenius_irreducible(cand, p));
    }
    CHECK(reached);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Fq(4, 1), std::invalid_argument);   // composite characteristic
  CHECK_THROWS_AS(Fq(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Fq(2, 0), std::invalid_argument);   // zero degree
  CHECK_THROWS_AS(Fq(2, 17), CapExceeded);            // past the default cap
  CHECK_THROWS_AS(Fq(2, 5, 16), CapExceeded);         // past an explicit cap
  CHECK_NOTHROW(Fq(2, 5, 32));
}

TEST_CASE("arithmetic examples") {
  Fq f4(2, 2);
  const elem_t x = f4.from_coeffs({0, 1});
  const elem_t x_plus_1 = f4.from_coeffs({1, 1});
  CHECK(f4.mul(x, x) == x_plus_1);  // x^2 = x + 1 mod x^2+x+1

  Fq f7(7, 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.mul(3, 5) == f7.one());
  CHECK_THROWS_AS(f7.inv(0), std::domain_error);

  for (std::uint64_t q : {4ull, 5ull, 9ull}) {
    Fq f = field_for(q);
    for (elem_t a = 0; a < f.size(); ++a) CHECK(f.mul(a, f.one()) == a);
  }

  Fq f9(3, 2);
  CHECK(f9.pow(f9.from_coeffs({0, 1}), 8) == f9.one());  // generator order divides q-1
  CHECK(f9.pow(f9.from_coeffs({0, 1}), 0) == f9.one());
}

TEST_CASE("field axioms") {
  // exhaustive triples for small q, deterministic strided sample above
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
    Fq f = field_for(q);
    for (elem_t a = 0; a < f.size(); ++a)
      for (elem_t b = 0; b < f.size(); ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        for (elem_t c = 0; c < f.size(); ++c) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    for (elem_t a = 0; a < f.size(); ++a) {
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == f.one());
    }
  }
  for (std::uint64_t q : {11ull, 13ull, 16ull, 17ull, 19ull, 23ull, 25ull, 27ull, 29ull, 31ull, 32ull,
                          37ull, 41ull, 43ull, 47ull, 49ull}) {
    Fq f = field_for(q);
    const std::uint64_t step = q / 7 + 1;
    for (elem_t a = 0; a < f.size(); a += 2)
      for (elem_t b = 0; b < f.size(); b += static_cast<elem_t>(step))
        for (elem_t c = 0; c < f.size(); c += static_cast<elem_t>(step)) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    for (elem_t a = 1; a < f.size(); ++a) {
      REQUIRE(f.mul(a, f.inv(a)) == f.one());
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
    }
  }
  // fields past the lookup-table limit run the direct polynomial path
  for (std::uint64_t q : {343ull, 1024ull}) {
    Fq f = field_for(q);
    const std::uint64_t step = q / 11 + 1;
    for (elem_t a = 0; a < f.size(); a += static_cast<elem_t>(step))
      for (elem_t b = 0; b < f.size(); b += static_cast<elem_t>(step))
        for (elem_t c = 0; c < f.size(); c += static_cast<elem_t>(step)) {
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    for (elem_t a = 1; a < f.size(); a += 3) REQUIRE(f.mul(a, f.inv(a)) == f.one());
    REQUIRE(f.pow(f.from_coeffs([&] {
              std::vector<std::uint32_t> v(f.degree(), 0);
              v[1] = 1;
              return v;
            }()),
            f.size() - 1) == f.one());
  }
}

TEST_CASE("additive maps are additive and F_p-linear") {
  for (std::uint64_t q : {4ull, 8ull, 9ull, 25ull}) {
    Fq f = field_for(q);
    for (const auto& t : enumerate_additive_maps(f, false)) {
      for (elem_t x = 0; x < f.size(); ++x)
        for (elem_t y = 0; y < f.size(); ++y)
          REQUIRE(apply(f, t, f.add(x, y)) == f.add(apply(f, t, x), apply(f, t, y)));
      for (std::uint64_t lam = 0; lam < f.p(); ++lam) {
        const elem_t l = f.from_int(lam);
        for (elem_t x = 0; x < f.size(); ++x)
          REQUIRE(apply(f, t, f.mul(l, x)) == f.mul(l, apply(f, t, x)));
      }
    }
  }
}

TEST_CASE("additive map enumeration counts") {
  CHECK(enumerate_additive_maps(Fq(2, 2), true).size() == 4);    // p^{n(n-1)} = 2^2
  CHECK(enumerate_additive_maps(Fq(3, 2), true).size() == 9);
  CHECK(enumerate_additive_maps(Fq(5, 1), true).size() == 1);    // prime field: only the zero map
  CHECK(enumerate_additive_maps(Fq(3, 2), false).size() == 81);  // p^{n^2} = 3^4
  CHECK_THROWS_AS(enumerate_additive_maps(Fq(2, 2), false, 10), CapExceeded);
}

TEST_CASE("a0-pinned maps tile all maps by multiplication translates") {
  for (std::uint64_t q : {4ull, 9ull}) {
    Fq f = field_for(q);
    const auto pinned = enumerate_additive_maps(f, true);
    const auto all = enumerate_additive_maps(f, false);
    std::set<std::vector<elem_t>> translated;
    for (const auto& t : pinned)
      for (elem_t c = 0; c < f.size(); ++c) {
        auto s = map_sum(f, t, multiplication_map(f, c));
        CHECK(translated.insert(s.coeffs).second);  // cosets are disjoint
      }
    std::set<std::vector<elem_t>> whole;
    for (const auto& t : all) whole.insert(t.coeffs);
    CHECK(translated == whole);
  }
}

TEST_CASE("multiplication map detection") {
  Fq f(3, 2);
  CHECK(multiplication_map(f, 5).is_multiplication_map());
  AdditiveMap frob{{0, f.one()}};
  CHECK_FALSE(frob.is_multiplication_map());
  CHECK(AdditiveMap{{4, 0}}.is_multiplication_map());
}
