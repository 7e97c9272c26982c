#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "isospec/conjugacy.hpp"
#include "isospec/heisenberg.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

HeisenbergGroup group_for(std::uint64_t q) {
  const auto f = factorize_u64(q);
  REQUIRE(f.size() == 1);
  return HeisenbergGroup(Fq(f[0].first, f[0].second));
}

// Oracle: the 3x3 unitriangular matrix product over F_q.
std::uint64_t matrix_mul(const HeisenbergGroup& g, std::uint64_t a, std::uint64_t b) {
  const Fq& f = g.field();
  const auto s = g.unpack(a), t = g.unpack(b);
  // rows (1, x, y; 0, 1, z; 0, 0, 1)
  const elem_t x = f.add(s.x, t.x);
  const elem_t y = f.add(f.add(s.y, t.y), f.mul(s.x, t.z));
  const elem_t z = f.add(s.z, t.z);
  return g.pack(x, y, z);
}

}  // namespace

TEST_CASE("group law examples") {
  HeisenbergGroup g2 = group_for(2);
  CHECK(g2.mul(g2.pack(1, 0, 0), g2.pack(0, 0, 1)) == g2.pack(1, 1, 1));
  CHECK(g2.mul(g2.identity(), g2.pack(1, 1, 0)) == g2.pack(1, 1, 0));

  HeisenbergGroup g3 = group_for(3);
  CHECK(g3.mul(g3.pack(1, 0, 1), g3.pack(2, 1, 2)) == g3.identity());
  CHECK(g3.inv(g3.pack(1, 0, 1)) == g3.pack(2, 1, 2));
}

TEST_CASE("group law equals the unitriangular matrix product") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
    HeisenbergGroup g = group_for(q);
    for (std::uint64_t a = 0; a < g.order(); ++a)
      for (std::uint64_t b = 0; b < g.order(); ++b)
        REQUIRE(g.mul(a, b) == matrix_mul(g, a, b));
  }
}

TEST_CASE("group axioms") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    HeisenbergGroup g = group_for(q);
    for (std::uint64_t a = 0; a < g.order(); ++a) {
      REQUIRE(g.mul(a, g.identity()) == a);
      REQUIRE(g.mul(g.identity(), a) == a);
      REQUIRE(g.mul(a, g.inv(a)) == g.identity());
      REQUIRE(g.mul(g.inv(a), a) == g.identity());
    }
    for (std::uint64_t a = 0; a < g.order(); ++a)
      for (std::uint64_t b = 0; b < g.order(); ++b)
        for (std::uint64_t c = 0; c < g.order(); ++c)
          REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
  // strided associativity sample for the larger test fields
  for (std::uint64_t q : {7ull, 8ull, 9ull}) {
    HeisenbergGroup g = group_for(q);
    for (std::uint64_t a = 0; a < g.order(); ++a) {
      REQUIRE(g.mul(a, g.inv(a)) == g.identity());
      REQUIRE(g.mul(g.inv(a), a) == g.identity());
    }
    const std::uint64_t step = 7;
    for (std::uint64_t a = 0; a < g.order(); a += step)
      for (std::uint64_t b = 1; b < g.order(); b += step)
        for (std::uint64_t c = 2; c < g.order(); c += step)
          REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("class count is q^2 + q - 1, brute force vs closed form") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
    HeisenbergGroup g = group_for(q);
    REQUIRE(g.order() == q * q * q);
    const auto brute = brute_force_class_table(g);
    const auto closed = closed_form_class_table(g);
    CHECK(brute.classes.size() == q * q + q - 1);
    CHECK(same_partition(brute, closed));
    std::uint64_t total = 0;
    for (const auto& c : brute.classes) total += c.size();
    CHECK(total == g.order());
    // classes are closed under conjugation by every generator
    for (const auto& cls : brute.classes)
      for (auto m : cls.members)
        for (auto gen : g.generators())
          REQUIRE(brute.class_of[g.mul(g.mul(gen, m), g.inv(gen))] == brute.class_of[m]);
  }
}

TEST_CASE("class table matches the pairwise-conjugacy oracle on tiny groups") {
  for (std::uint64_t q : {2ull, 3ull}) {
    HeisenbergGroup g = group_for(q);
    const auto table = brute_force_class_table(g);
    const auto expected = oracles::pairwise_class_partition(g);
    REQUIRE(table.classes.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(table.classes[i].members == expected[i]);
  }
}

TEST_CASE("subgroup_from_map") {
  HeisenbergGroup g5 = group_for(5);
  const auto h1 = base_subgroup(g5);
  CHECK(h1.order() == 5);
  for (elem_t x = 0; x < 5; ++x) CHECK(h1.contains(g5.pack(x, 0, 0)));
  CHECK(is_subgroup(g5, h1));

  // Frobenius map over F4: T(x) = x^2
  HeisenbergGroup g4 = group_for(4);
  const Fq& f4 = g4.field();
  AdditiveMap frob{{0, f4.one()}};
  const auto hf = subgroup_from_map(g4, frob);
  CHECK(hf.order() == 4);
  const elem_t w = f4.from_coeffs({0, 1}), w2 = f4.from_coeffs({1, 1});
  CHECK(hf.contains(g4.identity()));
  CHECK(hf.contains(g4.pack(1, 1, 0)));
  CHECK(hf.contains(g4.pack(w, w2, 0)));   // w^2 = w + 1
  CHECK(hf.contains(g4.pack(w2, w, 0)));   // (w+1)^2 = w^4 = w
  CHECK(is_subgroup(g4, hf));

  // multiplication maps give conjugates of the base subgroup, witness (0,0,-c)
  for (std::uint64_t q : {3ull, 4ull, 5ull}) {
    HeisenbergGroup g = group_for(q);
    const auto h1q = base_subgroup(g);
    for (elem_t c = 0; c < g.field().size(); ++c) {
      const auto hc = subgroup_from_map(g, multiplication_map(g.field(), c));
      CHECK(conjugate_subgroup(g, h1q, g.pack(0, 0, g.field().neg(c))) == hc);
    }
  }
}

TEST_CASE("conjugation sends H_T to H_{T - mu_c}") {
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    HeisenbergGroup g = group_for(q);
    const Fq& f = g.field();
    for (const auto& t : enumerate_additive_maps(f, false)) {
      const auto ht = subgroup_from_map(g, t);
      for (std::uint64_t e = 0; e < g.order(); ++e) {
        const auto tr = g.unpack(e);
        const auto expected = subgroup_from_map(g, map_difference(f, t, multiplication_map(f, tr.z)));
        REQUIRE(conjugate_subgroup(g, ht, e) == expected);
      }
    }
  }
}

TEST_CASE("H_T and H_T' are conjugate iff T - T' is a multiplication map") {
  for (std::uint64_t q : {4ull, 9ull}) {
    HeisenbergGroup g = group_for(q);
    const Fq& f = g.field();
    const auto maps = enumerate_additive_maps(f, false);
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j) {
        const bool expect = map_difference(f, maps[i], maps[j]).is_multiplication_map();
        const auto verdict = find_conjugator(g, subgroup_from_map(g, maps[i]), subgroup_from_map(g, maps[j]));
        REQUIRE(verdict.conjugate == expect);
      }
  }
}

TEST_CASE("bgg family counts and basic structure") {
  CHECK(bgg_family(group_for(4)).size() == 4);
  CHECK(bgg_family(group_for(5)).size() == 1);  // prime field: just the base subgroup
  CHECK(bgg_family(group_for(8)).size() == 64);
  CHECK(bgg_family(group_for(9)).size() == 9);
  CHECK(bgg_family(group_for(25)).size() == 25);
  HeisenbergGroup g9 = group_for(9);
  for (const auto& h : bgg_family(g9)) {
    CHECK(h.order() == 9);
    CHECK(is_subgroup(g9, h));
  }
  CHECK(bgg_family(group_for(5)).front() == base_subgroup(group_for(5)));
}

TEST_CASE("translation automorphism is a homomorphism for every additive map") {
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    HeisenbergGroup g = group_for(q);
    const Fq& f = g.field();
    for (const auto& t : enumerate_additive_maps(f, false)) {
      auto phi = [&](std::uint64_t e) {
        const auto tr = g.unpack(e);
        return g.pack(tr.x, f.add(tr.y, apply(f, t, tr.x)), tr.z);
      };
      for (std::uint64_t a = 0; a < g.order(); ++a)
        for (std::uint64_t b = 0; b < g.order(); ++b)
          REQUIRE(phi(g.mul(a, b)) == g.mul(phi(a), phi(b)));
    }
  }
  // q = 9 with the family maps only
  HeisenbergGroup g9 = group_for(9);
  const Fq& f9 = g9.field();
  for (const auto& t : enumerate_additive_maps(f9, true)) {
    auto phi = [&](std::uint64_t e) {
      const auto tr = g9.unpack(e);
      return g9.pack(tr.x, f9.add(tr.y, apply(f9, t, tr.x)), tr.z);
    };
    for (std::uint64_t a = 0; a < g9.order(); a += 5)
      for (std::uint64_t b = 0; b < g9.order(); ++b)
        REQUIRE(phi(g9.mul(a, b)) == g9.mul(phi(a), phi(b)));
  }
}

TEST_CASE("product groups") {
  ProductGroup single({group_for(2)});
  CHECK(single.order() == 8);

  ProductGroup g({group_for(2), group_for(3)});
  CHECK(g.order() == 216);

  // class table: product of factor tables vs brute force
  const auto factor_tables = std::vector<ClassTable>{
      brute_force_class_table(group_for(2)), brute_force_class_table(group_for(3))};
  const auto prod = product_class_table(g, factor_tables);
  CHECK(prod.classes.size() == 5 * 11);
  CHECK(same_partition(prod, brute_force_class_table(g)));

  // three factors
  ProductGroup g3({group_for(2), group_for(2), group_for(2)});
  CHECK(g3.order() == 512);
  const auto t2 = brute_force_class_table(group_for(2));
  const auto prod3 = product_class_table(g3, {t2, t2, t2});
  CHECK(prod3.classes.size() == 125);
  CHECK(same_partition(prod3, brute_force_class_table(g3)));
  const auto family3 = product_family(g3, {bgg_family(group_for(2)), bgg_family(group_for(2)),
                                           bgg_family(group_for(2))});
  REQUIRE(family3.size() == 1);
  CHECK(family3[0].order() == 8);
  CHECK(is_subgroup(g3, family3[0]));
}

TEST_CASE("product families") {
  // [family(F4), family(F9)]: 36 subgroups of order 36
  {
    ProductGroup g({group_for(4), group_for(9)});
    const auto fams = std::vector<std::vector<Subgroup>>{bgg_family(group_for(4)), bgg_family(group_for(9))};
    const auto family = product_family(g, fams);
    CHECK(family.size() == 36);
    for (const auto& h : family) CHECK(h.order() == 36);
    CHECK(is_subgroup(g, family.front()));
  }
  // [family(F5)]: a single subgroup
  {
    ProductGroup g({group_for(5)});
    const auto family = product_family(g, {bgg_family(group_for(5))});
    CHECK(family.size() == 1);
  }
  // [family(F4), family(F4)]: 16 subgroups, pairwise almost conjugate and
  // pairwise nonconjugate by exhaustive search over the 4096-element ambient
  {
    ProductGroup g({group_for(4), group_for(4)});
    const auto fams = std::vector<std::vector<Subgroup>>{bgg_family(group_for(4)), bgg_family(group_for(4))};
    const auto family = product_family(g, fams);
    REQUIRE(family.size() == 16);
    const auto t4 = brute_force_class_table(group_for(4));
    const auto table = product_class_table(g, {t4, t4});
    std::vector<Fingerprint> prints;
    for (const auto& h : family) {
      CHECK(h.order() == 16);
      prints.push_back(fingerprint(table, h));
    }
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        REQUIRE(almost_conjugate(prints[i], prints[j]));
        const auto verdict = find_conjugator(g, family[i], family[j]);
        REQUIRE_FALSE(verdict.conjugate);
        REQUIRE(verdict.search_exhausted);
      }
  }
}

TEST_CASE("fingerprint of H_T meets each noncentral z=0 class exactly once") {
  for (std::uint64_t q : {4ull, 8ull, 9ull}) {
    HeisenbergGroup g = group_for(q);
    const auto table = closed_form_class_table(g);
    for (const auto& h : bgg_family(g)) {
      const auto fp = fingerprint(table, h);
      for (std::size_t i = 0; i < table.classes.size(); ++i) {
        const auto rep = g.unpack(table.classes[i].representative);
        std::uint64_t expect = 0;
        if (table.classes[i].representative == g.identity())
          expect = 1;
        else if (rep.x != 0 && rep.z == 0)
          expect = 1;
        REQUIRE(fp.counts[i] == expect);
      }
    }
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(HeisenbergGroup(Fq(2, 8), 1 << 20), CapExceeded);  // 2^24 > 2^20
  CHECK_THROWS_AS(ProductGroup({group_for(9), group_for(9), group_for(9)}), CapExceeded);
}
