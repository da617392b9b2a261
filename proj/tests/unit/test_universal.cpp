#include <doctest.h>

#include <numeric>
#include <set>

#include "fincat/builders.hpp"
#include "fincat/universal.hpp"
#include "fixtures.hpp"

using namespace fincat;

TEST_CASE("terminals of FinSet are exactly the singletons") {
  const FinSet c = build_finset({{"0", {}}, {"1", {"*"}}, {"1'", {"x"}}, {"2", {"0", "1"}}});
  CHECK(find_terminals(c.category) == std::vector<ObjectId>{ObjectId{"1"}, ObjectId{"1'"}});
  const IsoCertificate iso = terminal_iso_certificate(c.category, ObjectId{"1"}, ObjectId{"1'"});
  CHECK(c.category.compose(iso.backward, iso.forward) == c.category.identity(ObjectId{"1"}));
  CHECK(c.category.compose(iso.forward, iso.backward) == c.category.identity(ObjectId{"1'"}));
  CHECK(iso.checks.size() == 4);
  CHECK_THROWS_AS(terminal_iso_certificate(c.category, ObjectId{"1"}, ObjectId{"2"}), NotTerminal);
  CHECK_THROWS_AS(terminal_iso_certificate(c.category, ObjectId{"0"}, ObjectId{"1"}), NotTerminal);
}

TEST_CASE("terminal objects in posets and monoids") {
  CHECK(find_terminals(fixtures::category("divisibility.json").finite()) ==
        std::vector<ObjectId>{ObjectId{"12"}});
  CHECK(find_terminals(monoid_as_category(FiniteMonoid::cyclic(1))) ==
        std::vector<ObjectId>{kMonoidObject});
  CHECK(find_terminals(monoid_as_category(FiniteMonoid::cyclic(2))).empty());
  CHECK(find_terminals(poset_as_category(FinitePoset::antichain({"p", "q"}))).empty());
}

TEST_CASE("terminal fixture: every pair of terminals is connected by exactly one arrow each way") {
  const FiniteCategory c = fixtures::category("terminals.json").finite();
  const auto ts = find_terminals(c);
  REQUIRE(ts.size() >= 2);
  for (const auto& t : ts) {
    for (const auto& u : ts) {
      CHECK(c.hom(t, u).size() == 1);
      CHECK_NOTHROW(terminal_iso_certificate(c, t, u));
    }
  }
}

TEST_CASE("products in FinSet have apex of size |A||B| and jointly monic projections") {
  const FinSet c = build_finset({{"1", {"*"}}, {"2", {"0", "1"}}, {"2'", {"a", "b"}}, {"4", {"w", "x", "y", "z"}}});
  const auto& cat = c.category;
  for (const auto& a : cat.objects()) {
    for (const auto& b : cat.objects()) {
      const auto certs = find_products(cat, a, b);
      const std::size_t want = c.set(a)->size() * c.set(b)->size();
      bool apex_available = false;
      for (const auto& s : c.sets) apex_available |= s->size() == want;
      CHECK(certs.empty() != apex_available);
      for (const auto& cert : certs) {
        CHECK(c.set(cert.cone.apex)->size() == want);
        const auto& p = c.function(cert.cone.left).graph;
        const auto& q = c.function(cert.cone.right).graph;
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < p.size(); ++i) pairs.insert({p[i], q[i]});
        CHECK(pairs.size() == want);
        CHECK(verify_equational_product(cat, cert));
        CHECK(cert.mediators.size() > 0);
      }
    }
  }
}

TEST_CASE("any two products of the same pair are uniquely isomorphic") {
  const FiniteCategory c = fixtures::category("finset_pairs.json").finite();
  const auto certs = find_products(c, ObjectId{"2"}, ObjectId{"2'"});
  REQUIRE(certs.size() > 1);
  for (const auto& p : certs) {
    for (const auto& q : certs) {
      const IsoCertificate iso = product_iso_certificate(c, p, q);
      CHECK(c.compose(iso.backward, iso.forward) == c.identity(p.cone.apex));
      CHECK(c.compose(q.cone.left, iso.forward) == p.cone.left);
      CHECK(count_projection_respecting(c, p, q) == 1);
    }
  }
  const auto other = find_products(c, ObjectId{"2"}, ObjectId{"1"});
  REQUIRE_FALSE(other.empty());
  CHECK_THROWS_AS(product_iso_certificate(c, certs.front(), other.front()), NotAProduct);
}

TEST_CASE("a pairing table without uniqueness is rejected by the equational check") {
  // 4 -> 2 and 4 -> 1: every cone factors, but not uniquely.
  const FinSet c = build_finset({{"1", {"*"}}, {"2", {"0", "1"}}, {"4", {"w", "x", "y", "z"}}});
  const auto s4 = c.set(ObjectId{"4"});
  const ArrowId p = c.arrow_for(FiniteFunction(s4, c.set(ObjectId{"2"}), {0, 0, 1, 1}));
  const ArrowId q = c.arrow_for(FiniteFunction(s4, c.set(ObjectId{"1"}), {0, 0, 0, 0}));
  const Cone cone{ObjectId{"4"}, p, q};
  const auto table = pairing_table(c.category, ObjectId{"2"}, ObjectId{"1"}, cone);
  REQUIRE(table);
  CHECK_FALSE(verify_equational_product(c.category, *table));
  CHECK_FALSE(check_product(c.category, ObjectId{"2"}, ObjectId{"1"}, cone));
  CHECK(check_product(c.category, ObjectId{"2"}, ObjectId{"1"},
                      Cone{ObjectId{"2"}, c.category.identity(ObjectId{"2"}),
                           c.arrow_for(FiniteFunction(c.set(ObjectId{"2"}), c.set(ObjectId{"1"}), {0, 0}))}));
  // Ill-typed cones are not products.
  CHECK_FALSE(check_product(c.category, ObjectId{"2"}, ObjectId{"1"}, Cone{ObjectId{"4"}, q, p}));
}

TEST_CASE("products in the divisibility order are gcds") {
  const FiniteCategory c = fixtures::category("divisibility.json").finite();
  for (const auto& a : c.objects()) {
    for (const auto& b : c.objects()) {
      const auto certs = find_products(c, a, b);
      REQUIRE(certs.size() == 1);
      CHECK(std::stol(certs[0].cone.apex.name) == std::gcd(std::stol(a.name), std::stol(b.name)));
      CHECK(verify_equational_product(c, certs[0]));
    }
  }
}

TEST_CASE("products in the diamond and M3 are meets; a fork has none") {
  for (const char* name : {"diamond.json", "m3.json"}) {
    const auto loaded = fixtures::category(name);
    const FiniteCategory& c = loaded.finite();
    const FinitePoset p = category_to_poset(c);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        const auto certs = find_products(c, ObjectId{p.label(a)}, ObjectId{p.label(b)});
        REQUIRE(certs.size() == 1);
        // glb by brute force over lower bounds
        std::size_t glb = p.size();
        for (std::size_t x = 0; x < p.size(); ++x) {
          if (!p.leq(x, a) || !p.leq(x, b)) continue;
          bool greatest = true;
          for (std::size_t y = 0; y < p.size(); ++y) {
            if (p.leq(y, a) && p.leq(y, b) && !p.leq(y, x)) greatest = false;
          }
          if (greatest) glb = x;
        }
        CHECK(certs[0].cone.apex.name == p.label(glb));
      }
    }
  }
  const FiniteCategory fork = poset_as_category(FinitePoset({"x", "y", "l"}, {{"x", "l"}, {"y", "l"}}));
  CHECK(find_products(fork, ObjectId{"x"}, ObjectId{"y"}).empty());
}

TEST_CASE("products in a group seen as a category do not exist") {
  const FiniteCategory z2 = monoid_as_category(FiniteMonoid::cyclic(2));
  CHECK(find_products(z2, kMonoidObject, kMonoidObject).empty());
  const FiniteCategory one = monoid_as_category(FiniteMonoid::cyclic(1));
  CHECK(find_products(one, kMonoidObject, kMonoidObject).size() == 1);
}

TEST_CASE("finite products fold binary ones") {
  const FinSet c = build_finset({{"1", {"*"}}, {"2", {"0", "1"}}, {"4", {"a", "b", "c", "d"}}}, 4);
  const auto nullary = finite_product(c.category, {});
  REQUIRE(nullary);
  CHECK(nullary->apex == ObjectId{"1"});
  CHECK(verify_finite_product(c.category, *nullary));
  const auto unary = finite_product(c.category, {ObjectId{"2"}});
  REQUIRE(unary);
  CHECK(unary->projections == std::vector<ArrowId>{c.category.identity(ObjectId{"2"})});
  const auto binary = finite_product(c.category, {ObjectId{"2"}, ObjectId{"2"}});
  REQUIRE(binary);
  CHECK(binary->apex == ObjectId{"4"});
  CHECK(verify_finite_product(c.category, *binary));
  const auto ternary = finite_product(c.category, {ObjectId{"2"}, ObjectId{"2"}, ObjectId{"2"}});
  CHECK_FALSE(ternary);
  const auto with_unit = finite_product(c.category, {ObjectId{"2"}, ObjectId{"1"}, ObjectId{"2"}});
  REQUIRE(with_unit);
  CHECK(verify_finite_product(c.category, *with_unit));
  // A fake: apex 4 with the two projections swapped into the wrong factors.
  FiniteProduct fake = *binary;
  fake.projections.push_back(fake.projections.front());
  fake.factors.push_back(ObjectId{"2"});
  CHECK_FALSE(verify_finite_product(c.category, fake));
}

TEST_CASE("every fixture: products of a pair are connected by exactly one projection-respecting iso") {
  for (const char* name : {"twochain.json", "finset_small.json", "finset_pairs.json", "terminals.json",
                           "finrel_small.json", "divisibility.json", "diamond.json", "m3.json", "z2.json",
                           "z4.json", "idempotent_monoid.json", "one_object.json"}) {
    CAPTURE(name);
    const auto loaded = fixtures::category(name);
    const FiniteCategory& c = loaded.finite();
    for (const auto& a : c.objects()) {
      for (const auto& b : c.objects()) {
        const auto certs = find_products(c, a, b);
        for (const auto& p : certs) {
          CHECK(verify_equational_product(c, p));
          for (const auto& q : certs) {
            CHECK(count_projection_respecting(c, p, q) == 1);
            CHECK_NOTHROW(product_iso_certificate(c, p, q));
          }
        }
      }
    }
  }
}

TEST_CASE("FinSet mediators are x -> (f(x), g(x))") {
  const FinSet c = build_finset({{"1", {"*"}}, {"2", {"0", "1"}}, {"3", {"a", "b", "c"}}, {"4", {"w", "x", "y", "z"}}});
  for (const auto& cert : find_products(c.category, ObjectId{"2"}, ObjectId{"2"})) {
    const auto& p1 = c.function(cert.cone.left).graph;
    const auto& p2 = c.function(cert.cone.right).graph;
    for (const auto& m : cert.mediators) {
      const auto& f = c.function(m.cone.left).graph;
      const auto& g = c.function(m.cone.right).graph;
      const auto& h = c.function(m.mediator).graph;
      for (std::size_t x = 0; x < f.size(); ++x) {
        // h(x) is the apex element whose coordinates are (f(x), g(x)).
        CHECK(p1[h[x]] == f[x]);
        CHECK(p2[h[x]] == g[x]);
      }
    }
  }
}
