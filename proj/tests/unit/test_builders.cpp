#include <doctest.h>

#include <random>

#include "fincat/builders.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fincat;

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

}  // namespace

TEST_CASE("FinSet has |Y|^|X| arrows X -> Y and satisfies the category laws") {
  const FinSet c = build_finset({{"0", {}}, {"1", {"a"}}, {"2", {"a", "b"}}, {"3", {"a", "b", "c"}}});
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      CHECK(c.category.hom_at(x, y).size() == power(c.sets[y]->size(), c.sets[x]->size()));
    }
  }
  CHECK(validate(c.category).ok());
}

TEST_CASE("FinSet arrow names list images in element order") {
  const FinSet c = build_finset({{"X", {"p", "q"}}, {"Y", {"0", "1", "2"}}});
  const FiniteFunction f(c.set(ObjectId{"X"}), c.set(ObjectId{"Y"}), {2, 0});
  CHECK(c.arrow_for(f) == ArrowId{"X->Y:[2,0]"});
  CHECK(c.function(ArrowId{"X->Y:[2,0]"}) == f);
}

TEST_CASE("FinSet composition agrees with pointwise composition") {
  const FinSet c = build_finset({{"2", {"0", "1"}}, {"3", {"a", "b", "c"}}});
  const auto s2 = c.set(ObjectId{"2"});
  const auto s3 = c.set(ObjectId{"3"});
  for (const auto& fg : oracle::all_functions(2, 3)) {
    for (const auto& gg : oracle::all_functions(3, 2)) {
      const ArrowId f = c.arrow_for(FiniteFunction(s2, s3, fg));
      const ArrowId g = c.arrow_for(FiniteFunction(s3, s2, gg));
      std::vector<std::size_t> expected;
      for (std::size_t x : fg) expected.push_back(gg[x]);
      CHECK(c.function(c.category.compose(g, f)).graph == expected);
    }
  }
}

TEST_CASE("FinSet rejects sets over the cap and totals over the budget") {
  CHECK_THROWS_AS(build_finset({{"5", {"a", "b", "c", "d", "e"}}}), EnumerationBudgetExceeded);
  CHECK_NOTHROW(build_finset({{"5", {"a", "b", "c", "d", "e"}}}, 5));
  CHECK_THROWS_AS(build_finset({{"3", {"a", "b", "c"}}}, 4, 10), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(build_finset({{"X", {"a"}}, {"X", {"b"}}}), InvalidArgument);
  CHECK_THROWS_AS(build_finset({{"X", {"a", "a"}}}), InvalidArgument);
}

TEST_CASE("FinRel has 2^(|X||Y|) arrows and composes relationally") {
  const FinRel c = build_finrel({{"1", {"x"}}, {"2", {"0", "1"}}});
  CHECK(c.category.arrow_count() == 2 + 4 + 4 + 16);
  CHECK(validate(c.category).ok());
  const auto one = c.sets[0];
  const auto two = c.sets[1];
  const auto r = FiniteRelation::from_pairs(one, two, {{"x", "0"}, {"x", "1"}});
  const auto s = FiniteRelation::from_pairs(two, one, {{"1", "x"}});
  CHECK(c.arrow_for(r) == ArrowId{"1~>2:{(x,0),(x,1)}"});
  const ArrowId rs = c.category.compose(c.arrow_for(s), c.arrow_for(r));
  CHECK(c.relation(rs) == FiniteRelation::from_pairs(one, one, {{"x", "x"}}));
  const ArrowId empty = c.arrow_for(FiniteRelation(two, one, {false, false}));
  CHECK(c.relation(c.category.compose(empty, c.arrow_for(r))) ==
        FiniteRelation(one, one, {false}));
  CHECK(c.category.identity(ObjectId{"2"}) == c.arrow_for(FiniteRelation::diagonal(two)));
  CHECK_THROWS_AS(build_finrel({{"3", {"a", "b", "c"}}}), EnumerationBudgetExceeded);
}

TEST_CASE("posets: closure, strict pairs and cycle rejection") {
  const FinitePoset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.strict_pairs() == std::vector<std::pair<std::string, std::string>>{
                                {"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidPoset);
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}), InvalidPoset);
  CHECK_THROWS_AS(FinitePoset({"a"}, {{"a", "z"}}), UnknownElement);
  CHECK_THROWS_AS(FinitePoset::from_table({"a", "b"}, {true, true, false, false}), InvalidPoset);
  CHECK_THROWS_AS(FinitePoset::from_table({"a", "b", "c"},
                                          {true, true, false, false, true, true, false, false, true}),
                  InvalidPoset);
}

TEST_CASE("poset_as_category is thin and round-trips") {
  const FinitePoset div({"1", "2", "3", "6", "12"},
                        {{"1", "2"}, {"1", "3"}, {"2", "6"}, {"3", "6"}, {"6", "12"}});
  const FiniteCategory c = poset_as_category(div);
  CHECK(validate(c).ok());
  for (std::size_t a = 0; a < div.size(); ++a) {
    for (std::size_t b = 0; b < div.size(); ++b) {
      const long x = std::stol(div.label(a));
      const long y = std::stol(div.label(b));
      CHECK(c.hom_at(a, b).size() == (y % x == 0 ? 1u : 0u));
    }
  }
  CHECK(c.find_arrow(ArrowId{"2<=12"}));
  CHECK(category_to_poset(c) == div);
  CHECK_THROWS_AS(category_to_poset(monoid_as_category(FiniteMonoid::cyclic(2))), InvalidPoset);
}

TEST_CASE("meets in the diamond and in the divisibility order") {
  const FinitePoset diamond({"bot", "a", "b", "top"},
                            {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
  CHECK(diamond.meet(1, 2) == 0u);
  CHECK(diamond.meet(1, 3) == 1u);
  const FinitePoset fork({"x", "y", "l"}, {{"x", "l"}, {"y", "l"}});
  CHECK_FALSE(fork.meet(0, 1));
}

TEST_CASE("monoids: validation and the one-object category") {
  const FiniteMonoid z3 = FiniteMonoid::cyclic(3);
  CHECK(z3.elements() == std::vector<std::string>{"0", "1", "2"});
  const FiniteCategory c = monoid_as_category(z3);
  CHECK(c.object_count() == 1);
  CHECK(c.object(0) == kMonoidObject);
  CHECK(c.identity(kMonoidObject) == ArrowId{"0"});
  CHECK(c.compose(ArrowId{"2"}, ArrowId{"2"}) == ArrowId{"1"});
  CHECK(validate(c).ok());
  CHECK(category_to_monoid(c) == z3);

  // Non-commutative: left zero semigroup {a, b} with a unit adjoined.
  const FiniteMonoid lz({"e", "a", "b"}, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0);
  const FiniteCategory lc = monoid_as_category(lz);
  CHECK(lc.compose(ArrowId{"a"}, ArrowId{"b"}) == ArrowId{"a"});
  CHECK(lc.compose(ArrowId{"b"}, ArrowId{"a"}) == ArrowId{"b"});
  CHECK(validate(lc).ok());

  CHECK_THROWS_AS(FiniteMonoid({"e", "x"}, {0, 1, 1, 1}, 1), InvalidMonoid);
  CHECK_THROWS_AS(FiniteMonoid({"e", "x"}, {0, 1, 1}, 0), InvalidMonoid);
  // x·x = e, but (x·y)·y ≠ x·(y·y) for this table.
  CHECK_THROWS_AS(FiniteMonoid({"e", "x", "y"}, {0, 1, 2, 1, 0, 0, 2, 1, 1}, 0), InvalidMonoid);
  CHECK_THROWS_AS(category_to_monoid(poset_as_category(FinitePoset::antichain({"p", "q"}))),
                  InvalidMonoid);
}

TEST_CASE("Mat over Z_2: hom sizes, naming and M then N = M.N") {
  const MatrixCategory mat(2, 2);
  CHECK(mat.objects() == std::vector<ObjectId>{ObjectId{"0"}, ObjectId{"1"}, ObjectId{"2"}});
  CHECK(mat.hom_size(ObjectId{"1"}, ObjectId{"2"}) == 4);
  CHECK(mat.hom(ObjectId{"2"}, ObjectId{"0"}) == std::vector<ArrowId>{ArrowId{"2x0[;]"}});
  CHECK(mat.hom(ObjectId{"0"}, ObjectId{"2"}) == std::vector<ArrowId>{ArrowId{"0x2[]"}});
  CHECK(mat.identity(ObjectId{"2"}) == ArrowId{"2x2[1,0;0,1]"});
  CHECK(mat.dom(ArrowId{"1x2[1,0]"}) == ObjectId{"1"});
  CHECK(mat.cod(ArrowId{"1x2[1,0]"}) == ObjectId{"2"});
  CHECK_FALSE(mat.contains(ArrowId{"2x2[1,2;0,1]"}));
  CHECK_FALSE(mat.contains(ArrowId{"3x3[1,0,0;0,1,0;0,0,1]"}));
  CHECK_FALSE(mat.contains(ArrowId{"2x2[01,0;0,1]"}));
  CHECK_THROWS_AS(mat.hom(ObjectId{"3"}, ObjectId{"0"}), UnknownObject);

  const auto all = mat.hom(ObjectId{"2"}, ObjectId{"2"});
  for (const auto& m : all) {
    for (const auto& n : all) {
      const auto a = mat.decode(m);
      const auto b = mat.decode(n);
      std::vector<unsigned> e(4);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
          e[r * 2 + c] = (a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c)) % 2;
        }
      }
      CHECK(mat.decode(mat.compose(n, m)).entries == e);
    }
  }
  CHECK(validate_view(mat).ok());
  CHECK(validate(materialize(mat)).ok());
  CHECK(materialize(mat).arrow_count() == 31);
}

TEST_CASE("Mat isos are the matrices with nonzero determinant") {
  for (unsigned p : {2u, 3u}) {
    const MatrixCategory mat(p, 2);
    std::size_t isos = 0;
    for (const auto& f : mat.hom(ObjectId{"2"}, ObjectId{"2"})) {
      const auto m = mat.decode(f);
      const bool invertible = oracle::det2_mod(m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1), p) != 0;
      CHECK(find_inverse(mat, f).has_value() == invertible);
      isos += invertible;
    }
    // |GL_2(Z_p)| = (p^2 - 1)(p^2 - p)
    CHECK(isos == (p * p - 1) * (p * p - p));
  }
  CHECK_THROWS_AS(MatrixCategory(4, 2), InvalidArgument);
  CHECK_THROWS_AS(MatrixCategory(2, 5), EnumerationBudgetExceeded);
}

TEST_CASE("builder fixtures load") {
  CHECK(fixtures::category("finset_small.json").finite().arrow_count() == 1 + 2 + 1 + 4);
  CHECK(fixtures::category("finrel_small.json").finrel.has_value());
  CHECK(fixtures::category("divisibility.json").finite().arrow_count() == 5 + 9);
  CHECK(fixtures::category("z4.json").finite().arrow_count() == 4);
  CHECK(fixtures::category("mat_z2.json").view().objects().size() == 3);
  CHECK_THROWS_AS(fixtures::category("bad_monoid.json"), InvalidMonoid);
  CHECK_THROWS_AS(fixtures::category("cyclic_poset.json"), InvalidPoset);
  CHECK_THROWS_AS(fixtures::category("finset_large.json"), EnumerationBudgetExceeded);
}

TEST_CASE("the empty set: one arrow out of it, none into it from a nonempty set") {
  const FinSet c = build_finset({{"0", {}}, {"2", {"a", "b"}}});
  CHECK(c.category.hom(ObjectId{"0"}, ObjectId{"2"}) == std::vector<ArrowId>{ArrowId{"0->2:[]"}});
  CHECK(c.category.hom(ObjectId{"0"}, ObjectId{"0"}).size() == 1);
  CHECK(c.category.hom(ObjectId{"2"}, ObjectId{"0"}).empty());
  CHECK(validate(c.category).ok());
}

TEST_CASE("poset readback inverts poset_as_category on random posets") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::string> labels;
    const std::size_t n = 1 + rng() % 6;
    for (std::size_t k = 0; k < n; ++k) labels.push_back("p" + std::to_string(k));
    std::vector<std::pair<std::string, std::string>> leq;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) leq.emplace_back(labels[a], labels[b]);
      }
    }
    const FinitePoset p(labels, leq);
    const FiniteCategory c = poset_as_category(p);
    CHECK(validate(c).ok());
    CHECK(category_to_poset(c) == p);
  }
}
