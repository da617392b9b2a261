#include <doctest.h>

#include "fincat/builders.hpp"
#include "fincat/io.hpp"
#include "fincat/nno.hpp"
#include "fixtures.hpp"

using namespace fincat;

namespace {

RecursionData plus_one_mod(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<std::size_t> graph;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(std::to_string(i));
    graph.push_back((i + 1) % m);
  }
  const auto z = make_universe("Z" + std::to_string(m), labels);
  return RecursionData(z, 0, FiniteFunction(z, z, graph));
}

}  // namespace

TEST_CASE("numerals are iterated successors of zero") {
  const auto sys = BoundedNaturalSystem::standard(4);
  CHECK(sys.bound() == 4);
  const Numeral three = numeral(sys, 3);
  CHECK(three.text == "s∘s∘s∘z");
  CHECK(three.arrows == std::vector<std::string>{"s", "s", "s", "z"});
  CHECK(three.value == 3);
  CHECK(numeral(sys, 0).text == "z");
  CHECK_THROWS_AS(numeral(sys, 5), BoundExceeded);
  const BoundedNaturalSystem gap({"0", "1", "2"}, {1, std::nullopt, std::nullopt});
  CHECK_THROWS_AS(numeral(gap, 2), BoundExceeded);
  CHECK_THROWS_AS(BoundedNaturalSystem({"0", "0"}, {1, std::nullopt}), InvalidArgument);
  CHECK_THROWS_AS(BoundedNaturalSystem({"0", "1"}, {7, std::nullopt}), InvalidArgument);
}

TEST_CASE("primitive recursion: h(n) = f^n(c)") {
  const RecursionData d = plus_one_mod(3);
  for (std::size_t n = 0; n < 10; ++n) CHECK(primrec_eval(d, n) == n % 3);
  CHECK(primrec_trace(d, 4) == std::vector<std::size_t>{0, 1, 2, 0, 1});
  const auto swap = io::recursion_from_json(io::read_file(fixtures::path("recursion_swap.json")));
  CHECK(primrec_trace(swap, 3) == std::vector<std::size_t>{0, 1, 0, 1});
  const auto u = make_universe("U", {"a"});
  const auto v = make_universe("U", {"a"});
  CHECK_THROWS_AS(RecursionData(u, 1, FiniteFunction(u, u, {0})), InvalidArgument);
  CHECK_THROWS_AS(RecursionData(u, 0, FiniteFunction(u, make_universe("W", {"x", "y"}), {0})),
                  InvalidArgument);
  CHECK_NOTHROW(RecursionData(u, 0, FiniteFunction(v, v, {0})));  // equal by value
}

TEST_CASE("mediation equations") {
  const RecursionData d = plus_one_mod(3);
  const auto good = primrec_trace(d, 6);
  const MediationReport ok = check_mediation(d, good, 6);
  CHECK(ok.equations_hold);
  CHECK_FALSE(ok.witness);
  auto bad = good;
  bad[4] = 0;
  const MediationReport r = check_mediation(d, bad, 6);
  CHECK_FALSE(r.equations_hold);
  CHECK(r.witness == 4u);
  auto wrong_start = good;
  wrong_start[0] = 2;
  CHECK(check_mediation(d, wrong_start, 6).witness == 0u);
  CHECK_THROWS_AS(check_mediation(d, good, 7), InvalidArgument);
}

TEST_CASE("no finite FinSet fragment has an NNO") {
  const FinSet c = build_finset({{"1", {"*"}}, {"2", {"0", "1"}}});
  const NnoSearchResult r = nno_search(c.category);
  REQUIRE(r.terminal);
  CHECK(*r.terminal == ObjectId{"1"});
  CHECK(r.triples.empty());
  // (z, s) pairs: |hom(1,1)|*|hom(1,1)| + |hom(1,2)|*|hom(2,2)| = 1 + 2*4.
  CHECK(r.candidates_tested == 9);
}

TEST_CASE("the one-object, one-arrow category has the trivial triple") {
  const FiniteCategory one = monoid_as_category(FiniteMonoid::cyclic(1));
  const NnoSearchResult r = nno_search(one);
  REQUIRE(r.triples.size() == 1);
  CHECK(r.triples[0] == NnoTriple{kMonoidObject, ArrowId{"0"}, ArrowId{"0"}});
  const NnoSearchResult from_file = nno_search(fixtures::category("one_object.json").finite());
  CHECK(from_file.triples.size() == 1);
}

TEST_CASE("without a terminal object the search reports why") {
  const NnoSearchResult r = nno_search(monoid_as_category(FiniteMonoid::cyclic(2)));
  CHECK_FALSE(r.terminal);
  CHECK(r.triples.empty());
  CHECK(r.note == "no terminal object");
}

TEST_CASE("search results are stable under relabeling") {
  const FinSet c = build_finset({{"1", {"*"}}, {"2", {"0", "1"}}});
  std::unordered_map<ObjectId, ObjectId> objects{{ObjectId{"1"}, ObjectId{"pt"}},
                                                 {ObjectId{"2"}, ObjectId{"bool"}}};
  std::unordered_map<ArrowId, ArrowId> arrows;
  for (std::size_t i = 0; i < c.category.arrow_count(); ++i) {
    arrows.emplace(c.category.arrow(i).name, ArrowId{"f" + std::to_string(i)});
  }
  const NnoSearchResult r = nno_search(relabel(c.category, objects, arrows));
  CHECK(r.terminal == ObjectId{"pt"});
  CHECK(r.triples.empty());
  const NnoSearchResult one =
      nno_search(relabel(monoid_as_category(FiniteMonoid::cyclic(1)), {{kMonoidObject, ObjectId{"N"}}},
                         {{ArrowId{"0"}, ArrowId{"id"}}}));
  REQUIRE(one.triples.size() == 1);
  CHECK(one.triples[0] == NnoTriple{ObjectId{"N"}, ArrowId{"id"}, ArrowId{"id"}});
}

TEST_CASE("Dedekind conditions on a bounded prefix") {
  const DedekindReport standard = dedekind_prefix_check(BoundedNaturalSystem::standard(5));
  CHECK(standard.holds);
  CHECK(standard.boundary_exempt);
  // Wrap-around: s(top) = zero puts zero in the image.
  const DedekindReport wrap = dedekind_prefix_check(BoundedNaturalSystem({"0", "1", "2"}, {1, 2, 0}));
  CHECK_FALSE(wrap.holds);
  CHECK_FALSE(wrap.boundary_exempt);
  // Collapse: s(1) = 1 is not injective and misses 2.
  const DedekindReport collapse =
      dedekind_prefix_check(BoundedNaturalSystem({"0", "1", "2"}, {1, 1, std::nullopt}));
  CHECK_FALSE(collapse.holds);
  CHECK(collapse.witnesses.size() == 2);
}

TEST_CASE("the recursion square, unrolled") {
  const auto swap = io::recursion_from_json(io::read_file(fixtures::path("recursion_swap.json")));
  for (const RecursionData& d : {plus_one_mod(3), plus_one_mod(1), swap}) {
    for (std::size_t n = 0; n < 50; ++n) CHECK(primrec_eval(d, n + 1) == d.f(primrec_eval(d, n)));
  }
}

TEST_CASE("mediation is unique on the bounded prefix") {
  // Every endofunction and start point on carriers of size <= 3, every
  // candidate h : [0,4] -> A.
  const std::vector<std::string> names = {"a", "b", "c"};
  for (std::size_t size = 1; size <= 3; ++size) {
    const auto u = make_universe("A", {names.begin(), names.begin() + size});
    std::vector<std::size_t> f(size, 0);
    while (true) {
      for (std::size_t c = 0; c < size; ++c) {
        const RecursionData d(u, c, FiniteFunction(u, u, f));
        std::vector<std::size_t> h(5, 0);
        std::size_t passing = 0;
        while (true) {
          if (check_mediation(d, h, 4).equations_hold) {
            ++passing;
            CHECK(h == primrec_trace(d, 4));
          }
          std::size_t i = h.size();
          while (i > 0 && ++h[i - 1] == size) h[--i] = 0;
          if (i == 0) break;
        }
        CHECK(passing == 1);
      }
      std::size_t i = size;
      while (i > 0 && ++f[i - 1] == size) f[--i] = 0;
      if (i == 0) break;
    }
  }
}
