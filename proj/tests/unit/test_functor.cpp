#include <doctest.h>

#include <set>

#include "fincat/functor.hpp"
#include "fincat/io.hpp"
#include "fixtures.hpp"

using namespace fincat;

namespace {

Functor load_functor(const std::string& name) {
  const auto file = io::functor_file_from_json(io::read_file(fixtures::path(name)), fixtures::dir());
  return io::build_functor(file);
}

CategoryRef shared(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

}  // namespace

TEST_CASE("identity and parity functors satisfy the laws and preserve isos") {
  for (const char* name : {"functor_identity.json", "functor_parity.json", "functor_collapse.json"}) {
    const Functor f = load_functor(name);
    CHECK(check_functoriality(f).ok());
    CHECK(check_iso_preservation(f));
    CHECK(unpreserved_isos(f).empty());
  }
}

TEST_CASE("a table that breaks composition is reported and refused") {
  const Functor f = load_functor("functor_broken.json");
  const AxiomReport r = check_functoriality(f);
  CHECK(r.has("composition"));
  CHECK_FALSE(r.has("identity"));
  CHECK_THROWS_AS(check_iso_preservation(f), NotAFunctor);
}

TEST_CASE("partial tables are malformed") {
  CHECK_THROWS_AS(load_functor("functor_partial.json"), MalformedMap);
  const CategoryRef z2 = shared(monoid_as_category(FiniteMonoid::cyclic(2)));
  CHECK_THROWS_AS(Functor(z2, z2, {{kMonoidObject, ObjectId{"elsewhere"}}},
                          {{ArrowId{"0"}, ArrowId{"0"}}, {ArrowId{"1"}, ArrowId{"1"}}}),
                  MalformedMap);
  CHECK_THROWS_AS(Functor(z2, z2, {{kMonoidObject, kMonoidObject}},
                          {{ArrowId{"0"}, ArrowId{"0"}}, {ArrowId{"1"}, ArrowId{"7"}}}),
                  MalformedMap);
}

TEST_CASE("identity-law violation: unit sent to a non-identity") {
  const CategoryRef z2 = shared(monoid_as_category(FiniteMonoid::cyclic(2)));
  const Functor f(z2, z2, {{kMonoidObject, kMonoidObject}},
                  {{ArrowId{"0"}, ArrowId{"1"}}, {ArrowId{"1"}, ArrowId{"1"}}});
  const AxiomReport r = check_functoriality(f);
  CHECK(r.has("identity"));
  CHECK(r.has("composition"));
}

TEST_CASE("typing violations between posets") {
  const FinitePoset chain = FinitePoset::chain({"0", "1"});
  const CategoryRef c = shared(poset_as_category(chain));
  const Functor f(c, c, {{ObjectId{"0"}, ObjectId{"0"}}, {ObjectId{"1"}, ObjectId{"0"}}},
                  {{ArrowId{"0<=0"}, ArrowId{"0<=0"}},
                   {ArrowId{"0<=1"}, ArrowId{"0<=1"}},
                   {ArrowId{"1<=1"}, ArrowId{"0<=0"}}});
  const AxiomReport r = check_functoriality(f);
  REQUIRE(r.has("typing"));
  CHECK(r.violations.front().witnesses.front() == "0<=1");
}

TEST_CASE("non-functors can send isos to non-isos; functors cannot") {
  // Z_2 into the monoid {e, a} with a.a = a: 1 -> a is not a homomorphism.
  const FiniteMonoid idem({"e", "a"}, {0, 1, 1, 1}, 0);
  const CategoryRef z2 = shared(monoid_as_category(FiniteMonoid::cyclic(2)));
  const CategoryRef m = shared(monoid_as_category(idem));
  const Functor bad(z2, m, {{kMonoidObject, kMonoidObject}},
                    {{ArrowId{"0"}, ArrowId{"e"}}, {ArrowId{"1"}, ArrowId{"a"}}});
  CHECK_FALSE(check_functoriality(bad).ok());
  CHECK(unpreserved_isos(bad) == std::vector<ArrowId>{ArrowId{"1"}});
  CHECK_THROWS_AS(check_iso_preservation(bad), NotAFunctor);
  const Functor trivial(z2, m, {{kMonoidObject, kMonoidObject}},
                        {{ArrowId{"0"}, ArrowId{"e"}}, {ArrowId{"1"}, ArrowId{"e"}}});
  CHECK(check_iso_preservation(trivial));
}

TEST_CASE("composition of functors") {
  const Functor parity = load_functor("functor_parity.json");
  const Functor id_target = Functor::identity(parity.target_ref());
  const Functor g = compose_functors(id_target, parity);
  CHECK(g.arrow_map() == parity.arrow_map());
  CHECK(check_functoriality(g).ok());
  CHECK_THROWS_AS(compose_functors(parity, parity), SourceTargetMismatch);
}

TEST_CASE("powerset functor on sets of size <= 2") {
  const FinSet src = build_finset({{"0", {}}, {"1", {"*"}}, {"2", {"a", "b"}}});
  const PowersetFunctor p = powerset_functor(src);
  CHECK(check_functoriality(p.functor).ok());
  CHECK(check_iso_preservation(p.functor));
  CHECK(p.target.set(ObjectId{"P(2)"})->elements ==
        std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}"});
  const ArrowId swap = src.arrow_for(FiniteFunction(src.set(ObjectId{"2"}), src.set(ObjectId{"2"}), {1, 0}));
  CHECK(p.functor(swap) == ArrowId{"P(2)->P(2):[{},{b},{a},{a,b}]"});
  const ArrowId collapse =
      src.arrow_for(FiniteFunction(src.set(ObjectId{"2"}), src.set(ObjectId{"1"}), {0, 0}));
  CHECK(p.functor(collapse) == ArrowId{"P(2)->P(1):[{},{*},{*},{*}]"});
}

TEST_CASE("monotone maps are functors between thin categories, and back") {
  const FinitePoset c3 = FinitePoset::chain({"0", "1", "2"});
  const FinitePoset c2 = FinitePoset::chain({"lo", "hi"});
  const MonotoneMap m(c3, c2, {0, 1, 1});
  const Functor f = monotone_as_functor(m);
  CHECK(check_functoriality(f).ok());
  CHECK(f(ArrowId{"0<=2"}) == ArrowId{"lo<=hi"});
  CHECK(functor_as_monotone(f) == m);
  CHECK_THROWS_AS(monotone_as_functor(MonotoneMap(c3, c2, {1, 0, 1})), NotMonotone);
}

TEST_CASE("monoid homomorphisms are one-object functors, and back") {
  const MonoidHomomorphism h{FiniteMonoid::cyclic(4), FiniteMonoid::cyclic(2), {0, 1, 0, 1}};
  const Functor f = monoid_hom_as_functor(h);
  CHECK(check_functoriality(f).ok());
  const MonoidHomomorphism back = functor_as_monoid_hom(f);
  CHECK(back.map == h.map);
  CHECK_THROWS_AS(monoid_hom_as_functor({FiniteMonoid::cyclic(4), FiniteMonoid::cyclic(2), {0, 1, 1, 1}}),
                  NotAHomomorphism);
  CHECK_THROWS_AS(monoid_hom_as_functor({FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(2), {1, 1}}),
                  NotAHomomorphism);
}

TEST_CASE("functor composition is associative and unital") {
  const Functor parity = load_functor("functor_parity.json");
  const CategoryRef z2 = parity.target_ref();
  const Functor id4 = Functor::identity(parity.source_ref());
  const Functor id2 = Functor::identity(z2);
  CHECK(compose_functors(parity, id4) == parity);
  CHECK(compose_functors(id2, parity) == parity);
  // Z2 -> Z2 negation-free endofunctors: identity and the trivial one.
  const Functor trivial(z2, z2, {{kMonoidObject, kMonoidObject}},
                        {{ArrowId{"0"}, ArrowId{"0"}}, {ArrowId{"1"}, ArrowId{"0"}}});
  CHECK(compose_functors(trivial, compose_functors(id2, parity)) ==
        compose_functors(compose_functors(trivial, id2), parity));
}

TEST_CASE("monotone maps and functors between thin categories correspond one to one") {
  const std::vector<FinitePoset> posets = {
      FinitePoset::chain({"0", "1", "2"}),
      FinitePoset::antichain({"p", "q"}),
      FinitePoset({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}}),
      FinitePoset({"x", "y", "l"}, {{"x", "l"}, {"y", "l"}}),
  };
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      // All maps, monotone or not.
      std::vector<std::size_t> g(p.size(), 0);
      std::size_t monotone = 0;
      std::set<std::map<ArrowId, ArrowId>> tables;
      while (true) {
        const MonotoneMap m(p, q, g);
        if (m.is_monotone()) {
          ++monotone;
          const Functor f = monotone_as_functor(m);
          CHECK(check_functoriality(f).ok());
          CHECK(functor_as_monotone(f) == m);
          tables.insert(f.arrow_map());
        } else {
          CHECK_THROWS_AS(monotone_as_functor(m), NotMonotone);
        }
        std::size_t i = p.size();
        while (i > 0 && ++g[i - 1] == q.size()) g[--i] = 0;
        if (i == 0) break;
      }
      CHECK(tables.size() == monotone);
    }
  }
}
