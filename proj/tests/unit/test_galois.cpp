#include <doctest.h>

#include <random>

#include "fincat/builders.hpp"
#include "fincat/galois.hpp"
#include "fincat/universal.hpp"
#include "fincat/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_posets.hpp"

using namespace fincat;

namespace {

MonotoneMap load_map(const std::string& name) {
  return io::monotone_from_json(io::read_file(fixtures::path(name)), fixtures::dir());
}

io::AdjointsFile load_pair(const std::string& name) {
  return io::adjoints_from_json(io::read_file(fixtures::path(name)), fixtures::dir());
}

const FinitePoset kDiamond({"bot", "a", "b", "top"},
                           {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});

}  // namespace

TEST_CASE("two incomparable approximants: no best approximation, no left adjoint") {
  const MonotoneMap g = load_map("exercise_gmap.json");
  const Approximation a = best_approximation(g, 0);
  CHECK(a.status == Approximation::Status::NoLeast);
  CHECK(a.approximants == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(a.best);
  CHECK_FALSE(left_adjoint(g));
  CHECK_THROWS_AS(best_approximation(g, 1), UnknownElement);
}

TEST_CASE("no approximants at all") {
  const FinitePoset c2 = FinitePoset::chain({"0", "1"});
  const MonotoneMap g(c2, c2, {0, 0});
  CHECK(best_approximation(g, 1).status == Approximation::Status::NoApproximants);
  CHECK_FALSE(left_adjoint(g));
  CHECK(right_adjoint(g));
}

TEST_CASE("chain inclusion has both adjoints") {
  const MonotoneMap incl = load_map("chain_inclusion.json");
  const auto lower = left_adjoint(incl);
  const auto upper = right_adjoint(incl);
  REQUIRE(lower);
  REQUIRE(upper);
  CHECK(gen::galois(*lower, incl));
  CHECK(gen::galois(incl, *upper));
  CHECK(verify_adjunction(*lower, incl).verified_on == 6);
  CHECK(unit_counit_failures(*lower, incl).empty());
}

TEST_CASE("meet with a has the residual a => - as right adjoint") {
  const auto pair = load_pair("meet_residual.json");
  REQUIRE(pair.left);
  REQUIRE(pair.right);
  CHECK_NOTHROW(verify_adjunction(*pair.left, *pair.right));
  const auto g = right_adjoint(*pair.left);
  REQUIRE(g);
  CHECK(*g == *pair.right);
  CHECK(g->graph() == std::vector<std::size_t>{2, 3, 2, 3});
  const auto f = left_adjoint(*pair.right);
  REQUIRE(f);
  CHECK(*f == *pair.left);
}

TEST_CASE("the wrong way round fails with a witness") {
  const auto pair = load_pair("wrong_side.json");
  CHECK_FALSE(gen::galois(*pair.left, *pair.right));
  const auto v = galois_violation(*pair.left, *pair.right);
  REQUIRE(v);
  CHECK(pair.left->dom().leq(v->first, (*pair.right)(v->second)) !=
        pair.left->cod().leq((*pair.left)(v->first), v->second));
  try {
    verify_adjunction(*pair.left, *pair.right);
    FAIL("expected AdjunctionFails");
  } catch (const AdjunctionFails& e) {
    CHECK(e.witnesses().size() == 2);
  }
  CHECK_FALSE(unit_counit_failures(*pair.left, *pair.right).empty());
}

TEST_CASE("monotonicity and shape errors") {
  const MonotoneMap bad = load_map("nonmonotone.json");
  CHECK_THROWS_AS(left_adjoint(bad), NotMonotone);
  CHECK_THROWS_AS(right_adjoint(bad), NotMonotone);
  CHECK_THROWS_AS(verify_adjunction(bad, MonotoneMap::identity(bad.cod())), NotMonotone);
  const MonotoneMap incl = load_map("chain_inclusion.json");
  CHECK_THROWS_AS(galois_violation(incl, incl), SourceTargetMismatch);
}

TEST_CASE("the diamond: meet with a has a right adjoint but no left adjoint") {
  const MonotoneMap meet_a(kDiamond, kDiamond, {0, 1, 0, 1});
  CHECK(right_adjoint(meet_a));
  // It sends top to a, and right adjoints preserve top.
  CHECK_FALSE(left_adjoint(meet_a));
  for (const auto& f : gen::all_monotone(kDiamond, kDiamond)) CHECK_FALSE(gen::galois(f, meet_a));
}

TEST_CASE("computed adjoints agree with exhaustive search over all monotone maps") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const FinitePoset p = gen::poset(rng, 1 + rng() % 4);
    const FinitePoset q = gen::poset(rng, 1 + rng() % 4);
    const MonotoneMap g = gen::monotone(rng, q, p);
    std::optional<MonotoneMap> by_search;
    std::size_t found = 0;
    for (const auto& f : gen::all_monotone(p, q)) {
      if (gen::galois(f, g)) {
        by_search = f;
        ++found;
      }
    }
    CHECK(found <= 1);  // adjoints are unique
    const auto computed = left_adjoint(g);
    CHECK(computed.has_value() == by_search.has_value());
    if (computed && by_search) CHECK(*computed == *by_search);

    const MonotoneMap f = gen::monotone(rng, p, q);
    std::optional<MonotoneMap> upper;
    for (const auto& h : gen::all_monotone(q, p)) {
      if (gen::galois(f, h)) upper = h;
    }
    const auto right = right_adjoint(f);
    CHECK(right.has_value() == upper.has_value());
    if (right && upper) CHECK(*right == *upper);
  }
}

TEST_CASE("rational labels are reduced") {
  CHECK(rational_label(4, 2) == "2");
  CHECK(rational_label(-1, 2) == "-1/2");
  CHECK(rational_label(5, 2) == "5/2");
  CHECK(rational_label(0, 3) == "0");
  CHECK(rational_label(-6, 4) == "-3/2");
}

TEST_CASE("floor and ceiling are the adjoints of the integer inclusion") {
  for (long den : {1L, 2L, 3L}) {
    const FloorCeilingReport r = floor_ceiling_demo(3, den);
    CHECK(r.rows.size() == static_cast<std::size_t>(6 * den + 1));
    CHECK(r.matches_arithmetic);
    for (const auto& row : r.rows) {
      CHECK(row.floor == oracle::floor_of(row.numerator, den));
      CHECK(row.ceiling == oracle::ceil_of(row.numerator, den));
    }
    CHECK_NOTHROW(verify_adjunction(r.inclusion, r.floor_map));
    CHECK_NOTHROW(verify_adjunction(r.ceiling_map, r.inclusion));
  }
}

TEST_CASE("certificates satisfy the triangle equations as table equalities") {
  std::mt19937_64 rng(23);
  std::size_t certified = 0;
  for (int i = 0; i < 300; ++i) {
    const FinitePoset p = gen::poset(rng, 1 + rng() % 5, 0.6);
    const FinitePoset q = gen::poset(rng, 1 + rng() % 5, 0.6);
    const MonotoneMap f = gen::monotone(rng, p, q);
    const auto g = right_adjoint(f);
    if (!g) continue;
    ++certified;
    const AdjunctionCertificate cert = verify_adjunction(f, *g);
    CHECK(compose(cert.left, compose(cert.right, cert.left)) == cert.left);
    CHECK(compose(cert.right, compose(cert.left, cert.right)) == cert.right);
    CHECK(pointwise_leq(MonotoneMap::identity(p), compose(*g, f)));
    CHECK(pointwise_leq(compose(f, *g), MonotoneMap::identity(q)));
  }
  CHECK(certified > 20);
}

TEST_CASE("meet with a in the residual fixture is the glb found by product search") {
  const auto pair = load_pair("meet_residual.json");
  const FinitePoset& p = pair.left->dom();
  const FiniteCategory c = poset_as_category(p);
  const std::size_t a = p.index_of("a");
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto certs = find_products(c, ObjectId{p.label(x)}, ObjectId{"a"});
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].cone.apex.name == p.label((*pair.left)(x)));
    CHECK(p.meet(x, a) == (*pair.left)(x));
  }
}
