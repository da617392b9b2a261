#include "fincat/galois.hpp"

#include <numeric>

namespace fincat {

namespace {

void require_shapes(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.dom() == g.cod()) || !(f.cod() == g.dom())) {
    throw SourceTargetMismatch("maps are not opposed: need f : P -> Q and g : Q -> P");
  }
}

Approximation extremal(std::vector<std::size_t> candidates, const FinitePoset& order, bool least) {
  Approximation out{Approximation::Status::NoApproximants, std::move(candidates), std::nullopt};
  if (out.approximants.empty()) return out;
  for (std::size_t y : out.approximants) {
    bool extreme = true;
    for (std::size_t z : out.approximants) {
      if (least ? !order.leq(y, z) : !order.leq(z, y)) {
        extreme = false;
        break;
      }
    }
    if (extreme) {
      out.status = Approximation::Status::Best;
      out.best = y;
      return out;
    }
  }
  out.status = Approximation::Status::NoLeast;
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Approximation best_approximation(const MonotoneMap& g, std::size_t x) {
  const FinitePoset& p = g.cod();
  const FinitePoset& q = g.dom();
  if (x >= p.size()) throw UnknownElement("element index out of range");
  std::vector<std::size_t> approximants;
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (p.leq(x, g(y))) approximants.push_back(y);
  }
  return extremal(std::move(approximants), q, true);
}

Approximation best_lower_approximation(const MonotoneMap& f, std::size_t z) {
  const FinitePoset& p = f.dom();
  const FinitePoset& q = f.cod();
  if (z >= q.size()) throw UnknownElement("element index out of range");
  std::vector<std::size_t> approximants;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (q.leq(f(x), z)) approximants.push_back(x);
  }
  return extremal(std::move(approximants), p, false);
}

std::optional<MonotoneMap> left_adjoint(const MonotoneMap& g) {
  g.require_monotone();
  std::vector<std::size_t> graph;
  for (std::size_t x = 0; x < g.cod().size(); ++x) {
    auto a = best_approximation(g, x);
    if (!a.best) return std::nullopt;
    graph.push_back(*a.best);
  }
  MonotoneMap f(g.cod(), g.dom(), std::move(graph));
  if (!f.is_monotone()) throw InternalInconsistency("computed left adjoint is not monotone");
  return f;
}

std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f) {
  f.require_monotone();
  std::vector<std::size_t> graph;
  for (std::size_t z = 0; z < f.cod().size(); ++z) {
    auto a = best_lower_approximation(f, z);
    if (!a.best) return std::nullopt;
    graph.push_back(*a.best);
  }
  MonotoneMap g(f.cod(), f.dom(), std::move(graph));
  if (!g.is_monotone()) throw InternalInconsistency("computed right adjoint is not monotone");
  return g;
}

std::optional<std::pair<std::size_t, std::size_t>> galois_violation(const MonotoneMap& f,
                                                                   const MonotoneMap& g) {
  require_shapes(f, g);
  const FinitePoset& p = f.dom();
  const FinitePoset& q = f.cod();
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t z = 0; z < q.size(); ++z) {
      if (p.leq(x, g(z)) != q.leq(f(x), z)) return std::make_pair(x, z);
    }
  }
  return std::nullopt;
}

std::vector<std::string> unit_counit_failures(const MonotoneMap& f, const MonotoneMap& g) {
  require_shapes(f, g);
  std::vector<std::string> out;
  const MonotoneMap gf = compose(g, f);
  const MonotoneMap fg = compose(f, g);
  if (!pointwise_leq(MonotoneMap::identity(f.dom()), gf)) out.push_back("id <= g o f");
  if (!pointwise_leq(fg, MonotoneMap::identity(f.cod()))) out.push_back("f o g <= id");
  if (!(compose(f, gf) == f)) out.push_back("f o g o f = f");
  if (!(compose(g, fg) == g)) out.push_back("g o f o g = g");
  return out;
}

AdjunctionCertificate verify_adjunction(const MonotoneMap& f, const MonotoneMap& g) {
  f.require_monotone();
  g.require_monotone();
  const auto violation = galois_violation(f, g);
  const auto failures = unit_counit_failures(f, g);
  if (violation.has_value() != !failures.empty()) {
    throw InternalInconsistency("adjunction equivalence and unit/counit laws disagree");
  }
  if (violation) {
    const auto& x = f.dom().label(violation->first);
    const auto& z = f.cod().label(violation->second);
    throw AdjunctionFails("x <= g(z) and f(x) <= z disagree at x = " + x + ", z = " + z, {x, z});
  }
  return AdjunctionCertificate{f, g, f.dom().size() * f.cod().size()};
}

std::string rational_label(long numerator, long denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const long d = std::gcd(numerator, denominator);
  if (d > 1) {
    numerator /= d;
    denominator /= d;
  }
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

FloorCeilingReport floor_ceiling_demo(long bound, long denominator) {
  if (bound <= 0 || denominator <= 0) {
    throw InvalidArgument("bound and denominator must be positive");
  }
  std::vector<std::string> integers;
  for (long z = -bound; z <= bound; ++z) integers.push_back(std::to_string(z));
  std::vector<std::string> grid;
  for (long j = -bound * denominator; j <= bound * denominator; ++j) {
    grid.push_back(rational_label(j, denominator));
  }
  const FinitePoset int_chain = FinitePoset::chain(integers);
  const FinitePoset grid_chain = FinitePoset::chain(grid);

  std::vector<std::size_t> graph;
  for (long z = -bound; z <= bound; ++z) {
    graph.push_back(static_cast<std::size_t>((z + bound) * denominator));
  }
  MonotoneMap inclusion(int_chain, grid_chain, std::move(graph));

  auto ceiling = left_adjoint(inclusion);
  auto floor = right_adjoint(inclusion);
  if (!ceiling || !floor) {
    throw InternalInconsistency("inclusion of integers into the grid lacks an adjoint");
  }

  FloorCeilingReport report{bound, denominator, {}, true, inclusion, *floor, *ceiling};
  for (std::size_t r = 0; r < grid_chain.size(); ++r) {
    const long numerator = static_cast<long>(r) - bound * denominator;
    FloorCeilingRow row{numerator, grid_chain.label(r),
                        static_cast<long>((*floor)(r)) - bound,
                        static_cast<long>((*ceiling)(r)) - bound};
    const long arithmetic_floor = floor_div(numerator, denominator);
    const long arithmetic_ceiling = -floor_div(-numerator, denominator);
    if (row.floor != arithmetic_floor || row.ceiling != arithmetic_ceiling) {
      report.matches_arithmetic = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace fincat
