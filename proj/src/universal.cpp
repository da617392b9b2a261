#include "fincat/universal.hpp"

#include <cstdint>
#include <unordered_map>

namespace fincat {

namespace {

using Index = FiniteCategory::Index;

std::uint64_t pair_key(Index f, Index g) { return (static_cast<std::uint64_t>(f) << 32) | g; }

struct ResolvedCone {
  Index apex;
  Index left;
  Index right;
};

std::optional<ResolvedCone> resolve(const FiniteCategory& c, Index a, Index b, const Cone& cone) {
  auto apex = c.find_object(cone.apex);
  auto left = c.find_arrow(cone.left);
  auto right = c.find_arrow(cone.right);
  if (!apex || !left || !right) return std::nullopt;
  if (c.dom_at(*left) != *apex || c.cod_at(*left) != a) return std::nullopt;
  if (c.dom_at(*right) != *apex || c.cod_at(*right) != b) return std::nullopt;
  return ResolvedCone{*apex, *left, *right};
}

// Tabulates h ↦ (π1∘h, π2∘h) over hom(C, apex) for every C. With
// `require_unique` the first collision aborts; otherwise the first h wins.
// Returns nullopt unless every cone is hit.
std::optional<ProductCertificate> tabulate(const FiniteCategory& c, Index a, Index b,
                                           const ResolvedCone& cone, bool require_unique) {
  ProductCertificate cert{c.object(a), c.object(b),
                          Cone{c.object(cone.apex), c.arrow(cone.left).name, c.arrow(cone.right).name},
                          {}};
  std::unordered_map<std::uint64_t, Index> hit;
  for (Index z = 0; z < c.object_count(); ++z) {
    hit.clear();
    for (Index h : c.hom_at(z, cone.apex)) {
      const auto key = pair_key(c.compose_at(cone.left, h), c.compose_at(cone.right, h));
      if (!hit.emplace(key, h).second && require_unique) return std::nullopt;
    }
    const auto& to_a = c.hom_at(z, a);
    const auto& to_b = c.hom_at(z, b);
    if (hit.size() != to_a.size() * to_b.size()) return std::nullopt;
    for (Index f : to_a) {
      for (Index g : to_b) {
        auto it = hit.find(pair_key(f, g));
        if (it == hit.end()) return std::nullopt;
        cert.mediators.push_back(
            {Cone{c.object(z), c.arrow(f).name, c.arrow(g).name}, c.arrow(it->second).name});
      }
    }
  }
  return cert;
}

std::vector<ProductCertificate> search_products(const FiniteCategory& c, Index a, Index b,
                                                std::size_t limit) {
  std::vector<ProductCertificate> out;
  for (Index p = 0; p < c.object_count(); ++p) {
    for (Index left : c.hom_at(p, a)) {
      for (Index right : c.hom_at(p, b)) {
        if (auto cert = tabulate(c, a, b, ResolvedCone{p, left, right}, true)) {
          out.push_back(std::move(*cert));
          if (out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

bool is_terminal(const FiniteCategory& c, Index t) {
  for (Index a = 0; a < c.object_count(); ++a) {
    if (c.hom_at(a, t).size() != 1) return false;
  }
  return true;
}

}  // namespace

const ArrowId& ProductCertificate::mediator_of(const Cone& c) const {
  for (const auto& m : mediators) {
    if (m.cone == c) return m.mediator;
  }
  throw NotAProduct("no mediator recorded for cone (" + c.apex.name + ", " + c.left.name + ", " +
                        c.right.name + ")",
                    {c.apex.name, c.left.name, c.right.name});
}

std::vector<ObjectId> find_terminals(const FiniteCategory& c) {
  std::vector<ObjectId> out;
  for (Index t = 0; t < c.object_count(); ++t) {
    if (is_terminal(c, t)) out.push_back(c.object(t));
  }
  return out;
}

IsoCertificate terminal_iso_certificate(const FiniteCategory& c, const ObjectId& t,
                                        const ObjectId& t_prime) {
  const Index ti = c.object_index(t);
  const Index tpi = c.object_index(t_prime);
  for (Index x : {ti, tpi}) {
    if (!is_terminal(c, x)) {
      throw NotTerminal("'" + c.object(x).name + "' is not terminal", {c.object(x).name});
    }
  }
  const Index forward = c.hom_at(ti, tpi).front();
  const Index backward = c.hom_at(tpi, ti).front();
  IsoCertificate cert{c.arrow(forward).name, c.arrow(backward).name, {}};
  const auto& fwd = cert.forward.name;
  const auto& bwd = cert.backward.name;
  if (c.compose_at(backward, forward) != c.identity_at(ti) ||
      c.compose_at(forward, backward) != c.identity_at(tpi)) {
    throw InternalInconsistency("unique arrows between terminals do not compose to identities");
  }
  cert.checks.push_back("|hom(" + t.name + ", " + t_prime.name + ")| = 1");
  cert.checks.push_back("|hom(" + t_prime.name + ", " + t.name + ")| = 1");
  cert.checks.push_back(bwd + " o " + fwd + " = id_" + t.name);
  cert.checks.push_back(fwd + " o " + bwd + " = id_" + t_prime.name);
  return cert;
}

std::optional<ProductCertificate> check_product(const FiniteCategory& c, const ObjectId& a,
                                                const ObjectId& b, const Cone& candidate) {
  const Index ai = c.object_index(a);
  const Index bi = c.object_index(b);
  auto cone = resolve(c, ai, bi, candidate);
  if (!cone) return std::nullopt;
  return tabulate(c, ai, bi, *cone, true);
}

std::vector<ProductCertificate> find_products(const FiniteCategory& c, const ObjectId& a,
                                              const ObjectId& b) {
  return search_products(c, c.object_index(a), c.object_index(b), SIZE_MAX);
}

std::optional<ProductCertificate> pairing_table(const FiniteCategory& c, const ObjectId& a,
                                                const ObjectId& b, const Cone& candidate) {
  const Index ai = c.object_index(a);
  const Index bi = c.object_index(b);
  auto cone = resolve(c, ai, bi, candidate);
  if (!cone) return std::nullopt;
  return tabulate(c, ai, bi, *cone, false);
}

bool verify_equational_product(const FiniteCategory& c, const ProductCertificate& cert) {
  const Index a = c.object_index(cert.left_factor);
  const Index b = c.object_index(cert.right_factor);
  auto cone = resolve(c, a, b, cert.cone);
  if (!cone) return false;

  // Pairing exists for every cone and satisfies the projection equations.
  std::unordered_map<std::uint64_t, Index> pairing;
  for (const auto& m : cert.mediators) {
    auto f = c.find_arrow(m.cone.left);
    auto g = c.find_arrow(m.cone.right);
    auto h = c.find_arrow(m.mediator);
    if (!f || !g || !h) return false;
    if (c.cod_at(*h) != cone->apex || c.dom_at(*h) != c.dom_at(*f)) return false;
    if (c.compose_at(cone->left, *h) != *f || c.compose_at(cone->right, *h) != *g) return false;
    pairing.emplace(pair_key(*f, *g), *h);
  }
  for (Index z = 0; z < c.object_count(); ++z) {
    for (Index f : c.hom_at(z, a)) {
      for (Index g : c.hom_at(z, b)) {
        if (!pairing.count(pair_key(f, g))) return false;
      }
    }
  }

  // h = ⟨π1∘h, π2∘h⟩ for every h into the apex.
  for (Index z = 0; z < c.object_count(); ++z) {
    for (Index h : c.hom_at(z, cone->apex)) {
      const auto key = pair_key(c.compose_at(cone->left, h), c.compose_at(cone->right, h));
      if (pairing.at(key) != h) return false;
    }
  }
  return true;
}

std::size_t count_projection_respecting(const FiniteCategory& c, const ProductCertificate& first,
                                        const ProductCertificate& second) {
  const Index p1 = c.object_index(first.cone.apex);
  const Index p2 = c.object_index(second.cone.apex);
  const Index l1 = c.arrow_index(first.cone.left);
  const Index r1 = c.arrow_index(first.cone.right);
  const Index l2 = c.arrow_index(second.cone.left);
  const Index r2 = c.arrow_index(second.cone.right);
  std::size_t count = 0;
  for (Index u : c.hom_at(p1, p2)) {
    if (c.compose_at(l2, u) == l1 && c.compose_at(r2, u) == r1) ++count;
  }
  return count;
}

IsoCertificate product_iso_certificate(const FiniteCategory& c, const ProductCertificate& first,
                                       const ProductCertificate& second) {
  if (first.left_factor != second.left_factor || first.right_factor != second.right_factor) {
    throw NotAProduct("certificates are for different factor pairs: (" + first.left_factor.name +
                          ", " + first.right_factor.name + ") vs (" + second.left_factor.name + ", " +
                          second.right_factor.name + ")",
                      {first.left_factor.name, first.right_factor.name, second.left_factor.name,
                       second.right_factor.name});
  }
  for (const auto* cert : {&first, &second}) {
    if (!check_product(c, cert->left_factor, cert->right_factor, cert->cone)) {
      throw NotAProduct("cone at '" + cert->cone.apex.name + "' is not a product",
                        {cert->cone.apex.name, cert->cone.left.name, cert->cone.right.name});
    }
  }
  const ArrowId forward = second.mediator_of(first.cone);
  const ArrowId backward = first.mediator_of(second.cone);
  const Index fi = c.arrow_index(forward);
  const Index bi = c.arrow_index(backward);
  const Index p1 = c.object_index(first.cone.apex);
  const Index p2 = c.object_index(second.cone.apex);
  if (c.compose_at(bi, fi) != c.identity_at(p1) || c.compose_at(fi, bi) != c.identity_at(p2)) {
    throw InternalInconsistency("mediators between products are not mutually inverse");
  }
  if (count_projection_respecting(c, first, second) != 1) {
    throw InternalInconsistency("projection-respecting arrow between products is not unique");
  }
  IsoCertificate cert{forward, backward, {}};
  const auto& fw = forward.name;
  const auto& bw = backward.name;
  cert.checks.push_back(bw + " o " + fw + " = id_" + first.cone.apex.name);
  cert.checks.push_back(fw + " o " + bw + " = id_" + second.cone.apex.name);
  cert.checks.push_back(second.cone.left.name + " o " + fw + " = " + first.cone.left.name);
  cert.checks.push_back(second.cone.right.name + " o " + fw + " = " + first.cone.right.name);
  cert.checks.push_back("exactly 1 projection-respecting arrow " + first.cone.apex.name + " -> " +
                        second.cone.apex.name);
  return cert;
}

std::optional<FiniteProduct> finite_product(const FiniteCategory& c,
                                            const std::vector<ObjectId>& factors) {
  FiniteProduct out{factors, {}, {}};
  if (factors.empty()) {
    auto terminals = find_terminals(c);
    if (terminals.empty()) return std::nullopt;
    out.apex = terminals.front();
    return out;
  }
  out.apex = factors.front();
  out.projections.push_back(c.identity(factors.front()));
  for (std::size_t k = 1; k < factors.size(); ++k) {
    auto found = search_products(c, c.object_index(out.apex), c.object_index(factors[k]), 1);
    if (found.empty()) return std::nullopt;
    const Cone& cone = found.front().cone;
    for (auto& pi : out.projections) pi = c.compose(pi, cone.left);
    out.projections.push_back(cone.right);
    out.apex = cone.apex;
  }
  return out;
}

bool verify_finite_product(const FiniteCategory& c, const FiniteProduct& product) {
  if (product.projections.size() != product.factors.size()) return false;
  const Index apex = c.object_index(product.apex);
  std::vector<Index> pis;
  std::vector<Index> factor_index;
  for (std::size_t i = 0; i < product.factors.size(); ++i) {
    pis.push_back(c.arrow_index(product.projections[i]));
    factor_index.push_back(c.object_index(product.factors[i]));
    if (c.dom_at(pis.back()) != apex || c.cod_at(pis.back()) != factor_index.back()) return false;
  }
  for (Index z = 0; z < c.object_count(); ++z) {
    std::size_t expected = 1;
    for (Index a : factor_index) expected *= c.hom_at(z, a).size();
    const auto& hom = c.hom_at(z, apex);
    if (hom.size() != expected) return false;
    std::vector<std::vector<Index>> seen;
    for (Index h : hom) {
      std::vector<Index> tuple;
      for (Index pi : pis) tuple.push_back(c.compose_at(pi, h));
      for (const auto& s : seen) {
        if (s == tuple) return false;
      }
      seen.push_back(std::move(tuple));
    }
  }
  return true;
}

}  // namespace fincat
