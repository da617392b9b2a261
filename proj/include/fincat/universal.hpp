#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A span A ← apex → B.
struct Cone {
  ObjectId apex;
  ArrowId left;
  ArrowId right;

  bool operator==(const Cone&) const = default;
};

struct Mediator {
  Cone cone;
  ArrowId mediator;

  bool operator==(const Mediator&) const = default;
};

/// A product A ×B B: the projection cone plus, for every cone over (A, B),
/// the mediating arrow into the apex.
struct ProductCertificate {
  ObjectId left_factor;
  ObjectId right_factor;
  Cone cone;  // apex with π1 (left) and π2 (right)
  std::vector<Mediator> mediators;

  const ArrowId& mediator_of(const Cone& c) const;  // throws NotAProduct if absent
  bool operator==(const ProductCertificate&) const = default;
};

/// A pair of mutually inverse arrows plus the equations that were checked.
struct IsoCertificate {
  ArrowId forward;
  ArrowId backward;
  std::vector<std::string> checks;
};

/// All T with exactly one arrow A → T for every object A.
std::vector<ObjectId> find_terminals(const FiniteCategory& c);

/// The unique iso between two terminal objects, built from the unique
/// arrows each way. Throws NotTerminal.
IsoCertificate terminal_iso_certificate(const FiniteCategory& c, const ObjectId& t,
                                        const ObjectId& t_prime);

/// Decides the universal property for one candidate cone: for every object
/// C, h ↦ (π1∘h, π2∘h) must be a bijection hom(C, apex) → hom(C, A)×hom(C, B).
std::optional<ProductCertificate> check_product(const FiniteCategory& c, const ObjectId& a,
                                                const ObjectId& b, const Cone& candidate);

/// Every product cone over (A, B), by exhaustive search over apexes and
/// projection pairs in index order.
std::vector<ProductCertificate> find_products(const FiniteCategory& c, const ObjectId& a,
                                              const ObjectId& b);

/// The existence half of the product definition: a table that assigns each
/// cone over (A, B) the first arrow h with π1∘h = f and π2∘h = g. Returns
/// nullopt if some cone has no such arrow.
std::optional<ProductCertificate> pairing_table(const FiniteCategory& c, const ObjectId& a,
                                                const ObjectId& b, const Cone& candidate);

/// Equational characterization: the projection equations hold for every
/// mediator in `cert`, and every h : Z → apex equals the mediator of
/// (π1∘h, π2∘h).
bool verify_equational_product(const FiniteCategory& c, const ProductCertificate& cert);

/// The unique projection-respecting iso between two products of the same
/// pair. Throws NotAProduct if either certificate does not check out or the
/// factors differ.
IsoCertificate product_iso_certificate(const FiniteCategory& c, const ProductCertificate& first,
                                       const ProductCertificate& second);

/// Number of arrows apex(first) → apex(second) commuting with both
/// projection pairs.
std::size_t count_projection_respecting(const FiniteCategory& c, const ProductCertificate& first,
                                        const ProductCertificate& second);

/// A product of a finite family: an apex and one projection per factor.
struct FiniteProduct {
  std::vector<ObjectId> factors;
  ObjectId apex;
  std::vector<ArrowId> projections;
};

/// Nullary: the first terminal object. Unary: the object with its
/// identity. Otherwise binary products folded from the left,
/// ((A1×A2)×A3)×..., taking the first product found at each stage.
std::optional<FiniteProduct> finite_product(const FiniteCategory& c,
                                            const std::vector<ObjectId>& factors);

/// For every object C, h ↦ (π_i∘h)_i is a bijection hom(C, apex) → Π hom(C, A_i).
bool verify_finite_product(const FiniteCategory& c, const FiniteProduct& product);

}  // namespace fincat
