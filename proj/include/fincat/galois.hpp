#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fincat/poset.hpp"

namespace fincat {

/// Result of looking for a best g-approximation of x, for g : Q → P.
struct Approximation {
  enum class Status { Best, NoApproximants, NoLeast };

  Status status;
  std::vector<std::size_t> approximants;  // every y with x ≤ g(y), in Q order
  std::optional<std::size_t> best;        // set iff status == Best
};

/// The least y ∈ Q with x ≤ g(y), if the approximant set has one.
/// Throws UnknownElement if x is out of range.
Approximation best_approximation(const MonotoneMap& g, std::size_t x);

/// Dual: the greatest x ∈ P with f(x) ≤ z, for f : P → Q.
Approximation best_lower_approximation(const MonotoneMap& f, std::size_t z);

/// f : P → Q with x ≤ g(z) ⟺ f(x) ≤ z, if every x has a best approximation.
/// The result is re-checked for monotonicity.
std::optional<MonotoneMap> left_adjoint(const MonotoneMap& g);

/// g : Q → P with x ≤ g(z) ⟺ f(x) ≤ z, if it exists.
std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f);

/// First (x, z) violating x ≤ g(z) ⟺ f(x) ≤ z, in (x, z) index order.
std::optional<std::pair<std::size_t, std::size_t>> galois_violation(const MonotoneMap& f,
                                                                   const MonotoneMap& g);

/// id_P ≤ g∘f, f∘g ≤ id_Q, f∘g∘f = f and g∘f∘g = g under the pointwise
/// order. Names of the failing laws; empty iff all four hold.
std::vector<std::string> unit_counit_failures(const MonotoneMap& f, const MonotoneMap& g);

struct AdjunctionCertificate {
  MonotoneMap left;
  MonotoneMap right;
  std::size_t verified_on = 0;  // element pairs checked
};

/// Checks both characterizations and that they agree. Throws NotMonotone if
/// either map is not monotone, AdjunctionFails with the witnessing (x, z)
/// if the equivalence fails, InternalInconsistency if the two verdicts
/// differ.
AdjunctionCertificate verify_adjunction(const MonotoneMap& f, const MonotoneMap& g);

/// Rational numbers j/denominator labelled canonically: "2", "-1/2", "5/2".
std::string rational_label(long numerator, long denominator);

struct FloorCeilingRow {
  long numerator = 0;  // grid point numerator / denominator
  std::string label;
  long floor = 0;    // right adjoint of the inclusion
  long ceiling = 0;  // left adjoint of the inclusion
};

struct FloorCeilingReport {
  long bound = 0;
  long denominator = 1;
  std::vector<FloorCeilingRow> rows;
  bool matches_arithmetic = false;  // every row agrees with integer floor/ceiling
  MonotoneMap inclusion;
  MonotoneMap floor_map;
  MonotoneMap ceiling_map;
};

/// Integers [-bound, bound] included into the grid of multiples of
/// 1/denominator in [-bound, bound]; both adjoints computed by search.
FloorCeilingReport floor_ceiling_demo(long bound, long denominator);

}  // namespace fincat
