#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/errors.hpp"
#include "fincat/sets.hpp"

namespace fincat {

/// A finite partial order. Elements are addressed by position; `leq(i, j)`
/// is an O(1) table lookup.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Takes the reflexive-transitive closure of `leq`, then rejects cycles
  /// (InvalidPoset with the two offending elements).
  FinitePoset(std::vector<std::string> elements,
              const std::vector<std::pair<std::string, std::string>>& leq);

  /// Takes an explicit order table (row-major, |elements|²) and checks
  /// reflexivity, antisymmetry and transitivity without closing it.
  static FinitePoset from_table(std::vector<std::string> elements, std::vector<bool> table);

  /// The chain e0 < e1 < ... in the given order.
  static FinitePoset chain(std::vector<std::string> elements);
  static FinitePoset antichain(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws UnknownElement
  bool leq(std::size_t a, std::size_t b) const { return table_[a * elements_.size() + b]; }

  /// Strict pairs a < b (in index order), the cover-free presentation used
  /// for serialization.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const;

  /// Greatest lower bound of a and b, if it exists.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

  bool operator==(const FinitePoset&) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<bool> table_;
};

/// A map between finite posets. Monotonicity is a checked property, not a
/// construction invariant, so that non-monotone maps can be reported.
class MonotoneMap {
 public:
  MonotoneMap(FinitePoset dom, FinitePoset cod, std::vector<std::size_t> graph);
  static MonotoneMap from_labels(FinitePoset dom, FinitePoset cod,
                                 const std::vector<std::pair<std::string, std::string>>& graph);
  static MonotoneMap identity(const FinitePoset& p);

  const FinitePoset& dom() const { return dom_; }
  const FinitePoset& cod() const { return cod_; }
  const std::vector<std::size_t>& graph() const { return graph_; }
  std::size_t operator()(std::size_t x) const { return graph_[x]; }

  /// First pair x ≤ x' with g(x) ≰ g(x').
  std::optional<std::pair<std::size_t, std::size_t>> monotonicity_violation() const;
  bool is_monotone() const { return !monotonicity_violation(); }
  /// Throws NotMonotone with the witnessing pair.
  void require_monotone() const;

  bool operator==(const MonotoneMap&) const = default;

 private:
  FinitePoset dom_;
  FinitePoset cod_;
  std::vector<std::size_t> graph_;
};

/// `second ∘ first`.
MonotoneMap compose(const MonotoneMap& second, const MonotoneMap& first);

/// Pointwise order h ≤ k.
bool pointwise_leq(const MonotoneMap& h, const MonotoneMap& k);

}  // namespace fincat
