#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincat/errors.hpp"
#include "fincat/ids.hpp"

namespace fincat {

/// Default cap on the number of arrows any single enumeration may touch.
inline constexpr std::size_t kDefaultArrowBudget = 100'000;

struct ArrowSpec {
  ArrowId name;
  ObjectId dom;
  ObjectId cod;

  bool operator==(const ArrowSpec&) const = default;
};

/// One row of the composition table: `result = after ∘ then`, i.e. first
/// `then`, then `after`.
struct CompositionEntry {
  ArrowId after;
  ArrowId then;
  ArrowId result;

  bool operator==(const CompositionEntry&) const = default;
};

/// Read-only access to a category whose hom-sets can be enumerated on
/// demand. Implementations may refuse to enumerate hom-sets that exceed
/// their budget by throwing EnumerationBudgetExceeded.
class CategoryView {
 public:
  virtual ~CategoryView() = default;

  virtual std::vector<ObjectId> objects() const = 0;
  virtual std::size_t hom_size(const ObjectId& a, const ObjectId& b) const = 0;
  virtual std::vector<ArrowId> hom(const ObjectId& a, const ObjectId& b) const = 0;
  virtual bool contains(const ArrowId& f) const = 0;
  virtual ObjectId dom(const ArrowId& f) const = 0;
  virtual ObjectId cod(const ArrowId& f) const = 0;
  /// `after ∘ then`. Requires cod(then) == dom(after).
  virtual ArrowId compose(const ArrowId& after, const ArrowId& then) const = 0;
  virtual ArrowId identity(const ObjectId& a) const = 0;
};

/// An explicit finite category: objects, typed arrows, an identity table and
/// a composition table that is total on composable pairs.
///
/// Construction checks only that the tables are structurally well formed
/// (every referenced id exists, every composable pair has exactly one
/// entry). Whether the tables satisfy the category laws is decided by
/// validate().
class FiniteCategory final : public CategoryView {
 public:
  using Index = std::size_t;

  FiniteCategory(std::vector<ObjectId> objects, std::vector<ArrowSpec> arrows,
                 std::vector<std::pair<ObjectId, ArrowId>> identities,
                 std::vector<CompositionEntry> composition);

  /// Index-level constructor for builders that can compute composites
  /// directly. `identities[i]` is the arrow index of the identity on object
  /// i; `compose(after, then)` is only called on composable pairs.
  static FiniteCategory generate(std::vector<ObjectId> objects, std::vector<ArrowSpec> arrows,
                                 std::vector<Index> identities,
                                 const std::function<Index(Index, Index)>& compose);

  // CategoryView
  std::vector<ObjectId> objects() const override { return objects_; }
  std::size_t hom_size(const ObjectId& a, const ObjectId& b) const override;
  std::vector<ArrowId> hom(const ObjectId& a, const ObjectId& b) const override;
  bool contains(const ArrowId& f) const override { return arrow_index_.count(f) != 0; }
  ObjectId dom(const ArrowId& f) const override { return arrows_[arrow_index(f)].dom; }
  ObjectId cod(const ArrowId& f) const override { return arrows_[arrow_index(f)].cod; }
  ArrowId compose(const ArrowId& after, const ArrowId& then) const override;
  ArrowId identity(const ObjectId& a) const override;

  // Index-level access, used by the exhaustive searches.
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const ObjectId& object(Index i) const { return objects_[i]; }
  const ArrowSpec& arrow(Index i) const { return arrows_[i]; }
  const std::vector<ArrowSpec>& arrows() const { return arrows_; }
  std::optional<Index> find_object(const ObjectId& a) const;
  std::optional<Index> find_arrow(const ArrowId& f) const;
  Index object_index(const ObjectId& a) const;  // throws UnknownObject
  Index arrow_index(const ArrowId& f) const;    // throws UnknownArrow
  Index dom_at(Index f) const { return dom_[f]; }
  Index cod_at(Index f) const { return cod_[f]; }
  Index identity_at(Index a) const { return identity_[a]; }
  const std::vector<Index>& hom_at(Index a, Index b) const { return hom_[a * objects_.size() + b]; }
  /// `after ∘ then` by index; requires cod(then) == dom(after).
  Index compose_at(Index after, Index then) const {
    return compose_[after][position_in_cod_[then]];
  }
  /// `after ∘ then` if the pair is composable.
  std::optional<Index> try_compose_at(Index after, Index then) const;

  std::vector<std::pair<ObjectId, ArrowId>> identity_table() const;
  /// All composition entries, ordered by (after, then) arrow index.
  std::vector<CompositionEntry> composition_table() const;

  /// Structural equality: same objects, arrows, identities and composites,
  /// irrespective of declaration order.
  bool operator==(const FiniteCategory& other) const;

 private:
  FiniteCategory() = default;
  void index_names();  // builds name maps, dom/cod and hom tables

  std::vector<ObjectId> objects_;
  std::vector<ArrowSpec> arrows_;
  std::unordered_map<ObjectId, Index> object_index_;
  std::unordered_map<ArrowId, Index> arrow_index_;
  std::vector<Index> dom_;
  std::vector<Index> cod_;
  std::vector<Index> identity_;
  std::vector<std::vector<Index>> hom_;
  std::vector<std::vector<Index>> incoming_;  // arrows by codomain
  std::vector<Index> position_in_cod_;
  // compose_[after][position_in_cod_[then]] for then in incoming_[dom(after)]
  std::vector<std::vector<Index>> compose_;
};

struct Violation {
  std::string law;
  std::vector<std::string> witnesses;

  bool operator==(const Violation&) const = default;
};

/// Outcome of an exhaustive law check. `ok()` holds iff no violation was
/// recorded.
struct AxiomReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& law) const;
};

/// Checks identity typing, composition typing, both unit laws and
/// associativity on every instance, and reports all violations in
/// lexicographic arrow order.
AxiomReport validate(const FiniteCategory& c);

/// Same laws over an arbitrary view, enumerating all arrows.
AxiomReport validate_view(const CategoryView& c, std::size_t budget = kDefaultArrowBudget);

/// Two parallel arrows that a cancellation test failed to separate.
struct ArrowPair {
  ArrowId first;
  ArrowId second;

  bool operator==(const ArrowPair&) const = default;
};

/// First pair g ≠ h with f∘g = f∘h, if any.
std::optional<ArrowPair> monic_violation(const CategoryView& c, const ArrowId& f,
                                         std::size_t budget = kDefaultArrowBudget);
/// First pair g ≠ h with g∘f = h∘f, if any.
std::optional<ArrowPair> epic_violation(const CategoryView& c, const ArrowId& f,
                                        std::size_t budget = kDefaultArrowBudget);

inline bool is_monic(const CategoryView& c, const ArrowId& f,
                     std::size_t budget = kDefaultArrowBudget) {
  return !monic_violation(c, f, budget).has_value();
}

inline bool is_epic(const CategoryView& c, const ArrowId& f,
                    std::size_t budget = kDefaultArrowBudget) {
  return !epic_violation(c, f, budget).has_value();
}

/// Every two-sided inverse of f, in hom order. Has at most one element in a
/// category.
std::vector<ArrowId> all_inverses(const CategoryView& c, const ArrowId& f,
                                  std::size_t budget = kDefaultArrowBudget);

std::optional<ArrowId> find_inverse(const CategoryView& c, const ArrowId& f,
                                    std::size_t budget = kDefaultArrowBudget);

bool is_groupoid(const FiniteCategory& c);

/// Copies every arrow of a view into an explicit category. Throws
/// EnumerationBudgetExceeded if the total arrow count exceeds the budget.
FiniteCategory materialize(const CategoryView& c, std::size_t budget = kDefaultArrowBudget);

/// Renames objects and arrows through the given maps (identity where a
/// name is absent).
FiniteCategory relabel(const FiniteCategory& c,
                       const std::unordered_map<ObjectId, ObjectId>& objects,
                       const std::unordered_map<ArrowId, ArrowId>& arrows);

}  // namespace fincat
