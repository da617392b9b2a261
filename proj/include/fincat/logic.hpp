#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/formula.hpp"
#include "fincat/poset.hpp"
#include "fincat/sets.hpp"

namespace fincat {

inline constexpr std::size_t kDefaultUniverseCap = 4;

/// A subset of a named universe, as a characteristic vector in element
/// order.
class SubsetOf {
 public:
  SubsetOf(UniverseRef universe, std::vector<bool> members);

  static SubsetOf empty(UniverseRef u);
  static SubsetOf full(UniverseRef u);
  static SubsetOf of(UniverseRef u, const std::vector<std::string>& labels);  // UnknownElement
  static SubsetOf from_mask(UniverseRef u, std::uint64_t mask);                // bit i = element i

  const UniverseRef& universe() const { return universe_; }
  const std::vector<bool>& members() const { return members_; }
  bool contains(std::size_t i) const { return members_[i]; }
  std::size_t count() const;
  std::vector<std::string> labels() const;
  std::string to_string() const;  // "{a,b}"

  // All throw UniverseMismatch across universes.
  bool subset_of(const SubsetOf& other) const;
  SubsetOf complement() const;
  SubsetOf intersect(const SubsetOf& other) const;
  SubsetOf unite(const SubsetOf& other) const;

  bool operator==(const SubsetOf& other) const;

 private:
  UniverseRef universe_;
  std::vector<bool> members_;
};

/// ∃(f)(S): the y hit by some x ∈ S.
SubsetOf direct_image(const FiniteFunction& f, const SubsetOf& s);
/// f⁻¹(T).
SubsetOf inverse_image(const FiniteFunction& f, const SubsetOf& t);
/// ∀(f)(S): the y whose whole fibre lies in S.
SubsetOf universal_image(const FiniteFunction& f, const SubsetOf& s);

/// Outcome of an exhaustive adjunction check. Each violation names the law
/// and the offending sets.
struct AdjunctionCheck {
  std::size_t instances = 0;
  std::vector<std::vector<std::string>> violations;

  bool ok() const { return violations.empty(); }
};

/// ∃(f)(S) ⊆ T ⟺ S ⊆ f⁻¹(T) and f⁻¹(T) ⊆ S ⟺ T ⊆ ∀(f)(S) for all S, T.
/// Throws EnumerationBudgetExceeded if either side exceeds `cap`.
AdjunctionCheck check_quantifier_adjunctions(const FiniteFunction& f,
                                             std::size_t cap = kDefaultUniverseCap);

/// [R]T: the x all of whose R-successors lie in T.
SubsetOf box(const FiniteRelation& r, const SubsetOf& t);
inline SubsetOf wp(const FiniteRelation& r, const SubsetOf& t) { return box(r, t); }
/// f_R(S): the y with some x ∈ S, x R y.
SubsetOf relation_post_image(const FiniteRelation& r, const SubsetOf& s);

/// f_R(S) ⊆ T ⟺ S ⊆ [R]T for all S, T.
AdjunctionCheck check_box_adjunction(const FiniteRelation& r, std::size_t cap = kDefaultUniverseCap);

/// The powerset of a universe ordered by inclusion, elements enumerated by
/// bitmask and labelled as by SubsetOf::to_string.
FinitePoset powerset_poset(const UniverseRef& u);
/// A subset operator realized as a map between powerset posets.
MonotoneMap subset_operator_map(const UniverseRef& from, const UniverseRef& to,
                                const std::function<SubsetOf(const SubsetOf&)>& op);

struct KripkeFrame {
  UniverseRef worlds;
  FiniteRelation access;
  std::map<std::string, SubsetOf> valuation;

  /// Throws UniverseMismatch unless access and every valuation live on
  /// `worlds`.
  KripkeFrame(UniverseRef worlds, FiniteRelation access, std::map<std::string, SubsetOf> valuation);

  bool operator==(const KripkeFrame& other) const {
    return same_universe(worlds, other.worlds) && access == other.access &&
           valuation == other.valuation;
  }
};

/// Worlds satisfying a modal formula. box is [R] over the access relation,
/// dia is !box!. Throws UnknownAtom, or InvalidArgument for quantifiers and
/// applied atoms.
SubsetOf eval_modal(const KripkeFrame& frame, const Formula& phi);

/// X ⇒ Y = Xᶜ ∪ Y.
SubsetOf boolean_implication(const SubsetOf& x, const SubsetOf& y);

/// X ∩ Y ⊆ Z ⟺ X ⊆ Y ⇒ Z for all subset triples of `u`.
AdjunctionCheck check_implication_adjunction(const UniverseRef& u,
                                             std::size_t cap = kDefaultUniverseCap);

/// The down-closed subsets of a finite poset, ordered by inclusion.
class DownSetLattice {
 public:
  explicit DownSetLattice(FinitePoset p);

  const FinitePoset& poset() const { return poset_; }
  const UniverseRef& universe() const { return universe_; }
  const std::vector<SubsetOf>& elements() const { return down_sets_; }
  bool is_down_closed(const SubsetOf& s) const;
  SubsetOf down_set(const std::vector<std::string>& labels) const;  // throws NotDownClosed

 private:
  FinitePoset poset_;
  UniverseRef universe_;
  std::vector<SubsetOf> down_sets_;
};

/// The largest down-set Z with Z ∩ X ⊆ Y, found by scanning the lattice.
/// Throws NotDownClosed for either argument.
SubsetOf heyting_implication(const DownSetLattice& l, const SubsetOf& x, const SubsetOf& y);

/// Z ∩ X ⊆ Y ⟺ Z ⊆ (X ⇒ Y) for all down-set triples.
AdjunctionCheck check_heyting_adjunction(const DownSetLattice& l);

/// A finite relational structure.
struct FORelation {
  std::size_t arity = 0;
  std::vector<std::vector<std::size_t>> tuples;  // carrier indices

  bool operator==(const FORelation&) const = default;
};

struct FOStructure {
  UniverseRef carrier;
  std::map<std::string, FORelation> relations;

  /// Throws InvalidArgument if a tuple has the wrong length or leaves the
  /// carrier.
  FOStructure(UniverseRef carrier, std::map<std::string, FORelation> relations);
  bool holds(const std::string& relation, const std::vector<std::size_t>& args) const;

  bool operator==(const FOStructure& other) const {
    return same_universe(carrier, other.carrier) && relations == other.relations;
  }

 private:
  std::map<std::string, std::vector<bool>> tables_;
};

/// A^n as a universe: tuples enumerated lexicographically (first coordinate
/// most significant), labelled "(a,b)". Throws EnumerationBudgetExceeded if
/// |A|^n exceeds `budget`.
UniverseRef tuple_universe(const UniverseRef& carrier, std::size_t n,
                           std::size_t budget = kDefaultArrowBudget);
std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t carrier_size, std::size_t n);

/// A set of assignments s : {v1..vn} → A.
struct AssignmentSet {
  std::size_t context = 0;
  SubsetOf tuples;

  std::vector<std::vector<std::string>> listed() const;
  bool operator==(const AssignmentSet& other) const {
    return context == other.context && tuples == other.tuples;
  }
};

/// Pointwise satisfaction with the quantifier clause read off
/// s[v_{n+1} ↦ a]. Quantifiers must bind v_{n+1} in a context of size n
/// (ContextMismatch); atoms may only mention v1..vn (ContextOverflow).
AssignmentSet direct_denotation(const FOStructure& m, const Formula& phi, std::size_t n,
                                std::size_t budget = kDefaultArrowBudget);
/// Compositional denotation with quantifiers as ∃(π) and ∀(π) along the
/// projection A^{n+1} → A^n.
AssignmentSet adjoint_denotation(const FOStructure& m, const Formula& phi, std::size_t n,
                                 std::size_t budget = kDefaultArrowBudget);
/// Both routes, asserted equal (InternalInconsistency otherwise).
AssignmentSet tarski_denotation(const FOStructure& m, const Formula& phi, std::size_t n,
                                std::size_t budget = kDefaultArrowBudget);

/// The projection π : A^{n+1} → A^n and its two adjoints written out by
/// their explicit formulas.
struct ProjectionAdjoints {
  UniverseRef carrier;
  std::size_t n = 0;
  UniverseRef upper;  // A^{n+1}
  UniverseRef lower;  // A^n
  FiniteFunction projection;

  /// { s ∈ A^n | ∃a. s[v_{n+1} ↦ a] ∈ S }
  SubsetOf exists(const SubsetOf& s) const;
  /// { s ∈ A^n | ∀a. s[v_{n+1} ↦ a] ∈ S }
  SubsetOf forall(const SubsetOf& s) const;
};

ProjectionAdjoints projection_adjoints(const UniverseRef& carrier, std::size_t n,
                                       std::size_t budget = kDefaultArrowBudget);

/// For all S ⊆ A^{n+1}, T ⊆ A^n: both adjunctions with π⁻¹, and agreement
/// of the explicit formulas with direct_image / universal_image of π.
/// Throws EnumerationBudgetExceeded past 2^(|A|^(n+1) + |A|^n) > budget.
AdjunctionCheck check_projection_adjoints(const ProjectionAdjoints& p,
                                          std::size_t budget = kDefaultArrowBudget);

struct GeneralizationSides {
  bool quantified;  // Γ ⊆ ∀(π)⟦φ⟧
  bool weakened;    // π⁻¹(Γ) ⊆ ⟦φ⟧
};

/// Both sides of the generalization rule for Γ in context n and φ in
/// context n+1. Throws ContextMismatch if Γ is not over the carrier of `m`.
GeneralizationSides generalization_sides(const FOStructure& m, const AssignmentSet& gamma,
                                         const Formula& phi,
                                         std::size_t budget = kDefaultArrowBudget);
/// The shared truth value; InternalInconsistency if the sides differ.
bool verify_generalization_rule(const FOStructure& m, const AssignmentSet& gamma,
                                const Formula& phi, std::size_t budget = kDefaultArrowBudget);

}  // namespace fincat
