#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fincat/builders.hpp"
#include "fincat/category.hpp"
#include "fincat/poset.hpp"

namespace fincat {

using CategoryRef = std::shared_ptr<const FiniteCategory>;

/// A candidate functor: separate object and arrow tables between two finite
/// categories. Functoriality is checked, not assumed.
class Functor {
 public:
  /// Throws MalformedMap unless both maps are total on the source and land
  /// in the target.
  Functor(CategoryRef source, CategoryRef target, std::map<ObjectId, ObjectId> object_map,
          std::map<ArrowId, ArrowId> arrow_map);

  static Functor identity(CategoryRef c);

  const FiniteCategory& source() const { return *source_; }
  const FiniteCategory& target() const { return *target_; }
  const CategoryRef& source_ref() const { return source_; }
  const CategoryRef& target_ref() const { return target_; }
  const std::map<ObjectId, ObjectId>& object_map() const { return object_map_; }
  const std::map<ArrowId, ArrowId>& arrow_map() const { return arrow_map_; }

  const ObjectId& operator()(const ObjectId& a) const { return object_map_.at(a); }
  const ArrowId& operator()(const ArrowId& f) const { return arrow_map_.at(f); }

  /// Same categories (structurally) and same tables.
  bool operator==(const Functor& other) const;

 private:
  CategoryRef source_;
  CategoryRef target_;
  std::map<ObjectId, ObjectId> object_map_;
  std::map<ArrowId, ArrowId> arrow_map_;
};

/// Exhaustive check of arrow typing, F(g∘f) = Fg∘Ff and F id_A = id_FA.
/// Laws: "typing", "composition", "identity".
AxiomReport check_functoriality(const Functor& f);

/// G∘F. Throws SourceTargetMismatch unless target(F) = source(G).
Functor compose_functors(const Functor& g, const Functor& f);

/// Isos f of the source whose image F f is not an iso, without any
/// precondition. Used as a negative control on non-functors.
std::vector<ArrowId> unpreserved_isos(const Functor& f);

/// True iff every iso of the source is sent to an iso. Throws NotAFunctor
/// (with the first violation) when F fails the functor laws.
bool check_iso_preservation(const Functor& f);

/// The covariant powerset functor restricted to the sets of `source`: each
/// set X goes to P(X) (object "P(X)", subsets named "{a,b}" in element
/// order, enumerated by bitmask), each function to its direct image. The
/// target is the FinSet category over all the P(X).
struct PowersetFunctor {
  FinSet target;
  Functor functor;
};

PowersetFunctor powerset_functor(const FinSet& source, std::size_t budget = kDefaultArrowBudget);

/// Canonical label of a subset given as a membership mask over `set`.
std::string subset_label(const NamedFiniteSet& set, const std::vector<bool>& members);

/// The functor poset_as_category(dom) → poset_as_category(cod) induced by a
/// monotone map. Throws NotMonotone with the witnessing pair.
Functor monotone_as_functor(const MonotoneMap& m);

/// Readback of a functor between thin categories built by
/// poset_as_category.
MonotoneMap functor_as_monotone(const Functor& f);

struct MonoidHomomorphism {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<std::size_t> map;
};

/// Throws NotAHomomorphism with a witness (m1, m2) or the unit.
Functor monoid_hom_as_functor(const MonoidHomomorphism& h);
MonoidHomomorphism functor_as_monoid_hom(const Functor& f);

}  // namespace fincat
