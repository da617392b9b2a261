#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/poset.hpp"
#include "fincat/sets.hpp"

namespace fincat {

inline constexpr std::size_t kDefaultFinSetCap = 4;
inline constexpr std::size_t kDefaultFinRelCap = 2;

/// The full subcategory of finite sets and all functions on a list of sets.
/// `functions[i]` is the function denoted by arrow i of `category`.
struct FinSet {
  FiniteCategory category;
  std::vector<UniverseRef> sets;
  std::vector<FiniteFunction> functions;

  const FiniteFunction& function(const ArrowId& f) const {
    return functions[category.arrow_index(f)];
  }
  /// Arrow naming the given function (which must live between listed sets).
  ArrowId arrow_for(const FiniteFunction& f) const;
  const UniverseRef& set(const ObjectId& o) const { return sets[category.object_index(o)]; }
};

/// Same for relations, composed relationally.
struct FinRel {
  FiniteCategory category;
  std::vector<UniverseRef> sets;
  std::vector<FiniteRelation> relations;

  const FiniteRelation& relation(const ArrowId& r) const {
    return relations[category.arrow_index(r)];
  }
  ArrowId arrow_for(const FiniteRelation& r) const;
};

/// Canonical arrow names, e.g. "X->Y:[0,1]" lists images in element order
/// and "X~>Y:{(a,0)}" lists related pairs in index order.
std::string function_name(const FiniteFunction& f);
std::string relation_name(const FiniteRelation& r);

/// All functions between the given sets (sizes ≤ cap, total arrows ≤ budget).
FinSet build_finset(std::vector<NamedFiniteSet> sets, std::size_t cap = kDefaultFinSetCap,
                    std::size_t budget = kDefaultArrowBudget);

/// All relations between the given sets (sizes ≤ cap, total arrows ≤ budget).
FinRel build_finrel(std::vector<NamedFiniteSet> sets, std::size_t cap = kDefaultFinRelCap,
                    std::size_t budget = kDefaultArrowBudget);

/// One arrow "a<=b" for every a ≤ b.
FiniteCategory poset_as_category(const FinitePoset& p);
std::string order_arrow_name(const std::string& a, const std::string& b);

/// Reads a thin, antisymmetric category back as a poset; throws InvalidPoset
/// otherwise.
FinitePoset category_to_poset(const FiniteCategory& c);

/// A finite monoid as a multiplication table over element labels.
class FiniteMonoid {
 public:
  /// `table[i * n + j]` is the index of elements[i]·elements[j]. Throws
  /// InvalidMonoid on associativity or unit failure, with witnesses.
  FiniteMonoid(std::vector<std::string> elements, std::vector<std::size_t> table, std::size_t unit);

  /// (Z_n, +) with elements "0".."n-1".
  static FiniteMonoid cyclic(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const std::string& label) const;
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t unit() const { return unit_; }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::size_t> table_;
  std::size_t unit_;
};

inline const ObjectId kMonoidObject{"*"};

/// One object "*"; arrows are the elements, g∘f = g·f, identity = unit.
FiniteCategory monoid_as_category(const FiniteMonoid& m);

/// Reads a one-object category back as a monoid.
FiniteMonoid category_to_monoid(const FiniteCategory& c);

/// An n×m matrix over Z_p, row-major.
struct MatrixOverZp {
  unsigned p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<unsigned> entries;

  unsigned at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  static MatrixOverZp identity(unsigned p, std::size_t n);

  bool operator==(const MatrixOverZp&) const = default;
};

/// Row-by-column product mod p; requires lhs.cols == rhs.rows.
MatrixOverZp multiply(const MatrixOverZp& lhs, const MatrixOverZp& rhs);

/// Mat over Z_p restricted to dimensions 0..max_dim. A matrix M : n → m is
/// n×m, and "M then N" is the product M·N.
class MatrixCategory final : public CategoryView {
 public:
  MatrixCategory(unsigned p, std::size_t max_dim, std::size_t budget = kDefaultArrowBudget);

  unsigned prime() const { return p_; }
  std::size_t max_dim() const { return max_dim_; }

  static ArrowId encode(const MatrixOverZp& m);
  /// Inverse of encode; throws UnknownArrow for names that are not
  /// canonical arrows of this category.
  MatrixOverZp decode(const ArrowId& f) const;

  std::vector<ObjectId> objects() const override;
  std::size_t hom_size(const ObjectId& a, const ObjectId& b) const override;
  std::vector<ArrowId> hom(const ObjectId& a, const ObjectId& b) const override;
  bool contains(const ArrowId& f) const override;
  ObjectId dom(const ArrowId& f) const override;
  ObjectId cod(const ArrowId& f) const override;
  ArrowId compose(const ArrowId& after, const ArrowId& then) const override;
  ArrowId identity(const ObjectId& a) const override;

 private:
  std::size_t dimension(const ObjectId& a) const;

  unsigned p_;
  std::size_t max_dim_;
  std::size_t budget_;
};

bool is_prime(unsigned p);

}  // namespace fincat
