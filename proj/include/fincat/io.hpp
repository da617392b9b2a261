#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincat/builders.hpp"
#include "fincat/category.hpp"
#include "fincat/functor.hpp"
#include "fincat/logic.hpp"
#include "fincat/nno.hpp"
#include "fincat/poset.hpp"

namespace fincat::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError naming the origin,
/// line and column.
Json parse_text(const std::string& text, const std::string& origin);
Json read_file(const std::filesystem::path& path);

// Every *_from_json below rejects unknown fields and reports the JSON path
// of the offending field ("$.arrows[2].dom") in its ParseError.

/// {"objects", "arrows":[{"name","dom","cod"}], "identities":{A: id},
///  "compose":[{"after","then","is"}]}
FiniteCategory category_from_json(const Json& j, const std::string& path = "$");
Json category_to_json(const FiniteCategory& c);

/// {"elements":[...], "leq":[["a","b"], ...]}
FinitePoset poset_from_json(const Json& j, const std::string& path = "$");
Json poset_to_json(const FinitePoset& p);

/// A category file: either explicit tables or {"builder": ...}.
struct CategorySource {
  enum class Kind { Table, FinSet, FinRel, Poset, Monoid, Mat };

  Kind kind = Kind::Table;
  std::optional<FiniteCategory> table;
  std::vector<NamedFiniteSet> sets;  // finset / finrel
  std::optional<FinitePoset> poset;
  std::optional<FiniteMonoid> monoid;
  unsigned p = 0;  // mat
  std::size_t max_dim = 0;

  bool operator==(const CategorySource&) const = default;
};

CategorySource category_source_from_json(const Json& j, const std::string& path = "$");
Json to_json(const CategorySource& s);

struct Limits {
  std::size_t budget = kDefaultArrowBudget;
  std::optional<std::size_t> cap;  // overrides the builder's default set-size cap
};

/// A built category. `category` is null only for a Mat view too large to
/// materialize; `view()` is always usable.
struct LoadedCategory {
  CategorySource source;
  CategoryRef category;
  std::optional<FinSet> finset;
  std::optional<FinRel> finrel;
  std::shared_ptr<const MatrixCategory> mat;

  const CategoryView& view() const;
  /// Throws EnumerationBudgetExceeded if only a view exists.
  const FiniteCategory& finite() const;
};

LoadedCategory build(const CategorySource& s, const Limits& limits = {});

/// Reads a category file, resolving nothing; convenience for CLI verbs.
LoadedCategory load_category(const std::filesystem::path& file, const Limits& limits = {});

/// {"dom": poset|path, "cod": poset|path, "graph": {x: y}}. Paths are
/// resolved against `base`.
MonotoneMap monotone_from_json(const Json& j, const std::filesystem::path& base,
                               const std::string& path = "$");
Json monotone_to_json(const MonotoneMap& m);

/// Either one map (whose adjoints are sought) or {"left": map, "right": map}.
struct AdjointsFile {
  std::optional<MonotoneMap> map;
  std::optional<MonotoneMap> left;
  std::optional<MonotoneMap> right;

  bool operator==(const AdjointsFile&) const = default;
};

AdjointsFile adjoints_from_json(const Json& j, const std::filesystem::path& base);
Json to_json(const AdjointsFile& a);

/// {"source": category|path, "target": category|path, "object_map", "arrow_map"}
struct FunctorFile {
  CategorySource source;
  CategorySource target;
  std::map<ObjectId, ObjectId> object_map;
  std::map<ArrowId, ArrowId> arrow_map;

  bool operator==(const FunctorFile&) const = default;
};

FunctorFile functor_file_from_json(const Json& j, const std::filesystem::path& base);
Json to_json(const FunctorFile& f);
/// Builds both categories and the functor; MalformedMap for partial maps.
Functor build_functor(const FunctorFile& f, const Limits& limits = {});

/// {"worlds":[...], "access":[["w1","w2"], ...], "valuation":{"p":[...]}}
KripkeFrame frame_from_json(const Json& j);
Json frame_to_json(const KripkeFrame& f);

/// {"carrier":[...], "relations":{"E":{"arity":2, "tuples":[["a","b"], ...]}}}
FOStructure structure_from_json(const Json& j);
Json structure_to_json(const FOStructure& m);

/// {"carrier":[...], "c":"0", "f":{"0":"1", ...}}
RecursionData recursion_from_json(const Json& j);
Json recursion_to_json(const RecursionData& d);

}  // namespace fincat::io
