#include "fincat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fincat::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, {path});
}

void only_fields(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(path + "." + key, "unknown field");
  }
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  std::string s = j.get<std::string>();
  if (s.empty()) fail(path, "expected a nonempty string");
  return s;
}

std::size_t as_size(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(as_string(a[i], at(path, i)));
  return out;
}

std::pair<std::string, std::string> string_pair(const Json& j, const std::string& path) {
  const auto v = string_list(j, path);
  if (v.size() != 2) fail(path, "expected a pair [x, y]");
  return {v[0], v[1]};
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string_pair(a[i], at(path, i)));
  return out;
}

std::vector<std::pair<std::string, std::string>> string_map(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, as_string(v, path + "." + k));
  return out;
}

// Library errors raised while building a value from a file keep their type;
// the path is prepended so that the CLI can point at the field.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const UnknownElement& e) {
    throw ParseError(path + ": " + e.what(), e.witnesses());
  }
}

Json sets_to_json(const std::vector<NamedFiniteSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back({{"name", s.name}, {"elements", s.elements}});
  return out;
}

std::vector<NamedFiniteSet> sets_from_json(const Json& j, const std::string& path) {
  std::vector<NamedFiniteSet> out;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = at(path, i);
    only_fields(a[i], p, {"name", "elements"});
    out.emplace_back(as_string(field(a[i], p, "name"), p + ".name"),
                     string_list(field(a[i], p, "elements"), p + ".elements"));
  }
  return out;
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", {path.string()});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A nested value given as a relative path string is loaded from disk.
Json resolve(const Json& j, const std::filesystem::path& base, const std::string& path) {
  if (!j.is_string()) return j;
  const std::filesystem::path file = base / j.get<std::string>();
  if (!std::filesystem::exists(file)) fail(path, "no such file '" + file.string() + "'");
  return read_file(file);
}

}  // namespace

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": malformed JSON",
                     {origin});
  }
}

Json read_file(const std::filesystem::path& path) {
  return parse_text(read_all(path), path.string());
}

// ---- categories -------------------------------------------------------------

FiniteCategory category_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"objects", "arrows", "identities", "compose"});
  std::vector<ObjectId> objects;
  for (const auto& o : string_list(field(j, path, "objects"), path + ".objects")) {
    objects.push_back(ObjectId{o});
  }
  std::vector<ArrowSpec> arrows;
  const std::string ap = path + ".arrows";
  const Json& arr = as_array(field(j, path, "arrows"), ap);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(ap, i);
    only_fields(arr[i], p, {"name", "dom", "cod"});
    arrows.push_back({ArrowId{as_string(field(arr[i], p, "name"), p + ".name")},
                      ObjectId{as_string(field(arr[i], p, "dom"), p + ".dom")},
                      ObjectId{as_string(field(arr[i], p, "cod"), p + ".cod")}});
  }
  std::vector<std::pair<ObjectId, ArrowId>> identities;
  for (const auto& [o, id] : string_map(field(j, path, "identities"), path + ".identities")) {
    identities.emplace_back(ObjectId{o}, ArrowId{id});
  }
  std::vector<CompositionEntry> compose;
  const std::string cp = path + ".compose";
  const Json& comp = as_array(field(j, path, "compose"), cp);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string p = at(cp, i);
    only_fields(comp[i], p, {"after", "then", "is"});
    compose.push_back({ArrowId{as_string(field(comp[i], p, "after"), p + ".after")},
                       ArrowId{as_string(field(comp[i], p, "then"), p + ".then")},
                       ArrowId{as_string(field(comp[i], p, "is"), p + ".is")}});
  }
  return FiniteCategory(std::move(objects), std::move(arrows), std::move(identities),
                        std::move(compose));
}

Json category_to_json(const FiniteCategory& c) {
  Json objects = Json::array();
  for (std::size_t i = 0; i < c.object_count(); ++i) objects.push_back(c.object(i).name);
  Json arrows = Json::array();
  for (const auto& a : c.arrows()) {
    arrows.push_back({{"name", a.name.name}, {"dom", a.dom.name}, {"cod", a.cod.name}});
  }
  Json identities = Json::object();
  for (const auto& [o, id] : c.identity_table()) identities[o.name] = id.name;
  Json compose = Json::array();
  for (const auto& e : c.composition_table()) {
    compose.push_back({{"after", e.after.name}, {"then", e.then.name}, {"is", e.result.name}});
  }
  return Json{{"objects", objects}, {"arrows", arrows}, {"identities", identities},
              {"compose", compose}};
}

FinitePoset poset_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"elements", "leq"});
  auto elements = string_list(field(j, path, "elements"), path + ".elements");
  auto leq = pair_list(field(j, path, "leq"), path + ".leq");
  return located(path + ".leq", [&] { return FinitePoset(std::move(elements), leq); });
}

Json poset_to_json(const FinitePoset& p) {
  Json leq = Json::array();
  for (const auto& [a, b] : p.strict_pairs()) leq.push_back({a, b});
  return Json{{"elements", p.elements()}, {"leq", leq}};
}

CategorySource category_source_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  CategorySource s;
  if (!j.contains("builder")) {
    s.kind = CategorySource::Kind::Table;
    s.table = category_from_json(j, path);
    return s;
  }
  const std::string kind = as_string(j["builder"], path + ".builder");
  if (kind == "finset" || kind == "finrel") {
    only_fields(j, path, {"builder", "sets"});
    s.kind = kind == "finset" ? CategorySource::Kind::FinSet : CategorySource::Kind::FinRel;
    s.sets = sets_from_json(field(j, path, "sets"), path + ".sets");
  } else if (kind == "poset") {
    only_fields(j, path, {"builder", "elements", "leq"});
    s.kind = CategorySource::Kind::Poset;
    Json body = j;
    body.erase("builder");
    s.poset = poset_from_json(body, path);
  } else if (kind == "monoid") {
    only_fields(j, path, {"builder", "elements", "unit", "mult"});
    s.kind = CategorySource::Kind::Monoid;
    auto elements = string_list(field(j, path, "elements"), path + ".elements");
    const NamedFiniteSet labels("M", elements);
    const std::string unit = as_string(field(j, path, "unit"), path + ".unit");
    const std::string mp = path + ".mult";
    const Json& rows = as_array(field(j, path, "mult"), mp);
    if (rows.size() != elements.size()) fail(mp, "expected one row per element");
    std::vector<std::size_t> table;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto row = string_list(rows[r], at(mp, r));
      if (row.size() != elements.size()) fail(at(mp, r), "expected one entry per element");
      for (std::size_t c = 0; c < row.size(); ++c) {
        located(at(at(mp, r), c), [&] { table.push_back(labels.index_of(row[c])); });
      }
    }
    const std::size_t u = located(path + ".unit", [&] { return labels.index_of(unit); });
    s.monoid = FiniteMonoid(std::move(elements), std::move(table), u);
  } else if (kind == "mat") {
    only_fields(j, path, {"builder", "p", "max_dim"});
    s.kind = CategorySource::Kind::Mat;
    s.p = static_cast<unsigned>(as_size(field(j, path, "p"), path + ".p"));
    s.max_dim = as_size(field(j, path, "max_dim"), path + ".max_dim");
  } else {
    fail(path + ".builder", "unknown builder '" + kind + "'");
  }
  return s;
}

Json to_json(const CategorySource& s) {
  using K = CategorySource::Kind;
  switch (s.kind) {
    case K::Table: return category_to_json(*s.table);
    case K::FinSet: return Json{{"builder", "finset"}, {"sets", sets_to_json(s.sets)}};
    case K::FinRel: return Json{{"builder", "finrel"}, {"sets", sets_to_json(s.sets)}};
    case K::Poset: {
      Json out{{"builder", "poset"}};
      const Json body = poset_to_json(*s.poset);
      for (const auto& [k, v] : body.items()) out[k] = v;
      return out;
    }
    case K::Monoid: {
      const FiniteMonoid& m = *s.monoid;
      Json rows = Json::array();
      for (std::size_t a = 0; a < m.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m.label(m.multiply(a, b)));
        rows.push_back(row);
      }
      return Json{{"builder", "monoid"}, {"elements", m.elements()},
                  {"unit", m.label(m.unit())}, {"mult", rows}};
    }
    case K::Mat: return Json{{"builder", "mat"}, {"p", s.p}, {"max_dim", s.max_dim}};
  }
  return Json();
}

const CategoryView& LoadedCategory::view() const {
  if (category) return *category;
  return *mat;
}

const FiniteCategory& LoadedCategory::finite() const {
  if (!category) {
    throw EnumerationBudgetExceeded("this category is only available as a lazy view");
  }
  return *category;
}

LoadedCategory build(const CategorySource& s, const Limits& limits) {
  using K = CategorySource::Kind;
  LoadedCategory out;
  out.source = s;
  switch (s.kind) {
    case K::Table: out.category = std::make_shared<const FiniteCategory>(*s.table); break;
    case K::FinSet:
      out.finset = build_finset(s.sets, limits.cap.value_or(kDefaultFinSetCap), limits.budget);
      out.category = std::make_shared<const FiniteCategory>(out.finset->category);
      break;
    case K::FinRel:
      out.finrel = build_finrel(s.sets, limits.cap.value_or(kDefaultFinRelCap), limits.budget);
      out.category = std::make_shared<const FiniteCategory>(out.finrel->category);
      break;
    case K::Poset:
      out.category = std::make_shared<const FiniteCategory>(poset_as_category(*s.poset));
      break;
    case K::Monoid:
      out.category = std::make_shared<const FiniteCategory>(monoid_as_category(*s.monoid));
      break;
    case K::Mat:
      out.mat = std::make_shared<const MatrixCategory>(s.p, s.max_dim, limits.budget);
      try {
        out.category = std::make_shared<const FiniteCategory>(materialize(*out.mat, limits.budget));
      } catch (const EnumerationBudgetExceeded&) {
        // Hom-sets are enumerable one at a time; keep the lazy view.
      }
      break;
  }
  return out;
}

LoadedCategory load_category(const std::filesystem::path& file, const Limits& limits) {
  return build(category_source_from_json(read_file(file)), limits);
}

// ---- monotone maps ----------------------------------------------------------

MonotoneMap monotone_from_json(const Json& j, const std::filesystem::path& base,
                               const std::string& path) {
  only_fields(j, path, {"dom", "cod", "graph"});
  FinitePoset dom = poset_from_json(resolve(field(j, path, "dom"), base, path + ".dom"), path + ".dom");
  FinitePoset cod = poset_from_json(resolve(field(j, path, "cod"), base, path + ".cod"), path + ".cod");
  const auto graph = string_map(field(j, path, "graph"), path + ".graph");
  std::vector<std::size_t> table(dom.size(), dom.size() + cod.size());
  for (const auto& [x, y] : graph) {
    const std::string p = path + ".graph." + x;
    const std::size_t xi = located(p, [&] { return dom.index_of(x); });
    table[xi] = located(p, [&] { return cod.index_of(y); });
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (table[x] >= cod.size()) fail(path + ".graph", "no image for '" + dom.label(x) + "'");
  }
  return MonotoneMap(std::move(dom), std::move(cod), std::move(table));
}

Json monotone_to_json(const MonotoneMap& m) {
  Json graph = Json::object();
  for (std::size_t x = 0; x < m.dom().size(); ++x) graph[m.dom().label(x)] = m.cod().label(m(x));
  return Json{{"dom", poset_to_json(m.dom())}, {"cod", poset_to_json(m.cod())}, {"graph", graph}};
}

AdjointsFile adjoints_from_json(const Json& j, const std::filesystem::path& base) {
  AdjointsFile out;
  if (j.is_object() && (j.contains("left") || j.contains("right"))) {
    only_fields(j, "$", {"left", "right"});
    out.left = monotone_from_json(field(j, "$", "left"), base, "$.left");
    out.right = monotone_from_json(field(j, "$", "right"), base, "$.right");
  } else {
    out.map = monotone_from_json(j, base, "$");
  }
  return out;
}

Json to_json(const AdjointsFile& a) {
  if (a.map) return monotone_to_json(*a.map);
  return Json{{"left", monotone_to_json(*a.left)}, {"right", monotone_to_json(*a.right)}};
}

// ---- functors ---------------------------------------------------------------

FunctorFile functor_file_from_json(const Json& j, const std::filesystem::path& base) {
  only_fields(j, "$", {"source", "target", "object_map", "arrow_map"});
  FunctorFile out;
  out.source = category_source_from_json(resolve(field(j, "$", "source"), base, "$.source"),
                                         "$.source");
  out.target = category_source_from_json(resolve(field(j, "$", "target"), base, "$.target"),
                                         "$.target");
  for (const auto& [a, b] : string_map(field(j, "$", "object_map"), "$.object_map")) {
    out.object_map.emplace(ObjectId{a}, ObjectId{b});
  }
  for (const auto& [f, g] : string_map(field(j, "$", "arrow_map"), "$.arrow_map")) {
    out.arrow_map.emplace(ArrowId{f}, ArrowId{g});
  }
  return out;
}

Json to_json(const FunctorFile& f) {
  Json objects = Json::object();
  for (const auto& [a, b] : f.object_map) objects[a.name] = b.name;
  Json arrows = Json::object();
  for (const auto& [x, y] : f.arrow_map) arrows[x.name] = y.name;
  return Json{{"source", to_json(f.source)}, {"target", to_json(f.target)},
              {"object_map", objects}, {"arrow_map", arrows}};
}

Functor build_functor(const FunctorFile& f, const Limits& limits) {
  LoadedCategory source = build(f.source, limits);
  LoadedCategory target = build(f.target, limits);
  if (!source.category || !target.category) {
    throw EnumerationBudgetExceeded("functor endpoints must be materialized categories");
  }
  return Functor(source.category, target.category, f.object_map, f.arrow_map);
}

// ---- frames, structures, recursion data -------------------------------------

KripkeFrame frame_from_json(const Json& j) {
  only_fields(j, "$", {"worlds", "access", "valuation"});
  UniverseRef worlds = make_universe("W", string_list(field(j, "$", "worlds"), "$.worlds"));
  const auto access = pair_list(field(j, "$", "access"), "$.access");
  FiniteRelation r = located("$.access", [&] { return FiniteRelation::from_pairs(worlds, worlds, access); });
  std::map<std::string, SubsetOf> valuation;
  const Json& v = field(j, "$", "valuation");
  if (!v.is_object()) fail("$.valuation", "expected an object");
  for (const auto& [atom, ws] : v.items()) {
    const std::string p = "$.valuation." + atom;
    const auto labels = string_list(ws, p);
    valuation.emplace(atom, located(p, [&] { return SubsetOf::of(worlds, labels); }));
  }
  return KripkeFrame(worlds, std::move(r), std::move(valuation));
}

Json frame_to_json(const KripkeFrame& f) {
  Json access = Json::array();
  for (std::size_t x = 0; x < f.worlds->size(); ++x) {
    for (std::size_t y = 0; y < f.worlds->size(); ++y) {
      if (f.access.related(x, y)) access.push_back({f.worlds->elements[x], f.worlds->elements[y]});
    }
  }
  Json valuation = Json::object();
  for (const auto& [atom, s] : f.valuation) valuation[atom] = s.labels();
  return Json{{"worlds", f.worlds->elements}, {"access", access}, {"valuation", valuation}};
}

FOStructure structure_from_json(const Json& j) {
  only_fields(j, "$", {"carrier", "relations"});
  UniverseRef carrier = make_universe("A", string_list(field(j, "$", "carrier"), "$.carrier"));
  std::map<std::string, FORelation> relations;
  const Json& rels = field(j, "$", "relations");
  if (!rels.is_object()) fail("$.relations", "expected an object");
  for (const auto& [name, body] : rels.items()) {
    const std::string p = "$.relations." + name;
    only_fields(body, p, {"arity", "tuples"});
    FORelation r;
    r.arity = as_size(field(body, p, "arity"), p + ".arity");
    const Json& tuples = as_array(field(body, p, "tuples"), p + ".tuples");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const std::string tp = at(p + ".tuples", i);
      const auto labels = string_list(tuples[i], tp);
      if (labels.size() != r.arity) {
        fail(tp, "expected " + std::to_string(r.arity) + " entries");
      }
      std::vector<std::size_t> t;
      for (const auto& l : labels) t.push_back(located(tp, [&] { return carrier->index_of(l); }));
      r.tuples.push_back(std::move(t));
    }
    relations.emplace(name, std::move(r));
  }
  return FOStructure(carrier, std::move(relations));
}

Json structure_to_json(const FOStructure& m) {
  Json rels = Json::object();
  for (const auto& [name, r] : m.relations) {
    Json tuples = Json::array();
    for (const auto& t : r.tuples) {
      Json row = Json::array();
      for (std::size_t v : t) row.push_back(m.carrier->elements[v]);
      tuples.push_back(row);
    }
    rels[name] = Json{{"arity", r.arity}, {"tuples", tuples}};
  }
  return Json{{"carrier", m.carrier->elements}, {"relations", rels}};
}

RecursionData recursion_from_json(const Json& j) {
  only_fields(j, "$", {"carrier", "c", "f"});
  UniverseRef carrier = make_universe("A", string_list(field(j, "$", "carrier"), "$.carrier"));
  const std::string c = as_string(field(j, "$", "c"), "$.c");
  const std::size_t ci = located("$.c", [&] { return carrier->index_of(c); });
  std::vector<std::size_t> graph(carrier->size(), carrier->size());
  for (const auto& [x, y] : string_map(field(j, "$", "f"), "$.f")) {
    const std::string p = "$.f." + x;
    graph[located(p, [&] { return carrier->index_of(x); })] =
        located(p, [&] { return carrier->index_of(y); });
  }
  for (std::size_t x = 0; x < graph.size(); ++x) {
    if (graph[x] >= carrier->size()) fail("$.f", "no image for '" + carrier->elements[x] + "'");
  }
  return RecursionData(carrier, ci, FiniteFunction(carrier, carrier, std::move(graph)));
}

Json recursion_to_json(const RecursionData& d) {
  Json f = Json::object();
  for (std::size_t x = 0; x < d.carrier->size(); ++x) {
    f[d.carrier->elements[x]] = d.carrier->elements[d.f(x)];
  }
  return Json{{"carrier", d.carrier->elements}, {"c", d.carrier->elements[d.c]}, {"f", f}};
}

}  // namespace fincat::io
