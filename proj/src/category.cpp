#include "fincat/category.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace fincat {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::string pair_label(const ArrowId& after, const ArrowId& then) {
  return "(" + after.name + ", " + then.name + ")";
}

}  // namespace

void FiniteCategory::index_names() {
  const std::size_t n = objects_.size();
  object_index_.clear();
  arrow_index_.clear();
  for (Index i = 0; i < n; ++i) {
    if (objects_[i].name.empty()) throw MalformedTable("object with empty name");
    if (!object_index_.emplace(objects_[i], i).second) {
      throw MalformedTable("duplicate object '" + objects_[i].name + "'", {objects_[i].name});
    }
  }
  dom_.assign(arrows_.size(), 0);
  cod_.assign(arrows_.size(), 0);
  hom_.assign(n * n, {});
  incoming_.assign(n, {});
  position_in_cod_.assign(arrows_.size(), 0);
  for (Index f = 0; f < arrows_.size(); ++f) {
    const ArrowSpec& spec = arrows_[f];
    if (spec.name.name.empty()) throw MalformedTable("arrow with empty name");
    if (!arrow_index_.emplace(spec.name, f).second) {
      throw MalformedTable("duplicate arrow '" + spec.name.name + "'", {spec.name.name});
    }
    auto d = object_index_.find(spec.dom);
    auto c = object_index_.find(spec.cod);
    if (d == object_index_.end() || c == object_index_.end()) {
      throw MalformedTable("arrow '" + spec.name.name + "' refers to an unknown object",
                           {spec.name.name});
    }
    dom_[f] = d->second;
    cod_[f] = c->second;
    hom_[dom_[f] * n + cod_[f]].push_back(f);
    position_in_cod_[f] = incoming_[cod_[f]].size();
    incoming_[cod_[f]].push_back(f);
  }
}

FiniteCategory::FiniteCategory(std::vector<ObjectId> objects, std::vector<ArrowSpec> arrows,
                               std::vector<std::pair<ObjectId, ArrowId>> identities,
                               std::vector<CompositionEntry> composition)
    : objects_(std::move(objects)), arrows_(std::move(arrows)) {
  index_names();

  identity_.assign(objects_.size(), kUnset);
  for (const auto& [object, arrow] : identities) {
    auto o = object_index_.find(object);
    if (o == object_index_.end()) {
      throw MalformedTable("identity declared for unknown object '" + object.name + "'",
                           {object.name});
    }
    auto a = arrow_index_.find(arrow);
    if (a == arrow_index_.end()) {
      throw MalformedTable("identity of '" + object.name + "' is unknown arrow '" + arrow.name + "'",
                           {arrow.name});
    }
    if (identity_[o->second] != kUnset) {
      throw MalformedTable("identity of '" + object.name + "' declared twice", {object.name});
    }
    identity_[o->second] = a->second;
  }
  for (Index i = 0; i < objects_.size(); ++i) {
    if (identity_[i] == kUnset) {
      throw MalformedTable("object '" + objects_[i].name + "' has no identity", {objects_[i].name});
    }
  }

  compose_.assign(arrows_.size(), {});
  for (Index g = 0; g < arrows_.size(); ++g) compose_[g].assign(incoming_[dom_[g]].size(), kUnset);
  for (const CompositionEntry& entry : composition) {
    auto g = arrow_index_.find(entry.after);
    auto f = arrow_index_.find(entry.then);
    auto r = arrow_index_.find(entry.result);
    if (g == arrow_index_.end() || f == arrow_index_.end() || r == arrow_index_.end()) {
      throw MalformedTable("composition entry " + pair_label(entry.after, entry.then) +
                               " refers to an unknown arrow",
                           {entry.after.name, entry.then.name, entry.result.name});
    }
    if (cod_[f->second] != dom_[g->second]) {
      throw MalformedTable("composition entry " + pair_label(entry.after, entry.then) +
                               " is not a composable pair",
                           {entry.after.name, entry.then.name});
    }
    Index& slot = compose_[g->second][position_in_cod_[f->second]];
    if (slot != kUnset) {
      throw MalformedTable("composition entry " + pair_label(entry.after, entry.then) +
                               " declared twice",
                           {entry.after.name, entry.then.name});
    }
    slot = r->second;
  }
  for (Index g = 0; g < arrows_.size(); ++g) {
    const auto& into = incoming_[dom_[g]];
    for (Index k = 0; k < into.size(); ++k) {
      if (compose_[g][k] == kUnset) {
        throw MalformedTable("compose is partial: no entry for composable pair " +
                                 pair_label(arrows_[g].name, arrows_[into[k]].name),
                             {arrows_[g].name.name, arrows_[into[k]].name.name});
      }
    }
  }
}

FiniteCategory FiniteCategory::generate(std::vector<ObjectId> objects,
                                        std::vector<ArrowSpec> arrows,
                                        std::vector<Index> identities,
                                        const std::function<Index(Index, Index)>& compose) {
  FiniteCategory c;
  c.objects_ = std::move(objects);
  c.arrows_ = std::move(arrows);
  c.index_names();
  if (identities.size() != c.objects_.size()) {
    throw MalformedTable("identity table does not cover every object");
  }
  for (Index id : identities) {
    if (id >= c.arrows_.size()) throw MalformedTable("identity index out of range");
  }
  c.identity_ = std::move(identities);
  c.compose_.assign(c.arrows_.size(), {});
  for (Index g = 0; g < c.arrows_.size(); ++g) {
    const auto& into = c.incoming_[c.dom_[g]];
    auto& row = c.compose_[g];
    row.resize(into.size());
    for (Index k = 0; k < into.size(); ++k) {
      Index r = compose(g, into[k]);
      if (r >= c.arrows_.size()) throw MalformedTable("composite index out of range");
      row[k] = r;
    }
  }
  return c;
}

std::optional<FiniteCategory::Index> FiniteCategory::find_object(const ObjectId& a) const {
  auto it = object_index_.find(a);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<FiniteCategory::Index> FiniteCategory::find_arrow(const ArrowId& f) const {
  auto it = arrow_index_.find(f);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

FiniteCategory::Index FiniteCategory::object_index(const ObjectId& a) const {
  auto it = object_index_.find(a);
  if (it == object_index_.end()) throw UnknownObject("unknown object '" + a.name + "'", {a.name});
  return it->second;
}

FiniteCategory::Index FiniteCategory::arrow_index(const ArrowId& f) const {
  auto it = arrow_index_.find(f);
  if (it == arrow_index_.end()) throw UnknownArrow("unknown arrow '" + f.name + "'", {f.name});
  return it->second;
}

std::optional<FiniteCategory::Index> FiniteCategory::try_compose_at(Index after, Index then) const {
  if (cod_[then] != dom_[after]) return std::nullopt;
  return compose_at(after, then);
}

std::size_t FiniteCategory::hom_size(const ObjectId& a, const ObjectId& b) const {
  return hom_at(object_index(a), object_index(b)).size();
}

std::vector<ArrowId> FiniteCategory::hom(const ObjectId& a, const ObjectId& b) const {
  std::vector<ArrowId> out;
  for (Index f : hom_at(object_index(a), object_index(b))) out.push_back(arrows_[f].name);
  return out;
}

ArrowId FiniteCategory::compose(const ArrowId& after, const ArrowId& then) const {
  const Index g = arrow_index(after);
  const Index f = arrow_index(then);
  auto r = try_compose_at(g, f);
  if (!r) {
    throw InvalidArgument("arrows " + pair_label(after, then) + " are not composable",
                          {after.name, then.name});
  }
  return arrows_[*r].name;
}

ArrowId FiniteCategory::identity(const ObjectId& a) const {
  return arrows_[identity_[object_index(a)]].name;
}

std::vector<std::pair<ObjectId, ArrowId>> FiniteCategory::identity_table() const {
  std::vector<std::pair<ObjectId, ArrowId>> out;
  for (Index i = 0; i < objects_.size(); ++i) out.emplace_back(objects_[i], arrows_[identity_[i]].name);
  return out;
}

std::vector<CompositionEntry> FiniteCategory::composition_table() const {
  std::vector<CompositionEntry> out;
  for (Index g = 0; g < arrows_.size(); ++g) {
    std::vector<Index> thens = incoming_[dom_[g]];
    std::sort(thens.begin(), thens.end());
    for (Index f : thens) {
      out.push_back({arrows_[g].name, arrows_[f].name, arrows_[compose_at(g, f)].name});
    }
  }
  return out;
}

bool FiniteCategory::operator==(const FiniteCategory& other) const {
  if (objects_.size() != other.objects_.size() || arrows_.size() != other.arrows_.size()) {
    return false;
  }
  for (const ObjectId& o : objects_) {
    if (!other.find_object(o)) return false;
  }
  for (const ArrowSpec& spec : arrows_) {
    auto j = other.find_arrow(spec.name);
    if (!j || other.arrows_[*j] != spec) return false;
  }
  for (Index i = 0; i < objects_.size(); ++i) {
    if (other.identity(objects_[i]) != arrows_[identity_[i]].name) return false;
  }
  for (Index g = 0; g < arrows_.size(); ++g) {
    const Index og = *other.find_arrow(arrows_[g].name);
    for (Index f : incoming_[dom_[g]]) {
      const Index of = *other.find_arrow(arrows_[f].name);
      auto r = other.try_compose_at(og, of);
      if (!r || other.arrows_[*r].name != arrows_[compose_at(g, f)].name) return false;
    }
  }
  return true;
}

bool AxiomReport::has(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

AxiomReport validate(const FiniteCategory& c) {
  using Index = FiniteCategory::Index;
  AxiomReport report;
  auto name = [&](Index f) { return c.arrow(f).name.name; };
  auto record = [&](std::string law, std::vector<std::string> witnesses) {
    report.violations.push_back({std::move(law), std::move(witnesses)});
  };

  for (Index a = 0; a < c.object_count(); ++a) {
    const Index id = c.identity_at(a);
    if (c.dom_at(id) != a || c.cod_at(id) != a) {
      record("identity-typing", {name(id), c.object(a).name});
    }
  }

  const std::size_t n = c.arrow_count();
  for (Index g = 0; g < n; ++g) {
    for (Index f = 0; f < n; ++f) {
      if (c.cod_at(f) != c.dom_at(g)) continue;
      const Index r = c.compose_at(g, f);
      if (c.dom_at(r) != c.dom_at(f) || c.cod_at(r) != c.cod_at(g)) {
        record("composition-typing", {name(g), name(f), name(r)});
      }
    }
  }

  for (Index f = 0; f < n; ++f) {
    auto left = c.try_compose_at(c.identity_at(c.cod_at(f)), f);
    if (left && *left != f) record("left-unit", {name(f)});
    auto right = c.try_compose_at(f, c.identity_at(c.dom_at(f)));
    if (right && *right != f) record("right-unit", {name(f)});
  }

  for (Index h = 0; h < n; ++h) {
    for (Index g = 0; g < n; ++g) {
      if (c.cod_at(g) != c.dom_at(h)) continue;
      const Index hg = c.compose_at(h, g);
      for (Index f = 0; f < n; ++f) {
        if (c.cod_at(f) != c.dom_at(g)) continue;
        auto lhs = c.try_compose_at(h, c.compose_at(g, f));
        auto rhs = c.try_compose_at(hg, f);
        // Mistyped composites are already reported above.
        if (!lhs || !rhs) continue;
        if (*lhs != *rhs) record("associativity", {name(h), name(g), name(f)});
      }
    }
  }
  return report;
}

namespace {

// All arrows of a view, grouped per (dom, cod) in object order.
std::vector<ArrowId> enumerate_arrows(const CategoryView& c, std::size_t budget) {
  const auto objects = c.objects();
  std::size_t total = 0;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      total += c.hom_size(a, b);
      if (total > budget) {
        throw EnumerationBudgetExceeded("category has more than " + std::to_string(budget) +
                                        " arrows");
      }
    }
  }
  std::vector<ArrowId> out;
  out.reserve(total);
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      for (auto& f : c.hom(a, b)) out.push_back(std::move(f));
    }
  }
  return out;
}

void require_arrow(const CategoryView& c, const ArrowId& f) {
  if (!c.contains(f)) throw UnknownArrow("unknown arrow '" + f.name + "'", {f.name});
}

// Hom-sets into (or out of) one object across all objects, under budget.
std::vector<std::vector<ArrowId>> homs_into(const CategoryView& c, const ObjectId& x,
                                            std::size_t budget) {
  std::size_t total = 0;
  const auto objects = c.objects();
  for (const auto& z : objects) {
    total += c.hom_size(z, x);
    if (total > budget) {
      throw EnumerationBudgetExceeded("hom-sets into '" + x.name + "' exceed " +
                                      std::to_string(budget) + " arrows");
    }
  }
  std::vector<std::vector<ArrowId>> out;
  for (const auto& z : objects) out.push_back(c.hom(z, x));
  return out;
}

std::vector<std::vector<ArrowId>> homs_out_of(const CategoryView& c, const ObjectId& x,
                                              std::size_t budget) {
  std::size_t total = 0;
  const auto objects = c.objects();
  for (const auto& z : objects) {
    total += c.hom_size(x, z);
    if (total > budget) {
      throw EnumerationBudgetExceeded("hom-sets out of '" + x.name + "' exceed " +
                                      std::to_string(budget) + " arrows");
    }
  }
  std::vector<std::vector<ArrowId>> out;
  for (const auto& z : objects) out.push_back(c.hom(x, z));
  return out;
}

}  // namespace

AxiomReport validate_view(const CategoryView& c, std::size_t budget) {
  AxiomReport report;
  auto record = [&](std::string law, std::vector<std::string> witnesses) {
    report.violations.push_back({std::move(law), std::move(witnesses)});
  };
  const auto arrows = enumerate_arrows(c, budget);
  for (const auto& a : c.objects()) {
    const ArrowId id = c.identity(a);
    if (c.dom(id) != a || c.cod(id) != a) record("identity-typing", {id.name, a.name});
  }
  for (const auto& g : arrows) {
    for (const auto& f : arrows) {
      if (c.cod(f) != c.dom(g)) continue;
      const ArrowId r = c.compose(g, f);
      if (c.dom(r) != c.dom(f) || c.cod(r) != c.cod(g)) {
        record("composition-typing", {g.name, f.name, r.name});
      }
    }
  }
  for (const auto& f : arrows) {
    const ArrowId left_id = c.identity(c.cod(f));
    const ArrowId right_id = c.identity(c.dom(f));
    if (c.dom(left_id) == c.cod(f) && c.compose(left_id, f) != f) record("left-unit", {f.name});
    if (c.cod(right_id) == c.dom(f) && c.compose(f, right_id) != f) record("right-unit", {f.name});
  }
  for (const auto& h : arrows) {
    for (const auto& g : arrows) {
      if (c.cod(g) != c.dom(h)) continue;
      const ArrowId hg = c.compose(h, g);
      for (const auto& f : arrows) {
        if (c.cod(f) != c.dom(g)) continue;
        const ArrowId gf = c.compose(g, f);
        // Mistyped composites are already reported above.
        if (c.cod(gf) != c.dom(h) || c.cod(f) != c.dom(hg)) continue;
        if (c.compose(h, gf) != c.compose(hg, f)) record("associativity", {h.name, g.name, f.name});
      }
    }
  }
  return report;
}

std::optional<ArrowPair> monic_violation(const CategoryView& c, const ArrowId& f,
                                         std::size_t budget) {
  require_arrow(c, f);
  for (const auto& hom : homs_into(c, c.dom(f), budget)) {
    std::vector<ArrowId> images;
    images.reserve(hom.size());
    for (const auto& g : hom) images.push_back(c.compose(f, g));
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = i + 1; j < hom.size(); ++j) {
        if (images[i] == images[j]) return ArrowPair{hom[i], hom[j]};
      }
    }
  }
  return std::nullopt;
}

std::optional<ArrowPair> epic_violation(const CategoryView& c, const ArrowId& f,
                                        std::size_t budget) {
  require_arrow(c, f);
  for (const auto& hom : homs_out_of(c, c.cod(f), budget)) {
    std::vector<ArrowId> images;
    images.reserve(hom.size());
    for (const auto& g : hom) images.push_back(c.compose(g, f));
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = i + 1; j < hom.size(); ++j) {
        if (images[i] == images[j]) return ArrowPair{hom[i], hom[j]};
      }
    }
  }
  return std::nullopt;
}

std::vector<ArrowId> all_inverses(const CategoryView& c, const ArrowId& f, std::size_t budget) {
  require_arrow(c, f);
  const ObjectId a = c.dom(f);
  const ObjectId b = c.cod(f);
  if (c.hom_size(b, a) > budget) {
    throw EnumerationBudgetExceeded("hom(" + b.name + ", " + a.name + ") exceeds budget");
  }
  const ArrowId id_a = c.identity(a);
  const ArrowId id_b = c.identity(b);
  std::vector<ArrowId> out;
  for (const auto& g : c.hom(b, a)) {
    if (c.compose(g, f) == id_a && c.compose(f, g) == id_b) out.push_back(g);
  }
  return out;
}

std::optional<ArrowId> find_inverse(const CategoryView& c, const ArrowId& f, std::size_t budget) {
  auto inverses = all_inverses(c, f, budget);
  if (inverses.empty()) return std::nullopt;
  return inverses.front();
}

bool is_groupoid(const FiniteCategory& c) {
  for (const auto& spec : c.arrows()) {
    if (!find_inverse(c, spec.name)) return false;
  }
  return true;
}

FiniteCategory materialize(const CategoryView& c, std::size_t budget) {
  const auto objects = c.objects();
  const auto arrows = enumerate_arrows(c, budget);
  std::vector<ArrowSpec> specs;
  specs.reserve(arrows.size());
  std::unordered_map<ArrowId, std::size_t> index;
  for (const auto& f : arrows) {
    index.emplace(f, specs.size());
    specs.push_back({f, c.dom(f), c.cod(f)});
  }
  std::vector<std::size_t> identities;
  for (const auto& a : objects) {
    auto it = index.find(c.identity(a));
    if (it == index.end()) throw MalformedTable("identity of '" + a.name + "' is not enumerated");
    identities.push_back(it->second);
  }
  return FiniteCategory::generate(objects, specs, std::move(identities),
                                  [&](std::size_t g, std::size_t f) {
                                    auto it = index.find(c.compose(arrows[g], arrows[f]));
                                    if (it == index.end()) {
                                      throw MalformedTable("composite of (" + arrows[g].name + ", " +
                                                           arrows[f].name + ") is not enumerated");
                                    }
                                    return it->second;
                                  });
}

FiniteCategory relabel(const FiniteCategory& c,
                       const std::unordered_map<ObjectId, ObjectId>& objects,
                       const std::unordered_map<ArrowId, ArrowId>& arrows) {
  auto obj = [&](const ObjectId& o) {
    auto it = objects.find(o);
    return it == objects.end() ? o : it->second;
  };
  auto arr = [&](const ArrowId& f) {
    auto it = arrows.find(f);
    return it == arrows.end() ? f : it->second;
  };
  std::vector<ObjectId> new_objects;
  for (std::size_t i = 0; i < c.object_count(); ++i) new_objects.push_back(obj(c.object(i)));
  std::vector<ArrowSpec> specs;
  for (const auto& s : c.arrows()) specs.push_back({arr(s.name), obj(s.dom), obj(s.cod)});
  std::vector<std::size_t> identities;
  for (std::size_t i = 0; i < c.object_count(); ++i) identities.push_back(c.identity_at(i));
  return FiniteCategory::generate(std::move(new_objects), std::move(specs), std::move(identities),
                                  [&](std::size_t g, std::size_t f) { return c.compose_at(g, f); });
}

}  // namespace fincat
