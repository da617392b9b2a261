#include "fincat/functor.hpp"

#include <algorithm>

namespace fincat {

Functor::Functor(CategoryRef source, CategoryRef target, std::map<ObjectId, ObjectId> object_map,
                 std::map<ArrowId, ArrowId> arrow_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      arrow_map_(std::move(arrow_map)) {
  if (!source_ || !target_) throw MalformedMap("functor needs a source and a target category");
  for (const auto& [from, to] : object_map_) {
    if (!source_->find_object(from)) {
      throw MalformedMap("object map mentions '" + from.name + "', not a source object", {from.name});
    }
    if (!target_->find_object(to)) {
      throw MalformedMap("object map sends '" + from.name + "' to '" + to.name +
                             "', not a target object",
                         {from.name, to.name});
    }
  }
  for (const auto& [from, to] : arrow_map_) {
    if (!source_->find_arrow(from)) {
      throw MalformedMap("arrow map mentions '" + from.name + "', not a source arrow", {from.name});
    }
    if (!target_->find_arrow(to)) {
      throw MalformedMap("arrow map sends '" + from.name + "' to '" + to.name +
                             "', not a target arrow",
                         {from.name, to.name});
    }
  }
  for (std::size_t i = 0; i < source_->object_count(); ++i) {
    if (!object_map_.count(source_->object(i))) {
      throw MalformedMap("object map is undefined at '" + source_->object(i).name + "'",
                         {source_->object(i).name});
    }
  }
  for (const auto& spec : source_->arrows()) {
    if (!arrow_map_.count(spec.name)) {
      throw MalformedMap("arrow map is undefined at '" + spec.name.name + "'", {spec.name.name});
    }
  }
}

Functor Functor::identity(CategoryRef c) {
  std::map<ObjectId, ObjectId> objects;
  std::map<ArrowId, ArrowId> arrows;
  for (std::size_t i = 0; i < c->object_count(); ++i) objects.emplace(c->object(i), c->object(i));
  for (const auto& spec : c->arrows()) arrows.emplace(spec.name, spec.name);
  return Functor(c, c, std::move(objects), std::move(arrows));
}

bool Functor::operator==(const Functor& other) const {
  return *source_ == *other.source_ && *target_ == *other.target_ &&
         object_map_ == other.object_map_ && arrow_map_ == other.arrow_map_;
}

AxiomReport check_functoriality(const Functor& functor) {
  const FiniteCategory& src = functor.source();
  const FiniteCategory& tgt = functor.target();
  AxiomReport report;
  auto record = [&](std::string law, std::vector<std::string> w) {
    report.violations.push_back({std::move(law), std::move(w)});
  };

  // Index-level image table.
  std::vector<std::size_t> image(src.arrow_count());
  for (std::size_t f = 0; f < src.arrow_count(); ++f) {
    image[f] = tgt.arrow_index(functor(src.arrow(f).name));
  }
  std::vector<bool> typed(src.arrow_count(), true);
  for (std::size_t f = 0; f < src.arrow_count(); ++f) {
    const auto& spec = src.arrow(f);
    const auto& img = tgt.arrow(image[f]);
    if (img.dom != functor(spec.dom) || img.cod != functor(spec.cod)) {
      typed[f] = false;
      record("typing", {spec.name.name, img.name.name});
    }
  }
  for (std::size_t a = 0; a < src.object_count(); ++a) {
    const std::size_t id = src.identity_at(a);
    const ArrowId expected = tgt.identity(functor(src.object(a)));
    if (tgt.arrow(image[id]).name != expected) {
      record("identity", {src.arrow(id).name.name, tgt.arrow(image[id]).name.name});
    }
  }
  for (std::size_t g = 0; g < src.arrow_count(); ++g) {
    for (std::size_t f = 0; f < src.arrow_count(); ++f) {
      if (src.cod_at(f) != src.dom_at(g)) continue;
      if (!typed[f] || !typed[g]) continue;  // reported above
      const std::size_t lhs = image[src.compose_at(g, f)];
      auto rhs = tgt.try_compose_at(image[g], image[f]);
      if (!rhs || *rhs != lhs) {
        record("composition", {src.arrow(g).name.name, src.arrow(f).name.name});
      }
    }
  }
  return report;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(f.target() == g.source())) {
    throw SourceTargetMismatch("target of the first functor is not the source of the second");
  }
  std::map<ObjectId, ObjectId> objects;
  std::map<ArrowId, ArrowId> arrows;
  for (const auto& [a, fa] : f.object_map()) objects.emplace(a, g(fa));
  for (const auto& [x, fx] : f.arrow_map()) arrows.emplace(x, g(fx));
  return Functor(f.source_ref(), g.target_ref(), std::move(objects), std::move(arrows));
}

std::vector<ArrowId> unpreserved_isos(const Functor& functor) {
  std::vector<ArrowId> out;
  for (const auto& spec : functor.source().arrows()) {
    if (!find_inverse(functor.source(), spec.name)) continue;
    const ArrowId& image = functor(spec.name);
    if (!find_inverse(functor.target(), image)) out.push_back(spec.name);
  }
  return out;
}

bool check_iso_preservation(const Functor& functor) {
  const AxiomReport report = check_functoriality(functor);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw NotAFunctor("not a functor: " + v.law + " law fails", v.witnesses);
  }
  return unpreserved_isos(functor).empty();
}

std::string subset_label(const NamedFiniteSet& set, const std::vector<bool>& members) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!members[i]) continue;
    if (!first) out += ',';
    first = false;
    out += set.elements[i];
  }
  return out + "}";
}

namespace {

NamedFiniteSet powerset_of(const NamedFiniteSet& set) {
  std::vector<std::string> subsets;
  const std::size_t n = set.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = (mask >> i) & 1U;
    subsets.push_back(subset_label(set, members));
  }
  return NamedFiniteSet("P(" + set.name + ")", std::move(subsets));
}

}  // namespace

PowersetFunctor powerset_functor(const FinSet& source, std::size_t budget) {
  std::vector<NamedFiniteSet> powersets;
  std::size_t cap = 0;
  for (const auto& s : source.sets) {
    if (s->size() >= 8 * sizeof(std::size_t) - 1) {
      throw EnumerationBudgetExceeded("powerset of '" + s->name + "' is too large");
    }
    powersets.push_back(powerset_of(*s));
    cap = std::max(cap, powersets.back().size());
  }
  FinSet target = build_finset(std::move(powersets), cap, budget);
  auto target_ref = std::make_shared<const FiniteCategory>(target.category);

  std::map<ObjectId, ObjectId> objects;
  for (std::size_t i = 0; i < source.sets.size(); ++i) {
    objects.emplace(ObjectId{source.sets[i]->name}, ObjectId{target.sets[i]->name});
  }
  std::map<ArrowId, ArrowId> arrows;
  for (std::size_t a = 0; a < source.category.arrow_count(); ++a) {
    const FiniteFunction& f = source.functions[a];
    const std::size_t nx = f.dom->size();
    const auto dom_index = source.category.object_index(source.category.arrow(a).dom);
    const auto cod_index = source.category.object_index(source.category.arrow(a).cod);
    std::vector<std::size_t> graph;
    for (std::size_t mask = 0; mask < (std::size_t{1} << nx); ++mask) {
      std::size_t image = 0;
      for (std::size_t x = 0; x < nx; ++x) {
        if ((mask >> x) & 1U) image |= std::size_t{1} << f(x);
      }
      graph.push_back(image);
    }
    FiniteFunction direct(target.sets[dom_index], target.sets[cod_index], std::move(graph));
    arrows.emplace(source.category.arrow(a).name, target.arrow_for(direct));
  }
  auto source_ref = std::make_shared<const FiniteCategory>(source.category);
  Functor functor(source_ref, target_ref, std::move(objects), std::move(arrows));
  return PowersetFunctor{std::move(target), std::move(functor)};
}

Functor monotone_as_functor(const MonotoneMap& m) {
  m.require_monotone();
  auto source = std::make_shared<const FiniteCategory>(poset_as_category(m.dom()));
  auto target = std::make_shared<const FiniteCategory>(poset_as_category(m.cod()));
  std::map<ObjectId, ObjectId> objects;
  std::map<ArrowId, ArrowId> arrows;
  const auto& p = m.dom();
  const auto& q = m.cod();
  for (std::size_t a = 0; a < p.size(); ++a) {
    objects.emplace(ObjectId{p.label(a)}, ObjectId{q.label(m(a))});
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      arrows.emplace(ArrowId{order_arrow_name(p.label(a), p.label(b))},
                     ArrowId{order_arrow_name(q.label(m(a)), q.label(m(b)))});
    }
  }
  return Functor(std::move(source), std::move(target), std::move(objects), std::move(arrows));
}

MonotoneMap functor_as_monotone(const Functor& f) {
  const FinitePoset p = category_to_poset(f.source());
  const FinitePoset q = category_to_poset(f.target());
  std::vector<std::size_t> graph(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) graph[a] = q.index_of(f(ObjectId{p.label(a)}).name);
  return MonotoneMap(p, q, std::move(graph));
}

Functor monoid_hom_as_functor(const MonoidHomomorphism& h) {
  const auto& m = h.source;
  const auto& n = h.target;
  if (h.map.size() != m.size()) throw MalformedMap("homomorphism is not total on its source");
  for (std::size_t v : h.map) {
    if (v >= n.size()) throw MalformedMap("homomorphism leaves its target");
  }
  if (h.map[m.unit()] != n.unit()) {
    throw NotAHomomorphism("unit " + m.label(m.unit()) + " goes to " + n.label(h.map[m.unit()]),
                           {m.label(m.unit())});
  }
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (h.map[m.multiply(a, b)] != n.multiply(h.map[a], h.map[b])) {
        throw NotAHomomorphism("F(" + m.label(a) + "*" + m.label(b) + ") != F(" + m.label(a) +
                                   ")*F(" + m.label(b) + ")",
                               {m.label(a), m.label(b)});
      }
    }
  }
  auto source = std::make_shared<const FiniteCategory>(monoid_as_category(m));
  auto target = std::make_shared<const FiniteCategory>(monoid_as_category(n));
  std::map<ArrowId, ArrowId> arrows;
  for (std::size_t a = 0; a < m.size(); ++a) {
    arrows.emplace(ArrowId{m.label(a)}, ArrowId{n.label(h.map[a])});
  }
  return Functor(std::move(source), std::move(target), {{kMonoidObject, kMonoidObject}},
                 std::move(arrows));
}

MonoidHomomorphism functor_as_monoid_hom(const Functor& f) {
  MonoidHomomorphism h{category_to_monoid(f.source()), category_to_monoid(f.target()), {}};
  for (const auto& e : h.source.elements()) h.map.push_back(h.target.index_of(f(ArrowId{e}).name));
  return h;
}

}  // namespace fincat
