#include "fincat/sets.hpp"

#include <unordered_set>

namespace fincat {

NamedFiniteSet::NamedFiniteSet(std::string name_, std::vector<std::string> elements_)
    : name(std::move(name_)), elements(std::move(elements_)) {
  std::unordered_set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) {
      throw InvalidArgument("set '" + name + "' lists element '" + e + "' twice", {e});
    }
  }
}

std::optional<std::size_t> NamedFiniteSet::find(const std::string& label) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t NamedFiniteSet::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw UnknownElement("'" + label + "' is not an element of '" + name + "'", {label});
  return *i;
}

UniverseRef make_universe(std::string name, std::vector<std::string> elements) {
  return std::make_shared<const NamedFiniteSet>(std::move(name), std::move(elements));
}

bool same_universe(const UniverseRef& a, const UniverseRef& b) {
  return a == b || (a && b && *a == *b);
}

FiniteFunction::FiniteFunction(UniverseRef dom_, UniverseRef cod_, std::vector<std::size_t> graph_)
    : dom(std::move(dom_)), cod(std::move(cod_)), graph(std::move(graph_)) {
  if (graph.size() != dom->size()) {
    throw InvalidArgument("function graph is not total on '" + dom->name + "'");
  }
  for (std::size_t v : graph) {
    if (v >= cod->size()) throw InvalidArgument("function value outside '" + cod->name + "'");
  }
}

bool FiniteFunction::operator==(const FiniteFunction& other) const {
  return same_universe(dom, other.dom) && same_universe(cod, other.cod) && graph == other.graph;
}

FiniteRelation::FiniteRelation(UniverseRef dom_, UniverseRef cod_, std::vector<bool> pairs_)
    : dom(std::move(dom_)), cod(std::move(cod_)), pairs(std::move(pairs_)) {
  if (pairs.size() != dom->size() * cod->size()) {
    throw InvalidArgument("relation table does not match '" + dom->name + "' x '" + cod->name + "'");
  }
}

FiniteRelation FiniteRelation::from_pairs(
    UniverseRef dom, UniverseRef cod, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<bool> table(dom->size() * cod->size(), false);
  for (const auto& [x, y] : pairs) table[dom->index_of(x) * cod->size() + cod->index_of(y)] = true;
  return FiniteRelation(std::move(dom), std::move(cod), std::move(table));
}

FiniteRelation FiniteRelation::diagonal(UniverseRef set) {
  const std::size_t n = set->size();
  std::vector<bool> table(n * n, false);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = true;
  return FiniteRelation(set, set, std::move(table));
}

bool FiniteRelation::operator==(const FiniteRelation& other) const {
  return same_universe(dom, other.dom) && same_universe(cod, other.cod) && pairs == other.pairs;
}

FiniteRelation relational_composite(const FiniteRelation& first, const FiniteRelation& second) {
  if (!same_universe(first.cod, second.dom)) {
    throw UniverseMismatch("relations do not compose: '" + first.cod->name + "' vs '" +
                           second.dom->name + "'");
  }
  const std::size_t nx = first.dom->size();
  const std::size_t ny = first.cod->size();
  const std::size_t nz = second.cod->size();
  std::vector<bool> table(nx * nz, false);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t z = 0; z < nz; ++z) {
      for (std::size_t y = 0; y < ny; ++y) {
        if (first.related(x, y) && second.related(y, z)) {
          table[x * nz + z] = true;
          break;
        }
      }
    }
  }
  return FiniteRelation(first.dom, second.cod, std::move(table));
}

FiniteFunction function_composite(const FiniteFunction& first, const FiniteFunction& second) {
  if (!same_universe(first.cod, second.dom)) {
    throw UniverseMismatch("functions do not compose: '" + first.cod->name + "' vs '" +
                           second.dom->name + "'");
  }
  std::vector<std::size_t> graph(first.graph.size());
  for (std::size_t x = 0; x < graph.size(); ++x) graph[x] = second(first(x));
  return FiniteFunction(first.dom, second.cod, std::move(graph));
}

}  // namespace fincat
