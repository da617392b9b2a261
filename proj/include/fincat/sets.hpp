#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/errors.hpp"

namespace fincat {

/// A named finite set with distinct element labels. Elements are addressed
/// by their position in `elements`.
struct NamedFiniteSet {
  std::string name;
  std::vector<std::string> elements;

  NamedFiniteSet() = default;
  NamedFiniteSet(std::string name, std::vector<std::string> elements);

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws UnknownElement

  bool operator==(const NamedFiniteSet&) const = default;
};

using Universe = NamedFiniteSet;
using UniverseRef = std::shared_ptr<const NamedFiniteSet>;

UniverseRef make_universe(std::string name, std::vector<std::string> elements);

/// Two universe handles denote the same universe (pointer or value equality).
bool same_universe(const UniverseRef& a, const UniverseRef& b);

/// A total function between named finite sets; graph[i] is the index in
/// `cod` of the image of element i of `dom`.
struct FiniteFunction {
  UniverseRef dom;
  UniverseRef cod;
  std::vector<std::size_t> graph;

  FiniteFunction(UniverseRef dom, UniverseRef cod, std::vector<std::size_t> graph);

  std::size_t operator()(std::size_t x) const { return graph[x]; }
  bool operator==(const FiniteFunction& other) const;
};

/// R ⊆ dom × cod, stored as a |dom|×|cod| row-major characteristic table.
struct FiniteRelation {
  UniverseRef dom;
  UniverseRef cod;
  std::vector<bool> pairs;

  FiniteRelation(UniverseRef dom, UniverseRef cod, std::vector<bool> pairs);
  static FiniteRelation from_pairs(UniverseRef dom, UniverseRef cod,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);
  static FiniteRelation diagonal(UniverseRef set);

  bool related(std::size_t x, std::size_t y) const { return pairs[x * cod->size() + y]; }
  bool operator==(const FiniteRelation& other) const;
};

/// `first ; second`: x relates to z iff some y has x R y and y S z.
FiniteRelation relational_composite(const FiniteRelation& first, const FiniteRelation& second);

/// Function composite "first then second".
FiniteFunction function_composite(const FiniteFunction& first, const FiniteFunction& second);

}  // namespace fincat
