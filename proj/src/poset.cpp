#include "fincat/poset.hpp"

#include <unordered_set>

namespace fincat {

namespace {

void check_distinct(const std::vector<std::string>& elements) {
  std::unordered_set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) throw InvalidPoset("element '" + e + "' listed twice", {e});
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& leq)
    : elements_(std::move(elements)) {
  check_distinct(elements_);
  const std::size_t n = elements_.size();
  table_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) table_[i * n + i] = true;
  for (const auto& [a, b] : leq) table_[index_of(a) * n + index_of(b)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!table_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[k * n + j]) table_[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table_[i * n + j] && table_[j * n + i]) {
        throw InvalidPoset("order is not antisymmetric: " + elements_[i] + " <= " + elements_[j] +
                               " <= " + elements_[i],
                           {elements_[i], elements_[j]});
      }
    }
  }
}

FinitePoset FinitePoset::from_table(std::vector<std::string> elements, std::vector<bool> table) {
  check_distinct(elements);
  const std::size_t n = elements.size();
  if (table.size() != n * n) throw InvalidPoset("order table has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i * n + i]) throw InvalidPoset("not reflexive at " + elements[i], {elements[i]});
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && table[i * n + j] && table[j * n + i]) {
        throw InvalidPoset("not antisymmetric at " + elements[i] + ", " + elements[j],
                           {elements[i], elements[j]});
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (table[i * n + j] && table[j * n + k] && !table[i * n + k]) {
          throw InvalidPoset("not transitive at " + elements[i] + ", " + elements[j] + ", " +
                                 elements[k],
                             {elements[i], elements[j], elements[k]});
        }
      }
    }
  }
  FinitePoset p;
  p.elements_ = std::move(elements);
  p.table_ = std::move(table);
  return p;
}

FinitePoset FinitePoset::chain(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<bool> table(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) table[i * n + j] = true;
  }
  return from_table(std::move(elements), std::move(table));
}

FinitePoset FinitePoset::antichain(std::vector<std::string> elements) {
  return FinitePoset(std::move(elements), {});
}

std::optional<std::size_t> FinitePoset::find(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw UnknownElement("unknown poset element '" + label + "'", {label});
  return *i;
}

std::vector<std::pair<std::string, std::string>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && leq(i, j)) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  for (std::size_t c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < size() && greatest; ++d) {
      if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return std::nullopt;
}

MonotoneMap::MonotoneMap(FinitePoset dom, FinitePoset cod, std::vector<std::size_t> graph)
    : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
  if (graph_.size() != dom_.size()) throw InvalidArgument("map is not total on its domain");
  for (std::size_t v : graph_) {
    if (v >= cod_.size()) throw InvalidArgument("map value outside its codomain");
  }
}

MonotoneMap MonotoneMap::from_labels(FinitePoset dom, FinitePoset cod,
                                     const std::vector<std::pair<std::string, std::string>>& graph) {
  std::vector<std::size_t> table(dom.size(), 0);
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [x, y] : graph) {
    const std::size_t i = dom.index_of(x);
    if (seen[i]) throw InvalidArgument("map assigns '" + x + "' twice", {x});
    seen[i] = true;
    table[i] = cod.index_of(y);
  }
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (!seen[i]) throw InvalidArgument("map is undefined at '" + dom.label(i) + "'", {dom.label(i)});
  }
  return MonotoneMap(std::move(dom), std::move(cod), std::move(table));
}

MonotoneMap MonotoneMap::identity(const FinitePoset& p) {
  std::vector<std::size_t> graph(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) graph[i] = i;
  return MonotoneMap(p, p, std::move(graph));
}

std::optional<std::pair<std::size_t, std::size_t>> MonotoneMap::monotonicity_violation() const {
  for (std::size_t x = 0; x < dom_.size(); ++x) {
    for (std::size_t y = 0; y < dom_.size(); ++y) {
      if (dom_.leq(x, y) && !cod_.leq(graph_[x], graph_[y])) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

void MonotoneMap::require_monotone() const {
  if (auto v = monotonicity_violation()) {
    const auto& a = dom_.label(v->first);
    const auto& b = dom_.label(v->second);
    throw NotMonotone("map is not monotone: " + a + " <= " + b + " but " + cod_.label(graph_[v->first]) +
                          " is not <= " + cod_.label(graph_[v->second]),
                      {a, b});
  }
}

MonotoneMap compose(const MonotoneMap& second, const MonotoneMap& first) {
  if (!(first.cod() == second.dom())) {
    throw SourceTargetMismatch("monotone maps do not compose");
  }
  std::vector<std::size_t> graph(first.dom().size());
  for (std::size_t x = 0; x < graph.size(); ++x) graph[x] = second(first(x));
  return MonotoneMap(first.dom(), second.cod(), std::move(graph));
}

bool pointwise_leq(const MonotoneMap& h, const MonotoneMap& k) {
  if (!(h.dom() == k.dom()) || !(h.cod() == k.cod())) {
    throw SourceTargetMismatch("pointwise order needs parallel maps");
  }
  for (std::size_t x = 0; x < h.dom().size(); ++x) {
    if (!h.cod().leq(h(x), k(x))) return false;
  }
  return true;
}

}  // namespace fincat
