#pragma once

// Seeded generators for small posets and monotone maps.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fincat/poset.hpp"

namespace gen {

/// Random order on n elements "e0".."e{n-1}": each pair i < j is related
/// with probability `density`; index order is a linear extension.
inline fincat::FinitePoset poset(std::mt19937_64& rng, std::size_t n, double density = 0.4) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> leq;
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) leq.emplace_back(labels[i], labels[j]);
    }
  }
  return fincat::FinitePoset(labels, leq);
}

namespace detail {

inline bool extend(std::mt19937_64& rng, const fincat::FinitePoset& p, const fincat::FinitePoset& q,
                   std::vector<std::size_t>& graph, std::size_t x) {
  if (x == p.size()) return true;
  std::vector<std::size_t> choices(q.size());
  std::iota(choices.begin(), choices.end(), 0);
  std::shuffle(choices.begin(), choices.end(), rng);
  for (std::size_t v : choices) {
    bool ok = true;
    for (std::size_t y = 0; y < x && ok; ++y) {
      if (p.leq(y, x) && !q.leq(graph[y], v)) ok = false;
      if (p.leq(x, y) && !q.leq(v, graph[y])) ok = false;
    }
    if (!ok) continue;
    graph[x] = v;
    if (extend(rng, p, q, graph, x + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Uniform-ish random monotone map, by randomized backtracking. Constant
/// maps always succeed, so this terminates with a map.
inline fincat::MonotoneMap monotone(std::mt19937_64& rng, const fincat::FinitePoset& p,
                                    const fincat::FinitePoset& q) {
  std::vector<std::size_t> graph(p.size(), 0);
  detail::extend(rng, p, q, graph, 0);
  return fincat::MonotoneMap(p, q, graph);
}

/// Every monotone map p -> q, in lexicographic graph order.
inline std::vector<fincat::MonotoneMap> all_monotone(const fincat::FinitePoset& p,
                                                     const fincat::FinitePoset& q) {
  std::vector<fincat::MonotoneMap> out;
  std::vector<std::size_t> g(p.size(), 0);
  if (p.size() > 0 && q.size() == 0) return out;
  while (true) {
    bool mono = true;
    for (std::size_t a = 0; a < p.size() && mono; ++a) {
      for (std::size_t b = 0; b < p.size() && mono; ++b) {
        if (p.leq(a, b) && !q.leq(g[a], g[b])) mono = false;
      }
    }
    if (mono) out.emplace_back(p, q, g);
    std::size_t i = p.size();
    while (i > 0 && ++g[i - 1] == q.size()) g[--i] = 0;
    if (i == 0) return out;
  }
}

/// x <= g(z) iff f(x) <= z, straight from the definition.
inline bool galois(const fincat::MonotoneMap& f, const fincat::MonotoneMap& g) {
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    for (std::size_t z = 0; z < f.cod().size(); ++z) {
      if (f.dom().leq(x, g(z)) != f.cod().leq(f(x), z)) return false;
    }
  }
  return true;
}

}  // namespace gen
