#pragma once

// Independent, deliberately naive reference implementations used by the
// tests. Nothing here calls into the library's deciders.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline bool injective(const std::vector<std::size_t>& graph) {
  std::set<std::size_t> seen(graph.begin(), graph.end());
  return seen.size() == graph.size();
}

inline bool surjective(const std::vector<std::size_t>& graph, std::size_t cod_size) {
  std::set<std::size_t> seen(graph.begin(), graph.end());
  return seen.size() == cod_size;
}

/// Every function [0,m) → [0,n) as an image list.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(m, 0);
  if (m > 0 && n == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++cur[i] < n) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

inline long floor_of(long num, long den) {
  return static_cast<long>(std::floor(static_cast<double>(num) / static_cast<double>(den)));
}
inline long ceil_of(long num, long den) {
  return static_cast<long>(std::ceil(static_cast<double>(num) / static_cast<double>(den)));
}

inline unsigned det2_mod(unsigned a, unsigned b, unsigned c, unsigned d, unsigned p) {
  return ((a * d) % p + p - (b * c) % p) % p;
}

using Set = std::set<std::string>;

inline Set image(const std::map<std::string, std::string>& f, const Set& s) {
  Set out;
  for (const auto& x : s) out.insert(f.at(x));
  return out;
}

inline Set preimage(const std::map<std::string, std::string>& f, const Set& t) {
  Set out;
  for (const auto& [x, y] : f) {
    if (t.count(y)) out.insert(x);
  }
  return out;
}

inline Set forall_image(const std::map<std::string, std::string>& f, const Set& s,
                        const Set& cod) {
  Set out;
  for (const auto& y : cod) {
    bool all = true;
    for (const auto& [x, fx] : f) {
      if (fx == y && !s.count(x)) all = false;
    }
    if (all) out.insert(y);
  }
  return out;
}

inline bool includes(const Set& a, const Set& b) {  // b ⊆ a
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

/// First-order formulas evaluated by substitution over an explicit
/// assignment map; independent of the library's tuple encoding.
struct Term {
  enum Kind { Atom, Not, And, Or, Imp, All, Ex, Top, Bot } kind;
  std::string rel;
  std::vector<int> vars;
  int bound = 0;
  std::vector<Term> kids;
};

struct Model {
  std::vector<std::string> carrier;
  std::map<std::string, std::set<std::vector<std::string>>> rels;
};

inline bool sat(const Model& m, const Term& t, std::map<int, std::string>& s) {
  switch (t.kind) {
    case Term::Top: return true;
    case Term::Bot: return false;
    case Term::Atom: {
      std::vector<std::string> tuple;
      for (int v : t.vars) tuple.push_back(s.at(v));
      return m.rels.at(t.rel).count(tuple) > 0;
    }
    case Term::Not: return !sat(m, t.kids[0], s);
    case Term::And: return sat(m, t.kids[0], s) && sat(m, t.kids[1], s);
    case Term::Or: return sat(m, t.kids[0], s) || sat(m, t.kids[1], s);
    case Term::Imp: return !sat(m, t.kids[0], s) || sat(m, t.kids[1], s);
    case Term::All:
    case Term::Ex: {
      const bool all = t.kind == Term::All;
      auto saved = s.find(t.bound) == s.end() ? std::optional<std::string>() : s[t.bound];
      bool result = all;
      for (const auto& a : m.carrier) {
        s[t.bound] = a;
        if (sat(m, t.kids[0], s) != all) {
          result = !all;
          break;
        }
      }
      if (saved) s[t.bound] = *saved; else s.erase(t.bound);
      return result;
    }
  }
  return false;
}

/// All assignments v1..vn (lexicographic, first variable slowest) satisfying t.
inline std::vector<std::vector<std::string>> denotation(const Model& m, const Term& t, int n) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::size_t> idx(n, 0);
  const std::size_t a = m.carrier.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= a;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<std::string> tuple(n);
    for (int i = n - 1; i >= 0; --i) {
      tuple[i] = m.carrier[c % a];
      c /= a;
    }
    std::map<int, std::string> s;
    for (int i = 0; i < n; ++i) s[i + 1] = tuple[i];
    if (sat(m, t, s)) out.push_back(tuple);
  }
  return out;
}

}  // namespace oracle
