#include "fincat/builders.hpp"

#include <charconv>
#include <limits>
#include <unordered_set>

namespace fincat {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

// base^exp, saturating at kSaturated.
std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::vector<UniverseRef> share_sets(std::vector<NamedFiniteSet> sets, std::size_t cap) {
  std::vector<UniverseRef> out;
  std::unordered_set<std::string> names;
  for (auto& s : sets) {
    if (s.name.empty()) throw InvalidArgument("set with empty name");
    if (!names.insert(s.name).second) {
      throw InvalidArgument("set name '" + s.name + "' used twice", {s.name});
    }
    if (s.size() > cap) {
      throw EnumerationBudgetExceeded("set '" + s.name + "' has " + std::to_string(s.size()) +
                                          " elements, cap is " + std::to_string(cap),
                                      {s.name});
    }
    out.push_back(std::make_shared<const NamedFiniteSet>(std::move(s)));
  }
  return out;
}

void check_budget(std::size_t total, std::size_t budget, const std::string& what) {
  if (total > budget) {
    throw EnumerationBudgetExceeded(what + " would have more than " + std::to_string(budget) +
                                    " arrows");
  }
}

}  // namespace

std::string function_name(const FiniteFunction& f) {
  std::string out = f.dom->name + "->" + f.cod->name + ":[";
  for (std::size_t i = 0; i < f.graph.size(); ++i) {
    if (i) out += ',';
    out += f.cod->elements[f.graph[i]];
  }
  return out + "]";
}

std::string relation_name(const FiniteRelation& r) {
  std::string out = r.dom->name + "~>" + r.cod->name + ":{";
  bool first = true;
  for (std::size_t x = 0; x < r.dom->size(); ++x) {
    for (std::size_t y = 0; y < r.cod->size(); ++y) {
      if (!r.related(x, y)) continue;
      if (!first) out += ',';
      first = false;
      out += "(" + r.dom->elements[x] + "," + r.cod->elements[y] + ")";
    }
  }
  return out + "}";
}

ArrowId FinSet::arrow_for(const FiniteFunction& f) const {
  return category.arrow(category.arrow_index(ArrowId{function_name(f)})).name;
}

ArrowId FinRel::arrow_for(const FiniteRelation& r) const {
  return category.arrow(category.arrow_index(ArrowId{relation_name(r)})).name;
}

FinSet build_finset(std::vector<NamedFiniteSet> input, std::size_t cap, std::size_t budget) {
  auto sets = share_sets(std::move(input), cap);
  const std::size_t n = sets.size();

  std::size_t total = 0;
  std::vector<std::size_t> offset(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      offset[a * n + b] = total;
      total = saturating_add(total, saturating_pow(sets[b]->size(), sets[a]->size()));
    }
  }
  check_budget(total, budget, "FinSet");

  std::vector<ObjectId> objects;
  for (const auto& s : sets) objects.push_back(ObjectId{s->name});

  std::vector<ArrowSpec> arrows;
  std::vector<FiniteFunction> functions;
  std::vector<std::size_t> arrow_dom, arrow_cod;
  arrows.reserve(total);
  functions.reserve(total);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t nx = sets[a]->size();
      const std::size_t ny = sets[b]->size();
      const std::size_t count = saturating_pow(ny, nx);
      // Lexicographic: the first element's image is the most significant digit.
      std::vector<std::size_t> graph(nx, 0);
      for (std::size_t code = 0; code < count; ++code) {
        std::size_t rest = code;
        for (std::size_t i = nx; i-- > 0;) {
          graph[i] = rest % ny;
          rest /= ny;
        }
        FiniteFunction f(sets[a], sets[b], graph);
        arrows.push_back({ArrowId{function_name(f)}, objects[a], objects[b]});
        functions.push_back(std::move(f));
        arrow_dom.push_back(a);
        arrow_cod.push_back(b);
      }
    }
  }

  auto code_of = [&](const std::vector<std::size_t>& graph, std::size_t ny) {
    std::size_t code = 0;
    for (std::size_t v : graph) code = code * ny + v;
    return code;
  };

  std::vector<std::size_t> identities;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> graph(sets[a]->size());
    for (std::size_t i = 0; i < graph.size(); ++i) graph[i] = i;
    identities.push_back(offset[a * n + a] + code_of(graph, sets[a]->size()));
  }

  std::vector<std::size_t> scratch;
  auto category = FiniteCategory::generate(
      objects, arrows, identities, [&](std::size_t g, std::size_t f) {
        const auto& ff = functions[f];
        const auto& gg = functions[g];
        scratch.resize(ff.graph.size());
        for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = gg(ff(i));
        const std::size_t b = arrow_cod[g];
        return offset[arrow_dom[f] * n + b] + code_of(scratch, sets[b]->size());
      });
  return FinSet{std::move(category), std::move(sets), std::move(functions)};
}

FinRel build_finrel(std::vector<NamedFiniteSet> input, std::size_t cap, std::size_t budget) {
  auto sets = share_sets(std::move(input), cap);
  const std::size_t n = sets.size();

  std::size_t total = 0;
  std::vector<std::size_t> offset(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      offset[a * n + b] = total;
      total = saturating_add(total, saturating_pow(2, sets[a]->size() * sets[b]->size()));
    }
  }
  check_budget(total, budget, "FinRel");

  std::vector<ObjectId> objects;
  for (const auto& s : sets) objects.push_back(ObjectId{s->name});

  std::vector<ArrowSpec> arrows;
  std::vector<FiniteRelation> relations;
  std::vector<std::size_t> arrow_dom;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t cells = sets[a]->size() * sets[b]->size();
      const std::size_t count = saturating_pow(2, cells);
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<bool> table(cells);
        for (std::size_t k = 0; k < cells; ++k) table[k] = (code >> k) & 1U;
        FiniteRelation r(sets[a], sets[b], std::move(table));
        arrows.push_back({ArrowId{relation_name(r)}, objects[a], objects[b]});
        relations.push_back(std::move(r));
        arrow_dom.push_back(a);
      }
    }
  }

  auto code_of = [](const std::vector<bool>& table) {
    std::size_t code = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k]) code |= std::size_t{1} << k;
    }
    return code;
  };

  std::vector<std::size_t> identities;
  for (std::size_t a = 0; a < n; ++a) {
    identities.push_back(offset[a * n + a] + code_of(FiniteRelation::diagonal(sets[a]).pairs));
  }

  std::vector<std::size_t> cod_index(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      if (relations[i].cod == sets[b]) cod_index[i] = b;
    }
  }

  auto category = FiniteCategory::generate(
      objects, arrows, identities, [&](std::size_t g, std::size_t f) {
        const FiniteRelation composite = relational_composite(relations[f], relations[g]);
        return offset[arrow_dom[f] * n + cod_index[g]] + code_of(composite.pairs);
      });
  return FinRel{std::move(category), std::move(sets), std::move(relations)};
}

std::string order_arrow_name(const std::string& a, const std::string& b) { return a + "<=" + b; }

FiniteCategory poset_as_category(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<ObjectId> objects;
  for (const auto& e : p.elements()) objects.push_back(ObjectId{e});
  std::vector<ArrowSpec> arrows;
  std::vector<std::size_t> arrow_at(n * n, kSaturated);
  std::vector<std::size_t> source;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      arrow_at[a * n + b] = arrows.size();
      arrows.push_back({ArrowId{order_arrow_name(p.label(a), p.label(b))}, objects[a], objects[b]});
      source.push_back(a);
    }
  }
  std::vector<std::size_t> identities;
  for (std::size_t a = 0; a < n; ++a) identities.push_back(arrow_at[a * n + a]);
  std::vector<std::size_t> target(arrows.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (arrow_at[a * n + b] != kSaturated) target[arrow_at[a * n + b]] = b;
    }
  }
  return FiniteCategory::generate(std::move(objects), std::move(arrows), std::move(identities),
                                  [&](std::size_t g, std::size_t f) {
                                    return arrow_at[source[f] * n + target[g]];
                                  });
}

FinitePoset category_to_poset(const FiniteCategory& c) {
  const std::size_t n = c.object_count();
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back(c.object(i).name);
  std::vector<bool> table(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& hom = c.hom_at(a, b);
      if (hom.size() > 1) {
        throw InvalidPoset("category is not thin: hom(" + elements[a] + ", " + elements[b] +
                               ") has " + std::to_string(hom.size()) + " arrows",
                           {elements[a], elements[b]});
      }
      table[a * n + b] = !hom.empty();
    }
  }
  return FinitePoset::from_table(std::move(elements), std::move(table));
}

FiniteMonoid::FiniteMonoid(std::vector<std::string> elements, std::vector<std::size_t> table,
                           std::size_t unit)
    : elements_(std::move(elements)), table_(std::move(table)), unit_(unit) {
  const std::size_t n = elements_.size();
  std::unordered_set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e).second) throw InvalidMonoid("element '" + e + "' listed twice", {e});
  }
  if (n == 0) throw InvalidMonoid("a monoid needs at least its unit");
  if (table_.size() != n * n) throw InvalidMonoid("multiplication table has the wrong size");
  if (unit_ >= n) throw InvalidMonoid("unit is not an element");
  for (std::size_t v : table_) {
    if (v >= n) throw InvalidMonoid("multiplication table leaves the carrier");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (multiply(unit_, a) != a || multiply(a, unit_) != a) {
      throw InvalidMonoid("unit law fails at " + elements_[a], {elements_[unit_], elements_[a]});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw InvalidMonoid("associativity fails at (" + elements_[a] + ", " + elements_[b] + ", " +
                                  elements_[c] + ")",
                              {elements_[a], elements_[b], elements_[c]});
        }
      }
    }
  }
}

FiniteMonoid FiniteMonoid::cyclic(std::size_t n) {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back(std::to_string(i));
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return FiniteMonoid(std::move(elements), std::move(table), 0);
}

std::size_t FiniteMonoid::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == label) return i;
  }
  throw UnknownElement("'" + label + "' is not a monoid element", {label});
}

FiniteCategory monoid_as_category(const FiniteMonoid& m) {
  std::vector<ArrowSpec> arrows;
  for (const auto& e : m.elements()) arrows.push_back({ArrowId{e}, kMonoidObject, kMonoidObject});
  return FiniteCategory::generate({kMonoidObject}, std::move(arrows), {m.unit()},
                                  [&](std::size_t g, std::size_t f) { return m.multiply(g, f); });
}

FiniteMonoid category_to_monoid(const FiniteCategory& c) {
  if (c.object_count() != 1) {
    throw InvalidMonoid("a monoid is a one-object category; this one has " +
                        std::to_string(c.object_count()) + " objects");
  }
  const std::size_t n = c.arrow_count();
  std::vector<std::string> elements;
  for (const auto& a : c.arrows()) elements.push_back(a.name.name);
  std::vector<std::size_t> table(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) table[g * n + f] = c.compose_at(g, f);
  }
  return FiniteMonoid(std::move(elements), std::move(table), c.identity_at(0));
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

MatrixOverZp MatrixOverZp::identity(unsigned p, std::size_t n) {
  MatrixOverZp m{p, n, n, std::vector<unsigned>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = 1 % p;
  return m;
}

MatrixOverZp multiply(const MatrixOverZp& lhs, const MatrixOverZp& rhs) {
  if (lhs.cols != rhs.rows || lhs.p != rhs.p) {
    throw InvalidArgument("matrix dimensions do not compose");
  }
  MatrixOverZp out{lhs.p, lhs.rows, rhs.cols, std::vector<unsigned>(lhs.rows * rhs.cols, 0)};
  for (std::size_t i = 0; i < lhs.rows; ++i) {
    for (std::size_t j = 0; j < rhs.cols; ++j) {
      unsigned long long acc = 0;
      for (std::size_t k = 0; k < lhs.cols; ++k) acc += 1ULL * lhs.at(i, k) * rhs.at(k, j);
      out.entries[i * rhs.cols + j] = static_cast<unsigned>(acc % lhs.p);
    }
  }
  return out;
}

MatrixCategory::MatrixCategory(unsigned p, std::size_t max_dim, std::size_t budget)
    : p_(p), max_dim_(max_dim), budget_(budget) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (saturating_pow(p, max_dim * max_dim) > budget) {
    throw EnumerationBudgetExceeded("Mat over Z_" + std::to_string(p) + " up to dimension " +
                                    std::to_string(max_dim) + " exceeds the arrow budget");
  }
}

ArrowId MatrixCategory::encode(const MatrixOverZp& m) {
  std::string out = std::to_string(m.rows) + "x" + std::to_string(m.cols) + "[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += std::to_string(m.at(r, c));
    }
  }
  return ArrowId{out + "]"};
}

MatrixOverZp MatrixCategory::decode(const ArrowId& f) const {
  const std::string& s = f.name;
  auto fail = [&]() -> MatrixOverZp {
    throw UnknownArrow("'" + s + "' is not an arrow of Mat over Z_" + std::to_string(p_), {s});
  };
  const auto x = s.find('x');
  const auto open = s.find('[');
  if (x == std::string::npos || open == std::string::npos || open < x || s.back() != ']') return fail();
  std::size_t rows = 0, cols = 0;
  auto parse_size = [](std::string_view text, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
  };
  if (!parse_size(std::string_view(s).substr(0, x), rows) ||
      !parse_size(std::string_view(s).substr(x + 1, open - x - 1), cols)) {
    return fail();
  }
  if (rows > max_dim_ || cols > max_dim_) return fail();
  MatrixOverZp m{p_, rows, cols, {}};
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  std::size_t start = 0;
  // Empty matrices carry only separators; encode() below pins their form.
  if (rows * cols == 0) start = body.size();
  while (start < body.size()) {
    std::size_t end = body.find_first_of(",;", start);
    if (end == std::string::npos) end = body.size();
    unsigned v = 0;
    auto token = std::string_view(body).substr(start, end - start);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() || v >= p_) {
      return fail();
    }
    m.entries.push_back(v);
    start = end + 1;
  }
  if (m.entries.size() != rows * cols || encode(m) != f) return fail();
  return m;
}

std::size_t MatrixCategory::dimension(const ObjectId& a) const {
  std::size_t d = 0;
  auto [ptr, ec] = std::from_chars(a.name.data(), a.name.data() + a.name.size(), d);
  if (ec != std::errc() || ptr != a.name.data() + a.name.size() || a.name.empty() || d > max_dim_ ||
      std::to_string(d) != a.name) {
    throw UnknownObject("'" + a.name + "' is not an object of Mat", {a.name});
  }
  return d;
}

std::vector<ObjectId> MatrixCategory::objects() const {
  std::vector<ObjectId> out;
  for (std::size_t d = 0; d <= max_dim_; ++d) out.push_back(ObjectId{std::to_string(d)});
  return out;
}

std::size_t MatrixCategory::hom_size(const ObjectId& a, const ObjectId& b) const {
  return saturating_pow(p_, dimension(a) * dimension(b));
}

std::vector<ArrowId> MatrixCategory::hom(const ObjectId& a, const ObjectId& b) const {
  const std::size_t n = dimension(a);
  const std::size_t m = dimension(b);
  const std::size_t count = hom_size(a, b);
  check_budget(count, budget_, "hom(" + a.name + ", " + b.name + ")");
  std::vector<ArrowId> out;
  out.reserve(count);
  MatrixOverZp mat{p_, n, m, std::vector<unsigned>(n * m, 0)};
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t rest = code;
    for (std::size_t k = n * m; k-- > 0;) {
      mat.entries[k] = static_cast<unsigned>(rest % p_);
      rest /= p_;
    }
    out.push_back(encode(mat));
  }
  return out;
}

bool MatrixCategory::contains(const ArrowId& f) const {
  try {
    decode(f);
    return true;
  } catch (const UnknownArrow&) {
    return false;
  }
}

ObjectId MatrixCategory::dom(const ArrowId& f) const { return ObjectId{std::to_string(decode(f).rows)}; }

ObjectId MatrixCategory::cod(const ArrowId& f) const { return ObjectId{std::to_string(decode(f).cols)}; }

ArrowId MatrixCategory::compose(const ArrowId& after, const ArrowId& then) const {
  const MatrixOverZp first = decode(then);
  const MatrixOverZp second = decode(after);
  if (first.cols != second.rows) {
    throw InvalidArgument("arrows (" + after.name + ", " + then.name + ") are not composable",
                          {after.name, then.name});
  }
  return encode(multiply(first, second));
}

ArrowId MatrixCategory::identity(const ObjectId& a) const {
  return encode(MatrixOverZp::identity(p_, dimension(a)));
}

}  // namespace fincat
