#include "fincat/logic.hpp"

#include <functional>

namespace fincat {

namespace {

void require_same(const UniverseRef& a, const UniverseRef& b, const char* what) {
  if (!same_universe(a, b)) {
    throw UniverseMismatch(std::string(what) + ": universes '" + a->name + "' and '" + b->name +
                           "' differ");
  }
}

void require_cap(const UniverseRef& u, std::size_t cap) {
  if (u->size() > cap || u->size() >= 32) {
    throw EnumerationBudgetExceeded("universe '" + u->name + "' has " + std::to_string(u->size()) +
                                    " elements, over the cap of " + std::to_string(cap));
  }
}

std::uint64_t subset_count(const UniverseRef& u) { return std::uint64_t{1} << u->size(); }

}  // namespace

// ---- SubsetOf ---------------------------------------------------------------

SubsetOf::SubsetOf(UniverseRef universe, std::vector<bool> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (!universe_) throw InvalidArgument("subset needs a universe");
  if (members_.size() != universe_->size()) {
    throw InvalidArgument("membership vector does not match universe '" + universe_->name + "'");
  }
}

SubsetOf SubsetOf::empty(UniverseRef u) {
  const std::size_t n = u->size();
  return SubsetOf(std::move(u), std::vector<bool>(n, false));
}

SubsetOf SubsetOf::full(UniverseRef u) {
  const std::size_t n = u->size();
  return SubsetOf(std::move(u), std::vector<bool>(n, true));
}

SubsetOf SubsetOf::of(UniverseRef u, const std::vector<std::string>& labels) {
  std::vector<bool> members(u->size(), false);
  for (const auto& l : labels) members[u->index_of(l)] = true;
  return SubsetOf(std::move(u), std::move(members));
}

SubsetOf SubsetOf::from_mask(UniverseRef u, std::uint64_t mask) {
  if (u->size() > 64) throw InvalidArgument("universe too large for a bitmask");
  std::vector<bool> members(u->size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = (mask >> i) & 1U;
  return SubsetOf(std::move(u), std::move(members));
}

std::size_t SubsetOf::count() const {
  std::size_t c = 0;
  for (bool b : members_) c += b;
  return c;
}

std::vector<std::string> SubsetOf::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(universe_->elements[i]);
  }
  return out;
}

std::string SubsetOf::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels()) {
    if (!first) out += ',';
    first = false;
    out += l;
  }
  return out + "}";
}

bool SubsetOf::subset_of(const SubsetOf& other) const {
  require_same(universe_, other.universe_, "inclusion");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

SubsetOf SubsetOf::complement() const {
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = !members_[i];
  return SubsetOf(universe_, std::move(m));
}

SubsetOf SubsetOf::intersect(const SubsetOf& other) const {
  require_same(universe_, other.universe_, "intersection");
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] && other.members_[i];
  return SubsetOf(universe_, std::move(m));
}

SubsetOf SubsetOf::unite(const SubsetOf& other) const {
  require_same(universe_, other.universe_, "union");
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] || other.members_[i];
  return SubsetOf(universe_, std::move(m));
}

bool SubsetOf::operator==(const SubsetOf& other) const {
  return members_ == other.members_ && same_universe(universe_, other.universe_);
}

// ---- images along functions -------------------------------------------------

SubsetOf direct_image(const FiniteFunction& f, const SubsetOf& s) {
  require_same(f.dom, s.universe(), "direct image");
  std::vector<bool> out(f.cod->size(), false);
  for (std::size_t x = 0; x < f.dom->size(); ++x) {
    if (s.contains(x)) out[f(x)] = true;
  }
  return SubsetOf(f.cod, std::move(out));
}

SubsetOf inverse_image(const FiniteFunction& f, const SubsetOf& t) {
  require_same(f.cod, t.universe(), "inverse image");
  std::vector<bool> out(f.dom->size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = t.contains(f(x));
  return SubsetOf(f.dom, std::move(out));
}

SubsetOf universal_image(const FiniteFunction& f, const SubsetOf& s) {
  require_same(f.dom, s.universe(), "universal image");
  std::vector<bool> out(f.cod->size(), true);
  for (std::size_t x = 0; x < f.dom->size(); ++x) {
    if (!s.contains(x)) out[f(x)] = false;
  }
  return SubsetOf(f.cod, std::move(out));
}

AdjunctionCheck check_quantifier_adjunctions(const FiniteFunction& f, std::size_t cap) {
  require_cap(f.dom, cap);
  require_cap(f.cod, cap);
  AdjunctionCheck report;
  for (std::uint64_t sm = 0; sm < subset_count(f.dom); ++sm) {
    const SubsetOf s = SubsetOf::from_mask(f.dom, sm);
    const SubsetOf ex = direct_image(f, s);
    const SubsetOf all = universal_image(f, s);
    for (std::uint64_t tm = 0; tm < subset_count(f.cod); ++tm) {
      const SubsetOf t = SubsetOf::from_mask(f.cod, tm);
      const SubsetOf pre = inverse_image(f, t);
      ++report.instances;
      if (ex.subset_of(t) != s.subset_of(pre)) {
        report.violations.push_back({"exists -| inverse image", s.to_string(), t.to_string()});
      }
      if (pre.subset_of(s) != t.subset_of(all)) {
        report.violations.push_back({"inverse image -| forall", s.to_string(), t.to_string()});
      }
    }
  }
  return report;
}

// ---- relations --------------------------------------------------------------

SubsetOf box(const FiniteRelation& r, const SubsetOf& t) {
  require_same(r.cod, t.universe(), "box");
  std::vector<bool> out(r.dom->size(), true);
  for (std::size_t x = 0; x < r.dom->size(); ++x) {
    for (std::size_t y = 0; y < r.cod->size(); ++y) {
      if (r.related(x, y) && !t.contains(y)) {
        out[x] = false;
        break;
      }
    }
  }
  return SubsetOf(r.dom, std::move(out));
}

SubsetOf relation_post_image(const FiniteRelation& r, const SubsetOf& s) {
  require_same(r.dom, s.universe(), "post-image");
  std::vector<bool> out(r.cod->size(), false);
  for (std::size_t x = 0; x < r.dom->size(); ++x) {
    if (!s.contains(x)) continue;
    for (std::size_t y = 0; y < r.cod->size(); ++y) {
      if (r.related(x, y)) out[y] = true;
    }
  }
  return SubsetOf(r.cod, std::move(out));
}

AdjunctionCheck check_box_adjunction(const FiniteRelation& r, std::size_t cap) {
  require_cap(r.dom, cap);
  require_cap(r.cod, cap);
  AdjunctionCheck report;
  std::vector<SubsetOf> boxes;
  for (std::uint64_t tm = 0; tm < subset_count(r.cod); ++tm) {
    boxes.push_back(box(r, SubsetOf::from_mask(r.cod, tm)));
  }
  for (std::uint64_t sm = 0; sm < subset_count(r.dom); ++sm) {
    const SubsetOf s = SubsetOf::from_mask(r.dom, sm);
    const SubsetOf post = relation_post_image(r, s);
    for (std::uint64_t tm = 0; tm < subset_count(r.cod); ++tm) {
      const SubsetOf t = SubsetOf::from_mask(r.cod, tm);
      ++report.instances;
      if (post.subset_of(t) != s.subset_of(boxes[tm])) {
        report.violations.push_back({"post-image -| box", s.to_string(), t.to_string()});
      }
    }
  }
  return report;
}

FinitePoset powerset_poset(const UniverseRef& u) {
  require_cap(u, 16);
  const std::uint64_t n = subset_count(u);
  std::vector<std::string> labels;
  for (std::uint64_t m = 0; m < n; ++m) labels.push_back(SubsetOf::from_mask(u, m).to_string());
  std::vector<bool> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) table[a * n + b] = (a & ~b) == 0;
  }
  return FinitePoset::from_table(std::move(labels), std::move(table));
}

MonotoneMap subset_operator_map(const UniverseRef& from, const UniverseRef& to,
                                const std::function<SubsetOf(const SubsetOf&)>& op) {
  std::vector<std::size_t> graph;
  for (std::uint64_t m = 0; m < subset_count(from); ++m) {
    const SubsetOf image = op(SubsetOf::from_mask(from, m));
    require_same(image.universe(), to, "subset operator");
    std::size_t code = 0;
    for (std::size_t i = 0; i < to->size(); ++i) {
      if (image.contains(i)) code |= std::size_t{1} << i;
    }
    graph.push_back(code);
  }
  return MonotoneMap(powerset_poset(from), powerset_poset(to), std::move(graph));
}

// ---- modal ------------------------------------------------------------------

KripkeFrame::KripkeFrame(UniverseRef worlds_, FiniteRelation access_,
                         std::map<std::string, SubsetOf> valuation_)
    : worlds(std::move(worlds_)), access(std::move(access_)), valuation(std::move(valuation_)) {
  require_same(worlds, access.dom, "frame access relation");
  require_same(worlds, access.cod, "frame access relation");
  for (const auto& [atom, s] : valuation) require_same(worlds, s.universe(), "valuation");
}

SubsetOf eval_modal(const KripkeFrame& frame, const Formula& phi) {
  using K = Formula::Kind;
  auto sub = [&](std::size_t i) { return eval_modal(frame, *phi.children[i]); };
  switch (phi.kind) {
    case K::True: return SubsetOf::full(frame.worlds);
    case K::False: return SubsetOf::empty(frame.worlds);
    case K::Atom: {
      if (phi.applied) throw InvalidArgument("'" + phi.name + "(...)' is not a modal atom");
      auto it = frame.valuation.find(phi.name);
      if (it == frame.valuation.end()) {
        throw UnknownAtom("atom '" + phi.name + "' has no valuation", {phi.name});
      }
      return it->second;
    }
    case K::Not: return sub(0).complement();
    case K::And: return sub(0).intersect(sub(1));
    case K::Or: return sub(0).unite(sub(1));
    case K::Implies: return boolean_implication(sub(0), sub(1));
    case K::Box: return box(frame.access, sub(0));
    case K::Diamond: return box(frame.access, sub(0).complement()).complement();
    case K::Forall:
    case K::Exists: break;
  }
  throw InvalidArgument("quantifiers are not modal");
}

// ---- implication ------------------------------------------------------------

SubsetOf boolean_implication(const SubsetOf& x, const SubsetOf& y) {
  return x.complement().unite(y);
}

AdjunctionCheck check_implication_adjunction(const UniverseRef& u, std::size_t cap) {
  require_cap(u, cap);
  AdjunctionCheck report;
  const std::uint64_t n = subset_count(u);
  std::vector<SubsetOf> all;
  for (std::uint64_t m = 0; m < n; ++m) all.push_back(SubsetOf::from_mask(u, m));
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        ++report.instances;
        if (x.intersect(y).subset_of(z) != x.subset_of(boolean_implication(y, z))) {
          report.violations.push_back(
              {"meet -| implication", x.to_string(), y.to_string(), z.to_string()});
        }
      }
    }
  }
  return report;
}

DownSetLattice::DownSetLattice(FinitePoset p) : poset_(std::move(p)) {
  universe_ = make_universe("P", poset_.elements());
  require_cap(universe_, 16);
  for (std::uint64_t m = 0; m < subset_count(universe_); ++m) {
    SubsetOf s = SubsetOf::from_mask(universe_, m);
    if (is_down_closed(s)) down_sets_.push_back(std::move(s));
  }
}

bool DownSetLattice::is_down_closed(const SubsetOf& s) const {
  require_same(universe_, s.universe(), "down-set");
  for (std::size_t b = 0; b < poset_.size(); ++b) {
    if (!s.contains(b)) continue;
    for (std::size_t a = 0; a < poset_.size(); ++a) {
      if (poset_.leq(a, b) && !s.contains(a)) return false;
    }
  }
  return true;
}

SubsetOf DownSetLattice::down_set(const std::vector<std::string>& labels) const {
  SubsetOf s = SubsetOf::of(universe_, labels);
  if (!is_down_closed(s)) throw NotDownClosed(s.to_string() + " is not down-closed", labels);
  return s;
}

SubsetOf heyting_implication(const DownSetLattice& l, const SubsetOf& x, const SubsetOf& y) {
  for (const SubsetOf* s : {&x, &y}) {
    if (!l.is_down_closed(*s)) {
      throw NotDownClosed(s->to_string() + " is not down-closed", s->labels());
    }
  }
  std::vector<const SubsetOf*> candidates;
  for (const auto& z : l.elements()) {
    if (z.intersect(x).subset_of(y)) candidates.push_back(&z);
  }
  for (const SubsetOf* z : candidates) {
    bool largest = true;
    for (const SubsetOf* w : candidates) {
      if (!w->subset_of(*z)) {
        largest = false;
        break;
      }
    }
    if (largest) return *z;
  }
  throw InternalInconsistency("no largest down-set below the implication bound");
}

AdjunctionCheck check_heyting_adjunction(const DownSetLattice& l) {
  AdjunctionCheck report;
  for (const auto& x : l.elements()) {
    for (const auto& y : l.elements()) {
      const SubsetOf imp = heyting_implication(l, x, y);
      for (const auto& z : l.elements()) {
        ++report.instances;
        if (z.intersect(x).subset_of(y) != z.subset_of(imp)) {
          report.violations.push_back(
              {"meet -| heyting implication", z.to_string(), x.to_string(), y.to_string()});
        }
      }
    }
  }
  return report;
}

// ---- first-order structures -------------------------------------------------

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > budget / base) {
      throw EnumerationBudgetExceeded(std::to_string(base) + "^" + std::to_string(exp) +
                                      " tuples exceed the budget of " + std::to_string(budget));
    }
    out *= base;
  }
  if (out > budget) {
    throw EnumerationBudgetExceeded(std::to_string(out) + " tuples exceed the budget of " +
                                    std::to_string(budget));
  }
  return out;
}

std::size_t encode(const std::vector<std::size_t>& tuple, std::size_t base) {
  std::size_t code = 0;
  for (std::size_t v : tuple) code = code * base + v;
  return code;
}

}  // namespace

FOStructure::FOStructure(UniverseRef carrier_, std::map<std::string, FORelation> relations_)
    : carrier(std::move(carrier_)), relations(std::move(relations_)) {
  const std::size_t a = carrier->size();
  for (const auto& [name, rel] : relations) {
    std::vector<bool> table(checked_power(a, rel.arity, kDefaultArrowBudget), false);
    for (const auto& t : rel.tuples) {
      if (t.size() != rel.arity) {
        throw InvalidArgument("relation '" + name + "' has arity " + std::to_string(rel.arity) +
                              " but lists a tuple of length " + std::to_string(t.size()),
                              {name});
      }
      for (std::size_t v : t) {
        if (v >= a) throw InvalidArgument("relation '" + name + "' leaves the carrier", {name});
      }
      table[encode(t, a)] = true;
    }
    tables_.emplace(name, std::move(table));
  }
}

bool FOStructure::holds(const std::string& relation, const std::vector<std::size_t>& args) const {
  auto it = relations.find(relation);
  if (it == relations.end()) {
    throw UnknownAtom("relation '" + relation + "' is not in the structure", {relation});
  }
  if (args.size() != it->second.arity) {
    throw InvalidArgument("relation '" + relation + "' has arity " +
                              std::to_string(it->second.arity) + ", applied to " +
                              std::to_string(args.size()) + " arguments",
                          {relation});
  }
  return tables_.at(relation)[encode(args, carrier->size())];
}

std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t carrier_size, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = n; i-- > 0;) {
    out[i] = code % carrier_size;
    code /= carrier_size;
  }
  return out;
}

UniverseRef tuple_universe(const UniverseRef& carrier, std::size_t n, std::size_t budget) {
  const std::size_t a = carrier->size();
  const std::size_t count = checked_power(a, n, budget);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::string l = "(";
    const auto t = decode_tuple(code, a, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) l += ',';
      l += carrier->elements[t[i]];
    }
    labels.push_back(l + ")");
  }
  return make_universe(carrier->name + "^" + std::to_string(n), std::move(labels));
}

std::vector<std::vector<std::string>> AssignmentSet::listed() const {
  std::vector<std::vector<std::string>> out;
  const auto& u = *tuples.universe();
  for (std::size_t code = 0; code < u.size(); ++code) {
    if (!tuples.contains(code)) continue;
    // Labels are "(a,b)"; split back into coordinates.
    const std::string& l = u.elements[code];
    std::vector<std::string> row;
    if (context > 0) {
      std::string cur;
      for (std::size_t i = 1; i + 1 < l.size(); ++i) {
        if (l[i] == ',') {
          row.push_back(cur);
          cur.clear();
        } else {
          cur += l[i];
        }
      }
      row.push_back(cur);
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Context discipline shared by both routes, checked before any evaluation.
void check_context(const Formula& phi, std::size_t n) {
  using K = Formula::Kind;
  switch (phi.kind) {
    case K::True:
    case K::False: return;
    case K::Atom:
      if (!phi.applied) {
        throw InvalidArgument("'" + phi.name + "' is not a first-order atom; write " + phi.name +
                              "(...)");
      }
      for (std::size_t k : phi.args) {
        if (k == 0 || k > n) {
          throw ContextOverflow("v" + std::to_string(k) + " is outside the context v1..v" +
                                    std::to_string(n),
                                {"v" + std::to_string(k)});
        }
      }
      return;
    case K::Box:
    case K::Diamond: throw InvalidArgument("modal operators are not first-order");
    case K::Forall:
    case K::Exists:
      if (phi.variable != n + 1) {
        throw ContextMismatch("a quantifier in context v1..v" + std::to_string(n) +
                                  " must bind v" + std::to_string(n + 1) + ", not v" +
                                  std::to_string(phi.variable),
                              {"v" + std::to_string(phi.variable)});
      }
      check_context(*phi.children[0], n + 1);
      return;
    default:
      for (const auto& c : phi.children) check_context(*c, n);
  }
}

bool satisfies(const FOStructure& m, const Formula& phi, std::vector<std::size_t>& s) {
  using K = Formula::Kind;
  switch (phi.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: {
      std::vector<std::size_t> args;
      for (std::size_t k : phi.args) args.push_back(s[k - 1]);
      return m.holds(phi.name, args);
    }
    case K::Not: return !satisfies(m, *phi.children[0], s);
    case K::And: return satisfies(m, *phi.children[0], s) && satisfies(m, *phi.children[1], s);
    case K::Or: return satisfies(m, *phi.children[0], s) || satisfies(m, *phi.children[1], s);
    case K::Implies:
      return !satisfies(m, *phi.children[0], s) || satisfies(m, *phi.children[1], s);
    case K::Forall:
    case K::Exists: {
      const bool universal = phi.kind == K::Forall;
      bool result = universal;
      s.push_back(0);
      for (std::size_t a = 0; a < m.carrier->size(); ++a) {
        s.back() = a;
        if (satisfies(m, *phi.children[0], s) != universal) {
          result = !universal;
          break;
        }
      }
      s.pop_back();
      return result;
    }
    case K::Box:
    case K::Diamond: break;
  }
  throw InvalidArgument("modal operators are not first-order");
}

class AdjointRoute {
 public:
  AdjointRoute(const FOStructure& m, std::size_t budget) : m_(m), budget_(budget) {}

  const UniverseRef& level(std::size_t n) {
    while (levels_.size() <= n) levels_.push_back(tuple_universe(m_.carrier, levels_.size(), budget_));
    return levels_[n];
  }

  const FiniteFunction& projection(std::size_t n) {
    while (projections_.size() <= n) {
      const std::size_t k = projections_.size();
      const UniverseRef& upper = level(k + 1);
      std::vector<std::size_t> graph(upper->size());
      for (std::size_t code = 0; code < graph.size(); ++code) graph[code] = code / m_.carrier->size();
      projections_.emplace_back(upper, level(k), std::move(graph));
    }
    return projections_[n];
  }

  SubsetOf denote(const Formula& phi, std::size_t n) {
    using K = Formula::Kind;
    switch (phi.kind) {
      case K::True: return SubsetOf::full(level(n));
      case K::False: return SubsetOf::empty(level(n));
      case K::Atom: {
        const UniverseRef& u = level(n);
        std::vector<bool> members(u->size());
        for (std::size_t code = 0; code < u->size(); ++code) {
          const auto s = decode_tuple(code, m_.carrier->size(), n);
          std::vector<std::size_t> args;
          for (std::size_t k : phi.args) args.push_back(s[k - 1]);
          members[code] = m_.holds(phi.name, args);
        }
        return SubsetOf(u, std::move(members));
      }
      case K::Not: return denote(*phi.children[0], n).complement();
      case K::And: return denote(*phi.children[0], n).intersect(denote(*phi.children[1], n));
      case K::Or: return denote(*phi.children[0], n).unite(denote(*phi.children[1], n));
      case K::Implies:
        return boolean_implication(denote(*phi.children[0], n), denote(*phi.children[1], n));
      case K::Forall: return universal_image(projection(n), denote(*phi.children[0], n + 1));
      case K::Exists: return direct_image(projection(n), denote(*phi.children[0], n + 1));
      case K::Box:
      case K::Diamond: break;
    }
    throw InvalidArgument("modal operators are not first-order");
  }

 private:
  const FOStructure& m_;
  std::size_t budget_;
  std::vector<UniverseRef> levels_;
  std::vector<FiniteFunction> projections_;
};

}  // namespace

AssignmentSet direct_denotation(const FOStructure& m, const Formula& phi, std::size_t n,
                                std::size_t budget) {
  check_context(phi, n);
  const UniverseRef u = tuple_universe(m.carrier, n, budget);
  std::vector<bool> members(u->size());
  for (std::size_t code = 0; code < u->size(); ++code) {
    auto s = decode_tuple(code, m.carrier->size(), n);
    members[code] = satisfies(m, phi, s);
  }
  return AssignmentSet{n, SubsetOf(u, std::move(members))};
}

AssignmentSet adjoint_denotation(const FOStructure& m, const Formula& phi, std::size_t n,
                                 std::size_t budget) {
  check_context(phi, n);
  AdjointRoute route(m, budget);
  return AssignmentSet{n, route.denote(phi, n)};
}

AssignmentSet tarski_denotation(const FOStructure& m, const Formula& phi, std::size_t n,
                                std::size_t budget) {
  AssignmentSet direct = direct_denotation(m, phi, n, budget);
  AssignmentSet adjoint = adjoint_denotation(m, phi, n, budget);
  if (!(direct == adjoint)) {
    throw InternalInconsistency("direct and adjoint denotations of " + to_string(phi) + " differ",
                                {direct.tuples.to_string(), adjoint.tuples.to_string()});
  }
  return direct;
}

// ---- projection adjoints ----------------------------------------------------

SubsetOf ProjectionAdjoints::exists(const SubsetOf& s) const {
  require_same(upper, s.universe(), "exists along projection");
  const std::size_t a = carrier->size();
  std::vector<bool> out(lower->size(), false);
  for (std::size_t code = 0; code < out.size(); ++code) {
    for (std::size_t x = 0; x < a && !out[code]; ++x) out[code] = s.contains(code * a + x);
  }
  return SubsetOf(lower, std::move(out));
}

SubsetOf ProjectionAdjoints::forall(const SubsetOf& s) const {
  require_same(upper, s.universe(), "forall along projection");
  const std::size_t a = carrier->size();
  std::vector<bool> out(lower->size(), true);
  for (std::size_t code = 0; code < out.size(); ++code) {
    for (std::size_t x = 0; x < a && out[code]; ++x) out[code] = s.contains(code * a + x);
  }
  return SubsetOf(lower, std::move(out));
}

ProjectionAdjoints projection_adjoints(const UniverseRef& carrier, std::size_t n,
                                       std::size_t budget) {
  UniverseRef upper = tuple_universe(carrier, n + 1, budget);
  UniverseRef lower = tuple_universe(carrier, n, budget);
  std::vector<std::size_t> graph(upper->size());
  for (std::size_t code = 0; code < graph.size(); ++code) graph[code] = code / carrier->size();
  FiniteFunction pi(upper, lower, std::move(graph));
  return ProjectionAdjoints{carrier, n, std::move(upper), std::move(lower), std::move(pi)};
}

AdjunctionCheck check_projection_adjoints(const ProjectionAdjoints& p, std::size_t budget) {
  const std::size_t bits = p.upper->size() + p.lower->size();
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw EnumerationBudgetExceeded("2^" + std::to_string(bits) +
                                    " subset pairs exceed the budget of " + std::to_string(budget));
  }
  AdjunctionCheck report;
  for (std::uint64_t sm = 0; sm < subset_count(p.upper); ++sm) {
    const SubsetOf s = SubsetOf::from_mask(p.upper, sm);
    const SubsetOf ex = p.exists(s);
    const SubsetOf all = p.forall(s);
    if (!(ex == direct_image(p.projection, s))) {
      report.violations.push_back({"exists formula = direct image", s.to_string()});
    }
    if (!(all == universal_image(p.projection, s))) {
      report.violations.push_back({"forall formula = universal image", s.to_string()});
    }
    for (std::uint64_t tm = 0; tm < subset_count(p.lower); ++tm) {
      const SubsetOf t = SubsetOf::from_mask(p.lower, tm);
      const SubsetOf pre = inverse_image(p.projection, t);
      ++report.instances;
      if (ex.subset_of(t) != s.subset_of(pre)) {
        report.violations.push_back({"exists -| inverse image", s.to_string(), t.to_string()});
      }
      if (pre.subset_of(s) != t.subset_of(all)) {
        report.violations.push_back({"inverse image -| forall", s.to_string(), t.to_string()});
      }
    }
  }
  return report;
}

// ---- generalization ---------------------------------------------------------

GeneralizationSides generalization_sides(const FOStructure& m, const AssignmentSet& gamma,
                                         const Formula& phi, std::size_t budget) {
  const UniverseRef expected = tuple_universe(m.carrier, gamma.context, budget);
  if (!same_universe(expected, gamma.tuples.universe())) {
    throw ContextMismatch("assumptions are not assignments v1..v" + std::to_string(gamma.context) +
                          " over '" + m.carrier->name + "'");
  }
  const AssignmentSet body = tarski_denotation(m, phi, gamma.context + 1, budget);
  const ProjectionAdjoints p = projection_adjoints(m.carrier, gamma.context, budget);
  // Rebase Γ onto the projection's own universe handle.
  const SubsetOf g(p.lower, gamma.tuples.members());
  const SubsetOf phi_set(p.upper, body.tuples.members());
  return GeneralizationSides{g.subset_of(p.forall(phi_set)),
                             inverse_image(p.projection, g).subset_of(phi_set)};
}

bool verify_generalization_rule(const FOStructure& m, const AssignmentSet& gamma,
                                const Formula& phi, std::size_t budget) {
  const GeneralizationSides sides = generalization_sides(m, gamma, phi, budget);
  if (sides.quantified != sides.weakened) {
    throw InternalInconsistency("generalization rule fails for " + to_string(phi));
  }
  return sides.quantified;
}

}  // namespace fincat
