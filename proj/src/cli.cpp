#include "fincat/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fincat/galois.hpp"
#include "fincat/universal.hpp"

namespace fincat::cli {

using io::Json;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultArrowBudget;
  std::optional<std::size_t> cap;

  io::Limits limits() const { return io::Limits{budget, cap}; }
  std::size_t universe_cap() const { return cap.value_or(kDefaultUniverseCap); }
};

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void fail_with(Report& r, std::vector<std::string> witnesses) {
  r.status = "fail";
  r.witnesses = std::move(witnesses);
}

Json violations_json(const AxiomReport& a) {
  Json out = Json::array();
  for (const auto& v : a.violations) out.push_back({{"law", v.law}, {"witnesses", v.witnesses}});
  return out;
}

void report_violations(Report& r, const AxiomReport& a) {
  for (const auto& v : a.violations) {
    r.text.push_back("violation " + v.law + ": " + join(v.witnesses));
    r.witnesses.push_back(v.law + ": " + join(v.witnesses));
  }
  if (!a.ok()) r.status = "fail";
}

Json cone_json(const Cone& c) {
  return Json{{"apex", c.apex.name}, {"left", c.left.name}, {"right", c.right.name}};
}

Json certificate_json(const ProductCertificate& cert) {
  Json mediators = Json::array();
  for (const auto& m : cert.mediators) {
    mediators.push_back({{"cone", cone_json(m.cone)}, {"mediator", m.mediator.name}});
  }
  return Json{{"apex", cert.cone.apex.name}, {"pi1", cert.cone.left.name},
              {"pi2", cert.cone.right.name}, {"mediators", mediators}};
}

Json iso_json(const IsoCertificate& iso) {
  return Json{{"forward", iso.forward.name}, {"backward", iso.backward.name},
              {"checks", iso.checks}};
}

Json subset_json(const SubsetOf& s) { return Json(s.labels()); }

Json tuples_json(const AssignmentSet& a) {
  Json out = Json::array();
  for (const auto& t : a.listed()) out.push_back(t);
  return out;
}

std::string tuples_text(const AssignmentSet& a) {
  std::vector<std::string> items;
  for (const auto& t : a.listed()) items.push_back("(" + join(t, ",") + ")");
  return "{" + join(items, ",") + "}";
}

std::vector<ArrowId> all_arrows(const CategoryView& v) {
  std::vector<ArrowId> out;
  const auto objects = v.objects();
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      for (auto& f : v.hom(a, b)) out.push_back(std::move(f));
    }
  }
  return out;
}

// ---- verbs ------------------------------------------------------------------

Report do_validate(const Options& o, const std::string& file) {
  Report r{"validate"};
  const io::LoadedCategory lc = io::load_category(file, o.limits());
  AxiomReport axioms;
  std::size_t objects = 0;
  std::size_t arrows = 0;
  if (lc.category) {
    axioms = validate(*lc.category);
    objects = lc.category->object_count();
    arrows = lc.category->arrow_count();
  } else {
    axioms = validate_view(lc.view(), o.budget);
    objects = lc.view().objects().size();
    arrows = all_arrows(lc.view()).size();
  }
  r.text.push_back("category: " + std::to_string(objects) + " objects, " +
                   std::to_string(arrows) + " arrows");
  report_violations(r, axioms);
  if (axioms.ok()) r.text.push_back("all category laws hold");
  r.payload = Json{{"objects", objects}, {"arrows", arrows}, {"violations", violations_json(axioms)}};
  return r;
}

Report do_predicates(const Options& o, const std::string& file, const std::string& arrow) {
  Report r{"predicates"};
  const io::LoadedCategory lc = io::load_category(file, o.limits());
  const CategoryView& v = lc.view();
  std::vector<ArrowId> arrows;
  if (!arrow.empty()) {
    if (!v.contains(ArrowId{arrow})) throw UnknownArrow("no arrow named '" + arrow + "'", {arrow});
    arrows.push_back(ArrowId{arrow});
  } else {
    arrows = all_arrows(v);
  }
  Json rows = Json::array();
  for (const auto& f : arrows) {
    const auto mv = monic_violation(v, f, o.budget);
    const auto ev = epic_violation(v, f, o.budget);
    const auto inv = find_inverse(v, f, o.budget);
    Json row{{"arrow", f.name}, {"dom", v.dom(f).name}, {"cod", v.cod(f).name},
             {"monic", !mv}, {"epic", !ev},
             {"inverse", inv ? Json(inv->name) : Json(nullptr)}};
    std::string line = f.name + " : " + v.dom(f).name + " -> " + v.cod(f).name;
    line += "  monic " + yes_no(!mv);
    if (mv) {
      row["monic_witness"] = {mv->first.name, mv->second.name};
      line += " (" + mv->first.name + ", " + mv->second.name + ")";
    }
    line += "  epic " + yes_no(!ev);
    if (ev) {
      row["epic_witness"] = {ev->first.name, ev->second.name};
      line += " (" + ev->first.name + ", " + ev->second.name + ")";
    }
    line += "  iso " + (inv ? "yes, inverse " + inv->name : std::string("no"));
    r.text.push_back(line);
    rows.push_back(row);
  }
  r.payload = Json{{"arrows", rows}};
  if (lc.category && arrow.empty()) {
    const bool g = is_groupoid(*lc.category);
    r.payload["groupoid"] = g;
    r.text.push_back("groupoid: " + yes_no(g));
  }
  return r;
}

Report do_products(const Options& o, const std::string& file, const std::vector<std::string>& pair,
                   const std::vector<std::string>& family, bool family_given) {
  Report r{"products"};
  const io::LoadedCategory lc = io::load_category(file, o.limits());
  const FiniteCategory& c = lc.finite();
  if (family_given) {
    std::vector<ObjectId> factors;
    for (const auto& f : family) factors.push_back(ObjectId{f});
    for (const auto& f : factors) c.object_index(f);
    const auto product = finite_product(c, factors);
    r.payload = Json{{"family", family}};
    if (!product) {
      fail_with(r, {"no product of (" + join(family) + ")"});
      r.payload["product"] = nullptr;
      r.text.push_back("no product of (" + join(family) + ")");
      return r;
    }
    Json projections = Json::array();
    for (const auto& p : product->projections) projections.push_back(p.name);
    const bool verified = verify_finite_product(c, *product);
    r.payload["product"] = Json{{"apex", product->apex.name}, {"projections", projections},
                                {"verified", verified}};
    r.text.push_back("product of (" + join(family) + "): " + product->apex.name);
    for (std::size_t i = 0; i < product->projections.size(); ++i) {
      r.text.push_back("  pi" + std::to_string(i + 1) + " = " + product->projections[i].name);
    }
    r.text.push_back("universal property: " + yes_no(verified));
    if (!verified) fail_with(r, {product->apex.name});
    return r;
  }
  if (pair.size() != 2) throw InvalidArgument("--pair takes exactly two objects");
  const ObjectId a{pair[0]};
  const ObjectId b{pair[1]};
  const auto certs = find_products(c, a, b);
  Json products = Json::array();
  Json equational = Json::array();
  for (const auto& cert : certs) {
    products.push_back(certificate_json(cert));
    const bool eq = verify_equational_product(c, cert);
    equational.push_back(eq);
    r.text.push_back("product " + cert.cone.apex.name + " with pi1 = " + cert.cone.left.name +
                     ", pi2 = " + cert.cone.right.name + " (" +
                     std::to_string(cert.mediators.size()) + " cones mediated, equational " +
                     yes_no(eq) + ")");
    if (!eq) r.witnesses.push_back("equational check fails at " + cert.cone.apex.name);
  }
  Json isos = Json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    for (std::size_t j = i + 1; j < certs.size(); ++j) {
      const IsoCertificate iso = product_iso_certificate(c, certs[i], certs[j]);
      Json entry = iso_json(iso);
      entry["from"] = i;
      entry["to"] = j;
      isos.push_back(entry);
      r.text.push_back("iso #" + std::to_string(i) + " -> #" + std::to_string(j) + ": " +
                       iso.forward.name + " / " + iso.backward.name);
    }
  }
  r.payload = Json{{"pair", pair}, {"products", products}, {"equational", equational},
                   {"isos", isos}};
  if (certs.empty()) {
    r.text.push_back("no product of " + a.name + " and " + b.name);
    fail_with(r, {"no product of " + a.name + " and " + b.name});
  } else if (!r.witnesses.empty()) {
    r.status = "fail";
  }
  return r;
}

Report do_terminal(const Options& o, const std::string& file) {
  Report r{"terminal"};
  const io::LoadedCategory lc = io::load_category(file, o.limits());
  const FiniteCategory& c = lc.finite();
  const auto terminals = find_terminals(c);
  Json names = Json::array();
  for (const auto& t : terminals) names.push_back(t.name);
  Json isos = Json::array();
  for (std::size_t i = 1; i < terminals.size(); ++i) {
    const IsoCertificate iso = terminal_iso_certificate(c, terminals[0], terminals[i]);
    Json entry = iso_json(iso);
    entry["from"] = terminals[0].name;
    entry["to"] = terminals[i].name;
    isos.push_back(entry);
    r.text.push_back("iso " + terminals[0].name + " -> " + terminals[i].name + ": " +
                     iso.forward.name + " / " + iso.backward.name);
  }
  r.payload = Json{{"terminals", names}, {"isos", isos}};
  if (terminals.empty()) {
    r.text.insert(r.text.begin(), "no terminal object");
    fail_with(r, {"no terminal object"});
  } else {
    std::vector<std::string> labels;
    for (const auto& t : terminals) labels.push_back(t.name);
    r.text.insert(r.text.begin(), "terminal objects: " + join(labels));
  }
  return r;
}

Report do_functor_check(const Options& o, const std::string& file) {
  Report r{"functor-check"};
  const io::FunctorFile ff =
      io::functor_file_from_json(io::read_file(file), std::filesystem::path(file).parent_path());
  const Functor f = io::build_functor(ff, o.limits());
  const AxiomReport laws = check_functoriality(f);
  report_violations(r, laws);
  r.payload = Json{{"violations", violations_json(laws)}};
  if (laws.ok()) {
    const bool preserves = check_iso_preservation(f);
    r.payload["iso_preserving"] = preserves;
    r.text.push_back("functor laws hold");
    r.text.push_back("isomorphisms preserved: " + yes_no(preserves));
    if (!preserves) {
      std::vector<std::string> bad;
      for (const auto& a : unpreserved_isos(f)) bad.push_back(a.name);
      fail_with(r, bad);
    }
  } else {
    r.payload["iso_preserving"] = nullptr;
  }
  return r;
}

Json approximation_json(const FinitePoset& q, const Approximation& a) {
  Json approximants = Json::array();
  for (std::size_t y : a.approximants) approximants.push_back(q.label(y));
  const char* status = a.status == Approximation::Status::Best            ? "best"
                       : a.status == Approximation::Status::NoApproximants ? "no approximants"
                                                                           : "no least";
  return Json{{"approximants", approximants}, {"status", status},
              {"best", a.best ? Json(q.label(*a.best)) : Json(nullptr)}};
}

Report do_adjoints(const std::string& file, const std::string& side) {
  Report r{"adjoints"};
  const io::AdjointsFile af =
      io::adjoints_from_json(io::read_file(file), std::filesystem::path(file).parent_path());
  if (af.left) {
    r.payload = Json{{"mode", "verify"}};
    try {
      const AdjunctionCertificate cert = verify_adjunction(*af.left, *af.right);
      r.payload["verified_on"] = cert.verified_on;
      r.text.push_back("adjunction holds on all " + std::to_string(cert.verified_on) +
                       " pairs; unit, counit and both triangle equations hold");
    } catch (const NotMonotone& e) {
      r.text.push_back(e.what());
      fail_with(r, e.witnesses());
    } catch (const AdjunctionFails& e) {
      r.text.push_back(e.what());
      r.payload["failing_laws"] = unit_counit_failures(*af.left, *af.right);
      fail_with(r, e.witnesses());
    }
    return r;
  }
  const MonotoneMap& m = *af.map;
  if (side != "left" && side != "right") throw InvalidArgument("--side must be left or right");
  const bool left = side == "left";
  r.payload = Json{{"mode", "search"}, {"side", side}};
  if (auto v = m.monotonicity_violation()) {
    const std::string a = m.dom().label(v->first);
    const std::string b = m.dom().label(v->second);
    r.text.push_back("map is not monotone: " + a + " <= " + b + " but images are not ordered");
    fail_with(r, {a, b});
    return r;
  }
  // Either way the elements come from the codomain of the map and their
  // approximants from its domain.
  Json rows = Json::array();
  std::vector<std::string> missing;
  for (std::size_t x = 0; x < m.cod().size(); ++x) {
    const Approximation a = left ? best_approximation(m, x) : best_lower_approximation(m, x);
    const std::string& label = m.cod().label(x);
    Json row = approximation_json(m.dom(), a);
    row["element"] = label;
    rows.push_back(row);
    std::vector<std::string> approximants;
    for (std::size_t y : a.approximants) approximants.push_back(m.dom().label(y));
    std::string line = label + (left ? ": approximants {" : ": lower approximants {") +
                       join(approximants) + "}";
    if (a.best) {
      line += ", best " + m.dom().label(*a.best);
    } else {
      line += a.status == Approximation::Status::NoApproximants ? ", none"
              : left                                            ? ", no least"
                                                                : ", no greatest";
      missing.push_back(label + (left ? " has no best approximation"
                                      : " has no best lower approximation"));
    }
    r.text.push_back(line);
  }
  r.payload["approximations"] = rows;
  if (!missing.empty()) {
    r.text.push_back(std::string("no ") + (left ? "left" : "right") + " adjoint");
    r.payload["adjoint"] = nullptr;
    fail_with(r, {missing.front()});
    return r;
  }
  const MonotoneMap adj = left ? *left_adjoint(m) : *right_adjoint(m);
  const AdjunctionCertificate cert = left ? verify_adjunction(adj, m) : verify_adjunction(m, adj);
  r.payload["adjoint"] = io::monotone_to_json(adj);
  r.payload["verified_on"] = cert.verified_on;
  r.text.push_back(std::string(left ? "left" : "right") + " adjoint verified on " +
                   std::to_string(cert.verified_on) + " pairs");
  return r;
}

Report do_wp(const Options& o, const std::string& file, const std::string& atom,
             const std::vector<std::string>& target) {
  Report r{"wp"};
  const KripkeFrame frame = io::frame_from_json(io::read_file(file));
  SubsetOf t = SubsetOf::empty(frame.worlds);
  if (!atom.empty()) {
    auto it = frame.valuation.find(atom);
    if (it == frame.valuation.end()) throw UnknownAtom("atom '" + atom + "' has no valuation", {atom});
    t = it->second;
  } else {
    t = SubsetOf::of(frame.worlds, target);
  }
  const SubsetOf result = box(frame.access, t);
  Json trace = Json::array();
  r.text.push_back("T = " + t.to_string());
  for (std::size_t x = 0; x < frame.worlds->size(); ++x) {
    std::vector<std::string> succ;
    for (std::size_t y = 0; y < frame.worlds->size(); ++y) {
      if (frame.access.related(x, y)) succ.push_back(frame.worlds->elements[y]);
    }
    const std::string& w = frame.worlds->elements[x];
    trace.push_back({{"world", w}, {"successors", succ}, {"in_box", result.contains(x)}});
    r.text.push_back(w + ": successors {" + join(succ) + "} -> " +
                     (result.contains(x) ? "in [R]T" : "not in [R]T"));
  }
  r.text.push_back("[R]T = " + result.to_string());
  r.payload = Json{{"target", subset_json(t)}, {"trace", trace}, {"box", subset_json(result)}};
  if (frame.worlds->size() <= o.universe_cap()) {
    const AdjunctionCheck check = check_box_adjunction(frame.access, o.universe_cap());
    r.payload["post_image_adjunction"] = check.ok();
    r.text.push_back("f_R -| [R] on all " + std::to_string(check.instances) +
                     " subset pairs: " + yes_no(check.ok()));
    if (!check.ok()) fail_with(r, check.violations.front());
  }
  return r;
}

Report do_modal_eval(const std::string& file, const std::string& formula) {
  Report r{"modal-eval"};
  const KripkeFrame frame = io::frame_from_json(io::read_file(file));
  const FormulaPtr phi = parse_formula(formula);
  const SubsetOf worlds = eval_modal(frame, *phi);
  r.payload = Json{{"formula", to_string(*phi)}, {"worlds", subset_json(worlds)}};
  r.text.push_back(to_string(*phi) + " holds at " + worlds.to_string());
  return r;
}

Report do_fo_eval(const Options& o, const std::string& file, const std::string& formula,
                  std::size_t context) {
  Report r{"fo-eval"};
  const FOStructure m = io::structure_from_json(io::read_file(file));
  const FormulaPtr phi = parse_formula(formula);
  const AssignmentSet direct = direct_denotation(m, *phi, context, o.budget);
  const AssignmentSet adjoint = adjoint_denotation(m, *phi, context, o.budget);
  const bool agree = direct == adjoint;
  r.payload = Json{{"formula", to_string(*phi)}, {"context", context},
                   {"direct", tuples_json(direct)}, {"adjoint", tuples_json(adjoint)},
                   {"agree", agree}};
  r.text.push_back("formula: " + to_string(*phi) + " in context v1..v" + std::to_string(context));
  r.text.push_back("direct:  " + tuples_text(direct));
  r.text.push_back("adjoint: " + tuples_text(adjoint));
  r.text.push_back("routes agree: " + yes_no(agree));
  if (!agree) fail_with(r, {to_string(*phi)});
  return r;
}

RecursionData default_recursion() {
  UniverseRef z3 = make_universe("Z3", {"0", "1", "2"});
  return RecursionData(z3, 0, FiniteFunction(z3, z3, {1, 2, 0}));
}

Report do_nno_demo(const std::string& file, std::size_t k) {
  Report r{"nno-demo"};
  const RecursionData data =
      file.empty() ? default_recursion() : io::recursion_from_json(io::read_file(file));
  const auto sys = BoundedNaturalSystem::standard(std::max<std::size_t>(k, 1));
  const auto h = primrec_trace(data, k);
  Json trace = Json::array();
  const auto& labels = data.carrier->elements;
  for (std::size_t n = 0; n <= k; ++n) {
    const Numeral num = numeral(sys, n);
    trace.push_back({{"n", n}, {"numeral", num.text}, {"h", labels[h[n]]}});
    r.text.push_back("h(" + num.text + ") = " + labels[h[n]]);
  }
  const MediationReport med = check_mediation(data, h, k);
  r.text.push_back("h o z = c and h o s = f o h on 0.." + std::to_string(k) + ": " +
                   yes_no(med.equations_hold));
  r.payload = Json{{"recursion", io::recursion_to_json(data)}, {"trace", trace},
                   {"mediation", {{"checked_up_to", med.checked_up_to},
                                  {"equations_hold", med.equations_hold}}}};
  if (!med.equations_hold) fail_with(r, {std::to_string(*med.witness)});
  return r;
}

Report do_builders(const Options& o, const std::string& file) {
  Report r{"builders"};
  const io::LoadedCategory lc = io::load_category(file, o.limits());
  r.payload = io::category_to_json(lc.finite());
  std::istringstream lines(r.payload.dump(2));
  for (std::string line; std::getline(lines, line);) r.text.push_back(line);
  return r;
}

// ---- demos ------------------------------------------------------------------

Report demo_floor_ceiling() {
  Report r{"demo"};
  const FloorCeilingReport fc = floor_ceiling_demo(5, 2);
  r.text.push_back("inclusion of the integers -5..5 into the halves -5..5");
  r.text.push_back("r      floor  ceiling");
  Json rows = Json::array();
  for (const auto& row : fc.rows) {
    std::string line = row.label;
    line.resize(7, ' ');
    std::string fl = std::to_string(row.floor);
    fl.resize(7, ' ');
    r.text.push_back(line + fl + std::to_string(row.ceiling));
    rows.push_back({{"r", row.label}, {"floor", row.floor}, {"ceiling", row.ceiling}});
  }
  const auto ceiling_cert = verify_adjunction(fc.ceiling_map, fc.inclusion);
  const auto floor_cert = verify_adjunction(fc.inclusion, fc.floor_map);
  r.text.push_back("ceiling -| inclusion on " + std::to_string(ceiling_cert.verified_on) + " pairs");
  r.text.push_back("inclusion -| floor on " + std::to_string(floor_cert.verified_on) + " pairs");
  std::vector<std::string> wrong;
  try {
    verify_adjunction(fc.floor_map, fc.inclusion);
  } catch (const AdjunctionFails& e) {
    wrong = e.witnesses();
    r.text.push_back("floor -| inclusion fails at r = " + wrong[0] + ", z = " + wrong[1]);
  }
  r.text.push_back("matches arithmetic floor and ceiling: " + yes_no(fc.matches_arithmetic));
  r.payload = Json{{"demo", "floor-ceiling"}, {"bound", fc.bound}, {"denominator", fc.denominator},
                   {"rows", rows}, {"matches_arithmetic", fc.matches_arithmetic},
                   {"wrong_side_witness", wrong}};
  if (!fc.matches_arithmetic || wrong.empty()) fail_with(r, {"floor/ceiling mismatch"});
  return r;
}

Report demo_wp() {
  Report r{"demo"};
  UniverseRef w = make_universe("W", {"1", "2"});
  const FiniteRelation access = FiniteRelation::from_pairs(w, w, {{"1", "2"}, {"2", "2"}});
  const KripkeFrame frame(w, access, {{"p", SubsetOf::of(w, {"2"})}});
  const SubsetOf t = SubsetOf::of(w, {"2"});
  r.text.push_back("W = {1,2}, R = {(1,2),(2,2)}, T = {2}");
  Json trace = Json::array();
  const SubsetOf b = box(access, t);
  for (std::size_t x = 0; x < w->size(); ++x) {
    std::vector<std::string> succ;
    for (std::size_t y = 0; y < w->size(); ++y) {
      if (access.related(x, y)) succ.push_back(w->elements[y]);
    }
    r.text.push_back("world " + w->elements[x] + ": successors {" + join(succ) +
                     "} all in T: " + yes_no(b.contains(x)));
    trace.push_back({{"world", w->elements[x]}, {"successors", succ}, {"in_box", b.contains(x)}});
  }
  r.text.push_back("[R]T = " + b.to_string());
  const SubsetOf post = relation_post_image(access, SubsetOf::of(w, {"1"}));
  r.text.push_back("f_R({1}) = " + post.to_string());
  const AdjunctionCheck check = check_box_adjunction(access);
  r.text.push_back("f_R(S) <= T iff S <= [R]T on all " + std::to_string(check.instances) +
                   " pairs: " + yes_no(check.ok()));
  const SubsetOf boxp = eval_modal(frame, *parse_formula("box p"));
  const SubsetOf diap = eval_modal(frame, *parse_formula("dia p"));
  r.text.push_back("box p holds at " + boxp.to_string());
  r.text.push_back("dia p holds at " + diap.to_string());
  r.payload = Json{{"demo", "wp"}, {"trace", trace}, {"box", subset_json(b)},
                   {"post_image", subset_json(post)}, {"adjunction", check.ok()},
                   {"box_p", subset_json(boxp)}, {"dia_p", subset_json(diap)}};
  if (!check.ok()) fail_with(r, check.violations.front());
  return r;
}

Report demo_quantifiers(std::uint64_t seed) {
  Report r{"demo"};
  UniverseRef a = make_universe("A", {"a", "b"});
  const FOStructure m(a, {{"E", FORelation{2, {{0, 1}}}}});
  r.text.push_back("A = {a,b}, E = {(a,b)}");
  Json formulas = Json::array();
  for (const char* text : {"exists v2. E(v1,v2)", "forall v2. E(v1,v2)", "exists v2. E(v2,v1)"}) {
    const FormulaPtr phi = parse_formula(text);
    const AssignmentSet direct = direct_denotation(m, *phi, 1);
    const AssignmentSet adjoint = adjoint_denotation(m, *phi, 1);
    r.text.push_back(to_string(*phi) + ": direct " + tuples_text(direct) + ", adjoint " +
                     tuples_text(adjoint));
    formulas.push_back({{"formula", to_string(*phi)}, {"direct", tuples_json(direct)},
                        {"adjoint", tuples_json(adjoint)}, {"agree", direct == adjoint}});
    if (!(direct == adjoint)) r.witnesses.push_back(to_string(*phi));
  }
  const ProjectionAdjoints p = projection_adjoints(a, 1);
  const AdjunctionCheck check = check_projection_adjoints(p);
  r.text.push_back("exists(pi) -| pi^-1 -| forall(pi) on all " + std::to_string(check.instances) +
                   " pairs: " + yes_no(check.ok()));

  // Seeded instances of the generalization rule.
  const std::vector<std::string> bodies = {"E(v1,v2)", "E(v2,v1)", "E(v1,v1)",
                                           "E(v1,v2) | E(v2,v1)", "!E(v2,v2)", "E(v1,v2) -> E(v2,v1)"};
  std::mt19937_64 rng(seed);
  Json rules = Json::array();
  r.text.push_back("generalization rule, seed " + std::to_string(seed) + ":");
  for (int i = 0; i < 5; ++i) {
    const std::uint64_t mask = rng() % 4;
    const FormulaPtr phi = parse_formula(bodies[rng() % bodies.size()]);
    const AssignmentSet gamma{1, SubsetOf::from_mask(tuple_universe(a, 1), mask)};
    const GeneralizationSides sides = generalization_sides(m, gamma, *phi);
    r.text.push_back("  Gamma = " + tuples_text(gamma) + ", phi = " + to_string(*phi) +
                     ": Gamma <= forall(pi)[phi] " + yes_no(sides.quantified) +
                     ", pi^-1(Gamma) <= [phi] " + yes_no(sides.weakened));
    rules.push_back({{"gamma", tuples_json(gamma)}, {"phi", to_string(*phi)},
                     {"quantified", sides.quantified}, {"weakened", sides.weakened}});
    if (sides.quantified != sides.weakened) r.witnesses.push_back(to_string(*phi));
  }
  r.payload = Json{{"demo", "quantifiers"}, {"seed", seed}, {"formulas", formulas},
                   {"projection_adjunction", check.ok()}, {"generalization", rules}};
  if (!check.ok() || !r.witnesses.empty()) r.status = "fail";
  return r;
}

const char* error_kind(const std::exception& e) {
#define FINCAT_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  FINCAT_KIND(ParseError)
  FINCAT_KIND(MalformedTable)
  FINCAT_KIND(UnknownObject)
  FINCAT_KIND(UnknownArrow)
  FINCAT_KIND(EnumerationBudgetExceeded)
  FINCAT_KIND(InvalidArgument)
  FINCAT_KIND(InvalidMonoid)
  FINCAT_KIND(InvalidPoset)
  FINCAT_KIND(NotTerminal)
  FINCAT_KIND(NotAProduct)
  FINCAT_KIND(MalformedMap)
  FINCAT_KIND(SourceTargetMismatch)
  FINCAT_KIND(NotAFunctor)
  FINCAT_KIND(NotMonotone)
  FINCAT_KIND(NotAHomomorphism)
  FINCAT_KIND(UnknownElement)
  FINCAT_KIND(AdjunctionFails)
  FINCAT_KIND(UniverseMismatch)
  FINCAT_KIND(UnknownAtom)
  FINCAT_KIND(NotDownClosed)
  FINCAT_KIND(ContextOverflow)
  FINCAT_KIND(ContextMismatch)
  FINCAT_KIND(BoundExceeded)
  FINCAT_KIND(UnknownDemo)
  FINCAT_KIND(InternalInconsistency)
#undef FINCAT_KIND
  return "Error";
}

void emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    out << r.to_json().dump(2) << "\n";
    return;
  }
  for (const auto& line : r.text) out << line << "\n";
  out << "status: " << r.status << "\n";
  if (!r.witnesses.empty()) out << "witnesses: " << join(r.witnesses) << "\n";
}

}  // namespace

Json Report::to_json() const {
  return Json{{"status", status}, {"verb", verb}, {"payload", payload}, {"witnesses", witnesses}};
}

int exit_code(const Report& r) {
  if (r.status == "ok") return 0;
  if (r.status == "fail") return 1;
  return 2;
}

std::vector<std::string> demo_names() { return {"floor-ceiling", "wp", "quantifiers"}; }

Report run_demo(const std::string& name, std::uint64_t seed) {
  if (name == "floor-ceiling") return demo_floor_ceiling();
  if (name == "wp") return demo_wp();
  if (name == "quantifiers") return demo_quantifiers(seed);
  throw UnknownDemo("no demo named '" + name + "'; try " + join(demo_names()), {name});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exhaustive checks for finite categories, adjunctions and categorical logic",
               "fincat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Structured output");
  app.add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--budget", o.budget, "Enumeration cap (arrows or tuples)")->capture_default_str();
  app.add_option("--cap", o.cap, "Universe size cap for builders and subset enumerations");

  std::string file;
  std::string arrow;
  std::vector<std::string> pair;
  std::vector<std::string> family;
  std::string side = "left";
  std::string atom;
  std::vector<std::string> target;
  std::string formula;
  std::size_t context = 0;
  std::size_t n = 5;
  std::string demo;

  auto* validate_cmd = app.add_subcommand("validate", "Check the category laws");
  validate_cmd->add_option("file", file, "Category or builder file")->required();
  auto* predicates_cmd = app.add_subcommand("predicates", "Monic, epic and iso for arrows");
  predicates_cmd->add_option("file", file)->required();
  predicates_cmd->add_option("--arrow", arrow, "Only this arrow");
  auto* products_cmd = app.add_subcommand("products", "Binary or finite products");
  products_cmd->add_option("file", file)->required();
  auto* pair_opt = products_cmd->add_option("--pair", pair, "Two objects")->expected(2);
  auto* family_opt =
      products_cmd->add_option("--family", family, "Any number of objects")->expected(0, -1);
  pair_opt->excludes(family_opt);
  auto* terminal_cmd = app.add_subcommand("terminal", "Terminal objects and their isos");
  terminal_cmd->add_option("file", file)->required();
  auto* functor_cmd = app.add_subcommand("functor-check", "Functor laws and iso preservation");
  functor_cmd->add_option("file", file)->required();
  auto* adjoints_cmd = app.add_subcommand("adjoints", "Adjoints of a monotone map");
  adjoints_cmd->add_option("file", file)->required();
  adjoints_cmd->add_option("--side", side, "left or right")->capture_default_str();
  auto* wp_cmd = app.add_subcommand("wp", "Weakest precondition [R]T on a frame");
  wp_cmd->add_option("file", file)->required();
  auto* atom_opt = wp_cmd->add_option("--atom", atom, "Target given by an atom's valuation");
  auto* target_opt = wp_cmd->add_option("--target", target, "Target worlds")->expected(0, -1);
  atom_opt->excludes(target_opt);
  auto* modal_cmd = app.add_subcommand("modal-eval", "Evaluate a modal formula");
  modal_cmd->add_option("file", file)->required();
  modal_cmd->add_option("--formula", formula)->required();
  auto* fo_cmd = app.add_subcommand("fo-eval", "Tarskian denotation of a first-order formula");
  fo_cmd->add_option("file", file)->required();
  fo_cmd->add_option("--formula", formula)->required();
  fo_cmd->add_option("--context", context, "Number of free variables")->capture_default_str();
  auto* nno_cmd = app.add_subcommand("nno-demo", "Primitive recursion trace h(0..K)");
  nno_cmd->add_option("file", file, "Recursion data (default Z_3, c = 0, f = +1)");
  nno_cmd->add_option("--n", n, "K")->capture_default_str();
  auto* builders_cmd = app.add_subcommand("builders", "Dump a built category as tables");
  builders_cmd->add_option("file", file)->required();
  auto* demo_cmd = app.add_subcommand("demo", "Packaged walkthroughs");
  demo_cmd->add_option("name", demo, "floor-ceiling | wp | quantifiers")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    // Options that take zero or more values report an empty one when bare.
    std::erase(family, std::string());
    std::erase(target, std::string());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Report report{verb};
  try {
    if (verb == "validate") report = do_validate(o, file);
    else if (verb == "predicates") report = do_predicates(o, file, arrow);
    else if (verb == "products") {
      if (pair.empty() && family_opt->count() == 0) {
        throw InvalidArgument("products needs --pair X Y or --family A ...");
      }
      report = do_products(o, file, pair, family, family_opt->count() > 0);
    } else if (verb == "terminal") report = do_terminal(o, file);
    else if (verb == "functor-check") report = do_functor_check(o, file);
    else if (verb == "adjoints") report = do_adjoints(file, side);
    else if (verb == "wp") {
      if (atom.empty() && target_opt->count() == 0) {
        throw InvalidArgument("wp needs --atom p or --target w ...");
      }
      report = do_wp(o, file, atom, target);
    } else if (verb == "modal-eval") report = do_modal_eval(file, formula);
    else if (verb == "fo-eval") report = do_fo_eval(o, file, formula, context);
    else if (verb == "nno-demo") report = do_nno_demo(file, n);
    else if (verb == "builders") report = do_builders(o, file);
    else if (verb == "demo") report = run_demo(demo, o.seed);
  } catch (const std::exception& e) {
    report = Report{verb, "error"};
    report.payload = Json{{"error", error_kind(e)}, {"message", e.what()}};
    if (const auto* fe = dynamic_cast<const Error*>(&e)) report.witnesses = fe->witnesses();
    if (o.json) {
      emit(report, true, out);
    } else {
      err << "error (" << error_kind(e) << "): " << e.what() << "\n";
    }
    return 2;
  }
  emit(report, o.json, out);
  return exit_code(report);
}

}  // namespace fincat::cli
