#include "fincat/nno.hpp"

#include <unordered_set>

#include "fincat/universal.hpp"

namespace fincat {

BoundedNaturalSystem::BoundedNaturalSystem(std::vector<std::string> labels,
                                           std::vector<std::optional<std::size_t>> succ,
                                           std::size_t zero)
    : labels_(std::move(labels)), succ_(std::move(succ)), zero_(zero) {
  if (labels_.empty()) throw InvalidArgument("a natural number system needs at least a zero");
  if (succ_.size() != labels_.size()) throw InvalidArgument("successor table has the wrong length");
  if (zero_ >= labels_.size()) throw InvalidArgument("zero is not a numeral");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvalidArgument("numeral '" + l + "' is repeated", {l});
  }
  for (const auto& s : succ_) {
    if (s && *s >= labels_.size()) throw InvalidArgument("successor leaves the numerals");
  }
}

BoundedNaturalSystem BoundedNaturalSystem::standard(std::size_t bound) {
  if (bound == 0) throw InvalidArgument("bound must be positive");
  std::vector<std::string> labels;
  std::vector<std::optional<std::size_t>> succ;
  for (std::size_t i = 0; i <= bound; ++i) {
    labels.push_back(std::to_string(i));
    succ.push_back(i < bound ? std::optional<std::size_t>(i + 1) : std::nullopt);
  }
  return BoundedNaturalSystem(std::move(labels), std::move(succ));
}

Numeral numeral(const BoundedNaturalSystem& sys, std::size_t n) {
  if (n > sys.bound()) {
    throw BoundExceeded("numeral " + std::to_string(n) + " is past the bound " +
                        std::to_string(sys.bound()));
  }
  Numeral out{n, "", {}, sys.zero()};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& next = sys.succ(out.value);
    if (!next) {
      throw BoundExceeded("s is undefined at " + sys.labels()[out.value],
                          {sys.labels()[out.value]});
    }
    out.value = *next;
    out.text += "s∘";
    out.arrows.push_back("s");
  }
  out.text += "z";
  out.arrows.push_back("z");
  return out;
}

RecursionData::RecursionData(UniverseRef carrier_, std::size_t c_, FiniteFunction f_)
    : carrier(std::move(carrier_)), c(c_), f(std::move(f_)) {
  if (c >= carrier->size()) throw InvalidArgument("c is not an element of the carrier");
  if (!same_universe(carrier, f.dom) || !same_universe(carrier, f.cod)) {
    throw InvalidArgument("f must map the carrier to itself");
  }
}

std::size_t primrec_eval(const RecursionData& data, std::size_t n) {
  std::size_t x = data.c;
  for (std::size_t i = 0; i < n; ++i) x = data.f(x);
  return x;
}

std::vector<std::size_t> primrec_trace(const RecursionData& data, std::size_t k) {
  std::vector<std::size_t> out{data.c};
  for (std::size_t i = 0; i < k; ++i) out.push_back(data.f(out.back()));
  return out;
}

MediationReport check_mediation(const RecursionData& data, const std::vector<std::size_t>& h,
                                std::size_t up_to) {
  if (h.size() <= up_to) {
    throw InvalidArgument("h is only given on 0.." + std::to_string(h.size()) + "-1");
  }
  MediationReport report{up_to, true, std::nullopt};
  if (h[0] != data.c) {
    report.equations_hold = false;
    report.witness = 0;
    return report;
  }
  for (std::size_t n = 0; n < up_to; ++n) {
    if (h[n] >= data.carrier->size() || h[n + 1] != data.f(h[n])) {
      report.equations_hold = false;
      report.witness = n + 1;
      return report;
    }
  }
  return report;
}

NnoSearchResult nno_search(const FiniteCategory& c) {
  NnoSearchResult result;
  const auto terminals = find_terminals(c);
  if (terminals.empty()) {
    result.note = "no terminal object";
    return result;
  }
  result.terminal = terminals.front();
  const std::size_t one = c.object_index(terminals.front());

  // All recursion data (A, c, f), gathered once.
  struct Datum {
    std::size_t object, point, step;
  };
  std::vector<Datum> data;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    for (std::size_t pt : c.hom_at(one, a)) {
      for (std::size_t f : c.hom_at(a, a)) data.push_back({a, pt, f});
    }
  }

  for (std::size_t n = 0; n < c.object_count(); ++n) {
    for (std::size_t z : c.hom_at(one, n)) {
      for (std::size_t s : c.hom_at(n, n)) {
        ++result.candidates_tested;
        bool universal = true;
        for (const Datum& d : data) {
          std::size_t mediators = 0;
          for (std::size_t h : c.hom_at(n, d.object)) {
            if (c.compose_at(h, z) == d.point &&
                c.compose_at(h, s) == c.compose_at(d.step, h)) {
              ++mediators;
            }
          }
          if (mediators != 1) {
            universal = false;
            break;
          }
        }
        if (universal) {
          result.triples.push_back(
              {c.object(n), c.arrow(z).name, c.arrow(s).name});
        }
      }
    }
  }
  return result;
}

DedekindReport dedekind_prefix_check(const BoundedNaturalSystem& sys) {
  DedekindReport report;
  const std::size_t top = sys.bound();
  const auto& labels = sys.labels();
  std::vector<std::size_t> hits(labels.size(), 0);
  for (std::size_t i = 0; i <= top; ++i) {
    const auto& next = sys.succ(i);
    if (!next) {
      if (i == top) {
        report.boundary_exempt = true;
      } else {
        report.witnesses.push_back("s undefined at " + labels[i]);
      }
      continue;
    }
    ++hits[*next];
  }
  for (std::size_t y = 0; y <= top; ++y) {
    if (hits[y] > 1) report.witnesses.push_back("s not injective: " + labels[y] + " hit twice");
    if (y == sys.zero() && hits[y] > 0) {
      report.witnesses.push_back("zero " + labels[y] + " is in the image of s");
    }
    if (y != sys.zero() && hits[y] == 0) {
      report.witnesses.push_back(labels[y] + " is not in the image of s");
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

}  // namespace fincat
