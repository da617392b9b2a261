#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/sets.hpp"

namespace fincat {

/// Numerals 0..bound with a partial successor. The standard system has
/// s(n) = n+1 below the bound and s(bound) undefined.
class BoundedNaturalSystem {
 public:
  /// Throws InvalidArgument for repeated labels or out-of-range successors.
  BoundedNaturalSystem(std::vector<std::string> labels,
                       std::vector<std::optional<std::size_t>> succ, std::size_t zero = 0);
  static BoundedNaturalSystem standard(std::size_t bound);

  std::size_t bound() const { return labels_.size() - 1; }
  std::size_t zero() const { return zero_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::size_t>& succ(std::size_t i) const { return succ_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<std::size_t>> succ_;
  std::size_t zero_;
};

/// n̄ = s^n ∘ z, as text ("s∘s∘z") and as the arrow list in composition
/// order, together with the numeral it reaches.
struct Numeral {
  std::size_t n = 0;
  std::string text;
  std::vector<std::string> arrows;
  std::size_t value = 0;
};

/// Throws BoundExceeded past the bound or where s is undefined.
Numeral numeral(const BoundedNaturalSystem& sys, std::size_t n);

/// (A, c, f) with c ∈ A and f : A → A.
struct RecursionData {
  UniverseRef carrier;
  std::size_t c = 0;
  FiniteFunction f;

  /// Throws InvalidArgument unless c ∈ A and f is an endofunction of A.
  RecursionData(UniverseRef carrier, std::size_t c, FiniteFunction f);

  bool operator==(const RecursionData& other) const {
    return same_universe(carrier, other.carrier) && c == other.c && f == other.f;
  }
};

/// f^n(c).
std::size_t primrec_eval(const RecursionData& data, std::size_t n);
/// h(0), ..., h(k).
std::vector<std::size_t> primrec_trace(const RecursionData& data, std::size_t k);

struct MediationReport {
  std::size_t checked_up_to = 0;
  bool equations_hold = true;
  std::optional<std::size_t> witness;  // first n where h(n) is wrong
};

/// h(0) = c and h(n+1) = f(h(n)) for n < up_to. `h` must cover 0..up_to
/// (InvalidArgument otherwise).
MediationReport check_mediation(const RecursionData& data, const std::vector<std::size_t>& h,
                                std::size_t up_to);

struct NnoTriple {
  ObjectId object;
  ArrowId zero;
  ArrowId succ;

  bool operator==(const NnoTriple&) const = default;
};

struct NnoSearchResult {
  std::optional<ObjectId> terminal;
  std::vector<NnoTriple> triples;
  std::size_t candidates_tested = 0;
  std::string note;  // set when the search could not run
};

/// Every (N, z : 1 → N, s : N → N) such that each (A, c : 1 → A, f : A → A)
/// of the category has exactly one h : N → A with h∘z = c and h∘s = f∘h.
/// 1 is the first terminal object; without one the result is empty with a
/// note.
NnoSearchResult nno_search(const FiniteCategory& c);

struct DedekindReport {
  bool holds = false;
  bool boundary_exempt = false;  // s undefined at the last numeral
  std::vector<std::string> witnesses;
};

/// On the prefix: s injective and its image exactly everything but zero,
/// the top numeral exempt when s is undefined there.
DedekindReport dedekind_prefix_check(const BoundedNaturalSystem& sys);

}  // namespace fincat
