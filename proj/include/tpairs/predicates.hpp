#pragma once

// Axiom predicates on pairs: admissibility, surpassing relations, Property N,
// negation maps, reversibility, centers, bipotence and nondegeneracy.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpairs/axiom_report.hpp"
#include "tpairs/pair.hpp"
#include "tpairs/polynomial.hpp"

namespace tpairs {

/// A0 sub-semiring, T multiplicative monoid, A0 n T empty, T u {0}
/// additively spans A. Symbolic carriers take spanning from construction.
AxiomReport verify_admissible(const SemiringPair& p);

/// Every element is tangible or in A0 (window sample for symbolic carriers).
bool is_shallow(const SemiringPair& p);

/// Surpassing axioms (i)-(iv), reflexivity, transitivity, and the strong
/// form when requested. Shallow pairs with <=_0 always get the strong check.
/// Symbolic carriers are sampled; undecided comparisons are skipped.
AxiomReport verify_surpassing(const SemiringPair& p, bool strong);

/// If b1 <=_0 b2 then b2 (-) b1 = b1 (-) b2 and both surpass 0. Needs a negation map.
AxiomReport verify_negation_surpassing(const SemiringPair& p, const ElemMap& neg);

struct PropertyN {
  bool property_n = false;
  bool neg_compatible = false;
  bool tangibly_separating = false;
  /// a -> every a' in T with a + a' in A0.
  std::map<Elem, std::vector<Elem>> partners;
  /// First tangible without a partner.
  std::optional<Elem> missing;
  /// First tangible with two partners.
  std::optional<Elem> ambiguous;
  /// First (a, c) with c != a where no a' separates.
  std::optional<std::pair<Elem, Elem>> not_separated;

  /// Strongest single label: tangibly_separating, neg_compatible, property_n or none.
  [[nodiscard]] std::string summary() const;
};

PropertyN property_n_status(const SemiringPair& p);

struct NegationMap {
  ElemMap map;
  /// Explicit table on finite carriers, indexed by element.
  std::vector<Elem> table;
  AxiomReport invariants;
  Elem operator()(Elem e) const { return map(e); }
};

/// Extends a |-> a' additively to the whole carrier and checks the negation
/// axioms. Throws PreconditionError unless the pair is neg-compatible and
/// ConsistencyError when two decompositions disagree.
NegationMap derive_negation(const SemiringPair& p);

/// Negation axioms for an arbitrary map (over the finite carrier or window).
AxiomReport verify_negation(const SemiringPair& p, const ElemMap& neg);

enum class ReversibilityMode { plain, power, tangible, neg_plain, neg_power, neg_tangible };

std::string to_string(ReversibilityMode m);
ReversibilityMode parse_reversibility_mode(std::string_view text);

struct Reversibility {
  Truth holds = Truth::yes;
  /// (a, b) with 0 <= b + a (or b (-) a) but not a <= b.
  std::optional<std::pair<Elem, Elem>> counterexample;
  std::vector<Elem> checked;
};

/// b + a >= 0 implies b >= a for all b (with b (-) a in neg modes). Power
/// modes test a, a^2, ..., a^n_max; tangible modes test every a in T.
Reversibility check_reversibility(const SemiringPair& p, Elem a, ReversibilityMode mode,
                                  unsigned n_max = 4,
                                  const std::optional<ElemMap>& neg = std::nullopt);

struct Center {
  std::vector<Elem> elements;
  bool pair_commutative = false;
  bool carrier_commutative = false;
  /// w + y0 + y0' = w implies w + y0 = w for all w and y0, y0' in A0.
  bool transfer_hypothesis = false;
  std::optional<std::vector<Elem>> hypothesis_failure;
};

Center compute_center(const SemiringPair& p);

struct Bipotence {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> counterexample;
};

/// a + a' in {a, a'} or a^2 = a'^2 for all tangible a, a'.
Bipotence check_weakly_bipotent(const SemiringPair& p);

struct Nondegeneracy {
  bool nondegenerate = true;
  /// Tangible polynomial with f(T^m) inside A0.
  std::optional<Polynomial> witness;
  std::size_t polynomials_checked = 0;
  /// Shallow and nondegenerate pairs: every tangible polynomial took a tangible value.
  std::optional<bool> tangible_value_property;
};

/// Scans every tangible polynomial in n_vars variables up to degree_bound.
/// Throws BoundExceeded when the scan would exceed max_polynomials.
Nondegeneracy check_nondegenerate(const SemiringPair& p, unsigned degree_bound, unsigned n_vars,
                                  std::size_t max_polynomials = 2'000'000);

}  // namespace tpairs
