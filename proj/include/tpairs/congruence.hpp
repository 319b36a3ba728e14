#pragma once

// Congruences on finite pairs, the twist product, classification into
// prime / semiprime / irreducible, radicals, spectra and quotients.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpairs/axiom_report.hpp"
#include "tpairs/pair.hpp"

namespace tpairs {

/// An element (a, a') of A x A.
using TwistElement = std::pair<Elem, Elem>;

/// (a1, a1') * (a2, a2') = (a1 a2 + a1' a2', a1 a2' + a1' a2).
TwistElement twist_product(const Semiring& s, TwistElement x, TwistElement y);
/// x^{*m} for m >= 1.
TwistElement twist_power(const Semiring& s, TwistElement x, unsigned m);

/// Equivalence relation on a finite carrier, stored as canonical class ids
/// (classes numbered by first element). Whether it is a pair-congruence is
/// checked separately.
class Congruence {
 public:
  Congruence(PairPtr pair, std::vector<Elem> classes);
  static Congruence diagonal(PairPtr pair);

  [[nodiscard]] const PairPtr& pair() const noexcept { return pair_; }
  [[nodiscard]] const std::vector<Elem>& classes() const noexcept { return cls_; }
  [[nodiscard]] std::size_t size() const noexcept { return cls_.size(); }
  [[nodiscard]] bool contains(Elem a, Elem b) const;
  [[nodiscard]] bool contains(TwistElement x) const { return contains(x.first, x.second); }
  [[nodiscard]] Elem class_of(Elem a) const { return cls_.at(static_cast<std::size_t>(a)); }
  [[nodiscard]] std::size_t class_count() const;
  /// Number of ordered pairs in the relation.
  [[nodiscard]] std::size_t pair_count() const;
  /// Sorted ordered pairs, diagonal included.
  [[nodiscard]] std::vector<TwistElement> pairs() const;
  /// Classes as element lists in canonical order.
  [[nodiscard]] std::vector<std::vector<Elem>> blocks() const;
  /// Pairs inside A0.
  [[nodiscard]] std::vector<TwistElement> restriction_to_a0() const;
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] bool subset_of(const Congruence& other) const;
  [[nodiscard]] Congruence meet(const Congruence& other) const;
  /// Blocks written with labels, e.g. "{(0,0),(1,1)} {(0,1)} {(1,0)}".
  [[nodiscard]] std::string format() const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.cls_ == b.cls_; }
  /// Canonical order: fewer pairs first, then lexicographic on sorted pairs.
  friend bool operator<(const Congruence& a, const Congruence& b);

 private:
  PairPtr pair_;
  std::vector<Elem> cls_;
};

/// Equivalence, compatibility with + and both multiplications, closure under
/// switch and twist, and disjointness from T x A0.
AxiomReport verify_congruence(const Congruence& c);

/// Disjoint from T x A0: no class holds both a tangible and an A0 element.
/// Returns an offending (t, a0) pair otherwise.
std::optional<TwistElement> tangible_a0_clash(const Congruence& c);

struct Generated {
  std::optional<Congruence> congruence;
  /// (t, a0) in T x A0 reached by the closure when no pair-congruence contains the seeds.
  std::optional<TwistElement> offending;
  explicit operator bool() const noexcept { return congruence.has_value(); }
};

/// Least congruence containing `base` (the diagonal when absent) and the seeds.
Generated generate_congruence(const PairPtr& p, const std::vector<TwistElement>& seeds,
                              const std::optional<Congruence>& base = std::nullopt);

/// Every pair-congruence in canonical order; the diagonal comes first.
struct CongruenceLattice {
  PairPtr pair;
  std::vector<Congruence> elements;

  [[nodiscard]] std::optional<std::size_t> index_of(const Congruence& c) const;
  /// Indices of lattice elements containing c (c itself included).
  [[nodiscard]] std::vector<std::size_t> above(const Congruence& c) const;
};

/// Throws BoundExceeded above max_size elements, quoting the Bell-number bound.
/// With `pair_only` false every semiring congruence is listed, including
/// those meeting T x A0 and the full relation.
CongruenceLattice enumerate_congruences(const PairPtr& p, std::size_t max_size = 10,
                                        bool pair_only = true);

/// {x * y : x in c1, y in c2} inside target.
bool twist_product_within(const Congruence& c1, const Congruence& c2, const Congruence& target);

struct Classification {
  bool prime = false;
  bool semiprime = false;
  bool irreducible = false;
  /// prime == (semiprime && irreducible)
  bool consistent = false;
  /// Semiprime failure: b with b * (A x A) * b inside c but b outside.
  std::optional<TwistElement> semiprime_witness;
  /// Prime failure: (b1, b2) with b1 * (A x A) * b2 inside c, both outside.
  std::optional<std::pair<TwistElement, TwistElement>> prime_witness;
  /// Irreducibility failure: two strictly larger congruences meeting in c.
  std::optional<std::pair<std::size_t, std::size_t>> irreducible_witness;
};

/// Element criteria for prime and semiprime, lattice search for irreducible.
Classification classify_congruence(const Congruence& c, const CongruenceLattice& lattice);

bool semiprime_by_criterion(const Congruence& c);
bool prime_by_criterion(const Congruence& c);
/// Quantifies over lattice congruences containing c, straight from the definitions.
bool semiprime_by_definition(const Congruence& c, const CongruenceLattice& lattice);
bool prime_by_definition(const Congruence& c, const CongruenceLattice& lattice);
bool irreducible_in(const Congruence& c, const CongruenceLattice& lattice);

/// Meets of every nonempty subfamily, in canonical order.
std::vector<Congruence> meet_closure(const std::vector<Congruence>& family);

struct Radical {
  Congruence congruence;
  /// The twist-power set was already a congruence before closing.
  bool set_was_congruence = false;
  bool contains_input = false;
  bool semiprime = false;
  /// Some pair of the closed set is in T x A0.
  std::optional<TwistElement> offending;
};

/// sqrt(c) = {x : x^{*m} in c for some m >= 1}, closed to a congruence.
/// Throws PreconditionError on a noncommutative carrier.
Radical radical(const Congruence& c);

struct Spectrum {
  CongruenceLattice lattice;
  /// Indices into lattice.elements.
  std::vector<std::size_t> primes;
  /// Strict containments in the longest chain of primes; -1 if there are none.
  int krull_dimension = -1;
  std::vector<std::size_t> longest_chain;
  /// Every criterion-semiprime equals a meet of primes.
  bool semiprimes_are_prime_meets = false;
  /// Criterion and definition agree on every lattice element.
  bool criteria_agree = false;
};

Spectrum prime_spectrum_krull(const PairPtr& p, std::size_t max_size = 10);

/// Levitzki sequence s_{i+1} = s_i * a_i * s_i outside c, then a maximal
/// lattice congruence containing c and avoiding the sequence.
struct LevitzkiResult {
  std::vector<TwistElement> sequence;
  std::optional<std::size_t> prime;  // index into the lattice
  bool sequence_stuck = false;       // no a_i keeps the next term outside c
};

LevitzkiResult levitzki_prime(const Congruence& c, TwistElement s1, const CongruenceLattice& lattice);

// ---------------------------------------------------------------------------
// Chains on symbolic carriers

using RelationPredicate = std::function<bool(Elem, Elem)>;

enum class Strictness { strict, equal, unknown };
std::string to_string(Strictness s);

struct ChainLink {
  int from = 0;
  int to = 0;
  /// No sampled pair of the first relation lies outside the second.
  bool contained_on_sample = true;
  std::optional<TwistElement> containment_counterexample;
  Strictness strictness = Strictness::unknown;
  /// A pair in the second relation but not the first.
  std::optional<TwistElement> separating;
  /// Sampled (x, y, c) with x ~ y but x + c, y + c or xc, yc unrelated, for the second relation.
  std::optional<std::vector<Elem>> compatibility_failure;
};

struct ChainProbe {
  std::vector<ChainLink> links;
  std::string qualification;
};

/// Compares consecutive relations of `chain` (indices first..last) on the
/// window sample. Equal indices compare as equal.
ChainProbe acc_chain_probe(const SemiringPair& p, const std::function<RelationPredicate(int)>& chain,
                           int first, int last, Window bound);

/// m ~ m' iff i divides m - m' (finite levels), -inf only to itself.
RelationPredicate zmax_difference_relation(int i);

/// Congruences of nmax_trunc(n) generated by (1,2), ..., (1,i), as a finite chain.
std::vector<Congruence> nmax_generated_chain(int n, int links);

// ---------------------------------------------------------------------------
// Quotients and kernels

struct QuotientPair {
  PairPtr pair;
  /// Carrier element -> class index in the quotient.
  std::vector<Elem> projection;
  AxiomReport admissibility;
};

/// Classes with induced operations; A0 and T are the images of A0 and T.
/// Throws ConsistencyError if the induced operations are not well defined.
QuotientPair quotient_pair(const Congruence& c);

/// A map between finite carriers given by its table.
struct PairHomomorphism {
  PairPtr source;
  PairPtr target;
  std::vector<Elem> map;
};

/// Preserves 0, 1, + and multiplication; "A0 preserved" and "T preserved"
/// are reported separately as pair conditions.
AxiomReport verify_homomorphism(const PairHomomorphism& f);

struct Kernel {
  Congruence congruence;
  bool preserves_a0 = false;
  /// Kernel is disjoint from T x A0.
  bool pair_congruence = false;
};

/// {(y1, y2) : f(y1) = f(y2)}. Throws PreconditionError when f is not a
/// semiring homomorphism.
Kernel congruence_kernel(const PairHomomorphism& f);

}  // namespace tpairs
