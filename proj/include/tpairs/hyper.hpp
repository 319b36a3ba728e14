#pragma once

// Semi-hypergroups and semi-hyperrings on at most 64 elements, their
// power-set pairs, and coset quotients by multiplicative subgroups.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpairs/axiom_report.hpp"
#include "tpairs/pair.hpp"
#include "tpairs/semiring.hpp"

namespace tpairs {

/// Bit i set means element i is in the subset.
using Subset = std::uint64_t;

constexpr Subset singleton(Elem e) noexcept { return Subset{1} << e; }
std::vector<Elem> subset_elements(Subset s);

/// Hyperaddition table over labelled elements. `add[a * n + b]` is a ⊞ b.
struct SemiHypergroup {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Subset> add;
  Elem zero = 0;

  [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
  [[nodiscard]] Subset sum(Elem a, Elem b) const {
    return add[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  /// Elementwise extension S1 ⊞ S2.
  [[nodiscard]] Subset sum_sets(Subset s1, Subset s2) const;
  [[nodiscard]] std::string format(Subset s) const;
  [[nodiscard]] std::optional<Elem> find(std::string_view label) const;
};

/// Semi-hypergroup with a single-valued multiplication and unit.
struct SemiHyperring : SemiHypergroup {
  std::vector<Elem> mul;
  Elem one = 0;

  [[nodiscard]] Elem prod(Elem a, Elem b) const {
    return mul[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  /// {a s : s in S}.
  [[nodiscard]] Subset prod(Elem a, Subset s) const;
  [[nodiscard]] Subset prod(Subset s, Elem a) const;
  [[nodiscard]] bool commutative() const;
};

/// Shape checks (table sizes, index ranges, nonempty sums). Throws
/// StructureError; an empty sum set is always structural.
void check_shape(const SemiHypergroup& h);
void check_shape(const SemiHyperring& h);

/// Commutativity, associativity and neutrality of ⊞, exhaustively.
AxiomReport verify_semihypergroup(const SemiHypergroup& h);
/// Hypergroup axioms plus multiplicative monoid, absorbing zero and
/// distributivity a(b ⊞ c) = ab ⊞ ac on both sides.
AxiomReport verify_semihyperring(const SemiHyperring& h);

/// The Krasner hyperfield {0, 1} with 1 ⊞ 1 = {0, 1}.
SemiHyperring krasner_hyperfield();
/// A semiring viewed as a hyperring with singleton sums.
SemiHyperring as_hyperring(const FiniteSemiring& s);

enum class A0Choice { contains_zero, size_ge_two };
std::string to_string(A0Choice c);
A0Choice parse_a0_choice(std::string_view text);

/// Pair on the subsets reachable from singletons under elementwise ⊞ and
/// multiplication. T = nonzero singletons; A0 = sets containing the
/// hyperzero, or sets of size >= 2 together with {0}. Surpassing is
/// inclusion. Labels look like "{0,1}".
PairPtr powerset_pair(const SemiHyperring& h, A0Choice choice);

/// A coset quotient together with the projection of each base element.
struct HyperQuotient {
  SemiHyperring ring;
  /// Base element index -> coset index. Symbolic bases only list sampled elements.
  std::vector<Elem> projection;
  /// Representative (lowest index, or first sampled) of each coset.
  std::vector<Elem> representatives;
};

/// Throws PreconditionError unless g is closed, contains 1 and has inverses.
void check_subgroup(const FiniteSemiring& r, const std::vector<Elem>& g);
void check_subgroup(const SemiHyperring& h, const std::vector<Elem>& g);

/// R/G with [r] ⊞ [r'] = {[x + x'] : x in rG, x' in r'G}. R must be commutative.
HyperQuotient krasner_quotient(const FiniteSemiring& r, const std::vector<Elem>& g);

/// Symbolic version: cosets are discovered on the window and sums of
/// window elements are classified through solve_mul. Throws BoundExceeded
/// if a sum lands outside every sampled coset or more than 64 cosets appear.
HyperQuotient krasner_quotient(const Semiring& r, const ElemPredicate& in_g, Window w);

/// H/G with [a] ⊞ [a'] the cosets of every element of x ⊞ x', x in aG, x' in a'G.
HyperQuotient hyper_coset_quotient(const SemiHyperring& h, const std::vector<Elem>& g);

/// Bijection preserving zero, one, ⊞ and multiplication, found by search.
/// Throws BoundExceeded above 9 elements.
std::optional<std::vector<Elem>> find_isomorphism(const SemiHyperring& a, const SemiHyperring& b);

struct IteratedQuotient {
  HyperQuotient direct;   // H / G_hat
  HyperQuotient first;    // H / G
  HyperQuotient second;   // (H / G) / image of G_hat
  std::optional<std::vector<Elem>> isomorphism;  // direct -> second
};

/// Compares H/G_hat with (H/G)/G_hat for G inside G_hat.
IteratedQuotient iterated_quotient(const SemiHyperring& h, const std::vector<Elem>& g,
                                   const std::vector<Elem>& g_hat);

}  // namespace tpairs
