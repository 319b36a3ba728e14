#pragma once

// Polynomial pairs over a carrier pair, ⪯-roots, the twist substitution and
// geometric congruences on degree-bounded polynomial spaces.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpairs/congruence.hpp"
#include "tpairs/pair.hpp"
#include "tpairs/polynomial.hpp"

namespace tpairs {

enum class PolyA0Flavor { coeffwise, shallowized };
std::string to_string(PolyA0Flavor f);
PolyA0Flavor parse_poly_flavor(std::string_view text);

/// (A[Λ], A0[Λ]) with T_Λ the monomials carrying a tangible coefficient.
/// The shallowized flavor also puts every polynomial with two or more
/// terms into A0.
class PolynomialPair {
 public:
  PolynomialPair(PairPtr base, std::size_t nvars, PolyA0Flavor flavor)
      : base_(std::move(base)), nvars_(nvars), flavor_(flavor) {}

  [[nodiscard]] const PairPtr& base() const noexcept { return base_; }
  [[nodiscard]] const Semiring& carrier() const noexcept { return base_->carrier(); }
  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] PolyA0Flavor flavor() const noexcept { return flavor_; }

  [[nodiscard]] bool in_a0(const Polynomial& f) const;
  [[nodiscard]] bool in_t(const Polynomial& f) const;

 private:
  PairPtr base_;
  std::size_t nvars_;
  PolyA0Flavor flavor_;
};

PolynomialPair build_polynomial_pair(const PairPtr& p, std::size_t nvars, PolyA0Flavor flavor);

/// Every polynomial in nvars variables of total degree <= degree with
/// coefficients from `coeffs` (zero allowed and dropped). Throws
/// BoundExceeded when there would be more than max_count.
std::vector<Polynomial> polynomials_up_to(const Semiring& s, const std::vector<Elem>& coeffs,
                                          std::size_t nvars, unsigned degree,
                                          std::size_t max_count = 200000);

/// Admissibility of the polynomial pair restricted to `sample`: A0 closed
/// under + and *, T_Λ closed under *, A0 and T_Λ disjoint. Products and sums
/// are formed exactly, so they may leave the sample.
AxiomReport verify_polynomial_pair(const PolynomialPair& pp, const std::vector<Polynomial>& sample);

/// First sampled polynomial outside A0 u T_Λ.
std::optional<Polynomial> shallowness_counterexample(const PolynomialPair& pp,
                                                     const std::vector<Polynomial>& sample);

/// Every coefficient tangible; the zero polynomial is not tangible.
bool is_tangible_poly(const SemiringPair& p, const Polynomial& f);

/// Tuples of `domain` at which f takes a value in A0, in the order given.
std::vector<std::vector<Elem>> find_preceq_roots(const SemiringPair& p, const Polynomial& f,
                                                 const std::vector<std::vector<Elem>>& domain);

using PolyTwist = std::pair<Polynomial, Polynomial>;
using Point = std::vector<Elem>;

/// (f1, f2) at (z1, z2): (f1(z1) + f2(z2), f1(z2) + f2(z1)).
TwistElement twist_substitute(const Semiring& s, const PolyTwist& f, const Point& z1,
                              const Point& z2);

/// (f1 f3 + f2 f4, f1 f4 + f2 f3), the twist product of polynomial pairs.
PolyTwist poly_twist_product(const Semiring& s, const PolyTwist& a, const PolyTwist& b);
/// (f1∘f3 + f2∘f4, f1∘f4 + f2∘f3) for univariate f1, f2.
PolyTwist poly_twist_compose(const Semiring& s, const PolyTwist& a, const PolyTwist& b);

struct MixedAssociativity {
  TwistElement lhs;
  TwistElement rhs;
  [[nodiscard]] bool holds() const noexcept { return lhs == rhs; }
};

/// ((f1,f2) ⋆ (f3,f4)) at z against (f1,f2) at ((f3,f4) at z), with ⋆ the
/// composition twist. f1, f2 univariate; f3, f4 in the variables of z.
MixedAssociativity mixed_associativity(const Semiring& s, const PolyTwist& outer,
                                       const PolyTwist& inner, const Point& z1, const Point& z2);
/// Same with ⋆ the product twist; kept to show that this reading fails.
MixedAssociativity mixed_associativity_product(const Semiring& s, const PolyTwist& outer,
                                               const PolyTwist& inner, const Point& z1,
                                               const Point& z2);

/// A point pair (z1, z2) of A^(n) x A^(n).
using PointPair = std::pair<Point, Point>;

/// The pairs (f1, f2) of a degree-bounded space whose twist substitution
/// lands in A0 x A0 at every given point.
struct GeometricCongruence {
  std::vector<Polynomial> space;
  /// Index pairs into `space`, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> members;
  [[nodiscard]] bool contains(std::size_t i, std::size_t j) const;
};

GeometricCongruence geometric_congruence(const SemiringPair& p, const std::vector<PointPair>& points,
                                         const std::vector<Polynomial>& space);
/// Space = every polynomial over the finite carrier up to `degree`.
GeometricCongruence geometric_congruence(const SemiringPair& p, const std::vector<PointPair>& points,
                                         std::size_t nvars, unsigned degree);

/// (space[first], space[second]) is outside but its twist power is inside.
struct RadicalFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  unsigned power = 0;
};

struct RadicalCheck {
  bool radical = true;
  std::optional<RadicalFailure> counterexample;
  std::size_t checked = 0;
};

/// x ⋆ x ⋆ ... (m factors, product twist) satisfies the point condition
/// only if x does, for m <= max_power. Powers are formed exactly.
RadicalCheck check_geometric_radical(const SemiringPair& p, const std::vector<PointPair>& points,
                                     const GeometricCongruence& g, unsigned max_power = 3);

/// Diagonal-congruence semiprimality of the polynomial function pair,
/// by the element criterion restricted to polynomials of degree <= degree.
struct PolypairSemiprime {
  bool base_semiprime = false;
  bool function_semiprime = false;
  std::optional<TwistElement> base_witness;
  std::optional<PolyTwist> function_witness;
  std::size_t candidates = 0;
  /// A semiprime base yields a semiprime function pair.
  [[nodiscard]] bool consistent() const noexcept { return !base_semiprime || function_semiprime; }
};

PolypairSemiprime check_polypair_semiprime(const PairPtr& p, unsigned degree);

}  // namespace tpairs
