#pragma once

// Extensions of pairs, integral / algebraic / congruence-algebraic elements,
// and negated determinants of small matrices.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tpairs/axiom_report.hpp"
#include "tpairs/errors.hpp"
#include "tpairs/pair.hpp"
#include "tpairs/polynomial.hpp"

namespace tpairs {

/// (A, A0) sitting inside (W, W0). The base is a finite list of W elements;
/// A0 and T are its intersections with W0 and T_W unless given explicitly.
struct Extension {
  PairPtr ext;
  std::vector<Elem> base;
  std::vector<Elem> base_a0;
  std::vector<Elem> base_t;
  /// Distinguished element (the adjoined variable for polynomial extensions).
  std::optional<Elem> generator;
};

/// Base given by W elements.
Extension subpair_extension(const PairPtr& w, const std::vector<Elem>& base);
/// Base given by a finite pair and an injective inclusion into W.
Extension inclusion_extension(const PairPtr& a, const PairPtr& w, const std::vector<Elem>& inclusion);

/// Base closed under + and *, containing 0 and 1; T of the base inside T_W;
/// A0 W inside W0 ("W0 = A0 W" reported separately on finite W); centralizing
/// (a w = w a for a in T, w sampled).
AxiomReport verify_extension(const Extension& e);

/// A[λ] as a symbolic carrier: polynomials are interned on first use.
class PolynomialSemiring final : public Semiring {
 public:
  /// `sample_degree` bounds the polynomials listed by elements().
  PolynomialSemiring(SemiringPtr base, std::vector<Elem> sample_coeffs, unsigned sample_degree);

  [[nodiscard]] std::string name() const override { return base_->name() + "[x]"; }
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] Elem zero() const override;
  [[nodiscard]] Elem one() const override;
  [[nodiscard]] Elem add(Elem a, Elem b) const override;
  [[nodiscard]] Elem mul(Elem a, Elem b) const override;
  [[nodiscard]] std::vector<Elem> elements(Window w) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  [[nodiscard]] bool commutative() const override { return base_->commutative(); }

  [[nodiscard]] Elem intern(const Polynomial& f) const;
  [[nodiscard]] Polynomial poly(Elem e) const;
  [[nodiscard]] const Semiring& base() const noexcept { return *base_; }

 private:
  SemiringPtr base_;
  std::vector<Elem> sample_coeffs_;
  unsigned sample_degree_;
  mutable std::mutex mutex_;
  mutable std::map<Polynomial, Elem> index_;
  mutable std::vector<Polynomial> polys_;
};

/// (A[λ], A0[λ]) with T the monomials with tangible coefficient, surpassing
/// decided coefficientwise by the base relation. The base is the constants
/// and the generator is λ. The window sample holds every polynomial of degree
/// <= sample_degree over the base sample.
Extension polynomial_extension(const PairPtr& base, unsigned sample_degree = 1);

struct ElementRelation {
  /// yes: a relation was found; unknown: none up to the bound.
  Truth found = Truth::unknown;
  unsigned degree = 0;
  /// a_0, ..., a_{n-1} (integral) or a_0, ..., a_n (algebraic).
  std::vector<Elem> coefficients;
  std::size_t searched = 0;
};

/// Smallest n <= degree_bound with a_0 + a_1 y + ... + a_{n-1} y^{n-1} <= y^n,
/// coefficients from the base (or its T when tangible_only).
ElementRelation is_integral(const Extension& e, Elem y, unsigned degree_bound, bool tangible_only = false);

/// Smallest n <= degree_bound with a_0 + ... + a_n y^n in W0 and a_n outside
/// A0, so that the relation does not follow from A0 W inside W0.
ElementRelation is_algebraic(const Extension& e, Elem y, unsigned degree_bound);

/// y^n + sum a_i y^i, the polynomial of an integral relation, evaluated at y.
Elem integral_relation_value(const Extension& e, Elem y, const ElementRelation& r);

/// Drops the A0 coefficients of s = sum b_i y^i and reports whether the
/// tangible part alone still equals s.
bool tangible_part_suffices(const Extension& e, Elem y, const std::vector<Elem>& coefficients);

struct CongruenceAlgebraic {
  /// yes: certificate found; unknown: transcendental up to the bound.
  Truth algebraic = Truth::unknown;
  /// (f1, f2, b) with f2(y) <= f1(y) but not f2(b) <= f1(b).
  std::optional<std::tuple<Polynomial, Polynomial, Elem>> certificate;
  std::size_t pairs_checked = 0;
};

/// Scans f1, f2 with base coefficients up to degree_bound and every base b.
CongruenceAlgebraic is_congruence_algebraic(const Extension& e, Elem y, unsigned degree_bound,
                                            std::size_t max_pairs = 2'000'000);

using PairMatrix = std::vector<std::vector<Elem>>;

/// Sum over permutations of the product c_{1 π(1)} ... c_{n π(n)}, negated
/// for odd π. n <= 4. Throws PreconditionError without a negation map.
Elem negated_determinant(const SemiringPair& p, const PairMatrix& m);
/// Transpose of the signed cofactor matrix.
PairMatrix negated_adjoint(const SemiringPair& p, const PairMatrix& m);
PairMatrix matrix_product(const Semiring& s, const PairMatrix& a, const PairMatrix& b);

}  // namespace tpairs
