#pragma once

// Growth of affine extensions: filtrations W_k, the ranks
// d_k = [W_k : W_{k-1} + (W0)_k], Hilbert series, a finite-k estimate of the
// Gelfand-Kirillov dimension, and the left Ore witness search for semidomains.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpairs/pair.hpp"
#include "tpairs/polynomial.hpp"

namespace tpairs {

/// W_0 is taken to be 0, so d_1 = [W_1 : (W0)_1].
struct GrowthProfile {
  std::string description;
  unsigned k_max = 0;
  /// d[k - 1] = d_k.
  std::vector<std::size_t> d;
  /// cumulative[k - 1] = [W_k : (W0)_k].
  std::vector<std::size_t> cumulative;
  /// Number of spanning monomials (or elements) of W_k.
  std::vector<std::size_t> filtration_sizes;
  /// The computation stopped before k_max; only the computed prefix is filled.
  bool truncated = false;
};

using Word = std::vector<std::uint32_t>;

/// Monoid semialgebra A[X] over a pair with 1 outside A0, spanned freely by
/// the normal-form words of X. Multiplication of words is concatenation
/// followed by `normalize`, which returns nullopt for words that vanish.
/// For modules spanned by basis monomials, [M : N] is the number of
/// monomials of M outside N: a basis monomial can only be produced from
/// a generator proportional to itself.
struct MonomialAlgebra {
  std::string name;
  std::size_t letters = 0;
  std::function<std::optional<Word>(Word)> normalize;
};

/// Word monoid on t letters.
MonomialAlgebra free_monoid_algebra(std::size_t t);
/// Commutative monomials in t variables (letters sorted).
MonomialAlgebra polynomial_algebra(std::size_t t);
/// Commutative monomials of total degree < n; the rest vanish.
MonomialAlgebra truncated_polynomial_algebra(std::size_t t, std::size_t n);
/// Matrix units e_ij (letter i * n + j) with e_ij e_kl = δ_jk e_il.
MonomialAlgebra matrix_unit_algebra(std::size_t n);

std::string format_word(const Word& w);

/// V = Σ A g over the generator words, W_k = Σ_{i<=k} V^i, and likewise for
/// the W0 generators. Stops with `truncated` once W_k would hold more than
/// max_monomials words.
GrowthProfile growth_sequence(const MonomialAlgebra& alg, const std::vector<Word>& generators,
                              const std::vector<Word>& zero_generators, unsigned k_max,
                              std::size_t max_monomials = 1'000'000);

/// Same filtration on a finite semiring W regarded as a module over a finite
/// pair through `inclusion`; ranks come from the exhaustive rank search.
GrowthProfile growth_sequence(const FiniteSemiring& w, const PairPtr& base, const std::vector<Elem>& inclusion,
                              const std::vector<Elem>& generators, const std::vector<Elem>& zero_generators,
                              unsigned k_max);

/// Σ_{k>=1} d_k λ^k truncated at k_max.
struct HilbertSeries {
  std::vector<std::size_t> coefficients;  // d_1, ..., d_kmax
};

/// Throws PreconditionError if the profile is shorter than k_max.
HilbertSeries hilbert_series(const GrowthProfile& profile, unsigned k_max);

/// Coefficients of λ^1, ..., λ^kmax in 1 / (1 - λ)^t, i.e. C(k + t - 1, t - 1).
std::vector<std::size_t> polynomial_hilbert_coefficients(std::size_t t, unsigned k_max);

struct GkEstimate {
  /// Least-squares slope of log [W_k : (W0)_k] against log k over the top half.
  double value = 0.0;
  /// log_k [W_k : (W0)_k] still rises by more than 0.3 across the top half
  /// and the last ratio is at least 1.5: growth looks exponential.
  bool divergent = false;
  unsigned k_max = 0;
};

/// Needs k_max >= 4 (PreconditionError otherwise).
GkEstimate gk_dimension(const GrowthProfile& profile);

/// Smallest (m1, m2) <= max_m with d2_k <= m1 d_{m2 k} and d_k <= m2 d2_{m1 k}
/// wherever both indices are computed.
std::optional<std::pair<std::size_t, std::size_t>> growth_equivalence(const std::vector<std::size_t>& d,
                                                                      const std::vector<std::size_t>& d2,
                                                                      std::size_t max_m = 8);

struct OreWitness {
  Truth found = Truth::unknown;
  Elem b1 = 0;
  Elem b2 = 0;
  /// f = g λ1 + h λ2 with f(a1, a2) in A0.
  std::optional<std::pair<Polynomial, Polynomial>> gh;
  unsigned degree = 0;
  std::size_t searched = 0;
};

/// Searches g, h over `coeffs` (default: 1) in two variables by increasing
/// total degree of f = g λ1 + h λ2. Throws PreconditionError unless a1, a2
/// are tangible and regular.
OreWitness ore_witness(const SemiringPair& p, Elem a1, Elem a2, unsigned degree_bound,
                       std::vector<Elem> coeffs = {});

}  // namespace tpairs
