#pragma once

// Finite-support polynomials over a carrier, with convolution product,
// evaluation, composition and a plain-text literal syntax.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpairs/semiring.hpp"

namespace tpairs {

using Exponent = std::vector<std::uint32_t>;

/// Total degree first, then lexicographic on the exponent vector.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Formal polynomial. Zero coefficients are never stored, so the zero
/// polynomial has no terms.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Elem, MonomialOrder>;

  explicit Polynomial(std::size_t nvars = 1) : nvars_(nvars) {}

  static Polynomial constant(const Semiring& s, Elem c, std::size_t nvars = 1);
  static Polynomial monomial(const Semiring& s, Elem c, Exponent e);
  /// c * x_i^k in nvars variables.
  static Polynomial variable_power(const Semiring& s, Elem c, std::size_t nvars, std::size_t i,
                                   std::uint32_t k);

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total degree; 0 for constants and the zero polynomial.
  [[nodiscard]] unsigned degree() const;
  /// Coefficient of e, or s.zero() when absent.
  [[nodiscard]] Elem coeff(const Semiring& s, const Exponent& e) const;

  /// Adds c to the coefficient of e, dropping the term if it becomes zero.
  void add_term(const Semiring& s, const Exponent& e, Elem c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_;
  Terms terms_;
};

Polynomial poly_add(const Semiring& s, const Polynomial& f, const Polynomial& g);
/// Convolution product.
Polynomial poly_mul(const Semiring& s, const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Semiring& s, Elem c, const Polynomial& f);
/// Value at a point of matching length.
Elem poly_eval(const Semiring& s, const Polynomial& f, std::span<const Elem> point);
/// f(g) for univariate f; g may have any number of variables.
Polynomial poly_compose(const Semiring& s, const Polynomial& f, const Polynomial& g);

/// True when f and g take the same value at every point of `domain`.
bool functionally_equal(const Semiring& s, const Polynomial& f, const Polynomial& g,
                        const std::vector<std::vector<Elem>>& domain);

/// Every tuple of length m over `values`, in lexicographic order.
std::vector<std::vector<Elem>> cartesian_power(const std::vector<Elem>& values, std::size_t m);

/// Canonical text, highest term first: "2*x^2*y + 1v*x + 4". Unit
/// coefficients on non-constant terms are omitted; the zero polynomial is "0".
std::string format_polynomial(const Semiring& s, const Polynomial& f,
                              const std::vector<std::string>& vars);
/// Parses the format above; coefficients use the carrier's element syntax.
/// Throws ConfigError with the offending token on failure.
Polynomial parse_polynomial(const Semiring& s, std::string_view text,
                            const std::vector<std::string>& vars);

/// Default variable names: x for one variable, x1..xm otherwise.
std::vector<std::string> default_variables(std::size_t m);

}  // namespace tpairs
