#pragma once

// Carrier representations: finite table-based semirings and a few symbolic
// infinite carriers sampled on an integer window.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpairs/axiom_report.hpp"

namespace tpairs {

/// Carrier-relative element handle. For finite carriers this is the table
/// index; symbolic carriers define their own encoding.
using Elem = std::int64_t;

/// Sampling bound for symbolic carriers: integer parameters in [-radius, radius].
struct Window {
  std::int64_t radius = 50;
};

/// Window from TPAIRS_WINDOW, falling back to radius 50.
Window default_window();

class Semiring {
 public:
  virtual ~Semiring() = default;

  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual bool is_finite() const = 0;
  [[nodiscard]] virtual Elem zero() const = 0;
  [[nodiscard]] virtual Elem one() const = 0;
  [[nodiscard]] virtual Elem add(Elem a, Elem b) const = 0;
  [[nodiscard]] virtual Elem mul(Elem a, Elem b) const = 0;
  /// Every element (finite carriers) or every element inside the window, in
  /// canonical order.
  [[nodiscard]] virtual std::vector<Elem> elements(Window w) const = 0;
  [[nodiscard]] virtual std::string format(Elem e) const = 0;
  [[nodiscard]] virtual std::optional<Elem> parse(std::string_view text) const = 0;
  /// Some g with x*g == y if the carrier can produce one directly.
  [[nodiscard]] virtual std::optional<Elem> solve_mul(Elem x, Elem y) const;
  /// True when multiplication is known to commute on the whole carrier.
  [[nodiscard]] virtual bool commutative() const = 0;

  [[nodiscard]] Elem pow(Elem base, unsigned exponent) const;
  [[nodiscard]] Elem sum(std::span<const Elem> terms) const;
  [[nodiscard]] std::vector<std::string> format_all(std::span<const Elem> es) const;
  /// parse() that throws ConfigError naming the carrier on failure.
  [[nodiscard]] Elem parse_or_throw(std::string_view text) const;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// A semiring given by addition and multiplication tables over labelled
/// elements. Construction validates shape and index ranges only; the axioms
/// are checked separately by verify_semiring_axioms.
class FiniteSemiring final : public Semiring {
 public:
  using Table = std::vector<std::vector<Elem>>;

  FiniteSemiring(std::string name, std::vector<std::string> labels, const Table& add,
                 const Table& mul, Elem zero, Elem one);

  /// Tabulate binary operations given as functions on indices.
  static FiniteSemiring tabulate(std::string name, std::vector<std::string> labels,
                                 const std::function<Elem(Elem, Elem)>& add,
                                 const std::function<Elem(Elem, Elem)>& mul, Elem zero,
                                 Elem one);

  [[nodiscard]] std::string name() const override { return name_; }
  [[nodiscard]] bool is_finite() const override { return true; }
  [[nodiscard]] Elem zero() const override { return zero_; }
  [[nodiscard]] Elem one() const override { return one_; }
  [[nodiscard]] Elem add(Elem a, Elem b) const override {
    return add_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)];
  }
  [[nodiscard]] Elem mul(Elem a, Elem b) const override {
    return mul_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)];
  }
  [[nodiscard]] std::vector<Elem> elements(Window = {}) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  [[nodiscard]] std::optional<Elem> solve_mul(Elem x, Elem y) const override;
  [[nodiscard]] bool commutative() const override { return commutative_; }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(Elem e) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  Elem zero_;
  Elem one_;
  bool commutative_;
};

using FiniteSemiringPtr = std::shared_ptr<const FiniteSemiring>;

// ---------------------------------------------------------------------------
// Symbolic carriers

/// Which integers a symbolic carrier ranges over.
enum class Domain { integers, naturals };

/// Max-plus semiring Z_max or N_max: addition is max, multiplication is +,
/// zero is -inf (encoded as the minimum int64), one is 0.
class MaxPlusSemiring final : public Semiring {
 public:
  static constexpr Elem kNegInf = INT64_MIN;

  explicit MaxPlusSemiring(Domain domain) : domain_(domain) {}

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] Elem zero() const override { return kNegInf; }
  [[nodiscard]] Elem one() const override { return 0; }
  [[nodiscard]] Elem add(Elem a, Elem b) const override;
  [[nodiscard]] Elem mul(Elem a, Elem b) const override;
  [[nodiscard]] std::vector<Elem> elements(Window w) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  [[nodiscard]] std::optional<Elem> solve_mul(Elem x, Elem y) const override;
  [[nodiscard]] bool commutative() const override { return true; }
  [[nodiscard]] Domain domain() const noexcept { return domain_; }

 private:
  Domain domain_;
};

/// (N, +, *) with ordinary arithmetic; overflow throws std::overflow_error.
class NaturalSemiring final : public Semiring {
 public:
  [[nodiscard]] std::string name() const override { return "nat_plus_times"; }
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] Elem zero() const override { return 0; }
  [[nodiscard]] Elem one() const override { return 1; }
  [[nodiscard]] Elem add(Elem a, Elem b) const override;
  [[nodiscard]] Elem mul(Elem a, Elem b) const override;
  [[nodiscard]] std::vector<Elem> elements(Window w) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  [[nodiscard]] std::optional<Elem> solve_mul(Elem x, Elem y) const override;
  [[nodiscard]] bool commutative() const override { return true; }
};

/// Nonnegative rationals with ordinary + and *. Elements are packed as
/// numerator << 32 | denominator in lowest terms; both parts must fit in 31 bits.
class RationalSemiring final : public Semiring {
 public:
  static Elem make(std::int64_t num, std::int64_t den);
  static std::int64_t numerator(Elem e) noexcept { return e >> 32; }
  static std::int64_t denominator(Elem e) noexcept { return e & 0xffffffffLL; }

  [[nodiscard]] std::string name() const override { return "rational_nonneg"; }
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] Elem zero() const override { return make(0, 1); }
  [[nodiscard]] Elem one() const override { return make(1, 1); }
  [[nodiscard]] Elem add(Elem a, Elem b) const override;
  [[nodiscard]] Elem mul(Elem a, Elem b) const override;
  /// p/q with 0 <= p <= radius and 1 <= q <= min(radius, 12).
  [[nodiscard]] std::vector<Elem> elements(Window w) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  [[nodiscard]] std::optional<Elem> solve_mul(Elem x, Elem y) const override;
  [[nodiscard]] bool commutative() const override { return true; }
};

/// Supertropical semiring over the ordered group (Z, +) or monoid (N, +):
/// tangible levels, ghost levels and -inf. Tangible a encodes as 2a, the
/// ghost a^nu as 2a + 1, zero as the minimum int64.
class SupertropicalSemiring final : public Semiring {
 public:
  static constexpr Elem kZero = INT64_MIN;

  explicit SupertropicalSemiring(Domain domain) : domain_(domain) {}

  static Elem tangible(std::int64_t level) noexcept { return 2 * level; }
  static Elem ghost(std::int64_t level) noexcept { return 2 * level + 1; }
  static bool is_ghost(Elem e) noexcept { return e != kZero && (e & 1) != 0; }
  static bool is_tangible(Elem e) noexcept { return e != kZero && (e & 1) == 0; }
  /// Level of a nonzero element (floor division by two).
  static std::int64_t level(Elem e) noexcept { return e >> 1; }

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] Elem zero() const override { return kZero; }
  [[nodiscard]] Elem one() const override { return tangible(0); }
  [[nodiscard]] Elem add(Elem a, Elem b) const override;
  [[nodiscard]] Elem mul(Elem a, Elem b) const override;
  /// Zero, then tangible and ghost levels in the window, interleaved by level.
  [[nodiscard]] std::vector<Elem> elements(Window w) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  /// Prefers a tangible factor when both a tangible and a ghost one work.
  [[nodiscard]] std::optional<Elem> solve_mul(Elem x, Elem y) const override;
  [[nodiscard]] bool commutative() const override { return true; }
  [[nodiscard]] Domain domain() const noexcept { return domain_; }

 private:
  Domain domain_;
};

// ---------------------------------------------------------------------------
// Axiom verification

/// Exhaustive check over all triples: commutative additive monoid,
/// multiplicative monoid, absorbing zero, both distributive laws.
AxiomReport verify_semiring_axioms(const FiniteSemiring& s);

/// Same axioms on the window: exhaustive when the window has at most
/// `max_triples` triples, otherwise that many seeded random triples.
AxiomReport verify_semiring_axioms(const Semiring& s, Window w,
                                   std::size_t max_triples = 300000);

// ---------------------------------------------------------------------------
// Named carriers

enum class NamedKind { boolean, nmax_trunc, zmax_symbolic, nat_plus_times };

struct NamedSemiring {
  NamedKind kind = NamedKind::boolean;
  int n = 0;  // truncation level for nmax_trunc
};

/// Parses "boolean", "nmax_trunc(3)", "zmax_symbolic", "nat_plus_times".
NamedSemiring parse_named(std::string_view text);
SemiringPtr build_named(const NamedSemiring& named);

/// B = {0, 1} with 1 + 1 = 1.
FiniteSemiringPtr boolean_semiring();
/// {-inf, 0, ..., n} with max and addition saturating at n.
FiniteSemiringPtr truncated_nmax(int n);
/// Z/nZ with its ring operations (a field when n is prime).
FiniteSemiringPtr integers_mod(int n);
/// Chain 0 < e < 1 with max as addition and min as multiplication.
FiniteSemiringPtr three_chain();
/// n x n matrices over a finite semiring; upper-triangular only if requested.
FiniteSemiringPtr matrix_semiring(const FiniteSemiring& base, int n, bool upper_triangular);
/// Pointwise k-fold power A^k.
FiniteSemiringPtr power_semiring(const FiniteSemiring& base, int k);

/// Tuple helpers shared by constructions that index product carriers.
std::vector<Elem> decode_tuple(Elem index, std::size_t base, std::size_t length);
Elem encode_tuple(std::span<const Elem> digits, std::size_t base);

}  // namespace tpairs
