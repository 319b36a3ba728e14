#pragma once

// Semiring pairs (A, A0) with a tangible monoid T and a surpassing relation,
// plus the named constructions (doubling, supertropical extension, ...).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpairs/errors.hpp"
#include "tpairs/semiring.hpp"

namespace tpairs {

enum class SurpassKind { precedes_zero, subset_inclusion, custom };

std::string to_string(SurpassKind k);

using ElemPredicate = std::function<bool(Elem)>;
using ElemRelation = std::function<bool(Elem, Elem)>;
using ElemMap = std::function<Elem(Elem)>;

/// Everything needed to assemble a pair. Finite carriers may leave the
/// predicates empty and give explicit lists instead.
struct PairSpec {
  std::string name;
  SemiringPtr carrier;
  ElemPredicate in_a0;
  ElemPredicate in_t;
  std::vector<Elem> a0_list;  // finite carriers: explicit A0
  std::vector<Elem> t_list;   // finite carriers: explicit T
  SurpassKind surpass = SurpassKind::precedes_zero;
  ElemRelation relation;       // subset_inclusion / custom evaluator
  ElemRelation exact_preceq0;  // optional exact decision of <=_0 on symbolic carriers
  std::optional<ElemMap> negation;
  Window window = default_window();
  /// Symbolic carriers: T u {0} spans A by construction.
  bool spanning_by_construction = false;
};

/// A T-semiring pair. phi is always the identity inclusion A0 -> A.
/// Immutable after construction.
class SemiringPair {
 public:
  explicit SemiringPair(PairSpec spec);

  [[nodiscard]] const std::string& name() const noexcept { return spec_.name; }
  [[nodiscard]] const Semiring& carrier() const noexcept { return *spec_.carrier; }
  [[nodiscard]] const SemiringPtr& carrier_ptr() const noexcept { return spec_.carrier; }
  /// Non-null when the carrier is a FiniteSemiring.
  [[nodiscard]] const FiniteSemiring* finite() const noexcept { return finite_; }
  [[nodiscard]] bool is_finite() const noexcept { return finite_ != nullptr; }
  [[nodiscard]] Window window() const noexcept { return spec_.window; }
  [[nodiscard]] SurpassKind surpass_kind() const noexcept { return spec_.surpass; }
  [[nodiscard]] bool spanning_by_construction() const noexcept {
    return spec_.spanning_by_construction;
  }

  [[nodiscard]] bool in_a0(Elem e) const;
  [[nodiscard]] bool in_t(Elem e) const;

  /// All carrier elements (finite) or the window sample (symbolic).
  [[nodiscard]] const std::vector<Elem>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<Elem>& a0_elements() const noexcept { return a0_; }
  [[nodiscard]] const std::vector<Elem>& tangibles() const noexcept { return t_; }

  /// b1 <= b2 in the pair's surpassing relation. On symbolic carriers <=_0
  /// without an exact decider searches A0 inside the window and answers
  /// yes or unknown.
  [[nodiscard]] Truth surpasses(Elem b1, Elem b2) const;
  /// surpasses() for finite pairs, where the answer is always decided.
  [[nodiscard]] bool preceq(Elem b1, Elem b2) const;
  /// Some y in A0 with b2 = b1 + y, searched in canonical order.
  [[nodiscard]] std::optional<Elem> preceq0_witness(Elem b1, Elem b2) const;

  [[nodiscard]] bool has_negation() const noexcept { return spec_.negation.has_value(); }
  /// The built-in negation map; throws PreconditionError when absent.
  [[nodiscard]] Elem negate(Elem e) const;
  [[nodiscard]] const std::optional<ElemMap>& negation() const noexcept { return spec_.negation; }

  [[nodiscard]] std::string format(Elem e) const { return carrier().format(e); }
  [[nodiscard]] std::string format_set(const std::vector<Elem>& es) const;

  /// Same pair with a different negation map (used once a map is derived).
  [[nodiscard]] std::shared_ptr<const SemiringPair> with_negation(ElemMap neg) const;
  [[nodiscard]] const PairSpec& spec() const noexcept { return spec_; }

 private:
  PairSpec spec_;
  const FiniteSemiring* finite_ = nullptr;
  std::vector<char> a0_mask_;
  std::vector<char> t_mask_;
  std::vector<Elem> elements_;
  std::vector<Elem> a0_;
  std::vector<Elem> t_;
  std::vector<char> preceq_matrix_;  // finite carriers only
};

using PairPtr = std::shared_ptr<const SemiringPair>;

// ---------------------------------------------------------------------------
// Constructions

/// Pair on a finite carrier given by element labels for A0 and T.
PairPtr finite_pair(std::string name, FiniteSemiringPtr carrier, const std::vector<Elem>& a0,
                    const std::vector<Elem>& t);

/// (B, {0}, {1}).
PairPtr boolean_pair();

/// Doubling: A x A with componentwise addition and twist multiplication,
/// A0 the diagonal, T = (A\0 x 0) u (0 x A\0), native negation the swap.
/// Finite element (i, j) has index i * n + j.
PairPtr double_pair(const FiniteSemiringPtr& base);
/// Doubling of a symbolic carrier; pairs are interned on first use.
PairPtr double_pair(const SemiringPtr& base);

/// Totally ordered monoid for the supertropical extension. `rank[i]` orders
/// the elements (smaller rank is smaller); an empty rank means no order.
struct OrderedMonoid {
  std::string name;
  std::vector<std::string> labels;
  FiniteSemiring::Table mul;
  Elem unit = 0;
  std::vector<int> rank;
};

OrderedMonoid trivial_monoid();
/// {0, 1, ..., n} under addition saturating at n, in the natural order.
/// Not strictly ordered, so supertropical_extension rejects it.
OrderedMonoid truncated_nat_monoid(int n);

/// Supertropical extension T u T^nu u {0}. Carrier order: zero, the
/// tangibles, then the ghosts, each in monoid order. Native negation is the identity.
/// Needs a < b to imply ac < bc and ca < cb; otherwise distributivity fails.
PairPtr supertropical_extension(const OrderedMonoid& t);
/// Symbolic supertropical Z or N.
PairPtr supertropical_pair(Domain domain, Window window = default_window());

/// (N, {0}, N \ {0}) with ordinary arithmetic.
PairPtr natural_pair(Window window = default_window());

/// Max-plus carrier with A0 = {-inf} and T the finite values.
PairPtr maxplus_pair(Domain domain, Window window = default_window());

/// Pair on (Q>=0, +, *) with A0 = {0}.
PairPtr rational_pair(Window window = default_window());

/// Interning wrapper for the doubled symbolic carrier.
class DoubledSemiring final : public Semiring {
 public:
  explicit DoubledSemiring(SemiringPtr base) : base_(std::move(base)) {}

  [[nodiscard]] std::string name() const override { return "double(" + base_->name() + ")"; }
  [[nodiscard]] bool is_finite() const override { return false; }
  [[nodiscard]] Elem zero() const override { return intern(base_->zero(), base_->zero()); }
  [[nodiscard]] Elem one() const override { return intern(base_->one(), base_->zero()); }
  [[nodiscard]] Elem add(Elem a, Elem b) const override;
  [[nodiscard]] Elem mul(Elem a, Elem b) const override;
  [[nodiscard]] std::vector<Elem> elements(Window w) const override;
  [[nodiscard]] std::string format(Elem e) const override;
  [[nodiscard]] std::optional<Elem> parse(std::string_view text) const override;
  [[nodiscard]] bool commutative() const override { return base_->commutative(); }

  [[nodiscard]] Elem intern(Elem x, Elem y) const;
  [[nodiscard]] std::pair<Elem, Elem> components(Elem e) const;
  [[nodiscard]] const Semiring& base() const noexcept { return *base_; }

 private:
  SemiringPtr base_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Elem, Elem>, Elem> index_;
  mutable std::vector<std::pair<Elem, Elem>> pairs_;
};

}  // namespace tpairs
