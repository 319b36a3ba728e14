#pragma once

// Finite module pairs (M, N) over a finite semiring pair, ⪯-bases, free
// module pairs and the rank [M : N].

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpairs/axiom_report.hpp"
#include "tpairs/pair.hpp"

namespace tpairs {

/// M is given by tables over its element indices; N is given by its image
/// φ(N) inside M, so φ is the inclusion.
class FiniteModule {
 public:
  using AddFn = std::function<Elem(Elem, Elem)>;
  using ActFn = std::function<Elem(Elem, Elem)>;  // (scalar, vector)

  FiniteModule(std::string name, PairPtr scalars, std::vector<std::string> labels, const AddFn& add,
               const ActFn& act, Elem zero, std::vector<Elem> n_image, std::vector<Elem> tangibles = {});

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const SemiringPair& scalars() const noexcept { return *scalars_; }
  [[nodiscard]] const PairPtr& scalars_ptr() const noexcept { return scalars_; }
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] Elem zero() const noexcept { return zero_; }
  [[nodiscard]] Elem add(Elem u, Elem v) const { return add_[idx(u) * size() + idx(v)]; }
  [[nodiscard]] Elem act(Elem a, Elem v) const { return act_[idx(a) * size() + idx(v)]; }
  [[nodiscard]] const std::string& label(Elem v) const { return labels_.at(idx(v)); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::vector<Elem> elements() const;
  [[nodiscard]] const std::vector<Elem>& n_image() const noexcept { return n_image_; }
  [[nodiscard]] bool in_n(Elem v) const { return n_mask_.at(idx(v)) != 0; }
  [[nodiscard]] const std::vector<Elem>& tangibles() const noexcept { return tangibles_; }
  /// u ⪯ v iff v = u + n for some n in φ(N).
  [[nodiscard]] bool preceq(Elem u, Elem v) const;
  /// Same module with another N.
  [[nodiscard]] FiniteModule with_n(std::vector<Elem> n_image) const;

 private:
  [[nodiscard]] static std::size_t idx(Elem e) { return static_cast<std::size_t>(e); }

  std::string name_;
  PairPtr scalars_;
  std::vector<std::string> labels_;
  std::vector<Elem> add_;
  std::vector<Elem> act_;
  Elem zero_;
  std::vector<Elem> n_image_;
  std::vector<char> n_mask_;
  std::vector<Elem> tangibles_;
};

/// Module axioms, N a submodule, A0 M inside φ(N); with `admissible` also
/// T_M stable under T, T_M u {0} additively spanning M, and T_M disjoint from N.
AxiomReport verify_module_pair(const FiniteModule& m, bool admissible = false);

/// (A^(n), A0^(n)) with T_M = {a e_i : a in T}. Elements are indexed in
/// mixed radix, first coordinate most significant. Needs a finite pair.
FiniteModule free_module_pair(const PairPtr& p, std::size_t n);
/// e_1, ..., e_n in a module built by free_module_pair.
std::vector<Elem> unit_vectors(const FiniteModule& free, std::size_t n);

/// A finite semiring W regarded as a module over a finite pair through an
/// injective homomorphism A -> W (left action). N is the given subset.
FiniteModule restrict_scalars(const FiniteSemiring& w, const PairPtr& base, const std::vector<Elem>& inclusion,
                              std::vector<Elem> n_image = {});

/// Sorted submodule generated by `gens` (always contains 0).
std::vector<Elem> submodule_span(const FiniteModule& m, const std::vector<Elem>& gens);

struct BaseCheck {
  bool spans = false;
  bool independent = false;
  /// First v with no sum Σ a_i s_i ⪯ v.
  std::optional<Elem> span_failure;
  /// Coefficient tuples a, a' with Σ a_i s_i ⪯ Σ a'_i s_i but some a_i not ⪯ a'_i.
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> independence_failure;
  [[nodiscard]] bool is_base() const noexcept { return spans && independent; }
};

/// Exhaustive over coefficient tuples; throws BoundExceeded above max_tuples.
BaseCheck base_check(const FiniteModule& m, const std::vector<Elem>& s, std::size_t max_tuples = 4096);

struct RankResult {
  /// Empty when the search stopped at the bound.
  std::optional<std::size_t> rank;
  /// Every size below this one was ruled out.
  std::size_t lower_bound = 0;
  std::size_t subsets_checked = 0;
};

/// [sub_m : sub_n], the fewest elements that generate sub_m together with
/// sub_n. Both are submodules of m given as element lists. Subsets are tried
/// by increasing size up to max_generators.
RankResult module_rank(const FiniteModule& m, const std::vector<Elem>& sub_m, const std::vector<Elem>& sub_n,
                       std::size_t max_generators = 6, std::size_t max_subsets = 2'000'000);

/// Σ a_i e_i -> Σ a_i y_i from a free module pair into `target`.
std::vector<Elem> induced_morphism(const FiniteModule& free, std::size_t n, const FiniteModule& target,
                                   const std::vector<Elem>& images);

/// Maps f : source -> target that are additive, A-linear, send N into N and
/// send each fixed[i].first to fixed[i].second, counted by backtracking up
/// to `limit`.
std::size_t count_pair_morphisms(const FiniteModule& source, const FiniteModule& target,
                                 const std::vector<std::pair<Elem, Elem>>& fixed, std::size_t limit = 2);

}  // namespace tpairs
