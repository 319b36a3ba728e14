#pragma once

// Regular elements, the left Ore condition and left fractions s^-1 b.

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tpairs/errors.hpp"
#include "tpairs/pair.hpp"

namespace tpairs {

enum class RegularMode { left, right, preceq_left };
std::string to_string(RegularMode m);

struct Regularity {
  Truth regular = Truth::yes;
  /// (b1, b2) with b1 s = b2 s (or the preceq analogue) and b1 != b2.
  std::optional<std::pair<Elem, Elem>> witness;
  /// False when only the window sample was scanned.
  bool exhaustive = true;
};

/// Left: b1 s = b2 s implies b1 = b2. Right: s b1 = s b2 implies b1 = b2.
/// preceq_left: b1 s <= b2 s implies b1 <= b2.
Regularity check_regular(const SemiringPair& p, Elem s, RegularMode mode);

/// A multiplicative subset S of T and the search lists used for witnesses.
/// On finite carriers `s_sample` is all of S; on symbolic carriers it holds
/// the products of at most a few generators.
struct FractionContext {
  PairPtr base;
  ElemPredicate in_s;
  std::vector<Elem> s_sample;
  /// S commutes with every (sampled) element, which makes S automatically Ore.
  bool central = false;
};

/// Finite S given in full. Throws PreconditionError unless S lies in T,
/// contains 1, is multiplicatively closed and consists of regular elements.
FractionContext make_fraction_context(const PairPtr& p, const std::vector<Elem>& s);
/// Symbolic S given by a membership test and generators; the sample is every
/// product of at most max_products generators. Regularity is checked on the window.
FractionContext make_fraction_context(const PairPtr& p, ElemPredicate in_s,
                                      const std::vector<Elem>& generators, unsigned max_products = 3);

struct OreCheck {
  Truth holds = Truth::yes;
  bool central = false;
  /// (b, s) with no s' in S, b' in A such that s' b = b' s.
  std::optional<std::pair<Elem, Elem>> first_failure;
  /// (b1, b2, s) with b1 s = b2 s but no s' in S with s' b1 = s' b2.
  std::optional<std::tuple<Elem, Elem, Elem>> second_failure;
};

OreCheck check_ore(const FractionContext& ctx);

/// s^-1 b, stored unreduced.
struct Fraction {
  Elem num = 0;
  Elem den = 0;
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }
};

std::string format_fraction(const FractionContext& ctx, const Fraction& f);

struct Equivalence {
  Truth equivalent = Truth::no;
  /// (a1, a2) in T with a1 b1 = a2 b2 and a1 s1 = a2 s2 in S.
  std::optional<std::pair<Elem, Elem>> multipliers;
};

/// Searches all of T on finite carriers (verdict yes or no) and the sampled
/// tangibles and S elements on symbolic ones (verdict yes or unknown).
Equivalence frac_equiv(const FractionContext& ctx, const Fraction& x, const Fraction& y);

/// s with s = s' s1 = b' s2 in S, together with s' and b'.
struct CommonDenominator {
  Elem s = 0;
  Elem s_prime = 0;
  Elem b_prime = 0;
};

/// Throws BoundExceeded when no s' in the sample works.
CommonDenominator common_denominator(const FractionContext& ctx, Elem s1, Elem s2);

/// Rewrites both to the common denominator and adds numerators.
Fraction frac_add(const FractionContext& ctx, const Fraction& x, const Fraction& y);
/// s1^-1 b1 * s2^-1 b2 = (s' s1)^-1 (b' b2) where s' b1 = b' s2.
Fraction frac_mul(const FractionContext& ctx, const Fraction& x, const Fraction& y);

struct FractionPair {
  PairPtr pair;
  /// One representative per class, indexed like the carrier.
  std::vector<Fraction> representatives;
  /// Every tangible class has a multiplicative inverse.
  bool tangibles_invertible = false;
  /// b -> class of 1^-1 b.
  std::vector<Elem> embedding;
};

/// Finite carriers only: classes of A x S with operations from frac_add and
/// frac_mul. Throws ConsistencyError if the relation is not transitive or
/// the operations depend on representatives, and PreconditionError if the
/// Ore condition fails.
FractionPair build_fraction_pair(const FractionContext& ctx);

}  // namespace tpairs
