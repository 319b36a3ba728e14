#include "tpairs/fractions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tpairs {

namespace {

// Some g with g * x == y.
std::optional<Elem> solve_left(const SemiringPair& p, Elem x, Elem y) {
  const auto& s = p.carrier();
  if (p.is_finite()) {
    for (Elem g : p.elements()) {
      if (s.mul(g, x) == y) return g;
    }
    return std::nullopt;
  }
  if (!s.commutative()) return std::nullopt;
  auto g = s.solve_mul(x, y);
  if (g && s.mul(*g, x) == y) return g;
  return std::nullopt;
}

std::vector<Elem> multiplier_candidates(const FractionContext& ctx) {
  std::vector<Elem> out = ctx.base->tangibles();
  if (!ctx.base->is_finite()) {
    for (Elem s : ctx.s_sample) {
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

bool is_central(const SemiringPair& p, const std::vector<Elem>& s_elems) {
  if (p.carrier().commutative()) return true;
  if (!p.is_finite()) return false;
  const auto& s = p.carrier();
  for (Elem x : s_elems) {
    for (Elem a : p.elements()) {
      if (s.mul(x, a) != s.mul(a, x)) return false;
    }
  }
  return true;
}

void require_regular(const SemiringPair& p, Elem s) {
  for (auto mode : {RegularMode::left, RegularMode::right}) {
    const auto r = check_regular(p, s, mode);
    if (r.regular == Truth::no) {
      throw PreconditionError("element " + p.format(s) + " of S is not " + to_string(mode) + " regular");
    }
  }
}

}  // namespace

std::string to_string(RegularMode m) {
  switch (m) {
    case RegularMode::left:
      return "left";
    case RegularMode::right:
      return "right";
    case RegularMode::preceq_left:
      return "preceq_left";
  }
  return "left";
}

Regularity check_regular(const SemiringPair& p, Elem s, RegularMode mode) {
  if (!p.in_t(s)) throw PreconditionError("regularity is defined for tangible elements; got " + p.format(s));
  const auto& c = p.carrier();
  Regularity out;
  out.exhaustive = p.is_finite();
  const auto& elems = p.elements();
  for (Elem b1 : elems) {
    for (Elem b2 : elems) {
      if (b1 == b2) continue;
      bool bad = false;
      switch (mode) {
        case RegularMode::left:
          bad = c.mul(b1, s) == c.mul(b2, s);
          break;
        case RegularMode::right:
          bad = c.mul(s, b1) == c.mul(s, b2);
          break;
        case RegularMode::preceq_left:
          bad = p.surpasses(c.mul(b1, s), c.mul(b2, s)) == Truth::yes &&
                p.surpasses(b1, b2) == Truth::no;
          break;
      }
      if (bad) {
        out.regular = Truth::no;
        out.witness = std::pair{b1, b2};
        return out;
      }
    }
  }
  return out;
}

FractionContext make_fraction_context(const PairPtr& p, const std::vector<Elem>& s) {
  if (!p->is_finite()) throw PreconditionError("an explicit S needs a finite carrier");
  const auto& c = p->carrier();
  std::set<Elem> members(s.begin(), s.end());
  if (!members.count(c.one())) throw PreconditionError("S must contain 1");
  for (Elem x : members) {
    if (!p->in_t(x)) throw PreconditionError("S must lie in T; " + p->format(x) + " does not");
    for (Elem y : members) {
      if (!members.count(c.mul(x, y))) {
        throw PreconditionError("S is not multiplicatively closed: " + p->format(x) + " * " + p->format(y));
      }
    }
    require_regular(*p, x);
  }
  FractionContext ctx;
  ctx.base = p;
  ctx.in_s = [members](Elem e) { return members.count(e) > 0; };
  ctx.s_sample.push_back(c.one());
  for (Elem x : members) {
    if (x != c.one()) ctx.s_sample.push_back(x);
  }
  ctx.central = is_central(*p, ctx.s_sample);
  return ctx;
}

FractionContext make_fraction_context(const PairPtr& p, ElemPredicate in_s,
                                      const std::vector<Elem>& generators, unsigned max_products) {
  const auto& c = p->carrier();
  std::set<Elem> layer{c.one()};
  std::set<Elem> all = layer;
  for (unsigned k = 0; k < max_products; ++k) {
    std::set<Elem> next;
    for (Elem x : layer) {
      for (Elem g : generators) next.insert(c.mul(x, g));
    }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  for (Elem x : all) {
    if (!in_s(x)) throw PreconditionError("generated element " + p->format(x) + " is not in S");
    if (!p->in_t(x)) throw PreconditionError("S must lie in T; " + p->format(x) + " does not");
    require_regular(*p, x);
  }
  FractionContext ctx;
  ctx.base = p;
  ctx.in_s = std::move(in_s);
  ctx.s_sample.push_back(c.one());
  for (Elem x : all) {
    if (x != c.one()) ctx.s_sample.push_back(x);
  }
  ctx.central = is_central(*p, ctx.s_sample);
  return ctx;
}

OreCheck check_ore(const FractionContext& ctx) {
  OreCheck out;
  out.central = ctx.central;
  if (ctx.central) return out;
  const auto& p = *ctx.base;
  const auto& c = p.carrier();
  const Truth miss = p.is_finite() ? Truth::no : Truth::unknown;
  for (Elem b : p.elements()) {
    for (Elem s : ctx.s_sample) {
      const bool found = std::any_of(ctx.s_sample.begin(), ctx.s_sample.end(), [&](Elem sp) {
        return solve_left(p, s, c.mul(sp, b)).has_value();
      });
      if (!found) {
        out.holds = miss;
        out.first_failure = std::pair{b, s};
        return out;
      }
    }
  }
  for (Elem s : ctx.s_sample) {
    for (Elem b1 : p.elements()) {
      for (Elem b2 : p.elements()) {
        if (b1 == b2 || c.mul(b1, s) != c.mul(b2, s)) continue;
        const bool found = std::any_of(ctx.s_sample.begin(), ctx.s_sample.end(),
                                       [&](Elem sp) { return c.mul(sp, b1) == c.mul(sp, b2); });
        if (!found) {
          out.holds = miss;
          out.second_failure = std::tuple{b1, b2, s};
          return out;
        }
      }
    }
  }
  return out;
}

std::string format_fraction(const FractionContext& ctx, const Fraction& f) {
  const auto& p = *ctx.base;
  if (f.den == p.carrier().one()) return p.format(f.num);
  return p.format(f.num) + "/" + p.format(f.den);
}

Equivalence frac_equiv(const FractionContext& ctx, const Fraction& x, const Fraction& y) {
  const auto& p = *ctx.base;
  const auto& c = p.carrier();
  Equivalence out;
  for (Elem a1 : multiplier_candidates(ctx)) {
    const Elem target = c.mul(a1, x.den);
    if (!ctx.in_s(target)) continue;
    const Elem left = c.mul(a1, x.num);
    if (p.is_finite()) {
      for (Elem a2 : p.tangibles()) {
        if (c.mul(a2, y.den) == target && c.mul(a2, y.num) == left) {
          out.equivalent = Truth::yes;
          out.multipliers = std::pair{a1, a2};
          return out;
        }
      }
      continue;
    }
    const auto a2 = solve_left(p, y.den, target);
    if (a2 && p.in_t(*a2) && c.mul(*a2, y.num) == left) {
      out.equivalent = Truth::yes;
      out.multipliers = std::pair{a1, *a2};
      return out;
    }
  }
  out.equivalent = p.is_finite() ? Truth::no : Truth::unknown;
  return out;
}

CommonDenominator common_denominator(const FractionContext& ctx, Elem s1, Elem s2) {
  const auto& p = *ctx.base;
  const auto& c = p.carrier();
  for (Elem sp : ctx.s_sample) {
    const Elem s = c.mul(sp, s1);
    if (!ctx.in_s(s)) continue;
    if (auto bp = solve_left(p, s2, s)) return {s, sp, *bp};
  }
  throw BoundExceeded("no common denominator for " + p.format(s1) + " and " + p.format(s2) +
                      " among " + std::to_string(ctx.s_sample.size()) + " sampled elements of S");
}

Fraction frac_add(const FractionContext& ctx, const Fraction& x, const Fraction& y) {
  const auto& c = ctx.base->carrier();
  const auto cd = common_denominator(ctx, x.den, y.den);
  return {c.add(c.mul(cd.s_prime, x.num), c.mul(cd.b_prime, y.num)), cd.s};
}

Fraction frac_mul(const FractionContext& ctx, const Fraction& x, const Fraction& y) {
  const auto& p = *ctx.base;
  const auto& c = p.carrier();
  for (Elem sp : ctx.s_sample) {
    if (auto bp = solve_left(p, y.den, c.mul(sp, x.num))) {
      return {c.mul(*bp, y.num), c.mul(sp, x.den)};
    }
  }
  throw BoundExceeded("no s' with s' b1 = b' s2 for " + format_fraction(ctx, x) + " * " +
                      format_fraction(ctx, y));
}

FractionPair build_fraction_pair(const FractionContext& ctx) {
  const auto& p = *ctx.base;
  if (!p.is_finite()) throw PreconditionError("fraction pair tables need a finite carrier");
  const auto ore = check_ore(ctx);
  if (ore.holds != Truth::yes) throw PreconditionError("the Ore condition fails for S");

  std::vector<Fraction> all;
  for (Elem s : ctx.s_sample) {
    for (Elem b : p.elements()) all.push_back({b, s});
  }
  if (all.size() > 96) throw BoundExceeded("A x S has " + std::to_string(all.size()) + " elements, above 96");

  const std::size_t n = all.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<char> related(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      related[i * n + j] = frac_equiv(ctx, all[i], all[j]).equivalent == Truth::yes;
      if (related[i * n + j]) parent[find(j)] = find(i);
    }
  }
  std::vector<Elem> cls(n, -1);
  std::vector<Fraction> reps;
  std::vector<std::size_t> root_to_class(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (root_to_class[r] == n) {
      root_to_class[r] = reps.size();
      reps.push_back(all[i]);
    }
    cls[i] = static_cast<Elem>(root_to_class[r]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cls[i] == cls[j] && !related[i * n + j]) {
        throw ConsistencyError("fraction equivalence is not transitive at " + format_fraction(ctx, all[i]) +
                               " and " + format_fraction(ctx, all[j]));
      }
    }
  }
  const auto class_of = [&](const Fraction& f) -> Elem {
    for (std::size_t i = 0; i < n; ++i) {
      if (frac_equiv(ctx, f, all[i]).equivalent == Truth::yes) return cls[i];
    }
    throw ConsistencyError("fraction " + format_fraction(ctx, f) + " matches no class");
  };

  const std::size_t k = reps.size();
  FiniteSemiring::Table add(k, std::vector<Elem>(k)), mul(k, std::vector<Elem>(k));
  std::vector<char> add_set(k * k, 0), mul_set(k * k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ci = static_cast<std::size_t>(cls[i]), cj = static_cast<std::size_t>(cls[j]);
      const Elem sum = class_of(frac_add(ctx, all[i], all[j]));
      const Elem prod = class_of(frac_mul(ctx, all[i], all[j]));
      if (add_set[ci * k + cj] && add[ci][cj] != sum) {
        throw ConsistencyError("fraction addition depends on representatives");
      }
      if (mul_set[ci * k + cj] && mul[ci][cj] != prod) {
        throw ConsistencyError("fraction multiplication depends on representatives");
      }
      add[ci][cj] = sum;
      mul[ci][cj] = prod;
      add_set[ci * k + cj] = mul_set[ci * k + cj] = 1;
    }
  }

  std::vector<std::string> labels;
  for (const auto& r : reps) labels.push_back(format_fraction(ctx, r));
  const auto& c = p.carrier();
  const Elem zero = class_of({c.zero(), c.one()});
  const Elem one = class_of({c.one(), c.one()});
  auto carrier = std::make_shared<FiniteSemiring>("S^-1 " + c.name(), labels, add, mul, zero, one);

  std::set<Elem> a0, t;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.in_a0(all[i].num)) a0.insert(cls[i]);
    if (p.in_t(all[i].num)) t.insert(cls[i]);
  }
  FractionPair out;
  out.representatives = reps;
  out.pair = finite_pair("S^-1 " + p.name(), carrier, {a0.begin(), a0.end()}, {t.begin(), t.end()});
  for (Elem b : p.elements()) out.embedding.push_back(class_of({b, c.one()}));
  out.tangibles_invertible = std::all_of(t.begin(), t.end(), [&](Elem x) {
    for (Elem y = 0; y < static_cast<Elem>(k); ++y) {
      if (carrier->mul(x, y) == one && carrier->mul(y, x) == one) return true;
    }
    return false;
  });
  return out;
}

}  // namespace tpairs
