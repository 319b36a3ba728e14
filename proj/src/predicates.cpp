#include "tpairs/predicates.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace tpairs {

namespace {

std::vector<std::string> fmt(const SemiringPair& p, std::initializer_list<Elem> es) {
  std::vector<std::string> out;
  for (Elem e : es) out.push_back(p.format(e));
  return out;
}

// Decided answer or nullopt when the symbolic search gave up.
std::optional<bool> decided(Truth t) {
  if (t == Truth::unknown) return std::nullopt;
  return t == Truth::yes;
}

}  // namespace

AxiomReport verify_admissible(const SemiringPair& p) {
  AxiomReport r("admissible " + p.name());
  const Semiring& s = p.carrier();
  if (!p.is_finite()) r.set_window(p.window().radius);
  const auto& a0 = p.a0_elements();
  const auto& t = p.tangibles();
  if (!p.in_a0(s.zero())) r.record("A0 contains 0", {p.format(s.zero())});
  if (!p.in_t(s.one())) r.record("T contains 1", {p.format(s.one())});
  for (Elem x : a0) {
    for (Elem y : a0) {
      if (!p.in_a0(s.add(x, y))) r.record("A0 closed under +", fmt(p, {x, y}));
      if (!p.in_a0(s.mul(x, y))) r.record("A0 closed under *", fmt(p, {x, y}));
    }
  }
  for (Elem x : t) {
    for (Elem y : t) {
      if (!p.in_t(s.mul(x, y))) r.record("T closed under *", fmt(p, {x, y}));
    }
  }
  for (Elem x : p.elements()) {
    if (p.in_a0(x) && p.in_t(x)) r.record("A0 and T disjoint", fmt(p, {x}));
  }
  r.count_checks(a0.size() * a0.size() + t.size() * t.size() + p.elements().size());
  if (p.is_finite()) {
    std::set<Elem> reached{s.zero()};
    std::deque<Elem> queue{s.zero()};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (Elem a : t) {
        if (reached.insert(s.add(x, a)).second) queue.push_back(s.add(x, a));
      }
    }
    for (Elem x : p.elements()) {
      if (!reached.count(x)) r.record("T spans A", fmt(p, {x}));
    }
  } else if (!p.spanning_by_construction()) {
    r.record("T spans A", {"not verifiable on a symbolic carrier"});
  }
  return r;
}

bool is_shallow(const SemiringPair& p) {
  return std::all_of(p.elements().begin(), p.elements().end(),
                     [&](Elem e) { return p.in_t(e) || p.in_a0(e); });
}

AxiomReport verify_surpassing(const SemiringPair& p, bool strong) {
  AxiomReport r("surpassing " + to_string(p.surpass_kind()) + " on " + p.name());
  const Semiring& s = p.carrier();
  const auto& el = p.elements();
  if (!p.is_finite()) r.set_window(p.window().radius);
  const auto rel = [&](Elem a, Elem b) { return decided(p.surpasses(a, b)); };
  const Elem zero = s.zero();

  for (Elem c : p.a0_elements()) {
    if (rel(zero, c) == false) r.record("(i) 0 below A0", fmt(p, {c}));
  }
  for (Elem b : el) {
    if (rel(b, b) == false) r.record("reflexivity", fmt(p, {b}));
  }
  // Related pairs inside the carrier or window.
  std::vector<std::pair<Elem, Elem>> related;
  for (Elem a : el) {
    for (Elem b : el) {
      if (rel(a, b) == true) related.emplace_back(a, b);
    }
  }
  const std::size_t limit = 400000;
  const bool exhaustive = related.size() * related.size() <= limit;
  std::mt19937_64 rng(0x73757270ULL);
  std::uniform_int_distribution<std::size_t> pick(0, related.empty() ? 0 : related.size() - 1);
  const auto for_each_two = [&](auto&& body) {
    if (related.empty()) return;
    if (exhaustive) {
      for (const auto& x : related) {
        for (const auto& y : related) body(x, y);
      }
    } else {
      for (std::size_t i = 0; i < limit; ++i) body(related[pick(rng)], related[pick(rng)]);
    }
  };
  for_each_two([&](const auto& x, const auto& y) {
    if (rel(s.add(x.first, y.first), s.add(x.second, y.second)) == false) {
      r.record("(ii) additivity", fmt(p, {x.first, x.second, y.first, y.second}));
    }
    if (x.second == y.first && rel(x.first, y.second) == false) {
      r.record("transitivity", fmt(p, {x.first, x.second, y.second}));
    }
  });
  for (const auto& [b1, b2] : related) {
    for (Elem a : p.tangibles()) {
      if (rel(s.mul(a, b1), s.mul(a, b2)) == false) r.record("(iii) T-action", fmt(p, {a, b1, b2}));
    }
    if (p.in_t(b1) && p.in_t(b2) && b1 != b2) r.record("(iv) equality on T", fmt(p, {b1, b2}));
    if (p.in_t(b2) && b1 != b2) {
      if (strong) r.record("strong", fmt(p, {b1, b2}));
      if (p.surpass_kind() == SurpassKind::precedes_zero && p.in_a0(b1)) {
        r.record("A0 element below a tangible", fmt(p, {b1, b2}));
      }
    }
  }
  if (p.surpass_kind() == SurpassKind::precedes_zero && is_shallow(p)) {
    for (const auto& [b1, b2] : related) {
      if (p.in_t(b2) && b1 != b2) r.record("shallow implies strong", fmt(p, {b1, b2}));
    }
  }
  r.count_checks(related.size());
  return r;
}

AxiomReport verify_negation_surpassing(const SemiringPair& p, const ElemMap& neg) {
  AxiomReport r("negation and surpassing on " + p.name());
  const Semiring& s = p.carrier();
  for (Elem b1 : p.elements()) {
    for (Elem b2 : p.elements()) {
      if (decided(p.surpasses(b1, b2)) != true) continue;
      const Elem d1 = s.add(b2, neg(b1)), d2 = s.add(b1, neg(b2));
      if (d1 != d2) r.record("b2 (-) b1 = b1 (-) b2", fmt(p, {b1, b2}));
      if (decided(p.surpasses(s.zero(), d1)) == false) r.record("difference surpasses 0", fmt(p, {b1, b2}));
      r.count_checks(1);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string PropertyN::summary() const {
  if (tangibly_separating) return "tangibly_separating";
  if (neg_compatible) return "neg_compatible";
  if (property_n) return "property_n";
  return "none";
}

PropertyN property_n_status(const SemiringPair& p) {
  PropertyN out;
  const Semiring& s = p.carrier();
  const auto& t = p.tangibles();
  out.property_n = true;
  out.neg_compatible = true;
  for (Elem a : t) {
    auto& list = out.partners[a];
    for (Elem b : t) {
      if (p.in_a0(s.add(a, b))) list.push_back(b);
    }
    if (list.empty()) {
      out.property_n = false;
      out.neg_compatible = false;
      if (!out.missing) out.missing = a;
    } else if (list.size() > 1) {
      out.neg_compatible = false;
      if (!out.ambiguous) out.ambiguous = a;
    }
  }
  if (out.property_n) {
    out.tangibly_separating = true;
    for (Elem a : t) {
      for (Elem c : t) {
        if (c == a) continue;
        const auto& partners = out.partners[a];
        const bool ok = std::any_of(partners.begin(), partners.end(),
                                    [&](Elem ap) { return p.in_t(s.add(c, ap)); });
        if (!ok) {
          out.tangibly_separating = false;
          if (!out.not_separated) out.not_separated = std::make_pair(a, c);
        }
      }
    }
  }
  return out;
}

AxiomReport verify_negation(const SemiringPair& p, const ElemMap& neg) {
  AxiomReport r("negation map on " + p.name());
  const Semiring& s = p.carrier();
  const auto& el = p.elements();
  for (Elem b : el) {
    if (neg(neg(b)) != b) r.record("order at most 2", fmt(p, {b}));
    if (!p.in_a0(s.add(b, neg(b)))) r.record("b (-) b in A0", fmt(p, {b}));
    if (p.in_a0(b) && !p.in_a0(neg(b))) r.record("(-)A0 = A0", fmt(p, {b}));
    for (Elem c : el) {
      if (neg(s.add(b, c)) != s.add(neg(b), neg(c))) r.record("additive", fmt(p, {b, c}));
      const Elem m = neg(s.mul(b, c));
      if (m != s.mul(neg(b), c) || m != s.mul(b, neg(c))) r.record("multiplicative", fmt(p, {b, c}));
    }
  }
  r.count_checks(el.size() * el.size());
  return r;
}

NegationMap derive_negation(const SemiringPair& p) {
  const auto status = property_n_status(p);
  if (!status.neg_compatible) {
    std::string why = status.missing ? "tangible " + p.format(*status.missing) + " has no partner"
                                     : "tangible " + p.format(*status.ambiguous) + " has several partners";
    throw PreconditionError("pair '" + p.name() + "' is not neg-compatible: " + why);
  }
  const auto* f = p.finite();
  if (!f) {
    if (p.has_negation()) {
      NegationMap nm{*p.negation(), {}, verify_negation(p, *p.negation())};
      return nm;
    }
    throw PreconditionError("negation can only be derived on finite carriers");
  }
  const std::size_t n = f->size();
  std::vector<Elem> table(n, -1);
  table[static_cast<std::size_t>(f->zero())] = f->zero();
  for (Elem a : p.tangibles()) table[static_cast<std::size_t>(a)] = status.partners.at(a).front();
  // Propagate x + a |-> (-)x + a' until nothing new is assigned.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x : p.elements()) {
      if (table[static_cast<std::size_t>(x)] < 0) continue;
      for (Elem a : p.tangibles()) {
        const Elem y = f->add(x, a);
        const Elem img = f->add(table[static_cast<std::size_t>(x)], table[static_cast<std::size_t>(a)]);
        auto& slot = table[static_cast<std::size_t>(y)];
        if (slot < 0) {
          slot = img;
          changed = true;
        }
      }
    }
  }
  for (Elem x : p.elements()) {
    if (table[static_cast<std::size_t>(x)] < 0) {
      throw ConsistencyError("element " + p.format(x) + " is not a sum of tangibles");
    }
  }
  for (Elem x : p.elements()) {
    for (Elem a : p.tangibles()) {
      const Elem y = f->add(x, a);
      const Elem img = f->add(table[static_cast<std::size_t>(x)], table[static_cast<std::size_t>(a)]);
      if (table[static_cast<std::size_t>(y)] != img) {
        throw ConsistencyError("negation is ill-defined at " + p.format(y) + " = " + p.format(x) + " + " +
                               p.format(a) + ": images " + p.format(table[static_cast<std::size_t>(y)]) +
                               " and " + p.format(img));
      }
    }
  }
  NegationMap nm;
  nm.table = table;
  nm.map = [table](Elem e) { return table.at(static_cast<std::size_t>(e)); };
  nm.invariants = verify_negation(p, nm.map);
  return nm;
}

// ---------------------------------------------------------------------------

std::string to_string(ReversibilityMode m) {
  switch (m) {
    case ReversibilityMode::plain:
      return "plain";
    case ReversibilityMode::power:
      return "power";
    case ReversibilityMode::tangible:
      return "tangible";
    case ReversibilityMode::neg_plain:
      return "neg_plain";
    case ReversibilityMode::neg_power:
      return "neg_power";
    case ReversibilityMode::neg_tangible:
      return "neg_tangible";
  }
  return "plain";
}

ReversibilityMode parse_reversibility_mode(std::string_view text) {
  for (auto m : {ReversibilityMode::plain, ReversibilityMode::power, ReversibilityMode::tangible,
                 ReversibilityMode::neg_plain, ReversibilityMode::neg_power,
                 ReversibilityMode::neg_tangible}) {
    if (to_string(m) == text) return m;
  }
  throw ConfigError("unknown reversibility mode '" + std::string(text) + "'");
}

Reversibility check_reversibility(const SemiringPair& p, Elem a, ReversibilityMode mode,
                                  unsigned n_max, const std::optional<ElemMap>& neg) {
  const bool negated = mode == ReversibilityMode::neg_plain || mode == ReversibilityMode::neg_power ||
                       mode == ReversibilityMode::neg_tangible;
  ElemMap negation;
  if (negated) {
    if (neg) {
      negation = *neg;
    } else if (p.has_negation()) {
      negation = *p.negation();
    } else {
      throw PreconditionError("negated reversibility needs a negation map");
    }
  }
  const Semiring& s = p.carrier();
  std::vector<Elem> targets;
  switch (mode) {
    case ReversibilityMode::plain:
    case ReversibilityMode::neg_plain:
      targets = {a};
      break;
    case ReversibilityMode::power:
    case ReversibilityMode::neg_power:
      for (unsigned k = 1; k <= n_max; ++k) targets.push_back(s.pow(a, k));
      break;
    case ReversibilityMode::tangible:
    case ReversibilityMode::neg_tangible:
      targets = p.tangibles();
      break;
  }
  Reversibility out;
  out.checked = targets;
  for (Elem x : targets) {
    const Elem shifted = negated ? negation(x) : x;
    for (Elem b : p.elements()) {
      const auto lhs = decided(p.surpasses(s.zero(), s.add(b, shifted)));
      if (lhs != true) {
        if (!lhs) out.holds = out.holds == Truth::no ? Truth::no : Truth::unknown;
        continue;
      }
      const auto rhs = decided(p.surpasses(x, b));
      if (rhs == false) {
        out.holds = Truth::no;
        out.counterexample = std::make_pair(x, b);
        return out;
      }
      if (!rhs) out.holds = Truth::unknown;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Center compute_center(const SemiringPair& p) {
  const Semiring& s = p.carrier();
  Center c;
  const auto& el = p.elements();
  for (Elem z : el) {
    const bool central = std::all_of(el.begin(), el.end(), [&](Elem y) {
      return decided(p.surpasses(s.mul(y, z), s.mul(z, y))) == true;
    });
    if (central) c.elements.push_back(z);
  }
  c.pair_commutative = c.elements.size() == el.size();
  c.carrier_commutative = true;
  for (Elem x : el) {
    for (Elem y : el) {
      if (s.mul(x, y) != s.mul(y, x)) c.carrier_commutative = false;
    }
  }
  c.transfer_hypothesis = true;
  for (Elem w : el) {
    for (Elem y0 : p.a0_elements()) {
      for (Elem y1 : p.a0_elements()) {
        if (s.add(s.add(w, y0), y1) == w && s.add(w, y0) != w) {
          c.transfer_hypothesis = false;
          if (!c.hypothesis_failure) c.hypothesis_failure = std::vector<Elem>{w, y0, y1};
        }
      }
    }
  }
  return c;
}

Bipotence check_weakly_bipotent(const SemiringPair& p) {
  const Semiring& s = p.carrier();
  Bipotence out;
  for (Elem a : p.tangibles()) {
    for (Elem b : p.tangibles()) {
      const Elem sum = s.add(a, b);
      if (sum == a || sum == b) continue;
      if (s.mul(a, a) == s.mul(b, b)) continue;
      out.holds = false;
      out.counterexample = std::make_pair(a, b);
      return out;
    }
  }
  return out;
}

Nondegeneracy check_nondegenerate(const SemiringPair& p, unsigned degree_bound, unsigned n_vars,
                                  std::size_t max_polynomials) {
  if (degree_bound < 1 || n_vars < 1) throw PreconditionError("degree and variable bounds must be >= 1");
  const Semiring& s = p.carrier();
  const auto& t = p.tangibles();
  // Monomials of total degree <= bound.
  std::vector<Exponent> monomials;
  for (const auto& e : cartesian_power([&] {
         std::vector<Elem> v;
         for (unsigned k = 0; k <= degree_bound; ++k) v.push_back(k);
         return v;
       }(), n_vars)) {
    Exponent ex(e.begin(), e.end());
    if (total_degree(ex) <= degree_bound) monomials.push_back(ex);
  }
  std::sort(monomials.begin(), monomials.end(), MonomialOrder{});
  double count = 1;
  for (std::size_t i = 0; i < monomials.size(); ++i) count *= static_cast<double>(t.size() + 1);
  if (count - 1 > static_cast<double>(max_polynomials)) {
    throw BoundExceeded("nondegeneracy scan needs " + std::to_string(static_cast<long long>(count)) +
                        " polynomials, bound is " + std::to_string(max_polynomials));
  }
  const auto inputs = cartesian_power(t, n_vars);
  // values[i][m]: monomial m at input i.
  std::vector<std::vector<Elem>> values(inputs.size(), std::vector<Elem>(monomials.size()));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      Elem v = s.one();
      for (std::size_t k = 0; k < n_vars; ++k) v = s.mul(v, s.pow(inputs[i][k], monomials[m][k]));
      values[i][m] = v;
    }
  }
  Nondegeneracy out;
  const bool shallow = is_shallow(p);
  bool tangible_values = true;
  std::vector<std::size_t> digit(monomials.size(), 0);
  const std::size_t radix = t.size() + 1;
  while (true) {
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == radix) digit[pos++] = 0;
    if (pos == digit.size()) break;
    ++out.polynomials_checked;
    bool escapes = false, tangible_hit = false;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      Elem v = s.zero();
      for (std::size_t m = 0; m < monomials.size(); ++m) {
        if (digit[m]) v = s.add(v, s.mul(t[digit[m] - 1], values[i][m]));
      }
      if (!p.in_a0(v)) escapes = true;
      if (p.in_t(v)) tangible_hit = true;
      if (escapes && tangible_hit) break;
    }
    if (!tangible_hit) tangible_values = false;
    if (!escapes && out.nondegenerate) {
      out.nondegenerate = false;
      Polynomial f(n_vars);
      for (std::size_t m = 0; m < monomials.size(); ++m) {
        if (digit[m]) f.add_term(s, monomials[m], t[digit[m] - 1]);
      }
      out.witness = f;
    }
  }
  if (shallow && out.nondegenerate) out.tangible_value_property = tangible_values;
  return out;
}

}  // namespace tpairs
