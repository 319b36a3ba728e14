#include "tpairs/polypair.hpp"

#include <algorithm>

#include "tpairs/errors.hpp"

namespace tpairs {

namespace {

std::string fmt(const Semiring& s, const Polynomial& f) {
  return format_polynomial(s, f, default_variables(f.nvars()));
}

bool satisfies_points(const SemiringPair& p, const PolyTwist& f, const std::vector<PointPair>& points) {
  return std::all_of(points.begin(), points.end(), [&](const PointPair& z) {
    const auto v = twist_substitute(p.carrier(), f, z.first, z.second);
    return p.in_a0(v.first) && p.in_a0(v.second);
  });
}

}  // namespace

std::string to_string(PolyA0Flavor f) {
  return f == PolyA0Flavor::coeffwise ? "coeffwise" : "shallowized";
}

PolyA0Flavor parse_poly_flavor(std::string_view text) {
  if (text == "coeffwise") return PolyA0Flavor::coeffwise;
  if (text == "shallowized") return PolyA0Flavor::shallowized;
  throw ConfigError("unknown polynomial A0 flavor: " + std::string(text));
}

bool PolynomialPair::in_a0(const Polynomial& f) const {
  if (flavor_ == PolyA0Flavor::shallowized && f.terms().size() >= 2) return true;
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return base_->in_a0(term.second); });
}

bool PolynomialPair::in_t(const Polynomial& f) const {
  return f.terms().size() == 1 && base_->in_t(f.terms().begin()->second);
}

PolynomialPair build_polynomial_pair(const PairPtr& p, std::size_t nvars, PolyA0Flavor flavor) {
  if (!p) throw PreconditionError("polynomial pair needs a base pair");
  if (nvars == 0) throw PreconditionError("polynomial pair needs at least one variable");
  return PolynomialPair(p, nvars, flavor);
}

std::vector<Polynomial> polynomials_up_to(const Semiring& s, const std::vector<Elem>& coeffs,
                                          std::size_t nvars, unsigned degree,
                                          std::size_t max_count) {
  std::vector<Elem> exps_range;
  for (unsigned k = 0; k <= degree; ++k) exps_range.push_back(k);
  std::vector<Exponent> monomials;
  for (const auto& e : cartesian_power(exps_range, nvars)) {
    Exponent ex(e.begin(), e.end());
    if (total_degree(ex) <= degree) monomials.push_back(ex);
  }
  std::sort(monomials.begin(), monomials.end(), MonomialOrder{});

  std::vector<Elem> values{s.zero()};
  for (Elem c : coeffs) {
    if (std::find(values.begin(), values.end(), c) == values.end()) values.push_back(c);
  }
  double estimate = 1;
  for (std::size_t i = 0; i < monomials.size(); ++i) estimate *= static_cast<double>(values.size());
  if (estimate > static_cast<double>(max_count)) {
    throw BoundExceeded("polynomial space has " + std::to_string(static_cast<long long>(estimate)) +
                        " elements, above the bound " + std::to_string(max_count));
  }

  std::vector<Polynomial> out;
  std::vector<std::size_t> digits(monomials.size(), 0);
  for (;;) {
    Polynomial f(nvars);
    for (std::size_t m = 0; m < monomials.size(); ++m) f.add_term(s, monomials[m], values[digits[m]]);
    out.push_back(std::move(f));
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == values.size()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

AxiomReport verify_polynomial_pair(const PolynomialPair& pp, const std::vector<Polynomial>& sample) {
  AxiomReport report("polynomial pair over " + pp.base()->name() + " (" + to_string(pp.flavor()) + ")");
  const auto& s = pp.carrier();
  std::vector<const Polynomial*> a0;
  std::vector<const Polynomial*> t;
  for (const auto& f : sample) {
    const bool in0 = pp.in_a0(f);
    const bool inT = pp.in_t(f);
    if (in0 && inT) report.record("A0 and T disjoint", {fmt(s, f)});
    if (in0) a0.push_back(&f);
    if (inT) t.push_back(&f);
  }
  report.count_checks(sample.size());
  for (const auto* f : a0) {
    for (const auto* g : a0) {
      if (!pp.in_a0(poly_add(s, *f, *g))) report.record("A0 additive closure", {fmt(s, *f), fmt(s, *g)});
      if (!pp.in_a0(poly_mul(s, *f, *g))) {
        report.record("A0 multiplicative closure", {fmt(s, *f), fmt(s, *g)});
      }
    }
  }
  report.count_checks(a0.size() * a0.size());
  for (const auto* f : t) {
    for (const auto* g : t) {
      if (!pp.in_t(poly_mul(s, *f, *g))) report.record("T multiplicative closure", {fmt(s, *f), fmt(s, *g)});
    }
  }
  report.count_checks(t.size() * t.size());
  return report;
}

std::optional<Polynomial> shallowness_counterexample(const PolynomialPair& pp,
                                                     const std::vector<Polynomial>& sample) {
  for (const auto& f : sample) {
    if (!pp.in_a0(f) && !pp.in_t(f)) return f;
  }
  return std::nullopt;
}

bool is_tangible_poly(const SemiringPair& p, const Polynomial& f) {
  if (f.is_zero()) return false;
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return p.in_t(term.second); });
}

std::vector<std::vector<Elem>> find_preceq_roots(const SemiringPair& p, const Polynomial& f,
                                                 const std::vector<std::vector<Elem>>& domain) {
  std::vector<std::vector<Elem>> out;
  for (const auto& pt : domain) {
    if (pt.size() != f.nvars()) throw PreconditionError("point length differs from variable count");
    if (p.in_a0(poly_eval(p.carrier(), f, pt))) out.push_back(pt);
  }
  return out;
}

TwistElement twist_substitute(const Semiring& s, const PolyTwist& f, const Point& z1, const Point& z2) {
  if (f.first.nvars() != f.second.nvars() || z1.size() != f.first.nvars() || z2.size() != z1.size()) {
    throw PreconditionError("twist substitution needs matching variable counts");
  }
  const Elem f1z1 = poly_eval(s, f.first, z1);
  const Elem f1z2 = poly_eval(s, f.first, z2);
  const Elem f2z1 = poly_eval(s, f.second, z1);
  const Elem f2z2 = poly_eval(s, f.second, z2);
  return {s.add(f1z1, f2z2), s.add(f1z2, f2z1)};
}

PolyTwist poly_twist_product(const Semiring& s, const PolyTwist& a, const PolyTwist& b) {
  return {poly_add(s, poly_mul(s, a.first, b.first), poly_mul(s, a.second, b.second)),
          poly_add(s, poly_mul(s, a.first, b.second), poly_mul(s, a.second, b.first))};
}

PolyTwist poly_twist_compose(const Semiring& s, const PolyTwist& a, const PolyTwist& b) {
  return {poly_add(s, poly_compose(s, a.first, b.first), poly_compose(s, a.second, b.second)),
          poly_add(s, poly_compose(s, a.first, b.second), poly_compose(s, a.second, b.first))};
}

MixedAssociativity mixed_associativity(const Semiring& s, const PolyTwist& outer,
                                       const PolyTwist& inner, const Point& z1, const Point& z2) {
  const auto w = twist_substitute(s, inner, z1, z2);
  return {twist_substitute(s, poly_twist_compose(s, outer, inner), z1, z2),
          twist_substitute(s, outer, {w.first}, {w.second})};
}

MixedAssociativity mixed_associativity_product(const Semiring& s, const PolyTwist& outer,
                                               const PolyTwist& inner, const Point& z1,
                                               const Point& z2) {
  const auto w = twist_substitute(s, inner, z1, z2);
  return {twist_substitute(s, poly_twist_product(s, outer, inner), z1, z2),
          twist_substitute(s, outer, {w.first}, {w.second})};
}

bool GeometricCongruence::contains(std::size_t i, std::size_t j) const {
  return std::binary_search(members.begin(), members.end(), std::pair{i, j});
}

GeometricCongruence geometric_congruence(const SemiringPair& p, const std::vector<PointPair>& points,
                                         const std::vector<Polynomial>& space) {
  const auto& s = p.carrier();
  // values[k][2 * q + side]: space[k] at point q, side 0 = z1, 1 = z2.
  std::vector<std::vector<Elem>> values(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) {
    for (const auto& z : points) {
      values[k].push_back(poly_eval(s, space[k], z.first));
      values[k].push_back(poly_eval(s, space[k], z.second));
    }
  }
  GeometricCongruence g{space, {}};
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      bool ok = true;
      for (std::size_t q = 0; ok && q < points.size(); ++q) {
        ok = p.in_a0(s.add(values[i][2 * q], values[j][2 * q + 1])) &&
             p.in_a0(s.add(values[i][2 * q + 1], values[j][2 * q]));
      }
      if (ok) g.members.emplace_back(i, j);
    }
  }
  return g;
}

GeometricCongruence geometric_congruence(const SemiringPair& p, const std::vector<PointPair>& points,
                                         std::size_t nvars, unsigned degree) {
  if (!p.is_finite()) throw PreconditionError("geometric congruence enumeration needs a finite carrier");
  return geometric_congruence(p, points, polynomials_up_to(p.carrier(), p.elements(), nvars, degree));
}

RadicalCheck check_geometric_radical(const SemiringPair& p, const std::vector<PointPair>& points,
                                     const GeometricCongruence& g, unsigned max_power) {
  RadicalCheck out;
  const auto& s = p.carrier();
  for (std::size_t i = 0; i < g.space.size() && !out.counterexample; ++i) {
    for (std::size_t j = 0; j < g.space.size(); ++j) {
      if (g.contains(i, j)) continue;
      ++out.checked;
      const PolyTwist x{g.space[i], g.space[j]};
      PolyTwist power = x;
      for (unsigned m = 2; m <= max_power; ++m) {
        power = poly_twist_product(s, power, x);
        if (satisfies_points(p, power, points)) {
          out.radical = false;
          out.counterexample = RadicalFailure{i, j, m};
          break;
        }
      }
      if (out.counterexample) break;
    }
  }
  return out;
}

PolypairSemiprime check_polypair_semiprime(const PairPtr& p, unsigned degree) {
  if (!p->is_finite()) throw PreconditionError("function pair check needs a finite carrier");
  const auto& s = p->carrier();
  PolypairSemiprime out;

  const auto& elems = p->elements();
  out.base_semiprime = true;
  for (Elem b1 : elems) {
    for (Elem b2 : elems) {
      if (b1 == b2) continue;
      bool separated = false;
      for (Elem y1 : elems) {
        for (Elem y2 : elems) {
          const auto v = twist_product(s, twist_product(s, {b1, b2}, {y1, y2}), {b1, b2});
          if (v.first != v.second) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) {
        out.base_semiprime = false;
        out.base_witness = TwistElement{b1, b2};
        break;
      }
    }
    if (!out.base_semiprime) break;
  }

  const auto space = polynomials_up_to(s, elems, 1, degree);
  out.function_semiprime = true;
  for (const auto& b1 : space) {
    for (const auto& b2 : space) {
      if (b1 == b2) continue;
      ++out.candidates;
      const PolyTwist b{b1, b2};
      bool separated = false;
      for (const auto& y1 : space) {
        for (const auto& y2 : space) {
          const auto v = poly_twist_product(s, poly_twist_product(s, b, {y1, y2}), b);
          if (!(v.first == v.second)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) {
        out.function_semiprime = false;
        out.function_witness = b;
        return out;
      }
    }
  }
  return out;
}

}  // namespace tpairs
