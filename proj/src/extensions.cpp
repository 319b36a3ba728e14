#include "tpairs/extensions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tpairs/polypair.hpp"

namespace tpairs {

namespace {

bool contains(const std::vector<Elem>& v, Elem e) { return std::find(v.begin(), v.end(), e) != v.end(); }

/// Mixed-radix odometer over `digits` positions each ranging over [0, radix).
bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix) {
  for (auto& i : idx) {
    if (++i < radix) return true;
    i = 0;
  }
  return false;
}

std::vector<Elem> powers(const Semiring& s, Elem y, unsigned n) {
  std::vector<Elem> out{s.one()};
  for (unsigned i = 1; i <= n; ++i) out.push_back(s.mul(out.back(), y));
  return out;
}

std::size_t checked_power(std::size_t base, unsigned exp, std::size_t cap) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Extension subpair_extension(const PairPtr& w, const std::vector<Elem>& base) {
  Extension e;
  e.ext = w;
  e.base = base;
  for (Elem b : base) {
    if (w->in_a0(b)) e.base_a0.push_back(b);
    if (w->in_t(b)) e.base_t.push_back(b);
  }
  return e;
}

Extension inclusion_extension(const PairPtr& a, const PairPtr& w, const std::vector<Elem>& inclusion) {
  const auto& elems = a->elements();
  if (!a->is_finite()) throw PreconditionError("inclusion_extension needs a finite base pair");
  if (inclusion.size() != elems.size()) {
    throw StructureError("inclusion has " + std::to_string(inclusion.size()) + " entries for " +
                         std::to_string(elems.size()) + " base elements");
  }
  std::set<Elem> image(inclusion.begin(), inclusion.end());
  if (image.size() != inclusion.size()) throw StructureError("inclusion is not injective");
  const auto& as = a->carrier();
  const auto& ws = w->carrier();
  auto at = [&](Elem x) { return inclusion[static_cast<std::size_t>(x)]; };
  for (Elem x : elems) {
    for (Elem y : elems) {
      if (at(as.add(x, y)) != ws.add(at(x), at(y)) || at(as.mul(x, y)) != ws.mul(at(x), at(y))) {
        throw StructureError("inclusion is not a homomorphism at (" + as.format(x) + ", " +
                             as.format(y) + ")");
      }
    }
  }
  if (at(as.zero()) != ws.zero() || at(as.one()) != ws.one()) {
    throw StructureError("inclusion does not preserve 0 and 1");
  }
  Extension e;
  e.ext = w;
  for (Elem x : elems) e.base.push_back(at(x));
  for (Elem x : a->a0_elements()) e.base_a0.push_back(at(x));
  for (Elem x : a->tangibles()) e.base_t.push_back(at(x));
  return e;
}

AxiomReport verify_extension(const Extension& e) {
  const auto& w = *e.ext;
  const auto& s = w.carrier();
  AxiomReport r("extension of " + w.name());
  r.set_window(w.window().radius);
  auto fmt = [&](Elem x) { return s.format(x); };
  if (!contains(e.base, s.zero()) || !contains(e.base, s.one())) r.record("base contains 0 and 1", {});
  for (Elem a : e.base) {
    for (Elem b : e.base) {
      r.count_checks(2);
      if (!contains(e.base, s.add(a, b))) r.record("base closed under addition", {fmt(a), fmt(b)});
      if (!contains(e.base, s.mul(a, b))) r.record("base closed under multiplication", {fmt(a), fmt(b)});
    }
  }
  for (Elem t : e.base_t) {
    r.count_checks(1);
    if (!w.in_t(t)) r.record("base T inside T_W", {fmt(t)});
  }
  for (Elem a : e.base_a0) {
    r.count_checks(1);
    if (!w.in_a0(a)) r.record("base A0 inside W0", {fmt(a)});
  }
  for (Elem a : e.base_a0) {
    for (Elem x : w.elements()) {
      r.count_checks(2);
      if (!w.in_a0(s.mul(a, x))) r.record("A0 W inside W0", {fmt(a), fmt(x)});
      if (!w.in_a0(s.mul(x, a))) r.record("A0 W inside W0", {fmt(x), fmt(a)});
    }
  }
  for (Elem a : e.base_t) {
    for (Elem x : w.elements()) {
      r.count_checks(1);
      if (s.mul(a, x) != s.mul(x, a)) r.record("centralizing", {fmt(a), fmt(x)});
    }
  }
  if (w.is_finite()) {
    // Additive closure of the products a0 * w, compared with W0.
    std::set<Elem> span;
    for (Elem a : e.base_a0) {
      for (Elem x : w.elements()) span.insert(s.mul(a, x));
    }
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<Elem> cur(span.begin(), span.end());
      for (Elem a : cur) {
        for (Elem b : cur) grew = span.insert(s.add(a, b)).second || grew;
      }
    }
    for (Elem x : w.a0_elements()) {
      r.count_checks(1);
      if (!span.count(x)) r.record("W0 = A0 W", {fmt(x)});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

PolynomialSemiring::PolynomialSemiring(SemiringPtr base, std::vector<Elem> sample_coeffs,
                                       unsigned sample_degree)
    : base_(std::move(base)), sample_coeffs_(std::move(sample_coeffs)), sample_degree_(sample_degree) {}

Elem PolynomialSemiring::intern(const Polynomial& f) const {
  if (f.nvars() != 1) throw PreconditionError("polynomial carrier is univariate");
  std::lock_guard lock(mutex_);
  auto [it, inserted] = index_.try_emplace(f, static_cast<Elem>(polys_.size()));
  if (inserted) polys_.push_back(f);
  return it->second;
}

Polynomial PolynomialSemiring::poly(Elem e) const {
  std::lock_guard lock(mutex_);
  if (e < 0 || static_cast<std::size_t>(e) >= polys_.size()) {
    throw StructureError("unknown polynomial handle " + std::to_string(e));
  }
  return polys_[static_cast<std::size_t>(e)];
}

Elem PolynomialSemiring::zero() const { return intern(Polynomial(1)); }
Elem PolynomialSemiring::one() const { return intern(Polynomial::constant(*base_, base_->one())); }

Elem PolynomialSemiring::add(Elem a, Elem b) const { return intern(poly_add(*base_, poly(a), poly(b))); }
Elem PolynomialSemiring::mul(Elem a, Elem b) const { return intern(poly_mul(*base_, poly(a), poly(b))); }

std::vector<Elem> PolynomialSemiring::elements(Window) const {
  std::vector<Elem> out;
  for (const auto& f : polynomials_up_to(*base_, sample_coeffs_, 1, sample_degree_)) out.push_back(intern(f));
  return out;
}

std::string PolynomialSemiring::format(Elem e) const { return format_polynomial(*base_, poly(e), {"x"}); }

std::optional<Elem> PolynomialSemiring::parse(std::string_view text) const {
  try {
    return intern(parse_polynomial(*base_, text, {"x"}));
  } catch (const ConfigError&) {
    return std::nullopt;
  }
}

Extension polynomial_extension(const PairPtr& base, unsigned sample_degree) {
  const auto bs = base->carrier_ptr();
  auto carrier = std::make_shared<PolynomialSemiring>(bs, base->elements(), sample_degree);
  PairSpec spec;
  spec.name = base->name() + "[x]";
  spec.carrier = carrier;
  spec.in_a0 = [carrier, base](Elem e) {
    const auto f = carrier->poly(e);
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& t) { return base->in_a0(t.second); });
  };
  spec.in_t = [carrier, base](Elem e) {
    const auto f = carrier->poly(e);
    return f.terms().size() == 1 && base->in_t(f.terms().begin()->second);
  };
  // Coefficientwise; a base verdict of unknown counts as not surpassing.
  ElemRelation coeffwise = [carrier, base](Elem a, Elem b) {
    const auto f = carrier->poly(a);
    const auto g = carrier->poly(b);
    std::set<Exponent, MonomialOrder> support;
    for (const auto& t : f.terms()) support.insert(t.first);
    for (const auto& t : g.terms()) support.insert(t.first);
    const auto& s = base->carrier();
    return std::all_of(support.begin(), support.end(), [&](const Exponent& e) {
      return base->surpasses(f.coeff(s, e), g.coeff(s, e)) == Truth::yes;
    });
  };
  if (base->surpass_kind() == SurpassKind::precedes_zero) {
    spec.surpass = SurpassKind::precedes_zero;
    spec.exact_preceq0 = coeffwise;
  } else {
    spec.surpass = SurpassKind::custom;
    spec.relation = coeffwise;
  }
  if (base->has_negation()) {
    spec.negation = [carrier, base](Elem e) {
      Polynomial out(1);
      const auto& s = base->carrier();
      for (const auto& [ex, c] : carrier->poly(e).terms()) out.add_term(s, ex, base->negate(c));
      return carrier->intern(out);
    };
  }
  spec.window = base->window();
  auto pair = std::make_shared<SemiringPair>(std::move(spec));

  Extension e;
  e.ext = pair;
  for (Elem b : base->elements()) {
    const Elem c = carrier->intern(Polynomial::constant(*bs, b));
    e.base.push_back(c);
    if (base->in_a0(b)) e.base_a0.push_back(c);
    if (base->in_t(b)) e.base_t.push_back(c);
  }
  e.generator = carrier->intern(Polynomial::variable_power(*bs, bs->one(), 1, 0, 1));
  return e;
}

// ---------------------------------------------------------------------------

ElementRelation is_integral(const Extension& e, Elem y, unsigned degree_bound, bool tangible_only) {
  constexpr std::size_t kMaxTuples = 4'000'000;
  const auto& w = *e.ext;
  const auto& s = w.carrier();
  const auto& coeffs = tangible_only ? e.base_t : e.base;
  ElementRelation out;
  if (coeffs.empty()) return out;
  const auto pw = powers(s, y, degree_bound);
  for (unsigned n = 1; n <= degree_bound; ++n) {
    if (checked_power(coeffs.size(), n, kMaxTuples) > kMaxTuples) break;
    std::vector<std::size_t> idx(n, 0);
    do {
      ++out.searched;
      Elem lhs = s.zero();
      for (unsigned i = 0; i < n; ++i) lhs = s.add(lhs, s.mul(coeffs[idx[i]], pw[i]));
      if (w.surpasses(lhs, pw[n]) == Truth::yes) {
        out.found = Truth::yes;
        out.degree = n;
        for (auto i : idx) out.coefficients.push_back(coeffs[i]);
        return out;
      }
    } while (next_tuple(idx, coeffs.size()));
  }
  return out;
}

ElementRelation is_algebraic(const Extension& e, Elem y, unsigned degree_bound) {
  constexpr std::size_t kMaxTuples = 4'000'000;
  const auto& w = *e.ext;
  const auto& s = w.carrier();
  ElementRelation out;
  std::vector<Elem> leading;
  for (Elem a : e.base) {
    if (a != s.zero() && !contains(e.base_a0, a)) leading.push_back(a);
  }
  if (leading.empty() || e.base.empty()) return out;
  const auto pw = powers(s, y, degree_bound);
  for (unsigned n = 1; n <= degree_bound; ++n) {
    if (checked_power(e.base.size(), n, kMaxTuples / leading.size()) > kMaxTuples / leading.size()) break;
    for (Elem lead : leading) {
      const Elem top = s.mul(lead, pw[n]);
      std::vector<std::size_t> idx(n, 0);
      do {
        ++out.searched;
        Elem sum = top;
        for (unsigned i = 0; i < n; ++i) sum = s.add(sum, s.mul(e.base[idx[i]], pw[i]));
        if (w.in_a0(sum)) {
          out.found = Truth::yes;
          out.degree = n;
          for (auto i : idx) out.coefficients.push_back(e.base[i]);
          out.coefficients.push_back(lead);
          return out;
        }
      } while (next_tuple(idx, e.base.size()));
    }
  }
  return out;
}

Elem integral_relation_value(const Extension& e, Elem y, const ElementRelation& r) {
  const auto& s = e.ext->carrier();
  const auto pw = powers(s, y, r.degree);
  Elem v = pw[r.degree];
  for (std::size_t i = 0; i < r.coefficients.size() && i < r.degree; ++i) {
    v = s.add(v, s.mul(r.coefficients[i], pw[i]));
  }
  return v;
}

bool tangible_part_suffices(const Extension& e, Elem y, const std::vector<Elem>& coefficients) {
  const auto& w = *e.ext;
  const auto& s = w.carrier();
  const auto pw = powers(s, y, static_cast<unsigned>(coefficients.size()));
  Elem full = s.zero();
  Elem part = s.zero();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Elem term = s.mul(coefficients[i], pw[i]);
    full = s.add(full, term);
    if (!w.in_a0(coefficients[i])) part = s.add(part, term);
  }
  return full == part;
}

CongruenceAlgebraic is_congruence_algebraic(const Extension& e, Elem y, unsigned degree_bound,
                                            std::size_t max_pairs) {
  const auto& w = *e.ext;
  const auto& s = w.carrier();
  CongruenceAlgebraic out;
  std::vector<Polynomial> polys;
  try {
    polys = polynomials_up_to(s, e.base, 1, degree_bound, max_pairs);
  } catch (const BoundExceeded&) {
    return out;
  }
  // Values at y and at every base element, computed once.
  std::vector<Elem> at_y;
  std::vector<std::vector<Elem>> at_b(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Elem py[] = {y};
    at_y.push_back(poly_eval(s, polys[i], py));
    for (Elem b : e.base) {
      const Elem pb[] = {b};
      at_b[i].push_back(poly_eval(s, polys[i], pb));
    }
  }
  for (std::size_t i1 = 0; i1 < polys.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < polys.size(); ++i2) {
      if (i1 == i2) continue;
      if (++out.pairs_checked > max_pairs) return out;
      if (w.surpasses(at_y[i2], at_y[i1]) != Truth::yes) continue;
      for (std::size_t k = 0; k < e.base.size(); ++k) {
        if (w.surpasses(at_b[i2][k], at_b[i1][k]) == Truth::no) {
          out.algebraic = Truth::yes;
          out.certificate = std::make_tuple(polys[i1], polys[i2], e.base[k]);
          return out;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_square(const PairMatrix& m) {
  if (m.empty() || m.size() > 4) throw PreconditionError("negated determinant needs 1 <= n <= 4");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw PreconditionError("matrix is not square");
  }
}

PairMatrix minor_of(const PairMatrix& m, std::size_t r, std::size_t c) {
  PairMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == r) continue;
    std::vector<Elem> row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != c) row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Elem negated_determinant(const SemiringPair& p, const PairMatrix& m) {
  check_square(m);
  if (!p.has_negation()) throw PreconditionError(p.name() + " has no negation map");
  const auto& s = p.carrier();
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Elem det = s.zero();
  do {
    Elem prod = s.one();
    for (std::size_t i = 0; i < m.size(); ++i) prod = s.mul(prod, m[i][perm[i]]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    if (inversions % 2 == 1) prod = p.negate(prod);
    det = s.add(det, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

PairMatrix negated_adjoint(const SemiringPair& p, const PairMatrix& m) {
  check_square(m);
  const auto& s = p.carrier();
  const std::size_t n = m.size();
  PairMatrix adj(n, std::vector<Elem>(n, s.zero()));
  if (n == 1) {
    adj[0][0] = s.one();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem c = negated_determinant(p, minor_of(m, i, j));
      if ((i + j) % 2 == 1) c = p.negate(c);
      adj[j][i] = c;
    }
  }
  return adj;
}

PairMatrix matrix_product(const Semiring& s, const PairMatrix& a, const PairMatrix& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) throw PreconditionError("matrix shapes differ");
  PairMatrix out(a.size(), std::vector<Elem>(b.front().size(), s.zero()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] = s.add(out[i][j], s.mul(a[i][k], b[k][j]));
    }
  }
  return out;
}

}  // namespace tpairs
