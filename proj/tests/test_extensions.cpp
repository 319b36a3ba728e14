#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "tpairs/extensions.hpp"
#include "tpairs/fixtures.hpp"

using namespace tpairs;
using ST = SupertropicalSemiring;

namespace {

// Independent supertropical arithmetic on (kind, level) records.
struct SV {
  int kind = 0;  // 0 zero, 1 tangible, 2 ghost
  long level = 0;
  bool operator==(const SV& o) const { return kind == o.kind && (kind == 0 || level == o.level); }
};

SV sv(Elem e) {
  if (e == ST::kZero) return {};
  return {ST::is_ghost(e) ? 2 : 1, static_cast<long>(ST::level(e))};
}

SV sadd(SV a, SV b) {
  if (a.kind == 0) return b;
  if (b.kind == 0) return a;
  if (a.level != b.level) return a.level > b.level ? a : b;
  return {2, a.level};
}

SV smul(SV a, SV b) {
  if (a.kind == 0 || b.kind == 0) return {};
  return {std::max(a.kind, b.kind), a.level + b.level};
}

// b1 <= b2 iff b2 = b1 + c for a zero or ghost c, scanning c's level.
bool spreceq(SV b1, SV b2) {
  if (sadd(b1, SV{}) == b2) return true;
  for (long l = -40; l <= 40; ++l) {
    if (sadd(b1, SV{2, l}) == b2) return true;
  }
  return false;
}

std::vector<Elem> prime_subpair() { return {ST::kZero, ST::tangible(0), ST::ghost(0)}; }

// Minimal integral degree by brute force on the records.
std::optional<unsigned> oracle_integral_degree(const std::vector<Elem>& base, Elem y, unsigned bound) {
  const SV yv = sv(y);
  for (unsigned n = 1; n <= bound; ++n) {
    SV yn{1, 0};
    for (unsigned i = 0; i < n; ++i) yn = smul(yn, yv);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      SV lhs{};
      SV p{1, 0};
      for (unsigned i = 0; i < n; ++i) {
        lhs = sadd(lhs, smul(sv(base[idx[i]]), p));
        p = smul(p, yv);
      }
      if (spreceq(lhs, yn)) return n;
      std::size_t k = 0;
      while (k < n && ++idx[k] == base.size()) idx[k++] = 0;
      if (k == n) break;
    }
  }
  return std::nullopt;
}

PairMatrix parse_matrix(const SemiringPair& p, const std::vector<std::vector<std::string>>& rows) {
  PairMatrix m;
  for (const auto& r : rows) {
    std::vector<Elem> row;
    for (const auto& x : r) row.push_back(p.carrier().parse_or_throw(x));
    m.push_back(row);
  }
  return m;
}

}  // namespace

TEST(Determinant, IdentityOverDoubledBoolean) {
  auto p = fixture_pair("double-boolean");
  const auto m = parse_matrix(*p, {{"(1,0)", "(0,0)"}, {"(0,0)", "(1,0)"}});
  EXPECT_EQ(p->format(negated_determinant(*p, m)), "(1,0)");
  const auto m3 = parse_matrix(*p, {{"(1,0)", "(0,0)", "(0,0)"},
                                    {"(0,0)", "(1,0)", "(0,0)"},
                                    {"(0,0)", "(0,0)", "(1,0)"}});
  EXPECT_EQ(p->format(negated_determinant(*p, m3)), "(1,0)");
}

TEST(Determinant, AllUnitEntriesLandInA0) {
  auto p = fixture_pair("double-boolean");
  const auto m = parse_matrix(*p, {{"(1,0)", "(1,0)"}, {"(1,0)", "(1,0)"}});
  const Elem d = negated_determinant(*p, m);
  EXPECT_EQ(p->format(d), "(1,1)");
  EXPECT_TRUE(p->in_a0(d));
}

TEST(Determinant, SupertropicalUnitEntries) {
  auto p = supertropical_pair(Domain::integers, Window{5});
  const Elem u = ST::tangible(0);
  const Elem d = negated_determinant(*p, {{u, u}, {u, u}});
  EXPECT_EQ(p->format(d), "0v");
  EXPECT_TRUE(p->in_a0(d));
}

TEST(Determinant, NeedsNegationMap) {
  auto p = natural_pair(Window{5});
  EXPECT_THROW((void)negated_determinant(*p, {{1}}), PreconditionError);
  auto d = fixture_pair("double-boolean");
  EXPECT_THROW((void)negated_determinant(*d, PairMatrix(5, std::vector<Elem>(5, 0))), PreconditionError);
}

TEST(Determinant, EqualRowsLandInA0) {
  for (const auto& name : {"double-boolean", "supertropical-trivial"}) {
    auto p = fixture_pair(name);
    const auto& el = p->elements();
    const std::size_t n = el.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_TRUE(p->in_a0(negated_determinant(*p, {{el[a], el[b]}, {el[a], el[b]}}))) << name;
      }
    }
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 400; ++k) {
      std::vector<Elem> r1{el[pick(rng)], el[pick(rng)], el[pick(rng)]};
      std::vector<Elem> r2{el[pick(rng)], el[pick(rng)], el[pick(rng)]};
      EXPECT_TRUE(p->in_a0(negated_determinant(*p, {r1, r2, r1}))) << name;
      EXPECT_TRUE(p->in_a0(negated_determinant(*p, {r2, r1, r1}))) << name;
    }
  }
}

TEST(Determinant, AdjointChainOnDoubledBoolean) {
  auto p = fixture_pair("double-boolean");
  const auto& s = p->carrier();
  const auto& el = p->elements();
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
    PairMatrix a(n, std::vector<Elem>(n));
    for (auto& row : a) {
      for (auto& x : row) x = el[pick(rng)];
    }
    const Elem det = negated_determinant(*p, a);
    const auto adj = negated_adjoint(*p, a);
    const auto prod = matrix_product(s, adj, a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          EXPECT_EQ(prod[i][j], det);
        } else {
          EXPECT_TRUE(p->in_a0(prod[i][j]));
        }
      }
    }
    // det(A) v <= adj(A) A v for every vector v.
    std::vector<std::vector<Elem>> v(n, std::vector<Elem>(1));
    for (auto& x : v) x[0] = el[pick(rng)];
    const auto lhs = matrix_product(s, adj, matrix_product(s, a, v));
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(p->preceq(s.mul(det, v[i][0]), lhs[i][0]));
  }
}

TEST(Integral, BaseElementHasDegreeOne) {
  auto w = supertropical_pair(Domain::integers, Window{3});
  const auto e = subpair_extension(w, w->elements());
  const auto r = is_integral(e, ST::tangible(2), 3);
  ASSERT_EQ(r.found, Truth::yes);
  EXPECT_EQ(r.degree, 1u);
  EXPECT_EQ(r.coefficients, std::vector<Elem>{ST::tangible(2)});
}

TEST(Integral, AgreesWithRecordOracleOverPrimeSubpair) {
  auto w = supertropical_pair(Domain::integers, Window{6});
  const auto base = prime_subpair();
  const auto e = subpair_extension(w, base);
  for (long l = -3; l <= 3; ++l) {
    for (Elem y : {ST::tangible(l), ST::ghost(l)}) {
      const auto r = is_integral(e, y, 3);
      const auto expect = oracle_integral_degree(base, y, 3);
      ASSERT_EQ(r.found == Truth::yes, expect.has_value()) << w->format(y);
      if (expect) {
        EXPECT_EQ(r.degree, *expect) << w->format(y);
        const auto pw = [&](unsigned n) { return w->carrier().pow(y, n); };
        Elem lhs = ST::kZero;
        for (unsigned i = 0; i < r.degree; ++i) {
          lhs = w->carrier().add(lhs, w->carrier().mul(r.coefficients[i], pw(i)));
        }
        EXPECT_TRUE(spreceq(sv(lhs), sv(pw(r.degree))));
      } else {
        EXPECT_EQ(r.found, Truth::unknown);
      }
    }
  }
}

TEST(Integral, WeaklyBipotentTangibleIsNotIntegralOverPrimeSubpair) {
  auto w = supertropical_pair(Domain::integers, Window{6});
  const auto e = subpair_extension(w, prime_subpair());
  for (long l : {-3L, 3L}) {
    const Elem a = ST::tangible(l);
    // a^2 + a is a^2 or a, the weakly bipotent dichotomy.
    const Elem sq = w->carrier().mul(a, a);
    const Elem sum = w->carrier().add(sq, a);
    EXPECT_TRUE(sum == sq || sum == a);
    EXPECT_EQ(is_integral(e, a, 4).found, Truth::unknown);
    EXPECT_EQ(is_integral(e, a, 4, true).found, Truth::unknown);
  }
}

TEST(Algebraic, SumWithItselfIsGhost) {
  auto w = supertropical_pair(Domain::integers, Window{3});
  const auto e = subpair_extension(w, w->elements());
  const Elem y = ST::tangible(3);
  const auto r = is_algebraic(e, y, 2);
  ASSERT_EQ(r.found, Truth::yes);
  EXPECT_EQ(r.degree, 1u);
  ASSERT_EQ(r.coefficients.size(), 2u);
  const auto& s = w->carrier();
  const Elem value = s.add(r.coefficients[0], s.mul(r.coefficients[1], y));
  EXPECT_TRUE(sv(value).kind == 2);
  EXPECT_FALSE(w->in_a0(r.coefficients[1]));
  EXPECT_EQ(is_algebraic(e, y, 0).found, Truth::unknown);
}

TEST(Algebraic, IntegralRelationsInW0AreAlgebraic) {
  auto w = supertropical_pair(Domain::integers, Window{6});
  const auto e = subpair_extension(w, prime_subpair());
  int implied = 0;
  for (long l = -3; l <= 3; ++l) {
    for (Elem y : {ST::tangible(l), ST::ghost(l)}) {
      const auto r = is_integral(e, y, 3);
      if (r.found != Truth::yes || !w->in_a0(integral_relation_value(e, y, r))) continue;
      const auto a = is_algebraic(e, y, 3);
      ASSERT_EQ(a.found, Truth::yes) << w->format(y);
      EXPECT_LE(a.degree, r.degree);
      ++implied;
    }
  }
  EXPECT_GT(implied, 0);
}

TEST(Algebraic, TangibleResultNeedsOnlyTangibleCoefficients) {
  auto w = supertropical_pair(Domain::integers, Window{6});
  const auto e = subpair_extension(w, w->elements());
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> level(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  int tangible = 0;
  for (int k = 0; k < 500; ++k) {
    std::vector<Elem> c;
    for (int i = 0; i < 3; ++i) {
      const int t = kind(rng);
      const long l = level(rng);
      c.push_back(t == 0 ? ST::kZero : t == 1 ? ST::tangible(l) : ST::ghost(l));
    }
    const Elem y = ST::tangible(level(rng));
    const auto& s = w->carrier();
    const Elem v = s.add(c[0], s.add(s.mul(c[1], y), s.mul(c[2], s.mul(y, y))));
    if (!w->in_t(v)) continue;
    ++tangible;
    EXPECT_TRUE(tangible_part_suffices(e, y, c));
  }
  EXPECT_GT(tangible, 50);
  EXPECT_FALSE(tangible_part_suffices(e, ST::tangible(2), {ST::ghost(5), ST::tangible(0)}));
}

TEST(CongruenceAlgebraic, BaseElementIsSeparated) {
  auto w = supertropical_pair(Domain::integers, Window{2});
  const auto e = subpair_extension(w, w->elements());
  const auto r = is_congruence_algebraic(e, ST::tangible(1), 1);
  ASSERT_EQ(r.algebraic, Truth::yes);
  const auto& [f1, f2, b] = *r.certificate;
  const auto& s = w->carrier();
  const Elem y[] = {ST::tangible(1)};
  const Elem pb[] = {b};
  EXPECT_TRUE(spreceq(sv(poly_eval(s, f2, y)), sv(poly_eval(s, f1, y))));
  EXPECT_FALSE(spreceq(sv(poly_eval(s, f2, pb)), sv(poly_eval(s, f1, pb))));
}

TEST(CongruenceAlgebraic, InvertibleTangibleOverPrimeSubpair) {
  auto w = supertropical_pair(Domain::integers, Window{6});
  const auto e = subpair_extension(w, prime_subpair());
  const auto& s = w->carrier();
  for (long l : {-3L, 3L}) {
    const Elem a = ST::tangible(l);
    const auto r = is_congruence_algebraic(e, a, 2);
    ASSERT_EQ(r.algebraic, Truth::yes);
    const auto& [f1, f2, b] = *r.certificate;
    const Elem y[] = {a};
    const Elem pb[] = {b};
    EXPECT_TRUE(spreceq(sv(poly_eval(s, f2, y)), sv(poly_eval(s, f1, y))));
    EXPECT_FALSE(spreceq(sv(poly_eval(s, f2, pb)), sv(poly_eval(s, f1, pb))));
  }
}

TEST(PolynomialExtension, FormalVariableIsTranscendentalOverBoolean) {
  const auto e = polynomial_extension(boolean_pair(), 2);
  ASSERT_TRUE(e.generator.has_value());
  EXPECT_EQ(e.ext->format(*e.generator), "x");
  const auto r = is_congruence_algebraic(e, *e.generator, 2);
  EXPECT_EQ(r.algebraic, Truth::unknown);
  EXPECT_GT(r.pairs_checked, 0u);
  EXPECT_TRUE(verify_extension(e).ok()) << verify_extension(e).violations().front().axiom;
  EXPECT_EQ(is_integral(e, *e.generator, 3).found, Truth::unknown);
  EXPECT_EQ(is_algebraic(e, *e.generator, 3).found, Truth::unknown);
}

TEST(PolynomialExtension, SurpassingIsCoefficientwise) {
  auto base = fixture_pair("supertropical-trivial");
  const auto e = polynomial_extension(base, 1);
  const auto& s = e.ext->carrier();
  const Elem f = s.parse_or_throw("x + 1");
  const Elem g = s.parse_or_throw("1v*x + 1");
  EXPECT_EQ(e.ext->surpasses(f, g), Truth::yes);
  EXPECT_EQ(e.ext->surpasses(g, f), Truth::no);
  EXPECT_TRUE(e.ext->in_a0(s.parse_or_throw("1v*x^2 + 1v")));
  EXPECT_TRUE(e.ext->in_t(s.parse_or_throw("x^3")));
  EXPECT_FALSE(e.ext->in_t(s.parse_or_throw("x + 1")));
  const auto r = is_integral(e, s.parse_or_throw("1v*x"), 2);
  ASSERT_EQ(r.found, Truth::yes);
  EXPECT_EQ(r.degree, 1u);
}

TEST(Inclusion, BooleanIntoDoubledBoolean) {
  auto b = boolean_pair();
  auto d = fixture_pair("double-boolean");
  const Elem z = d->carrier().parse_or_throw("(0,0)");
  const Elem one = d->carrier().parse_or_throw("(1,0)");
  const auto e = inclusion_extension(b, d, {z, one});
  const auto report = verify_extension(e);
  EXPECT_FALSE(report.violates("centralizing"));
  EXPECT_FALSE(report.violates("base closed under multiplication"));
  // The diagonal (1,1) is not a multiple of the base A0 = {0}.
  EXPECT_TRUE(report.violates("W0 = A0 W"));
  const Elem swap = d->carrier().parse_or_throw("(0,1)");
  EXPECT_THROW(inclusion_extension(b, d, {z, swap}), StructureError);
}
