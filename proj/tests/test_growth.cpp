#include <gtest/gtest.h>

#include <algorithm>

#include "tpairs/fixtures.hpp"
#include "tpairs/growth.hpp"

using namespace tpairs;
using ST = SupertropicalSemiring;

namespace {

std::vector<Word> letters(std::size_t t) {
  std::vector<Word> out;
  for (std::uint32_t i = 0; i < t; ++i) out.push_back({i});
  return out;
}

// B[x1..xt] modulo monomials of degree >= n as a finite semiring on subsets
// of the surviving monomials (bitmasks).
struct Truncated {
  FiniteSemiringPtr ring;
  std::vector<std::vector<unsigned>> monomials;  // exponent vectors
};

Truncated truncated_boolean(std::size_t t, unsigned n) {
  Truncated out;
  std::vector<unsigned> e(t, 0);
  std::function<void(std::size_t, unsigned)> gen = [&](std::size_t i, unsigned left) {
    if (i == t) {
      out.monomials.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      gen(i + 1, left - k);
    }
  };
  gen(0, n - 1);
  const auto& mons = out.monomials;
  const std::size_t m = mons.size();
  auto index_of = [&](const std::vector<unsigned>& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < m; ++i) {
      if (mons[i] == x) return i;
    }
    return std::nullopt;
  };
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) labels.push_back("s" + std::to_string(s));
  auto mul = [&](Elem a, Elem b) {
    Elem r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((a >> i) & 1)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!((b >> j) & 1)) continue;
        std::vector<unsigned> x(t);
        for (std::size_t k = 0; k < t; ++k) x[k] = mons[i][k] + mons[j][k];
        if (auto idx = index_of(x)) r |= Elem{1} << *idx;
      }
    }
    return r;
  };
  const auto one = static_cast<Elem>(Elem{1} << *index_of(std::vector<unsigned>(t, 0)));
  out.ring = std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "B[x]/deg" + std::to_string(n), labels, [](Elem a, Elem b) { return a | b; }, mul, 0, one));
  return out;
}

}  // namespace

TEST(Growth, FreeTwoLetterAlgebraDoubles) {
  const auto g = growth_sequence(free_monoid_algebra(2), letters(2), {}, 8);
  ASSERT_EQ(g.d.size(), 8u);
  for (unsigned k = 1; k <= 8; ++k) EXPECT_EQ(g.d[k - 1], std::size_t{1} << k);
  EXPECT_EQ(hilbert_series(g, 5).coefficients, (std::vector<std::size_t>{2, 4, 8, 16, 32}));
}

TEST(Growth, PolynomialAlgebraMatchesClosedForm) {
  for (std::size_t t = 1; t <= 3; ++t) {
    const auto g = growth_sequence(polynomial_algebra(t), letters(t), {}, 8);
    EXPECT_EQ(hilbert_series(g, 8).coefficients, polynomial_hilbert_coefficients(t, 8)) << t;
  }
  const auto two = growth_sequence(polynomial_algebra(2), letters(2), {}, 6);
  EXPECT_EQ(hilbert_series(two, 6).coefficients, (std::vector<std::size_t>{2, 3, 4, 5, 6, 7}));
  // Cumulative ranks are C(k + t, t) - 1: the degree-0 monomial is not in W_k.
  EXPECT_EQ(two.cumulative, (std::vector<std::size_t>{2, 5, 9, 14, 20, 27}));
}

TEST(Growth, ClosedFormOracleByCounting) {
  // Count exponent vectors of total degree k directly.
  for (std::size_t t = 1; t <= 3; ++t) {
    const auto closed = polynomial_hilbert_coefficients(t, 6);
    for (unsigned k = 1; k <= 6; ++k) {
      std::size_t count = 0;
      for (unsigned a = 0; a <= k; ++a) {
        for (unsigned b = 0; b <= k; ++b) {
          for (unsigned c = 0; c <= k; ++c) {
            const bool fits = (t >= 2 || b == 0) && (t >= 3 || c == 0);
            if (fits && a + b + c == k) ++count;
          }
        }
      }
      EXPECT_EQ(closed[k - 1], count);
    }
  }
}

TEST(Growth, ZeroExtensionHasZeroSeries) {
  const auto g = growth_sequence(polynomial_algebra(1), {}, {}, 5);
  EXPECT_EQ(hilbert_series(g, 5).coefficients, std::vector<std::size_t>(5, 0));
  EXPECT_EQ(gk_dimension(g).value, 0.0);
}

TEST(Growth, RelativeCountSkipsW0Monomials) {
  // V = A x + A x^2 and V' = A x^2: W_k has degrees 1..2k, (W0)_k the even ones.
  const auto g = growth_sequence(polynomial_algebra(1), {{0}, {0, 0}}, {{0, 0}}, 6);
  EXPECT_EQ(g.d, std::vector<std::size_t>(6, 1));
  EXPECT_EQ(g.cumulative, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(g.filtration_sizes, (std::vector<std::size_t>{2, 4, 6, 8, 10, 12}));
}

TEST(Growth, FiniteExtensionIsBounded) {
  const auto g = growth_sequence(truncated_polynomial_algebra(2, 3), letters(2), {}, 6);
  EXPECT_EQ(g.d, (std::vector<std::size_t>{2, 3, 0, 0, 0, 0}));
  const auto m = growth_sequence(matrix_unit_algebra(2), letters(4), {}, 8);
  EXPECT_EQ(m.d, (std::vector<std::size_t>{4, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_NEAR(gk_dimension(m).value, 0.0, 0.1);
}

TEST(Growth, MonomialCountAgreesWithExhaustiveRank) {
  for (const auto& [t, n] : {std::pair<std::size_t, unsigned>{1, 4}, {2, 3}}) {
    const auto tr = truncated_boolean(t, n);
    // Inclusion B -> W sends 1 to the constant monomial.
    const std::vector<Elem> inclusion{tr.ring->zero(), tr.ring->one()};
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < tr.monomials.size(); ++i) {
      unsigned deg = 0;
      for (auto x : tr.monomials[i]) deg += x;
      if (deg == 1) gens.push_back(Elem{1} << i);
    }
    const auto exhaustive = growth_sequence(*tr.ring, boolean_pair(), inclusion, gens, {}, 5);
    const auto counted = growth_sequence(truncated_polynomial_algebra(t, n), letters(t), {}, 5);
    EXPECT_FALSE(exhaustive.truncated);
    EXPECT_EQ(exhaustive.d, counted.d) << t;
    EXPECT_EQ(exhaustive.cumulative, counted.cumulative) << t;
  }
}

TEST(Growth, MatrixFixtureHasZeroGk) {
  auto m = matrix_semiring(*boolean_semiring(), 2, false);
  std::vector<Elem> units;
  for (const char* u : {"[1,0;0,0]", "[0,1;0,0]", "[0,0;1,0]", "[0,0;0,1]"}) units.push_back(m->parse_or_throw(u));
  const auto g = growth_sequence(*m, boolean_pair(), {m->zero(), m->one()}, units, {}, 8);
  EXPECT_EQ(g.d.front(), 4u);
  EXPECT_TRUE(std::all_of(g.d.begin() + 1, g.d.end(), [](std::size_t x) { return x == 0; }));
  const auto gk = gk_dimension(g);
  EXPECT_NEAR(gk.value, 0.0, 0.1);
  EXPECT_FALSE(gk.divergent);
}

TEST(Gk, PolynomialVariablesAddOne) {
  const auto one = gk_dimension(growth_sequence(polynomial_algebra(1), letters(1), {}, 10));
  EXPECT_NEAR(one.value, 1.0, 0.25);
  EXPECT_FALSE(one.divergent);
  const auto two = gk_dimension(growth_sequence(polynomial_algebra(2), letters(2), {}, 10));
  EXPECT_NEAR(two.value - one.value, 1.0, 0.4);
  EXPECT_FALSE(two.divergent);
}

TEST(Gk, FreeAlgebraDiverges) {
  const auto g = gk_dimension(growth_sequence(free_monoid_algebra(2), letters(2), {}, 10));
  EXPECT_TRUE(g.divergent);
  EXPECT_THROW(gk_dimension(growth_sequence(free_monoid_algebra(2), letters(2), {}, 3)), PreconditionError);
}

TEST(Growth, GeneratorOrderDoesNotMatter) {
  auto gens = letters(3);
  gens.push_back({0, 1});
  const auto base = growth_sequence(free_monoid_algebra(3), gens, {}, 5);
  std::reverse(gens.begin(), gens.end());
  EXPECT_EQ(growth_sequence(free_monoid_algebra(3), gens, {}, 5).d, base.d);
}

TEST(Growth, EquivalentGeneratingSets) {
  const auto d = growth_sequence(polynomial_algebra(1), {{0}}, {}, 10).d;
  const auto d2 = growth_sequence(polynomial_algebra(1), {{0}, {0, 0}}, {}, 10).d;
  EXPECT_EQ(d2, std::vector<std::size_t>(10, 2));
  const auto eq = growth_equivalence(d, d2);
  ASSERT_TRUE(eq.has_value());
  for (std::size_t k = 1; k * eq->second <= d.size(); ++k) EXPECT_LE(d2[k - 1], eq->first * d[k * eq->second - 1]);
  EXPECT_FALSE(growth_equivalence(d, growth_sequence(free_monoid_algebra(2), letters(2), {}, 10).d, 3));
}

TEST(OreWitness, SupertropicalNaturals) {
  auto p = supertropical_pair(Domain::naturals, Window{20});
  const auto& s = p->carrier();
  const Elem a1 = ST::tangible(1), a2 = ST::tangible(2);
  // The pair b1 = 1, b2 = 0 already works: 2 + 2 = 2v.
  EXPECT_EQ(s.add(s.mul(ST::tangible(1), a1), s.mul(ST::tangible(0), a2)), ST::ghost(2));
  const auto w = ore_witness(*p, a1, a2, 3);
  ASSERT_EQ(w.found, Truth::yes);
  EXPECT_FALSE(p->in_a0(w.b1));
  EXPECT_FALSE(p->in_a0(w.b2));
  EXPECT_TRUE(p->in_a0(s.add(s.mul(w.b1, a1), s.mul(w.b2, a2))));
  // Degree 1 only offers b1 = b2 = 1, which gives 1 + 2 = 2.
  EXPECT_EQ(w.degree, 2u);
  EXPECT_EQ(ore_witness(*p, a1, a2, 1).found, Truth::unknown);
}

TEST(OreWitness, EqualEntriesUseUnitCoefficients) {
  auto p = supertropical_pair(Domain::naturals, Window{20});
  const Elem a = ST::tangible(3);
  const auto w = ore_witness(*p, a, a, 2);
  ASSERT_EQ(w.found, Truth::yes);
  EXPECT_EQ(w.degree, 1u);
  EXPECT_EQ(w.b1, ST::tangible(0));
  EXPECT_EQ(w.b2, ST::tangible(0));
}

TEST(OreWitness, NaturalsHaveNoWitness) {
  auto p = natural_pair(Window{20});
  EXPECT_EQ(ore_witness(*p, 1, 2, 1).found, Truth::unknown);
  EXPECT_EQ(ore_witness(*p, 1, 2, 3).found, Truth::unknown);
  EXPECT_THROW(ore_witness(*p, 0, 2, 1), PreconditionError);
}
