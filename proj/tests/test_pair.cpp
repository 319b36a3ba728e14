#include <gtest/gtest.h>

#include <climits>
#include <utility>

#include "tpairs/pair.hpp"
#include "tpairs/predicates.hpp"

using namespace tpairs;

namespace {

// Independent double(B) arithmetic on bool pairs.
using BB = std::pair<bool, bool>;
BB dadd(BB x, BB y) { return {x.first || y.first, x.second || y.second}; }
BB dmul(BB x, BB y) {
  return {(x.first && y.first) || (x.second && y.second), (x.first && y.second) || (x.second && y.first)};
}
Elem idx(BB x) { return (x.first ? 2 : 0) + (x.second ? 1 : 0); }
BB val(Elem e) { return {e / 2 == 1, e % 2 == 1}; }

Elem label(const SemiringPair& p, const std::string& text) { return p.carrier().parse_or_throw(text); }

}  // namespace

TEST(Double, BooleanMatchesOracle) {
  auto p = double_pair(boolean_semiring());
  const auto& s = *p->finite();
  ASSERT_EQ(s.size(), 4u);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      EXPECT_EQ(s.add(a, b), idx(dadd(val(a), val(b))));
      EXPECT_EQ(s.mul(a, b), idx(dmul(val(a), val(b))));
    }
  }
  EXPECT_TRUE(verify_semiring_axioms(s).ok());
  EXPECT_EQ(p->format_set(p->a0_elements()), "{(0,0),(1,1)}");
  EXPECT_EQ(p->format_set(p->tangibles()), "{(0,1),(1,0)}");
  EXPECT_TRUE(verify_admissible(*p).ok());
  EXPECT_TRUE(is_shallow(*p));
}

TEST(Double, DiagonalIsClosed) {
  for (auto base : {boolean_semiring(), truncated_nmax(2), three_chain()}) {
    auto p = double_pair(base);
    const auto& s = p->carrier();
    for (Elem x : p->a0_elements()) {
      for (Elem y : p->elements()) {
        EXPECT_TRUE(p->in_a0(s.mul(x, y)));
        EXPECT_TRUE(p->in_a0(s.mul(y, x)));
      }
    }
    EXPECT_TRUE(verify_semiring_axioms(*p->finite()).ok());
    EXPECT_TRUE(verify_admissible(*p).ok()) << p->name();
  }
}

TEST(Double, PropertyNAndNegation) {
  auto p = double_pair(boolean_semiring());
  const auto st = property_n_status(*p);
  EXPECT_TRUE(st.property_n);
  EXPECT_TRUE(st.neg_compatible);
  EXPECT_EQ(st.partners.at(label(*p, "(1,0)")), std::vector<Elem>{label(*p, "(0,1)")});
  const auto neg = derive_negation(*p);
  EXPECT_TRUE(neg.invariants.ok());
  for (Elem e : p->elements()) {
    const auto [x, y] = val(e);
    EXPECT_EQ(neg(e), idx({y, x}));
    EXPECT_EQ(neg(neg(e)), e);
    EXPECT_EQ(neg(e), p->negate(e));
  }
  EXPECT_TRUE(verify_negation_surpassing(*p, neg.map).ok());
}

TEST(Double, SymbolicDoublingOfMaxPlus) {
  auto p = double_pair(std::make_shared<MaxPlusSemiring>(Domain::integers));
  const auto& s = p->carrier();
  const Elem a = s.parse_or_throw("(3,-inf)"), b = s.parse_or_throw("(-inf,3)");
  EXPECT_TRUE(p->in_t(a));
  EXPECT_TRUE(p->in_a0(s.add(a, b)));
  EXPECT_EQ(s.format(s.mul(a, b)), "(-inf,6)");
  EXPECT_EQ(p->negate(a), b);
  EXPECT_TRUE(verify_semiring_axioms(s, Window{2}).ok());
}

TEST(Supertropical, TrivialMonoidThreeElements) {
  auto p = supertropical_extension(trivial_monoid());
  const auto& s = *p->finite();
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"0", "1", "1v"}));
  EXPECT_EQ(s.add(1, 1), 2);
  EXPECT_EQ(s.add(2, 2), 2);
  EXPECT_TRUE(verify_semiring_axioms(s).ok());
  EXPECT_TRUE(verify_admissible(*p).ok());
  EXPECT_TRUE(is_shallow(*p));
  for (Elem a : p->elements()) EXPECT_EQ(s.add(s.add(a, a), a), s.add(a, a));
}

TEST(Supertropical, SaturatedMonoidRejected) {
  // 1 * (2 + 3) = 1 * 3 = 3 but 1*2 + 1*3 = 3 + 3 is a ghost.
  EXPECT_THROW(supertropical_extension(truncated_nat_monoid(3)), StructureError);
}

TEST(Supertropical, CyclicOrderOracle) {
  // Z/2 as a monoid with 1 < a; a*a = 1 breaks monotonicity.
  OrderedMonoid z2{"z2", {"1", "a"}, {{0, 1}, {1, 0}}, 0, {0, 1}};
  EXPECT_THROW(supertropical_extension(z2), StructureError);
}

TEST(Supertropical, RejectsUnorderedOrIncompatibleMonoid) {
  auto m = trivial_monoid();
  m.rank.clear();
  EXPECT_THROW(supertropical_extension(m), StructureError);
  auto bad = truncated_nat_monoid(2);
  bad.rank = {0, 2, 1};
  EXPECT_THROW(supertropical_extension(bad), StructureError);
}

TEST(Supertropical, SymbolicIntegers) {
  auto p = supertropical_pair(Domain::integers, Window{10});
  const auto& s = p->carrier();
  EXPECT_EQ(s.format(s.add(s.parse_or_throw("2"), s.parse_or_throw("2"))), "2v");
  EXPECT_EQ(s.format(s.add(s.parse_or_throw("2"), s.parse_or_throw("3"))), "3");
  EXPECT_TRUE(verify_admissible(*p).ok());
  EXPECT_TRUE(is_shallow(*p));
  EXPECT_EQ(p->surpasses(s.parse_or_throw("2"), s.parse_or_throw("2v")), Truth::yes);
  EXPECT_EQ(p->surpasses(s.parse_or_throw("2"), s.parse_or_throw("3")), Truth::no);
  EXPECT_EQ(p->preceq0_witness(s.parse_or_throw("2"), s.parse_or_throw("2v")), s.parse_or_throw("2v"));
  const auto report = verify_surpassing(*p, true);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.window(), 10);
}

TEST(Supertropical, SymbolicOracleOnWindow) {
  auto p = supertropical_pair(Domain::integers, Window{4});
  const auto& s = p->carrier();
  // (level, ghost) decoded from labels; level INT_MIN stands for zero.
  const auto decode = [&](Elem e) -> std::pair<int, bool> {
    const std::string l = s.format(e);
    if (l == "-inf") return {INT32_MIN, false};
    return {std::stoi(l), l.back() == 'v'};
  };
  const auto elems = s.elements(Window{4});
  EXPECT_EQ(elems.size(), 19u);
  for (Elem x : elems) {
    for (Elem y : elems) {
      const auto [lx, gx] = decode(x);
      const auto [ly, gy] = decode(y);
      std::pair<int, bool> sum = lx > ly ? std::make_pair(lx, gx)
                                 : ly > lx ? std::make_pair(ly, gy)
                                           : std::make_pair(lx, lx != INT32_MIN);
      EXPECT_EQ(decode(s.add(x, y)), sum);
      const auto prod = (lx == INT32_MIN || ly == INT32_MIN) ? std::make_pair(INT32_MIN, false)
                                                             : std::make_pair(lx + ly, gx || gy);
      EXPECT_EQ(decode(s.mul(x, y)), prod);
      EXPECT_EQ(s.add(s.add(x, x), x), s.add(x, x));
    }
  }
}

TEST(Surpassing, WindowSearchIsThreeValued) {
  PairSpec spec;
  spec.name = "zmax_plain";
  spec.carrier = std::make_shared<MaxPlusSemiring>(Domain::integers);
  spec.in_a0 = [](Elem e) { return e == MaxPlusSemiring::kNegInf || e <= -5; };
  spec.in_t = [](Elem e) { return e > -5; };
  spec.window = Window{6};
  SemiringPair p(spec);
  EXPECT_EQ(p.surpasses(-7, -6), Truth::yes);
  EXPECT_EQ(p.surpasses(-7, 40), Truth::unknown);
}

TEST(Surpassing, DoubleBooleanAxioms) {
  auto p = double_pair(boolean_semiring());
  EXPECT_TRUE(verify_surpassing(*p, false).ok());
  EXPECT_TRUE(verify_surpassing(*p, true).ok());
  // tangible elements are only related to themselves
  for (Elem a : p->tangibles()) {
    for (Elem b : p->tangibles()) EXPECT_EQ(p->preceq(a, b), a == b);
  }
}

TEST(Surpassing, NonShallowPairCanFailStrong) {
  // Boolean pair with 2x2 upper triangular carrier is not shallow in general.
  auto b = boolean_semiring();
  auto p = finite_pair("B-bad", b, {0}, {1});
  EXPECT_TRUE(verify_surpassing(*p, true).ok());
  EXPECT_TRUE(verify_admissible(*p).ok());
  // 1 in A0 breaks disjointness
  auto q = finite_pair("B-both", b, {0, 1}, {1});
  EXPECT_TRUE(verify_admissible(*q).violates("A0 and T disjoint"));
}

TEST(PropertyN, BooleanHasNone) {
  auto p = boolean_pair();
  const auto st = property_n_status(*p);
  EXPECT_EQ(st.summary(), "none");
  EXPECT_EQ(st.missing, 1);
  EXPECT_THROW(derive_negation(*p), PreconditionError);
}

TEST(PropertyN, SupertropicalNegationIsIdentity) {
  auto p = supertropical_extension(trivial_monoid());
  const auto st = property_n_status(*p);
  EXPECT_TRUE(st.neg_compatible);
  for (const auto& [a, partners] : st.partners) EXPECT_EQ(partners, std::vector<Elem>{a});
  const auto neg = derive_negation(*p);
  for (Elem e : p->elements()) EXPECT_EQ(neg(e), e);
  EXPECT_TRUE(neg.invariants.ok());
}

TEST(Reversibility, DoubleBoolean) {
  auto p = double_pair(boolean_semiring());
  const Elem a = label(*p, "(1,0)");
  // plain reversibility fails: (0,1) + (1,0) = (1,1) in A0 but (1,0) is not below (0,1)
  const auto plain = check_reversibility(*p, a, ReversibilityMode::tangible);
  EXPECT_EQ(plain.holds, Truth::no);
  ASSERT_TRUE(plain.counterexample.has_value());
  EXPECT_TRUE(p->in_a0(p->carrier().add(plain.counterexample->first, plain.counterexample->second)));
  EXPECT_EQ(check_reversibility(*p, a, ReversibilityMode::neg_tangible).holds, Truth::yes);
  EXPECT_EQ(check_reversibility(*p, a, ReversibilityMode::neg_power, 3).holds, Truth::yes);
}

TEST(Reversibility, SupertropicalNegModes) {
  auto p = supertropical_pair(Domain::integers, Window{6});
  const Elem a = p->carrier().parse_or_throw("2");
  EXPECT_EQ(check_reversibility(*p, a, ReversibilityMode::neg_plain).holds, Truth::yes);
  EXPECT_EQ(check_reversibility(*p, a, ReversibilityMode::neg_tangible).holds, Truth::yes);
  auto finite = supertropical_extension(trivial_monoid());
  EXPECT_EQ(check_reversibility(*finite, 1, ReversibilityMode::neg_tangible).holds, Truth::yes);
}

TEST(Reversibility, BooleanPairExhaustive) {
  auto p = boolean_pair();
  // b + 1 = 1 is never in A0 = {0}, so the implication holds vacuously.
  EXPECT_EQ(check_reversibility(*p, 1, ReversibilityMode::plain).holds, Truth::yes);
  EXPECT_THROW(check_reversibility(*p, 1, ReversibilityMode::neg_plain), PreconditionError);
}

TEST(Center, CommutativeAndTriangular) {
  auto d = double_pair(boolean_semiring());
  const auto c = compute_center(*d);
  EXPECT_TRUE(c.pair_commutative);
  EXPECT_EQ(c.elements.size(), 4u);
  auto ut = matrix_semiring(*boolean_semiring(), 2, true);
  std::vector<Elem> t;
  for (Elem e : ut->elements()) {
    if (e != ut->zero()) t.push_back(e);
  }
  // A0 = {0}; T need not be a monoid for the center computation.
  auto p = finite_pair("UT2(B)", ut, {ut->zero()}, t);
  const auto cu = compute_center(*p);
  EXPECT_FALSE(cu.pair_commutative);
  EXPECT_LT(cu.elements.size(), 8u);
  EXPECT_FALSE(cu.elements.empty());
  EXPECT_TRUE(cu.transfer_hypothesis);
  EXPECT_EQ(cu.pair_commutative, cu.carrier_commutative);
}

TEST(Bipotence, Cases) {
  EXPECT_TRUE(check_weakly_bipotent(*supertropical_pair(Domain::integers, Window{8})).holds);
  EXPECT_TRUE(check_weakly_bipotent(*boolean_pair()).holds);
  // (1,0) + (0,1) = (1,1) but both squares are (1,0)
  EXPECT_TRUE(check_weakly_bipotent(*double_pair(boolean_semiring())).holds);
  auto d3 = double_pair(truncated_nmax(1));
  const auto r = check_weakly_bipotent(*d3);
  EXPECT_FALSE(r.holds);
}

TEST(Nondegeneracy, Supertropical) {
  auto p = supertropical_pair(Domain::integers, Window{3});
  const auto r = check_nondegenerate(*p, 2, 1);
  EXPECT_TRUE(r.nondegenerate);
  EXPECT_EQ(r.polynomials_checked, 8u * 8u * 8u - 1u);
  ASSERT_TRUE(r.tangible_value_property.has_value());
  EXPECT_TRUE(*r.tangible_value_property);
}

TEST(Nondegeneracy, TrivialExtensionIsDegenerate) {
  // x + 1 at the only tangible gives 1 + 1, a ghost.
  auto p = supertropical_extension(trivial_monoid());
  const auto r = check_nondegenerate(*p, 2, 1);
  EXPECT_FALSE(r.nondegenerate);
  ASSERT_TRUE(r.witness.has_value());
  for (Elem t : p->tangibles()) {
    const Elem pt[] = {t};
    EXPECT_TRUE(p->in_a0(poly_eval(p->carrier(), *r.witness, pt)));
  }
}

TEST(Nondegeneracy, DoubleBooleanIsDegenerate) {
  auto p = double_pair(boolean_semiring());
  const auto r = check_nondegenerate(*p, 2, 1);
  EXPECT_FALSE(r.nondegenerate);
  const auto& s = p->carrier();
  const auto f = parse_polynomial(s, "(0,1)*x^2 + (1,0)", {"x"});
  for (Elem t : p->tangibles()) {
    const Elem pt[] = {t};
    EXPECT_TRUE(p->in_a0(poly_eval(s, f, pt)));
  }
}
