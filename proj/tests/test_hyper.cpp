#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "tpairs/hyper.hpp"
#include "tpairs/predicates.hpp"

using namespace tpairs;

namespace {

// Oracle: cosets of G in Z/p and their sums, built from plain modular arithmetic.
struct FieldCosets {
  int p;
  std::vector<int> g;
  std::set<int> coset(int a) const {
    std::set<int> out;
    for (int x : g) out.insert(a * x % p);
    return out;
  }
  std::set<std::set<int>> sum(int a, int b) const {
    std::set<std::set<int>> out;
    for (int x : coset(a)) {
      for (int y : coset(b)) out.insert(coset((x + y) % p));
    }
    return out;
  }
};

std::set<int> members_of(const HyperQuotient& q, Elem c) {
  std::set<int> out;
  for (std::size_t i = 0; i < q.projection.size(); ++i) {
    if (q.projection[i] == c) out.insert(static_cast<int>(i));
  }
  return out;
}

}  // namespace

TEST(SemiHyperring, KrasnerIsValid) {
  const auto k = krasner_hyperfield();
  const auto r = verify_semihyperring(k);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked(), 8u);
  EXPECT_EQ(k.format(k.sum(1, 1)), "{0,1}");
}

TEST(SemiHyperring, SingleValuedBooleanIsValid) {
  auto k = krasner_hyperfield();
  k.add[3] = singleton(1);
  EXPECT_TRUE(verify_semihyperring(k).ok());
  EXPECT_TRUE(find_isomorphism(k, as_hyperring(*boolean_semiring())).has_value());
}

TEST(SemiHyperring, NeutralityViolation) {
  auto k = krasner_hyperfield();
  k.add[1] = singleton(0) | singleton(1);
  k.add[2] = singleton(0) | singleton(1);
  const auto r = verify_semihyperring(k);
  ASSERT_TRUE(r.violates("neutrality"));
  EXPECT_EQ(r.find("neutrality")->witness, (std::vector<std::string>{"0", "1"}));
}

TEST(SemiHyperring, EmptySumIsStructural) {
  auto k = krasner_hyperfield();
  k.add[3] = 0;
  EXPECT_THROW(verify_semihyperring(k), StructureError);
  auto bad = krasner_hyperfield();
  bad.mul.pop_back();
  EXPECT_THROW(verify_semihyperring(bad), StructureError);
}

TEST(Powerset, KrasnerBothChoices) {
  const auto k = krasner_hyperfield();
  auto p = powerset_pair(k, A0Choice::size_ge_two);
  EXPECT_EQ(p->finite()->labels(), (std::vector<std::string>{"{0}", "{1}", "{0,1}"}));
  EXPECT_TRUE(verify_semiring_axioms(*p->finite()).ok());
  EXPECT_TRUE(verify_admissible(*p).ok());
  EXPECT_TRUE(is_shallow(*p));
  EXPECT_EQ(p->carrier().format(p->carrier().add(1, 1)), "{0,1}");
  EXPECT_EQ(p->surpass_kind(), SurpassKind::subset_inclusion);
  EXPECT_TRUE(p->preceq(1, 2));
  EXPECT_FALSE(p->preceq(2, 1));

  auto q = powerset_pair(k, A0Choice::contains_zero);
  EXPECT_TRUE(q->in_a0(2));
  EXPECT_FALSE(q->in_a0(1));
  EXPECT_TRUE(verify_admissible(*q).ok());
}

TEST(Powerset, FieldQuotientsAreAdmissibleAndShallow) {
  for (auto [p, g] : std::vector<std::pair<int, std::vector<Elem>>>{{3, {1, 2}}, {5, {1, 4}}, {7, {1, 2, 4}}}) {
    const auto q = krasner_quotient(*integers_mod(p), g);
    EXPECT_TRUE(verify_semihyperring(q.ring).ok()) << p;
    auto pair = powerset_pair(q.ring, A0Choice::size_ge_two);
    EXPECT_TRUE(verify_admissible(*pair).ok()) << p;
    EXPECT_TRUE(is_shallow(*pair)) << p;
    // inclusion is reflexive and antisymmetric on the carrier
    for (Elem a : pair->elements()) {
      EXPECT_TRUE(pair->preceq(a, a));
      for (Elem b : pair->elements()) {
        if (a != b) EXPECT_FALSE(pair->preceq(a, b) && pair->preceq(b, a));
      }
    }
  }
}

TEST(Krasner, F3MatchesOracle) {
  const auto start = std::chrono::steady_clock::now();
  const auto q = krasner_quotient(*integers_mod(3), {1, 2});
  EXPECT_EQ(q.ring.size(), 2u);
  EXPECT_EQ(q.ring.labels, (std::vector<std::string>{"[0]", "[1]"}));
  EXPECT_EQ(q.ring.format(q.ring.sum(1, 1)), "{[0],[1]}");
  EXPECT_TRUE(verify_semihyperring(q.ring).ok());
  EXPECT_TRUE(find_isomorphism(q.ring, krasner_hyperfield()).has_value());
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(Krasner, PrimeFieldsAgainstOracle) {
  for (auto [p, g] : std::vector<std::pair<int, std::vector<int>>>{{5, {1, 4}}, {7, {1, 2, 4}}, {7, {1, 6}}, {5, {1, 2, 3, 4}}}) {
    FieldCosets oracle{p, g};
    const auto q = krasner_quotient(*integers_mod(p), std::vector<Elem>(g.begin(), g.end()));
    for (Elem c = 0; c < static_cast<Elem>(q.ring.size()); ++c) {
      EXPECT_EQ(members_of(q, c), oracle.coset(static_cast<int>(q.representatives[c])));
      for (Elem d = 0; d < static_cast<Elem>(q.ring.size()); ++d) {
        std::set<std::set<int>> got;
        for (Elem e : subset_elements(q.ring.sum(c, d))) got.insert(members_of(q, e));
        EXPECT_EQ(got, oracle.sum(static_cast<int>(q.representatives[c]), static_cast<int>(q.representatives[d])));
      }
    }
  }
}

TEST(Krasner, TrivialSubgroupReproducesCarrier) {
  auto f5 = integers_mod(5);
  const auto q = krasner_quotient(*f5, {1});
  EXPECT_TRUE(find_isomorphism(q.ring, as_hyperring(*f5)).has_value());
  for (Elem a = 0; a < 5; ++a) {
    for (Elem b = 0; b < 5; ++b) EXPECT_EQ(std::popcount(q.ring.sum(a, b)), 1);
  }
}

TEST(Krasner, RejectsNonSubgroups) {
  auto f7 = integers_mod(7);
  EXPECT_THROW(krasner_quotient(*f7, {1, 2}), PreconditionError);
  EXPECT_THROW(krasner_quotient(*f7, {2, 4}), PreconditionError);
  EXPECT_THROW(krasner_quotient(*f7, {0, 1}), PreconditionError);
}

TEST(Krasner, SymbolicRationalsGiveBoolean) {
  RationalSemiring q;
  const auto h = krasner_quotient(q, [](Elem e) { return RationalSemiring::numerator(e) > 0; }, Window{8});
  EXPECT_EQ(h.ring.labels, (std::vector<std::string>{"[0]", "[1/8]"}));
  EXPECT_EQ(h.ring.sum(1, 1), singleton(1));
  EXPECT_TRUE(verify_semihyperring(h.ring).ok());
  EXPECT_TRUE(find_isomorphism(h.ring, as_hyperring(*boolean_semiring())).has_value());
}

TEST(HyperQuotient, AgreesWithKrasnerOnSingleValued) {
  for (auto [p, g] : std::vector<std::pair<int, std::vector<Elem>>>{{3, {1, 2}}, {7, {1, 2, 4}}, {7, {1, 6}}}) {
    auto f = integers_mod(p);
    const auto a = krasner_quotient(*f, g);
    const auto b = hyper_coset_quotient(as_hyperring(*f), g);
    EXPECT_EQ(a.ring.add, b.ring.add);
    EXPECT_EQ(a.ring.mul, b.ring.mul);
    EXPECT_EQ(a.projection, b.projection);
  }
}

TEST(HyperQuotient, KrasnerByTrivialGroupIsItself) {
  const auto k = krasner_hyperfield();
  const auto q = hyper_coset_quotient(k, {1});
  EXPECT_EQ(q.ring.add, k.add);
  EXPECT_EQ(q.ring.mul, k.mul);
}

TEST(HyperQuotient, IteratedQuotientIsomorphism) {
  const auto f3 = as_hyperring(*integers_mod(3));
  const auto it = iterated_quotient(f3, {1}, {1, 2});
  EXPECT_LE(it.direct.ring.size(), 3u);
  EXPECT_TRUE(it.isomorphism.has_value());
  const auto f7 = as_hyperring(*integers_mod(7));
  const auto it7 = iterated_quotient(f7, {1, 6}, {1, 2, 3, 4, 5, 6});
  EXPECT_TRUE(it7.isomorphism.has_value());
  const auto it7b = iterated_quotient(krasner_quotient(*integers_mod(7), {1, 6}).ring, {1}, {1, 2, 3});
  EXPECT_TRUE(it7b.isomorphism.has_value());
  EXPECT_THROW(iterated_quotient(f7, {1, 6}, {1, 2, 4}), PreconditionError);
}

TEST(Isomorphism, DistinguishesNonIsomorphic) {
  auto b = krasner_hyperfield();
  b.add[3] = singleton(1);
  EXPECT_FALSE(find_isomorphism(b, krasner_hyperfield()).has_value());
  EXPECT_THROW(find_isomorphism(as_hyperring(*integers_mod(11)), as_hyperring(*integers_mod(11))), BoundExceeded);
}
