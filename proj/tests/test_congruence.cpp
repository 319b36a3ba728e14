#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tpairs/congruence.hpp"
#include "tpairs/fixtures.hpp"
#include "tpairs/predicates.hpp"

using namespace tpairs;

namespace {

// Oracle: all set partitions as restricted growth strings.
void partitions(std::size_t n, std::vector<Elem>& cur, Elem max_used, std::vector<std::vector<Elem>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (Elem c = 0; c <= max_used + 1; ++c) {
    cur.push_back(c);
    partitions(n, cur, std::max(max_used, c), out);
    cur.pop_back();
  }
}

// Oracle: direct check that a partition is a pair-congruence.
bool is_pair_congruence(const SemiringPair& p, const std::vector<Elem>& cls) {
  const auto& s = *p.finite();
  const auto n = static_cast<Elem>(s.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (cls[a] != cls[b]) continue;
      if (p.in_t(a) && p.in_a0(b)) return false;
      for (Elem c = 0; c < n; ++c) {
        if (cls[s.add(a, c)] != cls[s.add(b, c)]) return false;
        if (cls[s.mul(a, c)] != cls[s.mul(b, c)]) return false;
        if (cls[s.mul(c, a)] != cls[s.mul(c, b)]) return false;
      }
    }
  }
  return true;
}

std::set<std::vector<Elem>> brute_force_lattice(const PairPtr& p) {
  std::vector<std::vector<Elem>> all;
  std::vector<Elem> cur;
  partitions(p->finite()->size(), cur, -1, all);
  std::set<std::vector<Elem>> out;
  for (const auto& cls : all) {
    if (is_pair_congruence(*p, cls)) out.insert(Congruence(p, cls).classes());
  }
  return out;
}

TwistElement tw(const SemiringPair& p, const std::string& a, const std::string& b) {
  return {p.carrier().parse_or_throw(a), p.carrier().parse_or_throw(b)};
}

}  // namespace

namespace tpairs {
void PrintTo(const Congruence& c, std::ostream* os) { *os << c.format(); }
}  // namespace tpairs

TEST(Twist, BooleanExample) {
  auto b = boolean_semiring();
  EXPECT_EQ(twist_product(*b, {0, 1}, {0, 1}), (TwistElement{1, 0}));
  EXPECT_EQ(twist_power(*b, {0, 1}, 3), (TwistElement{0, 1}));
}

TEST(Twist, DiagonalAbsorbs) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    const auto& s = p->carrier();
    for (Elem a : p->elements()) {
      for (Elem b : p->elements()) {
        for (Elem c : p->elements()) {
          const auto r = twist_product(s, {a, a}, {b, c});
          EXPECT_EQ(r.first, r.second);
          EXPECT_EQ(r.first, s.add(s.mul(a, b), s.mul(a, c)));
        }
      }
    }
  }
}

TEST(Twist, AssociativeOnSmallCarriers) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    if (p->elements().size() > 5) continue;
    const auto& s = p->carrier();
    std::vector<TwistElement> all;
    for (Elem a : p->elements()) {
      for (Elem b : p->elements()) all.emplace_back(a, b);
    }
    for (const auto& x : all) {
      for (const auto& y : all) {
        for (const auto& z : all) {
          ASSERT_EQ(twist_product(s, twist_product(s, x, y), z), twist_product(s, x, twist_product(s, y, z))) << name;
        }
      }
    }
  }
}

TEST(Twist, AssociativeOnSymbolicSample) {
  auto p = supertropical_pair(Domain::integers, Window{20});
  const auto& s = p->carrier();
  const auto els = p->elements();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  const auto r = [&] { return TwistElement{els[pick(rng)], els[pick(rng)]}; };
  for (int i = 0; i < 10000; ++i) {
    const auto x = r(), y = r(), z = r();
    ASSERT_EQ(twist_product(s, twist_product(s, x, y), z), twist_product(s, x, twist_product(s, y, z)));
  }
}

TEST(Generate, EmptySeedsGiveDiagonal) {
  auto p = fixture_pair("double-boolean");
  auto g = generate_congruence(p, {});
  ASSERT_TRUE(g);
  EXPECT_TRUE(g.congruence->is_diagonal());
  EXPECT_EQ(*g.congruence, Congruence::diagonal(p));
}

TEST(Generate, BooleanSeedIsInadmissible) {
  auto p = boolean_pair();
  auto g = generate_congruence(p, {{1, 0}});
  EXPECT_FALSE(g);
  ASSERT_TRUE(g.offending.has_value());
  EXPECT_EQ(*g.offending, (TwistElement{1, 0}));
}

TEST(Generate, PrincipalCongruenceMatchesFormula) {
  // Cong_a is generated by (a, 0); compare with the relation {(a1 a, a2 a)} closed up.
  for (const auto& name : {"nmax3", "supertropical-trivial", "krasner-ge2"}) {
    auto p = fixture_pair(name);
    const auto& s = *p->finite();
    for (Elem a : p->elements()) {
      auto g = generate_congruence(p, {{s.mul(a, s.one()), s.mul(a, s.zero())}});
      std::vector<TwistElement> formula;
      for (Elem a1 : p->elements()) {
        for (Elem a2 : p->elements()) formula.emplace_back(s.mul(a1, a), s.mul(a2, a));
      }
      auto h = generate_congruence(p, formula);
      EXPECT_EQ(g.congruence.has_value(), h.congruence.has_value()) << name;
      if (g && h) EXPECT_EQ(*g.congruence, *h.congruence) << name;
    }
  }
}

TEST(Generate, ClosureIsPairCongruence) {
  auto p = fixture_pair("nmax3");
  auto g = generate_congruence(p, {tw(*p, "1", "2")});
  ASSERT_TRUE(g);
  EXPECT_TRUE(is_pair_congruence(*p, g.congruence->classes()));
  EXPECT_TRUE(verify_congruence(*g.congruence).ok());
  // 1 ~ 2 forces everything from 1 upwards together
  EXPECT_TRUE(g.congruence->contains(tw(*p, "1", "3")));
  EXPECT_FALSE(g.congruence->contains(tw(*p, "0", "1")));
}

TEST(Lattice, MatchesBruteForce) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    const auto lattice = enumerate_congruences(p);
    std::set<std::vector<Elem>> got;
    for (const auto& c : lattice.elements) got.insert(c.classes());
    EXPECT_EQ(got, brute_force_lattice(p)) << name;
    ASSERT_FALSE(lattice.elements.empty());
    EXPECT_TRUE(lattice.elements.front().is_diagonal());
    for (const auto& c : lattice.elements) EXPECT_TRUE(verify_congruence(c).ok()) << name << " " << c.format();
  }
}

TEST(Lattice, BooleanIsOnlyDiagonal) {
  const auto lattice = enumerate_congruences(boolean_pair());
  ASSERT_EQ(lattice.elements.size(), 1u);
  const auto cls = classify_congruence(lattice.elements[0], lattice);
  EXPECT_TRUE(cls.prime);
  EXPECT_TRUE(cls.semiprime);
  EXPECT_TRUE(cls.irreducible);
  EXPECT_TRUE(cls.consistent);
}

TEST(Lattice, RefusesLargeCarriers) {
  auto p = double_pair(three_chain());
  EXPECT_THROW(enumerate_congruences(p, 8), BoundExceeded);
}

// b with b * (A x A) * b inside c, checked directly.
static bool sandwich_inside(const Congruence& c, TwistElement b) {
  const auto& s = c.pair()->carrier();
  for (Elem y1 : c.pair()->elements()) {
    for (Elem y2 : c.pair()->elements()) {
      if (!c.contains(twist_product(s, twist_product(s, b, {y1, y2}), b))) return false;
    }
  }
  return true;
}

TEST(Classify, CriterionAgreesWithDefinitionOnSmallChains) {
  for (const auto& name : {"boolean", "nmax3"}) {
    auto p = fixture_pair(name);
    const auto lattice = enumerate_congruences(p);
    for (const auto& c : lattice.elements) {
      const auto cls = classify_congruence(c, lattice);
      EXPECT_EQ(cls.prime, prime_by_definition(c, lattice)) << name << " " << c.format();
      EXPECT_EQ(cls.semiprime, semiprime_by_definition(c, lattice)) << name << " " << c.format();
      EXPECT_TRUE(cls.consistent) << name << " " << c.format();
    }
  }
}

// Where the element criterion rejects but the lattice definition accepts,
// the witness is a genuine sandwich element whose generated congruence
// either meets T x A0 or has a twist square escaping c.
TEST(Classify, DivergenceIsExplainedByWitness) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    const auto lattice = enumerate_congruences(p);
    for (const auto& c : lattice.elements) {
      const auto cls = classify_congruence(c, lattice);
      if (cls.prime) EXPECT_TRUE(cls.semiprime) << name;
      if (cls.semiprime || !semiprime_by_definition(c, lattice)) continue;
      ASSERT_TRUE(cls.semiprime_witness.has_value()) << name;
      const auto b = *cls.semiprime_witness;
      EXPECT_FALSE(c.contains(b));
      EXPECT_TRUE(sandwich_inside(c, b)) << name;
      const auto gen = generate_congruence(p, {b}, c);
      if (gen) {
        EXPECT_FALSE(twist_product_within(*gen.congruence, *gen.congruence, c)) << name;
      } else {
        EXPECT_TRUE(gen.offending.has_value()) << name;
      }
    }
  }
}

TEST(Classify, DoubledBooleanDiagonalDiverges) {
  auto p = fixture_pair("double-boolean");
  const auto diag = Congruence::diagonal(p);
  const auto all = enumerate_congruences(p, 10, false);
  EXPECT_TRUE(semiprime_by_definition(diag, all));
  EXPECT_FALSE(semiprime_by_criterion(diag));
  const auto b = tw(*p, "(0,1)", "(1,1)");
  EXPECT_TRUE(sandwich_inside(diag, b));
  const auto gen = generate_congruence(p, {b});
  EXPECT_TRUE(gen.offending.has_value());
}

TEST(Classify, MeetOfTwoPrimesIsSemiprimeNotIrreducible) {
  auto s = power_semiring(*boolean_semiring(), 2);
  auto p = finite_pair("BxB", s, {0}, {3});
  const auto lattice = enumerate_congruences(p);
  std::vector<Congruence> primes;
  for (const auto& c : lattice.elements) {
    if (prime_by_criterion(c)) {
      EXPECT_TRUE(prime_by_definition(c, lattice));
      primes.push_back(c);
    }
  }
  ASSERT_EQ(primes.size(), 2u);
  EXPECT_FALSE(primes[0].subset_of(primes[1]));
  const auto m = primes[0].meet(primes[1]);
  EXPECT_TRUE(m.is_diagonal());
  EXPECT_TRUE(semiprime_by_criterion(m));
  EXPECT_FALSE(prime_by_criterion(m));
  EXPECT_FALSE(irreducible_in(m, lattice));
  EXPECT_TRUE(classify_congruence(m, lattice).consistent);
}

TEST(Radical, FixesPrimesAndMatchesPrimeMeetsOnChains) {
  for (const auto& name : {"boolean", "nmax3"}) {
    auto p = fixture_pair(name);
    const auto lattice = enumerate_congruences(p);
    std::vector<Congruence> primes;
    for (const auto& c : lattice.elements) {
      if (prime_by_definition(c, lattice)) primes.push_back(c);
    }
    for (const auto& c : lattice.elements) {
      const auto r = radical(c);
      EXPECT_TRUE(r.contains_input);
      EXPECT_FALSE(r.offending.has_value()) << name;
      EXPECT_TRUE(r.semiprime) << name;
      EXPECT_EQ(radical(r.congruence).congruence, r.congruence);
      if (prime_by_criterion(c)) EXPECT_EQ(r.congruence, c);
      std::optional<Congruence> meet;
      for (const auto& q : primes) {
        if (c.subset_of(q)) meet = meet ? meet->meet(q) : q;
      }
      ASSERT_TRUE(meet.has_value()) << name;
      EXPECT_EQ(r.congruence, *meet) << name << " " << c.format();
    }
  }
}

TEST(Radical, AlwaysContainsInputAndIsIdempotent) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    if (!p->carrier().commutative()) continue;
    for (const auto& c : enumerate_congruences(p).elements) {
      const auto r = radical(c);
      EXPECT_TRUE(r.contains_input) << name;
      EXPECT_TRUE(c.subset_of(r.congruence)) << name;
      EXPECT_EQ(radical(r.congruence).congruence, r.congruence) << name;
    }
  }
}

TEST(Radical, SupertropicalDiagonalMeetsTangibleA0) {
  auto p = fixture_pair("supertropical-trivial");
  const auto r = radical(Congruence::diagonal(p));
  EXPECT_TRUE(r.offending.has_value());
  EXPECT_TRUE(r.congruence.contains(tw(*p, "1", "1v")));
}

TEST(Radical, SquareWitness) {
  auto p = fixture_pair("double-boolean");
  const auto& s = p->carrier();
  const auto diag = Congruence::diagonal(p);
  const auto r = radical(diag);
  for (Elem a : p->elements()) {
    for (Elem b : p->elements()) {
      if (diag.contains(twist_power(s, {a, b}, 2))) EXPECT_TRUE(r.congruence.contains(a, b));
    }
  }
}

TEST(Spectrum, Examples) {
  const auto b = prime_spectrum_krull(boolean_pair());
  EXPECT_EQ(b.primes.size(), 1u);
  EXPECT_EQ(b.krull_dimension, 0);
  EXPECT_TRUE(b.semiprimes_are_prime_meets);
  EXPECT_TRUE(b.criteria_agree);
  for (const auto& name : fixture_names()) {
    const auto sp = prime_spectrum_krull(fixture_pair(name));
    EXPECT_TRUE(sp.semiprimes_are_prime_meets) << name;
    if (!sp.primes.empty()) {
      EXPECT_GE(sp.krull_dimension, 0);
      EXPECT_EQ(sp.longest_chain.size(), static_cast<std::size_t>(sp.krull_dimension) + 1);
    }
  }
}

TEST(Levitzki, FindsSeparatingPrime) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    const auto lattice = enumerate_congruences(p);
    for (const auto& c : lattice.elements) {
      if (!semiprime_by_criterion(c)) continue;
      for (Elem a : p->elements()) {
        for (Elem b : p->elements()) {
          if (c.contains(a, b)) continue;
          const auto res = levitzki_prime(c, {a, b}, lattice);
          ASSERT_FALSE(res.sequence_stuck) << name;
          ASSERT_TRUE(res.prime.has_value()) << name;
          const auto& q = lattice.elements[*res.prime];
          EXPECT_TRUE(c.subset_of(q));
          EXPECT_FALSE(q.contains(a, b));
          EXPECT_TRUE(prime_by_definition(q, lattice)) << name << " " << q.format();
        }
      }
    }
  }
}

TEST(Chains, ZmaxDifferenceRelations) {
  auto p = maxplus_pair(Domain::integers);
  const auto probe = acc_chain_probe(*p, zmax_difference_relation, 1, 3, Window{6});
  ASSERT_EQ(probe.links.size(), 2u);
  // i = 1 relates everything, so it is not inside i = 2
  EXPECT_FALSE(probe.links[0].contained_on_sample);
  ASSERT_TRUE(probe.links[0].compatibility_failure.has_value());
  const auto& w = *probe.links[0].compatibility_failure;
  const auto& s = p->carrier();
  const auto rel = zmax_difference_relation(2);
  EXPECT_TRUE(rel(w[0], w[1]));
  EXPECT_FALSE(rel(s.add(w[0], w[2]), s.add(w[1], w[2])) && rel(s.mul(w[0], w[2]), s.mul(w[1], w[2])));
  // the reverse direction is a descending step
  const auto desc = acc_chain_probe(*p, [](int i) { return zmax_difference_relation(i == 1 ? 2 : 1); }, 1, 2, Window{6});
  EXPECT_TRUE(desc.links[0].contained_on_sample);
  EXPECT_EQ(desc.links[0].strictness, Strictness::strict);
  const auto same = acc_chain_probe(*p, zmax_difference_relation, 2, 2, Window{6});
  EXPECT_EQ(same.links[0].strictness, Strictness::equal);
}

TEST(Chains, NmaxGeneratedCollapses) {
  const auto chain = nmax_generated_chain(12, 4);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_TRUE(chain[0].is_diagonal());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(chain[i].subset_of(chain[i + 1]));
  EXPECT_FALSE(chain[1] == chain[0]);
  EXPECT_EQ(chain[2], chain[1]);
  EXPECT_EQ(chain[3], chain[1]);
  EXPECT_EQ(chain[1].class_count(), 3u);  // -inf, 0, and everything from 1 up
}

TEST(Quotient, ByDiagonalIsIsomorphic) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    const auto q = quotient_pair(Congruence::diagonal(p));
    const auto& s = *p->finite();
    const auto& t = *q.pair->finite();
    ASSERT_EQ(t.size(), s.size());
    for (Elem a : s.elements()) {
      EXPECT_EQ(q.pair->in_a0(q.projection[a]), p->in_a0(a));
      for (Elem b : s.elements()) {
        EXPECT_EQ(t.add(q.projection[a], q.projection[b]), q.projection[s.add(a, b)]);
        EXPECT_EQ(t.mul(q.projection[a], q.projection[b]), q.projection[s.mul(a, b)]);
      }
    }
    EXPECT_TRUE(q.admissibility.ok() == verify_admissible(*p).ok()) << name;
  }
}

TEST(Quotient, KernelOfProjectionRoundTrips) {
  for (const auto& name : fixture_names()) {
    auto p = fixture_pair(name);
    for (const auto& c : enumerate_congruences(p).elements) {
      const auto q = quotient_pair(c);
      const auto k = congruence_kernel({p, q.pair, q.projection});
      EXPECT_EQ(k.congruence, c) << name;
      EXPECT_TRUE(k.preserves_a0);
      EXPECT_TRUE(k.pair_congruence);
    }
  }
}

TEST(Kernel, IdentityAndSumMap) {
  auto d = fixture_pair("double-boolean");
  std::vector<Elem> id(4);
  for (Elem e = 0; e < 4; ++e) id[e] = e;
  EXPECT_TRUE(congruence_kernel({d, d, id}).congruence.is_diagonal());
  // (x, y) -> x + y into B
  auto b = boolean_pair();
  std::vector<Elem> sum(4);
  for (Elem e = 0; e < 4; ++e) sum[e] = (e / 2) | (e % 2);
  const auto k = congruence_kernel({d, b, sum});
  EXPECT_FALSE(k.preserves_a0);     // (1,1) lands on the tangible 1
  EXPECT_FALSE(k.pair_congruence);  // (1,0) ~ (1,1)
  EXPECT_EQ(k.congruence.class_count(), 2u);
  std::vector<Elem> broken{0, 1, 1, 0};
  EXPECT_THROW(congruence_kernel({d, b, broken}), PreconditionError);
}
