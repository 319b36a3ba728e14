#include "tpairs/hyper.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "tpairs/errors.hpp"

namespace tpairs {

namespace {

constexpr std::size_t kMaxHyperElements = 64;
constexpr std::size_t kMaxPowersetCarrier = 4096;
constexpr std::size_t kMaxIsomorphismSize = 9;

}  // namespace

std::vector<Elem> subset_elements(Subset s) {
  std::vector<Elem> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset SemiHypergroup::sum_sets(Subset s1, Subset s2) const {
  Subset out = 0;
  for (Elem a : subset_elements(s1)) {
    for (Elem b : subset_elements(s2)) out |= sum(a, b);
  }
  return out;
}

std::string SemiHypergroup::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (Elem e : subset_elements(s)) {
    if (!first) out += ",";
    first = false;
    out += labels.at(static_cast<std::size_t>(e));
  }
  return out + "}";
}

std::optional<Elem> SemiHypergroup::find(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Elem>(it - labels.begin());
}

Subset SemiHyperring::prod(Elem a, Subset s) const {
  Subset out = 0;
  for (Elem x : subset_elements(s)) out |= singleton(prod(a, x));
  return out;
}

Subset SemiHyperring::prod(Subset s, Elem a) const {
  Subset out = 0;
  for (Elem x : subset_elements(s)) out |= singleton(prod(x, a));
  return out;
}

bool SemiHyperring::commutative() const {
  const auto n = static_cast<Elem>(size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (prod(a, b) != prod(b, a)) return false;
    }
  }
  return true;
}

void check_shape(const SemiHypergroup& h) {
  const std::size_t n = h.size();
  if (n == 0) throw StructureError("semi-hypergroup '" + h.name + "' has no elements");
  if (n > kMaxHyperElements) {
    throw StructureError("semi-hypergroup '" + h.name + "' has more than 64 elements");
  }
  if (h.add.size() != n * n) throw StructureError("hyperaddition table of '" + h.name + "' is not n x n");
  if (h.zero < 0 || static_cast<std::size_t>(h.zero) >= n) throw StructureError("hyperzero out of range");
  const Subset all = n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Subset s = h.add[a * n + b];
      if (s == 0) {
        throw StructureError("empty hypersum " + h.labels[a] + " + " + h.labels[b] + " in '" + h.name + "'");
      }
      if ((s & ~all) != 0) throw StructureError("hypersum entry out of range in '" + h.name + "'");
    }
  }
}

void check_shape(const SemiHyperring& h) {
  check_shape(static_cast<const SemiHypergroup&>(h));
  const std::size_t n = h.size();
  if (h.mul.size() != n * n) throw StructureError("multiplication table of '" + h.name + "' is not n x n");
  for (Elem e : h.mul) {
    if (e < 0 || static_cast<std::size_t>(e) >= n) throw StructureError("product out of range in '" + h.name + "'");
  }
  if (h.one < 0 || static_cast<std::size_t>(h.one) >= n) throw StructureError("unit out of range");
}

AxiomReport verify_semihypergroup(const SemiHypergroup& h) {
  check_shape(h);
  AxiomReport report(h.name);
  const auto n = static_cast<Elem>(h.size());
  const auto lbl = [&](Elem e) { return h.labels[static_cast<std::size_t>(e)]; };
  for (Elem a = 0; a < n; ++a) {
    if (h.sum(h.zero, a) != singleton(a) || h.sum(a, h.zero) != singleton(a)) {
      report.record("neutrality", {lbl(h.zero), lbl(a)});
    }
    for (Elem b = 0; b < n; ++b) {
      if (h.sum(a, b) != h.sum(b, a)) report.record("commutativity", {lbl(a), lbl(b)});
      for (Elem c = 0; c < n; ++c) {
        if (h.sum_sets(h.sum(a, b), singleton(c)) != h.sum_sets(singleton(a), h.sum(b, c))) {
          report.record("associativity", {lbl(a), lbl(b), lbl(c)});
        }
      }
    }
  }
  report.count_checks(static_cast<std::size_t>(n * n * n));
  return report;
}

AxiomReport verify_semihyperring(const SemiHyperring& h) {
  check_shape(h);
  AxiomReport report = verify_semihypergroup(h);
  const auto n = static_cast<Elem>(h.size());
  const auto lbl = [&](Elem e) { return h.labels[static_cast<std::size_t>(e)]; };
  for (Elem a = 0; a < n; ++a) {
    if (h.prod(h.one, a) != a || h.prod(a, h.one) != a) report.record("multiplicative identity", {lbl(a)});
    if (h.prod(h.zero, a) != h.zero || h.prod(a, h.zero) != h.zero) report.record("absorption", {lbl(a)});
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (h.prod(h.prod(a, b), c) != h.prod(a, h.prod(b, c))) {
          report.record("multiplicative associativity", {lbl(a), lbl(b), lbl(c)});
        }
        const Subset left = h.prod(a, h.sum(b, c));
        const Subset right = h.sum(h.prod(a, b), h.prod(a, c));
        if (left != right) report.record("left distributivity", {lbl(a), lbl(b), lbl(c)});
        const Subset left2 = h.prod(h.sum(b, c), a);
        const Subset right2 = h.sum(h.prod(b, a), h.prod(c, a));
        if (left2 != right2) report.record("right distributivity", {lbl(a), lbl(b), lbl(c)});
      }
    }
  }
  return report;
}

SemiHyperring krasner_hyperfield() {
  SemiHyperring k;
  k.name = "krasner";
  k.labels = {"0", "1"};
  k.add = {singleton(0), singleton(1), singleton(1), singleton(0) | singleton(1)};
  k.mul = {0, 0, 0, 1};
  k.zero = 0;
  k.one = 1;
  return k;
}

SemiHyperring as_hyperring(const FiniteSemiring& s) {
  if (s.size() > kMaxHyperElements) throw BoundExceeded("hyperrings are limited to 64 elements");
  SemiHyperring h;
  h.name = s.name();
  h.labels = s.labels();
  const auto n = static_cast<Elem>(s.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      h.add.push_back(singleton(s.add(a, b)));
      h.mul.push_back(s.mul(a, b));
    }
  }
  h.zero = s.zero();
  h.one = s.one();
  return h;
}

std::string to_string(A0Choice c) {
  return c == A0Choice::contains_zero ? "contains_zero" : "size_ge_two";
}

A0Choice parse_a0_choice(std::string_view text) {
  if (text == "contains_zero") return A0Choice::contains_zero;
  if (text == "size_ge_two") return A0Choice::size_ge_two;
  throw ConfigError("unknown A0 choice '" + std::string(text) + "' (contains_zero, size_ge_two)");
}

PairPtr powerset_pair(const SemiHyperring& h, A0Choice choice) {
  check_shape(h);
  const auto n = static_cast<Elem>(h.size());
  const auto set_prod = [&](Subset s1, Subset s2) {
    Subset out = 0;
    for (Elem a : subset_elements(s1)) out |= h.prod(a, s2);
    return out;
  };
  std::set<Subset> seen;
  std::vector<Subset> frontier;
  for (Elem a = 0; a < n; ++a) {
    if (seen.insert(singleton(a)).second) frontier.push_back(singleton(a));
  }
  // Close under both operations; products of sums stay reachable only when
  // distributivity holds, so they are added explicitly.
  while (!frontier.empty()) {
    std::vector<Subset> next;
    const std::vector<Subset> current(seen.begin(), seen.end());
    for (Subset s : frontier) {
      for (Subset t : current) {
        for (Subset r : {h.sum_sets(s, t), set_prod(s, t), set_prod(t, s)}) {
          if (seen.insert(r).second) {
            if (seen.size() > kMaxPowersetCarrier) {
              throw BoundExceeded("power-set carrier of '" + h.name + "' exceeds 4096 subsets");
            }
            next.push_back(r);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subset> sets(seen.begin(), seen.end());
  std::stable_sort(sets.begin(), sets.end(), [](Subset a, Subset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on sorted element lists: lower bits first
    return subset_elements(a) < subset_elements(b);
  });
  std::map<Subset, Elem> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    index[sets[i]] = static_cast<Elem>(i);
    labels.push_back(h.format(sets[i]));
  }
  auto carrier = std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "powerset(" + h.name + ")", std::move(labels),
      [&](Elem x, Elem y) { return index.at(h.sum_sets(sets[static_cast<std::size_t>(x)], sets[static_cast<std::size_t>(y)])); },
      [&](Elem x, Elem y) { return index.at(set_prod(sets[static_cast<std::size_t>(x)], sets[static_cast<std::size_t>(y)])); },
      index.at(singleton(h.zero)), index.at(singleton(h.one))));
  PairSpec spec;
  spec.name = "powerset(" + h.name + "," + to_string(choice) + ")";
  spec.carrier = carrier;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Subset s = sets[i];
    const bool has_zero = (s & singleton(h.zero)) != 0;
    const bool a0 = choice == A0Choice::contains_zero ? has_zero : (std::popcount(s) >= 2 || s == singleton(h.zero));
    if (a0) spec.a0_list.push_back(static_cast<Elem>(i));
    if (std::popcount(s) == 1 && !has_zero) spec.t_list.push_back(static_cast<Elem>(i));
  }
  spec.surpass = SurpassKind::subset_inclusion;
  spec.relation = [sets](Elem a, Elem b) {
    const Subset sa = sets[static_cast<std::size_t>(a)], sb = sets[static_cast<std::size_t>(b)];
    return (sa & ~sb) == 0;
  };
  return std::make_shared<SemiringPair>(std::move(spec));
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

template <typename Mul>
void check_group(std::size_t n, Elem one, const std::vector<Elem>& g, Mul mul,
                 const std::function<std::string(Elem)>& lbl) {
  if (g.empty()) throw PreconditionError("subgroup is empty");
  std::vector<char> in(n, 0);
  for (Elem x : g) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw PreconditionError("subgroup element out of range");
    in[static_cast<std::size_t>(x)] = 1;
  }
  if (!in[static_cast<std::size_t>(one)]) throw PreconditionError("subgroup does not contain 1");
  for (Elem x : g) {
    bool inverse = false;
    for (Elem y : g) {
      if (!in[static_cast<std::size_t>(mul(x, y))]) {
        throw PreconditionError("subgroup not closed: " + lbl(x) + " * " + lbl(y));
      }
      if (mul(x, y) == one && mul(y, x) == one) inverse = true;
    }
    if (!inverse) throw PreconditionError("subgroup element " + lbl(x) + " has no inverse in the subgroup");
  }
}

/// Orbit classes of a |-> aG over n elements.
std::pair<std::vector<Elem>, std::vector<Elem>> cosets(std::size_t n, const std::vector<Elem>& g,
                                                       const std::function<Elem(Elem, Elem)>& mul) {
  std::vector<Elem> proj(n, -1), reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (proj[a] >= 0) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    for (Elem x : g) proj[static_cast<std::size_t>(mul(static_cast<Elem>(a), x))] = c;
  }
  // A group acts by permutations, so orbits partition; a clash means a non-group.
  for (std::size_t a = 0; a < n; ++a) {
    for (Elem x : g) {
      if (proj[static_cast<std::size_t>(mul(static_cast<Elem>(a), x))] != proj[a]) {
        throw ConsistencyError("cosets do not partition the carrier");
      }
    }
  }
  return {proj, reps};
}

HyperQuotient assemble(const std::string& name, std::size_t n, const std::vector<Elem>& g,
                       const std::vector<std::string>& base_labels, Elem zero, Elem one,
                       const std::function<Elem(Elem, Elem)>& mul,
                       const std::function<Subset(Elem, Elem)>& hypersum) {
  auto [proj, reps] = cosets(n, g, mul);
  const std::size_t m = reps.size();
  if (m > kMaxHyperElements) throw BoundExceeded("more than 64 cosets");
  std::vector<std::vector<Elem>> members(m);
  for (std::size_t a = 0; a < n; ++a) members[static_cast<std::size_t>(proj[a])].push_back(static_cast<Elem>(a));
  HyperQuotient q;
  q.ring.name = name;
  for (Elem r : reps) q.ring.labels.push_back("[" + base_labels[static_cast<std::size_t>(r)] + "]");
  q.ring.add.assign(m * m, 0);
  q.ring.mul.assign(m * m, 0);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t d = 0; d < m; ++d) {
      Subset s = 0;
      std::set<Elem> products;
      for (Elem x : members[c]) {
        for (Elem y : members[d]) {
          for (Elem z : subset_elements(hypersum(x, y))) s |= singleton(proj[static_cast<std::size_t>(z)]);
          products.insert(proj[static_cast<std::size_t>(mul(x, y))]);
        }
      }
      if (products.size() != 1) {
        throw ConsistencyError("coset product " + q.ring.labels[c] + " * " + q.ring.labels[d] + " is not well defined");
      }
      q.ring.add[c * m + d] = s;
      q.ring.mul[c * m + d] = *products.begin();
    }
  }
  q.ring.zero = proj[static_cast<std::size_t>(zero)];
  q.ring.one = proj[static_cast<std::size_t>(one)];
  q.projection = std::move(proj);
  q.representatives = std::move(reps);
  return q;
}

std::string group_label(const std::vector<std::string>& labels, const std::vector<Elem>& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + labels.at(static_cast<std::size_t>(g[i]));
  return out + "}";
}

}  // namespace

void check_subgroup(const FiniteSemiring& r, const std::vector<Elem>& g) {
  check_group(r.size(), r.one(), g, [&](Elem a, Elem b) { return r.mul(a, b); },
              [&](Elem e) { return r.label(e); });
}

void check_subgroup(const SemiHyperring& h, const std::vector<Elem>& g) {
  check_shape(h);
  check_group(h.size(), h.one, g, [&](Elem a, Elem b) { return h.prod(a, b); },
              [&](Elem e) { return h.labels.at(static_cast<std::size_t>(e)); });
}

HyperQuotient krasner_quotient(const FiniteSemiring& r, const std::vector<Elem>& g) {
  if (!r.commutative()) throw PreconditionError("coset quotients need a commutative carrier");
  check_subgroup(r, g);
  return assemble(r.name() + "/" + group_label(r.labels(), g), r.size(), g, r.labels(), r.zero(), r.one(),
                  [&](Elem a, Elem b) { return r.mul(a, b); },
                  [&](Elem a, Elem b) { return singleton(r.add(a, b)); });
}

HyperQuotient hyper_coset_quotient(const SemiHyperring& h, const std::vector<Elem>& g) {
  if (!h.commutative()) throw PreconditionError("coset quotients need a commutative carrier");
  check_subgroup(h, g);
  return assemble(h.name + "/" + group_label(h.labels, g), h.size(), g, h.labels, h.zero, h.one,
                  [&](Elem a, Elem b) { return h.prod(a, b); },
                  [&](Elem a, Elem b) { return h.sum(a, b); });
}

HyperQuotient krasner_quotient(const Semiring& r, const ElemPredicate& in_g, Window w) {
  if (!r.commutative()) throw PreconditionError("coset quotients need a commutative carrier");
  const auto sample = r.elements(w);
  const std::vector<Elem> g_sample = [&] {
    std::vector<Elem> out;
    for (Elem e : sample) {
      if (in_g(e)) out.push_back(e);
    }
    return out;
  }();
  if (!in_g(r.one())) throw PreconditionError("subgroup does not contain 1");
  for (Elem x : g_sample) {
    auto inv = r.solve_mul(x, r.one());
    if (!inv || !in_g(*inv)) throw PreconditionError("subgroup element " + r.format(x) + " has no inverse");
    for (Elem y : g_sample) {
      if (!in_g(r.mul(x, y))) throw PreconditionError("subgroup not closed: " + r.format(x) + " * " + r.format(y));
    }
  }
  // x lies in the coset of rep when rep * g = x for some g in G.
  std::vector<Elem> reps;
  const auto same_coset = [&](Elem rep, Elem x) {
    if (rep == x) return true;
    auto g = r.solve_mul(rep, x);
    return g.has_value() && in_g(*g) && r.mul(rep, *g) == x;
  };
  const auto classify = [&](Elem x) -> std::optional<Elem> {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (same_coset(reps[i], x)) return static_cast<Elem>(i);
    }
    return std::nullopt;
  };
  std::vector<Elem> proj;
  for (Elem x : sample) {
    auto c = classify(x);
    if (!c) {
      if (reps.size() == kMaxHyperElements) throw BoundExceeded("more than 64 cosets in the window");
      c = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
    proj.push_back(*c);
  }
  const std::size_t m = reps.size();
  HyperQuotient q;
  q.ring.name = r.name() + "/G";
  for (Elem rep : reps) q.ring.labels.push_back("[" + r.format(rep) + "]");
  q.ring.add.assign(m * m, 0);
  q.ring.mul.assign(m * m, -1);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const auto c = static_cast<std::size_t>(proj[i]), d = static_cast<std::size_t>(proj[j]);
      const auto s = classify(r.add(sample[i], sample[j]));
      const auto p = classify(r.mul(sample[i], sample[j]));
      if (!s || !p) {
        throw BoundExceeded("a sum or product of window elements leaves the sampled cosets of " + r.name());
      }
      q.ring.add[c * m + d] |= singleton(*s);
      Elem& slot = q.ring.mul[c * m + d];
      if (slot >= 0 && slot != *p) throw ConsistencyError("coset product is not well defined");
      slot = *p;
    }
  }
  q.ring.zero = *classify(r.zero());
  q.ring.one = *classify(r.one());
  q.projection = std::move(proj);
  q.representatives = std::move(reps);
  return q;
}

std::optional<std::vector<Elem>> find_isomorphism(const SemiHyperring& a, const SemiHyperring& b) {
  check_shape(a);
  check_shape(b);
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n > kMaxIsomorphismSize) throw BoundExceeded("isomorphism search is limited to 9 elements");
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto image = [&](Subset s) {
    Subset out = 0;
    for (Elem e : subset_elements(s)) out |= singleton(perm[static_cast<std::size_t>(e)]);
    return out;
  };
  do {
    if (perm[static_cast<std::size_t>(a.zero)] != b.zero || perm[static_cast<std::size_t>(a.one)] != b.one) continue;
    bool ok = true;
    for (Elem x = 0; ok && x < static_cast<Elem>(n); ++x) {
      for (Elem y = 0; ok && y < static_cast<Elem>(n); ++y) {
        const Elem px = perm[static_cast<std::size_t>(x)], py = perm[static_cast<std::size_t>(y)];
        ok = image(a.sum(x, y)) == b.sum(px, py) &&
             perm[static_cast<std::size_t>(a.prod(x, y))] == b.prod(px, py);
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

IteratedQuotient iterated_quotient(const SemiHyperring& h, const std::vector<Elem>& g,
                                   const std::vector<Elem>& g_hat) {
  for (Elem x : g) {
    if (std::find(g_hat.begin(), g_hat.end(), x) == g_hat.end()) {
      throw PreconditionError("G is not contained in G_hat");
    }
  }
  IteratedQuotient out{hyper_coset_quotient(h, g_hat), hyper_coset_quotient(h, g), {}, std::nullopt};
  std::set<Elem> image;
  for (Elem x : g_hat) image.insert(out.first.projection[static_cast<std::size_t>(x)]);
  out.second = hyper_coset_quotient(out.first.ring, std::vector<Elem>(image.begin(), image.end()));
  out.isomorphism = find_isomorphism(out.direct.ring, out.second.ring);
  return out;
}

}  // namespace tpairs
