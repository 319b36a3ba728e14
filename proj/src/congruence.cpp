#include "tpairs/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "tpairs/errors.hpp"
#include "tpairs/predicates.hpp"

namespace tpairs {

namespace {

const FiniteSemiring& finite_carrier(const SemiringPair& p) {
  if (!p.finite()) throw PreconditionError("pair '" + p.name() + "' is not finite");
  return *p.finite();
}

std::size_t idx(Elem e) { return static_cast<std::size_t>(e); }

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Elem find(Elem x) {
    while (parent[idx(x)] != x) {
      parent[idx(x)] = parent[idx(parent[idx(x)])];
      x = parent[idx(x)];
    }
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[idx(b)] = a;
    return true;
  }
};

std::vector<Elem> canonical(UnionFind& uf) {
  const std::size_t n = uf.parent.size();
  std::vector<Elem> cls(n, -1);
  std::map<Elem, Elem> ids;
  for (std::size_t a = 0; a < n; ++a) {
    const Elem r = uf.find(static_cast<Elem>(a));
    auto [it, fresh] = ids.emplace(r, static_cast<Elem>(ids.size()));
    cls[a] = it->second;
  }
  return cls;
}

/// Congruence closure of the relation generated by `uf`.
std::vector<Elem> close(const FiniteSemiring& s, UnionFind& uf) {
  const auto n = static_cast<Elem>(s.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < n; ++a) {
      const Elem r = uf.find(a);
      if (r == a) continue;
      for (Elem c = 0; c < n; ++c) {
        changed |= uf.unite(s.add(a, c), s.add(r, c));
        changed |= uf.unite(s.mul(c, a), s.mul(c, r));
        changed |= uf.unite(s.mul(a, c), s.mul(r, c));
      }
    }
  }
  return canonical(uf);
}

std::optional<TwistElement> clash(const SemiringPair& p, const std::vector<Elem>& cls) {
  std::map<Elem, Elem> tangible_of, a0_of;
  for (std::size_t a = 0; a < cls.size(); ++a) {
    const auto e = static_cast<Elem>(a);
    if (p.in_t(e)) tangible_of.emplace(cls[a], e);
    if (p.in_a0(e)) a0_of.emplace(cls[a], e);
  }
  for (const auto& [c, t] : tangible_of) {
    auto it = a0_of.find(c);
    if (it != a0_of.end()) return TwistElement{t, it->second};
  }
  return std::nullopt;
}

std::string pair_label(const SemiringPair& p, TwistElement x) {
  return "(" + p.format(x.first) + "," + p.format(x.second) + ")";
}

/// Every element of A x A in canonical order.
std::vector<TwistElement> all_twist_elements(std::size_t n) {
  std::vector<TwistElement> out;
  out.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return out;
}

std::vector<TwistElement> off_diagonal(const Congruence& c) {
  std::vector<TwistElement> out;
  for (const auto& x : c.pairs()) {
    if (x.first != x.second) out.push_back(x);
  }
  return out;
}

std::vector<TwistElement> outside(const Congruence& c) {
  std::vector<TwistElement> out;
  for (const auto& x : all_twist_elements(c.size())) {
    if (!c.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TwistElement twist_product(const Semiring& s, TwistElement x, TwistElement y) {
  const auto [a1, a1p] = x;
  const auto [a2, a2p] = y;
  return {s.add(s.mul(a1, a2), s.mul(a1p, a2p)), s.add(s.mul(a1, a2p), s.mul(a1p, a2))};
}

TwistElement twist_power(const Semiring& s, TwistElement x, unsigned m) {
  if (m == 0) throw PreconditionError("twist powers start at 1");
  TwistElement r = x;
  for (unsigned i = 1; i < m; ++i) r = twist_product(s, r, x);
  return r;
}

// ---------------------------------------------------------------------------
// Congruence

Congruence::Congruence(PairPtr pair, std::vector<Elem> classes) : pair_(std::move(pair)) {
  const auto& s = finite_carrier(*pair_);
  if (classes.size() != s.size()) throw PreconditionError("class vector does not match carrier size");
  UnionFind uf(classes.size());
  std::map<Elem, Elem> first;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    auto [it, fresh] = first.emplace(classes[a], static_cast<Elem>(a));
    if (!fresh) uf.unite(it->second, static_cast<Elem>(a));
  }
  cls_ = canonical(uf);
}

Congruence Congruence::diagonal(PairPtr pair) {
  const auto n = finite_carrier(*pair).size();
  std::vector<Elem> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  return Congruence(std::move(pair), std::move(cls));
}

bool Congruence::contains(Elem a, Elem b) const { return cls_.at(idx(a)) == cls_.at(idx(b)); }

std::size_t Congruence::class_count() const {
  return cls_.empty() ? 0 : static_cast<std::size_t>(*std::max_element(cls_.begin(), cls_.end()) + 1);
}

std::size_t Congruence::pair_count() const {
  std::size_t total = 0;
  for (const auto& b : blocks()) total += b.size() * b.size();
  return total;
}

std::vector<TwistElement> Congruence::pairs() const {
  std::vector<TwistElement> out;
  for (std::size_t a = 0; a < cls_.size(); ++a) {
    for (std::size_t b = 0; b < cls_.size(); ++b) {
      if (cls_[a] == cls_[b]) out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  return out;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(class_count());
  for (std::size_t a = 0; a < cls_.size(); ++a) out[idx(cls_[a])].push_back(static_cast<Elem>(a));
  return out;
}

std::vector<TwistElement> Congruence::restriction_to_a0() const {
  std::vector<TwistElement> out;
  for (const auto& x : pairs()) {
    if (pair_->in_a0(x.first) && pair_->in_a0(x.second)) out.push_back(x);
  }
  return out;
}

bool Congruence::is_diagonal() const { return class_count() == cls_.size(); }

bool Congruence::subset_of(const Congruence& other) const {
  for (std::size_t a = 0; a < cls_.size(); ++a) {
    for (std::size_t b = a + 1; b < cls_.size(); ++b) {
      if (cls_[a] == cls_[b] && !other.contains(static_cast<Elem>(a), static_cast<Elem>(b))) return false;
    }
  }
  return true;
}

Congruence Congruence::meet(const Congruence& other) const {
  std::map<std::pair<Elem, Elem>, Elem> ids;
  std::vector<Elem> cls(cls_.size());
  for (std::size_t a = 0; a < cls_.size(); ++a) {
    auto [it, fresh] = ids.emplace(std::make_pair(cls_[a], other.cls_.at(a)), static_cast<Elem>(ids.size()));
    cls[a] = it->second;
  }
  return Congruence(pair_, std::move(cls));
}

std::string Congruence::format() const {
  std::string out;
  for (const auto& b : blocks()) {
    if (!out.empty()) out += " ";
    out += pair_->format_set(b);
  }
  return out;
}

bool operator<(const Congruence& a, const Congruence& b) {
  const auto pa = a.pair_count(), pb = b.pair_count();
  if (pa != pb) return pa < pb;
  return a.pairs() < b.pairs();
}

AxiomReport verify_congruence(const Congruence& c) {
  const auto& p = *c.pair();
  const auto& s = finite_carrier(p);
  AxiomReport report("congruence on " + p.name());
  const auto n = static_cast<Elem>(s.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!c.contains(a, b)) continue;
      for (Elem x = 0; x < n; ++x) {
        if (!c.contains(s.add(a, x), s.add(b, x))) {
          report.record("additive compatibility", {p.format(a), p.format(b), p.format(x)});
        }
        if (!c.contains(s.mul(a, x), s.mul(b, x)) || !c.contains(s.mul(x, a), s.mul(x, b))) {
          report.record("multiplicative compatibility", {p.format(a), p.format(b), p.format(x)});
        }
      }
    }
  }
  const auto pairs = c.pairs();
  for (const auto& x : pairs) {
    if (!c.contains(x.second, x.first)) report.record("switch closure", {pair_label(p, x)});
    for (const auto& y : pairs) {
      if (!c.contains(twist_product(s, x, y))) {
        report.record("twist closure", {pair_label(p, x), pair_label(p, y)});
      }
    }
  }
  if (auto bad = tangible_a0_clash(c)) report.record("disjoint from T x A0", {pair_label(p, *bad)});
  report.count_checks(pairs.size() * pairs.size());
  return report;
}

std::optional<TwistElement> tangible_a0_clash(const Congruence& c) { return clash(*c.pair(), c.classes()); }

Generated generate_congruence(const PairPtr& p, const std::vector<TwistElement>& seeds,
                              const std::optional<Congruence>& base) {
  const auto& s = finite_carrier(*p);
  UnionFind uf(s.size());
  if (base) {
    const auto& cls = base->classes();
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (cls[a] == cls[b]) {
          uf.unite(static_cast<Elem>(a), static_cast<Elem>(b));
          break;
        }
      }
    }
  }
  for (const auto& [a, b] : seeds) {
    if (a < 0 || b < 0 || idx(a) >= s.size() || idx(b) >= s.size()) throw PreconditionError("seed out of range");
    uf.unite(a, b);
  }
  auto cls = close(s, uf);
  Generated out;
  if (auto bad = clash(*p, cls)) {
    out.offending = bad;
  } else {
    out.congruence = Congruence(p, std::move(cls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lattice

std::optional<std::size_t> CongruenceLattice::index_of(const Congruence& c) const {
  auto it = std::find(elements.begin(), elements.end(), c);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<std::size_t> CongruenceLattice::above(const Congruence& c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (c.subset_of(elements[i])) out.push_back(i);
  }
  return out;
}

namespace {

std::string bell_estimate(std::size_t n) {
  // Bell numbers via the triangle; saturate in double to keep the message short.
  std::vector<double> row{1.0};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<double> next{row.back()};
    for (double v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", row.front());
  return buf;
}

}  // namespace

CongruenceLattice enumerate_congruences(const PairPtr& p, std::size_t max_size, bool pair_only) {
  const auto& s = finite_carrier(*p);
  const std::size_t n = s.size();
  if (n > max_size) {
    throw BoundExceeded("congruence enumeration on " + std::to_string(n) + " elements refused (limit " +
                        std::to_string(max_size) + "; up to " + bell_estimate(n) + " partitions)");
  }
  std::set<std::vector<Elem>> seen;
  std::deque<std::vector<Elem>> queue;
  const auto diag = Congruence::diagonal(p);
  seen.insert(diag.classes());
  queue.push_back(diag.classes());
  while (!queue.empty()) {
    const auto cls = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (cls[a] == cls[b]) continue;
        UnionFind uf(n);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x + 1; y < n; ++y) {
            if (cls[x] == cls[y]) {
              uf.unite(static_cast<Elem>(x), static_cast<Elem>(y));
              break;
            }
          }
        }
        uf.unite(static_cast<Elem>(a), static_cast<Elem>(b));
        auto next = close(s, uf);
        if (pair_only && clash(*p, next)) continue;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  CongruenceLattice lattice{p, {}};
  std::vector<std::pair<std::pair<std::size_t, std::vector<TwistElement>>, Congruence>> keyed;
  for (const auto& cls : seen) {
    Congruence c(p, cls);
    keyed.push_back({{c.pair_count(), c.pairs()}, c});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [key, c] : keyed) lattice.elements.push_back(std::move(c));
  return lattice;
}

bool twist_product_within(const Congruence& c1, const Congruence& c2, const Congruence& target) {
  const auto& s = finite_carrier(*target.pair());
  // A diagonal factor always yields a diagonal product.
  const auto xs = off_diagonal(c1), ys = off_diagonal(c2);
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (!target.contains(twist_product(s, x, y))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

std::optional<TwistElement> semiprime_failure(const Congruence& c) {
  const auto& s = finite_carrier(*c.pair());
  const auto all = all_twist_elements(s.size());
  for (const auto& b : outside(c)) {
    const bool absorbed = std::all_of(all.begin(), all.end(), [&](const TwistElement& y) {
      return c.contains(twist_product(s, twist_product(s, b, y), b));
    });
    if (absorbed) return b;
  }
  return std::nullopt;
}

std::optional<std::pair<TwistElement, TwistElement>> prime_failure(const Congruence& c) {
  const auto& s = finite_carrier(*c.pair());
  const auto all = all_twist_elements(s.size());
  const auto out = outside(c);
  for (const auto& b1 : out) {
    std::set<TwistElement> left;
    for (const auto& y : all) left.insert(twist_product(s, b1, y));
    for (const auto& b2 : out) {
      const bool absorbed = std::all_of(left.begin(), left.end(), [&](const TwistElement& u) {
        return c.contains(twist_product(s, u, b2));
      });
      if (absorbed) return std::make_pair(b1, b2);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> strictly_above(const Congruence& c, const CongruenceLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t i : lattice.above(c)) {
    if (!(lattice.elements[i] == c)) out.push_back(i);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> irreducible_failure(const Congruence& c,
                                                                       const CongruenceLattice& lattice) {
  const auto up = strictly_above(c, lattice);
  for (std::size_t i = 0; i < up.size(); ++i) {
    for (std::size_t j = i + 1; j < up.size(); ++j) {
      if (lattice.elements[up[i]].meet(lattice.elements[up[j]]) == c) return std::make_pair(up[i], up[j]);
    }
  }
  return std::nullopt;
}

}  // namespace

bool semiprime_by_criterion(const Congruence& c) { return !semiprime_failure(c).has_value(); }
bool prime_by_criterion(const Congruence& c) { return !prime_failure(c).has_value(); }

bool semiprime_by_definition(const Congruence& c, const CongruenceLattice& lattice) {
  for (std::size_t i : strictly_above(c, lattice)) {
    const auto& c1 = lattice.elements[i];
    if (twist_product_within(c1, c1, c)) return false;
  }
  return true;
}

bool prime_by_definition(const Congruence& c, const CongruenceLattice& lattice) {
  const auto up = strictly_above(c, lattice);
  for (std::size_t i : up) {
    for (std::size_t j : up) {
      if (twist_product_within(lattice.elements[i], lattice.elements[j], c)) return false;
    }
  }
  return true;
}

bool irreducible_in(const Congruence& c, const CongruenceLattice& lattice) {
  return !irreducible_failure(c, lattice).has_value();
}

Classification classify_congruence(const Congruence& c, const CongruenceLattice& lattice) {
  Classification out;
  out.semiprime_witness = semiprime_failure(c);
  out.prime_witness = prime_failure(c);
  out.irreducible_witness = irreducible_failure(c, lattice);
  out.semiprime = !out.semiprime_witness;
  out.prime = !out.prime_witness;
  out.irreducible = !out.irreducible_witness;
  out.consistent = out.prime == (out.semiprime && out.irreducible);
  return out;
}

std::vector<Congruence> meet_closure(const std::vector<Congruence>& family) {
  std::vector<Congruence> out;
  const auto add = [&](const Congruence& c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
      return true;
    }
    return false;
  };
  for (const auto& c : family) add(c);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = out;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) grew |= add(snapshot[i].meet(snapshot[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Radical radical(const Congruence& c) {
  const auto& p = c.pair();
  const auto& s = finite_carrier(*p);
  if (!s.commutative()) throw PreconditionError("twist-power radical needs a commutative carrier");
  const std::size_t n = s.size();
  std::set<TwistElement> members;
  for (const auto& x : all_twist_elements(n)) {
    TwistElement power = x;
    for (std::size_t m = 1; m <= n * n + 1; ++m) {
      if (c.contains(power)) {
        members.insert(x);
        break;
      }
      power = twist_product(s, power, x);
    }
  }
  UnionFind uf(n);
  for (const auto& [a, b] : members) uf.unite(a, b);
  auto cls = close(s, uf);
  Radical out{Congruence(p, cls), false, false, false, clash(*p, cls)};
  const auto closed = out.congruence.pairs();
  out.set_was_congruence = std::set<TwistElement>(closed.begin(), closed.end()) == members;
  out.contains_input = c.subset_of(out.congruence);
  out.semiprime = semiprime_by_criterion(out.congruence);
  return out;
}

Spectrum prime_spectrum_krull(const PairPtr& p, std::size_t max_size) {
  Spectrum out;
  out.lattice = enumerate_congruences(p, max_size);
  const auto& els = out.lattice.elements;
  out.criteria_agree = true;
  std::vector<Congruence> prime_list, semiprime_list;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const bool prime = prime_by_criterion(els[i]);
    const bool semiprime = semiprime_by_criterion(els[i]);
    if (prime != prime_by_definition(els[i], out.lattice) ||
        semiprime != semiprime_by_definition(els[i], out.lattice)) {
      out.criteria_agree = false;
    }
    if (prime) {
      out.primes.push_back(i);
      prime_list.push_back(els[i]);
    }
    if (semiprime) semiprime_list.push_back(els[i]);
  }
  // Longest chain: canonical order lists strict subsets first.
  std::vector<int> best(out.primes.size(), 0);
  std::vector<int> prev(out.primes.size(), -1);
  for (std::size_t j = 0; j < out.primes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& lo = els[out.primes[i]];
      const auto& hi = els[out.primes[j]];
      if (lo.subset_of(hi) && !(lo == hi) && best[i] + 1 > best[j]) {
        best[j] = best[i] + 1;
        prev[j] = static_cast<int>(i);
      }
    }
  }
  if (!out.primes.empty()) {
    auto top = static_cast<int>(std::max_element(best.begin(), best.end()) - best.begin());
    out.krull_dimension = best[static_cast<std::size_t>(top)];
    for (int k = top; k >= 0; k = prev[static_cast<std::size_t>(k)]) {
      out.longest_chain.push_back(out.primes[static_cast<std::size_t>(k)]);
    }
    std::reverse(out.longest_chain.begin(), out.longest_chain.end());
  }
  const auto meets = meet_closure(prime_list);
  std::sort(semiprime_list.begin(), semiprime_list.end());
  out.semiprimes_are_prime_meets = meets == semiprime_list;
  return out;
}

LevitzkiResult levitzki_prime(const Congruence& c, TwistElement s1, const CongruenceLattice& lattice) {
  if (c.contains(s1)) throw PreconditionError("starting element lies in the congruence");
  const auto& s = finite_carrier(*c.pair());
  const auto all = all_twist_elements(s.size());
  LevitzkiResult out;
  std::set<TwistElement> seen;
  TwistElement cur = s1;
  while (seen.insert(cur).second) {
    out.sequence.push_back(cur);
    std::optional<TwistElement> next;
    for (const auto& a : all) {
      const auto candidate = twist_product(s, twist_product(s, cur, a), cur);
      if (!c.contains(candidate)) {
        next = candidate;
        break;
      }
    }
    if (!next) {
      out.sequence_stuck = true;
      return out;
    }
    cur = *next;
  }
  std::optional<std::size_t> best;
  for (std::size_t i : lattice.above(c)) {
    const auto& cand = lattice.elements[i];
    const bool avoids = std::none_of(out.sequence.begin(), out.sequence.end(),
                                     [&](const TwistElement& x) { return cand.contains(x); });
    if (avoids && (!best || cand.pair_count() > lattice.elements[*best].pair_count())) best = i;
  }
  out.prime = best;
  return out;
}

// ---------------------------------------------------------------------------
// Chains

std::string to_string(Strictness s) {
  switch (s) {
    case Strictness::strict:
      return "strict";
    case Strictness::equal:
      return "equal";
    case Strictness::unknown:
      return "unknown";
  }
  return "unknown";
}

ChainProbe acc_chain_probe(const SemiringPair& p, const std::function<RelationPredicate(int)>& chain,
                           int first, int last, Window bound) {
  const auto& s = p.carrier();
  const auto sample = s.elements(bound);
  ChainProbe out;
  out.qualification = s.is_finite() ? "exhaustive on the finite carrier"
                                    : "sampled on window radius " + std::to_string(bound.radius);
  for (int i = first; i < last; ++i) {
    ChainLink link;
    link.from = i;
    link.to = i + 1;
    const auto lo = chain(i);
    const auto hi = chain(i + 1);
    for (Elem x : sample) {
      for (Elem y : sample) {
        const bool in_lo = lo(x, y), in_hi = hi(x, y);
        if (in_lo && !in_hi && !link.containment_counterexample) link.containment_counterexample = TwistElement{x, y};
        if (in_hi && !in_lo && !link.separating) link.separating = TwistElement{x, y};
        if (!in_hi || x == y || link.compatibility_failure) continue;
        for (Elem c : sample) {
          if (!hi(s.add(x, c), s.add(y, c)) || !hi(s.mul(x, c), s.mul(y, c))) {
            link.compatibility_failure = std::vector<Elem>{x, y, c};
            break;
          }
        }
      }
    }
    link.contained_on_sample = !link.containment_counterexample;
    if (link.separating) {
      link.strictness = Strictness::strict;
    } else if (s.is_finite() && link.contained_on_sample) {
      link.strictness = Strictness::equal;
    }
    out.links.push_back(std::move(link));
  }
  if (first == last) {
    ChainLink link;
    link.from = link.to = first;
    link.strictness = Strictness::equal;
    out.links.push_back(link);
  }
  return out;
}

RelationPredicate zmax_difference_relation(int i) {
  if (i < 1) throw PreconditionError("chain index starts at 1");
  return [i](Elem a, Elem b) {
    if (a == MaxPlusSemiring::kNegInf || b == MaxPlusSemiring::kNegInf) return a == b;
    return (a - b) % i == 0;
  };
}

std::vector<Congruence> nmax_generated_chain(int n, int links) {
  auto s = truncated_nmax(n);
  std::vector<Elem> tangibles;
  for (Elem e : s->elements()) {
    if (e != s->zero()) tangibles.push_back(e);
  }
  auto p = finite_pair(s->name(), s, {s->zero()}, tangibles);
  std::vector<Congruence> out;
  const Elem one = s->parse_or_throw("1");
  for (int i = 1; i <= links; ++i) {
    std::vector<TwistElement> seeds;
    for (int k = 2; k <= std::min(i, n); ++k) seeds.emplace_back(one, s->parse_or_throw(std::to_string(k)));
    auto g = generate_congruence(p, seeds);
    if (!g) throw ConsistencyError("generated relation meets T x A0");
    out.push_back(*g.congruence);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotients and kernels

QuotientPair quotient_pair(const Congruence& c) {
  const auto& p = *c.pair();
  const auto& s = finite_carrier(p);
  const auto blocks = c.blocks();
  const auto k = static_cast<Elem>(blocks.size());
  std::vector<std::string> labels;
  for (const auto& b : blocks) labels.push_back(b.size() == 1 ? p.format(b[0]) : "[" + p.format(b[0]) + "]");
  FiniteSemiring::Table add(idx(k), std::vector<Elem>(idx(k))), mul = add;
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      add[idx(x)][idx(y)] = c.class_of(s.add(blocks[idx(x)][0], blocks[idx(y)][0]));
      mul[idx(x)][idx(y)] = c.class_of(s.mul(blocks[idx(x)][0], blocks[idx(y)][0]));
    }
  }
  for (Elem a : s.elements()) {
    for (Elem b : s.elements()) {
      if (add[idx(c.class_of(a))][idx(c.class_of(b))] != c.class_of(s.add(a, b)) ||
          mul[idx(c.class_of(a))][idx(c.class_of(b))] != c.class_of(s.mul(a, b))) {
        throw ConsistencyError("induced operations are not well defined at " + p.format(a) + ", " + p.format(b));
      }
    }
  }
  auto carrier = std::make_shared<FiniteSemiring>(p.name() + "/~", std::move(labels), add, mul,
                                                  c.class_of(s.zero()), c.class_of(s.one()));
  std::set<Elem> a0, t;
  for (Elem e : p.a0_elements()) a0.insert(c.class_of(e));
  for (Elem e : p.tangibles()) t.insert(c.class_of(e));
  QuotientPair out;
  out.pair = finite_pair(carrier->name(), carrier, {a0.begin(), a0.end()}, {t.begin(), t.end()});
  out.projection = c.classes();
  out.admissibility = verify_admissible(*out.pair);
  return out;
}

AxiomReport verify_homomorphism(const PairHomomorphism& f) {
  const auto& src = finite_carrier(*f.source);
  const auto& dst = finite_carrier(*f.target);
  if (f.map.size() != src.size()) throw PreconditionError("map table does not cover the source carrier");
  for (Elem e : f.map) {
    if (e < 0 || idx(e) >= dst.size()) throw PreconditionError("map value out of range");
  }
  AxiomReport report("map " + f.source->name() + " -> " + f.target->name());
  const auto m = [&](Elem e) { return f.map[idx(e)]; };
  if (m(src.zero()) != dst.zero()) report.record("zero", {src.label(src.zero())});
  if (m(src.one()) != dst.one()) report.record("one", {src.label(src.one())});
  for (Elem a : src.elements()) {
    for (Elem b : src.elements()) {
      if (m(src.add(a, b)) != dst.add(m(a), m(b))) report.record("additive", {src.label(a), src.label(b)});
      if (m(src.mul(a, b)) != dst.mul(m(a), m(b))) report.record("multiplicative", {src.label(a), src.label(b)});
    }
    if (f.source->in_a0(a) && !f.target->in_a0(m(a))) report.record("A0 preserved", {src.label(a)});
    if (f.source->in_t(a) && !f.target->in_t(m(a))) report.record("T preserved", {src.label(a)});
  }
  report.count_checks(src.size() * src.size());
  return report;
}

Kernel congruence_kernel(const PairHomomorphism& f) {
  const auto report = verify_homomorphism(f);
  for (const char* axiom : {"zero", "one", "additive", "multiplicative"}) {
    if (const auto* v = report.find(axiom)) {
      std::string w;
      for (const auto& x : v->witness) w += (w.empty() ? "" : ", ") + x;
      throw PreconditionError(std::string("not a homomorphism: ") + axiom + " fails at " + w);
    }
  }
  Congruence c(f.source, f.map);
  Kernel out{c, !report.violates("A0 preserved"), !tangible_a0_clash(c).has_value()};
  return out;
}

}  // namespace tpairs
