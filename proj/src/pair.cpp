#include "tpairs/pair.hpp"

#include <algorithm>
#include <set>

namespace tpairs {

std::string to_string(SurpassKind k) {
  switch (k) {
    case SurpassKind::precedes_zero:
      return "precedes_zero";
    case SurpassKind::subset_inclusion:
      return "subset_inclusion";
    case SurpassKind::custom:
      return "custom";
  }
  return "custom";
}

SemiringPair::SemiringPair(PairSpec spec) : spec_(std::move(spec)) {
  if (!spec_.carrier) throw PreconditionError("pair '" + spec_.name + "' has no carrier");
  finite_ = dynamic_cast<const FiniteSemiring*>(spec_.carrier.get());
  if (spec_.surpass != SurpassKind::precedes_zero && !spec_.relation) {
    throw PreconditionError("surpassing relation '" + to_string(spec_.surpass) +
                            "' needs an evaluator");
  }
  elements_ = spec_.carrier->elements(spec_.window);
  if (finite_) {
    const std::size_t n = finite_->size();
    a0_mask_.assign(n, 0);
    t_mask_.assign(n, 0);
    const auto mark = [&](std::vector<char>& mask, const std::vector<Elem>& list,
                          const ElemPredicate& pred, const char* what) {
      for (Elem e : list) {
        if (e < 0 || static_cast<std::size_t>(e) >= n) {
          throw StructureError(std::string(what) + " element index " + std::to_string(e) +
                               " out of range");
        }
        mask[static_cast<std::size_t>(e)] = 1;
      }
      if (list.empty() && pred) {
        for (std::size_t i = 0; i < n; ++i) mask[i] = pred(static_cast<Elem>(i)) ? 1 : 0;
      }
    };
    mark(a0_mask_, spec_.a0_list, spec_.in_a0, "A0");
    mark(t_mask_, spec_.t_list, spec_.in_t, "T");
  } else if (!spec_.in_a0 || !spec_.in_t) {
    throw PreconditionError("symbolic pair '" + spec_.name + "' needs A0 and T predicates");
  }
  for (Elem e : elements_) {
    if (in_a0(e)) a0_.push_back(e);
    if (in_t(e)) t_.push_back(e);
  }
  if (finite_) {
    const std::size_t n = finite_->size();
    preceq_matrix_.assign(n * n, 0);
    if (spec_.surpass == SurpassKind::precedes_zero) {
      for (Elem b : elements_) {
        for (Elem y : a0_) {
          preceq_matrix_[static_cast<std::size_t>(b) * n +
                         static_cast<std::size_t>(finite_->add(b, y))] = 1;
        }
      }
    } else {
      for (Elem a : elements_) {
        for (Elem b : elements_) {
          preceq_matrix_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] =
              spec_.relation(a, b) ? 1 : 0;
        }
      }
    }
  }
}

bool SemiringPair::in_a0(Elem e) const {
  if (finite_) return a0_mask_.at(static_cast<std::size_t>(e)) != 0;
  return spec_.in_a0(e);
}

bool SemiringPair::in_t(Elem e) const {
  if (finite_) return t_mask_.at(static_cast<std::size_t>(e)) != 0;
  return spec_.in_t(e);
}

Truth SemiringPair::surpasses(Elem b1, Elem b2) const {
  if (finite_) return truth(preceq(b1, b2));
  if (spec_.surpass != SurpassKind::precedes_zero) return truth(spec_.relation(b1, b2));
  if (spec_.exact_preceq0) return truth(spec_.exact_preceq0(b1, b2));
  return preceq0_witness(b1, b2) ? Truth::yes : Truth::unknown;
}

bool SemiringPair::preceq(Elem b1, Elem b2) const {
  if (!finite_) {
    const Truth t = surpasses(b1, b2);
    if (t == Truth::unknown) {
      throw BoundExceeded("surpassing undecided within window for " + format(b1) + ", " +
                          format(b2));
    }
    return t == Truth::yes;
  }
  const std::size_t n = finite_->size();
  return preceq_matrix_[static_cast<std::size_t>(b1) * n + static_cast<std::size_t>(b2)] != 0;
}

std::optional<Elem> SemiringPair::preceq0_witness(Elem b1, Elem b2) const {
  for (Elem y : a0_) {
    if (carrier().add(b1, y) == b2) return y;
  }
  return std::nullopt;
}

Elem SemiringPair::negate(Elem e) const {
  if (!spec_.negation) throw PreconditionError("pair '" + name() + "' has no negation map");
  return (*spec_.negation)(e);
}

std::string SemiringPair::format_set(const std::vector<Elem>& es) const {
  std::string out = "{";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + format(es[i]);
  return out + "}";
}

PairPtr SemiringPair::with_negation(ElemMap neg) const {
  PairSpec spec = spec_;
  spec.negation = std::move(neg);
  return std::make_shared<SemiringPair>(std::move(spec));
}

// ---------------------------------------------------------------------------

PairPtr finite_pair(std::string name, FiniteSemiringPtr carrier, const std::vector<Elem>& a0,
                    const std::vector<Elem>& t) {
  PairSpec spec;
  spec.name = std::move(name);
  spec.carrier = std::move(carrier);
  spec.a0_list = a0;
  spec.t_list = t;
  return std::make_shared<SemiringPair>(std::move(spec));
}

PairPtr boolean_pair() { return finite_pair("boolean", boolean_semiring(), {0}, {1}); }

PairPtr double_pair(const FiniteSemiringPtr& base) {
  const auto n = static_cast<Elem>(base->size());
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) labels.push_back("(" + base->label(i) + "," + base->label(j) + ")");
  }
  const auto& s = *base;
  auto carrier = std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "double(" + base->name() + ")", std::move(labels),
      [&](Elem x, Elem y) {
        return s.add(x / n, y / n) * n + s.add(x % n, y % n);
      },
      [&](Elem x, Elem y) {
        const Elem a = x / n, b = x % n, c = y / n, d = y % n;
        return s.add(s.mul(a, c), s.mul(b, d)) * n + s.add(s.mul(a, d), s.mul(b, c));
      },
      s.zero() * n + s.zero(), s.one() * n + s.zero()));
  std::vector<Elem> a0, t;
  for (Elem i = 0; i < n; ++i) a0.push_back(i * n + i);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if ((i == s.zero()) != (j == s.zero())) t.push_back(i * n + j);
    }
  }
  PairSpec spec;
  spec.name = carrier->name();
  spec.carrier = carrier;
  spec.a0_list = a0;
  spec.t_list = t;
  spec.negation = [n](Elem e) { return (e % n) * n + e / n; };
  return std::make_shared<SemiringPair>(std::move(spec));
}

Elem DoubledSemiring::intern(Elem x, Elem y) const {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = index_.try_emplace({x, y}, static_cast<Elem>(pairs_.size()));
  if (inserted) pairs_.emplace_back(x, y);
  return it->second;
}

std::pair<Elem, Elem> DoubledSemiring::components(Elem e) const {
  std::lock_guard lock(mutex_);
  if (e < 0 || static_cast<std::size_t>(e) >= pairs_.size()) {
    throw StructureError("unknown doubled element handle " + std::to_string(e));
  }
  return pairs_[static_cast<std::size_t>(e)];
}

Elem DoubledSemiring::add(Elem a, Elem b) const {
  const auto [a1, a2] = components(a);
  const auto [b1, b2] = components(b);
  return intern(base_->add(a1, b1), base_->add(a2, b2));
}

Elem DoubledSemiring::mul(Elem a, Elem b) const {
  const auto [a1, a2] = components(a);
  const auto [b1, b2] = components(b);
  const Semiring& s = *base_;
  return intern(s.add(s.mul(a1, b1), s.mul(a2, b2)), s.add(s.mul(a1, b2), s.mul(a2, b1)));
}

std::vector<Elem> DoubledSemiring::elements(Window w) const {
  const auto base = base_->elements(w);
  std::vector<Elem> out;
  out.reserve(base.size() * base.size());
  for (Elem x : base) {
    for (Elem y : base) out.push_back(intern(x, y));
  }
  return out;
}

std::string DoubledSemiring::format(Elem e) const {
  const auto [x, y] = components(e);
  return "(" + base_->format(x) + "," + base_->format(y) + ")";
}

std::optional<Elem> DoubledSemiring::parse(std::string_view text) const {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto x = base_->parse(text.substr(0, comma));
  auto y = base_->parse(text.substr(comma + 1));
  if (!x || !y) return std::nullopt;
  return intern(*x, *y);
}

PairPtr double_pair(const SemiringPtr& base) {
  if (auto finite = std::dynamic_pointer_cast<const FiniteSemiring>(base)) return double_pair(finite);
  auto carrier = std::make_shared<DoubledSemiring>(base);
  const Elem z = base->zero();
  PairSpec spec;
  spec.name = carrier->name();
  spec.carrier = carrier;
  spec.in_a0 = [carrier](Elem e) {
    const auto [x, y] = carrier->components(e);
    return x == y;
  };
  spec.in_t = [carrier, z](Elem e) {
    const auto [x, y] = carrier->components(e);
    return (x == z) != (y == z);
  };
  spec.negation = [carrier](Elem e) {
    const auto [x, y] = carrier->components(e);
    return carrier->intern(y, x);
  };
  spec.spanning_by_construction = true;
  return std::make_shared<SemiringPair>(std::move(spec));
}

// ---------------------------------------------------------------------------

OrderedMonoid trivial_monoid() { return OrderedMonoid{"trivial", {"1"}, {{0}}, 0, {0}}; }

OrderedMonoid truncated_nat_monoid(int n) {
  if (n < 1) throw ConfigError("truncated monoid needs n >= 1");
  OrderedMonoid m;
  m.name = "nat_trunc(" + std::to_string(n) + ")";
  for (int i = 0; i <= n; ++i) {
    m.labels.push_back(std::to_string(i));
    m.rank.push_back(i);
  }
  m.mul.assign(static_cast<std::size_t>(n + 1), std::vector<Elem>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) m.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(i + j, n);
  }
  m.unit = 0;
  return m;
}

PairPtr supertropical_extension(const OrderedMonoid& t) {
  const std::size_t n = t.labels.size();
  if (n == 0) throw StructureError("monoid has no elements");
  if (t.rank.empty()) {
    throw StructureError("unsupported structure: supertropical extension needs a totally ordered monoid");
  }
  if (t.rank.size() != n) throw StructureError("order has wrong length");
  if (std::set<int>(t.rank.begin(), t.rank.end()).size() != n) {
    throw StructureError("unsupported structure: order is not total (repeated rank)");
  }
  if (t.mul.size() != n) throw StructureError("monoid table has wrong row count");
  for (const auto& row : t.mul) {
    if (row.size() != n) throw StructureError("monoid table row has wrong length");
    for (Elem e : row) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) throw StructureError("monoid table entry out of range");
    }
  }
  const auto m = [&](Elem a, Elem b) {
    return t.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  const auto rk = [&](Elem a) { return t.rank[static_cast<std::size_t>(a)]; };
  const auto N = static_cast<Elem>(n);
  for (Elem a = 0; a < N; ++a) {
    if (m(a, t.unit) != a || m(t.unit, a) != a) throw StructureError("monoid unit fails at " + t.labels[a]);
    for (Elem b = 0; b < N; ++b) {
      for (Elem c = 0; c < N; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) throw StructureError("monoid is not associative");
        // strict monotonicity; saturation breaks distributivity of the extension
        if (rk(a) < rk(b) && (rk(m(a, c)) >= rk(m(b, c)) || rk(m(c, a)) >= rk(m(c, b)))) {
          throw StructureError("unsupported structure: order is not compatible with multiplication at " +
                               t.labels[a] + ", " + t.labels[b] + ", " + t.labels[c]);
        }
      }
    }
  }
  // 0 | tangibles 1..n | ghosts n+1..2n
  const bool clash = std::find(t.labels.begin(), t.labels.end(), "0") != t.labels.end();
  std::vector<std::string> labels{clash ? "-inf" : "0"};
  for (const auto& l : t.labels) labels.push_back(l);
  for (const auto& l : t.labels) labels.push_back(l + "v");
  const auto level = [N](Elem x) { return (x - 1) % N; };
  const auto ghost = [N](Elem x) { return x > N; };
  auto carrier = std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "supertropical(" + t.name + ")", std::move(labels),
      [&](Elem x, Elem y) -> Elem {
        if (x == 0) return y;
        if (y == 0) return x;
        const int rx = rk(level(x)), ry = rk(level(y));
        if (rx > ry) return x;
        if (ry > rx) return y;
        return 1 + N + level(x);
      },
      [&](Elem x, Elem y) -> Elem {
        if (x == 0 || y == 0) return 0;
        const Elem l = m(level(x), level(y));
        return (ghost(x) || ghost(y)) ? 1 + N + l : 1 + l;
      },
      0, 1 + t.unit));
  std::vector<Elem> a0{0}, tang;
  for (Elem i = 0; i < N; ++i) {
    tang.push_back(1 + i);
    a0.push_back(1 + N + i);
  }
  PairSpec spec;
  spec.name = carrier->name();
  spec.carrier = carrier;
  spec.a0_list = a0;
  spec.t_list = tang;
  spec.negation = [](Elem e) { return e; };
  return std::make_shared<SemiringPair>(std::move(spec));
}

PairPtr supertropical_pair(Domain domain, Window window) {
  using ST = SupertropicalSemiring;
  PairSpec spec;
  spec.carrier = std::make_shared<ST>(domain);
  spec.name = spec.carrier->name();
  spec.in_a0 = [](Elem e) { return !ST::is_tangible(e); };
  spec.in_t = [](Elem e) { return ST::is_tangible(e); };
  spec.exact_preceq0 = [](Elem b1, Elem b2) {
    if (b1 == b2) return true;
    if (!ST::is_ghost(b2)) return false;
    return b1 == ST::kZero || ST::level(b1) <= ST::level(b2);
  };
  spec.negation = [](Elem e) { return e; };
  spec.window = window;
  spec.spanning_by_construction = true;
  return std::make_shared<SemiringPair>(std::move(spec));
}

namespace {

PairPtr zero_a0_pair(SemiringPtr carrier, Window window) {
  const Elem z = carrier->zero();
  PairSpec spec;
  spec.name = carrier->name();
  spec.carrier = std::move(carrier);
  spec.in_a0 = [z](Elem e) { return e == z; };
  spec.in_t = [z](Elem e) { return e != z; };
  spec.exact_preceq0 = [](Elem a, Elem b) { return a == b; };
  spec.window = window;
  spec.spanning_by_construction = true;
  return std::make_shared<SemiringPair>(std::move(spec));
}

}  // namespace

PairPtr natural_pair(Window window) {
  return zero_a0_pair(std::make_shared<NaturalSemiring>(), window);
}

PairPtr maxplus_pair(Domain domain, Window window) {
  return zero_a0_pair(std::make_shared<MaxPlusSemiring>(domain), window);
}

PairPtr rational_pair(Window window) {
  return zero_a0_pair(std::make_shared<RationalSemiring>(), window);
}

}  // namespace tpairs
