#include "tpairs/modules.hpp"

#include <algorithm>
#include <set>

namespace tpairs {

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool includes(const std::vector<Elem>& big, const std::vector<Elem>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

FiniteModule::FiniteModule(std::string name, PairPtr scalars, std::vector<std::string> labels, const AddFn& add,
                           const ActFn& act, Elem zero, std::vector<Elem> n_image, std::vector<Elem> tangibles)
    : name_(std::move(name)),
      scalars_(std::move(scalars)),
      labels_(std::move(labels)),
      zero_(zero),
      n_image_(sorted_unique(std::move(n_image))),
      tangibles_(sorted_unique(std::move(tangibles))) {
  if (!scalars_ || !scalars_->is_finite()) throw PreconditionError("module scalars must be a finite pair");
  const std::size_t n = labels_.size();
  if (n == 0) throw StructureError("module has no elements");
  auto in_range = [n](Elem e) { return e >= 0 && static_cast<std::size_t>(e) < n; };
  if (!in_range(zero_)) throw StructureError("module zero out of range");
  add_.resize(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Elem r = add(static_cast<Elem>(u), static_cast<Elem>(v));
      if (!in_range(r)) throw StructureError("module addition leaves the carrier");
      add_[u * n + v] = r;
    }
  }
  const auto& as = scalars_->elements();
  act_.resize(as.size() * n);
  for (Elem a : as) {
    for (std::size_t v = 0; v < n; ++v) {
      const Elem r = act(a, static_cast<Elem>(v));
      if (!in_range(r)) throw StructureError("scalar action leaves the carrier");
      act_[idx(a) * n + v] = r;
    }
  }
  n_mask_.assign(n, 0);
  for (Elem v : n_image_) {
    if (!in_range(v)) throw StructureError("N element out of range");
    n_mask_[idx(v)] = 1;
  }
  for (Elem v : tangibles_) {
    if (!in_range(v)) throw StructureError("tangible element out of range");
  }
}

std::vector<Elem> FiniteModule::elements() const {
  std::vector<Elem> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

bool FiniteModule::preceq(Elem u, Elem v) const {
  return std::any_of(n_image_.begin(), n_image_.end(), [&](Elem n) { return add(u, n) == v; });
}

FiniteModule FiniteModule::with_n(std::vector<Elem> n_image) const {
  FiniteModule copy = *this;
  copy.n_image_ = sorted_unique(std::move(n_image));
  copy.n_mask_.assign(size(), 0);
  for (Elem v : copy.n_image_) copy.n_mask_.at(idx(v)) = 1;
  return copy;
}

AxiomReport verify_module_pair(const FiniteModule& m, bool admissible) {
  AxiomReport r("module pair " + m.name());
  const auto& p = m.scalars();
  const auto& s = p.carrier();
  const auto el = m.elements();
  auto lab = [&](Elem v) { return m.label(v); };
  auto sl = [&](Elem a) { return s.format(a); };
  for (Elem u : el) {
    r.count_checks(1);
    if (m.add(u, m.zero()) != u || m.add(m.zero(), u) != u) r.record("additive zero", {lab(u)});
    for (Elem v : el) {
      r.count_checks(1);
      if (m.add(u, v) != m.add(v, u)) r.record("additive commutativity", {lab(u), lab(v)});
      for (Elem w : el) {
        r.count_checks(1);
        if (m.add(m.add(u, v), w) != m.add(u, m.add(v, w))) {
          r.record("additive associativity", {lab(u), lab(v), lab(w)});
        }
      }
    }
  }
  for (Elem a : p.elements()) {
    for (Elem u : el) {
      for (Elem v : el) {
        r.count_checks(1);
        if (m.act(a, m.add(u, v)) != m.add(m.act(a, u), m.act(a, v))) {
          r.record("action distributes over vectors", {sl(a), lab(u), lab(v)});
        }
      }
      for (Elem b : p.elements()) {
        r.count_checks(2);
        if (m.act(s.add(a, b), u) != m.add(m.act(a, u), m.act(b, u))) {
          r.record("action distributes over scalars", {sl(a), sl(b), lab(u)});
        }
        if (m.act(s.mul(a, b), u) != m.act(a, m.act(b, u))) {
          r.record("action associativity", {sl(a), sl(b), lab(u)});
        }
      }
    }
  }
  for (Elem u : el) {
    r.count_checks(2);
    if (m.act(s.one(), u) != u) r.record("unit action", {lab(u)});
    if (m.act(s.zero(), u) != m.zero()) r.record("zero action", {lab(u)});
  }
  if (!m.in_n(m.zero())) r.record("N is a submodule", {"0 missing"});
  for (Elem u : m.n_image()) {
    for (Elem v : m.n_image()) {
      r.count_checks(1);
      if (!m.in_n(m.add(u, v))) r.record("N is a submodule", {lab(u), lab(v)});
    }
    for (Elem a : p.elements()) {
      r.count_checks(1);
      if (!m.in_n(m.act(a, u))) r.record("N is a submodule", {sl(a), lab(u)});
    }
  }
  for (Elem a : p.a0_elements()) {
    for (Elem u : el) {
      r.count_checks(1);
      if (!m.in_n(m.act(a, u))) r.record("A0 M inside N", {sl(a), lab(u)});
    }
  }
  if (admissible) {
    const auto& tm = m.tangibles();
    for (Elem t : tm) {
      r.count_checks(1);
      if (m.in_n(t)) r.record("T_M and N disjoint", {lab(t)});
      for (Elem a : p.tangibles()) {
        r.count_checks(1);
        if (!std::binary_search(tm.begin(), tm.end(), m.act(a, t))) r.record("T_M stable under T", {sl(a), lab(t)});
      }
    }
    std::set<Elem> span(tm.begin(), tm.end());
    span.insert(m.zero());
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<Elem> cur(span.begin(), span.end());
      for (Elem u : cur) {
        for (Elem v : cur) grew = span.insert(m.add(u, v)).second || grew;
      }
    }
    for (Elem u : el) {
      r.count_checks(1);
      if (!span.count(u)) r.record("T_M u {0} spans M", {lab(u)});
    }
  }
  return r;
}

FiniteModule free_module_pair(const PairPtr& p, std::size_t n) {
  const auto* fs = p->finite();
  if (!fs) throw PreconditionError("free_module_pair needs a finite pair");
  if (n == 0) throw PreconditionError("free module needs at least one coordinate");
  const std::size_t q = fs->size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > 65536 / q) throw BoundExceeded("free module too large");
    total *= q;
  }
  auto digits = [q, n](Elem v) {
    std::vector<Elem> d(n);
    for (std::size_t i = n; i-- > 0;) {
      d[i] = v % static_cast<Elem>(q);
      v /= static_cast<Elem>(q);
    }
    return d;
  };
  auto pack = [q](const std::vector<Elem>& d) {
    Elem v = 0;
    for (Elem x : d) v = v * static_cast<Elem>(q) + x;
    return v;
  };
  std::vector<std::string> labels;
  std::vector<Elem> n_image;
  std::vector<Elem> tangibles;
  for (std::size_t v = 0; v < total; ++v) {
    const auto d = digits(static_cast<Elem>(v));
    std::string l = "(";
    for (std::size_t i = 0; i < n; ++i) l += (i ? "," : "") + fs->format(d[i]);
    labels.push_back(l + ")");
    if (std::all_of(d.begin(), d.end(), [&](Elem x) { return p->in_a0(x); })) n_image.push_back(static_cast<Elem>(v));
    const auto nonzero = std::count_if(d.begin(), d.end(), [&](Elem x) { return x != fs->zero(); });
    if (nonzero == 1 && std::any_of(d.begin(), d.end(), [&](Elem x) { return p->in_t(x); })) {
      tangibles.push_back(static_cast<Elem>(v));
    }
  }
  auto add = [&, fs](Elem u, Elem v) {
    auto a = digits(u);
    const auto b = digits(v);
    for (std::size_t i = 0; i < n; ++i) a[i] = fs->add(a[i], b[i]);
    return pack(a);
  };
  auto act = [&, fs](Elem c, Elem v) {
    auto a = digits(v);
    for (auto& x : a) x = fs->mul(c, x);
    return pack(a);
  };
  std::vector<Elem> zero_digits(n, fs->zero());
  return FiniteModule(p->name() + "^" + std::to_string(n), p, std::move(labels), add, act, pack(zero_digits),
                      std::move(n_image), std::move(tangibles));
}

std::vector<Elem> unit_vectors(const FiniteModule& free, std::size_t n) {
  const auto* fs = free.scalars().finite();
  const auto q = static_cast<Elem>(fs->size());
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n; ++i) {
    Elem v = 0;
    for (std::size_t j = 0; j < n; ++j) v = v * q + (i == j ? fs->one() : fs->zero());
    out.push_back(v);
  }
  return out;
}

FiniteModule restrict_scalars(const FiniteSemiring& w, const PairPtr& base, const std::vector<Elem>& inclusion,
                              std::vector<Elem> n_image) {
  if (!base->is_finite()) throw PreconditionError("restrict_scalars needs a finite base pair");
  if (inclusion.size() != base->elements().size()) throw StructureError("inclusion size does not match the base");
  for (Elem a : base->elements()) {
    for (Elem b : base->elements()) {
      const auto& s = base->carrier();
      const auto at = [&](Elem x) { return inclusion[static_cast<std::size_t>(x)]; };
      if (at(s.add(a, b)) != w.add(at(a), at(b)) || at(s.mul(a, b)) != w.mul(at(a), at(b))) {
        throw StructureError("inclusion is not a homomorphism");
      }
    }
  }
  if (n_image.empty()) n_image.push_back(w.zero());
  return FiniteModule(
      w.name() + " over " + base->name(), base, w.labels(), [&w](Elem u, Elem v) { return w.add(u, v); },
      [&w, &inclusion](Elem a, Elem v) { return w.mul(inclusion[static_cast<std::size_t>(a)], v); }, w.zero(),
      std::move(n_image));
}

std::vector<Elem> submodule_span(const FiniteModule& m, const std::vector<Elem>& gens) {
  std::vector<char> in(m.size(), 0);
  std::vector<Elem> members{m.zero()};
  in[static_cast<std::size_t>(m.zero())] = 1;
  auto push = [&](Elem v) {
    if (!in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = 1;
      members.push_back(v);
    }
  };
  for (Elem g : gens) {
    for (Elem a : m.scalars().elements()) push(m.act(a, g));
  }
  // Closing under + suffices: a(u + v) = au + av keeps scalar multiples inside.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) push(m.add(members[i], members[j]));
  }
  std::sort(members.begin(), members.end());
  return members;
}

BaseCheck base_check(const FiniteModule& m, const std::vector<Elem>& s, std::size_t max_tuples) {
  const auto& p = m.scalars();
  const auto& as = p.elements();
  std::size_t count = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (count > max_tuples / as.size()) throw BoundExceeded("base_check: too many coefficient tuples");
    count *= as.size();
  }
  std::vector<std::vector<Elem>> tuples;
  std::vector<Elem> values;
  std::vector<std::size_t> idx(s.size(), 0);
  while (true) {
    std::vector<Elem> a(s.size());
    Elem v = m.zero();
    for (std::size_t i = 0; i < s.size(); ++i) {
      a[i] = as[idx[i]];
      v = m.add(v, m.act(a[i], s[i]));
    }
    tuples.push_back(std::move(a));
    values.push_back(v);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == as.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  BaseCheck out;
  out.spans = true;
  for (Elem v : m.elements()) {
    const bool ok = std::any_of(values.begin(), values.end(), [&](Elem u) { return m.preceq(u, v); });
    if (!ok) {
      out.spans = false;
      out.span_failure = v;
      break;
    }
  }
  out.independent = true;
  for (std::size_t i = 0; i < tuples.size() && out.independent; ++i) {
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      if (!m.preceq(values[i], values[j])) continue;
      bool each = true;
      for (std::size_t k = 0; k < s.size() && each; ++k) each = p.preceq(tuples[i][k], tuples[j][k]);
      if (!each) {
        out.independent = false;
        out.independence_failure = std::make_pair(tuples[i], tuples[j]);
        break;
      }
    }
  }
  return out;
}

RankResult module_rank(const FiniteModule& m, const std::vector<Elem>& sub_m, const std::vector<Elem>& sub_n,
                       std::size_t max_generators, std::size_t max_subsets) {
  const auto target = sorted_unique(sub_m);
  const auto base = submodule_span(m, sub_n);
  if (submodule_span(m, target) != target) throw PreconditionError("rank: M is not a submodule");
  if (!includes(target, base)) throw PreconditionError("rank: N is not inside M");
  RankResult out;
  std::vector<Elem> candidates;
  std::set_difference(target.begin(), target.end(), base.begin(), base.end(), std::back_inserter(candidates));
  if (candidates.empty()) {
    out.rank = 0;
    return out;
  }
  for (std::size_t k = 1; k <= max_generators && k <= candidates.size(); ++k) {
    out.lower_bound = k;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++out.subsets_checked > max_subsets) return out;
      std::vector<Elem> gens = base;
      for (auto i : pick) gens.push_back(candidates[i]);
      if (submodule_span(m, gens) == target) {
        out.rank = k;
        return out;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.lower_bound = std::min(max_generators, candidates.size()) + 1;
  return out;
}

std::vector<Elem> induced_morphism(const FiniteModule& free, std::size_t n, const FiniteModule& target,
                                   const std::vector<Elem>& images) {
  if (images.size() != n) throw PreconditionError("one image per unit vector is needed");
  const auto* fs = free.scalars().finite();
  const auto q = static_cast<Elem>(fs->size());
  std::vector<Elem> f(free.size());
  for (Elem v : free.elements()) {
    Elem rest = v;
    Elem out = target.zero();
    for (std::size_t i = n; i-- > 0;) {
      out = target.add(out, target.act(rest % q, images[i]));
      rest /= q;
    }
    f[static_cast<std::size_t>(v)] = out;
  }
  return f;
}

std::size_t count_pair_morphisms(const FiniteModule& source, const FiniteModule& target,
                                 const std::vector<std::pair<Elem, Elem>>& fixed, std::size_t limit) {
  if (source.scalars().carrier().name() != target.scalars().carrier().name()) {
    throw PreconditionError("modules over different scalars");
  }
  const std::size_t n = source.size();
  std::vector<Elem> f(n, -1);
  std::vector<Elem> forced(n, -1);
  forced[static_cast<std::size_t>(source.zero())] = target.zero();
  for (const auto& [x, y] : fixed) {
    auto& slot = forced.at(static_cast<std::size_t>(x));
    if (slot != -1 && slot != y) return 0;
    slot = y;
  }
  const auto& scal = source.scalars().elements();
  auto consistent = [&](std::size_t x) {
    const Elem fx = f[x];
    if (source.in_n(static_cast<Elem>(x)) && !target.in_n(fx)) return false;
    for (std::size_t y = 0; y <= x; ++y) {
      if (f[y] < 0) continue;
      const auto s = static_cast<std::size_t>(source.add(static_cast<Elem>(x), static_cast<Elem>(y)));
      if (s <= x && f[s] >= 0 && f[s] != target.add(fx, f[y])) return false;
    }
    // Sums landing on x from earlier elements.
    for (std::size_t y = 0; y < x; ++y) {
      for (std::size_t z = 0; z <= y; ++z) {
        if (static_cast<std::size_t>(source.add(static_cast<Elem>(y), static_cast<Elem>(z))) == x &&
            target.add(f[y], f[z]) != fx) {
          return false;
        }
      }
    }
    for (Elem a : scal) {
      const auto ax = static_cast<std::size_t>(source.act(a, static_cast<Elem>(x)));
      if (ax <= x && f[ax] != target.act(a, fx)) return false;
      for (std::size_t y = 0; y < x; ++y) {
        if (static_cast<std::size_t>(source.act(a, static_cast<Elem>(y))) == x && target.act(a, f[y]) != fx) return false;
      }
    }
    return true;
  };
  std::size_t found = 0;
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (found >= limit) return;
    if (x == n) {
      ++found;
      return;
    }
    for (Elem y = 0; y < static_cast<Elem>(target.size()); ++y) {
      if (forced[x] != -1 && forced[x] != y) continue;
      f[x] = y;
      if (consistent(x)) go(x + 1);
      f[x] = -1;
    }
  };
  go(0);
  return found;
}

}  // namespace tpairs
