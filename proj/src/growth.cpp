#include "tpairs/growth.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>

#include "tpairs/fractions.hpp"
#include "tpairs/modules.hpp"
#include "tpairs/polypair.hpp"

namespace tpairs {

namespace {

using WordSet = std::set<Word>;

std::size_t count_outside(const WordSet& a, const WordSet& b) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](const Word& w) { return !b.count(w); }));
}

WordSet normalized(const MonomialAlgebra& alg, const std::vector<Word>& words) {
  WordSet out;
  for (const auto& w : words) {
    for (auto letter : w) {
      if (letter >= alg.letters) throw PreconditionError("letter " + std::to_string(letter) + " out of range");
    }
    if (auto n = alg.normalize(w)) out.insert(*n);
  }
  return out;
}

WordSet times(const MonomialAlgebra& alg, const WordSet& a, const WordSet& b) {
  WordSet out;
  for (const auto& u : a) {
    for (const auto& v : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      if (auto n = alg.normalize(std::move(w))) out.insert(std::move(*n));
    }
  }
  return out;
}

std::vector<Elem> merged(std::vector<Elem> a, const std::vector<Elem>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

MonomialAlgebra free_monoid_algebra(std::size_t t) {
  return {"free(" + std::to_string(t) + ")", t, [](Word w) { return std::optional<Word>(std::move(w)); }};
}

MonomialAlgebra polynomial_algebra(std::size_t t) {
  return {"poly(" + std::to_string(t) + ")", t, [](Word w) {
            std::sort(w.begin(), w.end());
            return std::optional<Word>(std::move(w));
          }};
}

MonomialAlgebra truncated_polynomial_algebra(std::size_t t, std::size_t n) {
  return {"poly(" + std::to_string(t) + ")/deg>=" + std::to_string(n), t, [n](Word w) -> std::optional<Word> {
            if (w.size() >= n) return std::nullopt;
            std::sort(w.begin(), w.end());
            return w;
          }};
}

MonomialAlgebra matrix_unit_algebra(std::size_t n) {
  const auto nn = static_cast<std::uint32_t>(n);
  return {"units(" + std::to_string(n) + ")", n * n, [nn](Word w) -> std::optional<Word> {
            if (w.empty()) return w;
            std::uint32_t cur = w.front();
            for (std::size_t i = 1; i < w.size(); ++i) {
              if (cur % nn != w[i] / nn) return std::nullopt;
              cur = (cur / nn) * nn + w[i] % nn;
            }
            return Word{cur};
          }};
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "*x" : "x") + std::to_string(w[i] + 1);
  return out;
}

GrowthProfile growth_sequence(const MonomialAlgebra& alg, const std::vector<Word>& generators,
                              const std::vector<Word>& zero_generators, unsigned k_max, std::size_t max_monomials) {
  GrowthProfile out;
  out.k_max = k_max;
  out.description = alg.name + " generated by";
  for (const auto& g : generators) out.description += " " + format_word(g);
  std::vector<Word> all = generators;
  all.insert(all.end(), zero_generators.begin(), zero_generators.end());
  const WordSet v = normalized(alg, all);
  const WordSet v0 = normalized(alg, zero_generators);
  WordSet w, z, p = v, p0 = v0;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k > 1) {
      p = times(alg, p, v);
      p0 = times(alg, p0, v0);
    }
    WordSet next = w;
    next.insert(p.begin(), p.end());
    z.insert(p0.begin(), p0.end());
    if (next.size() > max_monomials) {
      out.truncated = true;
      break;
    }
    std::size_t dk = 0;
    for (const auto& m : next) {
      if (!w.count(m) && !z.count(m)) ++dk;
    }
    out.d.push_back(dk);
    out.cumulative.push_back(count_outside(next, z));
    out.filtration_sizes.push_back(next.size());
    w = std::move(next);
  }
  return out;
}

GrowthProfile growth_sequence(const FiniteSemiring& ws, const PairPtr& base, const std::vector<Elem>& inclusion,
                              const std::vector<Elem>& generators, const std::vector<Elem>& zero_generators,
                              unsigned k_max) {
  const FiniteModule m = restrict_scalars(ws, base, inclusion);
  GrowthProfile out;
  out.k_max = k_max;
  out.description = ws.name() + " generated by";
  for (Elem g : generators) out.description += " " + ws.format(g);
  const auto v = submodule_span(m, merged(generators, zero_generators));
  const auto v0 = submodule_span(m, zero_generators);
  auto product = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> prods;
    for (Elem x : a) {
      for (Elem y : b) prods.push_back(ws.mul(x, y));
    }
    return submodule_span(m, prods);
  };
  std::vector<Elem> w{ws.zero()}, z{ws.zero()}, p = v, p0 = v0;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k > 1) {
      p = product(p, v);
      p0 = product(p0, v0);
    }
    const auto next = submodule_span(m, merged(w, p));
    z = submodule_span(m, merged(z, p0));
    const auto dk = module_rank(m, next, merged(w, z));
    const auto ck = module_rank(m, next, z);
    if (!dk.rank || !ck.rank) {
      out.truncated = true;
      break;
    }
    out.d.push_back(*dk.rank);
    out.cumulative.push_back(*ck.rank);
    out.filtration_sizes.push_back(next.size());
    w = next;
  }
  return out;
}

HilbertSeries hilbert_series(const GrowthProfile& profile, unsigned k_max) {
  if (profile.d.size() < k_max) {
    throw PreconditionError("profile has " + std::to_string(profile.d.size()) + " terms, " + std::to_string(k_max) +
                            " requested");
  }
  return {std::vector<std::size_t>(profile.d.begin(), profile.d.begin() + k_max)};
}

std::vector<std::size_t> polynomial_hilbert_coefficients(std::size_t t, unsigned k_max) {
  std::vector<std::size_t> out;
  for (unsigned k = 1; k <= k_max; ++k) {
    // C(k + t - 1, t - 1), built incrementally so every step divides exactly.
    std::size_t c = 1;
    for (std::size_t i = 1; i < t; ++i) c = c * (k + i) / i;
    out.push_back(t == 0 ? 0 : c);
  }
  return out;
}

GkEstimate gk_dimension(const GrowthProfile& profile) {
  const auto kk = static_cast<unsigned>(profile.cumulative.size());
  if (kk < 4) throw PreconditionError("GK estimate needs at least 4 filtration levels");
  GkEstimate out;
  out.k_max = kk;
  const unsigned start = std::max(2u, (kk + 1) / 2);
  std::vector<double> xs, ys;
  for (unsigned k = start; k <= kk; ++k) {
    const auto c = profile.cumulative[k - 1];
    if (c == 0) continue;
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(static_cast<double>(c)));
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double den = n * sxx - sx * sx;
    out.value = den == 0 ? 0.0 : (n * sxy - sx * sy) / den;
  }
  const auto c_start = profile.cumulative[start - 1];
  const auto c_end = profile.cumulative[kk - 1];
  const auto c_prev = profile.cumulative[kk - 2];
  if (c_start > 0 && c_prev > 0) {
    const double rise = std::log(static_cast<double>(c_end)) / std::log(static_cast<double>(kk)) -
                        std::log(static_cast<double>(c_start)) / std::log(static_cast<double>(start));
    out.divergent = rise > 0.3 && static_cast<double>(c_end) >= 1.5 * static_cast<double>(c_prev);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> growth_equivalence(const std::vector<std::size_t>& d,
                                                                      const std::vector<std::size_t>& d2,
                                                                      std::size_t max_m) {
  for (std::size_t total = 2; total <= 2 * max_m; ++total) {
    for (std::size_t m1 = 1; m1 <= max_m; ++m1) {
      if (total <= m1 || total - m1 > max_m) continue;
      const std::size_t m2 = total - m1;
      bool ok = true;
      for (std::size_t k = 1; ok && k <= d2.size() && m2 * k <= d.size(); ++k) ok = d2[k - 1] <= m1 * d[m2 * k - 1];
      for (std::size_t k = 1; ok && k <= d.size() && m1 * k <= d2.size(); ++k) ok = d[k - 1] <= m2 * d2[m1 * k - 1];
      if (ok) return std::make_pair(m1, m2);
    }
  }
  return std::nullopt;
}

OreWitness ore_witness(const SemiringPair& p, Elem a1, Elem a2, unsigned degree_bound, std::vector<Elem> coeffs) {
  const auto& s = p.carrier();
  for (Elem a : {a1, a2}) {
    if (!p.in_t(a)) throw PreconditionError(p.format(a) + " is not tangible");
    if (check_regular(p, a, RegularMode::left).regular == Truth::no) {
      throw PreconditionError(p.format(a) + " is not regular");
    }
  }
  if (coeffs.empty()) coeffs.push_back(s.one());
  OreWitness out;
  const Elem point[] = {a1, a2};
  for (unsigned deg = 1; deg <= degree_bound; ++deg) {
    const auto polys = polynomials_up_to(s, coeffs, 2, deg - 1);
    std::vector<Elem> values;
    for (const auto& f : polys) values.push_back(poly_eval(s, f, point));
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (p.in_a0(values[i])) continue;
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (std::max(polys[i].degree(), polys[j].degree()) != deg - 1 || p.in_a0(values[j])) continue;
        ++out.searched;
        const Elem f = s.add(s.mul(values[i], a1), s.mul(values[j], a2));
        if (p.in_a0(f)) {
          out.found = Truth::yes;
          out.b1 = values[i];
          out.b2 = values[j];
          out.gh = std::make_pair(polys[i], polys[j]);
          out.degree = deg;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace tpairs
