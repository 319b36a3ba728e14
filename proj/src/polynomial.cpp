#include "tpairs/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "tpairs/errors.hpp"

namespace tpairs {

unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(const Semiring& s, Elem c, std::size_t nvars) {
  Polynomial p(nvars);
  p.add_term(s, Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Semiring& s, Elem c, Exponent e) {
  Polynomial p(e.size());
  p.add_term(s, e, c);
  return p;
}

Polynomial Polynomial::variable_power(const Semiring& s, Elem c, std::size_t nvars, std::size_t i,
                                      std::uint32_t k) {
  Exponent e(nvars, 0);
  e.at(i) = k;
  return monomial(s, c, std::move(e));
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0u : total_degree(terms_.rbegin()->first);
}

Elem Polynomial::coeff(const Semiring& s, const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? s.zero() : it->second;
}

void Polynomial::add_term(const Semiring& s, const Exponent& e, Elem c) {
  if (e.size() != nvars_) throw PreconditionError("exponent length does not match variable count");
  auto it = terms_.find(e);
  const Elem value = it == terms_.end() ? c : s.add(it->second, c);
  if (value == s.zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(e, value);
  } else {
    it->second = value;
  }
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return MonomialOrder{}(x.first, y.first);
        return x.second < y.second;
      });
}

Polynomial poly_add(const Semiring& s, const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw PreconditionError("variable counts differ");
  Polynomial r = f;
  for (const auto& [e, c] : g.terms()) r.add_term(s, e, c);
  return r;
}

Polynomial poly_mul(const Semiring& s, const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw PreconditionError("variable counts differ");
  Polynomial r(f.nvars());
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      Exponent e(ef.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      r.add_term(s, e, s.mul(cf, cg));
    }
  }
  return r;
}

Polynomial poly_scale(const Semiring& s, Elem c, const Polynomial& f) {
  Polynomial r(f.nvars());
  for (const auto& [e, cf] : f.terms()) r.add_term(s, e, s.mul(c, cf));
  return r;
}

Elem poly_eval(const Semiring& s, const Polynomial& f, std::span<const Elem> point) {
  if (point.size() != f.nvars()) throw PreconditionError("point length does not match variable count");
  Elem acc = s.zero();
  for (const auto& [e, c] : f.terms()) {
    Elem term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term = s.mul(term, s.pow(point[i], e[i]));
    acc = s.add(acc, term);
  }
  return acc;
}

Polynomial poly_compose(const Semiring& s, const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != 1) throw PreconditionError("composition needs a univariate outer polynomial");
  Polynomial r(g.nvars());
  for (const auto& [e, c] : f.terms()) {
    Polynomial power = Polynomial::constant(s, s.one(), g.nvars());
    for (std::uint32_t k = 0; k < e[0]; ++k) power = poly_mul(s, power, g);
    r = poly_add(s, r, poly_scale(s, c, power));
  }
  return r;
}

bool functionally_equal(const Semiring& s, const Polynomial& f, const Polynomial& g,
                        const std::vector<std::vector<Elem>>& domain) {
  return std::all_of(domain.begin(), domain.end(), [&](const std::vector<Elem>& pt) {
    return poly_eval(s, f, pt) == poly_eval(s, g, pt);
  });
}

std::vector<std::vector<Elem>> cartesian_power(const std::vector<Elem>& values, std::size_t m) {
  std::vector<std::vector<Elem>> out{{}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::vector<Elem>> next;
    next.reserve(out.size() * values.size());
    for (const auto& prefix : out) {
      for (Elem v : values) {
        auto t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::string> default_variables(std::size_t m) {
  if (m == 1) return {"x"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::string format_polynomial(const Semiring& s, const Polynomial& f,
                              const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) throw PreconditionError("variable name count mismatch");
  if (f.is_zero()) return s.format(s.zero());
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::vector<std::string> factors;
    const bool constant_term = total_degree(e) == 0;
    if (constant_term || c != s.one()) factors.push_back(s.format(c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
    }
    if (!out.empty()) out += " + ";
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

std::vector<std::string_view> split_top(std::string_view text, char sep) {
  // Separators inside parentheses belong to element labels such as "(1,0)".
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' || text[i] == '[' || text[i] == '{') ++depth;
    if (text[i] == ')' || text[i] == ']' || text[i] == '}') --depth;
    if (text[i] == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

Polynomial parse_polynomial(const Semiring& s, std::string_view text,
                            const std::vector<std::string>& vars) {
  Polynomial f(vars.size());
  if (trim(text).empty()) throw ConfigError("empty polynomial");
  for (auto term_text : split_top(text, '+')) {
    term_text = trim(term_text);
    if (term_text.empty()) throw ConfigError("empty term in polynomial '" + std::string(text) + "'");
    Elem coeff = s.one();
    Exponent e(vars.size(), 0);
    for (auto factor : split_top(term_text, '*')) {
      factor = trim(factor);
      std::string_view base = factor;
      std::uint32_t power = 1;
      if (auto caret = factor.find('^'); caret != std::string_view::npos) {
        base = trim(factor.substr(0, caret));
        auto digits = trim(factor.substr(caret + 1));
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
          throw ConfigError("bad exponent in '" + std::string(factor) + "'");
        }
      }
      auto var = std::find(vars.begin(), vars.end(), base);
      if (var != vars.end()) {
        e[static_cast<std::size_t>(var - vars.begin())] += power;
        continue;
      }
      if (power != 1 && factor.find('^') != std::string_view::npos) {
        throw ConfigError("unknown variable '" + std::string(base) + "'");
      }
      auto c = s.parse(factor);
      if (!c) throw ConfigError("'" + std::string(factor) + "' is neither a variable nor an element of " + s.name());
      coeff = s.mul(coeff, *c);
    }
    f.add_term(s, e, coeff);
  }
  return f;
}

}  // namespace tpairs
