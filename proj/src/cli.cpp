#include "tpairs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "tpairs/congruence.hpp"
#include "tpairs/extensions.hpp"
#include "tpairs/fixtures.hpp"
#include "tpairs/fractions.hpp"
#include "tpairs/growth.hpp"
#include "tpairs/hyper.hpp"
#include "tpairs/polypair.hpp"
#include "tpairs/predicates.hpp"
#include "tpairs/structure_file.hpp"

namespace tpairs {

namespace {

using json = nlohmann::json;

struct Options {
  std::string file;
  std::string builtin;
  std::optional<std::int64_t> window;
  unsigned degree = 3;
  std::optional<unsigned> kmax;
  std::string a0_choice = "contains_zero";
  bool json_compact = false;
  std::size_t max_size = 10;
  std::vector<std::string> seeds;
  std::string poly;
  std::string vars = "x";
  std::string domain = "tangible";
  std::string s;
  std::string fractions;
  std::string element;
  std::string base;
  std::string subgroup;
  std::optional<int> field;
  std::string a1, a2;
  std::optional<std::size_t> free_letters, poly_vars, matrix;
  std::string truncated;
  std::string generators;
  std::string zero_generators;
};

enum class Verdict { computed, holds, fails, not_found, unknown };

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::computed:
      return "computed";
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_found:
      return "not_found";
    case Verdict::unknown:
      return "unknown";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::computed:
    case Verdict::holds:
      return kExitOk;
    case Verdict::fails:
    case Verdict::not_found:
      return kExitFails;
    case Verdict::unknown:
      return kExitUnknown;
  }
  return kExitInput;
}

struct Outcome {
  Verdict verdict = Verdict::computed;
  json result = json::object();
  json bounds = json::object();
  std::string summary;
};

struct Input {
  std::string source;
  std::optional<StructureFile> file;
  PairPtr pair;
};

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Window window_of(const Options& o) { return o.window ? Window{*o.window} : default_window(); }

PairPtr builtin_pair(const std::string& name, Window w) {
  for (const auto& f : fixture_names()) {
    if (f == name) return fixture_pair(name);
  }
  if (name == "supertropical-z") return supertropical_pair(Domain::integers, w);
  if (name == "supertropical-n") return supertropical_pair(Domain::naturals, w);
  if (name == "natural") return natural_pair(w);
  if (name == "maxplus-z") return maxplus_pair(Domain::integers, w);
  if (name == "maxplus-n") return maxplus_pair(Domain::naturals, w);
  if (name == "rational") return rational_pair(w);
  std::string known;
  for (const auto& f : fixture_names()) known += f + ", ";
  throw ConfigError("unknown builtin '" + name + "' (known: " + known +
                    "supertropical-z, supertropical-n, natural, maxplus-z, maxplus-n, rational)");
}

Input load_input(const Options& o, bool validate) {
  Input in;
  if (!o.file.empty() && !o.builtin.empty()) throw ConfigError("give a structure file or --builtin, not both");
  if (!o.file.empty()) {
    in.file = load_structure(o.file, validate);
    in.source = o.file;
    in.pair = in.file->pair;
    return in;
  }
  if (!o.builtin.empty()) {
    const Window w = window_of(o);
    in.pair = builtin_pair(o.builtin, w);
    in.source = "builtin:" + o.builtin;
    return in;
  }
  throw ConfigError("no input: give a structure file or --builtin NAME");
}

const PairPtr& need_pair(const Input& in) {
  if (!in.pair) throw ConfigError(in.source + " defines no pair");
  return in.pair;
}

void note_window(Outcome& out, const SemiringPair& p) {
  if (!p.is_finite()) out.bounds["window"] = p.window().radius;
}

Elem parse_label(const SemiringPair& p, const std::string& text) { return p.carrier().parse_or_throw(text); }

std::vector<Elem> parse_labels(const SemiringPair& p, const std::string& text) {
  std::vector<Elem> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_label(p, t));
  return out;
}

json labels(const SemiringPair& p, const std::vector<Elem>& es) {
  json out = json::array();
  for (Elem e : es) out.push_back(p.format(e));
  return out;
}

json report_json(const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations()) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}, {"count", x.count}});
  json out{{"ok", r.ok()}, {"checked", r.checked()}, {"violations", v}};
  if (r.window()) out["window"] = *r.window();
  return out;
}

std::string first_violation(const AxiomReport& r) {
  if (r.ok()) return "ok";
  const auto& v = r.violations().front();
  std::string w;
  for (std::size_t i = 0; i < v.witness.size(); ++i) w += (i ? ", " : "") + v.witness[i];
  return "'" + v.axiom + "' fails at (" + w + ")";
}

json twist_json(const SemiringPair& p, const TwistElement& x) { return json::array({p.format(x.first), p.format(x.second)}); }

json blocks_json(const Congruence& c) {
  const auto& p = *c.pair();
  json out = json::array();
  for (const auto& b : c.blocks()) out.push_back(labels(p, b));
  return out;
}

// ---------------------------------------------------------------------------
// Structure commands

Outcome cmd_verify(const Options& o) {
  const Input in = load_input(o, false);
  Outcome out;
  bool ok = true;
  auto add = [&](const std::string& key, const AxiomReport& r) {
    out.result[key] = report_json(r);
    ok = ok && r.ok();
    if (!r.ok() && out.summary.empty()) out.summary = key + " " + first_violation(r);
  };
  if (in.file) {
    if (in.file->semiring) add("semiring", verify_semiring_axioms(*in.file->semiring));
    if (in.file->pair) add("pair", verify_admissible(*in.file->pair));
    if (in.file->hyper) add("hyper", verify_semihyperring(*in.file->hyper));
    if (in.file->module) {
      add("module", verify_module_pair(*in.file->module, !in.file->module->tangibles().empty()));
    }
  } else {
    const auto& p = *in.pair;
    if (const auto* f = p.finite()) {
      add("semiring", verify_semiring_axioms(*f));
    } else {
      add("semiring", verify_semiring_axioms(p.carrier(), p.window()));
    }
    add("pair", verify_admissible(p));
    note_window(out, p);
  }
  out.verdict = ok ? Verdict::holds : Verdict::fails;
  if (ok) out.summary = "all axioms hold";
  return out;
}

Outcome cmd_shallow(const Options& o) {
  const Input in = load_input(o, true);
  const auto& p = *need_pair(in);
  Outcome out;
  note_window(out, p);
  const bool shallow = is_shallow(p);
  out.result["shallow"] = shallow;
  json cex = nullptr;
  for (Elem e : p.elements()) {
    if (!p.in_t(e) && !p.in_a0(e)) {
      cex = p.format(e);
      break;
    }
  }
  out.result["counterexample"] = cex;
  if (shallow) out.result["strong_surpassing"] = report_json(verify_surpassing(p, true));
  out.verdict = shallow ? Verdict::holds : Verdict::fails;
  out.summary = shallow ? "shallow" : "not shallow: " + cex.get<std::string>() + " is neither tangible nor in A0";
  return out;
}

Outcome cmd_property_n(const Options& o) {
  const Input in = load_input(o, true);
  const auto& p = *need_pair(in);
  Outcome out;
  note_window(out, p);
  const auto st = property_n_status(p);
  auto& r = out.result;
  r["property_n"] = st.property_n;
  r["neg_compatible"] = st.neg_compatible;
  r["tangibly_separating"] = st.tangibly_separating;
  r["summary"] = st.summary();
  json partners = json::object();
  for (const auto& [a, ps] : st.partners) partners[p.format(a)] = labels(p, ps);
  r["partners"] = partners;
  r["missing"] = st.missing ? json(p.format(*st.missing)) : json(nullptr);
  r["ambiguous"] = st.ambiguous ? json(p.format(*st.ambiguous)) : json(nullptr);
  r["not_separated"] =
      st.not_separated ? json::array({p.format(st.not_separated->first), p.format(st.not_separated->second)}) : json(nullptr);
  out.verdict = st.property_n ? Verdict::holds : Verdict::fails;
  out.summary = "strongest property: " + st.summary();
  return out;
}

Outcome cmd_congruences(const Options& o) {
  const Input in = load_input(o, true);
  const auto& p = need_pair(in);
  Outcome out;
  out.bounds["max_size"] = o.max_size;
  const auto lattice = enumerate_congruences(p, o.max_size);
  json list = json::array();
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    const auto& c = lattice.elements[i];
    const auto cl = classify_congruence(c, lattice);
    list.push_back({{"index", i},
                    {"blocks", blocks_json(c)},
                    {"classes", c.class_count()},
                    {"prime", cl.prime},
                    {"semiprime", cl.semiprime},
                    {"irreducible", cl.irreducible}});
  }
  out.result["count"] = lattice.elements.size();
  out.result["congruences"] = list;
  out.summary = std::to_string(lattice.elements.size()) + " pair-congruences";
  return out;
}

json spectrum_json(const Spectrum& sp) {
  json primes = json::array();
  for (auto i : sp.primes) primes.push_back({{"index", i}, {"blocks", blocks_json(sp.lattice.elements[i])}});
  return {{"lattice_size", sp.lattice.elements.size()},
          {"primes", primes},
          {"krull_dimension", sp.krull_dimension < 0 ? json(nullptr) : json(sp.krull_dimension)},
          {"longest_chain", sp.longest_chain},
          {"semiprimes_are_prime_meets", sp.semiprimes_are_prime_meets},
          {"criteria_agree", sp.criteria_agree}};
}

Outcome cmd_spectrum(const Options& o) {
  const Input in = load_input(o, true);
  Outcome out;
  out.bounds["max_size"] = o.max_size;
  const auto sp = prime_spectrum_krull(need_pair(in), o.max_size);
  out.result = spectrum_json(sp);
  out.summary = std::to_string(sp.primes.size()) + " prime(s), Krull dimension " +
                (sp.krull_dimension < 0 ? std::string("undefined") : std::to_string(sp.krull_dimension));
  return out;
}

Outcome cmd_krull(const Options& o) {
  const Input in = load_input(o, true);
  Outcome out;
  out.bounds["max_size"] = o.max_size;
  const auto sp = prime_spectrum_krull(need_pair(in), o.max_size);
  json chain = json::array();
  for (auto i : sp.longest_chain) chain.push_back(blocks_json(sp.lattice.elements[i]));
  out.result["krull_dimension"] = sp.krull_dimension < 0 ? json(nullptr) : json(sp.krull_dimension);
  out.result["longest_chain"] = chain;
  out.result["prime_count"] = sp.primes.size();
  out.summary = "Krull dimension " +
                (sp.krull_dimension < 0 ? std::string("undefined (no primes)") : std::to_string(sp.krull_dimension));
  return out;
}

Outcome cmd_radical(const Options& o) {
  const Input in = load_input(o, true);
  const auto& pp = need_pair(in);
  const auto& p = *pp;
  Outcome out;
  std::vector<TwistElement> seeds;
  for (const auto& s : o.seeds) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw ConfigError("seed '" + s + "' is not of the form a:b");
    seeds.emplace_back(parse_label(p, parts[0]), parse_label(p, parts[1]));
  }
  const auto gen = generate_congruence(pp, seeds);
  if (!gen) {
    out.verdict = Verdict::fails;
    out.result["offending"] = twist_json(p, *gen.offending);
    out.summary = "the seeds force a tangible into A0";
    return out;
  }
  const auto& c = *gen.congruence;
  const auto r = radical(c);
  out.result["congruence"] = blocks_json(c);
  out.result["radical"] = blocks_json(r.congruence);
  out.result["set_was_congruence"] = r.set_was_congruence;
  out.result["contains_input"] = r.contains_input;
  out.result["semiprime"] = r.semiprime;
  out.result["offending"] = r.offending ? twist_json(p, *r.offending) : json(nullptr);
  // Meet of the primes above c, for comparison.
  const auto sp = prime_spectrum_krull(pp, o.max_size);
  std::optional<Congruence> meet;
  for (auto i : sp.primes) {
    const auto& q = sp.lattice.elements[i];
    if (!c.subset_of(q)) continue;
    meet = meet ? meet->meet(q) : q;
  }
  out.result["prime_meet"] = meet ? blocks_json(*meet) : json(nullptr);
  out.result["equals_prime_meet"] = meet && *meet == r.congruence;
  out.summary = "radical has " + std::to_string(r.congruence.class_count()) + " classes";
  return out;
}

Outcome cmd_polyroots(const Options& o) {
  const Input in = load_input(o, true);
  const auto& p = *need_pair(in);
  if (o.poly.empty()) throw ConfigError("polyroots needs --poly");
  Outcome out;
  note_window(out, p);
  const auto vars = split(o.vars, ',');
  const auto f = parse_polynomial(p.carrier(), o.poly, vars);
  if (o.domain != "tangible" && o.domain != "all") throw ConfigError("--domain is tangible or all");
  const auto& points = o.domain == "all" ? p.elements() : p.tangibles();
  out.bounds["domain"] = o.domain;
  const double size = std::pow(static_cast<double>(points.size()), static_cast<double>(vars.size()));
  out.bounds["domain_size"] = size;
  if (size > 2e6) throw BoundExceeded("domain of " + std::to_string(size) + " points exceeds 2000000");
  const auto roots = find_preceq_roots(p, f, cartesian_power(points, vars.size()));
  json rs = json::array();
  for (const auto& r : roots) rs.push_back(labels(p, r));
  out.result["polynomial"] = format_polynomial(p.carrier(), f, vars);
  out.result["variables"] = vars;
  out.result["roots"] = rs;
  out.verdict = roots.empty() ? Verdict::not_found : Verdict::computed;
  out.summary = std::to_string(roots.size()) + " root(s) of " + format_polynomial(p.carrier(), f, vars);
  return out;
}

// e = g1 ... gk for generators g_i, found by peeling one factor at a time.
bool in_generated_monoid(const Semiring& r, const std::vector<Elem>& gens, Elem e, int depth) {
  if (e == r.one()) return true;
  if (depth == 0) return false;
  for (Elem g : gens) {
    if (g == r.one()) continue;
    const auto q = r.solve_mul(g, e);
    if (q && *q != e && r.mul(g, *q) == e && in_generated_monoid(r, gens, *q, depth - 1)) return true;
  }
  return false;
}

Fraction parse_fraction(const SemiringPair& p, const std::string& text) {
  const auto slash = text.rfind('/');
  if (slash == std::string::npos) return {parse_label(p, text), p.carrier().one()};
  return {parse_label(p, text.substr(0, slash)), parse_label(p, text.substr(slash + 1))};
}

Outcome cmd_localize(const Options& o) {
  const Input in = load_input(o, true);
  const auto& pp = need_pair(in);
  const auto& p = *pp;
  if (o.s.empty()) throw ConfigError("localize needs --s");
  Outcome out;
  note_window(out, p);
  const auto s = parse_labels(p, o.s);
  FractionContext ctx;
  if (p.is_finite()) {
    ctx = make_fraction_context(pp, s);
  } else {
    // Symbolic S: the monoid generated by the given elements.
    const SemiringPtr r = p.carrier_ptr();
    ctx = make_fraction_context(pp, [r, s](Elem e) { return in_generated_monoid(*r, s, e, 64); }, s);
    out.bounds["s_sample"] = ctx.s_sample.size();
  }
  out.result["s_sample"] = labels(p, ctx.s_sample);
  const auto ore = check_ore(ctx);
  out.result["ore"] = std::string(to_string(ore.holds));
  out.result["central"] = ore.central;
  if (ore.first_failure) out.result["first_failure"] = json::array({p.format(ore.first_failure->first), p.format(ore.first_failure->second)});
  if (ore.second_failure) {
    const auto& [b1, b2, t] = *ore.second_failure;
    out.result["second_failure"] = json::array({p.format(b1), p.format(b2), p.format(t)});
  }
  if (p.is_finite() && ore.holds == Truth::yes) {
    const auto fp = build_fraction_pair(ctx);
    json reps = json::array();
    for (const auto& f : fp.representatives) reps.push_back(format_fraction(ctx, f));
    out.result["classes"] = fp.representatives.size();
    out.result["representatives"] = reps;
    out.result["tangibles_invertible"] = fp.tangibles_invertible;
  }
  if (!o.fractions.empty()) {
    const auto fs = split(o.fractions, ',');
    if (fs.size() != 2) throw ConfigError("--fractions takes two fractions b/s,b'/s'");
    const auto x = parse_fraction(p, fs[0]), y = parse_fraction(p, fs[1]);
    for (const auto& f : {x, y}) {
      if (!ctx.in_s(f.den)) throw ConfigError(p.format(f.den) + " is not in S");
    }
    out.result["sum"] = format_fraction(ctx, frac_add(ctx, x, y));
    out.result["product"] = format_fraction(ctx, frac_mul(ctx, x, y));
  }
  out.verdict = ore.holds == Truth::yes ? Verdict::holds : ore.holds == Truth::no ? Verdict::fails : Verdict::unknown;
  out.summary = std::string("left Ore condition: ") + std::string(to_string(ore.holds));
  return out;
}

Outcome cmd_classify_element(const Options& o) {
  const Input in = load_input(o, true);
  const auto& pp = need_pair(in);
  const auto& p = *pp;
  if (o.element.empty() || o.base.empty()) throw ConfigError("classify-element needs --element and --base");
  Outcome out;
  note_window(out, p);
  out.bounds["degree"] = o.degree;
  const auto e = subpair_extension(pp, parse_labels(p, o.base));
  const Elem y = parse_label(p, o.element);
  const auto& s = p.carrier();
  out.result["extension"] = report_json(verify_extension(e));
  auto relation_json = [&](const ElementRelation& r) {
    return json{{"found", std::string(to_string(r.found))},
                {"degree", r.degree},
                {"coefficients", labels(p, r.coefficients)},
                {"searched", r.searched}};
  };
  const auto integral = is_integral(e, y, o.degree);
  const auto algebraic = is_algebraic(e, y, o.degree);
  const auto cong = is_congruence_algebraic(e, y, o.degree);
  out.result["integral"] = relation_json(integral);
  out.result["algebraic"] = relation_json(algebraic);
  json c{{"algebraic", std::string(to_string(cong.algebraic))}, {"pairs_checked", cong.pairs_checked}};
  if (cong.certificate) {
    const auto& [f1, f2, b] = *cong.certificate;
    c["certificate"] = {{"f1", format_polynomial(s, f1, {"x"})}, {"f2", format_polynomial(s, f2, {"x"})}, {"b", p.format(b)}};
  }
  out.result["congruence_algebraic"] = c;
  const bool any = integral.found == Truth::yes || algebraic.found == Truth::yes || cong.algebraic == Truth::yes;
  out.verdict = any ? Verdict::computed : Verdict::unknown;
  out.summary = p.format(y) + ": integral " + std::string(to_string(integral.found)) + ", algebraic " +
                std::string(to_string(algebraic.found)) + ", congruence-algebraic " +
                std::string(to_string(cong.algebraic));
  return out;
}

// ---------------------------------------------------------------------------
// Growth

struct AlgebraChoice {
  MonomialAlgebra alg;
  std::optional<std::size_t> poly_vars;
};

AlgebraChoice algebra_of(const Options& o) {
  int chosen = (o.free_letters ? 1 : 0) + (o.poly_vars ? 1 : 0) + (o.matrix ? 1 : 0) + (o.truncated.empty() ? 0 : 1);
  if (chosen != 1) throw ConfigError("choose exactly one of --free-letters, --poly-vars, --matrix, --truncated");
  if (o.free_letters) return {free_monoid_algebra(*o.free_letters), std::nullopt};
  if (o.poly_vars) return {polynomial_algebra(*o.poly_vars), o.poly_vars};
  if (o.matrix) return {matrix_unit_algebra(*o.matrix), std::nullopt};
  const auto parts = split(o.truncated, ',');
  if (parts.size() != 2) throw ConfigError("--truncated takes t,n");
  return {truncated_polynomial_algebra(std::stoul(parts[0]), std::stoul(parts[1])), std::nullopt};
}

std::vector<Word> parse_words(const MonomialAlgebra& alg, const std::string& text) {
  std::vector<Word> out;
  for (const auto& w : split(text, ',')) {
    Word word;
    if (w != "1") {
      for (const auto& letter : split(w, '*')) {
        if (letter.size() < 2 || letter[0] != 'x') throw ConfigError("bad letter '" + letter + "' in generator '" + w + "'");
        std::size_t pos = 0;
        unsigned long i = 0;
        try {
          i = std::stoul(letter.substr(1), &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != letter.size() - 1 || i == 0 || i > alg.letters) {
          throw ConfigError("letter '" + letter + "' is not one of x1..x" + std::to_string(alg.letters));
        }
        word.push_back(static_cast<std::uint32_t>(i - 1));
      }
    }
    out.push_back(std::move(word));
  }
  return out;
}

GrowthProfile run_growth(const Options& o, const AlgebraChoice& a, unsigned k_max, Outcome& out) {
  std::vector<Word> gens;
  if (o.generators.empty()) {
    for (std::uint32_t i = 0; i < a.alg.letters; ++i) gens.push_back({i});
  } else {
    gens = parse_words(a.alg, o.generators);
  }
  const auto zero = parse_words(a.alg, o.zero_generators);
  out.bounds["k_max"] = k_max;
  json g = json::array();
  for (const auto& w : gens) g.push_back(format_word(w));
  json z = json::array();
  for (const auto& w : zero) z.push_back(format_word(w));
  out.result["algebra"] = a.alg.name;
  out.result["generators"] = g;
  out.result["zero_generators"] = z;
  return growth_sequence(a.alg, gens, zero, k_max);
}

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

Outcome cmd_growth(const Options& o) {
  Outcome out;
  const auto a = algebra_of(o);
  const auto g = run_growth(o, a, o.kmax.value_or(8), out);
  out.result["d"] = g.d;
  out.result["cumulative"] = g.cumulative;
  out.result["filtration_sizes"] = g.filtration_sizes;
  out.result["truncated"] = g.truncated;
  out.verdict = g.truncated ? Verdict::unknown : Verdict::computed;
  out.summary = "d = " + join_sizes(g.d);
  return out;
}

Outcome cmd_hilbert(const Options& o) {
  Outcome out;
  const auto a = algebra_of(o);
  const unsigned k = o.kmax.value_or(8);
  const auto g = run_growth(o, a, k, out);
  if (g.truncated) throw BoundExceeded("filtration exceeded the monomial bound before k = " + std::to_string(k));
  const auto h = hilbert_series(g, k);
  out.result["coefficients"] = h.coefficients;
  if (a.poly_vars && o.generators.empty() && o.zero_generators.empty()) {
    out.result["closed_form"] = polynomial_hilbert_coefficients(*a.poly_vars, k);
  }
  out.summary = "H(x) coefficients " + join_sizes(h.coefficients);
  return out;
}

Outcome cmd_gk(const Options& o) {
  Outcome out;
  const auto a = algebra_of(o);
  const auto g = run_growth(o, a, o.kmax.value_or(10), out);
  if (g.truncated) throw BoundExceeded("filtration exceeded the monomial bound");
  const auto est = gk_dimension(g);
  out.result["estimate"] = std::round(est.value * 1e6) / 1e6;
  out.result["divergent"] = est.divergent;
  out.result["cumulative"] = g.cumulative;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", est.value);
  out.summary = est.divergent ? std::string("growth looks exponential") : std::string("GK estimate ") + buf;
  return out;
}

Outcome cmd_ore_witness(const Options& o) {
  const Input in = load_input(o, true);
  const auto& p = *need_pair(in);
  if (o.a1.empty() || o.a2.empty()) throw ConfigError("ore-witness needs --a1 and --a2");
  Outcome out;
  note_window(out, p);
  out.bounds["degree"] = o.degree;
  const auto w = ore_witness(p, parse_label(p, o.a1), parse_label(p, o.a2), o.degree);
  const auto& s = p.carrier();
  out.result["found"] = std::string(to_string(w.found));
  out.result["searched"] = w.searched;
  if (w.found == Truth::yes) {
    const std::vector<std::string> vars{"x1", "x2"};
    out.result["b1"] = p.format(w.b1);
    out.result["b2"] = p.format(w.b2);
    out.result["degree"] = w.degree;
    out.result["g"] = format_polynomial(s, w.gh->first, vars);
    out.result["h"] = format_polynomial(s, w.gh->second, vars);
    const Elem v = s.add(s.mul(w.b1, parse_label(p, o.a1)), s.mul(w.b2, parse_label(p, o.a2)));
    out.result["value"] = p.format(v);
    out.result["value_in_a0"] = p.in_a0(v);
    out.summary = "b1 = " + p.format(w.b1) + ", b2 = " + p.format(w.b2) + " give " + p.format(v);
  } else {
    out.summary = "no witness up to degree " + std::to_string(o.degree);
  }
  out.verdict = w.found == Truth::yes ? Verdict::computed : Verdict::unknown;
  return out;
}

// ---------------------------------------------------------------------------
// Hyperstructures

json hyper_json(const SemiHyperring& h) {
  const std::size_t n = h.size();
  json add = json::array();
  json mul = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json ra = json::array(), rm = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      ra.push_back(h.format(h.sum(static_cast<Elem>(a), static_cast<Elem>(b))));
      rm.push_back(h.labels[static_cast<std::size_t>(h.prod(static_cast<Elem>(a), static_cast<Elem>(b)))]);
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  return {{"name", h.name}, {"elements", h.labels}, {"add", add}, {"mul", mul}};
}

std::optional<HyperQuotient> field_quotient(const Options& o, FiniteSemiringPtr& ring) {
  if (o.field) {
    ring = integers_mod(*o.field);
  } else if (!o.file.empty()) {
    const auto f = load_structure(o.file, true);
    if (!f.semiring) return std::nullopt;
    ring = f.semiring;
  } else {
    return std::nullopt;
  }
  if (o.subgroup.empty()) throw ConfigError("a quotient needs --subgroup");
  std::vector<Elem> g;
  for (const auto& t : split(o.subgroup, ',')) g.push_back(ring->parse_or_throw(t));
  return krasner_quotient(*ring, g);
}

Outcome cmd_krasner(const Options& o) {
  Outcome out;
  FiniteSemiringPtr ring;
  const auto q = field_quotient(o, ring);
  if (!q) throw ConfigError("krasner needs --field P or a structure file with a [semiring] section");
  const auto r = verify_semihyperring(q->ring);
  json proj = json::object();
  for (std::size_t i = 0; i < q->projection.size(); ++i) {
    proj[ring->format(static_cast<Elem>(i))] = q->ring.labels[static_cast<std::size_t>(q->projection[i])];
  }
  out.result["quotient"] = hyper_json(q->ring);
  out.result["projection"] = proj;
  out.result["axioms"] = report_json(r);
  out.result["structure"] = serialize_structure(structure_of(q->ring));
  out.verdict = r.ok() ? Verdict::holds : Verdict::fails;
  out.summary = std::to_string(q->ring.size()) + "-element quotient, axioms " + (r.ok() ? "hold" : first_violation(r));
  return out;
}

Outcome cmd_powerset(const Options& o) {
  Outcome out;
  std::optional<SemiHyperring> h;
  FiniteSemiringPtr ring;
  if (o.builtin == "krasner") {
    h = krasner_hyperfield();
  } else if (!o.builtin.empty()) {
    throw ConfigError("powerset takes --builtin krasner, --field P --subgroup G, or a file with [hyper]");
  } else if (!o.file.empty()) {
    const auto f = load_structure(o.file, true);
    if (f.hyper) {
      h = f.hyper;
    } else if (auto q = field_quotient(o, ring)) {
      h = q->ring;
    }
  } else if (auto q = field_quotient(o, ring)) {
    h = q->ring;
  }
  if (!h) throw ConfigError("powerset needs a hyperring");
  const auto choice = parse_a0_choice(o.a0_choice);
  const auto p = powerset_pair(*h, choice);
  const auto r = verify_admissible(*p);
  out.result["a0_choice"] = to_string(choice);
  out.result["elements"] = labels(*p, p->elements());
  out.result["a0"] = labels(*p, p->a0_elements());
  out.result["tangibles"] = labels(*p, p->tangibles());
  out.result["admissible"] = report_json(r);
  out.result["structure"] = serialize_structure(structure_of(p));
  out.verdict = r.ok() ? Verdict::holds : Verdict::fails;
  out.summary = std::to_string(p->elements().size()) + " subsets, admissible " + (r.ok() ? "yes" : first_violation(r));
  return out;
}

// ---------------------------------------------------------------------------

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "Structure file");
  sub->add_option("--builtin", o.builtin, "Built-in pair instead of a file");
  sub->add_option("--window", o.window, "Sampling radius for symbolic carriers");
}

void emit(std::ostream& os, const json& j, bool compact) { os << (compact ? j.dump() : j.dump(2)) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Semiring pairs toolkit", "tpairs"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_compact, "Single-line JSON on stdout");

  std::map<std::string, std::function<Outcome(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& desc, std::function<Outcome(const Options&)> fn) {
    handlers[name] = std::move(fn);
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_flag("--json", o.json_compact, "Single-line JSON on stdout");
    return s;
  };

  auto* verify = sub("verify", "Check every axiom of the structures in a file", cmd_verify);
  add_input(verify, o);
  auto* shallow = sub("shallow", "Is A = T u A0", cmd_shallow);
  add_input(shallow, o);
  auto* pn = sub("property-n", "Property N, neg-compatibility, tangible separation", cmd_property_n);
  add_input(pn, o);
  for (auto* s : {sub("congruences", "Enumerate pair-congruences", cmd_congruences),
                  sub("spectrum", "Prime congruences and Krull dimension", cmd_spectrum),
                  sub("krull", "Krull dimension of the congruence spectrum", cmd_krull)}) {
    add_input(s, o);
    s->add_option("--max-size", o.max_size, "Largest carrier to enumerate");
  }
  auto* rad = sub("radical", "Radical of the congruence generated by seeds", cmd_radical);
  add_input(rad, o);
  rad->add_option("--seed", o.seeds, "Generating pair a:b (repeatable)");
  rad->add_option("--max-size", o.max_size, "Largest carrier to enumerate");
  auto* roots = sub("polyroots", "Points where 0 is surpassed by f", cmd_polyroots);
  add_input(roots, o);
  roots->add_option("--poly", o.poly, "Polynomial, e.g. \"x^2 + 1*x + 4\"");
  roots->add_option("--vars", o.vars, "Comma-separated variable names");
  roots->add_option("--domain", o.domain, "Search tangible points (default) or all points");
  auto* loc = sub("localize", "Ore condition and left fractions", cmd_localize);
  add_input(loc, o);
  loc->add_option("--s", o.s, "S as comma-separated labels (generators on symbolic carriers)");
  loc->add_option("--fractions", o.fractions, "Two fractions b/s,b'/s' to add and multiply");
  auto* ce = sub("classify-element", "Integral, algebraic and congruence-algebraic tests", cmd_classify_element);
  add_input(ce, o);
  ce->add_option("--element", o.element, "Element of W");
  ce->add_option("--base", o.base, "Comma-separated elements of the subpair");
  ce->add_option("--degree", o.degree, "Degree bound");
  for (auto* s : {sub("growth", "Ranks d_k of the filtration", cmd_growth),
                  sub("hilbert", "Hilbert series coefficients", cmd_hilbert),
                  sub("gk", "Gelfand-Kirillov dimension estimate", cmd_gk)}) {
    s->add_option("--free-letters", o.free_letters, "Free monoid on t letters");
    s->add_option("--poly-vars", o.poly_vars, "Commutative polynomials in t variables");
    s->add_option("--matrix", o.matrix, "n x n matrix units");
    s->add_option("--truncated", o.truncated, "t,n: polynomials in t variables modulo degree n");
    s->add_option("--generators", o.generators, "Comma-separated words such as x1,x1*x2 (default: the letters)");
    s->add_option("--zero-generators", o.zero_generators, "Generators of the A0 part");
    s->add_option("--kmax", o.kmax, "Largest filtration level");
  }
  auto* ore = sub("ore-witness", "b1, b2 outside A0 with b1 a1 + b2 a2 in A0", cmd_ore_witness);
  add_input(ore, o);
  ore->add_option("--a1", o.a1, "First tangible");
  ore->add_option("--a2", o.a2, "Second tangible");
  ore->add_option("--degree", o.degree, "Degree bound");
  auto* kr = sub("krasner", "Quotient R/G as a semi-hyperring", cmd_krasner);
  kr->add_option("file", o.file, "Structure file with a [semiring] section");
  kr->add_option("--field", o.field, "Use Z/P");
  kr->add_option("--subgroup", o.subgroup, "Comma-separated subgroup elements");
  auto* ps = sub("powerset", "Power-set pair of a semi-hyperring", cmd_powerset);
  ps->add_option("file", o.file, "Structure file with [hyper] or [semiring]");
  ps->add_option("--builtin", o.builtin, "krasner");
  ps->add_option("--field", o.field, "Use a quotient of Z/P");
  ps->add_option("--subgroup", o.subgroup, "Comma-separated subgroup elements");
  ps->add_option("--a0-choice", o.a0_choice, "contains_zero or size_ge_two");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && !handlers.count(args.front())) {
    err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
    return kExitInput;
  }
  std::vector<const char*> argv{"tpairs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report{{"command", command}, {"arguments", args}};
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string summary;
  try {
    const Outcome oc = handlers.at(command)(o);
    report["verdict"] = to_string(oc.verdict);
    report["result"] = oc.result;
    report["bounds"] = oc.bounds;
    code = exit_code(oc.verdict);
    summary = to_string(oc.verdict) + ": " + oc.summary;
  } catch (const StructureFileError& e) {
    report["verdict"] = "input_error";
    report["error"] = {{"kind", to_string(e.kind())}, {"line", e.line()}, {"column", e.column()}, {"message", e.detail()}};
    code = kExitInput;
    summary = std::string("input error: ") + e.what();
  } catch (const BoundExceeded& e) {
    report["verdict"] = "unknown";
    report["error"] = {{"kind", "bound"}, {"message", e.what()}};
    code = kExitUnknown;
    summary = std::string("bound exhausted: ") + e.what();
  } catch (const std::exception& e) {
    report["verdict"] = "input_error";
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    code = kExitInput;
    summary = std::string("input error: ") + e.what();
  }
  if (!o.file.empty() || !o.builtin.empty()) {
    json input{{"source", o.file.empty() ? "builtin:" + o.builtin : o.file}};
    try {
      if (!o.file.empty()) {
        input["digest"] = hex(fnv1a(serialize_structure(load_structure(o.file, false))));
      } else if (o.builtin != "krasner") {
        const auto p = builtin_pair(o.builtin, window_of(o));
        input["digest"] = p->is_finite() ? hex(fnv1a(serialize_structure(structure_of(p))))
                                         : hex(fnv1a("builtin:" + o.builtin + ";window=" + std::to_string(p->window().radius)));
      }
    } catch (const std::exception&) {
      input["digest"] = nullptr;
    }
    report["input"] = input;
  }
  emit(out, report, o.json_compact);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  err << command << " " << summary << " (" << buf << " ms)\n";
  return code;
}

}  // namespace tpairs
