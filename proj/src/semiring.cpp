#include "tpairs/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tpairs/errors.hpp"

namespace tpairs {

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  if (text.empty()) return std::nullopt;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return r;
}

std::vector<Elem> flatten(const FiniteSemiring::Table& t, std::size_t n, const char* what) {
  if (t.size() != n) {
    throw StructureError(std::string(what) + " table has " + std::to_string(t.size()) +
                         " rows, expected " + std::to_string(n));
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n) {
      throw StructureError(std::string(what) + " table row " + std::to_string(r) + " has " +
                           std::to_string(t[r].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (Elem e : t[r]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) {
        throw StructureError(std::string(what) + " table entry " + std::to_string(e) +
                             " out of range in row " + std::to_string(r));
      }
      flat.push_back(e);
    }
  }
  return flat;
}

}  // namespace

Window default_window() {
  if (const char* env = std::getenv("TPAIRS_WINDOW")) {
    if (auto v = parse_int(env); v && *v > 0) return Window{*v};
  }
  return Window{};
}

std::optional<Elem> Semiring::solve_mul(Elem, Elem) const { return std::nullopt; }

Elem Semiring::pow(Elem base, unsigned exponent) const {
  Elem result = one();
  for (unsigned i = 0; i < exponent; ++i) result = mul(result, base);
  return result;
}

Elem Semiring::sum(std::span<const Elem> terms) const {
  Elem acc = zero();
  for (Elem t : terms) acc = add(acc, t);
  return acc;
}

std::vector<std::string> Semiring::format_all(std::span<const Elem> es) const {
  std::vector<std::string> out;
  out.reserve(es.size());
  for (Elem e : es) out.push_back(format(e));
  return out;
}

Elem Semiring::parse_or_throw(std::string_view text) const {
  if (auto e = parse(text)) return *e;
  throw ConfigError("'" + std::string(text) + "' is not an element of " + name());
}

// ---------------------------------------------------------------------------

FiniteSemiring::FiniteSemiring(std::string name, std::vector<std::string> labels,
                               const Table& add, const Table& mul, Elem zero, Elem one)
    : name_(std::move(name)), labels_(std::move(labels)), size_(labels_.size()) {
  if (size_ == 0) throw StructureError("semiring '" + name_ + "' has no elements");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw StructureError("duplicate element label '" + *dup + "'");
  }
  add_ = flatten(add, size_, "add");
  mul_ = flatten(mul, size_, "mul");
  const auto in_range = [&](Elem e) { return e >= 0 && static_cast<std::size_t>(e) < size_; };
  if (!in_range(zero) || !in_range(one)) {
    throw StructureError("zero/one index out of range");
  }
  zero_ = zero;
  one_ = one;
  commutative_ = true;
  for (std::size_t a = 0; a < size_ && commutative_; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (mul_[a * size_ + b] != mul_[b * size_ + a]) {
        commutative_ = false;
        break;
      }
    }
  }
}

FiniteSemiring FiniteSemiring::tabulate(std::string name, std::vector<std::string> labels,
                                        const std::function<Elem(Elem, Elem)>& add,
                                        const std::function<Elem(Elem, Elem)>& mul, Elem zero,
                                        Elem one) {
  const auto n = static_cast<Elem>(labels.size());
  Table at(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  Table mt = at;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      at[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = add(a, b);
      mt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = mul(a, b);
    }
  }
  return FiniteSemiring(std::move(name), std::move(labels), at, mt, zero, one);
}

std::vector<Elem> FiniteSemiring::elements(Window) const {
  std::vector<Elem> out(size_);
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

std::string FiniteSemiring::format(Elem e) const { return label(e); }

const std::string& FiniteSemiring::label(Elem e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= size_) {
    throw StructureError("element index " + std::to_string(e) + " out of range for " + name_);
  }
  return labels_[static_cast<std::size_t>(e)];
}

std::optional<Elem> FiniteSemiring::parse(std::string_view text) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (labels_[i] == text) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

std::optional<Elem> FiniteSemiring::solve_mul(Elem x, Elem y) const {
  for (std::size_t g = 0; g < size_; ++g) {
    if (mul(x, static_cast<Elem>(g)) == y) return static_cast<Elem>(g);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string MaxPlusSemiring::name() const {
  return domain_ == Domain::integers ? "zmax_symbolic" : "nmax_symbolic";
}

Elem MaxPlusSemiring::add(Elem a, Elem b) const { return std::max(a, b); }

Elem MaxPlusSemiring::mul(Elem a, Elem b) const {
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return checked_add(a, b);
}

std::vector<Elem> MaxPlusSemiring::elements(Window w) const {
  std::vector<Elem> out{kNegInf};
  for (std::int64_t v = domain_ == Domain::integers ? -w.radius : 0; v <= w.radius; ++v) {
    out.push_back(v);
  }
  return out;
}

std::string MaxPlusSemiring::format(Elem e) const {
  return e == kNegInf ? std::string("-inf") : std::to_string(e);
}

std::optional<Elem> MaxPlusSemiring::parse(std::string_view text) const {
  if (text == "-inf") return kNegInf;
  auto v = parse_int(text);
  if (!v || *v == kNegInf) return std::nullopt;
  if (domain_ == Domain::naturals && *v < 0) return std::nullopt;
  return *v;
}

std::optional<Elem> MaxPlusSemiring::solve_mul(Elem x, Elem y) const {
  if (x == kNegInf) return y == kNegInf ? std::optional<Elem>(kNegInf) : std::nullopt;
  if (y == kNegInf) return kNegInf;
  const Elem g = y - x;
  if (domain_ == Domain::naturals && g < 0) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------

Elem NaturalSemiring::add(Elem a, Elem b) const { return checked_add(a, b); }
Elem NaturalSemiring::mul(Elem a, Elem b) const { return checked_mul(a, b); }

std::vector<Elem> NaturalSemiring::elements(Window w) const {
  std::vector<Elem> out;
  for (std::int64_t v = 0; v <= w.radius; ++v) out.push_back(v);
  return out;
}

std::string NaturalSemiring::format(Elem e) const { return std::to_string(e); }

std::optional<Elem> NaturalSemiring::parse(std::string_view text) const {
  auto v = parse_int(text);
  if (!v || *v < 0) return std::nullopt;
  return *v;
}

std::optional<Elem> NaturalSemiring::solve_mul(Elem x, Elem y) const {
  if (x == 0) return y == 0 ? std::optional<Elem>(0) : std::nullopt;
  if (y % x != 0) return std::nullopt;
  return y / x;
}

// ---------------------------------------------------------------------------

Elem RationalSemiring::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::domain_error("nonnegative rational needs num >= 0, den > 0");
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num == 0) den = 1;
  if (num >= (1LL << 31) || den >= (1LL << 31)) {
    throw std::overflow_error("rational component exceeds 31 bits");
  }
  return (num << 32) | den;
}

Elem RationalSemiring::add(Elem a, Elem b) const {
  const auto na = numerator(a), da = denominator(a), nb = numerator(b), db = denominator(b);
  return make(checked_add(checked_mul(na, db), checked_mul(nb, da)), checked_mul(da, db));
}

Elem RationalSemiring::mul(Elem a, Elem b) const {
  return make(checked_mul(numerator(a), numerator(b)), checked_mul(denominator(a), denominator(b)));
}

std::vector<Elem> RationalSemiring::elements(Window w) const {
  std::vector<Elem> out;
  const std::int64_t max_den = std::min<std::int64_t>(w.radius, 12);
  for (std::int64_t p = 0; p <= w.radius; ++p) {
    for (std::int64_t q = 1; q <= std::max<std::int64_t>(1, max_den); ++q) out.push_back(make(p, q));
  }
  std::sort(out.begin(), out.end(), [](Elem a, Elem b) {
    const auto lhs = numerator(a) * denominator(b), rhs = numerator(b) * denominator(a);
    return lhs != rhs ? lhs < rhs : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string RationalSemiring::format(Elem e) const {
  if (denominator(e) == 1) return std::to_string(numerator(e));
  return std::to_string(numerator(e)) + "/" + std::to_string(denominator(e));
}

std::optional<Elem> RationalSemiring::parse(std::string_view text) const {
  const auto slash = text.find('/');
  auto num = parse_int(text.substr(0, slash));
  std::optional<std::int64_t> den = std::int64_t{1};
  if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1));
  if (!num || !den || *num < 0 || *den <= 0) return std::nullopt;
  try {
    return make(*num, *den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<Elem> RationalSemiring::solve_mul(Elem x, Elem y) const {
  if (numerator(x) == 0) return numerator(y) == 0 ? std::optional<Elem>(zero()) : std::nullopt;
  return mul(y, make(denominator(x), numerator(x)));
}

// ---------------------------------------------------------------------------

std::optional<Elem> SupertropicalSemiring::solve_mul(Elem x, Elem y) const {
  if (x == kZero) return y == kZero ? std::optional<Elem>(kZero) : std::nullopt;
  if (y == kZero) return kZero;
  const std::int64_t d = level(y) - level(x);
  if (domain_ == Domain::naturals && d < 0) return std::nullopt;
  if (is_tangible(y)) {
    if (is_ghost(x)) return std::nullopt;
    return tangible(d);
  }
  return is_ghost(x) ? tangible(d) : ghost(d);
}

std::string SupertropicalSemiring::name() const {
  return domain_ == Domain::integers ? "supertropical_z" : "supertropical_n";
}

Elem SupertropicalSemiring::add(Elem a, Elem b) const {
  if (a == kZero) return b;
  if (b == kZero) return a;
  const auto la = level(a), lb = level(b);
  if (la > lb) return a;
  if (lb > la) return b;
  return ghost(la);
}

Elem SupertropicalSemiring::mul(Elem a, Elem b) const {
  if (a == kZero || b == kZero) return kZero;
  const std::int64_t l = checked_add(level(a), level(b));
  if (l > (INT64_MAX >> 2) || l < -(INT64_MAX >> 2)) throw std::overflow_error("level overflow");
  return (is_ghost(a) || is_ghost(b)) ? ghost(l) : tangible(l);
}

std::vector<Elem> SupertropicalSemiring::elements(Window w) const {
  std::vector<Elem> out{kZero};
  for (std::int64_t v = domain_ == Domain::integers ? -w.radius : 0; v <= w.radius; ++v) {
    out.push_back(tangible(v));
    out.push_back(ghost(v));
  }
  return out;
}

std::string SupertropicalSemiring::format(Elem e) const {
  if (e == kZero) return "-inf";
  return std::to_string(level(e)) + (is_ghost(e) ? "v" : "");
}

std::optional<Elem> SupertropicalSemiring::parse(std::string_view text) const {
  if (text == "-inf") return kZero;
  bool g = false;
  if (!text.empty() && text.back() == 'v') {
    g = true;
    text.remove_suffix(1);
  }
  auto v = parse_int(text);
  if (!v) return std::nullopt;
  if (domain_ == Domain::naturals && *v < 0) return std::nullopt;
  if (*v > (INT64_MAX >> 2) || *v < -(INT64_MAX >> 2)) return std::nullopt;
  return g ? ghost(*v) : tangible(*v);
}

// ---------------------------------------------------------------------------

namespace {

template <class Add, class Mul, class Fmt>
void check_triple(AxiomReport& r, Elem a, Elem b, Elem c, Elem zero, Elem one, const Add& add,
                  const Mul& mul, const Fmt& fmt) {
  if (add(add(a, b), c) != add(a, add(b, c))) r.record("additive associativity", {fmt(a), fmt(b), fmt(c)});
  if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
    r.record("multiplicative associativity", {fmt(a), fmt(b), fmt(c)});
  }
  if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
    r.record("left distributivity", {fmt(a), fmt(b), fmt(c)});
  }
  if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
    r.record("right distributivity", {fmt(a), fmt(b), fmt(c)});
  }
  (void)zero;
  (void)one;
}

template <class Add, class Mul, class Fmt>
void check_pair(AxiomReport& r, Elem a, Elem b, const Add& add, const Fmt& fmt) {
  if (add(a, b) != add(b, a)) r.record("additive commutativity", {fmt(a), fmt(b)});
  (void)sizeof(Mul*);
}

template <class Add, class Mul, class Fmt>
void check_single(AxiomReport& r, Elem a, Elem zero, Elem one, const Add& add, const Mul& mul,
                  const Fmt& fmt) {
  if (add(a, zero) != a || add(zero, a) != a) r.record("additive identity", {fmt(a)});
  if (mul(a, one) != a || mul(one, a) != a) r.record("multiplicative identity", {fmt(a)});
  if (mul(zero, a) != zero || mul(a, zero) != zero) r.record("zero absorption", {fmt(a), fmt(zero)});
}

}  // namespace

AxiomReport verify_semiring_axioms(const FiniteSemiring& s) {
  AxiomReport report("semiring " + s.name());
  const auto n = static_cast<Elem>(s.size());
  const auto add = [&](Elem a, Elem b) { return s.add(a, b); };
  const auto mul = [&](Elem a, Elem b) { return s.mul(a, b); };
  const auto fmt = [&](Elem e) { return s.label(e); };
  for (Elem a = 0; a < n; ++a) check_single(report, a, s.zero(), s.one(), add, mul, fmt);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) check_pair<decltype(add), decltype(mul)>(report, a, b, add, fmt);
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) check_triple(report, a, b, c, s.zero(), s.one(), add, mul, fmt);
    }
  }
  report.count_checks(static_cast<std::size_t>(n * n * n));
  return report;
}

AxiomReport verify_semiring_axioms(const Semiring& s, Window w, std::size_t max_triples) {
  if (const auto* f = dynamic_cast<const FiniteSemiring*>(&s)) return verify_semiring_axioms(*f);
  AxiomReport report("semiring " + s.name() + " (windowed)");
  report.set_window(w.radius);
  const auto add = [&](Elem a, Elem b) { return s.add(a, b); };
  const auto mul = [&](Elem a, Elem b) { return s.mul(a, b); };
  const auto fmt = [&](Elem e) { return s.format(e); };
  const auto elems = s.elements(w);
  const std::size_t n = elems.size();
  for (Elem a : elems) check_single(report, a, s.zero(), s.one(), add, mul, fmt);
  for (Elem a : elems) {
    for (Elem b : elems) check_pair<decltype(add), decltype(mul)>(report, a, b, add, fmt);
  }
  if (n * n * n <= max_triples) {
    for (Elem a : elems) {
      for (Elem b : elems) {
        for (Elem c : elems) check_triple(report, a, b, c, s.zero(), s.one(), add, mul, fmt);
      }
    }
    report.count_checks(n * n * n);
  } else {
    std::mt19937_64 rng(0x7061697273ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < max_triples; ++i) {
      check_triple(report, elems[pick(rng)], elems[pick(rng)], elems[pick(rng)], s.zero(), s.one(),
                   add, mul, fmt);
    }
    report.count_checks(max_triples);
  }
  return report;
}

// ---------------------------------------------------------------------------

NamedSemiring parse_named(std::string_view text) {
  if (text == "boolean") return {NamedKind::boolean, 0};
  if (text == "zmax_symbolic" || text == "zmax") return {NamedKind::zmax_symbolic, 0};
  if (text == "nat_plus_times" || text == "nat") return {NamedKind::nat_plus_times, 0};
  constexpr std::string_view prefix = "nmax_trunc(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (auto n = parse_int(inner)) return {NamedKind::nmax_trunc, static_cast<int>(*n)};
  }
  throw ConfigError("unknown named semiring '" + std::string(text) + "'");
}

SemiringPtr build_named(const NamedSemiring& named) {
  switch (named.kind) {
    case NamedKind::boolean:
      return boolean_semiring();
    case NamedKind::nmax_trunc:
      if (named.n < 1) throw ConfigError("nmax_trunc needs n >= 1");
      return truncated_nmax(named.n);
    case NamedKind::zmax_symbolic:
      return std::make_shared<MaxPlusSemiring>(Domain::integers);
    case NamedKind::nat_plus_times:
      return std::make_shared<NaturalSemiring>();
  }
  throw ConfigError("unknown named semiring");
}

FiniteSemiringPtr boolean_semiring() {
  return std::make_shared<FiniteSemiring>(FiniteSemiring(
      "boolean", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1));
}

FiniteSemiringPtr truncated_nmax(int n) {
  if (n < 1) throw ConfigError("nmax_trunc needs n >= 1");
  // index 0 is -inf, index i + 1 is the integer i
  std::vector<std::string> labels{"-inf"};
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  const auto add = [](Elem a, Elem b) { return std::max(a, b); };
  const auto mul = [n](Elem a, Elem b) -> Elem {
    if (a == 0 || b == 0) return 0;
    return std::min<Elem>((a - 1) + (b - 1), n) + 1;
  };
  return std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "nmax_trunc(" + std::to_string(n) + ")", std::move(labels), add, mul, 0, 1));
}

FiniteSemiringPtr integers_mod(int n) {
  if (n < 2) throw ConfigError("Z/nZ needs n >= 2");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "Z/" + std::to_string(n), std::move(labels), [n](Elem a, Elem b) { return (a + b) % n; },
      [n](Elem a, Elem b) { return (a * b) % n; }, 0, 1));
}

FiniteSemiringPtr three_chain() {
  return std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      "chain3", {"0", "e", "1"}, [](Elem a, Elem b) { return std::max(a, b); },
      [](Elem a, Elem b) { return std::min(a, b); }, 0, 2));
}

std::vector<Elem> decode_tuple(Elem index, std::size_t base, std::size_t length) {
  std::vector<Elem> digits(length);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = index % static_cast<Elem>(base);
    index /= static_cast<Elem>(base);
  }
  return digits;
}

Elem encode_tuple(std::span<const Elem> digits, std::size_t base) {
  Elem index = 0;
  for (Elem d : digits) index = index * static_cast<Elem>(base) + d;
  return index;
}

FiniteSemiringPtr matrix_semiring(const FiniteSemiring& base, int n, bool upper_triangular) {
  if (n < 1) throw ConfigError("matrix size must be positive");
  const std::size_t q = base.size();
  const auto dim = static_cast<std::size_t>(n);
  // Free entries in row-major order (upper triangle only if requested).
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = upper_triangular ? i : 0; j < dim; ++j) slots.emplace_back(i, j);
  }
  double count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) count *= static_cast<double>(q);
  if (count > 4096) throw BoundExceeded("matrix semiring would have more than 4096 elements");
  const auto total = static_cast<Elem>(count);

  using Matrix = std::vector<Elem>;
  const auto unpack = [&](Elem idx) {
    Matrix m(dim * dim, base.zero());
    const auto digits = decode_tuple(idx, q, slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].first * dim + slots[s].second] = digits[s];
    return m;
  };
  const auto pack = [&](const Matrix& m) {
    std::vector<Elem> digits;
    for (auto [i, j] : slots) digits.push_back(m[i * dim + j]);
    return encode_tuple(digits, q);
  };
  std::vector<Matrix> all;
  std::vector<std::string> labels;
  for (Elem idx = 0; idx < total; ++idx) {
    all.push_back(unpack(idx));
    std::string label = "[";
    for (std::size_t i = 0; i < dim; ++i) {
      if (i) label += ";";
      for (std::size_t j = 0; j < dim; ++j) {
        if (j) label += ",";
        label += base.label(all.back()[i * dim + j]);
      }
    }
    labels.push_back(label + "]");
  }
  const auto add = [&](Elem a, Elem b) {
    Matrix m(dim * dim);
    for (std::size_t k = 0; k < dim * dim; ++k) m[k] = base.add(all[a][k], all[b][k]);
    return pack(m);
  };
  const auto mul = [&](Elem a, Elem b) {
    Matrix m(dim * dim, base.zero());
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Elem acc = base.zero();
        for (std::size_t k = 0; k < dim; ++k) {
          acc = base.add(acc, base.mul(all[a][i * dim + k], all[b][k * dim + j]));
        }
        m[i * dim + j] = acc;
      }
    }
    return pack(m);
  };
  Matrix id(dim * dim, base.zero());
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = base.one();
  const std::string name = std::string(upper_triangular ? "UT" : "M") + std::to_string(n) + "(" +
                           base.name() + ")";
  return std::make_shared<FiniteSemiring>(
      FiniteSemiring::tabulate(name, std::move(labels), add, mul, pack(Matrix(dim * dim, base.zero())), pack(id)));
}

FiniteSemiringPtr power_semiring(const FiniteSemiring& base, int k) {
  if (k < 1) throw ConfigError("power must be positive");
  const std::size_t q = base.size();
  double count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<double>(q);
  if (count > 4096) throw BoundExceeded("power semiring would have more than 4096 elements");
  const auto total = static_cast<Elem>(count);
  const auto len = static_cast<std::size_t>(k);
  std::vector<std::string> labels;
  for (Elem idx = 0; idx < total; ++idx) {
    std::string label = "(";
    const auto d = decode_tuple(idx, q, len);
    for (std::size_t i = 0; i < len; ++i) label += (i ? "," : "") + base.label(d[i]);
    labels.push_back(label + ")");
  }
  const auto pointwise = [&](auto op) {
    return [&, op](Elem a, Elem b) {
      auto da = decode_tuple(a, q, len);
      const auto db = decode_tuple(b, q, len);
      for (std::size_t i = 0; i < len; ++i) da[i] = op(da[i], db[i]);
      return encode_tuple(da, q);
    };
  };
  const auto add = pointwise([&](Elem x, Elem y) { return base.add(x, y); });
  const auto mul = pointwise([&](Elem x, Elem y) { return base.mul(x, y); });
  const std::vector<Elem> zeros(len, base.zero()), ones(len, base.one());
  return std::make_shared<FiniteSemiring>(FiniteSemiring::tabulate(
      base.name() + "^" + std::to_string(k), std::move(labels), add, mul, encode_tuple(zeros, q),
      encode_tuple(ones, q)));
}

}  // namespace tpairs
