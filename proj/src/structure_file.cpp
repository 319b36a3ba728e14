#include "tpairs/structure_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "tpairs/predicates.hpp"

namespace tpairs {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Entry {
  Token key;
  std::string raw;  // value text, trimmed
  std::vector<Token> values;
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;
  std::vector<std::vector<Token>> rows;
  std::size_t end_line = 0;
};

const std::vector<std::string>& key_sections() {
  static const std::vector<std::string> v{"semiring", "pair", "hyper", "module"};
  return v;
}

const std::vector<std::string>& table_sections() {
  static const std::vector<std::string> v{"add", "mul", "hyper-add", "hyper-mul", "module-add", "module-act"};
  return v;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

[[noreturn]] void fail(DiagnosticKind kind, std::size_t line, std::size_t column, const std::string& msg) {
  throw StructureFileError(kind, line, column, msg);
}

// Splits on whitespace outside braces; '#' outside braces ends the line.
std::vector<Token> tokenize(const std::string& line, std::size_t lineno, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    Token t{{}, lineno, offset + i + 1};
    int depth = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == '#')) break;
      if (c == '{') ++depth;
      if (c == '}') {
        if (depth == 0) fail(DiagnosticKind::syntax, lineno, offset + i + 1, "unmatched '}'");
        --depth;
      }
      t.text += c;
      ++i;
    }
    if (depth != 0) fail(DiagnosticKind::syntax, lineno, t.column, "unterminated '{'");
    out.push_back(std::move(t));
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_header(const std::string& t) {
  if (t.size() < 3 || t.front() != '[' || t.back() != ']') return false;
  return std::all_of(t.begin() + 1, t.end() - 1, [](char c) { return std::islower(static_cast<unsigned char>(c)) || c == '-'; });
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> out;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Strip the comment outside braces before looking at the line.
    std::string body;
    int depth = 0;
    for (char c : line) {
      if (c == '{') ++depth;
      if (c == '}' && depth > 0) --depth;
      if (c == '#' && depth == 0) break;
      body += c;
    }
    const std::string t = trim(body);
    if (t.empty()) continue;
    if (is_header(t)) {
      const std::string name = t.substr(1, t.size() - 2);
      const std::size_t col = body.find('[') + 1;
      if (!contains(key_sections(), name) && !contains(table_sections(), name)) {
        fail(DiagnosticKind::syntax, lineno, col, "unknown section [" + name + "]");
      }
      if (!seen.insert(name).second) fail(DiagnosticKind::syntax, lineno, col, "duplicate section [" + name + "]");
      out.push_back({name, lineno, {}, {}, lineno});
      continue;
    }
    if (out.empty()) {
      fail(DiagnosticKind::syntax, lineno, body.find_first_not_of(" \t") + 1, "content before the first section");
    }
    Section& sec = out.back();
    sec.end_line = lineno;
    if (contains(key_sections(), sec.name)) {
      const auto eq = body.find('=');
      if (eq == std::string::npos) {
        fail(DiagnosticKind::syntax, lineno, body.find_first_not_of(" \t") + 1, "expected 'key = value'");
      }
      Entry e;
      e.key.text = trim(std::string_view(body).substr(0, eq));
      e.key.line = lineno;
      e.key.column = body.find_first_not_of(" \t") + 1;
      if (e.key.text.empty()) fail(DiagnosticKind::syntax, lineno, eq + 1, "missing key before '='");
      e.raw = trim(std::string_view(body).substr(eq + 1));
      e.values = tokenize(body.substr(eq + 1), lineno, eq + 1);
      for (const auto& other : sec.entries) {
        if (other.key.text == e.key.text) fail(DiagnosticKind::syntax, lineno, e.key.column, "duplicate key '" + e.key.text + "'");
      }
      sec.entries.push_back(std::move(e));
    } else {
      sec.rows.push_back(tokenize(body, lineno, 0));
    }
  }
  return out;
}

const Section* find_section(const std::vector<Section>& secs, const std::string& name) {
  for (const auto& s : secs) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const Section& require_section(const std::vector<Section>& secs, const std::string& name, const std::string& because,
                               std::size_t line) {
  const Section* s = find_section(secs, name);
  if (!s) fail(DiagnosticKind::missing, line, 1, "missing section [" + name + "] required by " + because);
  return *s;
}

const Entry* find_entry(const Section& s, const std::string& key) {
  for (const auto& e : s.entries) {
    if (e.key.text == key) return &e;
  }
  return nullptr;
}

const Entry& require_entry(const Section& s, const std::string& key) {
  const Entry* e = find_entry(s, key);
  if (!e) fail(DiagnosticKind::missing, s.line, 1, "section [" + s.name + "] has no '" + key + "'");
  return *e;
}

void check_keys(const Section& s, const std::vector<std::string>& allowed) {
  for (const auto& e : s.entries) {
    if (!contains(allowed, e.key.text)) {
      fail(DiagnosticKind::syntax, e.key.line, e.key.column, "unknown key '" + e.key.text + "' in [" + s.name + "]");
    }
  }
}

struct LabelIndex {
  std::vector<std::string> labels;
  std::map<std::string, Elem> index;
  std::string what;

  Elem resolve(const Token& t) const {
    auto it = index.find(t.text);
    if (it == index.end()) fail(DiagnosticKind::unknown_label, t.line, t.column, "unknown " + what + " '" + t.text + "'");
    return it->second;
  }
};

LabelIndex read_labels(const Entry& e, const std::string& what) {
  LabelIndex out;
  out.what = what;
  if (e.values.empty()) fail(DiagnosticKind::syntax, e.key.line, e.key.column, "empty element list");
  for (const auto& t : e.values) {
    if (!out.index.emplace(t.text, static_cast<Elem>(out.labels.size())).second) {
      fail(DiagnosticKind::syntax, t.line, t.column, "duplicate label '" + t.text + "'");
    }
    out.labels.push_back(t.text);
  }
  return out;
}

Elem single_label(const Entry& e, const LabelIndex& idx) {
  if (e.values.size() != 1) {
    fail(DiagnosticKind::syntax, e.key.line, e.key.column, "'" + e.key.text + "' takes exactly one label");
  }
  return idx.resolve(e.values.front());
}

std::vector<Elem> label_list(const Entry* e, const LabelIndex& idx) {
  std::vector<Elem> out;
  if (!e) return out;
  for (const auto& t : e->values) out.push_back(idx.resolve(t));
  return out;
}

// rows x cols table of raw tokens; dimension errors point at the first bad cell or row.
const std::vector<std::vector<Token>>& shaped(const Section& s, std::size_t rows, std::size_t cols) {
  for (const auto& row : s.rows) {
    if (row.size() != cols) {
      const std::size_t col = row.size() > cols ? row[cols].column : (row.empty() ? 1 : row.back().column);
      fail(DiagnosticKind::dimension, row.front().line, col,
           "[" + s.name + "] row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    }
  }
  if (s.rows.size() != rows) {
    const std::size_t line = s.rows.size() > rows ? s.rows[rows].front().line : s.end_line;
    fail(DiagnosticKind::dimension, line, 1,
         "[" + s.name + "] has " + std::to_string(s.rows.size()) + " rows, expected " + std::to_string(rows));
  }
  return s.rows;
}

FiniteSemiring::Table label_table(const Section& s, const LabelIndex& rows_idx, std::size_t cols,
                                  const LabelIndex& cell_idx) {
  const auto& rows = shaped(s, rows_idx.labels.size(), cols);
  FiniteSemiring::Table out;
  for (const auto& row : rows) {
    std::vector<Elem> r;
    for (const auto& t : row) r.push_back(cell_idx.resolve(t));
    out.push_back(std::move(r));
  }
  return out;
}

// "{a,b}" (or a bare label) split on commas outside brackets.
Subset subset_literal(const Token& t, const LabelIndex& idx) {
  std::string inner = t.text;
  std::size_t offset = 0;
  if (!inner.empty() && inner.front() == '{') {
    if (inner.back() != '}') fail(DiagnosticKind::syntax, t.line, t.column, "malformed subset '" + t.text + "'");
    inner = inner.substr(1, inner.size() - 2);
    offset = 1;
  } else {
    Token whole = t;
    return singleton(idx.resolve(whole));
  }
  Subset out = 0;
  if (trim(inner).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    const char c = i < inner.size() ? inner[i] : ',';
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      Token part{trim(std::string_view(inner).substr(start, i - start)), t.line, t.column + offset + start};
      if (part.text.empty()) fail(DiagnosticKind::syntax, t.line, part.column, "empty label in subset");
      out |= singleton(idx.resolve(part));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void axiom_failure(const AxiomReport& r, std::size_t line, const std::string& what) {
  const auto& v = r.violations().front();
  std::string w;
  for (std::size_t i = 0; i < v.witness.size(); ++i) w += (i ? ", " : "") + v.witness[i];
  fail(DiagnosticKind::axiom, line, 1, what + " fails '" + v.axiom + "' at (" + w + ")");
}

std::string name_or(const Section& s, const std::string& fallback) {
  const Entry* e = find_entry(s, "name");
  return e && !e->raw.empty() ? e->raw : fallback;
}

// ---------------------------------------------------------------------------
// Serialization helpers

void check_label(const std::string& l) {
  if (l.empty() || std::any_of(l.begin(), l.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '#'; })) {
    throw PreconditionError("label '" + l + "' cannot be written to a structure file");
  }
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    check_label(xs[i]);
    out += (i ? " " : "") + xs[i];
  }
  return out;
}

void write_table(std::ostringstream& out, const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 0;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j];
      if (j + 1 < row.size()) line += std::string(width - row[j].size() + 1, ' ');
    }
    out << line << '\n';
  }
}

std::vector<std::string> labels_of(const std::vector<std::string>& all, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (Elem e : es) out.push_back(all.at(static_cast<std::size_t>(e)));
  return out;
}

std::string subset_text(const SemiHypergroup& h, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : subset_elements(s)) {
    out += (first ? "" : ",") + h.labels[static_cast<std::size_t>(e)];
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::syntax:
      return "syntax";
    case DiagnosticKind::unknown_label:
      return "unknown label";
    case DiagnosticKind::dimension:
      return "dimension";
    case DiagnosticKind::axiom:
      return "axiom failure";
    case DiagnosticKind::missing:
      return "missing";
  }
  return "?";
}

StructureFileError::StructureFileError(DiagnosticKind kind, std::size_t line, std::size_t column,
                                       const std::string& detail)
    : ConfigError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + to_string(kind) +
                  " error: " + detail),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(detail) {}

StructureFile parse_structure(std::string_view text, bool validate) {
  const auto secs = split_sections(text);
  StructureFile out;
  for (const auto& s : secs) out.section_lines[s.name] = s.line;
  if (secs.empty()) fail(DiagnosticKind::missing, 1, 1, "no sections");

  std::optional<LabelIndex> sr_idx;
  if (const Section* sr = find_section(secs, "semiring")) {
    check_keys(*sr, {"name", "elements", "zero", "one"});
    sr_idx = read_labels(require_entry(*sr, "elements"), "element");
    const Elem zero = single_label(require_entry(*sr, "zero"), *sr_idx);
    const Elem one = single_label(require_entry(*sr, "one"), *sr_idx);
    const std::size_t n = sr_idx->labels.size();
    const auto add = label_table(require_section(secs, "add", "[semiring]", sr->line), *sr_idx, n, *sr_idx);
    const auto mul = label_table(require_section(secs, "mul", "[semiring]", sr->line), *sr_idx, n, *sr_idx);
    out.semiring = std::make_shared<FiniteSemiring>(name_or(*sr, "semiring"), sr_idx->labels, add, mul, zero, one);
    if (validate) {
      const auto r = verify_semiring_axioms(*out.semiring);
      if (!r.ok()) axiom_failure(r, sr->line, "semiring");
    }
  } else {
    for (const char* dep : {"add", "mul", "pair", "module"}) {
      if (const Section* d = find_section(secs, dep)) {
        fail(DiagnosticKind::missing, d->line, 1, std::string("[") + dep + "] needs a [semiring] section");
      }
    }
  }

  if (const Section* ps = find_section(secs, "pair")) {
    check_keys(*ps, {"name", "a0", "tangibles"});
    const auto a0 = label_list(&require_entry(*ps, "a0"), *sr_idx);
    const auto t = label_list(find_entry(*ps, "tangibles"), *sr_idx);
    try {
      out.pair = finite_pair(name_or(*ps, out.semiring->name()), out.semiring, a0, t);
    } catch (const Error& e) {
      fail(DiagnosticKind::syntax, ps->line, 1, e.what());
    }
    if (validate) {
      const auto r = verify_admissible(*out.pair);
      if (!r.ok()) axiom_failure(r, ps->line, "pair");
    }
  }

  if (const Section* hs = find_section(secs, "hyper")) {
    check_keys(*hs, {"name", "elements", "zero", "one"});
    const auto idx = read_labels(require_entry(*hs, "elements"), "hyper element");
    const std::size_t n = idx.labels.size();
    if (n > 64) fail(DiagnosticKind::dimension, hs->line, 1, "hyperrings hold at most 64 elements");
    SemiHyperring h;
    h.name = name_or(*hs, "hyper");
    h.labels = idx.labels;
    h.zero = single_label(require_entry(*hs, "zero"), idx);
    h.one = single_label(require_entry(*hs, "one"), idx);
    const auto& add_rows = shaped(require_section(secs, "hyper-add", "[hyper]", hs->line), n, n);
    for (const auto& row : add_rows) {
      for (const auto& tok : row) {
        const Subset s = subset_literal(tok, idx);
        if (s == 0) fail(DiagnosticKind::axiom, tok.line, tok.column, "empty hypersum");
        h.add.push_back(s);
      }
    }
    const auto mul = label_table(require_section(secs, "hyper-mul", "[hyper]", hs->line), idx, n, idx);
    for (const auto& row : mul) h.mul.insert(h.mul.end(), row.begin(), row.end());
    if (validate) {
      const auto r = verify_semihyperring(h);
      if (!r.ok()) axiom_failure(r, hs->line, "hyperring");
    }
    out.hyper = std::move(h);
  } else {
    for (const char* dep : {"hyper-add", "hyper-mul"}) {
      if (const Section* d = find_section(secs, dep)) {
        fail(DiagnosticKind::missing, d->line, 1, std::string("[") + dep + "] needs a [hyper] section");
      }
    }
  }

  if (const Section* ms = find_section(secs, "module")) {
    if (!out.pair) fail(DiagnosticKind::missing, ms->line, 1, "[module] needs a [pair] section for its scalars");
    check_keys(*ms, {"name", "elements", "zero", "n", "tangibles"});
    const auto idx = read_labels(require_entry(*ms, "elements"), "module element");
    const Elem zero = single_label(require_entry(*ms, "zero"), idx);
    const auto n_image = label_list(&require_entry(*ms, "n"), idx);
    const auto tangibles = label_list(find_entry(*ms, "tangibles"), idx);
    const std::size_t m = idx.labels.size();
    const auto add = label_table(require_section(secs, "module-add", "[module]", ms->line), idx, m, idx);
    const auto act = label_table(require_section(secs, "module-act", "[module]", ms->line), *sr_idx, m, idx);
    out.module.emplace(
        name_or(*ms, "module"), out.pair, idx.labels,
        [add](Elem u, Elem v) { return add[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; },
        [act](Elem a, Elem v) { return act[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)]; }, zero,
        n_image, tangibles);
    if (validate) {
      const auto r = verify_module_pair(*out.module, !tangibles.empty());
      if (!r.ok()) axiom_failure(r, ms->line, "module");
    }
  } else {
    for (const char* dep : {"module-add", "module-act"}) {
      if (const Section* d = find_section(secs, dep)) {
        fail(DiagnosticKind::missing, d->line, 1, std::string("[") + dep + "] needs a [module] section");
      }
    }
  }
  return out;
}

StructureFile load_structure(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str(), validate);
}

std::string serialize_structure(const StructureFile& s) {
  std::ostringstream out;
  bool first = true;
  auto header = [&](const char* name) {
    if (!first) out << '\n';
    first = false;
    out << '[' << name << "]\n";
  };
  if (s.semiring) {
    const auto& r = *s.semiring;
    const auto& labels = r.labels();
    header("semiring");
    out << "name = " << r.name() << '\n';
    out << "elements = " << join(labels) << '\n';
    out << "zero = " << r.label(r.zero()) << '\n';
    out << "one = " << r.label(r.one()) << '\n';
    for (const char* op : {"add", "mul"}) {
      header(op);
      std::vector<std::vector<std::string>> cells;
      for (Elem a : r.elements()) {
        std::vector<std::string> row;
        for (Elem b : r.elements()) row.push_back(r.label(op[0] == 'a' ? r.add(a, b) : r.mul(a, b)));
        cells.push_back(std::move(row));
      }
      write_table(out, cells);
    }
  }
  if (s.pair) {
    header("pair");
    out << "name = " << s.pair->name() << '\n';
    out << "a0 = " << join(labels_of(s.semiring->labels(), s.pair->a0_elements())) << '\n';
    out << "tangibles = " << join(labels_of(s.semiring->labels(), s.pair->tangibles())) << '\n';
  }
  if (s.hyper) {
    const auto& h = *s.hyper;
    const std::size_t n = h.size();
    header("hyper");
    out << "name = " << h.name << '\n';
    out << "elements = " << join(h.labels) << '\n';
    out << "zero = " << h.labels[static_cast<std::size_t>(h.zero)] << '\n';
    out << "one = " << h.labels[static_cast<std::size_t>(h.one)] << '\n';
    header("hyper-add");
    std::vector<std::vector<std::string>> cells(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) cells[a].push_back(subset_text(h, h.sum(static_cast<Elem>(a), static_cast<Elem>(b))));
    }
    write_table(out, cells);
    header("hyper-mul");
    for (auto& row : cells) row.clear();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        cells[a].push_back(h.labels[static_cast<std::size_t>(h.prod(static_cast<Elem>(a), static_cast<Elem>(b)))]);
      }
    }
    write_table(out, cells);
  }
  if (s.module) {
    const auto& m = *s.module;
    header("module");
    out << "name = " << m.name() << '\n';
    out << "elements = " << join(m.labels()) << '\n';
    out << "zero = " << m.label(m.zero()) << '\n';
    out << "n = " << join(labels_of(m.labels(), m.n_image())) << '\n';
    if (!m.tangibles().empty()) out << "tangibles = " << join(labels_of(m.labels(), m.tangibles())) << '\n';
    header("module-add");
    std::vector<std::vector<std::string>> cells;
    for (Elem u : m.elements()) {
      std::vector<std::string> row;
      for (Elem v : m.elements()) row.push_back(m.label(m.add(u, v)));
      cells.push_back(std::move(row));
    }
    write_table(out, cells);
    header("module-act");
    cells.clear();
    for (Elem a : s.semiring->elements()) {
      std::vector<std::string> row;
      for (Elem v : m.elements()) row.push_back(m.label(m.act(a, v)));
      cells.push_back(std::move(row));
    }
    write_table(out, cells);
  }
  return out.str();
}

StructureFile structure_of(const PairPtr& p) {
  if (!p->is_finite()) throw PreconditionError(p->name() + " has no finite carrier");
  StructureFile out;
  out.semiring = std::dynamic_pointer_cast<const FiniteSemiring>(p->carrier_ptr());
  out.pair = p;
  return out;
}

StructureFile structure_of(const SemiHyperring& h) {
  StructureFile out;
  out.hyper = h;
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace tpairs
