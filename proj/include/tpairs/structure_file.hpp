#pragma once

// Plain-text structure files: [section] headers, key = value lines and
// whitespace-separated tables. See the README for the grammar.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tpairs/errors.hpp"
#include "tpairs/hyper.hpp"
#include "tpairs/modules.hpp"
#include "tpairs/pair.hpp"
#include "tpairs/semiring.hpp"

namespace tpairs {

enum class DiagnosticKind { syntax, unknown_label, dimension, axiom, missing };
std::string to_string(DiagnosticKind k);

/// Load failure located at a 1-based line and column of the input.
class StructureFileError : public ConfigError {
 public:
  StructureFileError(DiagnosticKind kind, std::size_t line, std::size_t column, const std::string& detail);

  [[nodiscard]] DiagnosticKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  DiagnosticKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Everything a file can define. A file holds a semiring (optionally with a
/// pair and a module over that pair), a hyperring, or both.
struct StructureFile {
  FiniteSemiringPtr semiring;
  PairPtr pair;
  std::optional<SemiHyperring> hyper;
  std::optional<FiniteModule> module;
  /// Section name -> header line, for diagnostics raised after loading.
  std::map<std::string, std::size_t> section_lines;
};

/// With `validate`, every object must also pass its verify_* check; the
/// first failing axiom is reported with kind `axiom` at its section header.
StructureFile parse_structure(std::string_view text, bool validate = true);
/// Reads the file; an unreadable path throws ConfigError.
StructureFile load_structure(const std::string& path, bool validate = true);

/// Canonical text. Parsing it back and serializing again gives the same bytes.
std::string serialize_structure(const StructureFile& s);

/// File contents for a pair on a finite carrier (PreconditionError otherwise).
StructureFile structure_of(const PairPtr& p);
StructureFile structure_of(const SemiHyperring& h);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace tpairs
