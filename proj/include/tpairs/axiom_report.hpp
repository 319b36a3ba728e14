#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tpairs {

/// One failed axiom with the first witness found in canonical iteration order.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::size_t count = 1;
};

/// Outcome of an exhaustive (or windowed) axiom check.
///
/// Violations appear in the order the axioms were checked; each axiom is
/// reported at most once, with its first witness and a total count.
class AxiomReport {
 public:
  explicit AxiomReport(std::string subject = {}) : subject_(std::move(subject)) {}

  void record(const std::string& axiom, std::vector<std::string> witness);
  void merge(const AxiomReport& other);
  void count_checks(std::size_t n) { checked_ += n; }
  void set_window(std::int64_t radius) { window_ = radius; }

  [[nodiscard]] bool ok() const noexcept { return violations_.empty(); }
  [[nodiscard]] bool violates(const std::string& axiom) const;
  [[nodiscard]] const Violation* find(const std::string& axiom) const;
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }
  [[nodiscard]] const std::string& subject() const noexcept { return subject_; }
  [[nodiscard]] std::size_t checked() const noexcept { return checked_; }
  [[nodiscard]] std::optional<std::int64_t> window() const noexcept { return window_; }

 private:
  std::string subject_;
  std::vector<Violation> violations_;
  std::size_t checked_ = 0;
  std::optional<std::int64_t> window_;
};

}  // namespace tpairs
