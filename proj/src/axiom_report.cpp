#include "tpairs/axiom_report.hpp"

#include <algorithm>

namespace tpairs {

void AxiomReport::record(const std::string& axiom, std::vector<std::string> witness) {
  for (auto& v : violations_) {
    if (v.axiom == axiom) {
      ++v.count;
      return;
    }
  }
  violations_.push_back(Violation{axiom, std::move(witness), 1});
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& v : other.violations_) {
    auto it = std::find_if(violations_.begin(), violations_.end(),
                           [&](const Violation& mine) { return mine.axiom == v.axiom; });
    if (it == violations_.end()) {
      violations_.push_back(v);
    } else {
      it->count += v.count;
    }
  }
  checked_ += other.checked_;
  if (other.window_) window_ = other.window_;
}

bool AxiomReport::violates(const std::string& axiom) const { return find(axiom) != nullptr; }

const Violation* AxiomReport::find(const std::string& axiom) const {
  for (const auto& v : violations_) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

}  // namespace tpairs
