#include "tpairs/fixtures.hpp"

#include "tpairs/errors.hpp"
#include "tpairs/hyper.hpp"

namespace tpairs {

std::vector<std::string> fixture_names() {
  return {"boolean", "double-boolean", "supertropical-trivial", "nmax3",
          "krasner-zero", "krasner-ge2", "f5-ge2"};
}

PairPtr nmax_pair(int n) {
  auto s = truncated_nmax(n);
  std::vector<Elem> t;
  for (Elem e : s->elements()) {
    if (e != s->zero()) t.push_back(e);
  }
  return finite_pair("nmax_trunc(" + std::to_string(n) + ")", s, {s->zero()}, t);
}

PairPtr fixture_pair(std::string_view name) {
  if (name == "boolean") return boolean_pair();
  if (name == "double-boolean") return double_pair(boolean_semiring());
  if (name == "supertropical-trivial") return supertropical_extension(trivial_monoid());
  if (name == "nmax3") return nmax_pair(3);
  if (name == "krasner-zero") return powerset_pair(krasner_hyperfield(), A0Choice::contains_zero);
  if (name == "krasner-ge2") return powerset_pair(krasner_hyperfield(), A0Choice::size_ge_two);
  if (name == "f5-ge2") return powerset_pair(krasner_quotient(*integers_mod(5), {1, 4}).ring, A0Choice::size_ge_two);
  throw ConfigError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace tpairs
