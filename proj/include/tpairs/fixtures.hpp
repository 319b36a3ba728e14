#pragma once

// Named finite pairs shared by the tests, the acceptance suite and the CLI.

#include <string>
#include <string_view>
#include <vector>

#include "tpairs/pair.hpp"

namespace tpairs {

/// boolean, double-boolean, supertropical-trivial, nmax3, krasner-zero,
/// krasner-ge2, f5-ge2.
std::vector<std::string> fixture_names();

/// Throws ConfigError for an unknown name.
PairPtr fixture_pair(std::string_view name);

/// (nmax_trunc(n), {-inf}, everything else).
PairPtr nmax_pair(int n);

}  // namespace tpairs
