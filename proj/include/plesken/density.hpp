#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace plesken {

/// Whether f7 = x^3 + x^2 - 2x - 1 and f9 = x^3 - 3x - 1 split into linear
/// factors mod p. Both cubics are cyclic, so "not split" means irreducible
/// for p outside {3, 7}.
std::pair<bool, bool> cubic_splitting(std::uint32_t p);

struct DensityRow {
  bool f7_split = false;
  bool f9_split = false;
  std::size_t count = 0;
  double expected = 0;
  /// Shape of L_p[PSL2(8)] over F_p for primes with this pattern.
  std::string decomposition;

  double frequency(std::size_t total) const { return total ? static_cast<double>(count) / total : 0.0; }
};

struct DensityResult {
  std::uint64_t bound = 0;
  /// Primes p < bound other than 2, 3 and 7.
  std::size_t primes = 0;
  /// Rows in the order (split, split), (irreducible, irreducible),
  /// (split, irreducible), (irreducible, split).
  std::vector<DensityRow> rows;
};

/// Tabulates splitting patterns over all primes below `bound`, spread over
/// `threads` workers (0 = hardware concurrency). The result does not depend
/// on the thread count.
DensityResult density_experiment(std::uint64_t bound, unsigned threads = 0);

}  // namespace plesken
