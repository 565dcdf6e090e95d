#include "plesken/density.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "plesken/error.hpp"
#include "plesken/poly.hpp"

namespace plesken {

std::pair<bool, bool> cubic_splitting(std::uint32_t p) {
  const Field f = Field::prime(p);
  const Poly f7 = Poly::from_ints(f, {-1, -2, 1, 1});
  const Poly f9 = Poly::from_ints(f, {-1, -3, 0, 1});
  return {root_count(f7) == 3, root_count(f9) == 3};
}

DensityResult density_experiment(std::uint64_t bound, unsigned threads) {
  if (bound < 100) throw ValidationError("density bound must be at least 100");
  if (bound > (std::uint64_t{1} << 31)) throw LimitError("density bound too large");
  std::vector<std::uint32_t> primes;
  for (std::uint64_t p = 5; p < bound; p += 2)
    if (p != 7 && is_prime_number(p)) primes.push_back(static_cast<std::uint32_t>(p));

  std::vector<unsigned char> pattern(primes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    constexpr std::size_t kChunk = 64;
    for (std::size_t start = next.fetch_add(kChunk); start < primes.size(); start = next.fetch_add(kChunk))
      for (std::size_t i = start; i < std::min(primes.size(), start + kChunk); ++i) {
        const auto [s7, s9] = cubic_splitting(primes[i]);
        pattern[i] = static_cast<unsigned char>((s7 ? 1 : 0) | (s9 ? 2 : 0));
      }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  DensityResult out;
  out.bound = bound;
  out.primes = primes.size();
  // f9 splitting makes the three Galois-conjugate 7-dimensional characters
  // rational over F_p; f7 does the same for the 9-dimensional ones.
  out.rows = {
      {true, true, 0, 1.0 / 9, "B3 + D4 + B3 x3 + B4 x3"},
      {false, false, 0, 4.0 / 9, "B3 + D4 + B3^(3) x3 + B4^(3) x3"},
      {true, false, 0, 2.0 / 9, "B3 + D4 + B3^(3) x3 + B4 x3"},
      {false, true, 0, 2.0 / 9, "B3 + D4 + B3 x3 + B4^(3) x3"},
  };
  for (auto pt : pattern) {
    const bool s7 = pt & 1, s9 = pt & 2;
    for (auto& r : out.rows)
      if (r.f7_split == s7 && r.f9_split == s9) ++r.count;
  }
  return out;
}

}  // namespace plesken
