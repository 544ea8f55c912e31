#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "brooks/colouring.hpp"

namespace brooks {

struct BenchmarkRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t build_ns = 0;   // median graph construction time
  std::uint64_t colour_ns = 0;  // median brooks_colour time
  Colour colours = 0;
  std::size_t delta = 0;
};

// Raised when a timed run produces a colouring that fails verification.
class BenchVerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// For each size n: random_connected(n, 3n, seed), built and coloured
// `repeats` times, medians recorded. Every colouring is verified against
// brooks_bound before its timing counts. Sizes must be ascending.
std::vector<BenchmarkRecord> bench(std::span<const std::size_t> sizes, std::size_t repeats, std::uint64_t seed);

// Header "n,m,build_ns,colour_ns,colours,delta", then one row per record.
void write_bench_csv(std::span<const BenchmarkRecord> records, std::ostream& out);

}  // namespace brooks
