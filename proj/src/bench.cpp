#include "brooks/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>

#include "brooks/generators.hpp"
#include "brooks/oracle.hpp"

namespace brooks {

namespace {

std::uint64_t median(std::vector<std::uint64_t> samples) {
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - since).count());
}

}  // namespace

std::vector<BenchmarkRecord> bench(std::span<const std::size_t> sizes, std::size_t repeats, std::uint64_t seed) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw std::invalid_argument("bench sizes must be ascending");
  if (repeats == 0) throw std::invalid_argument("bench needs at least one repeat");

  std::vector<BenchmarkRecord> records;
  for (std::size_t n : sizes) {
    const std::vector<Edge> edges = random_connected_edges(n, 3 * n, seed);
    std::vector<std::uint64_t> build_times;
    std::vector<std::uint64_t> colour_times;
    BenchmarkRecord record{n, edges.size(), 0, 0, 0, 0};

    for (std::size_t r = 0; r < repeats; ++r) {
      auto start = std::chrono::steady_clock::now();
      const Graph g = build_graph(n, edges);
      build_times.push_back(elapsed_ns(start));

      start = std::chrono::steady_clock::now();
      const BrooksResult result = brooks_colour(g);
      const std::uint64_t colour_time = elapsed_ns(start);

      const auto violations = verify_colouring(g, result.colouring, brooks_bound(g));
      if (!violations.empty()) {
        throw BenchVerificationError("bench n=" + std::to_string(n) + ": " + to_string(violations.front()));
      }
      colour_times.push_back(colour_time);
      record.colours = result.colouring.num_colours;
      record.delta = g.max_degree();
    }
    record.build_ns = median(build_times);
    record.colour_ns = median(colour_times);
    records.push_back(record);
  }
  return records;
}

void write_bench_csv(std::span<const BenchmarkRecord> records, std::ostream& out) {
  out << "n,m,build_ns,colour_ns,colours,delta\n";
  for (const BenchmarkRecord& r : records) {
    out << r.n << ',' << r.m << ',' << r.build_ns << ',' << r.colour_ns << ',' << r.colours << ',' << r.delta << '\n';
  }
}

}  // namespace brooks
