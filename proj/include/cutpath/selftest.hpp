#pragma once

#include <cstdint>
#include <string>

namespace cutpath::selftest {

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
};

// most_probable_path against exhaustive simple-path enumeration.
Result check_path_engine(std::size_t cases, std::size_t max_vertices, std::uint64_t seed);

// most_probable_cut against brute-force bipartitions and Edmonds-Karp.
Result check_cut_engine(std::size_t cases, std::size_t max_vertices, std::uint64_t seed);

// All five algorithms on small random roadmaps with random truth: verdicts
// against union-find, certificates, and the iteration/evaluation bounds.
Result check_algorithms(std::size_t cases, std::size_t max_vertices, std::uint64_t seed);

}  // namespace cutpath::selftest
