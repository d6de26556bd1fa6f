// Invariant suites run over the catalog, in parallel, with a deterministic
// report.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rainbow/catalog.hpp"

namespace rainbow {

struct VerifyOptions {
  int max_rank = 3;
  int max_size = 6;
  int threads = 1;
  std::uint64_t seed = 20240601;
};

struct SuiteSummary {
  std::string suite;
  std::uint64_t entries = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t faults = 0;
};

struct VerifyFinding {
  std::string suite;
  std::string entry;
  std::string detail;
  bool fault;
};

struct VerifyResult {
  std::size_t catalog_size = 0;
  std::vector<SuiteSummary> suites;
  /// Catalog order, then suite order; at most a few per suite.
  std::vector<VerifyFinding> findings;

  bool ok() const;
  bool has_fault() const;
};

VerifyResult verify_all(const VerifyOptions& options);
/// JSON lines: one per suite, one per finding, then a summary line.
std::string report_lines(const VerifyResult& result, const VerifyOptions& options);

/// Runs body(i) for i in [0, count) on `threads` workers. The first exception
/// thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace rainbow
