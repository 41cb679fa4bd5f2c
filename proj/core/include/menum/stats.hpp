#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

namespace menum {

/// Delay ledger of one enumeration run. One gap per output; the gap before
/// the first output covers preprocessing, and whatever runs after the last
/// output is accounted separately as the post-processing tail.
struct EnumerationStats {
  std::uint64_t outputs = 0;
  std::vector<std::uint64_t> gap_queries;
  std::vector<std::uint64_t> gap_ns;
  std::uint64_t preprocess_queries = 0;  // first gap, when there is one
  std::uint64_t preprocess_ns = 0;
  std::uint64_t postprocess_queries = 0;
  std::uint64_t postprocess_ns = 0;
  std::uint64_t total_queries = 0;
  std::uint64_t total_ns = 0;

  std::uint64_t max_gap_queries() const;
  std::uint64_t max_gap_ns() const;
  double mean_gap_queries() const;
  double mean_gap_ns() const;
  std::uint64_t median_gap_queries() const;
};

/// Snapshot-based recorder: wire `output()` into the solution sink and call
/// `finish()` when the enumerator returns.
class DelayRecorder {
 public:
  explicit DelayRecorder(std::function<std::uint64_t()> query_reader);

  void output();
  void finish();

  const EnumerationStats& stats() const { return stats_; }

 private:
  std::function<std::uint64_t()> read_queries_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t mark_queries_ = 0;
  std::uint64_t initial_queries_ = 0;
  std::uint64_t mark_ns_ = 0;
  EnumerationStats stats_;

  std::uint64_t elapsed_ns() const;
};

}  // namespace menum
