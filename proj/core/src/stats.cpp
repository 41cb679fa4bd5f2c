#include "menum/stats.hpp"

#include <algorithm>
#include <numeric>

namespace menum {

namespace {

std::uint64_t max_of(const std::vector<std::uint64_t>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

double mean_of(const std::vector<std::uint64_t>& v) {
  if (v.empty()) return 0.0;
  const auto sum = std::accumulate(v.begin(), v.end(), std::uint64_t{0});
  return static_cast<double>(sum) / static_cast<double>(v.size());
}

}  // namespace

std::uint64_t EnumerationStats::max_gap_queries() const { return max_of(gap_queries); }
std::uint64_t EnumerationStats::max_gap_ns() const { return max_of(gap_ns); }
double EnumerationStats::mean_gap_queries() const { return mean_of(gap_queries); }
double EnumerationStats::mean_gap_ns() const { return mean_of(gap_ns); }

std::uint64_t EnumerationStats::median_gap_queries() const {
  if (gap_queries.empty()) return 0;
  std::vector<std::uint64_t> sorted = gap_queries;
  std::sort(sorted.begin(), sorted.end());
  return sorted[sorted.size() / 2];
}

DelayRecorder::DelayRecorder(std::function<std::uint64_t()> query_reader)
    : read_queries_(std::move(query_reader)),
      start_(std::chrono::steady_clock::now()),
      mark_queries_(read_queries_()),
      initial_queries_(mark_queries_) {}

std::uint64_t DelayRecorder::elapsed_ns() const {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now() - start_)
                                        .count());
}

void DelayRecorder::output() {
  const std::uint64_t now_q = read_queries_();
  const std::uint64_t now_ns = elapsed_ns();
  stats_.gap_queries.push_back(now_q - mark_queries_);
  stats_.gap_ns.push_back(now_ns - mark_ns_);
  if (stats_.outputs == 0) {
    stats_.preprocess_queries = now_q - mark_queries_;
    stats_.preprocess_ns = now_ns - mark_ns_;
  }
  ++stats_.outputs;
  mark_queries_ = now_q;
  mark_ns_ = now_ns;
}

void DelayRecorder::finish() {
  const std::uint64_t now_q = read_queries_();
  const std::uint64_t now_ns = elapsed_ns();
  stats_.postprocess_queries = now_q - mark_queries_;
  stats_.postprocess_ns = now_ns - mark_ns_;
  stats_.total_ns = now_ns;
  stats_.total_queries = now_q - initial_queries_;
}

}  // namespace menum
