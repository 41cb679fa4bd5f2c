#pragma once

#include <vector>

namespace menum::detail {

// Streams subsets of {0..n-1} with 2 <= size <= max_size in lexicographic
// sequence order ({0,1} < {0,1,2} < {0,2} ...), one advance() per subset.
// Reverse-search frames keep one cursor each, so child generation stays lazy.
class SubsetCursor {
 public:
  explicit SubsetCursor(int max_size) : max_size_(max_size) {}

  bool advance(int n) {
    if (ids_.empty()) {
      if (n < 2) return false;
      ids_ = {0, 1};
      return true;
    }
    if (static_cast<int>(ids_.size()) < max_size_ && ids_.back() + 1 < n) {
      ids_.push_back(ids_.back() + 1);
      return true;
    }
    for (;;) {
      for (;;) {
        if (ids_.empty()) return false;
        const int x = ids_.back();
        ids_.pop_back();
        if (x + 1 < n) {
          ids_.push_back(x + 1);
          break;
        }
      }
      while (static_cast<int>(ids_.size()) < 2 && ids_.back() + 1 < n)
        ids_.push_back(ids_.back() + 1);
      if (static_cast<int>(ids_.size()) >= 2) return true;
    }
  }

  const std::vector<int>& ids() const { return ids_; }

 private:
  int max_size_;
  std::vector<int> ids_;
};

}  // namespace menum::detail
