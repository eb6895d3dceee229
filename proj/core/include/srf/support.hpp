#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace srf {

/// Strictly increasing list of integer atom offsets.
///
/// Empty sets are representable (the zero-sparsity solution of the l0
/// program); operations that need atoms check for that themselves.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::initializer_list<long> offsets);
  explicit SupportSet(std::vector<long> offsets);

  /// {first, first + 1, ..., first + size - 1}
  static SupportSet contiguous(std::size_t size, long first = 0);

  const std::vector<long>& offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }
  bool empty() const { return offsets_.empty(); }
  long operator[](std::size_t i) const { return offsets_[i]; }
  long front() const { return offsets_.front(); }
  long back() const { return offsets_.back(); }
  long span() const { return empty() ? 0 : back() - front(); }

  bool contains(long offset) const;
  bool is_subset_of(const SupportSet& other) const;
  /// Position of an offset, or size() when absent.
  std::size_t index_of(long offset) const;

  SupportSet translated(long shift) const;
  SupportSet reflected() const;
  /// Translate so the first offset is zero.
  SupportSet canonical() const;
  bool is_canonical() const { return empty() || front() == 0; }
  bool is_contiguous() const { return empty() || span() + 1 == static_cast<long>(size()); }

  std::string to_string() const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
  friend std::strong_ordering operator<=>(const SupportSet& a, const SupportSet& b) {
    return a.offsets_ <=> b.offsets_;
  }

 private:
  std::vector<long> offsets_;
};

/// Every canonical support of the given size with last offset <= span_max,
/// in lexicographic order. Throws BudgetExceeded past `budget` supports.
std::vector<SupportSet> canonical_supports(std::size_t size, long span_max,
                                           std::size_t budget = 1'000'000);

/// Every subset of `window` with exactly `size` offsets, lexicographic order.
std::vector<SupportSet> subsets_of_size(const SupportSet& window, std::size_t size,
                                        std::size_t budget = 1'000'000);

/// Number of ways to choose k out of n, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace srf
