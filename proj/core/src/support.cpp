#include "srf/support.hpp"

#include "srf/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace srf {

namespace {

void validate(const std::vector<long>& offsets) {
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    if (offsets[i] <= offsets[i - 1]) {
      throw DomainError("support offsets must be strictly increasing");
    }
  }
}

}  // namespace

SupportSet::SupportSet(std::initializer_list<long> offsets) : offsets_(offsets) { validate(offsets_); }

SupportSet::SupportSet(std::vector<long> offsets) : offsets_(std::move(offsets)) { validate(offsets_); }

SupportSet SupportSet::contiguous(std::size_t size, long first) {
  std::vector<long> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = first + static_cast<long>(i);
  return SupportSet(std::move(v));
}

bool SupportSet::contains(long offset) const {
  return std::binary_search(offsets_.begin(), offsets_.end(), offset);
}

bool SupportSet::is_subset_of(const SupportSet& other) const {
  return std::includes(other.offsets_.begin(), other.offsets_.end(), offsets_.begin(), offsets_.end());
}

std::size_t SupportSet::index_of(long offset) const {
  auto it = std::lower_bound(offsets_.begin(), offsets_.end(), offset);
  if (it == offsets_.end() || *it != offset) return size();
  return static_cast<std::size_t>(it - offsets_.begin());
}

SupportSet SupportSet::translated(long shift) const {
  std::vector<long> v = offsets_;
  for (long& o : v) o += shift;
  return SupportSet(std::move(v));
}

SupportSet SupportSet::reflected() const {
  std::vector<long> v(offsets_.rbegin(), offsets_.rend());
  for (long& o : v) o = -o;
  return SupportSet(std::move(v));
}

SupportSet SupportSet::canonical() const { return empty() ? *this : translated(-front()); }

std::string SupportSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < offsets_.size(); ++i) os << (i ? "," : "") << offsets_[i];
  os << '}';
  return os.str();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    if (r > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
    r = r * num / i;
  }
  return r;
}

std::vector<SupportSet> subsets_of_size(const SupportSet& window, std::size_t size, std::size_t budget) {
  const std::size_t n = window.size();
  const std::size_t count = binomial(n, size);
  if (count > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) + " supports exceeds budget " +
                         std::to_string(budget));
  }
  std::vector<SupportSet> out;
  if (size > n) return out;
  out.reserve(count);
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::vector<long> offs(size);
    for (std::size_t i = 0; i < size; ++i) offs[i] = window[idx[i]];
    out.emplace_back(std::move(offs));
    // advance to the next combination in lexicographic order
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<SupportSet> canonical_supports(std::size_t size, long span_max, std::size_t budget) {
  if (size == 0) return {SupportSet{}};
  if (span_max < static_cast<long>(size) - 1) {
    throw DomainError("span_max " + std::to_string(span_max) + " too small for support size " +
                      std::to_string(size));
  }
  // offset 0 is fixed; choose the remaining size-1 offsets from 1..span_max
  const SupportSet tail = SupportSet::contiguous(static_cast<std::size_t>(span_max), 1);
  std::vector<SupportSet> rest = subsets_of_size(tail, size - 1, budget);
  std::vector<SupportSet> out;
  out.reserve(rest.size());
  for (const auto& r : rest) {
    std::vector<long> offs;
    offs.reserve(size);
    offs.push_back(0);
    offs.insert(offs.end(), r.offsets().begin(), r.offsets().end());
    out.emplace_back(std::move(offs));
  }
  return out;
}

}  // namespace srf
