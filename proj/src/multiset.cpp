#include "qweight/multiset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qweight {

DimensionMultiset::DimensionMultiset(const std::map<int, int>& multiplicities) {
  for (const auto& [d, m] : multiplicities) {
    if (d < 2) {
      throw std::invalid_argument("local dimensions must be at least 2, got " + std::to_string(d));
    }
    if (m < 0) {
      throw std::invalid_argument("multiplicities must be non-negative");
    }
    if (m > 0) {
      entries_.emplace_back(d, m);
    }
  }
}

DimensionMultiset DimensionMultiset::from_dimensions(std::span<const int> dims) {
  std::map<int, int> counts;
  for (const int d : dims) {
    ++counts[d];
  }
  return DimensionMultiset(counts);
}

DimensionMultiset DimensionMultiset::from_dimensions(std::initializer_list<int> dims) {
  return from_dimensions(std::span<const int>(dims.begin(), dims.size()));
}

int DimensionMultiset::multiplicity(int dimension) const noexcept {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{dimension, 0});
  return it != entries_.end() && it->first == dimension ? it->second : 0;
}

int DimensionMultiset::cardinality() const noexcept {
  int total = 0;
  for (const auto& [d, m] : entries_) {
    total += m;
  }
  return total;
}

bool DimensionMultiset::is_subset_of(const DimensionMultiset& other) const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return other.multiplicity(e.first) >= e.second; });
}

DimensionMultiset DimensionMultiset::operator+(const DimensionMultiset& other) const {
  std::map<int, int> counts(entries_.begin(), entries_.end());
  for (const auto& [d, m] : other.entries_) {
    counts[d] += m;
  }
  return DimensionMultiset(counts);
}

std::string DimensionMultiset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [d, m] : entries_) {
    for (int i = 0; i < m; ++i) {
      out << (first ? "" : ",") << d;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

Integer dim_of(const DimensionMultiset& v) {
  Integer result = 1;
  for (const auto& [d, m] : v.entries()) {
    result *= power(Integer(d), static_cast<unsigned long>(m));
  }
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<DimensionMultiset> sub_multisets(const DimensionMultiset& total) {
  const SubMultisetLattice lattice(total);
  std::vector<DimensionMultiset> out;
  out.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out.push_back(lattice.at(i));
  }
  return out;
}

Integer count_supersets(const DimensionMultiset& v, const DimensionMultiset& w,
                        const DimensionMultiset& total) {
  if (!w.is_subset_of(total)) {
    throw std::invalid_argument(w.to_string() + " is not contained in " + total.to_string());
  }
  if (!v.is_subset_of(w)) {
    return 0;
  }
  Integer result = 1;
  for (const auto& [d, m_total] : total.entries()) {
    const int m_v = v.multiplicity(d);
    const int m_w = w.multiplicity(d);
    result *= binomial(m_total - m_v, m_w - m_v);
  }
  return result;
}

DimensionMultiset complement(const DimensionMultiset& w, const DimensionMultiset& total) {
  if (!w.is_subset_of(total)) {
    throw std::invalid_argument(w.to_string() + " is not contained in " + total.to_string());
  }
  std::map<int, int> counts;
  for (const auto& [d, m] : total.entries()) {
    counts[d] = m - w.multiplicity(d);
  }
  return DimensionMultiset(counts);
}

IndexSubset IndexSubset::from_sites(std::span<const int> sites) {
  std::uint64_t mask = 0;
  for (const int s : sites) {
    if (s < 0 || s >= max_sites) {
      throw std::out_of_range("site index out of range: " + std::to_string(s));
    }
    mask |= std::uint64_t{1} << s;
  }
  return IndexSubset(mask);
}

IndexSubset IndexSubset::from_sites(std::initializer_list<int> sites) {
  return from_sites(std::span<const int>(sites.begin(), sites.size()));
}

IndexSubset IndexSubset::all(int n) {
  if (n < 0 || n > max_sites) {
    throw std::out_of_range("too many sites");
  }
  return IndexSubset(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

int IndexSubset::size() const noexcept { return std::popcount(mask_); }

std::vector<int> IndexSubset::sites() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

IndexSubset IndexSubset::complement(int n) const { return IndexSubset(all(n).mask() & ~mask_); }

std::string IndexSubset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const int s : sites()) {
    out << (first ? "" : ",") << s + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

DimensionSpec::DimensionSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("a system needs at least one site");
  }
  if (dims_.size() > static_cast<std::size_t>(IndexSubset::max_sites)) {
    throw std::invalid_argument("too many sites");
  }
  for (const int d : dims_) {
    if (d < 2) {
      throw std::invalid_argument("local dimensions must be at least 2, got " + std::to_string(d));
    }
  }
  multiset_ = DimensionMultiset::from_dimensions(dims_);
}

Integer DimensionSpec::total_dimension() const { return qweight::dim_of(multiset_); }

std::size_t DimensionSpec::hilbert_dimension() const {
  const Integer total = total_dimension();
  if (total > Integer(std::to_string(std::numeric_limits<std::uint32_t>::max()))) {
    throw std::length_error("Hilbert space too large: " + to_string());
  }
  return static_cast<std::size_t>(total.get_ui());
}

DimensionMultiset DimensionSpec::multiset_of(IndexSubset sites) const {
  std::map<int, int> counts;
  for (const int s : sites.sites()) {
    ++counts[dim(s)];
  }
  return DimensionMultiset(counts);
}

Integer DimensionSpec::dim_of(IndexSubset sites) const {
  Integer result = 1;
  for (const int s : sites.sites()) {
    result *= dim(s);
  }
  return result;
}

DimensionSpec DimensionSpec::restricted_to(IndexSubset keep) const {
  std::vector<int> kept;
  for (const int s : keep.sites()) {
    kept.push_back(dim(s));
  }
  return DimensionSpec(std::move(kept));
}

std::string DimensionSpec::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    out << (i ? "," : "") << dims_[i];
  }
  out << ']';
  return out.str();
}

SubMultisetLattice::SubMultisetLattice(DimensionMultiset total) : total_(std::move(total)) {
  for (const auto& [d, m] : total_.entries()) {
    dimensions_.push_back(d);
    capacities_.push_back(m);
    strides_.push_back(size_);
    const auto radix = static_cast<std::size_t>(m) + 1;
    if (size_ > std::numeric_limits<std::size_t>::max() / radix) {
      throw std::length_error("sub-multiset lattice too large");
    }
    size_ *= radix;
  }
}

int SubMultisetLattice::digit(std::size_t index, std::size_t slot) const noexcept {
  return static_cast<int>((index / strides_[slot]) % static_cast<std::size_t>(capacities_[slot] + 1));
}

std::vector<int> SubMultisetLattice::digits(std::size_t index) const {
  std::vector<int> out(slots());
  for (std::size_t s = 0; s < slots(); ++s) {
    out[s] = digit(index, s);
  }
  return out;
}

std::size_t SubMultisetLattice::index_of_digits(std::span<const int> digits) const {
  if (digits.size() != slots()) {
    throw std::invalid_argument("digit vector has the wrong length");
  }
  std::size_t index = 0;
  for (std::size_t s = 0; s < slots(); ++s) {
    if (digits[s] < 0 || digits[s] > capacities_[s]) {
      throw std::out_of_range("multiplicity exceeds the total multiset");
    }
    index += static_cast<std::size_t>(digits[s]) * strides_[s];
  }
  return index;
}

DimensionMultiset SubMultisetLattice::at(std::size_t index) const {
  std::map<int, int> counts;
  for (std::size_t s = 0; s < slots(); ++s) {
    counts[dimensions_[s]] = digit(index, s);
  }
  return DimensionMultiset(counts);
}

std::size_t SubMultisetLattice::index_of(const DimensionMultiset& v) const {
  if (!v.is_subset_of(total_)) {
    throw std::invalid_argument(v.to_string() + " is not contained in " + total_.to_string());
  }
  std::vector<int> d(slots());
  for (std::size_t s = 0; s < slots(); ++s) {
    d[s] = v.multiplicity(dimensions_[s]);
  }
  return index_of_digits(d);
}

Integer SubMultisetLattice::dim_at(std::size_t index) const {
  Integer result = 1;
  for (std::size_t s = 0; s < slots(); ++s) {
    result *= power(Integer(dimensions_[s]), static_cast<unsigned long>(digit(index, s)));
  }
  return result;
}

int SubMultisetLattice::cardinality_at(std::size_t index) const {
  int total = 0;
  for (std::size_t s = 0; s < slots(); ++s) {
    total += digit(index, s);
  }
  return total;
}

std::size_t SubMultisetLattice::complement_index(std::size_t index) const { return top() - index; }

bool SubMultisetLattice::contains(std::size_t inner, std::size_t outer) const noexcept {
  for (std::size_t s = 0; s < slots(); ++s) {
    if (digit(inner, s) > digit(outer, s)) {
      return false;
    }
  }
  return true;
}

}  // namespace qweight
