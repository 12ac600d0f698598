#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qweight/rational.hpp"

namespace qweight {

/// Multiset of local dimensions, stored as ascending (dimension, multiplicity)
/// pairs with positive multiplicities only.
class DimensionMultiset {
 public:
  using Entry = std::pair<int, int>;

  DimensionMultiset() = default;
  explicit DimensionMultiset(const std::map<int, int>& multiplicities);

  static DimensionMultiset from_dimensions(std::span<const int> dims);
  static DimensionMultiset from_dimensions(std::initializer_list<int> dims);

  int multiplicity(int dimension) const noexcept;
  std::span<const Entry> entries() const noexcept { return entries_; }
  int cardinality() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }
  bool is_subset_of(const DimensionMultiset& other) const noexcept;

  /// Sum of multisets.
  DimensionMultiset operator+(const DimensionMultiset& other) const;

  /// Elements listed with repetition, e.g. "{2,3,3}"; the empty multiset is "{}".
  std::string to_string() const;

  friend bool operator==(const DimensionMultiset&, const DimensionMultiset&) = default;
  friend auto operator<=>(const DimensionMultiset&, const DimensionMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

Integer dim_of(const DimensionMultiset& v);

/// Binomial coefficient, zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// All sub-multisets of total in the canonical lattice order (see
/// SubMultisetLattice).
std::vector<DimensionMultiset> sub_multisets(const DimensionMultiset& total);

/// Number of site subsets of a system with dimension multiset total that
/// contain a fixed subset realising v and themselves realise w. Zero unless
/// v is contained in w.
Integer count_supersets(const DimensionMultiset& v, const DimensionMultiset& w,
                        const DimensionMultiset& total);

/// total minus w; throws std::invalid_argument unless w is contained in total.
DimensionMultiset complement(const DimensionMultiset& w, const DimensionMultiset& total);

/// Set of site indices, 0-based internally. Printed 1-based.
class IndexSubset {
 public:
  static constexpr int max_sites = 62;

  IndexSubset() = default;
  explicit IndexSubset(std::uint64_t mask) : mask_(mask) {}
  static IndexSubset from_sites(std::span<const int> sites);
  static IndexSubset from_sites(std::initializer_list<int> sites);
  static IndexSubset all(int n);

  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int site) const noexcept { return (mask_ >> site) & 1U; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::vector<int> sites() const;
  IndexSubset complement(int n) const;
  bool is_subset_of(IndexSubset other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  /// 1-based listing such as "{1,3}".
  std::string to_string() const;

  friend bool operator==(IndexSubset, IndexSubset) = default;
  friend auto operator<=>(IndexSubset, IndexSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Ordered list of local dimensions of an n-partite system.
class DimensionSpec {
 public:
  DimensionSpec() = default;
  explicit DimensionSpec(std::vector<int> dims);
  DimensionSpec(std::initializer_list<int> dims) : DimensionSpec(std::vector<int>(dims)) {}

  int size() const noexcept { return static_cast<int>(dims_.size()); }
  int dim(int site) const { return dims_.at(static_cast<std::size_t>(site)); }
  std::span<const int> dims() const noexcept { return dims_; }

  Integer total_dimension() const;
  /// Total dimension as a machine integer; throws if it does not fit.
  std::size_t hilbert_dimension() const;

  const DimensionMultiset& multiset() const noexcept { return multiset_; }
  DimensionMultiset multiset_of(IndexSubset sites) const;
  Integer dim_of(IndexSubset sites) const;

  /// Restriction to the sites in keep, in ascending site order.
  DimensionSpec restricted_to(IndexSubset keep) const;

  std::string to_string() const;

  friend bool operator==(const DimensionSpec& a, const DimensionSpec& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  DimensionMultiset multiset_;
};

/// Dense indexing of the sub-multisets of a fixed total multiset. An index
/// is a mixed-radix number over the multiplicities of the distinct
/// dimensions, the smallest dimension varying fastest.
class SubMultisetLattice {
 public:
  SubMultisetLattice() : SubMultisetLattice(DimensionMultiset{}) {}
  explicit SubMultisetLattice(DimensionMultiset total);

  const DimensionMultiset& total() const noexcept { return total_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t slots() const noexcept { return dimensions_.size(); }
  std::span<const int> dimensions() const noexcept { return dimensions_; }
  std::span<const int> capacities() const noexcept { return capacities_; }

  /// Multiplicity of the slot-th distinct dimension in the element at index.
  int digit(std::size_t index, std::size_t slot) const noexcept;
  std::vector<int> digits(std::size_t index) const;
  std::size_t index_of_digits(std::span<const int> digits) const;

  DimensionMultiset at(std::size_t index) const;
  std::size_t index_of(const DimensionMultiset& v) const;

  std::size_t top() const noexcept { return size_ - 1; }
  Integer dim_at(std::size_t index) const;
  int cardinality_at(std::size_t index) const;
  std::size_t complement_index(std::size_t index) const;
  bool contains(std::size_t inner, std::size_t outer) const noexcept;

  friend bool operator==(const SubMultisetLattice& a, const SubMultisetLattice& b) { return a.total_ == b.total_; }

 private:
  DimensionMultiset total_;
  std::vector<int> dimensions_;
  std::vector<int> capacities_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace qweight
