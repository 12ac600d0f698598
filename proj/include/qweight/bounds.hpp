#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweight/multiset.hpp"

namespace qweight {

/// Parameters ((spec), K, D) of a code with dimensional distance D.
struct CodeParams {
  DimensionSpec spec;
  Integer code_dimension;   // K >= 1
  Integer distance;         // D >= 1
  bool pure = false;

  void validate() const;
};

struct BoundVerdict {
  std::string bound_name;
  bool holds = true;
  std::string witness;
  std::vector<DimensionMultiset> witness_multisets;
  Rational lhs;
  Rational rhs;
};

/// Largest T with T^2 < D.
Integer max_correctable_threshold(const Integer& distance);

/// sum over v with dim v <= T of prod_d C(m_d(N), m_d(v)) (d^2 - 1)^(m_d(v)).
Integer hamming_volume(const DimensionMultiset& total, const Integer& threshold);

/// floor(dim N / hamming_volume(N, T)).
Integer hamming_max_k(const DimensionSpec& spec, const Integer& threshold);

/// Hamming verdict for params, using max_correctable_threshold(D); lhs is K
/// and rhs the largest K allowed.
BoundVerdict hamming_check(const CodeParams& params);

/// Smallest dim w3 over tri-partitions N = w1 + w2 + w3 with dim w1 < D and
/// dim w2 < D, with the minimising partition.
struct SingletonBound {
  Integer max_k;
  DimensionMultiset w1;
  DimensionMultiset w2;
  DimensionMultiset w3;
};
SingletonBound singleton_max_k(const DimensionSpec& spec, const Integer& distance);
BoundVerdict singleton_check(const CodeParams& params);

/// floor(dim N / (max dim s)^2) over proper s with dim s < D.
Integer pure_singleton_max_k(const DimensionSpec& spec, const Integer& distance);
BoundVerdict pure_singleton_check(const CodeParams& params);

/// One verdict per admissible pair w1 < w2 in the absolutely-maximally-
/// entangled setting; a verdict that does not hold rules such a state out.
std::vector<BoundVerdict> scott_check(const DimensionSpec& spec);
std::optional<BoundVerdict> scott_violation(const DimensionSpec& spec);
/// Same checks on a bare dimension multiset; not limited by the site count of DimensionSpec.
std::vector<BoundVerdict> scott_check(const DimensionMultiset& system);
std::optional<BoundVerdict> scott_violation(const DimensionMultiset& system);

/// Largest n of the given parity for which the homogeneous Scott inequality
/// allows an absolutely maximally entangled state of n sites of dimension d.
long scott_homogeneous_max_n(long local_dimension, bool even);

}  // namespace qweight
