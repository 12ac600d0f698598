#include <doctest.h>

#include <cstdlib>

#include "../support/oracle.hpp"
#include "qweight/multiset.hpp"
#include "qweight/rational.hpp"

using namespace qweight;

namespace {
DimensionMultiset ms(std::initializer_list<int> dims) { return DimensionMultiset::from_dimensions(dims); }
}  // namespace

TEST_CASE("dim_of multiplies the local dimensions") {
  CHECK(dim_of(DimensionMultiset{}) == 1);
  CHECK(dim_of(ms({2, 3, 3, 3})) == 54);
  CHECK(dim_of(ms({2, 2, 5})) == 20);
}

TEST_CASE("multisets are canonical") {
  const auto v = ms({3, 2, 3});
  CHECK(v == ms({2, 3, 3}));
  CHECK(v.to_string() == "{2,3,3}");
  CHECK(v.cardinality() == 3);
  CHECK(v.multiplicity(3) == 2);
  CHECK(v.multiplicity(5) == 0);
  CHECK(DimensionMultiset{}.to_string() == "{}");
  CHECK(ms({2}) + ms({3, 2}) == ms({2, 2, 3}));
  CHECK(ms({2, 3}).is_subset_of(ms({2, 3, 3})));
  CHECK_FALSE(ms({2, 2}).is_subset_of(ms({2, 3, 3})));
  CHECK_THROWS_AS(DimensionMultiset(std::map<int, int>{{1, 2}}), std::invalid_argument);
}

TEST_CASE("sub_multisets enumerates the lattice") {
  CHECK(sub_multisets(ms({2})) == std::vector{DimensionMultiset{}, ms({2})});
  const auto rows = sub_multisets(ms({2, 3, 3, 3}));
  REQUIRE(rows.size() == 8);
  const std::vector<DimensionMultiset> expected{
      {}, ms({2}), ms({3}), ms({2, 3}), ms({3, 3}), ms({2, 3, 3}), ms({3, 3, 3}), ms({2, 3, 3, 3})};
  CHECK(rows == expected);
  CHECK(sub_multisets(ms({3, 3, 4, 4})).size() == 9);
}

TEST_CASE("lattice indexing is consistent") {
  for (const auto& total : {ms({2, 3, 3, 3}), ms({2, 2, 3, 4, 4}), DimensionMultiset{}, ms({5})}) {
    const SubMultisetLattice lattice(total);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto v = lattice.at(i);
      CHECK(lattice.index_of(v) == i);
      CHECK(lattice.dim_at(i) == dim_of(v));
      CHECK(lattice.cardinality_at(i) == v.cardinality());
      CHECK(lattice.at(lattice.complement_index(i)) == complement(v, total));
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        CHECK(lattice.contains(i, j) == v.is_subset_of(lattice.at(j)));
      }
    }
    CHECK(lattice.at(lattice.top()) == total);
  }
  CHECK_THROWS(SubMultisetLattice(ms({2, 3})).index_of(ms({5})));
}

TEST_CASE("count_supersets examples") {
  CHECK(count_supersets({}, ms({2, 3}), ms({2, 3, 3, 3})) == 3);
  CHECK(count_supersets(ms({2}), ms({2}), ms({2, 2, 7})) == 1);
  CHECK(count_supersets({}, ms({2}), ms({2, 2, 7})) == 2);
  CHECK(count_supersets(ms({3}), ms({2}), ms({2, 3})) == 0);
}

TEST_CASE("count_supersets agrees with subset enumeration") {
  for (const auto& total : {ms({2, 3, 3, 3}), ms({2, 2, 3, 4}), ms({2, 2, 2, 3, 3}), ms({3, 3, 4, 4})}) {
    for (const auto& v : sub_multisets(total)) {
      for (const auto& w : sub_multisets(total)) {
        CAPTURE(v.to_string());
        CAPTURE(w.to_string());
        CHECK(count_supersets(v, w, total) == oracle::count_supersets_by_enumeration(v, w, total));
      }
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement({}, ms({2, 3, 3})) == ms({2, 3, 3}));
  CHECK(complement(ms({3}), ms({2, 3, 3, 3})) == ms({2, 3, 3}));
  CHECK(complement(ms({2, 3}), ms({2, 2, 3, 3})) == ms({2, 3}));
  CHECK_THROWS_AS(complement(ms({4}), ms({2, 3})), std::invalid_argument);
}

TEST_CASE("binomial is zero outside its range") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("index subsets print 1-based") {
  const auto s = IndexSubset::from_sites({0, 2});
  CHECK(s.to_string() == "{1,3}");
  CHECK(s.size() == 2);
  CHECK(s.complement(4) == IndexSubset::from_sites({1, 3}));
  CHECK(IndexSubset::all(3).mask() == 7);
  CHECK(IndexSubset::from_sites({1}).is_subset_of(IndexSubset::all(2)));
}

TEST_CASE("dimension spec") {
  const DimensionSpec spec{2, 3, 3, 4};
  CHECK(spec.total_dimension() == 72);
  CHECK(spec.hilbert_dimension() == 72);
  CHECK(spec.multiset() == ms({2, 3, 3, 4}));
  CHECK(spec.multiset_of(IndexSubset::from_sites({0, 3})) == ms({2, 4}));
  CHECK(spec.dim_of(IndexSubset::from_sites({1, 2})) == 9);
  CHECK(spec.restricted_to(IndexSubset::from_sites({1, 3})) == DimensionSpec{3, 4});
  CHECK_THROWS_AS(DimensionSpec(std::vector<int>{2, 1}), std::invalid_argument);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_string(parse_rational(" -10/4 ")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(power(Integer(3), 4) == 81);
}

TEST_CASE("snap recovers small-denominator rationals") {
  CHECK(snap(0.1) == make_rational(1, 10));
  CHECK(snap(1.0 / 3.0) == make_rational(1, 3));
  CHECK(snap(-95.0 / 6.0) == make_rational(-95, 6));
  CHECK(snap(27.0 / 2.0 + 1e-12) == make_rational(27, 2));
  CHECK(snap(0.0) == 0);
  CHECK(snap(3.14159, 100, 1e-2) == make_rational(311, 99));
  CHECK_THROWS_AS(snap(3.14159265358979, 100), NumericPrecisionError);
  CHECK_THROWS_AS(snap(std::nan("")), NumericPrecisionError);
}

TEST_CASE("snap is closest with bounded denominator") {
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational target = oracle::random_rational(rng, 5000, 5000);
    CHECK(snap(target.get_d()) == target);
  }
}
