#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qweight/hilbert.hpp"
#include "qweight/profile.hpp"

namespace qweight {

// Profiles forced on any absolutely maximally entangled state of a system.

/// 1 / min(dim S, dim S^c).
Rational ame_calligraphic(const DimensionSpec& spec, IndexSubset subset);
EnumeratorProfile ame_unitary_profile(const DimensionSpec& spec);
/// A (equal to B for a pure state).
EnumeratorProfile ame_a_profile(const DimensionSpec& spec);
EnumeratorProfile ame_shadow_profile(const DimensionSpec& spec);
/// Shadow coefficient of the empty multiset via its alternating-sum form.
Rational ame_shadow_empty(const DimensionSpec& spec);

enum class CellStatus { Forbidden, Open, KnownExists, KnownNotExists };
std::string_view cell_status_name(CellStatus status);
CellStatus parse_cell_status(std::string_view name);

struct HeatmapAnnotation {
  DimensionMultiset multiset;
  CellStatus status;
  std::string note;
};

/// Annotations shipped in data/heatmap_annotations.json.
std::vector<HeatmapAnnotation> bundled_heatmap_annotations();

struct HeatmapCell {
  int n_small = 0;
  int n_large = 0;
  CellStatus status = CellStatus::Open;
  std::optional<DimensionMultiset> witness;  // first w with S_w < 0
  Rational witness_value;
  std::optional<CellStatus> annotated;  // status recorded in the annotations
  bool scott_forbidden = false;
  /// Scott rules the cell out while the shadow test does not, or a
  /// known-existing annotation sits on a forbidden cell.
  bool discrepancy = false;
  std::string note;
};

/// Shadow test for every system of n_small sites of dimension d_small and
/// n_large of dimension d_large with 1 <= n_small + n_large <= max_parties.
std::vector<HeatmapCell> ame_scan(int d_small, int d_large, int max_parties,
                                  std::span<const HeatmapAnnotation> annotations);
std::vector<HeatmapCell> ame_scan(int d_small, int d_large, int max_parties);

/// CSV with columns n_small,n_large,status,witness-multiset.
std::string heatmap_csv(std::span<const HeatmapCell> cells);

/// Weighted d1 x d2 grid whose labelled cells define a tripartite state
/// sum sqrt(a_jk) phase_jk |j, k, label_jk>.
struct GridSolution {
  int d1 = 0;
  int d2 = 0;
  int d3 = 0;
  std::vector<Rational> weights;  // row-major d1 x d2
  std::vector<int> labels;        // row-major, -1 for an empty cell
  std::vector<Complex> phases;    // row-major, defaults to 1

  const Rational& weight(int row, int col) const { return weights.at(static_cast<std::size_t>(row * d2 + col)); }
  int label(int row, int col) const { return labels.at(static_cast<std::size_t>(row * d2 + col)); }
};

/// Throws std::invalid_argument unless d1 <= d2 <= d1 d3 and d3 <= d1 d2.
void check_grid_hypothesis(int d1, int d2, int d3);

/// Depth-first search over labellings with an exact LP for the weights.
/// nullopt means no grid construction found for these dimensions.
std::optional<GridSolution> grid_construct(int d1, int d2, int d3);

/// Throws std::invalid_argument describing the first violated grid rule.
void validate_grid(const GridSolution& grid);

MixedState grid_to_state(const GridSolution& grid);

struct AmeReport {
  bool is_ame = false;
  std::vector<IndexSubset> failing_subsets;
  double max_deviation = 0.0;
};

/// Checks that every reduction to sites S with (dim S)^2 <= dim N is
/// maximally mixed.
AmeReport ame_verify(const MixedState& state, double tolerance = 1e-9);

}  // namespace qweight
