#include "qweight/ame.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qweight/bounds.hpp"
#include "qweight/bundled.hpp"
#include "qweight/io.hpp"
#include "qweight/parallel.hpp"
#include "qweight/simplex.hpp"
#include "qweight/transforms.hpp"

namespace qweight {
namespace {

// 1 / min(dim v, dim N / dim v)
Rational inverse_min_dimension(const Integer& dim_v, const Integer& dim_total) {
  if (dim_v * dim_v <= dim_total) {
    return Rational(1, dim_v);
  }
  Rational r(dim_v, dim_total);
  r.canonicalize();
  return r;
}

Rational inverse_min_dimension(const SubMultisetLattice& lattice, std::size_t index) {
  return inverse_min_dimension(lattice.dim_at(index), lattice.dim_at(lattice.top()));
}

DimensionSpec two_type_spec(int d_small, int n_small, int d_large, int n_large) {
  std::vector<int> dims(static_cast<std::size_t>(n_small), d_small);
  dims.insert(dims.end(), static_cast<std::size_t>(n_large), d_large);
  return DimensionSpec(std::move(dims));
}

class GridSearch {
 public:
  GridSearch(int d1, int d2, int d3)
      : d1_(d1), d2_(d2), d3_(d3), labels_(static_cast<std::size_t>(d1 * d2), -1),
        row_labels_(static_cast<std::size_t>(d1), 0), col_labels_(static_cast<std::size_t>(d2), 0),
        row_cells_(static_cast<std::size_t>(d1), 0), col_cells_(static_cast<std::size_t>(d2), 0) {}

  std::optional<GridSolution> run() {
    if (search(0)) {
      return solution_;
    }
    return std::nullopt;
  }

 private:
  bool search(int cell) {
    const int cells = d1_ * d2_;
    if (cell == cells) {
      return used_ == d3_ && solve_weights();
    }
    if (d3_ - used_ > cells - cell) {
      return false;
    }
    const int row = cell / d2_;
    const int col = cell % d2_;
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    // Labels in first-use order, so labellings are canonical up to renaming.
    const int highest = std::min(used_, d3_ - 1);
    for (int label = 0; label <= highest; ++label) {
      const std::uint64_t bit = std::uint64_t{1} << label;
      if ((row_labels_[r] & bit) || (col_labels_[c] & bit)) {
        continue;
      }
      const int previous_used = used_;
      used_ = std::max(used_, label + 1);
      labels_[static_cast<std::size_t>(cell)] = label;
      row_labels_[r] |= bit;
      col_labels_[c] |= bit;
      ++row_cells_[r];
      ++col_cells_[c];
      if (search(cell + 1)) {
        return true;
      }
      --row_cells_[r];
      --col_cells_[c];
      row_labels_[r] &= ~bit;
      col_labels_[c] &= ~bit;
      labels_[static_cast<std::size_t>(cell)] = -1;
      used_ = previous_used;
    }
    const bool closes_empty_row = col == d2_ - 1 && row_cells_[r] == 0;
    const bool closes_empty_col = row == d1_ - 1 && col_cells_[c] == 0;
    if (closes_empty_row || closes_empty_col) {
      return false;
    }
    return search(cell + 1);
  }

  bool solve_weights() {
    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] >= 0) {
        cells.push_back(i);
      }
    }
    LinearProgram lp;
    lp.variables = cells.size();
    const auto add_sum = [&](auto&& member, const Rational& target) {
      std::vector<Rational> row(cells.size());
      for (std::size_t v = 0; v < cells.size(); ++v) {
        if (member(cells[v])) {
          row[v] = 1;
        }
      }
      lp.constraints.push_back({std::move(row), Relation::Equal, target, ""});
    };
    for (int row = 0; row < d1_; ++row) {
      add_sum([&](std::size_t i) { return static_cast<int>(i) / d2_ == row; }, Rational(1, d1_));
    }
    for (int col = 0; col < d2_; ++col) {
      add_sum([&](std::size_t i) { return static_cast<int>(i) % d2_ == col; }, Rational(1, d2_));
    }
    for (int label = 0; label < d3_; ++label) {
      add_sum([&](std::size_t i) { return labels_[i] == label; }, Rational(1, d3_));
    }
    const SimplexResult result = solve_lp(lp);
    if (result.status != LpStatus::Feasible) {
      return false;
    }
    GridSolution grid;
    grid.d1 = d1_;
    grid.d2 = d2_;
    grid.d3 = d3_;
    grid.weights.assign(labels_.size(), Rational(0));
    grid.labels.assign(labels_.size(), -1);
    grid.phases.assign(labels_.size(), Complex(1.0, 0.0));
    for (std::size_t v = 0; v < cells.size(); ++v) {
      if (result.point[v] > 0) {
        grid.weights[cells[v]] = result.point[v];
        grid.labels[cells[v]] = labels_[cells[v]];
      }
    }
    solution_ = std::move(grid);
    return true;
  }

  int d1_;
  int d2_;
  int d3_;
  int used_ = 0;
  std::vector<int> labels_;
  std::vector<std::uint64_t> row_labels_;
  std::vector<std::uint64_t> col_labels_;
  std::vector<int> row_cells_;
  std::vector<int> col_cells_;
  GridSolution solution_;
};

}  // namespace

Rational ame_calligraphic(const DimensionSpec& spec, IndexSubset subset) {
  return inverse_min_dimension(spec.dim_of(subset), spec.total_dimension());
}

EnumeratorProfile ame_unitary_profile(const DimensionSpec& spec) {
  const SubMultisetLattice lattice(spec.multiset());
  std::vector<Rational> values(lattice.size());
  for (std::size_t w = 0; w < lattice.size(); ++w) {
    Integer count = 1;
    for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
      count *= binomial(lattice.capacities()[slot], lattice.digit(w, slot));
    }
    values[w] = Rational(count) * inverse_min_dimension(lattice, w);
  }
  return EnumeratorProfile(Family::APrime, spec, std::move(values));
}

EnumeratorProfile ame_a_profile(const DimensionSpec& spec) {
  const SubMultisetLattice lattice(spec.multiset());
  std::vector<Rational> values(lattice.size());
  for (std::size_t w = 0; w < lattice.size(); ++w) {
    Integer placements = 1;
    for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
      placements *= binomial(lattice.capacities()[slot], lattice.digit(w, slot));
    }
    Rational sum = 0;
    for (std::size_t v = 0; v < lattice.size(); ++v) {
      if (!lattice.contains(v, w)) {
        continue;
      }
      Integer weight = 1;
      for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
        const int mv = lattice.digit(v, slot);
        weight *= binomial(lattice.digit(w, slot), mv) *
                  power(Integer(lattice.dimensions()[slot]), static_cast<unsigned long>(mv));
      }
      const Rational term = Rational(weight) * inverse_min_dimension(lattice, v);
      const bool negative = (lattice.cardinality_at(w) - lattice.cardinality_at(v)) % 2 != 0;
      sum += negative ? -term : term;
    }
    values[w] = Rational(placements) * sum;
  }
  return EnumeratorProfile(Family::A, spec, std::move(values));
}

EnumeratorProfile ame_shadow_profile(const DimensionSpec& spec) {
  const SubMultisetLattice lattice(spec.multiset());
  std::vector<Rational> values(lattice.size());
  for (std::size_t w = 0; w < lattice.size(); ++w) {
    Rational sum = 0;
    for (std::size_t v = 0; v < lattice.size(); ++v) {
      Integer weight = 1;
      for (std::size_t slot = 0; slot < lattice.slots() && weight != 0; ++slot) {
        const int cap = lattice.capacities()[slot];
        const int mv = lattice.digit(v, slot);
        weight *= krawtchouk(cap - lattice.digit(w, slot), mv, cap) * binomial(cap, mv);
      }
      if (weight != 0) {
        sum += Rational(weight) * inverse_min_dimension(lattice, v);
      }
    }
    values[w] = sum;
  }
  return EnumeratorProfile(Family::S, spec, std::move(values));
}

Rational ame_shadow_empty(const DimensionSpec& spec) {
  const SubMultisetLattice lattice(spec.multiset());
  Rational sum = 0;
  for (std::size_t v = 0; v < lattice.size(); ++v) {
    Integer count = 1;
    for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
      count *= binomial(lattice.capacities()[slot], lattice.digit(v, slot));
    }
    const Rational term = Rational(count) * inverse_min_dimension(lattice, v);
    sum += lattice.cardinality_at(v) % 2 ? -term : term;
  }
  return sum;
}

std::string_view cell_status_name(CellStatus status) {
  switch (status) {
    case CellStatus::Forbidden:
      return "forbidden";
    case CellStatus::Open:
      return "open";
    case CellStatus::KnownExists:
      return "known_exists";
    case CellStatus::KnownNotExists:
      return "known_not_exists";
  }
  return "?";
}

CellStatus parse_cell_status(std::string_view name) {
  for (const auto status : {CellStatus::Forbidden, CellStatus::Open, CellStatus::KnownExists, CellStatus::KnownNotExists}) {
    if (cell_status_name(status) == name) {
      return status;
    }
  }
  throw std::invalid_argument("unknown cell status: " + std::string(name));
}

std::vector<HeatmapAnnotation> bundled_heatmap_annotations() {
  const Json doc = Json::parse(bundled_file("heatmap_annotations.json"));
  std::vector<HeatmapAnnotation> out;
  for (const auto& entry : doc.at("annotations")) {
    out.push_back({multiset_from_json(entry.at("multiset")), parse_cell_status(entry.at("status").get<std::string>()),
                   entry.value("note", std::string())});
  }
  return out;
}

std::vector<HeatmapCell> ame_scan(int d_small, int d_large, int max_parties,
                                  std::span<const HeatmapAnnotation> annotations) {
  if (d_small < 2 || d_large <= d_small) {
    throw std::invalid_argument("ame scan needs 2 <= d_small < d_large");
  }
  if (max_parties < 1) {
    throw std::invalid_argument("max_parties must be positive");
  }
  std::vector<std::pair<int, int>> grid;
  for (int n_small = 0; n_small <= max_parties; ++n_small) {
    for (int n_large = 0; n_small + n_large <= max_parties; ++n_large) {
      if (n_small + n_large > 0) {
        grid.emplace_back(n_small, n_large);
      }
    }
  }
  std::vector<HeatmapCell> cells(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto [n_small, n_large] = grid[i];
    const DimensionSpec spec = two_type_spec(d_small, n_small, d_large, n_large);
    HeatmapCell cell;
    cell.n_small = n_small;
    cell.n_large = n_large;
    const EnumeratorProfile shadow = ame_shadow_profile(spec);
    for (std::size_t w = 0; w < shadow.size(); ++w) {
      if (shadow[w] < 0) {
        cell.witness = shadow.lattice().at(w);
        cell.witness_value = shadow[w];
        break;
      }
    }
    cell.scott_forbidden = scott_violation(spec).has_value();
    const HeatmapAnnotation* annotation = nullptr;
    for (const auto& a : annotations) {
      if (a.multiset == spec.multiset()) {
        annotation = &a;
      }
    }
    if (cell.witness) {
      cell.status = CellStatus::Forbidden;
    } else if (annotation) {
      cell.status = annotation->status;
    }
    if (annotation) {
      cell.annotated = annotation->status;
      cell.note = annotation->note;
    }
    cell.discrepancy = (cell.scott_forbidden && !cell.witness) ||
                       (cell.witness && annotation && annotation->status == CellStatus::KnownExists);
    cells[i] = std::move(cell);
  });
  return cells;
}

std::vector<HeatmapCell> ame_scan(int d_small, int d_large, int max_parties) {
  const auto annotations = bundled_heatmap_annotations();
  return ame_scan(d_small, d_large, max_parties, annotations);
}

std::string heatmap_csv(std::span<const HeatmapCell> cells) {
  std::ostringstream out;
  out << "n_small,n_large,status,witness-multiset\n";
  for (const auto& cell : cells) {
    out << cell.n_small << ',' << cell.n_large << ',' << cell_status_name(cell.status) << ',';
    if (cell.witness) {
      out << '"' << cell.witness->to_string() << '"';
    }
    out << '\n';
  }
  return out.str();
}

void check_grid_hypothesis(int d1, int d2, int d3) {
  if (d1 < 2 || d2 < 2 || d3 < 2) {
    throw std::invalid_argument("grid dimensions must be at least 2");
  }
  if (!(d1 <= d2 && d2 <= d1 * d3 && d3 <= d1 * d2)) {
    throw std::invalid_argument("grid construction requires d1 <= d2 <= d1*d3 and d3 <= d1*d2");
  }
  if (d3 > 63) {
    throw std::invalid_argument("grid construction supports at most 63 labels");
  }
}

std::optional<GridSolution> grid_construct(int d1, int d2, int d3) {
  check_grid_hypothesis(d1, d2, d3);
  return GridSearch(d1, d2, d3).run();
}

void validate_grid(const GridSolution& grid) {
  const auto cells = static_cast<std::size_t>(grid.d1 * grid.d2);
  if (grid.d1 < 1 || grid.d2 < 1 || grid.d3 < 1 || grid.weights.size() != cells || grid.labels.size() != cells) {
    throw std::invalid_argument("grid shape does not match its dimensions");
  }
  if (!grid.phases.empty() && grid.phases.size() != cells) {
    throw std::invalid_argument("grid phases do not match its shape");
  }
  std::vector<Rational> rows(static_cast<std::size_t>(grid.d1));
  std::vector<Rational> cols(static_cast<std::size_t>(grid.d2));
  std::vector<Rational> labels(static_cast<std::size_t>(grid.d3));
  for (int r = 0; r < grid.d1; ++r) {
    for (int c = 0; c < grid.d2; ++c) {
      const Rational& w = grid.weight(r, c);
      const int label = grid.label(r, c);
      if (w < 0) {
        throw std::invalid_argument("negative grid weight");
      }
      if (label < -1 || label >= grid.d3) {
        throw std::invalid_argument("grid label out of range");
      }
      if ((label == -1) != (w == 0)) {
        throw std::invalid_argument("non-zero cells must carry a label and zero cells must not");
      }
      rows[static_cast<std::size_t>(r)] += w;
      cols[static_cast<std::size_t>(c)] += w;
      if (label >= 0) {
        labels[static_cast<std::size_t>(label)] += w;
        for (int c2 = c + 1; c2 < grid.d2; ++c2) {
          if (grid.label(r, c2) == label) {
            throw std::invalid_argument("label " + std::to_string(label) + " repeats in row " + std::to_string(r));
          }
        }
        for (int r2 = r + 1; r2 < grid.d1; ++r2) {
          if (grid.label(r2, c) == label) {
            throw std::invalid_argument("label " + std::to_string(label) + " repeats in column " + std::to_string(c));
          }
        }
      }
    }
  }
  for (const auto& s : rows) {
    if (s != Rational(1, grid.d1)) {
      throw std::invalid_argument("row sum differs from 1/d1");
    }
  }
  for (const auto& s : cols) {
    if (s != Rational(1, grid.d2)) {
      throw std::invalid_argument("column sum differs from 1/d2");
    }
  }
  for (const auto& s : labels) {
    if (s != Rational(1, grid.d3)) {
      throw std::invalid_argument("label sum differs from 1/d3");
    }
  }
}

MixedState grid_to_state(const GridSolution& grid) {
  validate_grid(grid);
  const DimensionSpec spec{grid.d1, grid.d2, grid.d3};
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(spec.hilbert_dimension()));
  for (int r = 0; r < grid.d1; ++r) {
    for (int c = 0; c < grid.d2; ++c) {
      const int label = grid.label(r, c);
      if (label < 0) {
        continue;
      }
      const auto cell = static_cast<std::size_t>(r * grid.d2 + c);
      const Complex phase = grid.phases.empty() ? Complex(1.0) : grid.phases[cell];
      const std::vector<int> digits{r, c, label};
      amps(static_cast<Eigen::Index>(basis_index(spec, digits))) = std::sqrt(to_double(grid.weights[cell])) * phase;
    }
  }
  return MixedState::normalized(spec, std::move(amps));
}

AmeReport ame_verify(const MixedState& state, double tolerance) {
  const DimensionSpec& spec = state.spec();
  const Integer total = spec.total_dimension();
  AmeReport report;
  const std::size_t subsets = std::size_t{1} << spec.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const IndexSubset subset(mask);
    const Integer dim = spec.dim_of(subset);
    if (dim * dim > total) {
      continue;
    }
    const ComplexMatrix reduced = partial_trace(state, subset).matrix();
    const auto n = reduced.rows();
    const ComplexMatrix target = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    const double deviation = (reduced - target).cwiseAbs().maxCoeff();
    report.max_deviation = std::max(report.max_deviation, deviation);
    if (deviation > tolerance) {
      report.failing_subsets.push_back(subset);
    }
  }
  report.is_ame = report.failing_subsets.empty();
  return report;
}

}  // namespace qweight
