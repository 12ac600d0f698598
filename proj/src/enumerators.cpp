#include "qweight/enumerators.hpp"

#include <cmath>
#include <stdexcept>

#include "qweight/parallel.hpp"

namespace qweight {
namespace {

void require_same_system(const Operand& m, const Operand& n) {
  if (operand_spec(m) != operand_spec(n)) {
    throw std::invalid_argument("operands live on different systems");
  }
}

ComplexMatrix as_matrix(const Operand& op) {
  if (const auto* state = std::get_if<MixedState>(&op)) {
    return state->amplitudes() * state->amplitudes().adjoint();
  }
  return std::get<DensityOperator>(op).matrix();
}

Complex operand_trace(const Operand& op) {
  if (std::holds_alternative<MixedState>(op)) {
    return 1.0;
  }
  return std::get<DensityOperator>(op).trace();
}

ComplexMatrix reduced_matrix(const Operand& op, IndexSubset keep) {
  if (const auto* state = std::get_if<MixedState>(&op)) {
    return partial_trace(*state, keep).matrix();
  }
  return partial_trace(std::get<DensityOperator>(op), keep).matrix();
}

double trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x.cwiseProduct(y.transpose()).sum().real();
}

// Visits every label vector whose support is exactly `support`.
template <typename Visitor>
void for_each_error(const DimensionSpec& spec, IndexSubset support, Visitor&& visit) {
  const auto sites = support.sites();
  std::vector<int> label(sites.size(), 1);
  std::vector<std::pair<int, int>> labels(static_cast<std::size_t>(spec.size()), {0, 0});
  while (true) {
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const int d = spec.dim(sites[i]);
      labels[static_cast<std::size_t>(sites[i])] = {label[i] % d, label[i] / d};
    }
    visit(std::span<const std::pair<int, int>>(labels));
    std::size_t pos = sites.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      const int d = spec.dim(sites[pos]);
      if (label[pos] + 1 < d * d) {
        ++label[pos];
        advanced = true;
        break;
      }
      label[pos] = 1;
    }
    if (!advanced) {
      return;
    }
  }
}

struct MaskSums {
  double a = 0.0;
  double b = 0.0;
};

MaskSums sums_for_states(const MonomialActionBuilder& builder, const DimensionSpec& spec, IndexSubset support,
                         const ComplexVector& u, const ComplexVector& v) {
  MaskSums sums;
  MonomialAction action;
  const std::size_t dim = builder.dimension();
  for_each_error(spec, support, [&](std::span<const std::pair<int, int>> labels) {
    builder.build(labels, action);
    Complex eu_u = 0.0;  // <u|E|u>
    Complex ev_v = 0.0;  // <v|E|v>
    Complex ev_u = 0.0;  // <v|E|u>
    for (std::size_t x = 0; x < dim; ++x) {
      const auto xi = static_cast<Eigen::Index>(x);
      const auto ti = static_cast<Eigen::Index>(action.target[x]);
      const Complex pu = action.phase[x] * u(xi);
      eu_u += std::conj(u(ti)) * pu;
      ev_v += std::conj(v(ti)) * action.phase[x] * v(xi);
      ev_u += std::conj(v(ti)) * pu;
    }
    sums.a += (eu_u * std::conj(ev_v)).real();
    sums.b += std::norm(ev_u);
  });
  return sums;
}

MaskSums sums_for_matrices(const MonomialActionBuilder& builder, const DimensionSpec& spec, IndexSubset support,
                           const ComplexMatrix& m, const ComplexMatrix& n) {
  MaskSums sums;
  MonomialAction action;
  const std::size_t dim = builder.dimension();
  for_each_error(spec, support, [&](std::span<const std::pair<int, int>> labels) {
    builder.build(labels, action);
    Complex tr_em = 0.0;
    Complex tr_edag_n = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
      const auto xi = static_cast<Eigen::Index>(x);
      const auto ti = static_cast<Eigen::Index>(action.target[x]);
      tr_em += action.phase[x] * m(xi, ti);
      tr_edag_n += std::conj(action.phase[x]) * n(ti, xi);
    }
    Complex tr_b = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
      const auto xi = static_cast<Eigen::Index>(x);
      const auto tx = static_cast<Eigen::Index>(action.target[x]);
      for (std::size_t y = 0; y < dim; ++y) {
        const auto yi = static_cast<Eigen::Index>(y);
        const auto ty = static_cast<Eigen::Index>(action.target[y]);
        tr_b += action.phase[x] * m(xi, yi) * std::conj(action.phase[y]) * n(ty, tx);
      }
    }
    sums.a += (tr_em * tr_edag_n).real();
    sums.b += tr_b.real();
  });
  return sums;
}

std::vector<Rational> snap_all(const std::vector<double>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const double v : values) {
    out.push_back(snap(v));
  }
  return out;
}

}  // namespace

const DimensionSpec& operand_spec(const Operand& op) {
  return std::visit([](const auto& o) -> const DimensionSpec& { return o.spec(); }, op);
}

RealEnumerators shor_laflamme_real(const Operand& m, const Operand& n) {
  require_same_system(m, n);
  const DimensionSpec& spec = operand_spec(m);
  const MonomialActionBuilder builder(spec);
  const std::size_t subsets = std::size_t{1} << spec.size();
  std::vector<MaskSums> per_mask(subsets);

  const bool pure = std::holds_alternative<MixedState>(m) && std::holds_alternative<MixedState>(n);
  if (pure) {
    const auto& u = std::get<MixedState>(m).amplitudes();
    const auto& v = std::get<MixedState>(n).amplitudes();
    parallel_for(subsets, [&](std::size_t mask) {
      per_mask[mask] = sums_for_states(builder, spec, IndexSubset(mask), u, v);
    });
  } else {
    const ComplexMatrix mm = as_matrix(m);
    const ComplexMatrix nn = as_matrix(n);
    parallel_for(subsets, [&](std::size_t mask) {
      per_mask[mask] = sums_for_matrices(builder, spec, IndexSubset(mask), mm, nn);
    });
  }

  RealEnumerators out{SubMultisetLattice(spec.multiset()), {}, {}};
  out.a.assign(out.lattice.size(), 0.0);
  out.b.assign(out.lattice.size(), 0.0);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const auto idx = out.lattice.index_of(spec.multiset_of(IndexSubset(mask)));
    out.a[idx] += per_mask[mask].a;
    out.b[idx] += per_mask[mask].b;
  }
  return out;
}

std::pair<EnumeratorProfile, EnumeratorProfile> shor_laflamme_profiles(const Operand& m, const Operand& n) {
  const RealEnumerators real = shor_laflamme_real(m, n);
  const DimensionSpec& spec = operand_spec(m);
  return {EnumeratorProfile(Family::A, spec, snap_all(real.a)),
          EnumeratorProfile(Family::B, spec, snap_all(real.b))};
}

RealCalligraphic calligraphic_real(const Operand& m, const Operand& n) {
  require_same_system(m, n);
  const DimensionSpec& spec = operand_spec(m);
  const std::size_t subsets = std::size_t{1} << spec.size();
  const std::uint64_t full = IndexSubset::all(spec.size()).mask();
  std::vector<double> per_subset(subsets);
  parallel_for(subsets, [&](std::size_t mask) {
    if (mask == 0) {
      per_subset[mask] = (operand_trace(m) * operand_trace(n)).real();
      return;
    }
    const IndexSubset keep(mask);
    per_subset[mask] = trace_of_product(reduced_matrix(m, keep), reduced_matrix(n, keep));
  });
  RealCalligraphic out{spec, per_subset, std::vector<double>(subsets)};
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    out.b_prime[mask] = per_subset[full & ~static_cast<std::uint64_t>(mask)];
  }
  return out;
}

CalligraphicTable calligraphic_profile(const Operand& m, const Operand& n) {
  const RealCalligraphic real = calligraphic_real(m, n);
  return {real.spec, snap_all(real.a_prime), snap_all(real.b_prime)};
}

std::pair<EnumeratorProfile, EnumeratorProfile> unitary_profiles(const Operand& m, const Operand& n) {
  const RealCalligraphic real = calligraphic_real(m, n);
  const DimensionSpec& spec = real.spec;
  const SubMultisetLattice lattice(spec.multiset());
  std::vector<double> a(lattice.size(), 0.0);
  std::vector<double> b(lattice.size(), 0.0);
  for (std::size_t mask = 0; mask < real.a_prime.size(); ++mask) {
    const auto idx = lattice.index_of(spec.multiset_of(IndexSubset(mask)));
    a[idx] += real.a_prime[mask];
    b[idx] += real.b_prime[mask];
  }
  return {EnumeratorProfile(Family::APrime, spec, snap_all(a)),
          EnumeratorProfile(Family::BPrime, spec, snap_all(b))};
}

EnumeratorProfile shadow_profile_brute(const Operand& m, const Operand& n) {
  const RealCalligraphic real = calligraphic_real(m, n);
  const DimensionSpec& spec = real.spec;
  const SubMultisetLattice lattice(spec.multiset());
  const std::size_t subsets = real.a_prime.size();
  const std::uint64_t full = IndexSubset::all(spec.size()).mask();
  std::vector<double> s(lattice.size(), 0.0);
  for (std::size_t t = 0; t < subsets; ++t) {
    const std::uint64_t outside = full & ~static_cast<std::uint64_t>(t);
    double sum = 0.0;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      const int sign_count = IndexSubset(static_cast<std::uint64_t>(mask) & outside).size();
      sum += (sign_count % 2 ? -1.0 : 1.0) * real.a_prime[mask];
    }
    s[lattice.index_of(spec.multiset_of(IndexSubset(t)))] += sum;
  }
  return EnumeratorProfile(Family::S, spec, snap_all(s));
}

CodeReport check_code(const DensityOperator& projector, const Integer& distance) {
  const ComplexMatrix& p = projector.matrix();
  if ((p * p - p).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("operator is not an orthogonal projector");
  }
  const double trace = projector.trace().real();
  CodeReport report;
  report.rank = std::lround(trace);
  if (report.rank < 1 || std::abs(trace - static_cast<double>(report.rank)) > 1e-9) {
    throw std::invalid_argument("projector trace is not a positive integer");
  }
  const Operand op = projector;
  const RealEnumerators real = shor_laflamme_real(op, op);
  const double k = static_cast<double>(report.rank);
  const double tolerance = 1e-8 * std::max(1.0, k * k);
  for (std::size_t i = 0; i < real.lattice.size(); ++i) {
    if (real.lattice.dim_at(i) >= distance) {
      continue;
    }
    if (std::abs(k * real.b[i] - real.a[i]) > tolerance) {
      report.code_witnesses.push_back(real.lattice.at(i));
    }
    if (i != 0 && std::abs(real.a[i]) > tolerance) {
      report.purity_witnesses.push_back(real.lattice.at(i));
    }
  }
  report.is_code = report.code_witnesses.empty();
  report.is_pure = report.is_code && report.purity_witnesses.empty();
  return report;
}

}  // namespace qweight
