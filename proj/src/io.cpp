#include "qweight/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qweight {
namespace {

constexpr int max_state_dimension = 36;

std::string ket_string(const DimensionSpec& spec, std::span<const int> digits) {
  const bool compact = std::all_of(spec.dims().begin(), spec.dims().end(), [](int d) { return d <= 10; });
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + digits[i]);
    } else {
      out += (i ? "," : "") + std::to_string(digits[i]);
    }
  }
  return out;
}

std::vector<int> parse_ket(const DimensionSpec& spec, const std::string& ket) {
  std::vector<int> digits;
  if (ket.find(',') != std::string::npos) {
    std::stringstream in(ket);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        digits.push_back(std::stoi(item, &used));
        if (used != item.size()) {
          throw std::invalid_argument(item);
        }
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed ket '" + ket + "'");
      }
    }
  } else {
    for (const char ch : ket) {
      if (ch >= '0' && ch <= '9') {
        digits.push_back(ch - '0');
      } else if (ch >= 'a' && ch <= 'z') {
        digits.push_back(10 + ch - 'a');
      } else {
        throw std::invalid_argument("malformed ket '" + ket + "'");
      }
    }
  }
  if (digits.size() != static_cast<std::size_t>(spec.size())) {
    throw std::invalid_argument("ket '" + ket + "' does not have one digit per site");
  }
  return digits;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(Integer(std::to_string(j.get<long long>())));
  }
  throw std::invalid_argument("expected a rational given as \"p/q\"");
}

Json subset_to_json(IndexSubset s) {
  Json out = Json::array();
  for (const int site : s.sites()) {
    out.push_back(site + 1);
  }
  return out;
}

}  // namespace

Json multiset_to_json(const DimensionMultiset& v) {
  Json out = Json::object();
  for (const auto& [d, m] : v.entries()) {
    out[std::to_string(d)] = m;
  }
  return out;
}

DimensionMultiset multiset_from_json(const Json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("a dimension multiset must be a JSON object");
  }
  std::map<int, int> counts;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || used == 0) {
      throw std::invalid_argument("multiset key '" + key + "' is not an integer");
    }
    counts[d] = value.get<int>();
  }
  return DimensionMultiset(counts);
}

Json spec_to_json(const DimensionSpec& spec) { return Json(std::vector<int>(spec.dims().begin(), spec.dims().end())); }

DimensionSpec spec_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("a dimension spec must be a JSON array");
  }
  return DimensionSpec(j.get<std::vector<int>>());
}

Json state_to_json(const MixedState& state) {
  Json terms = Json::array();
  const auto& amps = state.amplitudes();
  for (Eigen::Index x = 0; x < amps.size(); ++x) {
    if (std::abs(amps(x)) == 0.0) {
      continue;
    }
    const auto digits = basis_digits(state.spec(), static_cast<std::size_t>(x));
    terms.push_back({{"ket", ket_string(state.spec(), digits)}, {"amp_re", amps(x).real()}, {"amp_im", amps(x).imag()}});
  }
  return {{"dims", spec_to_json(state.spec())}, {"terms", terms}};
}

MixedState state_from_json(const Json& j) {
  const DimensionSpec spec = spec_from_json(j.at("dims"));
  for (const int d : spec.dims()) {
    if (d > max_state_dimension) {
      throw std::invalid_argument("state files support local dimensions up to 36");
    }
  }
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(spec.hilbert_dimension()));
  std::vector<bool> seen(static_cast<std::size_t>(amps.size()), false);
  for (const auto& term : j.at("terms")) {
    const std::string ket = term.at("ket").get<std::string>();
    const auto index = basis_index(spec, parse_ket(spec, ket));
    if (seen[index]) {
      throw std::invalid_argument("ket '" + ket + "' appears twice");
    }
    seen[index] = true;
    amps(static_cast<Eigen::Index>(index)) = Complex(term.value("amp_re", 0.0), term.value("amp_im", 0.0));
  }
  if (j.value("normalize", false)) {
    return MixedState::normalized(spec, std::move(amps));
  }
  return MixedState(spec, std::move(amps));
}

Json profile_to_json(const EnumeratorProfile& profile) {
  Json values = Json::array();
  for (std::size_t i = 0; i < profile.size(); ++i) {
    values.push_back({{"multiset", multiset_to_json(profile.lattice().at(i))}, {"value", to_string(profile[i])}});
  }
  return {{"family", std::string(family_name(profile.family()))}, {"dims", spec_to_json(profile.spec())}, {"values", values}};
}

EnumeratorProfile profile_from_json(const Json& j) {
  const Family family = parse_family(j.at("family").get<std::string>());
  EnumeratorProfile profile = EnumeratorProfile::zeros(family, spec_from_json(j.at("dims")));
  std::vector<bool> seen(profile.size(), false);
  for (const auto& entry : j.at("values")) {
    const auto index = profile.lattice().index_of(multiset_from_json(entry.at("multiset")));
    if (seen[index]) {
      throw std::invalid_argument("profile lists a multiset twice");
    }
    seen[index] = true;
    profile[index] = rational_from_json(entry.at("value"));
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw std::invalid_argument("profile misses multiset " + profile.lattice().at(i).to_string());
    }
  }
  return profile;
}

Json calligraphic_to_json(const CalligraphicTable& table) {
  Json values = Json::array();
  for (std::size_t mask = 0; mask < table.a_prime.size(); ++mask) {
    values.push_back({{"subset", subset_to_json(IndexSubset(mask))},
                      {"A'", to_string(table.a_prime[mask])},
                      {"B'", to_string(table.b_prime[mask])}});
  }
  return {{"family", "calligraphic"}, {"dims", spec_to_json(table.spec)}, {"values", values}};
}

Json grid_to_json(const GridSolution& grid) {
  Json weights = Json::array();
  Json labels = Json::array();
  for (int r = 0; r < grid.d1; ++r) {
    Json wrow = Json::array();
    Json lrow = Json::array();
    for (int c = 0; c < grid.d2; ++c) {
      wrow.push_back(to_string(grid.weight(r, c)));
      lrow.push_back(grid.label(r, c));
    }
    weights.push_back(wrow);
    labels.push_back(lrow);
  }
  Json out = {{"d", {grid.d1, grid.d2, grid.d3}}, {"weights", weights}, {"labels", labels}};
  const bool trivial_phases = std::all_of(grid.phases.begin(), grid.phases.end(), [](Complex p) { return p == Complex(1.0); });
  if (!trivial_phases) {
    Json phases = Json::array();
    for (const auto& p : grid.phases) {
      phases.push_back({p.real(), p.imag()});
    }
    out["phases"] = phases;
  }
  return out;
}

GridSolution grid_from_json(const Json& j) {
  const auto d = j.at("d").get<std::vector<int>>();
  if (d.size() != 3) {
    throw std::invalid_argument("grid needs three dimensions");
  }
  GridSolution grid;
  grid.d1 = d[0];
  grid.d2 = d[1];
  grid.d3 = d[2];
  const auto& weights = j.at("weights");
  const auto& labels = j.at("labels");
  if (weights.size() != static_cast<std::size_t>(grid.d1) || labels.size() != static_cast<std::size_t>(grid.d1)) {
    throw std::invalid_argument("grid needs d1 rows");
  }
  for (int r = 0; r < grid.d1; ++r) {
    const auto& wrow = weights.at(static_cast<std::size_t>(r));
    const auto& lrow = labels.at(static_cast<std::size_t>(r));
    if (wrow.size() != static_cast<std::size_t>(grid.d2) || lrow.size() != static_cast<std::size_t>(grid.d2)) {
      throw std::invalid_argument("grid needs d2 columns");
    }
    for (int c = 0; c < grid.d2; ++c) {
      grid.weights.push_back(rational_from_json(wrow.at(static_cast<std::size_t>(c))));
      grid.labels.push_back(lrow.at(static_cast<std::size_t>(c)).get<int>());
    }
  }
  if (j.contains("phases")) {
    for (const auto& p : j.at("phases")) {
      grid.phases.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
  } else {
    grid.phases.assign(grid.weights.size(), Complex(1.0));
  }
  return grid;
}

Json verdict_to_json(const BoundVerdict& verdict) {
  Json out = {{"bound", verdict.bound_name},
              {"holds", verdict.holds},
              {"lhs", to_string(verdict.lhs)},
              {"rhs", to_string(verdict.rhs)}};
  if (!verdict.witness.empty()) {
    out["witness"] = verdict.witness;
  }
  if (!verdict.witness_multisets.empty()) {
    Json ms = Json::array();
    for (const auto& m : verdict.witness_multisets) {
      ms.push_back(multiset_to_json(m));
    }
    out["witness_multisets"] = ms;
  }
  return out;
}

Json lp_verdict_to_json(const CodeLp& lp, const LpVerdict& verdict) {
  Json out = {{"dims", spec_to_json(lp.params.spec)},
              {"K", to_string(lp.params.code_dimension)},
              {"D", to_string(lp.params.distance)},
              {"pure", lp.params.pure},
              {"feasible", verdict.feasible}};
  if (verdict.unbounded) {
    out["unbounded"] = true;
  }
  if (verdict.feasible && !verdict.point.empty()) {
    Json point = Json::array();
    for (std::size_t i = 0; i < verdict.point.size(); ++i) {
      point.push_back({{"multiset", multiset_to_json(lp.lattice.at(i))}, {"A", to_string(verdict.point[i])}});
    }
    out["point"] = point;
  }
  if (verdict.objective) {
    out["objective"] = to_string(*verdict.objective);
  }
  if (!verdict.feasible) {
    Json witness = Json::array();
    for (std::size_t i = 0; i < verdict.multipliers.size(); ++i) {
      if (verdict.multipliers[i] != 0) {
        witness.push_back({{"constraint", lp.program.constraints[i].label}, {"multiplier", to_string(verdict.multipliers[i])}});
      }
    }
    out["witness"] = {{"multipliers", witness}, {"gap", verdict.gap ? to_string(*verdict.gap) : ""}, {"verified", verdict.gap.has_value()}};
  }
  return out;
}

Json ame_report_to_json(const AmeReport& report) {
  Json failing = Json::array();
  for (const auto& s : report.failing_subsets) {
    failing.push_back(subset_to_json(s));
  }
  return {{"is_ame", report.is_ame}, {"failing_subsets", failing}, {"max_deviation", report.max_deviation}};
}

Json code_report_to_json(const CodeReport& report) {
  Json code = Json::array();
  for (const auto& w : report.code_witnesses) {
    code.push_back(multiset_to_json(w));
  }
  Json purity = Json::array();
  for (const auto& w : report.purity_witnesses) {
    purity.push_back(multiset_to_json(w));
  }
  return {{"is_code", report.is_code}, {"is_pure", report.is_pure}, {"K", report.rank},
          {"code_witnesses", code}, {"purity_witnesses", purity}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

}  // namespace qweight
