// qweight: command-line front end for the enumerator library.
//
// Exit codes: 0 success, 1 runtime or usage error, 2 when the computed
// verdict is negative (infeasible LP, violated bound, forbidden or
// non-AME state, missing grid, reproduction mismatch).

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "qweight/ame.hpp"
#include "qweight/bounds.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/io.hpp"
#include "qweight/lp.hpp"
#include "qweight/parallel.hpp"
#include "qweight/reproduce.hpp"
#include "qweight/transforms.hpp"

namespace fs = std::filesystem;
using namespace qweight;

namespace {

constexpr int exit_negative = 2;

void emit(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

std::string family_file_name(std::string_view family) {
  std::string name(family);
  for (auto& ch : name) {
    if (ch == '\'') {
      ch = 'p';
    }
  }
  return name + ".json";
}

struct EnumerateOptions {
  std::string state_path;
  std::vector<std::string> families{"A", "B", "A'", "B'", "S", "calligraphic"};
  std::string out_dir = ".";
};

int run_enumerate(const EnumerateOptions& opt) {
  const Operand op = state_from_json(read_json_file(opt.state_path));
  fs::create_directories(opt.out_dir);
  std::optional<std::pair<EnumeratorProfile, EnumeratorProfile>> shor_laflamme;
  std::optional<std::pair<EnumeratorProfile, EnumeratorProfile>> unitary;
  for (const auto& raw : opt.families) {
    Json doc;
    std::string name = raw;
    if (raw == "calligraphic" || raw == "cal") {
      name = "calligraphic";
      doc = calligraphic_to_json(calligraphic_profile(op, op));
    } else {
      const Family family = parse_family(raw);
      name = std::string(family_name(family));
      if (family == Family::A || family == Family::B) {
        if (!shor_laflamme) {
          shor_laflamme = shor_laflamme_profiles(op, op);
        }
        doc = profile_to_json(family == Family::A ? shor_laflamme->first : shor_laflamme->second);
      } else if (family == Family::APrime || family == Family::BPrime) {
        if (!unitary) {
          unitary = unitary_profiles(op, op);
        }
        doc = profile_to_json(family == Family::APrime ? unitary->first : unitary->second);
      } else {
        doc = profile_to_json(shadow_profile_brute(op, op));
      }
    }
    const fs::path path = fs::path(opt.out_dir) / family_file_name(name);
    write_text_file(path.string(), doc.dump(1) + "\n");
    std::cout << path.string() << '\n';
  }
  return 0;
}

struct TransformOptions {
  std::string profile_path;
  std::string to;
  std::string out;
};

int run_transform(const TransformOptions& opt) {
  const EnumeratorProfile in = profile_from_json(read_json_file(opt.profile_path));
  emit(profile_to_json(transform_to(in, parse_family(opt.to))).dump(1) + "\n", opt.out);
  return 0;
}

struct KernelOptions {
  std::vector<int> dims;
  std::string kind;
  std::string out;
};

int run_kernel(const KernelOptions& opt) {
  const DimensionMultiset total = DimensionSpec(opt.dims).multiset();
  emit(kernel_csv(kernel_by_kind(total, opt.kind)), opt.out);
  return 0;
}

struct BoundsOptions {
  std::vector<int> dims;
  std::string distance;
  std::string k;
  bool pure = false;
  bool scott = false;
};

int run_bounds(const BoundsOptions& opt) {
  const DimensionSpec spec(opt.dims);
  const Integer distance(opt.distance);
  Json out = {{"dims", spec_to_json(spec)}, {"D", opt.distance}};
  const Integer t = max_correctable_threshold(distance);
  out["hamming_threshold"] = to_string(t);
  out["hamming_max_k"] = to_string(hamming_max_k(spec, t));
  const SingletonBound singleton = singleton_max_k(spec, distance);
  out["singleton_max_k"] = to_string(singleton.max_k);
  out["pure_singleton_max_k"] = to_string(pure_singleton_max_k(spec, distance));
  bool all_hold = true;
  if (!opt.k.empty()) {
    const CodeParams params{spec, Integer(opt.k), distance, opt.pure};
    out["K"] = opt.k;
    out["pure"] = opt.pure;
    Json verdicts = Json::array();
    std::vector<BoundVerdict> list{hamming_check(params), singleton_check(params)};
    if (opt.pure) {
      list.push_back(pure_singleton_check(params));
    }
    for (const auto& v : list) {
      all_hold = all_hold && v.holds;
      verdicts.push_back(verdict_to_json(v));
    }
    out["verdicts"] = verdicts;
  }
  if (opt.scott) {
    const auto violation = scott_violation(spec);
    out["scott_ame"] = violation ? verdict_to_json(*violation) : Json{{"bound", "scott"}, {"holds", true}};
  }
  std::cout << out.dump(1) << '\n';
  return all_hold ? 0 : exit_negative;
}

struct LpOptions {
  std::vector<int> dims;
  std::string k;
  std::string distance;
  bool pure = false;
  std::string emit_path;
  std::string maximize;
};

int run_lp(const LpOptions& opt) {
  const CodeParams params{DimensionSpec(opt.dims), Integer(opt.k), Integer(opt.distance), opt.pure};
  const CodeLp lp = build_lp(params);
  if (!opt.emit_path.empty()) {
    emit(emit_lp(lp), opt.emit_path);
  }
  const LpVerdict verdict =
      opt.maximize.empty() ? solve_feasibility(lp) : maximize(lp, multiset_from_json(Json::parse(opt.maximize)));
  if (opt.emit_path != "-") {
    std::cout << lp_verdict_to_json(lp, verdict).dump(1) << '\n';
  }
  return verdict.feasible ? 0 : exit_negative;
}

struct ScanOptions {
  std::vector<int> dims;
  int max_parties = 13;
  std::string out;
};

int run_scan(const ScanOptions& opt) {
  if (opt.dims.size() != 2) {
    throw std::invalid_argument("--dims takes two local dimensions");
  }
  const auto cells = ame_scan(std::min(opt.dims[0], opt.dims[1]), std::max(opt.dims[0], opt.dims[1]), opt.max_parties);
  emit(heatmap_csv(cells), opt.out);
  if (!opt.out.empty() && opt.out != "-") {
    std::size_t forbidden = 0;
    for (const auto& c : cells) {
      forbidden += c.status == CellStatus::Forbidden ? 1 : 0;
    }
    std::cout << forbidden << " of " << cells.size() << " cells forbidden\n";
  }
  return 0;
}

struct ConstructOptions {
  std::vector<int> d;
  std::string out;
  std::string grid_out;
};

int run_construct(const ConstructOptions& opt) {
  if (opt.d.size() != 3) {
    throw std::invalid_argument("--d takes three local dimensions");
  }
  const auto grid = grid_construct(opt.d[0], opt.d[1], opt.d[2]);
  if (!grid) {
    std::cout << "no grid construction found\n";
    return exit_negative;
  }
  if (!opt.grid_out.empty()) {
    emit(grid_to_json(*grid).dump(1) + "\n", opt.grid_out);
  }
  emit(state_to_json(grid_to_state(*grid)).dump(1) + "\n", opt.out);
  return 0;
}

int run_verify(const std::string& path) {
  const AmeReport report = ame_verify(state_from_json(read_json_file(path)));
  std::cout << ame_report_to_json(report).dump(1) << '\n';
  return report.is_ame ? 0 : exit_negative;
}

int run_reproduce(const std::string& target, const std::string& out_dir) {
  std::vector<std::string> targets;
  if (target == "all") {
    targets = reproduce_targets();
  } else {
    targets.push_back(target);
  }
  bool all_matched = true;
  for (const auto& name : targets) {
    const ReproduceReport report = reproduce(name);
    std::cout << "== " << report.target << '\n';
    for (const auto& line : report.lines) {
      std::cout << line << '\n';
    }
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      for (const auto& [file, content] : report.artifacts) {
        write_text_file((fs::path(out_dir) / file).string(), content);
      }
    }
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << report.seconds;
    std::cout << (report.matched ? "MATCH " : "MISMATCH ") << report.target << " (" << secs.str() << " s)\n";
    all_matched = all_matched && report.matched;
  }
  return all_matched ? 0 : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight enumerators, bounds and AME tools for heterogeneous quantum systems"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware default)");

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Brute-force enumerator profiles of a pure state");
  enumerate_cmd->add_option("state", enumerate.state_path, "MixedState JSON file")->required();
  enumerate_cmd->add_option("--families", enumerate.families, "A, B, A', B', S, calligraphic")->delimiter(',');
  enumerate_cmd->add_option("--out", enumerate.out_dir, "Output directory");

  TransformOptions transform;
  auto* transform_cmd = app.add_subcommand("transform", "Apply an exact transform to a profile");
  transform_cmd->add_option("profile", transform.profile_path, "EnumeratorProfile JSON file")->required();
  transform_cmd->add_option("--to", transform.to, "Target family (B, S, A', A)")->required();
  transform_cmd->add_option("--out", transform.out, "Output file (default stdout)");

  KernelOptions kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "Export a transform kernel as CSV");
  kernel_cmd->add_option("--dims", kernel.dims, "Local dimensions, e.g. 2,3,3")->required()->delimiter(',');
  kernel_cmd->add_option("--kind", kernel.kind, "B, S (from A), A' (from A), A, S' (from A')")->required();
  kernel_cmd->add_option("--out", kernel.out, "Output file (default stdout)");

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Hamming, Singleton and Scott bounds");
  bounds_cmd->add_option("--dims", bounds.dims, "Local dimensions")->required()->delimiter(',');
  bounds_cmd->add_option("--distance", bounds.distance, "Dimensional distance D")->required();
  bounds_cmd->add_option("--k", bounds.k, "Code dimension K to test");
  bounds_cmd->add_flag("--pure", bounds.pure, "Also test the pure Singleton bound");
  bounds_cmd->add_flag("--scott", bounds.scott, "Report the Scott test for an AME state on these dims");

  LpOptions lp;
  auto* lp_cmd = app.add_subcommand("lp", "Exact enumerator linear program for a code");
  lp_cmd->add_option("--dims", lp.dims, "Local dimensions")->required()->delimiter(',');
  lp_cmd->add_option("--k", lp.k, "Code dimension K")->required();
  lp_cmd->add_option("--distance", lp.distance, "Dimensional distance D")->required();
  lp_cmd->add_flag("--pure", lp.pure, "Require a pure code");
  lp_cmd->add_option("--emit-lp", lp.emit_path, "Write the rational constraint system to a file");
  lp_cmd->add_option("--maximize", lp.maximize, "Maximise A_v for a multiset given as JSON, e.g. '{\"2\":1}'");

  auto* ame_cmd = app.add_subcommand("ame", "Absolutely maximally entangled states");
  ame_cmd->require_subcommand(1);
  ScanOptions scan;
  auto* scan_cmd = ame_cmd->add_subcommand("scan", "Shadow-inequality heatmap for two local dimensions");
  scan_cmd->add_option("--dims", scan.dims, "Two local dimensions, e.g. 2,3")->required()->delimiter(',');
  scan_cmd->add_option("--max-parties", scan.max_parties, "Largest number of parties");
  scan_cmd->add_option("--out", scan.out, "CSV output file (default stdout)");
  ConstructOptions construct;
  auto* construct_cmd = ame_cmd->add_subcommand("construct", "Tripartite AME state from a weighted grid");
  construct_cmd->add_option("--d", construct.d, "d1,d2,d3")->required()->delimiter(',');
  construct_cmd->add_option("--out", construct.out, "State JSON output (default stdout)");
  construct_cmd->add_option("--grid-out", construct.grid_out, "Also write the grid JSON");
  std::string verify_path;
  auto* verify_cmd = ame_cmd->add_subcommand("verify", "Check that a state is AME");
  verify_cmd->add_option("state", verify_path, "MixedState JSON file")->required();

  std::string target;
  std::string reproduce_out;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate a bundled result and diff it");
  reproduce_cmd->add_option("target", target, "Target name or 'all'")->required();
  reproduce_cmd->add_option("--out", reproduce_out, "Directory for regenerated artifacts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    set_max_threads(threads);
    if (*enumerate_cmd) return run_enumerate(enumerate);
    if (*transform_cmd) return run_transform(transform);
    if (*kernel_cmd) return run_kernel(kernel);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*lp_cmd) return run_lp(lp);
    if (*scan_cmd) return run_scan(scan);
    if (*construct_cmd) return run_construct(construct);
    if (*verify_cmd) return run_verify(verify_path);
    if (*reproduce_cmd) return run_reproduce(target, reproduce_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
