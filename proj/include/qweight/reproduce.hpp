#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qweight {

struct ReproduceReport {
  std::string target;
  bool matched = true;
  std::vector<std::string> lines;
  std::vector<std::string> mismatches;
  /// (file name, content) pairs regenerated by the target.
  std::vector<std::pair<std::string, std::string>> artifacts;
  double seconds = 0.0;
};

/// Target names: tab:AME2333, tab:AME234, tab:AME223, tab:AME233,
/// tab:AME334, tab:AME344, fig:heatmap23, fig:heatmap34, ex:hamming,
/// ex:singleton, ex:scott, ex:shadow_empty.
std::vector<std::string> reproduce_targets();

/// Regenerates target and compares it with the bundled expected values.
ReproduceReport reproduce(std::string_view target);

}  // namespace qweight
