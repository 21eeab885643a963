#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relipoly::cli {

const std::vector<std::string>& repro_targets();

/// Runs one reproduction target against the bundled fixtures, writing a
/// human-readable diff report. Returns true when every check matched.
bool run_repro(const std::string& target, const std::string& fixture_dir, std::ostream& report, int threads);

}  // namespace relipoly::cli
