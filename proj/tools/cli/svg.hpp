#pragma once

#include <string>
#include <vector>

#include "gispec/specsets.hpp"
#include "gispec/types.hpp"

namespace gispec::cli {

/// Axis-diagram figure: the first set is drawn with thick segments (the
/// essential spectrum), the second with a thin cross (the full-spectrum
/// bound), and any set carrying a DS region contributes its dashed boundary.
/// Eigenvalues are drawn as crosses, red when outside the first set.
std::string spectrum_svg(const std::vector<specsets::SpectrumSet>& sets,
                         const std::vector<Complex>& eigenvalues);

void render_spectrum_svg(const std::vector<specsets::SpectrumSet>& sets,
                         const std::vector<Complex>& eigenvalues, const std::string& path);

}  // namespace gispec::cli
