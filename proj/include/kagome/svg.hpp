#pragma once

#include <filesystem>
#include <string>

#include "kagome/butterfly.hpp"

namespace kagome {

struct SvgOptions {
  int width = 1200;
  int height = 800;
  bool transpose = false;       ///< energy horizontal, flux vertical
  bool flat_highlight = true;   ///< mark bands of width < 1e-9 with dots
};

/// Standalone SVG: one <line class="band"> per row, flux gamma/2pi in
/// [0, period] against energy in the model range; one <circle class="flat">
/// per distinct flat value at each fraction. Throws std::invalid_argument on
/// an empty dataset.
std::string svg_string(const ButterflyDataset& ds, const SvgOptions& options = {});
void render_svg(const ButterflyDataset& ds, const std::filesystem::path& path, const SvgOptions& options = {});

}  // namespace kagome
