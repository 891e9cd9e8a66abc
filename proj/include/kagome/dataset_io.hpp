#pragma once

// Butterfly dataset files.
//
// CSV: header model,p,q,gamma_over_2pi,omega,band_index,band_lo,band_hi; reals
// with 17 significant digits; '\n' line ends.
// JSON: {"manifest": {...}, "rows": [[p, q, k, lo, hi], ...]} with fixed key order.

#include <filesystem>
#include <string>
#include <string_view>

#include "kagome/butterfly.hpp"

namespace kagome {

std::string to_csv(const ButterflyDataset& ds);
/// Restores model, omega and rows (the CSV carries no manifest). Throws
/// std::runtime_error on malformed input.
ButterflyDataset from_csv(std::string_view text);

std::string to_json(const ButterflyDataset& ds);
ButterflyDataset from_json(std::string_view text);

/// File variants; failures raise std::runtime_error naming the path.
void export_csv(const ButterflyDataset& ds, const std::filesystem::path& path);
void export_json(const ButterflyDataset& ds, const std::filesystem::path& path);
ButterflyDataset import_csv(const std::filesystem::path& path);
ButterflyDataset import_json(const std::filesystem::path& path);

/// Writes `content` to `path`, throwing std::runtime_error with the path on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

/// printf("%.17g").
std::string format_real(double x);

}  // namespace kagome
