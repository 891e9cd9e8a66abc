#include "kagome/svg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "kagome/dataset_io.hpp"

namespace kagome {

namespace {

constexpr double kFlatWidth = 1e-9;
constexpr double kFlatCluster = 1e-7;
constexpr double kMargin = 50.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string svg_string(const ButterflyDataset& ds, const SvgOptions& o) {
  if (ds.rows.empty()) throw std::invalid_argument("cannot render an empty dataset");
  if (o.width <= 2 * kMargin || o.height <= 2 * kMargin) throw std::invalid_argument("SVG canvas too small");
  const double period = flux_period(ds.model);
  const double R = range_bound(ds.model);
  const double W = o.width - 2 * kMargin;
  const double H = o.height - 2 * kMargin;

  // (flux, energy) -> canvas
  auto point = [&](double f, double e) {
    const double u = f / period;
    const double v = (e + R) / (2 * R);
    if (o.transpose) return std::pair{kMargin + v * W, kMargin + (1.0 - u) * H};
    return std::pair{kMargin + u * W, kMargin + (1.0 - v) * H};
  };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(o.width) + "\" height=\"" +
       std::to_string(o.height) + "\" viewBox=\"0 0 " + std::to_string(o.width) + " " + std::to_string(o.height) +
       "\">\n";
  s += "<title>" + std::string(to_string(ds.model)) + " butterfly, omega = " + format_real(ds.omega) + "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(W) + "\" height=\"" + num(H) +
       "\" fill=\"none\" stroke=\"#888\"/>\n";
  const std::string flux_label = "gamma/2pi in [0," + std::to_string(static_cast<int>(period)) + "]";
  const std::string energy_label = "energy in [" + num(-R) + "," + num(R) + "]";
  s += "<text x=\"" + num(kMargin) + "\" y=\"" + num(o.height - 15.0) + "\" font-size=\"14\">" +
       (o.transpose ? energy_label : flux_label) + "</text>\n";
  s += "<text x=\"5\" y=\"" + num(kMargin - 15.0) + "\" font-size=\"14\">" +
       (o.transpose ? flux_label : energy_label) + "</text>\n";

  s += "<g stroke=\"black\" stroke-width=\"1\" stroke-linecap=\"round\">\n";
  for (const auto& r : ds.rows) {
    const double f = static_cast<double>(r.p) / static_cast<double>(r.q);
    const auto [x1, y1] = point(f, r.lo);
    const auto [x2, y2] = point(f, r.hi);
    s += "<line class=\"band\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
         num(y2) + "\"/>\n";
  }
  s += "</g>\n";

  if (o.flat_highlight) {
    s += "<g fill=\"red\">\n";
    // Rows are grouped by fraction and sorted by band index, i.e. by energy.
    const ButterflyRow* prev = nullptr;
    for (const auto& r : ds.rows) {
      if (r.hi - r.lo >= kFlatWidth) continue;
      const bool same = prev != nullptr && prev->p == r.p && prev->q == r.q && std::abs(prev->lo - r.lo) <= kFlatCluster;
      prev = &r;
      if (same) continue;
      const auto [x, y] = point(static_cast<double>(r.p) / static_cast<double>(r.q), 0.5 * (r.lo + r.hi));
      s += "<circle class=\"flat\" cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

void render_svg(const ButterflyDataset& ds, const std::filesystem::path& path, const SvgOptions& options) {
  write_text_file(path, svg_string(ds, options));
}

}  // namespace kagome
