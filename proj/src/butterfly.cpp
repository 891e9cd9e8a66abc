#include "kagome/butterfly.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "kagome/spectra.hpp"
#include "parallel.hpp"

namespace kagome {

std::vector<ReducedFlux> sweep_fractions(Model model, int qmax) {
  if (qmax < 1) throw std::invalid_argument("qmax must be >= 1");
  const long period = flux_period(model);
  std::vector<ReducedFlux> out;
  for (long q = 1; q <= qmax; ++q) {
    for (long p = 0; p < period * q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

ButterflyDataset sweep(Model model, double omega, const SweepOptions& options) {
  if (options.grid < 2) throw std::invalid_argument("sweep grid must be >= 2");
  if (options.threads < 1) throw std::invalid_argument("thread count must be >= 1");
  const auto fractions = sweep_fractions(model, options.qmax);

  std::vector<std::vector<Band>> bands(fractions.size());
  SpectrumOptions so;
  so.grid = options.grid;
  // Largest q first keeps the tail of the schedule short.
  detail::parallel_for(fractions.size(), options.threads, [&](std::size_t i) {
    const std::size_t f = fractions.size() - 1 - i;
    bands[f] = band_spectrum(model, fractions[f], omega, so).bands;
  });

  ButterflyDataset ds;
  ds.model = model;
  ds.omega = omega;
  ds.grid = options.grid;
  ds.manifest.qmax = options.qmax;
  ds.manifest.period = flux_period(model);
  ds.manifest.grid = options.grid;
  ds.manifest.timestamp = utc_timestamp();
  for (std::size_t f = 0; f < fractions.size(); ++f) {
    for (const Band& b : bands[f]) ds.rows.push_back({fractions[f].p(), fractions[f].q(), b.index, b.lo, b.hi});
  }
  return ds;
}

ReflectionReport reflection_smoke_test(const ButterflyDataset& ds, double tol) {
  if (ds.model != Model::kagome) throw std::invalid_argument("reflection smoke test applies to kagome datasets");
  std::map<std::pair<long, long>, std::vector<const ButterflyRow*>> by_flux;
  for (const auto& r : ds.rows) by_flux[{r.q, r.p}].push_back(&r);

  ReflectionReport rep;
  for (const auto& [key, rows] : by_flux) {
    const auto [q, p] = key;
    long partner = (4 * q - p) % (8 * q);
    if (partner < 0) partner += 8 * q;
    const auto it = by_flux.find({q, partner});
    if (it == by_flux.end()) continue;
    const auto& other = it->second;
    if (other.size() != rows.size()) throw std::runtime_error("band count differs between reflected fractions");
    const std::size_t n = rows.size();
    for (std::size_t k = 0; k < n; ++k) {
      const ButterflyRow& a = *rows[k];
      const ButterflyRow& b = *other[n - 1 - k];
      rep.max_deviation = std::max({rep.max_deviation, std::abs(a.lo + b.hi), std::abs(a.hi + b.lo)});
    }
    ++rep.fractions_checked;
  }
  rep.passed = rep.fractions_checked > 0 && rep.max_deviation < tol;
  return rep;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace kagome
