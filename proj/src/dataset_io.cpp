#include "kagome/dataset_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace kagome {

namespace {

constexpr std::string_view kCsvHeader = "model,p,q,gamma_over_2pi,omega,band_index,band_lo,band_hi";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

double parse_real(std::string_view s) {
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) throw std::runtime_error("bad number '" + tmp + "'");
  return v;
}

long parse_int(std::string_view s) {
  const std::string tmp(s);
  char* end = nullptr;
  const long v = std::strtol(tmp.c_str(), &end, 10);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) throw std::runtime_error("bad integer '" + tmp + "'");
  return v;
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const ButterflyDataset& ds) {
  std::string out(kCsvHeader);
  out += '\n';
  const std::string model(to_string(ds.model));
  const std::string omega = format_real(ds.omega);
  for (const auto& r : ds.rows) {
    out += model;
    out += ',' + std::to_string(r.p) + ',' + std::to_string(r.q) + ',';
    out += format_real(static_cast<double>(r.p) / static_cast<double>(r.q));
    out += ',' + omega + ',' + std::to_string(r.band_index) + ',';
    out += format_real(r.lo) + ',' + format_real(r.hi) + '\n';
  }
  return out;
}

ButterflyDataset from_csv(std::string_view text) {
  ButterflyDataset ds;
  std::size_t line_no = 0;
  bool first_row = true;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected 8 fields");
    const Model m = parse_model(f[0]);
    const double omega = parse_real(f[4]);
    if (first_row) {
      ds.model = m;
      ds.omega = omega;
      first_row = false;
    } else if (m != ds.model || omega != ds.omega) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": mixed model or omega");
    }
    ds.rows.push_back({parse_int(f[1]), parse_int(f[2]), static_cast<int>(parse_int(f[5])), parse_real(f[6]),
                       parse_real(f[7])});
  }
  if (line_no == 0) throw std::runtime_error("empty CSV");
  return ds;
}

std::string to_json(const ButterflyDataset& ds) {
  nlohmann::ordered_json j;
  auto& m = j["manifest"];
  m["tool_version"] = ds.manifest.tool_version;
  m["model"] = std::string(to_string(ds.model));
  m["omega"] = ds.omega;
  m["grid"] = ds.grid;
  m["sweep"] = {{"qmax", ds.manifest.qmax}, {"p_over_q_min", 0}, {"p_over_q_max_exclusive", ds.manifest.period}};
  m["timestamp"] = ds.manifest.timestamp;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : ds.rows) j["rows"].push_back({r.p, r.q, r.band_index, r.lo, r.hi});
  return j.dump(1) + '\n';
}

ButterflyDataset from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ButterflyDataset ds;
    const auto& m = j.at("manifest");
    ds.manifest.tool_version = m.at("tool_version").get<std::string>();
    ds.model = parse_model(m.at("model").get<std::string>());
    ds.omega = m.at("omega").get<double>();
    ds.grid = m.at("grid").get<int>();
    ds.manifest.grid = ds.grid;
    ds.manifest.qmax = m.at("sweep").at("qmax").get<int>();
    ds.manifest.period = m.at("sweep").at("p_over_q_max_exclusive").get<int>();
    ds.manifest.timestamp = m.at("timestamp").get<std::string>();
    for (const auto& r : j.at("rows")) {
      ds.rows.push_back({r.at(0).get<long>(), r.at(1).get<long>(), r.at(2).get<int>(), r.at(3).get<double>(),
                         r.at(4).get<double>()});
    }
    return ds;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed dataset JSON: ") + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void export_csv(const ButterflyDataset& ds, const std::filesystem::path& path) { write_text_file(path, to_csv(ds)); }

void export_json(const ButterflyDataset& ds, const std::filesystem::path& path) { write_text_file(path, to_json(ds)); }

ButterflyDataset import_csv(const std::filesystem::path& path) {
  try {
    return from_csv(read_text_file(path));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

ButterflyDataset import_json(const std::filesystem::path& path) {
  try {
    return from_json(read_text_file(path));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace kagome
