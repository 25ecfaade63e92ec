#ifndef PLAP_IO_HPP
#define PLAP_IO_HPP

// Sweep CSV and JSON serialization. Reals are written in shortest
// round-trip form, so parse(emit(x)) == x bit for bit.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plap/asymptotics.hpp"
#include "plap/errors.hpp"
#include "plap/potential.hpp"
#include "plap/sobolev.hpp"
#include "plap/solver.hpp"

namespace plap {

using json = nlohmann::json;

inline constexpr std::string_view kSweepHeader =
    "alpha,lambda,grad_norm_p,sup_u,residual,iterations,converged,domain_extent";

inline std::string emit_csv(const std::vector<SweepRecord>& records) {
  using detail::format_double;
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& r : records) {
    out += format_double(r.alpha) + ',' + format_double(r.lambda) + ',' + format_double(r.grad_norm_p) + ',' +
           format_double(r.sup_u) + ',' + format_double(r.residual) + ',' + std::to_string(r.iterations) + ',' +
           (r.converged ? "true" : "false") + ',' + format_double(r.domain_extent) + '\n';
  }
  return out;
}

inline std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::vector<SweepRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header) {
      if (line != kSweepHeader) throw DataError("csv: unexpected header");
      header = true;
      continue;
    }
    std::vector<std::string_view> cells;
    for (std::size_t a = 0;;) {
      const std::size_t b = line.find(',', a);
      cells.push_back(line.substr(a, b == std::string_view::npos ? std::string_view::npos : b - a));
      if (b == std::string_view::npos) break;
      a = b + 1;
    }
    const std::string where = "csv line " + std::to_string(line_no);
    if (cells.size() != 8) throw DataError(where + ": expected 8 fields");
    const auto real = [&](std::string_view s) {
      double v = 0.0;
      if (!detail::parse_double(s, v)) throw DataError(where + ": bad number '" + std::string(s) + "'");
      return v;
    };
    SweepRecord r;
    r.alpha = real(cells[0]);
    r.lambda = real(cells[1]);
    r.grad_norm_p = real(cells[2]);
    r.sup_u = real(cells[3]);
    r.residual = real(cells[4]);
    const auto it = cells[5];
    if (std::from_chars(it.data(), it.data() + it.size(), r.iterations).ptr != it.data() + it.size() || it.empty())
      throw DataError(where + ": bad iteration count");
    if (cells[6] == "true") {
      r.converged = true;
    } else if (cells[6] != "false") {
      throw DataError(where + ": converged must be true or false");
    }
    r.domain_extent = real(cells[7]);
    out.push_back(r);
  }
  if (!header) throw DataError("csv: missing header");
  return out;
}

inline json to_json(const EnergyBreakdown& e) {
  return {{"kinetic", e.kinetic},   {"potential_term", e.potential_term}, {"q_value", e.q_value},
          {"p_norm_p", e.p_norm_p}, {"sup_norm", e.sup_norm},             {"rayleigh", e.rayleigh}};
}

inline json to_json(const SweepRecord& r) {
  return {{"alpha", r.alpha},         {"lambda", r.lambda},       {"grad_norm_p", r.grad_norm_p},
          {"sup_u", r.sup_u},         {"residual", r.residual},   {"iterations", r.iterations},
          {"converged", r.converged}, {"domain_extent", r.domain_extent}};
}

inline SweepRecord record_from_json(const json& j) {
  try {
    SweepRecord r;
    r.alpha = j.at("alpha").get<double>();
    r.lambda = j.at("lambda").get<double>();
    r.grad_norm_p = j.at("grad_norm_p").get<double>();
    r.sup_u = j.at("sup_u").get<double>();
    r.residual = j.at("residual").get<double>();
    r.iterations = j.at("iterations").get<int>();
    r.converged = j.at("converged").get<bool>();
    r.domain_extent = j.at("domain_extent").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("json record: ") + e.what());
  }
}

inline json to_json(const SweepResult& s) {
  json recs = json::array();
  for (const auto& r : s.records) recs.push_back(to_json(r));
  return {{"d", s.d}, {"p", s.p}, {"potential", s.potential}, {"integral", s.integral}, {"records", recs}};
}

inline json to_json(const GroundState& g) {
  return {{"lambda", g.lambda},
          {"residual", g.residual},
          {"iterations", g.iterations},
          {"converged", g.converged},
          {"domain_converged", g.domain_converged},
          {"domain_extent", g.domain_extent},
          {"nodes", g.field.size()},
          {"radial_restricted", g.radial_restricted},
          {"used_fallback", g.used_fallback},
          {"energy", to_json(g.energy)}};
}

inline json to_json(const FitResult& f) {
  return {{"regime", std::string(to_string(f.regime))},
          {"d", f.d},
          {"p", f.p},
          {"integral", f.integral},
          {"limit", f.limit},
          {"coefficients", f.coefficients},
          {"prediction", f.prediction},
          {"relative_error", f.relative_error},
          {"method", f.method},
          {"window_spread", f.window_spread},
          {"alphas", f.alphas},
          {"values", f.values}};
}

inline json to_json(const SobolevEntry& e) {
  json j = {{"d", e.d}, {"p", e.p}, {"S", e.S}, {"E1", e.E1}, {"numeric", e.numeric}};
  if (e.numeric) {
    j["extrapolated"] = e.extrapolated;
    j["E1_sequence"] = e.E1_sequence;
    j["nodes"] = e.nodes;
    j["extent"] = e.extent;
    j["residual"] = e.residual;
    j["converged"] = e.converged;
  }
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace plap

#endif  // PLAP_IO_HPP
