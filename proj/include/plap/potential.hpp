#ifndef PLAP_POTENTIAL_HPP
#define PLAP_POTENTIAL_HPP

// Radial potential presets, their text descriptors, and grid sampling.
//
// Descriptor syntax is `tag:key=val,key=val`:
//   gaussian:A=1,s=1            A exp(-|x|^2 / (2 s^2))
//   box:A=1,R=1                 A on |x| <= R
//   mix:A1=2,s1=1,A2=1,s2=2     A1 gauss(s1) - A2 gauss(s2), may change sign
//   hardy:A=1                   A min(1, |x|^-2)
//   file:path=v.csv             two-column CSV (radius,value), linear interpolation

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plap/errors.hpp"
#include "plap/grid.hpp"

namespace plap {

enum class Preset { gaussian, box, mix, hardy, file };

namespace detail {

struct PresetInfo {
  Preset preset;
  std::string_view tag;
  std::vector<std::pair<std::string_view, double>> defaults;  // canonical key order
};

inline const std::vector<PresetInfo>& preset_table() {
  static const std::vector<PresetInfo> table = {
      {Preset::gaussian, "gaussian", {{"A", 1.0}, {"s", 1.0}}},
      {Preset::box, "box", {{"A", 1.0}, {"R", 1.0}}},
      {Preset::mix, "mix", {{"A1", 1.0}, {"s1", 1.0}, {"A2", 1.0}, {"s2", 2.0}}},
      {Preset::hardy, "hardy", {{"A", 1.0}}},
      {Preset::file, "file", {}},
  };
  return table;
}

inline const PresetInfo& info(Preset p) {
  for (const auto& e : preset_table())
    if (e.preset == p) return e;
  throw UsageError("unknown preset");
}

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

inline double gauss(double r, double s) { return std::exp(-0.5 * (r * r) / (s * s)); }

}  // namespace detail

struct PotentialDescriptor {
  Preset preset = Preset::gaussian;
  std::map<std::string, double, std::less<>> params;
  std::string path;  // file preset only

  double param(std::string_view key) const {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    for (const auto& [k, v] : detail::info(preset).defaults)
      if (k == key) return v;
    throw UsageError("potential: unknown parameter " + std::string(key));
  }

  std::string_view tag() const { return detail::info(preset).tag; }
};

/// Canonical text form: every parameter in table order, shortest round-trip values.
inline std::string format_potential(const PotentialDescriptor& desc) {
  std::string out(desc.tag());
  out += ':';
  if (desc.preset == Preset::file) return out + "path=" + desc.path;
  bool first = true;
  for (const auto& [key, def] : detail::info(desc.preset).defaults) {
    if (!first) out += ',';
    first = false;
    out += key;
    out += '=';
    out += detail::format_double(desc.param(key));
  }
  return out;
}

inline PotentialDescriptor parse_potential(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view tag = text.substr(0, colon);
  const detail::PresetInfo* found = nullptr;
  for (const auto& e : detail::preset_table())
    if (e.tag == tag) found = &e;
  if (!found) throw ParseError("unknown potential tag '" + std::string(tag) + "'", 0);

  PotentialDescriptor desc;
  desc.preset = found->preset;
  if (colon == std::string_view::npos) {
    if (desc.preset == Preset::file) throw ParseError("file potential requires path=", text.size());
    return desc;
  }

  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string_view pair = text.substr(pos, comma - pos);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("malformed key=value pair '" + std::string(pair) + "'", pos);
    const std::string_view key = pair.substr(0, eq);
    const std::string_view val = pair.substr(eq + 1);
    if (desc.preset == Preset::file) {
      if (key != "path") throw ParseError("unknown key '" + std::string(key) + "' for file", pos);
      if (val.empty()) throw ParseError("empty path", pos + eq + 1);
      desc.path = std::string(val);
    } else {
      const auto& defs = found->defaults;
      const bool known = std::any_of(defs.begin(), defs.end(), [&](const auto& kv) { return kv.first == key; });
      if (!known)
        throw ParseError("unknown key '" + std::string(key) + "' for " + std::string(tag), pos);
      double x = 0.0;
      if (!detail::parse_double(val, x) || !std::isfinite(x))
        throw ParseError("bad number '" + std::string(val) + "'", pos + eq + 1);
      desc.params[std::string(key)] = x;
    }
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (desc.preset == Preset::file && desc.path.empty())
    throw ParseError("file potential requires path=", text.size());
  if (desc.preset == Preset::gaussian && !(desc.param("s") > 0)) throw ParseError("s must be > 0", colon + 1);
  if (desc.preset == Preset::mix && !(desc.param("s1") > 0 && desc.param("s2") > 0))
    throw ParseError("s1, s2 must be > 0", colon + 1);
  if (desc.preset == Preset::box && !(desc.param("R") > 0)) throw ParseError("R must be > 0", colon + 1);
  return desc;
}

/// Tabulated radial profile for the file preset.
struct RadialTable {
  std::vector<double> r;
  std::vector<double> v;

  double operator()(double x) const {
    if (r.empty() || x < r.front() || x > r.back()) return 0.0;
    auto it = std::upper_bound(r.begin(), r.end(), x);
    if (it == r.end()) return v.back();
    const std::size_t k = static_cast<std::size_t>(it - r.begin());
    const double t = (x - r[k - 1]) / (r[k] - r[k - 1]);
    return (1.0 - t) * v[k - 1] + t * v[k];
  }
};

inline RadialTable load_radial_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open potential file " + path);
  RadialTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    double a = 0, b = 0;
    if (comma == std::string::npos || !detail::parse_double(line.substr(0, comma), a) ||
        !detail::parse_double(line.substr(comma + 1), b)) {
      if (lineno == 1) continue;  // header
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 'radius,value'");
    }
    if (!t.r.empty() && !(a > t.r.back()))
      throw DataError(path + ": radii must be strictly increasing");
    t.r.push_back(a);
    t.v.push_back(b);
  }
  if (t.r.size() < 2) throw DataError(path + ": need at least two samples");
  return t;
}

/// V(|x|) for a descriptor. File presets load their table once.
class RadialProfile {
 public:
  explicit RadialProfile(PotentialDescriptor desc) : desc_(std::move(desc)) {
    if (desc_.preset == Preset::file) table_ = load_radial_table(desc_.path);
    std::size_t k = 0;
    for (const auto& [key, def] : detail::info(desc_.preset).defaults) k_[k++] = desc_.param(key);
  }

  double operator()(double r) const {
    switch (desc_.preset) {
      case Preset::gaussian: return k_[0] * detail::gauss(r, k_[1]);
      case Preset::box: {
        const double A = k_[0], R = k_[1];
        if (std::abs(r - R) <= 1e-12 * std::max(1.0, R)) return 0.5 * A;  // jump sits on a node
        return r < R ? A : 0.0;
      }
      case Preset::mix: return k_[0] * detail::gauss(r, k_[1]) - k_[2] * detail::gauss(r, k_[3]);
      case Preset::hardy: return k_[0] * std::min(1.0, 1.0 / (r * r));
      case Preset::file: return table_(r);
    }
    return 0.0;
  }

  const PotentialDescriptor& descriptor() const noexcept { return desc_; }

  /// Exact integral over R^d where one exists, NaN otherwise.
  double analytic_integral(int d) const {
    const double w = omega(d);
    switch (desc_.preset) {
      case Preset::gaussian: {
        const double s = desc_.param("s");
        return desc_.param("A") * std::pow(2.0 * std::numbers::pi * s * s, 0.5 * d);
      }
      case Preset::box: return desc_.param("A") * w * std::pow(desc_.param("R"), d) / d;
      case Preset::mix: {
        const double s1 = desc_.param("s1"), s2 = desc_.param("s2");
        return desc_.param("A1") * std::pow(2.0 * std::numbers::pi * s1 * s1, 0.5 * d) -
               desc_.param("A2") * std::pow(2.0 * std::numbers::pi * s2 * s2, 0.5 * d);
      }
      case Preset::hardy:
        // integrable tail only for d = 1
        return d == 1 ? 4.0 * desc_.param("A") : std::numeric_limits<double>::quiet_NaN();
      case Preset::file: return std::numeric_limits<double>::quiet_NaN();
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  /// Length over which V varies; grids must resolve it.
  double length_scale() const {
    switch (desc_.preset) {
      case Preset::gaussian: return desc_.param("s");
      case Preset::box: return desc_.param("R");
      case Preset::mix: return std::min(desc_.param("s1"), desc_.param("s2"));
      case Preset::hardy: return 1.0;
      case Preset::file: {
        double h = table_.r.back() - table_.r.front();
        for (std::size_t k = 1; k < table_.r.size(); ++k) h = std::min(h, table_.r[k] - table_.r[k - 1]);
        return std::max(h * 4.0, 1e-3);
      }
    }
    return 1.0;
  }

  /// Radius beyond which V is negligible (or zero).
  double support_radius() const {
    switch (desc_.preset) {
      case Preset::gaussian: return 9.0 * desc_.param("s");
      case Preset::box: return desc_.param("R");
      case Preset::mix: return 9.0 * std::max(desc_.param("s1"), desc_.param("s2"));
      case Preset::hardy: return 1.0;
      case Preset::file: return table_.r.back();
    }
    return 1.0;
  }

 private:
  PotentialDescriptor desc_;
  RadialTable table_;
  std::array<double, 4> k_{};  // parameters in canonical order
};

/// Sampled potential on a grid. `point` is an extra coupling concentrated at
/// the origin node, so that the potential energy is
///   sum_i w_i V_i |u_i|^p + point |u_origin|^p.
struct Potential {
  GridPtr grid;
  std::vector<double> values;
  double point = 0.0;
  double integral = 0.0;  // I_h = quadrature(values) + point
  std::string label;
  // Present for sampled presets; lets the solver resample on a larger domain.
  std::shared_ptr<const RadialProfile> profile;
  double alpha = 1.0;

  Potential() = default;
  Potential(GridPtr g, std::vector<double> v, double point_coupling = 0.0, std::string lbl = {})
      : grid(std::move(g)), values(std::move(v)), point(point_coupling), label(std::move(lbl)) {
    if (!grid || values.size() != grid->size()) throw UsageError("potential: length does not match grid");
    for (double x : values)
      if (!std::isfinite(x)) throw NumericalError("potential: non-finite value");
    integral = quadrature(*grid, values) + point;
  }

  Potential scaled(double factor) const {
    std::vector<double> v(values);
    for (double& x : v) x *= factor;
    Potential out(grid, std::move(v), factor * point, label);
    out.profile = profile;
    out.alpha = alpha * factor;
    return out;
  }

  bool resamplable() const { return profile != nullptr || is_point_only(); }

  /// Same potential on another grid. Requires resamplable().
  Potential resample(const GridPtr& target) const {
    if (profile) {
      std::vector<double> v(target->size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = alpha * (*profile)(target->radius(i));
      Potential out(target, std::move(v), point, label);
      out.profile = profile;
      out.alpha = alpha;
      return out;
    }
    if (is_point_only()) return Potential(target, std::vector<double>(target->size(), 0.0), point, label);
    throw UsageError("potential: raw samples cannot be resampled");
  }

  bool is_point_only() const {
    return std::all_of(values.begin(), values.end(), [](double x) { return x == 0.0; });
  }

  bool is_zero() const {
    return point == 0.0 && std::all_of(values.begin(), values.end(), [](double x) { return x == 0.0; });
  }
};

inline Potential zero_potential(const GridPtr& grid) {
  return Potential(grid, std::vector<double>(grid->size(), 0.0), 0.0, "zero");
}

/// v * delta_0: the coupling of the E(v) problem.
inline Potential point_potential(const GridPtr& grid, double v) {
  return Potential(grid, std::vector<double>(grid->size(), 0.0), v, "point");
}

inline Potential sample_potential(const GridPtr& grid, std::shared_ptr<const RadialProfile> profile,
                                  double alpha = 1.0) {
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = alpha * (*profile)(grid->radius(i));
  Potential out(grid, std::move(v), 0.0, format_potential(profile->descriptor()));
  out.profile = std::move(profile);
  out.alpha = alpha;
  return out;
}

inline Potential sample_potential(const GridPtr& grid, const RadialProfile& profile, double alpha = 1.0) {
  return sample_potential(grid, std::make_shared<const RadialProfile>(profile), alpha);
}

}  // namespace plap

#endif  // PLAP_POTENTIAL_HPP
