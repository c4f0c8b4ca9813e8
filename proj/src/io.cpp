#include "lcdmhd/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace lcdmhd {

namespace {

constexpr const char* magic = "LCDMHD-DUMP";

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) return v;
  std::uint64_t r = 0;
  for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

double parse_double(const std::map<std::string, std::string>& kv,
                    const std::string& key, const std::string& path) {
  auto it = kv.find(key);
  if (it == kv.end()) throw IoError(path + ": dump header lacks '" + key + "'");
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw IoError(path + ": bad value for '" + key + "'");
  }
}

}  // namespace

const std::vector<std::string>& dump_variables() {
  static const std::vector<std::string> v{"rho", "u",  "v", "w", "p", "b1",
                                          "b2",  "b3", "E", "A", "B"};
  return v;
}

FieldDump make_dump(const AugField& f, double gamma, double time,
                    const std::string& variant, const std::string& problem) {
  const Grid2D& g = f.grid;
  const GasModel gas(gamma);
  FieldDump d;
  d.nx = g.nx;
  d.ny = g.ny;
  d.xmin = g.xmin;
  d.xmax = g.xmax;
  d.ymin = g.ymin;
  d.ymax = g.ymax;
  d.time = time;
  d.gamma = gamma;
  d.variant = variant;
  d.problem = problem;
  d.data.resize(static_cast<std::size_t>(g.nx) * g.ny * dump_record_size);
  std::size_t o = 0;
  for (int k = 0; k < g.ny; ++k) {
    for (int j = 0; j < g.nx; ++j) {
      const Vec8& U = f.u(j, k);
      const PrimState V = cons_to_prim(ConsState(U), gas);
      for (int i = 0; i < 8; ++i) d.data[o + i] = V.v[i];
      d.data[o + 8] = U[cons_idx::en];
      d.data[o + 9] = f.a(j, k);
      d.data[o + 10] = f.b(j, k);
      o += dump_record_size;
    }
  }
  return d;
}

AugField field_from_dump(const FieldDump& d) {
  const Grid2D g(d.nx, d.ny, d.xmin, d.xmax, d.ymin, d.ymax);
  AugField f(g);
  for (int k = 0; k < d.ny; ++k) {
    for (int j = 0; j < d.nx; ++j) {
      const double rho = d.value(j, k, 0);
      Vec8& U = f.u(j, k);
      U << rho, rho * d.value(j, k, 1), rho * d.value(j, k, 2),
          rho * d.value(j, k, 3), d.value(j, k, 5), d.value(j, k, 6),
          d.value(j, k, 7), d.value(j, k, 8);
      f.a(j, k) = d.value(j, k, 9);
      f.b(j, k) = d.value(j, k, 10);
    }
  }
  return f;
}

void write_dump(const FieldDump& d, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  std::string fields;
  for (const auto& v : dump_variables()) fields += (fields.empty() ? "" : ",") + v;
  os << magic << " version=" << d.version << " nx=" << d.nx << " ny=" << d.ny
     << " xmin=" << fmt(d.xmin) << " xmax=" << fmt(d.xmax)
     << " ymin=" << fmt(d.ymin) << " ymax=" << fmt(d.ymax)
     << " time=" << fmt(d.time) << " gamma=" << fmt(d.gamma)
     << " variant=" << (d.variant.empty() ? "-" : d.variant)
     << " problem=" << (d.problem.empty() ? "-" : d.problem)
     << " fields=" << fields << " endian=little\n";
  std::vector<std::uint64_t> buf(d.data.size());
  for (std::size_t i = 0; i < d.data.size(); ++i)
    buf[i] = to_le(std::bit_cast<std::uint64_t>(d.data[i]));
  os.write(reinterpret_cast<const char*>(buf.data()),
           static_cast<std::streamsize>(buf.size() * 8));
  if (!os) throw IoError("write to '" + path + "' failed");
}

FieldDump read_dump(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(is, header)) throw IoError(path + ": empty file");
  std::istringstream hs(header);
  std::string tok;
  hs >> tok;
  if (tok != magic) throw IoError(path + ": not a field dump");
  std::map<std::string, std::string> kv;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw IoError(path + ": bad header token '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  FieldDump d;
  d.version = static_cast<int>(parse_double(kv, "version", path));
  if (d.version != dump_format_version)
    throw IoError(path + ": unsupported dump version " + std::to_string(d.version));
  d.nx = static_cast<int>(parse_double(kv, "nx", path));
  d.ny = static_cast<int>(parse_double(kv, "ny", path));
  if (d.nx < 1 || d.ny < 1) throw IoError(path + ": bad grid size");
  d.xmin = parse_double(kv, "xmin", path);
  d.xmax = parse_double(kv, "xmax", path);
  d.ymin = parse_double(kv, "ymin", path);
  d.ymax = parse_double(kv, "ymax", path);
  d.time = parse_double(kv, "time", path);
  d.gamma = parse_double(kv, "gamma", path);
  d.variant = kv.count("variant") ? kv["variant"] : "";
  d.problem = kv.count("problem") ? kv["problem"] : "";
  if (d.variant == "-") d.variant.clear();
  if (d.problem == "-") d.problem.clear();

  const std::size_t n = static_cast<std::size_t>(d.nx) * d.ny * dump_record_size;
  std::vector<std::uint64_t> buf(n);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * 8));
  if (static_cast<std::size_t>(is.gcount()) != n * 8)
    throw IoError(path + ": truncated record data");
  d.data.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    d.data[i] = std::bit_cast<double>(to_le(buf[i]));
  return d;
}

int slice_index(const FieldDump& d, char axis, double at) {
  double lo, hi;
  int n;
  if (axis == 'x') {
    lo = d.ymin;
    hi = d.ymax;
    n = d.ny;
  } else if (axis == 'y') {
    lo = d.xmin;
    hi = d.xmax;
    n = d.nx;
  } else {
    throw ConfigError(std::string("slice axis must be x or y, got '") + axis + "'");
  }
  if (!(at >= lo && at <= hi)) {
    std::ostringstream os;
    os << "slice coordinate " << at << " outside [" << lo << ", " << hi << "]";
    throw ConfigError(os.str());
  }
  const double h = (hi - lo) / n;
  // nearest centre; a tie between two centres goes to the upper cell
  const int i = static_cast<int>(std::floor((at - lo) / h + 1e-9));
  return std::clamp(i, 0, n - 1);
}

void write_slice_csv(const FieldDump& d, char axis, double at,
                     const std::vector<std::string>& vars,
                     const std::string& path) {
  const auto& names = dump_variables();
  std::vector<int> idx;
  for (const auto& v : vars) {
    auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) throw ConfigError("unknown slice variable '" + v + "'");
    idx.push_back(static_cast<int>(it - names.begin()));
  }
  const int s = slice_index(d, axis, at);
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << std::setprecision(17);
  os << (axis == 'x' ? "x" : "y");
  for (const auto& v : vars) os << ',' << v;
  os << '\n';
  if (axis == 'x') {
    const double h = (d.xmax - d.xmin) / d.nx;
    for (int j = 0; j < d.nx; ++j) {
      os << d.xmin + (j + 0.5) * h;
      for (int i : idx) os << ',' << d.value(j, s, i);
      os << '\n';
    }
  } else {
    const double h = (d.ymax - d.ymin) / d.ny;
    for (int k = 0; k < d.ny; ++k) {
      os << d.ymin + (k + 0.5) * h;
      for (int i : idx) os << ',' << d.value(s, k, i);
      os << '\n';
    }
  }
  if (!os) throw IoError("write to '" + path + "' failed");
}

void write_diagnostics_csv(const std::vector<DiagnosticsSample>& s,
                           const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << std::setprecision(17);
  os << "t,dt,div_l1,div_linf,mass,min_rho,min_p\n";
  for (const auto& r : s)
    os << r.t << ',' << r.dt << ',' << r.div_l1 << ',' << r.div_linf << ','
       << r.mass << ',' << r.min_rho << ',' << r.min_p << '\n';
  if (!os) throw IoError("write to '" + path + "' failed");
}

}  // namespace lcdmhd
