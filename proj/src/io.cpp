#include "lwave/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "lwave/error.hpp"
#include "lwave/version.hpp"

namespace lwave {

namespace {

using nlohmann::json;

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ArgumentError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

const char* radial_name(RadialSampling r) {
  return r == RadialSampling::uniform ? "uniform" : "bessel_zeros";
}

RadialSampling parse_radial(const std::string& name) {
  if (name == "uniform") return RadialSampling::uniform;
  if (name == "bessel_zeros") return RadialSampling::bessel_zeros;
  throw ArgumentError("unknown radial sampling '" + name + "'");
}

// Distinct values in order of first appearance.
std::vector<double> first_seen(const std::vector<double>& column) {
  std::vector<double> out;
  for (double v : column) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
  if (name == "csv") return ExportFormat::csv;
  if (name == "json") return ExportFormat::json;
  throw ArgumentError("unknown format '" + name + "' (expected csv or json)");
}

std::string shortest_repr(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw ArgumentError("cannot format number");
  return std::string(buf.data(), end);
}

void write_csv(const FieldGrid& grid, std::ostream& out) {
  out << "rho,zeta,t,re,im,abs2\n";
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    const std::string t = shortest_repr(grid.spec.t_samples[k]);
    const Eigen::MatrixXcd& v = grid.values[k];
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      const std::string rho = shortest_repr(grid.rho(i));
      for (Eigen::Index j = 0; j < v.cols(); ++j) {
        const Complex psi = v(i, j);
        out << rho << ',' << shortest_repr(grid.zeta(j)) << ',' << t << ','
            << shortest_repr(psi.real()) << ',' << shortest_repr(psi.imag()) << ','
            << shortest_repr(std::norm(psi)) << '\n';
      }
    }
  }
}

FieldGrid read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "rho,zeta,t,re,im,abs2") {
    throw ArgumentError("CSV header must be rho,zeta,t,re,im,abs2");
  }
  std::vector<double> rho, zeta, t, re, im;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string_view, 6> cells;
    std::string_view rest(line);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (c + 1 == cells.size())) {
        throw ArgumentError("CSV row must have six columns: " + line);
      }
      cells[c] = rest.substr(0, comma);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    rho.push_back(parse_double(cells[0]));
    zeta.push_back(parse_double(cells[1]));
    t.push_back(parse_double(cells[2]));
    re.push_back(parse_double(cells[3]));
    im.push_back(parse_double(cells[4]));
  }
  const std::vector<double> rhos = first_seen(rho);
  const std::vector<double> zetas = first_seen(zeta);
  const std::vector<double> times = first_seen(t);
  const std::size_t nr = rhos.size(), nz = zetas.size(), nt = times.size();
  if (nr * nz * nt != rho.size() || nr * nz * nt == 0) {
    throw GridError("CSV rows do not form a complete rho x zeta x t lattice");
  }
  FieldGrid grid;
  grid.rho = to_vector(rhos);
  grid.zeta = to_vector(zetas);
  grid.spec.rho_max = rhos.back();
  grid.spec.n_rho = static_cast<int>(nr);
  grid.spec.zeta_min = zetas.front();
  grid.spec.zeta_max = zetas.back();
  grid.spec.n_zeta = static_cast<int>(nz);
  grid.spec.t_samples = times;
  grid.spec.radial = rhos.front() == 0.0 ? RadialSampling::uniform : RadialSampling::bessel_zeros;
  std::size_t row = 0;
  for (std::size_t k = 0; k < nt; ++k) {
    Eigen::MatrixXcd v(nr, nz);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nz; ++j, ++row) {
        if (rho[row] != rhos[i] || zeta[row] != zetas[j] || t[row] != times[k]) {
          throw GridError("CSV rows are not in t, rho, zeta order");
        }
        v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(re[row], im[row]);
      }
    }
    grid.values.push_back(std::move(v));
  }
  return grid;
}

std::string to_json(const FieldGrid& grid) {
  json meta;
  meta["family"] = grid.info.family;
  meta["params"] = grid.info.params;
  json units;
  for (const char* key : {"hbar", "mass", "V"}) {
    if (auto it = grid.info.params.find(key); it != grid.info.params.end()) units[key] = it->second;
  }
  units["coordinates"] = "rho, zeta and t in the unit system fixed by hbar and mass";
  meta["units"] = units;
  meta["code_version"] = kCodeVersion;
  meta["errata_flags"] = grid.info.errata_flags;
  meta["frame_velocity"] = grid.info.frame_velocity;
  meta["axisymmetric"] = grid.info.axisymmetric;
  meta["notes"] = grid.notes;

  json g;
  g["rho_max"] = grid.spec.rho_max;
  g["n_rho"] = grid.spec.n_rho;
  g["zeta_min"] = grid.spec.zeta_min;
  g["zeta_max"] = grid.spec.zeta_max;
  g["n_zeta"] = grid.spec.n_zeta;
  g["t_samples"] = grid.spec.t_samples;
  g["phi"] = grid.spec.phi;
  g["radial"] = radial_name(grid.spec.radial);
  g["rho"] = std::vector<double>(grid.rho.data(), grid.rho.data() + grid.rho.size());
  g["zeta"] = std::vector<double>(grid.zeta.data(), grid.zeta.data() + grid.zeta.size());

  json data = json::array();
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    const Eigen::MatrixXcd& v = grid.values[k];
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      json re_row = json::array();
      json im_row = json::array();
      for (Eigen::Index j = 0; j < v.cols(); ++j) {
        re_row.push_back(v(i, j).real());
        im_row.push_back(v(i, j).imag());
      }
      re.push_back(std::move(re_row));
      im.push_back(std::move(im_row));
    }
    data.push_back({{"t", grid.spec.t_samples[k]}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  json doc;
  doc["meta"] = std::move(meta);
  doc["grid"] = std::move(g);
  doc["data"] = std::move(data);
  return doc.dump(1);
}

FieldGrid from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    FieldGrid grid;
    const json& meta = doc.at("meta");
    grid.info.family = meta.at("family").get<std::string>();
    grid.info.params = meta.at("params").get<std::map<std::string, double>>();
    grid.info.errata_flags = meta.at("errata_flags").get<std::vector<std::string>>();
    grid.info.frame_velocity = meta.value("frame_velocity", 0.0);
    grid.info.axisymmetric = meta.value("axisymmetric", true);
    if (meta.contains("notes")) grid.notes = meta["notes"].get<std::map<std::string, std::string>>();

    const json& g = doc.at("grid");
    grid.spec.rho_max = g.at("rho_max").get<double>();
    grid.spec.n_rho = g.at("n_rho").get<int>();
    grid.spec.zeta_min = g.at("zeta_min").get<double>();
    grid.spec.zeta_max = g.at("zeta_max").get<double>();
    grid.spec.n_zeta = g.at("n_zeta").get<int>();
    grid.spec.t_samples = g.at("t_samples").get<std::vector<double>>();
    grid.spec.phi = g.value("phi", 0.0);
    grid.spec.radial = parse_radial(g.at("radial").get<std::string>());
    grid.rho = to_vector(g.at("rho").get<std::vector<double>>());
    grid.zeta = to_vector(g.at("zeta").get<std::vector<double>>());

    for (const json& slice : doc.at("data")) {
      const auto re = slice.at("re").get<std::vector<std::vector<double>>>();
      const auto im = slice.at("im").get<std::vector<std::vector<double>>>();
      if (re.size() != static_cast<std::size_t>(grid.rho.size()) || im.size() != re.size()) {
        throw GridError("JSON data rows do not match the rho axis");
      }
      Eigen::MatrixXcd v(grid.rho.size(), grid.zeta.size());
      for (std::size_t i = 0; i < re.size(); ++i) {
        if (re[i].size() != static_cast<std::size_t>(grid.zeta.size()) || im[i].size() != re[i].size()) {
          throw GridError("JSON data columns do not match the zeta axis");
        }
        for (std::size_t j = 0; j < re[i].size(); ++j) {
          v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(re[i][j], im[i][j]);
        }
      }
      grid.values.push_back(std::move(v));
    }
    if (grid.values.size() != grid.spec.t_samples.size()) {
      throw GridError("JSON data slices do not match t_samples");
    }
    return grid;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed field JSON: ") + e.what());
  }
}

void write_field(const FieldGrid& grid, std::ostream& out, ExportFormat format) {
  if (format == ExportFormat::csv) {
    write_csv(grid, out);
  } else {
    out << to_json(grid) << '\n';
  }
}

void write_field(const FieldGrid& grid, const std::filesystem::path& path, ExportFormat format) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open '" + path.string() + "' for writing");
  write_field(grid, out, format);
}

FieldGrid read_field(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path.string() + "'");
  if (path.extension() == ".csv") return read_csv(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

}  // namespace lwave
