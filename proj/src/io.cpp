#include "cascade/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cascade/errors.hpp"

namespace cascade {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  return f;
}

}  // namespace

void write_real_surface_csv(const std::string& path, const std::string& xname,
                            const std::string& yname, const std::string& vname,
                            const FrequencyGrid& x, const FrequencyGrid& y,
                            const RealMatrix& values) {
  auto f = open_out(path);
  f << xname << ',' << yname << ',' << vname << '\n';
  for (std::size_t i = 0; i < x.n_points(); ++i)
    for (std::size_t j = 0; j < y.n_points(); ++j)
      f << format_double(x.at(i)) << ',' << format_double(y.at(j)) << ','
        << format_double(values(i, j)) << '\n';
}

void write_complex_surface_csv(const std::string& path, const std::string& xname,
                               const std::string& yname, const FrequencyGrid& x,
                               const FrequencyGrid& y, const ComplexMatrix& values) {
  auto f = open_out(path);
  f << xname << ',' << yname << ",re,im,abs2\n";
  for (std::size_t i = 0; i < x.n_points(); ++i)
    for (std::size_t j = 0; j < y.n_points(); ++j) {
      const complexd v = values(i, j);
      const double a2 = v.real() * v.real() + v.imag() * v.imag();
      f << format_double(x.at(i)) << ',' << format_double(y.at(j)) << ','
        << format_double(v.real()) << ',' << format_double(v.imag()) << ','
        << format_double(a2) << '\n';
    }
}

void write_spectrum_csv(const std::string& path, const FrequencyGrid& grid,
                        const std::vector<double>& s_alpha, const std::vector<double>& s_beta,
                        const std::vector<double>& s_total) {
  auto f = open_out(path);
  f << "omega_ghz,s_alpha,s_beta,s_total\n";
  for (std::size_t i = 0; i < grid.n_points(); ++i)
    f << format_double(grid.at(i)) << ',' << format_double(s_alpha[i]) << ','
      << format_double(s_beta[i]) << ',' << format_double(s_total[i]) << '\n';
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  auto f = open_out(path);
  for (std::size_t i = 0; i < header.size(); ++i) f << (i ? "," : "") << header[i];
  f << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << format_double(row[i]);
    f << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (first) {  // header
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::string cell =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      row.push_back(std::strtod(cell.c_str(), nullptr));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cascade
