#pragma once

#include <string>
#include <vector>

#include "cascade/matrix.hpp"
#include "cascade/params.hpp"
#include "cascade/schmidt.hpp"
#include "cascade/spectra.hpp"

namespace cascade {

// Full-precision decimal formatting (%.17g): the printed value parses back to
// the identical double, which keeps goldens and round-trips bit-comparable.
std::string format_double(double v);

// Long-format surface CSV: header "x,y,value", rows in row-major grid order.
void write_real_surface_csv(const std::string& path, const std::string& xname,
                            const std::string& yname, const std::string& vname,
                            const FrequencyGrid& x, const FrequencyGrid& y,
                            const RealMatrix& values);

// Long-format complex surface CSV: "x,y,re,im,abs2".
void write_complex_surface_csv(const std::string& path, const std::string& xname,
                               const std::string& yname, const FrequencyGrid& x,
                               const FrequencyGrid& y, const ComplexMatrix& values);

// Spectrum CSV: "omega_ghz,s_alpha,s_beta,s_total".
void write_spectrum_csv(const std::string& path, const FrequencyGrid& grid,
                        const std::vector<double>& s_alpha, const std::vector<double>& s_beta,
                        const std::vector<double>& s_total);

// Generic column table.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

std::string read_text_file(const std::string& path);

// Parses a CSV written by the functions above; returns rows of doubles,
// skipping the header line.
std::vector<std::vector<double>> read_csv_rows(const std::string& path);

}  // namespace cascade
