#ifndef INTERFERO_IO_HPP
#define INTERFERO_IO_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "interfero/core.hpp"
#include "interfero/oracle.hpp"

// Deterministic text output: fixed "%.12g" number formatting, '.' decimal
// point, byte-identical files for identical inputs. CSV headers carry the
// full generating configuration as '#'-prefixed key: value lines.

namespace interfero::io {

using Header = std::vector<std::pair<std::string, std::string>>;

std::string format_number(double v);

// Header lines describing the curve's generating config plus its metadata.
Header curve_header(const PatternCurve& curve);

void write_xy_csv(const std::string& path, std::span<const double> xs,
                  std::span<const double> ys, const std::string& x_name,
                  const std::string& y_name, const Header& header);

void write_curve_csv(const std::string& path, const PatternCurve& curve,
                     const std::string& x_name, const std::string& y_name);

// Long-format grid dump: one "x,y,value" row per cell, row-major in y.
void write_grid_csv(const std::string& path, std::span<const double> xs,
                    std::span<const double> ys, std::span<const double> values,
                    const std::string& x_name, const std::string& y_name,
                    const std::string& v_name, const Header& header);

// Tabulated single-mode envelope files: '#' comments, then a grid line
//   grid <u_min> <u_max> <nu>                 (1-D)
//   grid <u_min> <u_max> <nu> <v_min> <v_max> <nv>   (2-D, row-major in v)
// followed by the whitespace-separated sample values.
oracle::TabulatedEnvelope1D load_envelope_1d(const std::string& path);
oracle::TabulatedEnvelope2D load_envelope_2d(const std::string& path);

// Number of grid dimensions declared in the file (1 or 2).
int envelope_file_rank(const std::string& path);

}  // namespace interfero::io

#endif  // INTERFERO_IO_HPP
