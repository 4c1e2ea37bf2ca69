#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lwave/grid.hpp"

namespace lwave {

enum class ExportFormat { csv, json };

ExportFormat parse_export_format(const std::string& name);

/// Shortest decimal that parses back to the same double.
std::string shortest_repr(double x);

/// Columns rho,zeta,t,re,im,abs2 with zeta varying fastest, then rho, then t.
void write_csv(const FieldGrid& grid, std::ostream& out);

/// Rebuilds axes and values from the columns. Metadata is not part of the CSV
/// contract, so info and notes come back empty.
FieldGrid read_csv(std::istream& in);

/// {meta, grid, data}; doubles are written with round-trip precision.
std::string to_json(const FieldGrid& grid);
FieldGrid from_json(const std::string& text);

void write_field(const FieldGrid& grid, const std::filesystem::path& path, ExportFormat format);
void write_field(const FieldGrid& grid, std::ostream& out, ExportFormat format);
FieldGrid read_field(const std::filesystem::path& path);

}  // namespace lwave
