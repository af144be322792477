#pragma once

#include <filesystem>
#include <iosfwd>

#include "rieszcheck/grid.hpp"

namespace rieszcheck {

// Binary field file, little-endian:
//   "RZF1" | u32 d | u32 dims[d] | f64 h | f64 origin[d] | f64 values[prod dims]
// Values are row-major. Only cubic grids (all dims equal) are accepted.
//
// Failures raise Error with BadMagic, UnsupportedDimension, UnsupportedShape,
// TruncatedPayload, NonFiniteValue or IoFailure.

void write_field(const Field& f, std::ostream& out);
void write_field(const Field& f, const std::filesystem::path& path);
Field read_field(std::istream& in);
Field read_field(const std::filesystem::path& path);

// CSV: header line "# d n h origin_0 .. origin_{d-1}", then one value per line.
void write_field_csv(const Field& f, std::ostream& out);
void write_field_csv(const Field& f, const std::filesystem::path& path);
Field read_field_csv(std::istream& in);
Field read_field_csv(const std::filesystem::path& path);

/// Dispatches on extension: ".csv" is text, anything else binary.
Field load_field(const std::filesystem::path& path);
void save_field(const Field& f, const std::filesystem::path& path);

}  // namespace rieszcheck
