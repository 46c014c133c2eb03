#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ptrec::cli {

/// Numeric CSV with a header row.  Each column is one series; a column may
/// end early (empty trailing cells), but a gap followed by more values is an
/// error.
struct SeriesTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;

  /// Index of the named column.  Throws InputError if absent.
  std::size_t index_of(std::string_view name) const;
};

/// Throws InputError with "source:row:column" context on malformed input.
SeriesTable read_series_csv(std::istream& in, std::string_view source);
SeriesTable read_series_csv_file(const std::string& path);

}  // namespace ptrec::cli
