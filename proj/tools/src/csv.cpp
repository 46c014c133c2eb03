#include "ptrec/cli/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ptrec/errors.hpp"

namespace ptrec::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void fail(std::string_view source, std::size_t row, std::size_t col,
                       const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << row << ":" << col << ": " << what;
  throw InputError(msg.str());
}

}  // namespace

std::size_t SeriesTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw InputError("no column named '" + std::string(name) + "'");
}

SeriesTable read_series_csv(std::istream& in, std::string_view source) {
  SeriesTable table;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) fail(source, row, 1, "missing header row");
  table.names = split(line);
  for (std::size_t c = 0; c < table.names.size(); ++c) {
    if (table.names[c].empty()) fail(source, row, c + 1, "empty column name");
  }
  table.series.resize(table.names.size());
  std::vector<bool> ended(table.names.size(), false);

  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() > table.names.size()) {
      fail(source, row, table.names.size() + 1, "more cells than header columns");
    }
    for (std::size_t c = 0; c < table.names.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : std::string();
      if (cell.empty()) {
        ended[c] = true;
        continue;
      }
      if (ended[c]) fail(source, row, c + 1, "value after a missing cell in column '" + table.names[c] + "'");
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        fail(source, row, c + 1, "not a number: '" + cell + "'");
      }
      table.series[c].push_back(value);
    }
  }
  return table;
}

SeriesTable read_series_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_series_csv(in, path);
}

}  // namespace ptrec::cli
