#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wracah::output {

/// Filesystem failure; the message is the system's text, passed through unchanged.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.17g"; NaN as "nan".
std::string format_number(double v);

struct Table {
  std::vector<std::pair<std::string, std::string>> parameters;  ///< written as one comment line
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(const Table& table, std::ostream& os);
/// Same content as JSON; NaN becomes null.
void write_json(const Table& table, std::ostream& os);

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;  ///< non-finite entries are skipped and break the polyline
};

struct LevelLine {
  std::string label;
  double y = 0.0;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<LevelLine> levels;
};

/// Standalone SVG line chart. Throws ParameterError when there is nothing to draw.
void write_svg(const Plot& plot, std::ostream& os);

/// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace wracah::output
