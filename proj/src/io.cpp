#include "hbt/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hbt/errors.hpp"

namespace hbt {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void write_csv(std::ostream& out, const QuadratureGrid& grid, std::span<const double> values, bool spectral) {
  out << "# alpha=" << format_double(grid.alpha()) << " radius=" << format_double(grid.radius())
      << " n=" << grid.size() << " scheme=" << to_string(grid.scheme()) << " panels=" << grid.panels()
      << " points=" << grid.points_per_panel();
  if (spectral) out << " kind=spectral";
  out << '\n';
  const auto nodes = grid.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << format_double(nodes[i]) << ',' << format_double(values[i]) << '\n';
  }
}

double parse_number(std::string_view text, std::size_t line) {
  const auto trimmed_begin = text.find_first_not_of(" \t\r");
  const auto trimmed_end = text.find_last_not_of(" \t\r");
  if (trimmed_begin == std::string_view::npos) {
    throw ParseError("line " + std::to_string(line) + ": empty number");
  }
  text = text.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::map<std::string, std::string> parse_header(const std::string& line) {
  if (line.rfind('#', 0) != 0) throw ParseError("missing header line starting with '#'");
  std::map<std::string, std::string> fields;
  std::istringstream tokens(line.substr(1));
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("malformed header field '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

const std::string& require_field(const std::map<std::string, std::string>& fields, const std::string& name) {
  const auto it = fields.find(name);
  if (it == fields.end()) throw ParseError("header is missing field '" + name + "'");
  return it->second;
}

std::vector<double> read_csv(std::istream& in, const GridHandle& grid, bool spectral) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input: header is missing field 'alpha'");
  const auto fields = parse_header(line);

  // Check presence of every required field before comparing any of them.
  const std::string& alpha = require_field(fields, "alpha");
  const std::string& radius = require_field(fields, "radius");
  const std::string& n = require_field(fields, "n");
  const std::string& scheme = require_field(fields, "scheme");

  const auto kind = fields.find("kind");
  const bool is_spectral = kind != fields.end() && kind->second == "spectral";
  if (kind != fields.end() && !is_spectral) throw ParseError("unknown header kind '" + kind->second + "'");
  if (is_spectral != spectral) {
    throw ParseError(spectral ? "expected a spectral file (kind=spectral)" : "expected a sampled function, got kind=spectral");
  }

  if (parse_number(alpha, 1) != grid->alpha()) throw GridMismatch("file alpha " + alpha + " differs from the grid");
  if (parse_number(radius, 1) != grid->radius()) throw GridMismatch("file radius " + radius + " differs from the grid");
  if (parse_number(n, 1) != static_cast<double>(grid->size())) {
    throw GridMismatch("file has n=" + n + " nodes, grid has " + std::to_string(grid->size()));
  }
  QuadratureScheme file_scheme;
  try {
    file_scheme = parse_scheme(scheme);
  } catch (const InvalidConfig&) {
    throw ParseError("unknown scheme '" + scheme + "' in header");
  }
  if (file_scheme != grid->scheme()) throw GridMismatch("file scheme " + scheme + " differs from the grid");

  const auto nodes = grid->nodes();
  std::vector<double> values;
  values.reserve(nodes.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected 'x,value'");
    const double x = parse_number(std::string_view(line).substr(0, comma), line_no);
    const double v = parse_number(std::string_view(line).substr(comma + 1), line_no);
    if (values.size() >= nodes.size()) throw ParseError("more rows than the header's n");
    if (x != nodes[values.size()]) {
      throw GridMismatch("line " + std::to_string(line_no) + ": node " + format_double(x) +
                         " differs from grid node " + format_double(nodes[values.size()]));
    }
    values.push_back(v);
  }
  if (values.size() != nodes.size()) {
    throw ParseError("expected " + std::to_string(nodes.size()) + " rows, found " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

void write_function_csv(std::ostream& out, const SampledFunction& f) { write_csv(out, *f.grid, f.values, false); }

void write_spectral_csv(std::ostream& out, const SpectralFunction& F) {
  write_csv(out, *F.freq_grid, F.values, true);
}

SampledFunction read_function_csv(std::istream& in, const GridHandle& grid) {
  return {grid, read_csv(in, grid, false)};
}

SpectralFunction read_spectral_csv(std::istream& in, const GridHandle& grid) {
  return {grid, read_csv(in, grid, true)};
}

SampledFunction read_function_file(const std::string& path, const GridHandle& grid) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_function_csv(in, grid);
}

}  // namespace hbt
