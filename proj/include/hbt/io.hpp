#pragma once

#include <iosfwd>
#include <string>

#include "hbt/quadrature.hpp"
#include "hbt/transform.hpp"

namespace hbt {

/// Text CSV for a function on a grid:
///
///   # alpha=<a> radius=<R> n=<N> scheme=<s> panels=<P> points=<Q>
///   x,value
///   ...
///
/// Spectral files add `kind=spectral` to the header; their first column is
/// lambda. Numbers carry 17 significant digits, so a write/read cycle is
/// exact.
void write_function_csv(std::ostream& out, const SampledFunction& f);
void write_spectral_csv(std::ostream& out, const SpectralFunction& F);

/// Reads a file written by write_function_csv onto `grid`. Throws ParseError
/// for a malformed header (the message names the missing field) or row, and
/// GridMismatch when alpha, radius, n, scheme or the node set differ from
/// `grid`. Rejects spectral files.
SampledFunction read_function_csv(std::istream& in, const GridHandle& grid);
SpectralFunction read_spectral_csv(std::istream& in, const GridHandle& grid);

SampledFunction read_function_file(const std::string& path, const GridHandle& grid);

/// `value` with 17 significant digits; "inf", "-inf" or "nan" otherwise.
std::string format_double(double value);

}  // namespace hbt
