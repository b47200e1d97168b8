#pragma once

#include <string>

#include "entrobound/quantum.hpp"

namespace entrobound {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Matrix files are JSON objects {"d": n, "entries_re": [...], "entries_im": [...]}
// with row-major entries; entries_im may be omitted for real matrices.
HermitianMatrix parse_matrix_json(const std::string& text);
HermitianMatrix load_matrix(const std::string& path);
DensityMatrix load_density(const std::string& path);
std::string matrix_to_json(const HermitianMatrix& m);

// Plain JSON array of nonnegative reals -> distribution.
DiscreteDistribution load_distribution(const std::string& path);

std::string report_to_json(const BoundReport& r);

}  // namespace entrobound
