#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

// Parse a single-token complex literal: "1.5", "-2e-3", "0.5i", "1+2i",
// "1.5e-3-2.5e-4i", "i", "-i".  Throws std::invalid_argument on bad syntax.
std::complex<double> parse_complex(const std::string& text);

// Shortest text with 17 significant digits; round-trips a double exactly and
// is byte-stable across runs.
std::string format_double(double x);

// Key-value config file: one `key = value` per line, `#` starts a comment,
// blank lines ignored.  Order preserved; malformed lines throw.
std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path);

} // namespace liealg
