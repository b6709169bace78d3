#pragma once

#include "fracspec/fractal/cantor.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace fracspec::fractal {

/// Flat key-value parameter text:
///
///     N = 2
///     eta = 1/3
///     beta = 0.6309297535714574   (optional)
///     points = 0, 2/3             (or "random" to sample from seed)
///     rule = constant | converging | custom
///     etas = 1/4, 8/27            (custom rule only)
///     seed = 7
///
/// '#' starts a comment. `prefix` selects keys such as "cantor.N".
CantorParams params_from_keys(const std::map<std::string, std::string>& keys, const std::string& prefix = "");
CantorParams read_params(std::istream& in);
void write_params(std::ostream& out, const CantorParams& params);

/// CSV rows (start_numerator, start_denominator, length_numerator, length_denominator),
/// sorted by start.
void write_level_csv(std::ostream& out, const CantorLevel& level);

/// Parses `key = value` lines; later keys override earlier ones.
std::map<std::string, std::string> parse_key_values(std::istream& in);

}  // namespace fracspec::fractal
