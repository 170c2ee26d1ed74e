#pragma once

#include <string>
#include <string_view>

namespace casimir::units {

/// Parse "100um", "5mm", "1e-6m", "250nm" into meters.  A unit suffix is
/// mandatory: the working scales here (100 um radii, 1 um gaps) make a bare
/// number a latent um/m catastrophe.  Throws std::invalid_argument naming
/// `flag` on malformed input.
double parse_length(std::string_view text, const std::string& flag);

/// Parse "1mm2", "2.5e-7m2", "100um2" into m^2.
double parse_area(std::string_view text, const std::string& flag);

/// Parse "10mV", "0.5V", "200uV" into volts.
double parse_voltage(std::string_view text, const std::string& flag);

std::string format_si(double value);  ///< %.9e, ten significant digits

}  // namespace casimir::units
