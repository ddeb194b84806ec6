#pragma once

#include <filesystem>
#include <string>

#include "ambc/sweep.hpp"

namespace ambc {

// INI-style text: `[section]` headers and `key = value` lines, `#` comments.
// Sections: [sweep] kind samples seed stream crn monte_carlo workers;
//           [system] M N K alpha P noise_var var1 var_rb var_bc;
//           [axis] and [axis_k] start stop points scale values.
// Keys before the first header belong to [sweep]. Unknown sections or keys,
// duplicates and malformed values raise ConfigError with the line number.
// Missing keys take the defaults of the sweep kind, which is `fallback_kind`
// when the text does not name one.
SweepSpec parse_config_text(const std::string& text, SweepKind fallback_kind = SweepKind::SnrSweep);
SweepSpec parse_config(const std::filesystem::path& path, SweepKind fallback_kind = SweepKind::SnrSweep);

// Inverse of parse_config_text: parse_config_text(format_spec(s)) == s.
std::string format_spec(const SweepSpec& spec);

// Shortest representation that parses back to the same double.
std::string format_double(double x);

}  // namespace ambc
