#ifndef WGSHIFT_PRESENTATION_IO_HPP
#define WGSHIFT_PRESENTATION_IO_HPP

#include <string>

#include "wgshift/presentation.hpp"

namespace wgs {

// Strict parser: unknown keys are rejected, weight integers are reduced mod p.
// Throws Error(ParseError) on malformed input, Error(NotPrime) on a bad field.
Presentation load_presentation(const std::string& json_text);
Presentation load_presentation_file(const std::string& path);

// Canonical form: fixed key order, two-space indent, trailing newline.
// Loading the output reproduces the presentation exactly.
std::string save_presentation(const Presentation& p);

} // namespace wgs

#endif
