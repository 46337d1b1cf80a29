#pragma once

#include <string>

namespace opburgers::format {

/// Number with 12 significant digits, as used in every report.
std::string number(double value);

/// Round to 12 significant digits, for values serialized through JSON.
double rounded(double value);

}  // namespace opburgers::format
