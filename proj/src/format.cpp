#include "opburgers/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace opburgers::format {

std::string number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

double rounded(double value) {
    if (!std::isfinite(value)) return value;
    return std::strtod(number(value).c_str(), nullptr);
}

}  // namespace opburgers::format
