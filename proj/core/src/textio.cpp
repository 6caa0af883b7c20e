#include "slgen/textio.hpp"

#include <cstdio>

namespace slgen {

std::string format_g17(double v) {
    if (v == 0.0) v = 0.0; // normalize negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_g17(std::complex<double> v) {
    return format_g17(v.real()) + "," + format_g17(v.imag());
}

} // namespace slgen
