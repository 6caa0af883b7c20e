// textio.hpp — deterministic numeric formatting shared by every text output
#pragma once

#include <complex>
#include <string>

namespace slgen {

// fixed 17-significant-digit formatting; identical configs give identical bytes
std::string format_g17(double v);
std::string format_g17(std::complex<double> v); // "re,im" pair

} // namespace slgen
