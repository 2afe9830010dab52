#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

namespace su11 {

/// 12 significant digits, lowercase exponent, no negative zero.
inline std::string format_real(double x) {
    if (x == 0.0) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

/// "re+imi" / "re-imi".
inline std::string format_complex(std::complex<double> z) {
    const std::string im = format_real(std::abs(z.imag()));
    const bool negative = std::signbit(z.imag()) && format_real(z.imag()) != "0";
    return format_real(z.real()) + (negative ? "-" : "+") + im + "i";
}

}  // namespace su11
