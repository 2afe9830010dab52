#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>

#include "su11/matrix.hpp"

namespace su11 {

/// K(phi): compact factor, alpha = exp(i phi/2), beta = 0.
template <std::floating_point Real = double>
Su11Matrix<Real> make_k(Real phi) {
    return Su11Matrix<Real>::unchecked(std::polar(Real(1), phi / Real(2)), {});
}

/// A(xi): abelian factor, alpha = cosh(xi/2), beta = i sinh(xi/2).
template <std::floating_point Real = double>
Su11Matrix<Real> make_a(Real xi) {
    return Su11Matrix<Real>::unchecked({std::cosh(xi / Real(2)), Real(0)},
                                       {Real(0), std::sinh(xi / Real(2))});
}

/// N(nu): nilpotent factor, alpha = 1 - i nu/2, beta = nu/2.
template <std::floating_point Real = double>
Su11Matrix<Real> make_n(Real nu) {
    return Su11Matrix<Real>::unchecked({Real(1), -nu / Real(2)}, {nu / Real(2), Real(0)});
}

/// Parameters of M = K(phi) A(xi) N(nu). phi lies in (-2pi, 2pi].
template <std::floating_point Real = double>
struct IwasawaFactors {
    Real phi{};
    Real xi{};
    Real nu{};
};

/// Principal argument in (-pi, pi]; std::arg may return -pi for a negative zero imaginary part.
template <std::floating_point Real>
Real principal_arg(std::complex<Real> z) {
    Real a = std::arg(z);
    if (a <= -std::numbers::pi_v<Real>) a += Real(2) * std::numbers::pi_v<Real>;
    return a;
}

/**
 * Iwasawa factors of m.
 *
 * With u = alpha + i beta = exp(i phi/2) exp(-xi/2), which never vanishes on
 * SU(1,1), the factors are phi = 2 arg u, xi = -2 ln|u| and
 * nu = -Im((alpha - i beta)/u).
 */
template <std::floating_point Real>
IwasawaFactors<Real> decompose(const Su11Matrix<Real>& m) {
    const std::complex<Real> i(Real(0), Real(1));
    const std::complex<Real> u = m.alpha() + i * m.beta();
    const std::complex<Real> w = (m.alpha() - i * m.beta()) / u;
    return {Real(2) * principal_arg(u), Real(-2) * std::log(std::abs(u)), -w.imag()};
}

template <std::floating_point Real>
Su11Matrix<Real> recompose(const IwasawaFactors<Real>& f) {
    return make_k(f.phi) * (make_a(f.xi) * make_n(f.nu));
}

/// Magnification exp(xi/2) of the abelian factor.
template <std::floating_point Real>
Real magnification(const IwasawaFactors<Real>& f) {
    return std::exp(f.xi / Real(2));
}

}  // namespace su11
