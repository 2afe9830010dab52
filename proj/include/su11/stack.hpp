#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/format.hpp"
#include "su11/matrix.hpp"
#include "su11/tolerances.hpp"

namespace su11 {

enum class Polarization { s, p };

template <std::floating_point Real = double>
struct Layer {
    Real index{1};
    Real thickness{0};  // same length unit as the wavelength
};

/// Lossless planar stack between identical ambient and substrate media.
template <std::floating_point Real = double>
struct LayerStack {
    Real ambient_index{1};
    std::vector<Layer<Real>> layers;
    Real substrate_index{1};
    Real wavelength{1};
    Real incidence_angle_deg{0};
    Polarization polarization{Polarization::s};
};

/// Refraction angle (radians) from n_from sin(theta_from) = n_to sin(theta_to).
template <std::floating_point Real>
Real snell_angle(Real n_from, Real theta_from, Real n_to) {
    const Real s = n_from * std::sin(theta_from) / n_to;
    if (!(s < Real(1))) throw EvanescentWave("no propagating wave in medium of index " + format_real(double(n_to)));
    return std::asin(s);
}

namespace detail {

template <std::floating_point Real>
using Mat2 = std::array<std::complex<Real>, 4>;  // row-major

template <std::floating_point Real>
Mat2<Real> mul(const Mat2<Real>& x, const Mat2<Real>& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

/// (1/t) [[1, r], [r, 1]] for the interface from medium i to medium j.
template <std::floating_point Real>
Mat2<Real> interface_matrix(Real ni, Real cos_i, Real nj, Real cos_j, Polarization pol) {
    Real r{};
    Real t{};
    if (pol == Polarization::s) {
        const Real den = ni * cos_i + nj * cos_j;
        r = (ni * cos_i - nj * cos_j) / den;
        t = Real(2) * ni * cos_i / den;
    } else {
        const Real den = nj * cos_i + ni * cos_j;
        r = (nj * cos_i - ni * cos_j) / den;
        t = Real(2) * ni * cos_i / den;
    }
    return {Real(1) / t, r / t, r / t, Real(1) / t};
}

/// diag(exp(-i delta), exp(+i delta))
template <std::floating_point Real>
Mat2<Real> propagation_matrix(Real delta) {
    return {std::polar(Real(1), -delta), Real(0), Real(0), std::polar(Real(1), delta)};
}

}  // namespace detail

/**
 * Transfer matrix of a stack: I(0,1) L(1) I(1,2) ... L(m) I(m,s), with the
 * phase thickness delta_j = (2 pi / lambda) n_j d_j cos(theta_j) and
 * L = diag(exp(-i delta), exp(i delta)).
 *
 * Throws EvanescentWave if a medium cannot carry a propagating wave and
 * DeterminantViolation if the product leaves SU(1,1) (mismatched ambient and
 * substrate).
 */
template <std::floating_point Real>
Su11Matrix<Real> build_matrix(const LayerStack<Real>& stack, Real tol = Real(kDet)) {
    if (!(stack.ambient_index > 0) || !(stack.substrate_index > 0) || !(stack.wavelength > 0)) {
        throw InvalidRange("indices and wavelength must be positive");
    }
    if (!(stack.incidence_angle_deg >= 0) || !(stack.incidence_angle_deg < 90)) {
        throw InvalidRange("incidence angle must lie in [0, 90) degrees");
    }
    const Real theta0 = stack.incidence_angle_deg * std::numbers::pi_v<Real> / Real(180);
    const Real invariant = stack.ambient_index * std::sin(theta0);

    auto cos_in = [&](Real n) {
        if (!(n > 0)) throw InvalidRange("layer index must be positive");
        if (n < invariant + Real(kEvanescent)) {
            throw EvanescentWave("layer of index " + format_real(double(n)) + " is below the critical index");
        }
        return std::cos(snell_angle(stack.ambient_index, theta0, n));
    };

    detail::Mat2<Real> m{Real(1), Real(0), Real(0), Real(1)};
    Real n_prev = stack.ambient_index;
    Real cos_prev = std::cos(theta0);
    for (const auto& layer : stack.layers) {
        if (!(layer.thickness >= 0)) throw InvalidRange("layer thickness must be non-negative");
        const Real cos_j = cos_in(layer.index);
        const Real delta =
            Real(2) * std::numbers::pi_v<Real> / stack.wavelength * layer.index * layer.thickness * cos_j;
        m = detail::mul(m, detail::interface_matrix(n_prev, cos_prev, layer.index, cos_j, stack.polarization));
        m = detail::mul(m, detail::propagation_matrix(delta));
        n_prev = layer.index;
        cos_prev = cos_j;
    }
    const Real cos_s = cos_in(stack.substrate_index);
    m = detail::mul(m, detail::interface_matrix(n_prev, cos_prev, stack.substrate_index, cos_s, stack.polarization));
    return Su11Matrix<Real>::make(m[0], m[1], tol);
}

}  // namespace su11
