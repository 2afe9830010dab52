#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include "su11/disc_point.hpp"
#include "su11/errors.hpp"
#include "su11/format.hpp"
#include "su11/tolerances.hpp"

namespace su11 {

/**
 * Lossless multilayer transfer matrix, an element of SU(1,1).
 *
 * The full 2x2 form is [[alpha, beta], [conj(beta), conj(alpha)]]; only the
 * pair (alpha, beta) is stored, so the only constraint that can be violated
 * is |alpha|^2 - |beta|^2 = 1. That constraint is checked when a matrix is
 * built from external data and never silently restored afterwards; call
 * renormalized() explicitly after long product chains.
 */
template <std::floating_point Real>
class Su11Matrix {
public:
    using real_type = Real;
    using complex_type = std::complex<Real>;
    using entries_type = std::array<std::array<complex_type, 2>, 2>;

    /// Identity.
    constexpr Su11Matrix() = default;

    /// Validating constructor; throws DeterminantViolation.
    static Su11Matrix make(complex_type alpha, complex_type beta, Real tol = Real(kDet)) {
        Su11Matrix m(alpha, beta);
        const Real defect = m.determinant() - Real(1);
        if (!std::isfinite(defect) || std::abs(defect) > tol) {
            throw DeterminantViolation("|alpha|^2 - |beta|^2 = " + format_real(double(m.determinant())) +
                                       ", expected 1");
        }
        return m;
    }

    /// Wraps a pair already known to satisfy the constraint (group products, generators).
    static constexpr Su11Matrix unchecked(complex_type alpha, complex_type beta) {
        return Su11Matrix(alpha, beta);
    }

    static constexpr Su11Matrix identity() { return Su11Matrix(); }

    /// Matrix from the overall reflection and transmission coefficients:
    /// alpha = 1/T, beta = conj(R)/conj(T).
    static Su11Matrix from_coefficients(complex_type r, complex_type t, Real tol = Real(kDet)) {
        if (t == complex_type(0)) throw ZeroTransmission("transmission coefficient is zero");
        const Real energy = std::norm(r) + std::norm(t);
        if (!std::isfinite(energy) || std::abs(energy - Real(1)) > tol) {
            throw DeterminantViolation("|R|^2 + |T|^2 = " + format_real(double(energy)) + ", expected 1");
        }
        return make(Real(1) / t, std::conj(r) / std::conj(t), tol);
    }

    constexpr complex_type alpha() const { return alpha_; }
    constexpr complex_type beta() const { return beta_; }

    entries_type entries() const {
        return {{{alpha_, beta_}, {std::conj(beta_), std::conj(alpha_)}}};
    }

    /// |alpha|^2 - |beta|^2.
    Real determinant() const { return std::norm(alpha_) - std::norm(beta_); }

    Real trace() const { return Real(2) * alpha_.real(); }

    Su11Matrix inverse() const { return Su11Matrix(std::conj(alpha_), -beta_); }

    Su11Matrix operator-() const { return Su11Matrix(-alpha_, -beta_); }

    /// Rescales by 1/sqrt(|alpha|^2 - |beta|^2). Throws if that quantity is not positive.
    Su11Matrix renormalized() const {
        const Real d = determinant();
        if (!(d > Real(0))) throw DeterminantViolation("cannot renormalize: |alpha|^2 - |beta|^2 <= 0");
        const Real s = Real(1) / std::sqrt(d);
        return Su11Matrix(alpha_ * s, beta_ * s);
    }

    /// Induced bilinear map z -> (conj(beta) + conj(alpha) z) / (alpha + beta z).
    DiscPoint<Real> apply(const DiscPoint<Real>& z) const {
        if (z.is_infinite()) {
            if (beta_ == complex_type(0)) return DiscPoint<Real>::infinity();
            return finite_or_infinity(std::conj(alpha_) / beta_);
        }
        const complex_type w = z.value();
        const complex_type den = alpha_ + beta_ * w;
        if (den == complex_type(0)) return DiscPoint<Real>::infinity();
        return finite_or_infinity((std::conj(beta_) + std::conj(alpha_) * w) / den);
    }

    /// Max-entry distance between the (alpha, beta) pairs.
    Real distance(const Su11Matrix& other) const {
        return std::max(std::abs(alpha_ - other.alpha_), std::abs(beta_ - other.beta_));
    }

    friend Su11Matrix operator*(const Su11Matrix& a, const Su11Matrix& b) {
        return Su11Matrix(a.alpha_ * b.alpha_ + a.beta_ * std::conj(b.beta_),
                          a.alpha_ * b.beta_ + a.beta_ * std::conj(b.alpha_));
    }

    friend bool operator==(const Su11Matrix&, const Su11Matrix&) = default;

private:
    constexpr Su11Matrix(complex_type alpha, complex_type beta) : alpha_(alpha), beta_(beta) {}

    static DiscPoint<Real> finite_or_infinity(complex_type z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return DiscPoint<Real>::infinity();
        return DiscPoint<Real>(z);
    }

    complex_type alpha_{Real(1), Real(0)};
    complex_type beta_{Real(0), Real(0)};
};

using Matrix = Su11Matrix<double>;
using Point = DiscPoint<double>;

template <std::floating_point Real>
Su11Matrix<Real> multiply(const Su11Matrix<Real>& a, const Su11Matrix<Real>& b) {
    return a * b;
}

template <std::floating_point Real>
Su11Matrix<Real> inverse(const Su11Matrix<Real>& m) {
    return m.inverse();
}

template <std::floating_point Real>
Real trace(const Su11Matrix<Real>& m) {
    return m.trace();
}

template <std::floating_point Real>
DiscPoint<Real> mobius_apply(const Su11Matrix<Real>& m, const DiscPoint<Real>& z) {
    return m.apply(z);
}

/// C * M * C^-1.
template <std::floating_point Real>
Su11Matrix<Real> conjugate(const Su11Matrix<Real>& m, const Su11Matrix<Real>& c) {
    return c * m * c.inverse();
}

/// Overall reflection and transmission coefficients of a transfer matrix.
template <std::floating_point Real>
struct Coefficients {
    std::complex<Real> reflection;
    std::complex<Real> transmission;
};

/// T = 1/alpha, R = conj(beta)/alpha.
template <std::floating_point Real>
Coefficients<Real> coefficients(const Su11Matrix<Real>& m) {
    return {std::conj(m.beta()) / m.alpha(), Real(1) / m.alpha()};
}

}  // namespace su11
