#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>

#include "su11/errors.hpp"
#include "su11/format.hpp"
#include "su11/iwasawa.hpp"
#include "su11/matrix.hpp"

namespace su11 {

/// Real unimodular 2x2 matrix (ABCD form), row-major.
template <std::floating_point Real = double>
struct Sl2rMatrix {
    Real a11{1}, a12{0}, a21{0}, a22{1};

    /// Validating constructor; throws DeterminantViolation.
    static Sl2rMatrix make(Real a11, Real a12, Real a21, Real a22, Real tol = Real(kDet)) {
        Sl2rMatrix r{a11, a12, a21, a22};
        const Real d = r.determinant();
        if (!std::isfinite(d) || std::abs(d - Real(1)) > tol) {
            throw DeterminantViolation("det = " + format_real(double(d)) + ", expected 1");
        }
        return r;
    }

    Real determinant() const { return a11 * a22 - a12 * a21; }
    Real trace() const { return a11 + a22; }

    Real distance(const Sl2rMatrix& o) const {
        return std::max({std::abs(a11 - o.a11), std::abs(a12 - o.a12), std::abs(a21 - o.a21),
                         std::abs(a22 - o.a22)});
    }

    friend Sl2rMatrix operator*(const Sl2rMatrix& x, const Sl2rMatrix& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
};

/// U M U^-1 with U = (1/sqrt 2) [[1, i], [i, 1]], expanded to real entries.
template <std::floating_point Real>
Sl2rMatrix<Real> to_sl2r(const Su11Matrix<Real>& m) {
    const auto a = m.alpha();
    const auto b = m.beta();
    return {a.real() + b.imag(), a.imag() + b.real(), b.real() - a.imag(), a.real() - b.imag()};
}

template <std::floating_point Real>
Su11Matrix<Real> from_sl2r(const Sl2rMatrix<Real>& r, Real tol = Real(kDet)) {
    const Real d = r.determinant();
    if (!std::isfinite(d) || std::abs(d - Real(1)) > tol) {
        throw DeterminantViolation("det = " + format_real(double(d)) + ", expected 1");
    }
    return Su11Matrix<Real>::unchecked({(r.a11 + r.a22) / Real(2), (r.a12 - r.a21) / Real(2)},
                                       {(r.a12 + r.a21) / Real(2), (r.a11 - r.a22) / Real(2)});
}

/// Field amplitudes (E+, E-).
template <std::floating_point Real = double>
struct FieldVector {
    std::complex<Real> plus;
    std::complex<Real> minus;
};

/// E_a = M E_s.
template <std::floating_point Real>
FieldVector<Real> apply_to_field(const Su11Matrix<Real>& m, const FieldVector<Real>& e) {
    return {m.alpha() * e.plus + m.beta() * e.minus, std::conj(m.beta()) * e.plus + std::conj(m.alpha()) * e.minus};
}

template <std::floating_point Real>
FieldVector<Real> apply_to_field(const Sl2rMatrix<Real>& r, const FieldVector<Real>& e) {
    return {r.a11 * e.plus + r.a12 * e.minus, r.a21 * e.plus + r.a22 * e.minus};
}

/// U C E: new field basis in which C M C^-1 acts as a real matrix.
template <std::floating_point Real>
FieldVector<Real> transform_field_vector(const FieldVector<Real>& e, const Su11Matrix<Real>& c) {
    const FieldVector<Real> ce = apply_to_field(c, e);
    const std::complex<Real> i(Real(0), Real(1));
    const Real s = Real(1) / std::numbers::sqrt2_v<Real>;
    return {s * (ce.plus + i * ce.minus), s * (i * ce.plus + ce.minus)};
}

/// Parameters of the real factorisation K(phi) A(xi) N(nu) in SL(2,R).
template <std::floating_point Real = double>
struct RealIwasawaFactors {
    Real phi{};
    Real xi{};
    Real nu{};
};

/// [[cos(phi/2), sin(phi/2)], [-sin(phi/2), cos(phi/2)]]
template <std::floating_point Real = double>
Sl2rMatrix<Real> real_k(Real phi) {
    const Real c = std::cos(phi / Real(2));
    const Real s = std::sin(phi / Real(2));
    return {c, s, -s, c};
}

/// diag(exp(xi/2), exp(-xi/2))
template <std::floating_point Real = double>
Sl2rMatrix<Real> real_a(Real xi) {
    return {std::exp(xi / Real(2)), Real(0), Real(0), std::exp(-xi / Real(2))};
}

/// [[1, 0], [nu, 1]]
template <std::floating_point Real = double>
Sl2rMatrix<Real> real_n(Real nu) {
    return {Real(1), Real(0), nu, Real(1)};
}

/// The U conjugation carries K/A/N onto their real forms with the same
/// parameters, so the SU(1,1) extraction is reused.
template <std::floating_point Real>
RealIwasawaFactors<Real> real_iwasawa(const Sl2rMatrix<Real>& r, Real tol = Real(kDet)) {
    const auto f = decompose(from_sl2r(r, tol));
    return {f.phi, f.xi, f.nu};
}

template <std::floating_point Real>
Sl2rMatrix<Real> recompose_real(const RealIwasawaFactors<Real>& f) {
    return real_k(f.phi) * (real_a(f.xi) * real_n(f.nu));
}

/// Ray-optics reading of the factors: rotation, magnifier, lens.
template <std::floating_point Real>
std::string physical_reading(const RealIwasawaFactors<Real>& f, Real tol = Real(1e-12)) {
    const bool rot = std::abs(f.phi) > tol;
    const bool mag = std::abs(f.xi) > tol;
    const bool lens = std::abs(f.nu) > tol;
    if (!rot && !mag && !lens) return "identity system\n";
    std::string out;
    out += "rotation by " + format_real(double(rot ? f.phi : 0)) + " rad\n";
    out += "magnifier scaling x by " + format_real(double(std::exp((mag ? f.xi : 0) / Real(2)))) +
           " and p by its inverse\n";
    out += "lens of power " + format_real(double(lens ? f.nu : 0)) + "\n";
    return out;
}

}  // namespace su11
