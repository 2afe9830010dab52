#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <utility>
#include <variant>
#include <vector>

#include "su11/classify.hpp"
#include "su11/errors.hpp"
#include "su11/iwasawa.hpp"
#include "su11/matrix.hpp"

namespace su11 {

template <std::floating_point Real = double>
struct OrbitSample {
    Real parameter{};
    DiscPoint<Real> point;
};

/// Sampled orbit of a seed under a one-parameter subgroup, ordered by parameter.
template <std::floating_point Real = double>
struct Orbit {
    ClassTag subgroup{ClassTag::K};
    DiscPoint<Real> seed;
    std::vector<OrbitSample<Real>> samples;
};

/// Iterates z_{k+1} = Phi[M, z_k]; points[0] is the seed.
template <std::floating_point Real = double>
struct Trajectory {
    Su11Matrix<Real> matrix;
    DiscPoint<Real> seed;
    std::vector<DiscPoint<Real>> points;
};

inline constexpr int kDefaultOrbitSamples = 256;

/// Default parameter ranges: K over [0, 4pi], A over [-6, 6], N over [-20, 20].
template <std::floating_point Real = double>
std::pair<Real, Real> default_range(ClassTag subgroup) {
    switch (subgroup) {
        case ClassTag::K: return {Real(0), Real(4) * std::numbers::pi_v<Real>};
        case ClassTag::A: return {Real(-6), Real(6)};
        case ClassTag::N:
        default: return {Real(-20), Real(20)};
    }
}

template <std::floating_point Real>
Su11Matrix<Real> subgroup_element(ClassTag subgroup, Real parameter) {
    switch (subgroup) {
        case ClassTag::K: return make_k(parameter);
        case ClassTag::A: return make_a(parameter);
        case ClassTag::N:
        default: return make_n(parameter);
    }
}

/// samples[k] = Phi[G(p_k), seed] with p_k uniform on [lo, hi], endpoints included.
template <std::floating_point Real>
Orbit<Real> orbit(ClassTag subgroup, const DiscPoint<Real>& seed, Real lo, Real hi,
                  int n_samples = kDefaultOrbitSamples) {
    if (n_samples < 2) throw InvalidRange("orbit needs at least 2 samples");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidRange("orbit range needs lo < hi");
    if (seed.is_infinite()) throw InvalidRange("orbit seed must be finite");

    Orbit<Real> out{subgroup, seed, {}};
    out.samples.reserve(static_cast<std::size_t>(n_samples));
    const Real step = (hi - lo) / Real(n_samples - 1);
    for (int k = 0; k < n_samples; ++k) {
        const Real p = k == n_samples - 1 ? hi : lo + step * Real(k);
        out.samples.push_back({p, subgroup_element(subgroup, p).apply(seed)});
    }
    return out;
}

template <std::floating_point Real>
Trajectory<Real> iterate(const Su11Matrix<Real>& m, const DiscPoint<Real>& seed, int n_steps) {
    if (n_steps < 1) throw InvalidRange("iterate needs at least one step");
    Trajectory<Real> out{m, seed, {seed}};
    out.points.reserve(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k < n_steps; ++k) out.points.push_back(m.apply(out.points.back()));
    return out;
}

template <std::floating_point Real = double>
struct Circle {
    std::complex<Real> center;
    Real radius{};
};

/// Returned instead of a circle when the three points are collinear.
template <std::floating_point Real = double>
struct Line {
    std::complex<Real> point;
    std::complex<Real> direction;  // unit length
};

template <std::floating_point Real = double>
using CircleFit = std::variant<Circle<Real>, Line<Real>>;

/// Circle through three points; collinear within tol (triangle area) gives a Line.
template <std::floating_point Real>
CircleFit<Real> fit_circle(const DiscPoint<Real>& p1, const DiscPoint<Real>& p2, const DiscPoint<Real>& p3,
                           Real tol = Real(kGeo)) {
    if (p1.is_infinite() || p2.is_infinite() || p3.is_infinite()) {
        throw InvalidRange("circle fit needs finite points");
    }
    const auto a = p1.value();
    const auto b = p2.value();
    const auto c = p3.value();
    if (std::abs(a - b) <= tol || std::abs(b - c) <= tol || std::abs(a - c) <= tol) {
        throw DuplicatePoints("circle fit needs three distinct points");
    }
    const auto ab = b - a;
    const auto ac = c - a;
    const Real cross = (std::conj(ab) * ac).imag();
    if (std::abs(cross) / Real(2) <= tol) {
        const auto far = std::abs(ac) > std::abs(ab) ? ac : ab;
        return Line<Real>{a, far / std::abs(far)};
    }
    // Circumcenter relative to a.
    const Real d = Real(2) * cross;
    const Real nb = std::norm(ab);
    const Real nc = std::norm(ac);
    const std::complex<Real> rel((ac.imag() * nb - ab.imag() * nc) / d, (ab.real() * nc - ac.real() * nb) / d);
    return Circle<Real>{a + rel, std::abs(rel)};
}

/// Distance from z to the fitted circle or line.
template <std::floating_point Real>
Real distance_to(const CircleFit<Real>& fit, std::complex<Real> z) {
    if (const auto* circle = std::get_if<Circle<Real>>(&fit)) {
        return std::abs(std::abs(z - circle->center) - circle->radius);
    }
    const auto& line = std::get<Line<Real>>(fit);
    return std::abs((std::conj(line.direction) * (z - line.point)).imag());
}

}  // namespace su11
