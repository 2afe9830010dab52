#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>

#include "su11/su11.hpp"

namespace su11::testing {

using Cx = std::complex<double>;
using Mat2 = std::array<std::array<Cx, 2>, 2>;

/// Plain 2x2 complex product, independent of the (alpha, beta) storage.
inline Mat2 mul(const Mat2& x, const Mat2& y) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

inline double max_diff(const Mat2& x, const Mat2& y) {
    double d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(x[i][j] - y[i][j]));
    return d;
}

class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Random SU(1,1) element built directly from (alpha, beta), not via Iwasawa.
    Matrix matrix(double max_beta = 3.0) {
        const Cx beta = std::polar(uniform(0.0, max_beta), uniform(-std::numbers::pi, std::numbers::pi));
        const Cx alpha = std::polar(std::sqrt(1.0 + std::norm(beta)), uniform(-std::numbers::pi, std::numbers::pi));
        return Matrix::unchecked(alpha, beta);
    }

    Point disc_point(double max_radius = 0.95) {
        return Point(std::polar(max_radius * std::sqrt(uniform(0.0, 1.0)), uniform(-std::numbers::pi, std::numbers::pi)));
    }

    /// Point avoiding the poles of m.
    Point plane_point(double max_radius = 3.0) {
        return Point(std::polar(uniform(0.0, max_radius), uniform(-std::numbers::pi, std::numbers::pi)));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace su11::testing

namespace su11 {
inline std::ostream& operator<<(std::ostream& os, ClassTag t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, TraceSign s) { return os << to_string(s); }
inline std::ostream& operator<<(std::ostream& os, Region r) { return os << to_string(r); }
}  // namespace su11

namespace su11::testing {

/// A sampled class representative: sign * G(parameter) conjugated by `by`.
struct ClassSample {
    ClassTag tag;
    double parameter;
    TraceSign sign;
    Matrix generator;
    Matrix by;
    Matrix matrix;
};

/// Parameters stay clear of the class-N band: |phi| in [0.2, 2pi - 0.2],
/// |xi|, |nu| in [0.2, 4]. Conjugators have Iwasawa parameters in [-1.5, 1.5].
inline ClassSample class_sample(Random& rng, ClassTag tag) {
    ClassSample s{tag, 0.0, TraceSign::plus, Matrix::identity(), Matrix::identity(), Matrix::identity()};
    const double sgn = rng.coin() ? 1.0 : -1.0;
    switch (tag) {
        case ClassTag::K:
            s.parameter = sgn * rng.uniform(0.2, 2 * std::numbers::pi - 0.2);
            s.generator = make_k(s.parameter);
            if (s.generator.trace() < 0) s.sign = TraceSign::minus;
            break;
        case ClassTag::A:
            s.parameter = sgn * rng.uniform(0.2, 4.0);
            s.generator = make_a(s.parameter);
            break;
        case ClassTag::N:
            s.parameter = sgn * rng.uniform(0.2, 4.0);
            s.generator = make_n(s.parameter);
            break;
    }
    if (tag != ClassTag::K && rng.coin()) {
        s.generator = -s.generator;
        s.sign = TraceSign::minus;
    }
    s.by = recompose(IwasawaFactors<double>{rng.uniform(-std::numbers::pi, std::numbers::pi),
                                            rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)});
    s.matrix = conjugate(s.generator, s.by);
    return s;
}

/// Lossless stack with identical bounding media and a sub-critical angle.
inline LayerStack<double> random_stack(Random& rng, int max_layers) {
    LayerStack<double> s;
    s.ambient_index = rng.uniform(1.0, 1.8);
    s.substrate_index = s.ambient_index;
    s.wavelength = rng.uniform(400, 800);
    s.polarization = rng.coin() ? Polarization::s : Polarization::p;
    const int n = rng.integer(0, max_layers);
    double min_index = 4.0;
    for (int k = 0; k < n; ++k) {
        s.layers.push_back({rng.uniform(1.2, 3.5), rng.uniform(0, 300)});
        min_index = std::min(min_index, s.layers.back().index);
    }
    // n0 sin(theta0) stays below every layer index.
    const double limit = std::min(min_index / s.ambient_index, 1.0) * 0.999;
    s.incidence_angle_deg = std::asin(rng.uniform(0, limit)) * 180 / std::numbers::pi;
    return s;
}

}  // namespace su11::testing
