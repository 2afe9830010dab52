#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "su11/iwasawa.hpp"
#include "su11/matrix.hpp"

namespace su11 {

enum class ClassTag { K, A, N };
enum class TraceSign { plus, minus };

inline constexpr const char* to_string(ClassTag c) {
    switch (c) {
        case ClassTag::K: return "K";
        case ClassTag::A: return "A";
        case ClassTag::N: return "N";
    }
    return "?";
}

inline constexpr const char* to_string(TraceSign s) { return s == TraceSign::plus ? "plus" : "minus"; }

template <std::floating_point Real = double>
struct Classification {
    ClassTag tag{ClassTag::N};
    Real trace{2};
    TraceSign sign{TraceSign::plus};
    bool degenerate{true};

    Real sign_factor() const { return sign == TraceSign::plus ? Real(1) : Real(-1); }
};

/// Trace criterion: K when tr^2 < 4, A when tr^2 > 4, N otherwise, with a band of
/// half-width cls_tol around tr^2 = 4. degenerate flags M = +/- identity.
template <std::floating_point Real>
Classification<Real> classify(const Su11Matrix<Real>& m, Real cls_tol = Real(kClass),
                              Real det_tol = Real(kDet)) {
    Classification<Real> c;
    c.trace = m.trace();
    c.sign = c.trace >= Real(0) ? TraceSign::plus : TraceSign::minus;
    const Real gap = c.trace * c.trace - Real(4);
    if (gap < -cls_tol) {
        c.tag = ClassTag::K;
    } else if (gap > cls_tol) {
        c.tag = ClassTag::A;
    } else {
        c.tag = ClassTag::N;
    }
    const Real re = m.alpha().real();
    c.degenerate = c.tag == ClassTag::N && std::abs(m.beta()) <= det_tol &&
                   std::abs(m.alpha().imag()) <= det_tol && std::abs(re * re - Real(1)) <= det_tol;
    return c;
}

// ---------------------------------------------------------------------------
// Fixed points

template <std::floating_point Real>
struct PairInsideOutside {
    DiscPoint<Real> inside;
    DiscPoint<Real> outside;  // may be the point at infinity
};

template <std::floating_point Real>
struct PairBoundary {
    DiscPoint<Real> first;   // "+" root
    DiscPoint<Real> second;  // "-" root
};

template <std::floating_point Real>
struct DoubleBoundary {
    DiscPoint<Real> point;
};

struct AllPoints {};

template <std::floating_point Real = double>
using FixedPointSet =
    std::variant<PairInsideOutside<Real>, PairBoundary<Real>, DoubleBoundary<Real>, AllPoints>;

/// Points of a fixed-point set in a flat list (empty for AllPoints).
template <std::floating_point Real>
std::vector<DiscPoint<Real>> points_of(const FixedPointSet<Real>& set) {
    struct Visitor {
        std::vector<DiscPoint<Real>> operator()(const PairInsideOutside<Real>& p) const {
            return {p.inside, p.outside};
        }
        std::vector<DiscPoint<Real>> operator()(const PairBoundary<Real>& p) const {
            return {p.first, p.second};
        }
        std::vector<DiscPoint<Real>> operator()(const DoubleBoundary<Real>& p) const { return {p.point}; }
        std::vector<DiscPoint<Real>> operator()(AllPoints) const { return {}; }
    };
    return std::visit(Visitor{}, set);
}

template <std::floating_point Real>
const char* variant_name(const FixedPointSet<Real>& set) {
    static constexpr std::array<const char*, 4> names{"pair_inside_outside", "pair_boundary",
                                                      "double_boundary", "all_points"};
    return names[set.index()];
}

namespace detail {
template <std::floating_point Real>
DiscPoint<Real> finite_or_infinity(std::complex<Real> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return DiscPoint<Real>::infinity();
    return DiscPoint<Real>(z);
}
}  // namespace detail

/**
 * Solutions of z = Phi[M, z], i.e. beta z^2 + 2i Im(alpha) z - conj(beta) = 0,
 * whose roots are z = (-i Im alpha +/- sqrt((Re alpha)^2 - 1)) / beta.
 *
 * The variant follows classify(m). For class K the large root is taken from
 * the formula and the small one from the product of roots, -conj(beta)/beta,
 * which avoids cancellation and makes beta = 0 give {0, infinity}.
 */
template <std::floating_point Real>
FixedPointSet<Real> fixed_points(const Su11Matrix<Real>& m, Real cls_tol = Real(kClass),
                                 Real det_tol = Real(kDet)) {
    using C = std::complex<Real>;
    const auto cls = classify(m, cls_tol, det_tol);
    if (cls.degenerate) return AllPoints{};

    const C alpha = m.alpha();
    const C beta = m.beta();
    const Real re = alpha.real();
    const Real im = alpha.imag();
    const Real disc = re * re - Real(1);

    switch (cls.tag) {
        case ClassTag::K: {
            const Real s = std::sqrt(std::max(Real(0), -disc));
            const Real big = im + std::copysign(s, im);
            const C num_big(Real(0), -big);
            const DiscPoint<Real> inside(-std::conj(beta) / num_big);
            if (beta == C(0)) return PairInsideOutside<Real>{inside, DiscPoint<Real>::infinity()};
            return PairInsideOutside<Real>{inside, detail::finite_or_infinity(num_big / beta)};
        }
        case ClassTag::A: {
            const Real s = std::sqrt(std::max(Real(0), disc));
            return PairBoundary<Real>{DiscPoint<Real>(C(s, -im) / beta), DiscPoint<Real>(C(-s, -im) / beta)};
        }
        case ClassTag::N:
        default: {
            // Inside the tolerance band the discriminant is dropped; the root is
            // projected onto the unit circle where the exact parabolic point lies.
            const C z = C(Real(0), -im) / beta;
            return DoubleBoundary<Real>{DiscPoint<Real>(z / std::abs(z))};
        }
    }
}

// ---------------------------------------------------------------------------
// Conjugation to canonical form

template <std::floating_point Real = double>
struct ConjugatorFamily {
    Su11Matrix<Real> canonical_member;
    std::string family_parameter_description;
    ClassTag residual_subgroup{ClassTag::K};
};

template <std::floating_point Real = double>
struct CanonicalReduction {
    ConjugatorFamily<Real> family;
    Su11Matrix<Real> reduced;  // C M C^-1
    Classification<Real> classification;
    /// phi for K, xi for +/-A(xi), nu for +/-N(nu).
    Real parameter{};
};

/// Distance of m from the canonical form of the given class and trace sign:
/// K: |beta|; A: max(|Re beta|, |Im alpha|); N: max(|Re alpha -+ 1|, |Im beta|, |Im alpha + Re beta|).
template <std::floating_point Real>
Real canonical_residual(const Su11Matrix<Real>& m, ClassTag tag, TraceSign sign) {
    const Real s = sign == TraceSign::plus ? Real(1) : Real(-1);
    switch (tag) {
        case ClassTag::K: return std::abs(m.beta());
        case ClassTag::A: return std::max(std::abs(m.beta().real()), std::abs(m.alpha().imag()));
        case ClassTag::N:
        default:
            return std::max({std::abs(m.alpha().real() - s), std::abs(m.beta().imag()),
                             std::abs(m.alpha().imag() + m.beta().real())});
    }
}

/// Subgroup parameter read off a matrix already in canonical form.
template <std::floating_point Real>
Real canonical_parameter(const Su11Matrix<Real>& m, ClassTag tag, TraceSign sign) {
    const Real s = sign == TraceSign::plus ? Real(1) : Real(-1);
    switch (tag) {
        case ClassTag::K: return Real(2) * principal_arg(m.alpha());
        case ClassTag::A: return Real(2) * std::asinh(s * m.beta().imag());
        case ClassTag::N:
        default: return Real(2) * s * m.beta().real();
    }
}

namespace detail {

/// C with Phi[C, z_f] = 0: a = 1/sqrt(1 - |z_f|^2), b = -a conj(z_f).
template <std::floating_point Real>
Su11Matrix<Real> conjugator_to_origin(std::complex<Real> zf) {
    const Real a = Real(1) / std::sqrt(Real(1) - std::norm(zf));
    return Su11Matrix<Real>::unchecked({a, Real(0)}, -a * std::conj(zf));
}

/**
 * C in SU(1,1) sending boundary points z1 -> +i and z2 -> -i.
 *
 * The conditions conj(b) + conj(a) z1 = i (a + b z1) and
 * conj(b) + conj(a) z2 = -i (a + b z2) are real-linear in (a, b), giving a
 * real 4x4 homogeneous system. Its kernel is two-dimensional (C and
 * [[0, i], [-i, 0]] C both solve it), and |a|^2 - |b|^2 restricted to it has
 * signature (1, -1). The member taken is the kernel direction that maximises
 * |a|^2 - |b|^2 per unit Euclidean norm, scaled to |a|^2 - |b|^2 = 1 and signed
 * so that Re a > 0 (tie-break Im a > 0).
 */
template <std::floating_point Real>
Su11Matrix<Real> conjugator_to_plus_minus_i(std::complex<Real> z1, std::complex<Real> z2, bool allow_swap = true) {
    using C = std::complex<Real>;
    using Mat4 = Eigen::Matrix<Real, 4, 4>;
    using Vec4 = Eigen::Matrix<Real, 4, 1>;
    const C i(Real(0), Real(1));

    auto residual = [&](const Vec4& x, C z, Real target) {
        const C a(x[0], x[1]);
        const C b(x[2], x[3]);
        return std::conj(b) + std::conj(a) * z - target * i * (a + b * z);
    };

    Mat4 system;
    for (int k = 0; k < 4; ++k) {
        const Vec4 e = Vec4::Unit(k);
        const C r1 = residual(e, z1, Real(1));
        const C r2 = residual(e, z2, Real(-1));
        system.col(k) << r1.real(), r1.imag(), r2.real(), r2.imag();
    }

    Eigen::JacobiSVD<Mat4> svd(system, Eigen::ComputeFullV);
    // Singular values are sorted descending; the last two span the kernel.
    const Vec4 v1 = svd.matrixV().col(2);
    const Vec4 v2 = svd.matrixV().col(3);

    auto form = [](const Vec4& x, const Vec4& y) { return x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3]; };
    Eigen::Matrix<Real, 2, 2> q;
    q << form(v1, v1), form(v1, v2), form(v1, v2), form(v2, v2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Real, 2, 2>> eig(q);
    const auto w = eig.eigenvectors().col(1);  // largest eigenvalue
    Vec4 v = w[0] * v1 + w[1] * v2;

    const Real norm = form(v, v);
    if (!(norm > Real(0))) {
        if (!allow_swap) throw DeterminantViolation("no SU(1,1) conjugator for the given boundary points");
        // Reversed orientation: map z2 -> +i, z1 -> -i instead.
        return conjugator_to_plus_minus_i(z2, z1, false);
    }
    v /= std::sqrt(norm);
    if (v[0] < Real(0) || (v[0] == Real(0) && v[1] < Real(0))) v = -v;
    return Su11Matrix<Real>::unchecked(C(v[0], v[1]), C(v[2], v[3]));
}

}  // namespace detail

/**
 * Conjugates m into canonical subgroup form.
 *
 * K: the inside fixed point goes to 0 and C M C^-1 = K(phi).
 * A: the repelling boundary fixed point goes to +i and the attracting one to
 *    -i, so C M C^-1 = +/-A(xi) with xi > 0.
 * N: C = K(psi) rotates the double fixed point to +i, C M C^-1 = +/-N(nu).
 * The sign is the trace sign. Throws DegenerateMatrix for +/- identity.
 */
template <std::floating_point Real>
CanonicalReduction<Real> reduce_to_canonical(const Su11Matrix<Real>& m, Real cls_tol = Real(kClass),
                                             Real det_tol = Real(kDet)) {
    using C = std::complex<Real>;
    const auto cls = classify(m, cls_tol, det_tol);
    if (cls.degenerate) throw DegenerateMatrix("+/- identity has no canonical reduction");
    const auto fp = fixed_points(m, cls_tol, det_tol);

    ConjugatorFamily<Real> family;
    family.residual_subgroup = cls.tag;
    switch (cls.tag) {
        case ClassTag::K: {
            const auto& pair = std::get<PairInsideOutside<Real>>(fp);
            family.canonical_member = detail::conjugator_to_origin(pair.inside.value());
            family.family_parameter_description =
                "K(chi) * C for any chi; chi = 0 is returned; the reduced matrix does not depend on chi";
            break;
        }
        case ClassTag::A: {
            const auto& pair = std::get<PairBoundary<Real>>(fp);
            C repelling = pair.first.value();
            C attracting = pair.second.value();
            // |Phi'(z)| = 1/|alpha + beta z|^2 at a fixed point.
            if (std::abs(m.alpha() + m.beta() * repelling) > std::abs(m.alpha() + m.beta() * attracting)) {
                std::swap(repelling, attracting);
            }
            family.canonical_member = detail::conjugator_to_plus_minus_i(repelling, attracting);
            family.family_parameter_description =
                "A(xi') * C for any xi'; the member maximising (|a|^2-|b|^2)/(|a|^2+|b|^2) is returned; "
                "the reduced matrix does not depend on xi'";
            break;
        }
        case ClassTag::N: {
            const auto& dbl = std::get<DoubleBoundary<Real>>(fp);
            const Real psi = principal_arg(dbl.point.value()) - std::numbers::pi_v<Real> / Real(2);
            family.canonical_member = make_k(psi);
            family.family_parameter_description =
                "N(nu') * A(xi') * C for any nu', xi'; nu' leaves the reduced matrix unchanged, "
                "xi' rescales its parameter nu by exp(-xi'); nu' = xi' = 0 is returned";
            break;
        }
    }

    CanonicalReduction<Real> out;
    out.reduced = conjugate(m, family.canonical_member);
    out.family = std::move(family);
    out.classification = cls;
    out.parameter = canonical_parameter(out.reduced, cls.tag, cls.sign);
    return out;
}

}  // namespace su11
