#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>

#include "su11/tolerances.hpp"

namespace su11 {

enum class Region { inside, boundary, outside };

inline constexpr const char* to_string(Region r) {
    switch (r) {
        case Region::inside: return "inside";
        case Region::boundary: return "boundary";
        case Region::outside: return "outside";
    }
    return "?";
}

/// A point of the extended complex plane: a finite value or the point at infinity.
template <std::floating_point Real>
class DiscPoint {
public:
    using complex_type = std::complex<Real>;

    constexpr DiscPoint() = default;
    constexpr DiscPoint(complex_type z) : value_(z) {}  // NOLINT(implicit)
    constexpr DiscPoint(Real re, Real im = Real(0)) : value_(complex_type(re, im)) {}

    static constexpr DiscPoint infinity() {
        DiscPoint p;
        p.value_.reset();
        return p;
    }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    /// Finite value; precondition is_finite().
    constexpr complex_type value() const { return *value_; }

    Region region(Real tol = Real(kDisc)) const {
        if (is_infinite()) return Region::outside;
        const Real r = std::abs(*value_);
        if (r < Real(1) - tol) return Region::inside;
        if (r > Real(1) + tol) return Region::outside;
        return Region::boundary;
    }

    /// Equal within tol; the point at infinity only equals itself.
    bool near(const DiscPoint& other, Real tol = Real(kGeo)) const {
        if (is_infinite() || other.is_infinite()) return is_infinite() == other.is_infinite();
        return std::abs(*value_ - *other.value_) <= tol;
    }

private:
    std::optional<complex_type> value_ = complex_type(0);
};

}  // namespace su11
