#ifndef CANOSPEC_SCALED_VALUE_HPP
#define CANOSPEC_SCALED_VALUE_HPP

#include <cmath>

#include "canospec/precision.hpp"

namespace canospec {

// A complex number stored as mantissa * e^{exponent} (natural-log scale),
// so that quantities like e^{mu*sqrt(3)/2} survive far past the native
// float range.  Normalized form keeps |mantissa| in [1, e), or
// mantissa = 0 with exponent = 0.
template <class R>
struct ScaledValue {
    complex_t<R> mantissa{};
    R exponent{};

    ScaledValue() = default;
    ScaledValue(const complex_t<R>& m, const R& e) : mantissa(m), exponent(e) {}

    static ScaledValue from(const complex_t<R>& m, const R& e)
    {
        ScaledValue v(m, e);
        v.normalize();
        return v;
    }

    bool is_zero() const { return mantissa == complex_t<R>(0); }

    void normalize()
    {
        using std::abs;
        using std::log;
        using std::floor;
        if (is_zero()) {
            exponent = R(0);
            return;
        }
        const R shift = floor(log(abs(mantissa)));
        if (shift != R(0)) {
            using std::exp;
            mantissa *= exp(-shift);
            exponent += shift;
        }
    }

    // log of the modulus of the represented value
    R log_abs() const
    {
        using std::abs;
        using std::log;
        return exponent + log(abs(mantissa));
    }

    // represented value; overflows for large exponents, intended for
    // small-scale checks only
    complex_t<R> value() const
    {
        using std::exp;
        return mantissa * exp(exponent);
    }

    ScaledValue operator*(const ScaledValue& other) const
    {
        return from(mantissa * other.mantissa, exponent + other.exponent);
    }
};

} // namespace canospec

#endif
