#ifndef CANOSPEC_PRECISION_HPP
#define CANOSPEC_PRECISION_HPP

// Scalar tiers used throughout: native double (53-bit mantissa) and a
// 256-bit binary float for the extended-precision paths.  All numeric
// code is templated on the real type; the complex companion type is
// looked up through scalar_traits.

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace canospec {

namespace mp = boost::multiprecision;

using BigFloat   = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>>;
using BigComplex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<256, mp::digit_base_2>>>;

template <class R>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    using complex_type = std::complex<double>;
    static constexpr int mantissa_bits = 53;
};

template <>
struct scalar_traits<BigFloat> {
    using complex_type = BigComplex;
    static constexpr int mantissa_bits = 256;
};

template <class R>
using complex_t = typename scalar_traits<R>::complex_type;

// Requested working precisions are clamped to what the two tiers can
// honor; the secant refinement keeps 10 guard bits, hence the cap.
inline constexpr int min_precision_bits = 53;
inline constexpr int max_precision_bits = 246;

inline void check_precision_bits(int bits)
{
    if (bits < min_precision_bits)
        throw std::invalid_argument("precision_bits must be at least 53, got " + std::to_string(bits));
    if (bits > max_precision_bits)
        throw std::invalid_argument("precision_bits above " + std::to_string(max_precision_bits) +
                                    " is not supported, got " + std::to_string(bits));
}

template <class R>
R pi_v()
{
    using std::acos;
    static const R value = acos(R(-1));
    return value;
}

// e^{i*theta}
template <class R>
complex_t<R> unit_phase(const R& theta)
{
    using std::sin;
    using std::cos;
    return complex_t<R>(cos(theta), sin(theta));
}

template <class R>
R eps_v()
{
    return std::numeric_limits<R>::epsilon();
}

} // namespace canospec

#endif
