#ifndef CANOSPEC_EXACT_FORMS_HPP
#define CANOSPEC_EXACT_FORMS_HPP

// Closed-form determinants and transcendental equations for
// alpha = 1, 2, 3.  These serve as independent oracles for the general
// determinant machinery.  Hyperbolic ratios are rewritten in terms of
// decaying exponentials so nothing overflows at large mu.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "canospec/precision.hpp"
#include "canospec/scaled_value.hpp"

namespace canospec {

template <class R>
struct Det3Parameters {
    complex_t<R> a{};
    complex_t<R> b{};
    complex_t<R> omega{};
};

// det A_3 for arbitrary a, b, omega != 0:
//   12 ab (a+b)(w - 1/w) - 3 (a^2+b^2)(w - 1/w)(w + 1/w)
//   + 3 ab (w - 1/w)(w + 1/w)(w^2 + 1/w^2 - 8) + 12 (a+b)(w - 1/w)
template <class R>
complex_t<R> det3_general(const Det3Parameters<R>& p)
{
    using C = complex_t<R>;
    if (p.omega == C(0))
        throw std::domain_error("det3_general: omega must be nonzero");
    const C a = p.a, b = p.b, w = p.omega;
    const C wi = C(1) / w;
    const C d = w - wi;   // w - 1/w
    const C s = w + wi;   // w + 1/w
    const C s2 = w * w + wi * wi;
    return C(12) * a * b * (a + b) * d
         - C(3) * (a * a + b * b) * d * s
         + C(3) * a * b * d * s * (s2 - C(8))
         + C(12) * (a + b) * d;
}

// The 6x6 matrix behind det3_general: row r of the top half is
// eps^{(2j+1) r}, the bottom half multiplies in the column factors
// (a w, w^2, b w, b w^{-1}, w^{-2}, a w^{-1}), eps = e^{i pi/6}.
template <class R>
std::array<complex_t<R>, 36> matrix3_general(const Det3Parameters<R>& p)
{
    using C = complex_t<R>;
    using std::cos;
    using std::sin;
    if (p.omega == C(0))
        throw std::domain_error("matrix3_general: omega must be nonzero");
    const C w = p.omega;
    const C wi = C(1) / w;
    const std::array<C, 6> factor = {p.a * w, w * w, p.b * w, p.b * wi, wi * wi, p.a * wi};
    std::array<C, 36> m{};
    for (int j = 0; j < 6; ++j) {
        const R ang = pi_v<R>() * R(2 * j + 1) / R(6);
        const C eps_pow = C(cos(ang), sin(ang));
        C e(1);
        for (int r = 0; r < 3; ++r) {
            m[static_cast<std::size_t>(6 * r + j)] = e;
            m[static_cast<std::size_t>(6 * (r + 3) + j)] = factor[static_cast<std::size_t>(j)] * e;
            e *= eps_pow;
        }
    }
    return m;
}

namespace detail {

// recursive cofactor expansion, O(n!), independent of any LU code
template <class R>
complex_t<R> cofactor_det(const std::vector<complex_t<R>>& m, const std::vector<int>& cols, int row,
                          int n)
{
    using C = complex_t<R>;
    if (cols.size() == 1)
        return m[static_cast<std::size_t>(n * row + cols[0])];
    C sum(0);
    R sign(1);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k)
                rest.push_back(cols[t]);
        sum += sign * m[static_cast<std::size_t>(n * row + cols[k])] *
               cofactor_det<R>(m, rest, row + 1, n);
        sign = -sign;
    }
    return sum;
}

} // namespace detail

template <class R>
complex_t<R> det3_brute(const Det3Parameters<R>& p)
{
    const auto m = matrix3_general(p);
    std::vector<complex_t<R>> v(m.begin(), m.end());
    return detail::cofactor_det<R>(v, {0, 1, 2, 3, 4, 5}, 0, 6);
}

// det A_3(mu) = 24 i sin(mu/2) [4 cosh(mu sqrt3/2) - cosh(mu sqrt3) cos(mu/2)
//               + cos(mu/2) cos(mu) - 4 cos(mu/2)],
// returned as mantissa * e^{mu sqrt3} with the cosh factors held in
// decayed form.
template <class R>
ScaledValue<R> det3_mu(const R& mu)
{
    using C = complex_t<R>;
    using std::cos;
    using std::sin;
    using std::exp;
    using std::sqrt;
    if (!(mu > R(0)))
        throw std::domain_error("det3_mu: mu must be positive");
    const R x = mu * sqrt(R(3)); // cosh(x) carries the growth e^{x}
    const R ch_half = (exp(-x / R(2)) + exp(-R(3) * x / R(2))) / R(2); // cosh(x/2) e^{-x}
    const R ch_full = (R(1) + exp(-R(2) * x)) / R(2);                  // cosh(x) e^{-x}
    const R bracket = R(4) * ch_half - ch_full * cos(mu / R(2)) +
                      exp(-x) * (cos(mu / R(2)) * cos(mu) - R(4) * cos(mu / R(2)));
    const C mantissa = C(0, R(24)) * sin(mu / R(2)) * bracket;
    return ScaledValue<R>::from(mantissa, x);
}

// lhs - rhs of cos(mu/2) = 4 cosh(mu sqrt3/2)/cosh(mu sqrt3)
//                        + [cos(mu/2) cos(mu) - 4 cos(mu/2)]/cosh(mu sqrt3)
template <class R>
R odd_equation_residual3(const R& mu)
{
    using std::cos;
    using std::exp;
    using std::sqrt;
    if (!(mu > R(0)))
        throw std::domain_error("odd_equation_residual3: mu must be positive");
    const R x = mu * sqrt(R(3));
    // 4 cosh(x/2)/cosh(x) and 1/cosh(x) via decaying exponentials
    const R denom = R(1) + exp(-R(2) * x);
    const R ratio = R(4) * exp(-x / R(2)) * (R(1) + exp(-x)) / denom;
    const R inv_cosh = R(2) * exp(-x) / denom;
    const R c = cos(mu / R(2));
    return c - ratio - (c * cos(mu) - R(4) * c) * inv_cosh;
}

// det A_2(mu) = 8 (1 - cos(mu) cosh(mu))
template <class R>
R det2_mu(const R& mu)
{
    using std::cos;
    using std::cosh;
    if (mu < R(0))
        throw std::domain_error("det2_mu: mu must be nonnegative");
    return R(8) * (R(1) - cos(mu) * cosh(mu));
}

// cos(mu) - 1/cosh(mu)
template <class R>
R eq2_residual(const R& mu)
{
    using std::cos;
    using std::exp;
    if (!(mu > R(0)))
        throw std::domain_error("eq2_residual: mu must be positive");
    const R inv_cosh = R(2) * exp(-mu) / (R(1) + exp(-R(2) * mu));
    return cos(mu) - inv_cosh;
}

// lambda_{n,1} = (n pi)^2
template <class R>
R spectrum1(int n)
{
    if (n < 1)
        throw std::domain_error("spectrum1: n must be >= 1");
    const R npi = R(n) * pi_v<R>();
    return npi * npi;
}

} // namespace canospec

#endif
