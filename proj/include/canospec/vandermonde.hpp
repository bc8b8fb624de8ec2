#ifndef CANOSPEC_VANDERMONDE_HPP
#define CANOSPEC_VANDERMONDE_HPP

// Vandermonde minors of the boundary block, the chord lengths rho_d, and
// the constants of the two-term Laplace expansion of det A_alpha(mu).

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canospec/order.hpp"
#include "canospec/precision.hpp"

namespace canospec {

// rho_d = 2 sin(d pi / (2 alpha)), the chord between adjacent direction
// roots of unity at distance d.
template <class R>
R rho(const OperatorOrder& order, int d)
{
    using std::sin;
    if (d < 1 || d > 2 * order.alpha - 1)
        throw std::domain_error("rho: d must lie in [1, 2*alpha-1], got " + std::to_string(d));
    return R(2) * sin(R(d) * pi_v<R>() / R(2 * order.alpha));
}

// Minor of the first alpha rows of A_alpha(mu) on the given columns
// (1-based), evaluated by the Vandermonde product formula
// prod_{j<l} (eta_l - eta_j).
template <class R>
complex_t<R> vandermonde_minor(const OperatorOrder& order, const std::vector<int>& columns)
{
    if (static_cast<int>(columns.size()) != order.alpha)
        throw std::domain_error("vandermonde_minor: need exactly alpha columns");
    std::vector<int> cols = columns;
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 1 || cols[i] > order.size())
            throw std::domain_error("vandermonde_minor: column index out of range");
        if (i > 0 && cols[i] == cols[i - 1])
            throw std::domain_error("vandermonde_minor: duplicate column index");
    }
    const auto eta = characteristic_directions<R>(order);
    complex_t<R> v(1);
    for (std::size_t b = 1; b < cols.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            v *= eta[static_cast<std::size_t>(cols[b] - 1)] - eta[static_cast<std::size_t>(cols[a] - 1)];
    return v;
}

// Constants of det A_alpha(mu) = K1 e^{gamma1 mu} trig(mu)
//                              + K2 e^{gamma2 mu} trig(s mu) + O(e^{gamma3 mu}):
// the ratio -K2/K1 = 2/sin^2(pi/(2 alpha)) for every alpha >= 2, and the
// exact rho-product forms of S and T where known (alpha = 4, 5).
template <class R>
struct LaplaceConstants {
    OperatorOrder order;
    std::optional<R> S;
    std::optional<R> T;
    R ratio{};               // -K2/K1
    std::vector<R> rho_list; // rho_1 .. rho_{2 alpha - 1}
};

template <class R>
LaplaceConstants<R> laplace_constants(const OperatorOrder& order)
{
    using std::sin;
    if (order.alpha < 2)
        throw std::domain_error("laplace_constants: no second-order term exists for alpha=1");
    LaplaceConstants<R> lc;
    lc.order = order;
    const R s = sin(pi_v<R>() / R(2 * order.alpha));
    lc.ratio = R(2) / (s * s);
    lc.rho_list.resize(static_cast<std::size_t>(2 * order.alpha - 1));
    for (int d = 1; d <= 2 * order.alpha - 1; ++d)
        lc.rho_list[static_cast<std::size_t>(d - 1)] = rho<R>(order, d);
    auto p = [&](int d, int e) {
        using std::pow;
        return pow(lc.rho_list[static_cast<std::size_t>(d - 1)], e);
    };
    if (order.alpha == 5) {
        lc.S = p(1, 8) * p(2, 6) * p(3, 4) * p(4, 2);
        lc.T = p(1, 6) * p(2, 6) * p(3, 4) * p(4, 2) * p(5, 2);
    } else if (order.alpha == 4) {
        lc.S = p(1, 6) * p(2, 4) * p(3, 2);
        lc.T = p(1, 4) * p(2, 4) * p(3, 2) * p(4, 2);
    }
    return lc;
}

} // namespace canospec

#endif
