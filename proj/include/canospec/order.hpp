#ifndef CANOSPEC_ORDER_HPP
#define CANOSPEC_ORDER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "canospec/precision.hpp"

namespace canospec {

// Order of the operator (-1)^alpha u^(2alpha) = lambda u with clamped
// boundary conditions.  alpha = 2k for even orders, alpha = 2k+1 for odd.
struct OperatorOrder {
    int alpha = 1;
    bool even = false;
    int k = 0;

    OperatorOrder() = default;

    explicit OperatorOrder(int a) : alpha(a)
    {
        if (a < 1)
            throw std::domain_error("operator order alpha must be >= 1, got " + std::to_string(a));
        even = (a % 2 == 0);
        k = even ? a / 2 : (a - 1) / 2;
    }

    // dimension of the characteristic matrix
    int size() const { return 2 * alpha; }
};

// Angles of the characteristic directions eta_j (the 2alpha-th roots of
// (-1)^alpha along which the exponential solutions run).  Odd alpha uses
// the odd powers of e^{i pi/(2 alpha)}, even alpha the powers of
// e^{i pi/alpha}.
template <class R>
std::vector<R> direction_angles(const OperatorOrder& order)
{
    const R pi = pi_v<R>();
    std::vector<R> angles(static_cast<std::size_t>(order.size()));
    for (int j = 0; j < order.size(); ++j) {
        if (order.even)
            angles[static_cast<std::size_t>(j)] = pi * R(j) / R(order.alpha);
        else
            angles[static_cast<std::size_t>(j)] = pi * R(2 * j + 1) / R(2 * order.alpha);
    }
    return angles;
}

template <class R>
std::vector<complex_t<R>> characteristic_directions(const OperatorOrder& order)
{
    const auto angles = direction_angles<R>(order);
    std::vector<complex_t<R>> eta(angles.size());
    for (std::size_t j = 0; j < angles.size(); ++j)
        eta[j] = unit_phase<R>(angles[j]);
    return eta;
}

} // namespace canospec

#endif
