#ifndef CANOSPEC_INT_POLYNOMIAL_HPP
#define CANOSPEC_INT_POLYNOMIAL_HPP

// Exact big-integer polynomials for the irrationality engine.  Nothing in
// this header rounds: coefficients are arbitrary-size integers and
// evaluation is exact rational arithmetic.

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace canospec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct IntPolynomial {
    std::vector<BigInt> coefficients; // ascending degree

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coefficients(std::move(c)) { trim(); }

    static IntPolynomial from_ints(std::initializer_list<long long> c)
    {
        std::vector<BigInt> v;
        for (long long x : c)
            v.emplace_back(x);
        return IntPolynomial(std::move(v));
    }

    void trim()
    {
        while (!coefficients.empty() && coefficients.back() == 0)
            coefficients.pop_back();
    }

    bool is_zero() const { return coefficients.empty(); }

    int degree() const
    {
        if (is_zero())
            throw std::domain_error("degree of the zero polynomial");
        return static_cast<int>(coefficients.size()) - 1;
    }

    const BigInt& leading() const
    {
        if (is_zero())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return coefficients.back();
    }

    BigInt constant() const { return is_zero() ? BigInt(0) : coefficients.front(); }

    BigInt coefficient(int i) const
    {
        if (i < 0 || static_cast<std::size_t>(i) >= coefficients.size())
            return BigInt(0);
        return coefficients[static_cast<std::size_t>(i)];
    }

    bool operator==(const IntPolynomial& other) const { return coefficients == other.coefficients; }

    // exact Horner evaluation
    BigRational eval(const BigRational& x) const
    {
        BigRational v(0);
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            v = v * x + BigRational(*it);
        return v;
    }

    BigInt eval_int(const BigInt& x) const
    {
        BigInt v(0);
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            v = v * x + *it;
        return v;
    }

    IntPolynomial operator*(const IntPolynomial& other) const
    {
        if (is_zero() || other.is_zero())
            return IntPolynomial();
        std::vector<BigInt> out(coefficients.size() + other.coefficients.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            if (coefficients[i] == 0)
                continue;
            for (std::size_t j = 0; j < other.coefficients.size(); ++j)
                out[i + j] += coefficients[i] * other.coefficients[j];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator+(const IntPolynomial& other) const
    {
        std::vector<BigInt> out(std::max(coefficients.size(), other.coefficients.size()), BigInt(0));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < coefficients.size())
                out[i] += coefficients[i];
            if (i < other.coefficients.size())
                out[i] += other.coefficients[i];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator-(const IntPolynomial& other) const
    {
        std::vector<BigInt> out(std::max(coefficients.size(), other.coefficients.size()), BigInt(0));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < coefficients.size())
                out[i] += coefficients[i];
            if (i < other.coefficients.size())
                out[i] -= other.coefficients[i];
        }
        return IntPolynomial(std::move(out));
    }

    // substitute this(q(x)) -- used for composition checks in tests
    IntPolynomial compose(const IntPolynomial& q) const
    {
        IntPolynomial result;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
            result = result * q;
            result = result + IntPolynomial({*it});
        }
        return result;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const BigInt c = coefficient(i);
            if (c == 0)
                continue;
            if (!s.empty())
                s += c > 0 ? " + " : " - ";
            else if (c < 0)
                s += "-";
            const BigInt a = abs(c);
            if (a != 1 || i == 0)
                s += a.str();
            if (i >= 1) {
                s += "y";
                if (i > 1)
                    s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

} // namespace canospec

#endif
