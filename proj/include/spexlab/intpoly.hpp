#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spexlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t order() const noexcept { return order_; }
    BigInt& at(std::size_t i, std::size_t j) { return entries_.at(i * order_ + j); }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_.at(i * order_ + j); }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<BigInt> entries_;
};

/// Univariate integer polynomial, coefficients stored lowest degree first.
/// The coefficient list carries no trailing zeros; the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    /// c_i, zero beyond the degree.
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const { return coeffs_.back(); }

    IntPoly scaled(const BigInt& factor) const;

    /// Sign of p(num/den) computed in integers; den must be positive.
    int sign_at(const BigInt& num, const BigInt& den) const;
    /// p(num/den) exactly.
    BigRational value_at(const BigRational& x) const;
    double value_at(double x) const;
    IntPoly derivative() const;

    /// Index of the first differing coefficient, or -1 when equal.
    int first_difference(const IntPoly& other) const;

    bool operator==(const IntPoly&) const = default;

    /// Human-readable form, highest degree first, e.g. "x^3 - 3*x - 2".
    std::string to_string() const;
    /// Decimal strings, lowest degree first.
    std::vector<std::string> coefficient_strings() const;

private:
    std::vector<BigInt> coeffs_;
};

/// Exact characteristic polynomial det(xI - M) by Faddeev–LeVerrier; every
/// division in the recurrence is exact over the integers.
IntPoly char_poly(const IntMatrix& m);

/// Largest real root, isolated with an exact Sturm sequence and refined by
/// dyadic bisection to width <= tol, then Newton-polished in double.
/// Throws NumericError when the polynomial has no real root.
double largest_root(const IntPoly& p, double tol = 1e-12);

} // namespace spexlab
