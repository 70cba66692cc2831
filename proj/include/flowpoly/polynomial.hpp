#pragma once

#include "flowpoly/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace flowpoly {

/// Exact integer polynomial, coefficient k at index k. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);
    Polynomial(std::initializer_list<long long> coeffs);

    static Polynomial from_counts(const std::vector<std::size_t>& counts);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    BigInt sum() const;
    BigInt evaluate(const BigInt& z) const;

    bool nonnegative() const;
    /// c_k^2 >= c_{k-1} c_{k+1} for every interior k.
    bool log_concave() const;
    /// Weakly increasing then weakly decreasing.
    bool unimodal() const;
    /// Every complex root is real, decided exactly with a Sturm sequence.
    bool real_rooted() const;

    /// "1 + 13z + 49z^2 + ..."
    std::string to_string() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Exact rational polynomial, lowest degree first.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs);

    /// Unique polynomial of degree <= values.size()-1 through (t, values[t]).
    static RationalPolynomial interpolate(const std::vector<BigInt>& values);

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }
    BigRational evaluate(const BigRational& t) const;
    std::string to_string() const;

private:
    std::vector<BigRational> coeffs_;
};

} // namespace flowpoly
