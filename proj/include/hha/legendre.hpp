#pragma once

#include <string>
#include <vector>

#include "hha/rational.hpp"

namespace hha {

/**
 * Dense univariate polynomial with exact rational coefficients, index =
 * degree, trailing zeros trimmed. The zero polynomial has no coefficients and
 * degree -1.
 */
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(int n, const Rat& c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    Rat eval(const Rat& x) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    friend UniPoly operator*(const Rat& s, const UniPoly& p);
    bool operator==(const UniPoly&) const = default;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

// Legendre polynomial P_n by the three-term recurrence from P_0 = 1, P_1 = x;
// normalised by P_n(1) = 1.
UniPoly legendre(int n);

// (1 - x^2) p'' - 2x p'.
UniPoly legendre_operator(const UniPoly& p);

// Exact integral of p*q over [-1, 1].
Rat poly_inner(const UniPoly& p, const UniPoly& q);

// Truncation of a power series in z whose z^n coefficient is a polynomial in x.
struct TruncatedSeries {
    std::vector<UniPoly> coeffs;  // coeffs[n] multiplies z^n

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const TruncatedSeries&) const = default;
};

// (1 - 2xz + z^2)^(-1/2) truncated at order N: coefficient of z^n is P_n.
TruncatedSeries genfun_truncated(int N);

// r-th power of E = z^2 d^2/dz^2 + 2z d/dz: scales the z^n coefficient by
// (n(n+1))^r.
TruncatedSeries euler_operator(const TruncatedSeries& s, int r);

// Checks L^r G = (-1)^r E^r G on the order-N truncation, coefficient by
// coefficient, exactly.
bool genfun_identity_check(int N, int r);

}  // namespace hha
