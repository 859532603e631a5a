#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "ypgl2/rational.hpp"

namespace ypgl2 {

/// Dense univariate polynomial over Rational, coefficients stored lowest
/// degree first. The zero polynomial is the empty coefficient list; a
/// nonzero leading coefficient is maintained as an invariant.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int degree, const Rational& c);

    /// prod_i (u + r_i); the empty product is 1.
    static UniPoly from_roots(const std::vector<Rational>& negated_roots);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Rational eval(const Rational& x) const;

    /// P(u + c), expanded by Horner recomposition.
    UniPoly shift(const Rational& c) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly& scale(const Rational& s);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Long division; returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& den) const;

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Exact quotient num/den; throws NonzeroRemainder when the division is
/// inexact and Error when den is zero.
UniPoly poly_div_exact(const UniPoly& num, const UniPoly& den);

/// Numerator/denominator pair of the interpolation coefficient attached to
/// axis i (1-based) at lattice point k: the numerator is
/// prod_{j != i} (u + beta_j + k_j) and the denominator is
/// prod_{j != i} (beta_j - beta_i + k_j - k_i). Throws DegenerateDenominator
/// when a denominator factor vanishes.
struct LagrangeFactor {
    UniPoly numerator;
    Rational denominator;
};
LagrangeFactor lagrange_numerator(const std::vector<Rational>& beta,
                                  const std::vector<int>& k, int axis);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace ypgl2
