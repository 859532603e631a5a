#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ypgl2/rational.hpp"

namespace ypgl2 {

/// One algebra generator t^(r)_ij with row/column indices in {1,2} and level
/// 1 <= r <= p. The degenerate symbols t^(0)_ij (Kronecker delta) and
/// t^(r)_ij with r > p never appear in stored data; the rewriting rules
/// eliminate them.
struct Generator {
    int i = 1;
    int j = 1;
    int r = 1;

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.i == b.i && a.j == b.j && a.r == b.r;
    }
    // Fixed total order (lexicographic on (i,j,r)); monomials are kept
    // nondecreasing in this order.
    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.r < b.r;
    }
    std::string str() const;
};

/// Ordered product of generators; the empty word is the identity.
using Monomial = std::vector<Generator>;

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Filtration degree: sum of generator levels.
int filtration_degree(const Monomial& m);

/// Element of the level-p Yangian in PBW normal form: map from ordered
/// monomials to nonzero coefficients.
class NCPolynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit NCPolynomial(int level) : p_(level) {}
    static NCPolynomial zero(int level) { return NCPolynomial(level); }
    static NCPolynomial one(int level);
    static NCPolynomial generator(int level, const Generator& g);

    int level() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int filtration_deg() const;

    /// Accumulates c * m, assuming m is already in normal order.
    void add_ordered(const Monomial& m, const Rational& c);

    NCPolynomial operator-() const;
    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    NCPolynomial& scale(const Rational& s);

    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    int p_;
    TermMap terms_;
};

/// [t^(r)_ij, t^(s)_kl] expanded through the defining relations, with the
/// delta rule for level 0 and truncation above level p applied. The result
/// is in normal order and has filtration degree at most r+s-1.
NCPolynomial commutator_basic(int level, const Generator& g1, const Generator& g2);

/// PBW normal form of a single word times a coefficient.
NCPolynomial normal_order(int level, const Monomial& word, const Rational& coeff);

/// Product in PBW normal form.
NCPolynomial multiply(const NCPolynomial& x, const NCPolynomial& y);

NCPolynomial power(const NCPolynomial& x, int e);

/// Polynomial in the formal variable u with NCPolynomial coefficients,
/// lowest degree first. T_ij(u) has degree exactly p with leading
/// coefficient delta_ij.
class OperatorPoly {
  public:
    OperatorPoly(int level, int degree)
        : p_(level), c_(degree + 1, NCPolynomial::zero(level)) {}

    /// T_ij(u) = delta_ij u^p + sum_k t^(k)_ij u^(p-k).
    static OperatorPoly T(int level, int i, int j);

    int level() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const NCPolynomial& coeff(int k) const { return c_.at(k); }
    NCPolynomial& coeff(int k) { return c_.at(k); }

    /// Substitution u -> u + a by binomial re-expansion of the scalar
    /// coefficient polynomials; the NC coefficients are untouched.
    OperatorPoly shift_u(const Rational& a) const;

    friend OperatorPoly operator*(const OperatorPoly& A, const OperatorPoly& B);
    friend OperatorPoly operator-(const OperatorPoly& A, const OperatorPoly& B);
    friend bool operator==(const OperatorPoly& A, const OperatorPoly& B);

  private:
    int p_;
    std::vector<NCPolynomial> c_;
};

}  // namespace ypgl2
