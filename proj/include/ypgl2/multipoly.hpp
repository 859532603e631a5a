#pragma once

#include <map>
#include <vector>

#include "ypgl2/rational.hpp"

namespace ypgl2 {

/// Graded-lexicographic order on exponent vectors; the term order used for
/// all stored multivariate polynomials so printing and iteration are
/// reproducible.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial in a fixed number of commuting variables.
/// Zero coefficients are never stored.
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<int>, Rational, GrlexLess>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);  // 0-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;

    void add_term(const std::vector<int>& exponents, const Rational& c);
    Rational coeff(const std::vector<int>& exponents) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& scale(const Rational& s);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational eval(const std::vector<Rational>& point) const;
    MultiPoly partial(int var) const;

    /// Substitutes args[i] for variable i; all args share a variable count.
    MultiPoly compose(const std::vector<MultiPoly>& args) const;

    /// Applies a permutation to the variables: exponent of variable i moves
    /// to position perm[i].
    MultiPoly permute_variables(const std::vector<int>& perm) const;

    bool is_symmetric() const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    TermMap terms_;
};

/// sigma_{k}(x_1..x_n) as a MultiPoly in n variables (k = 0 gives 1).
MultiPoly elementary_symmetric(int nvars, int k);

/// Rewrites a symmetric polynomial f(b_1..b_p) as g(sigma_1..sigma_p) by
/// leading-term subtraction; throws NotSymmetric when f is not invariant
/// under all variable permutations.
MultiPoly express_in_elementary_symmetrics(const MultiPoly& f);

}  // namespace ypgl2
