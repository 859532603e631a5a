#include "ypgl2/central.hpp"

#include "ypgl2/errors.hpp"

namespace ypgl2 {

OperatorPoly quantum_determinant_op(int level) {
    OperatorPoly t11 = OperatorPoly::T(level, 1, 1);
    OperatorPoly t12 = OperatorPoly::T(level, 1, 2);
    OperatorPoly t21 = OperatorPoly::T(level, 2, 1);
    OperatorPoly t22 = OperatorPoly::T(level, 2, 2);
    Rational minus1(-1);
    return t11 * t22.shift_u(minus1) - t21 * t12.shift_u(minus1);
}

std::array<OperatorPoly, 4> quantum_determinant_expressions(int level) {
    OperatorPoly t11 = OperatorPoly::T(level, 1, 1);
    OperatorPoly t12 = OperatorPoly::T(level, 1, 2);
    OperatorPoly t21 = OperatorPoly::T(level, 2, 1);
    OperatorPoly t22 = OperatorPoly::T(level, 2, 2);
    Rational m1(-1);
    return {
        t11 * t22.shift_u(m1) - t21 * t12.shift_u(m1),
        t11.shift_u(m1) * t22 - t12.shift_u(m1) * t21,
        t22 * t11.shift_u(m1) - t12 * t21.shift_u(m1),
        t22.shift_u(m1) * t11 - t21.shift_u(m1) * t12,
    };
}

std::vector<NCPolynomial> quantum_determinant(int level) {
    OperatorPoly D = quantum_determinant_op(level);
    std::vector<NCPolynomial> d;
    d.reserve(2 * level);
    for (int i = 1; i <= 2 * level; ++i) d.push_back(D.coeff(2 * level - i));
    return d;
}

std::vector<Generator> all_generators(int level) {
    std::vector<Generator> gens;
    gens.reserve(4 * level);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int r = 1; r <= level; ++r) gens.push_back({i, j, r});
    return gens;
}

bool is_central(const NCPolynomial& x) {
    for (const auto& g : all_generators(x.level())) {
        NCPolynomial gx = NCPolynomial::generator(x.level(), g);
        if (!(multiply(x, gx) == multiply(gx, x))) return false;
    }
    return true;
}

std::vector<NCPolynomial> gamma_generators(int level) {
    std::vector<NCPolynomial> out;
    out.reserve(3 * level);
    for (int k = 1; k <= level; ++k)
        out.push_back(NCPolynomial::generator(level, {2, 2, k}));
    for (auto& d : quantum_determinant(level)) out.push_back(std::move(d));
    return out;
}

int symbol_index(int level, const Generator& g) {
    return ((g.i - 1) * 2 + (g.j - 1)) * level + (g.r - 1);
}

MultiPoly graded_symbol(const NCPolynomial& x) {
    const int n = 4 * x.level();
    MultiPoly out(n);
    const int top = x.filtration_deg();
    if (top < 0) return out;
    for (const auto& [m, c] : x.terms()) {
        if (filtration_degree(m) != top) continue;
        std::vector<int> e(n, 0);
        for (const auto& g : m) e[symbol_index(x.level(), g)] += 1;
        out.add_term(e, c);
    }
    return out;
}

int jacobian_rank_gamma(int level, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != 4 * level)
        throw Error("jacobian point must have 4p coordinates");
    const int rows = 3 * level, cols = 4 * level;
    std::vector<std::vector<Rational>> jac(rows, std::vector<Rational>(cols, Rational(0)));
    auto gens = gamma_generators(level);
    for (int r = 0; r < rows; ++r) {
        MultiPoly sym = graded_symbol(gens[r]);
        for (int c = 0; c < cols; ++c) jac[r][c] = sym.partial(c).eval(point);
    }
    // exact Gaussian elimination
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!jac[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(jac[rank], jac[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (jac[r][col].is_zero()) continue;
            Rational f = jac[r][col] / jac[rank][col];
            for (int c2 = col; c2 < cols; ++c2) jac[r][c2] -= f * jac[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace ypgl2
