#pragma once

#include <array>
#include <vector>

#include "ypgl2/multipoly.hpp"
#include "ypgl2/pbw.hpp"

namespace ypgl2 {

/// The quantum determinant as an operator polynomial,
/// T_11(u) T_22(u-1) - T_21(u) T_12(u-1). Monic of degree 2p.
OperatorPoly quantum_determinant_op(int level);

/// All four equivalent product expressions of the quantum determinant;
/// index 0 is the one used everywhere else.
std::array<OperatorPoly, 4> quantum_determinant_expressions(int level);

/// Coefficients d_1..d_2p, where D(u) = u^{2p} + d_1 u^{2p-1} + ... + d_2p.
std::vector<NCPolynomial> quantum_determinant(int level);

/// All 4p generators of the algebra in the fixed total order.
std::vector<Generator> all_generators(int level);

/// True iff x commutes with every generator.
bool is_central(const NCPolynomial& x);

/// Generators of the commutative subalgebra: t_22^(1..p) then d_1..d_2p.
std::vector<NCPolynomial> gamma_generators(int level);

/// Index of t^(r)_ij among the 4p commutative symbol variables
/// (lexicographic on (i,j,r), matching the generator order).
int symbol_index(int level, const Generator& g);

/// Top filtration-degree part of x as a commutative polynomial in the 4p
/// symbol variables. The symbol of 0 is 0.
MultiPoly graded_symbol(const NCPolynomial& x);

/// Rank of the 3p x 4p Jacobian of the graded symbols of gamma_generators
/// at the given point, by exact Gaussian elimination.
int jacobian_rank_gamma(int level, const std::vector<Rational>& point);

}  // namespace ypgl2
