#pragma once

#include <set>
#include <vector>

#include "ypgl2/pbw.hpp"

namespace ypgl2 {

using LatticeVector = std::vector<int>;

/// Lattice displacements a single generator can produce on weight spaces:
/// {delta_i} for t_21, {-delta_i} for t_12, {delta_i - delta_j} for t_11
/// (zero included), {0} for t_22.
std::set<LatticeVector> displacement_set(int level, const Generator& g);

struct StraighteningCertificate {
    /// a_0..a_q with sum_l z^l x a_l = 0; each a_l is a polynomial in the
    /// t_22 generators.
    std::vector<NCPolynomial> coefficients;
    bool verified = false;
};

/// Expands F_{S,z} = prod_{delta in S} (z (x) 1 - 1 (x) z(b+delta)) for
/// z = t_22^(z_index), rewrites the right tensor factors through elementary
/// symmetric polynomials into t_22-polynomials, and checks that
/// sum_l z^l x a_l normal-forms to zero. S must be closed under
/// permutations of the p lattice coordinates (NotInvariant otherwise) and
/// must contain displacement_set(x).
StraighteningCertificate straightening_certificate(int level, const Generator& x,
                                                   int z_index,
                                                   const std::set<LatticeVector>& S);

}  // namespace ypgl2
