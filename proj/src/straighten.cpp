#include "ypgl2/straighten.hpp"

#include <algorithm>
#include <numeric>

#include "ypgl2/errors.hpp"
#include "ypgl2/multipoly.hpp"

namespace ypgl2 {

std::set<LatticeVector> displacement_set(int level, const Generator& g) {
    std::set<LatticeVector> out;
    const int p = level;
    auto unit = [&](int i, int sign) {
        LatticeVector v(p, 0);
        v[i] = sign;
        return v;
    };
    if (g.i == 2 && g.j == 1) {
        for (int i = 0; i < p; ++i) out.insert(unit(i, +1));
    } else if (g.i == 1 && g.j == 2) {
        for (int i = 0; i < p; ++i) out.insert(unit(i, -1));
    } else if (g.i == 1 && g.j == 1) {
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                LatticeVector v(p, 0);
                v[i] += 1;
                v[j] -= 1;
                out.insert(v);
            }
    } else {
        out.insert(LatticeVector(p, 0));
    }
    return out;
}

namespace {

bool permutation_invariant(const std::set<LatticeVector>& S, int p) {
    for (int s = 0; s + 1 < p; ++s) {
        for (const auto& v : S) {
            LatticeVector w = v;
            std::swap(w[s], w[s + 1]);
            if (!S.count(w)) return false;
        }
    }
    return true;
}

// monomial in sigma_1..sigma_p -> ordered word in t_22 generators
NCPolynomial sigma_poly_to_t22(int level, const MultiPoly& g) {
    NCPolynomial out(level);
    for (const auto& [e, c] : g.terms()) {
        Monomial word;
        for (int m = 0; m < level; ++m)
            for (int q = 0; q < e[m]; ++q) word.push_back({2, 2, m + 1});
        out.add_ordered(word, c);
    }
    return out;
}

}  // namespace

StraighteningCertificate straightening_certificate(int level, const Generator& x,
                                                   int z_index,
                                                   const std::set<LatticeVector>& S) {
    const int p = level;
    if (z_index < 1 || z_index > p) throw BadParams("z index out of range");
    if (!permutation_invariant(S, p))
        throw NotInvariant("displacement set is not invariant under coordinate permutations");
    for (const auto& d : displacement_set(level, x)) {
        if (!S.count(d))
            throw BadParams("displacement set of the generator is not contained in S");
    }

    // F = prod_{delta in S} (Z - sigma_{z_index}(b + delta)), tracked as a
    // vector of MultiPoly coefficients of powers of Z.
    MultiPoly sigma = elementary_symmetric(p, z_index);
    std::vector<MultiPoly> coeffs = {MultiPoly::constant(p, Rational(1))};
    std::vector<LatticeVector> deltas(S.begin(), S.end());
    std::sort(deltas.begin(), deltas.end());
    for (const auto& delta : deltas) {
        std::vector<MultiPoly> shifted_vars;
        shifted_vars.reserve(p);
        for (int i = 0; i < p; ++i) {
            MultiPoly v = MultiPoly::variable(p, i);
            v += MultiPoly::constant(p, Rational(delta[i]));
            shifted_vars.push_back(std::move(v));
        }
        MultiPoly zs = sigma.compose(shifted_vars);
        std::vector<MultiPoly> next(coeffs.size() + 1, MultiPoly(p));
        for (std::size_t l = 0; l < coeffs.size(); ++l) {
            next[l + 1] += coeffs[l];
            next[l] -= coeffs[l] * zs;
        }
        coeffs = std::move(next);
    }

    StraighteningCertificate cert;
    cert.coefficients.reserve(coeffs.size());
    for (auto& a : coeffs) {
        // The right tensor factors only involve the b variables, so the
        // rewritten coefficients live in the t_22 part of the subalgebra.
        MultiPoly g = express_in_elementary_symmetrics(a);
        cert.coefficients.push_back(sigma_poly_to_t22(level, g));
    }

    NCPolynomial z = NCPolynomial::generator(level, {2, 2, z_index});
    NCPolynomial xg = NCPolynomial::generator(level, x);
    NCPolynomial sum(level);
    for (std::size_t l = 0; l < cert.coefficients.size(); ++l) {
        NCPolynomial term = multiply(power(z, static_cast<int>(l)),
                                     multiply(xg, cert.coefficients[l]));
        sum += term;
    }
    cert.verified = sum.is_zero();
    return cert;
}

}  // namespace ypgl2
