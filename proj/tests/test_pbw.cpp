#include <random>

#include "doctest.h"
#include "ypgl2/central.hpp"
#include "ypgl2/errors.hpp"
#include "ypgl2/pbw.hpp"
#include "ypgl2/straighten.hpp"

using namespace ypgl2;

namespace {

NCPolynomial gen(int p, int i, int j, int r = 1) {
    return NCPolynomial::generator(p, {i, j, r});
}

NCPolynomial random_ncpoly(int p, int max_deg, int nterms, std::mt19937_64& rng) {
    NCPolynomial out(p);
    for (int t = 0; t < nterms; ++t) {
        Monomial w;
        int budget = max_deg;
        while (budget > 0 && (rng() % 3) != 0) {
            int r = 1 + static_cast<int>(rng() % std::min<long>(p, budget));
            int i = 1 + static_cast<int>(rng() % 2);
            int j = 1 + static_cast<int>(rng() % 2);
            w.push_back({i, j, r});
            budget -= r;
        }
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 4);
        out += normal_order(p, w, Rational(num, den));
    }
    return out;
}

}  // namespace

TEST_CASE("level-1 commutators reproduce the gl_2 structure constants") {
    const int p = 1;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    NCPolynomial want(p);
                    if (k == j) want += gen(p, i, l);
                    if (i == l) want -= gen(p, k, j);
                    CHECK(commutator_basic(p, {i, j, 1}, {k, l, 1}) == want);
                }
}

TEST_CASE("commutator examples") {
    CHECK(commutator_basic(1, {1, 1, 1}, {2, 2, 1}).is_zero());
    NCPolynomial c = commutator_basic(1, {1, 2, 1}, {2, 1, 1});
    CHECK(c == gen(1, 1, 1) - gen(1, 2, 2));
}

TEST_CASE("truncation drops levels above p") {
    const int p = 2;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    NCPolynomial c = commutator_basic(p, {i, j, 2}, {k, l, 2});
                    for (const auto& [m, coeff] : c.terms())
                        for (const auto& g : m) CHECK(g.r <= p);
                }
}

TEST_CASE("multiplying by one is the identity on normal forms") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        NCPolynomial x = random_ncpoly(2, 3, 3, rng);
        CHECK(multiply(x, NCPolynomial::one(2)) == x);
        CHECK(multiply(NCPolynomial::one(2), x) == x);
    }
}

TEST_CASE("ordering example at p=1") {
    // t_12 sorts before t_21, so t_12 t_21 is already a normal form and the
    // reversed product straightens through the commutator:
    // t_21 t_12 = t_12 t_21 + t_22 - t_11
    NCPolynomial already = multiply(gen(1, 1, 2), gen(1, 2, 1));
    NCPolynomial word(1);
    word.add_ordered({{1, 2, 1}, {2, 1, 1}}, Rational(1));
    CHECK(already == word);

    NCPolynomial prod = multiply(gen(1, 2, 1), gen(1, 1, 2));
    NCPolynomial want = word + gen(1, 2, 2) - gen(1, 1, 1);
    CHECK(prod == want);
}

TEST_CASE("multiplication is associative on random triples") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        NCPolynomial x = random_ncpoly(2, 3, 2, rng);
        NCPolynomial y = random_ncpoly(2, 3, 2, rng);
        NCPolynomial z = random_ncpoly(2, 3, 2, rng);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("graded symbol is multiplicative") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        NCPolynomial x = random_ncpoly(2, 3, 2, rng);
        NCPolynomial y = random_ncpoly(2, 3, 2, rng);
        if (x.is_zero() || y.is_zero()) continue;
        NCPolynomial xy = multiply(x, y);
        CHECK(xy.filtration_deg() <= x.filtration_deg() + y.filtration_deg());
        MultiPoly prod = graded_symbol(x) * graded_symbol(y);
        if (!prod.is_zero()) CHECK(graded_symbol(xy) == prod);
    }
}

TEST_CASE("quantum determinant at p=1") {
    auto d = quantum_determinant(1);
    REQUIRE(d.size() == 2);
    // d_1 = t_11 + t_22 - 1
    NCPolynomial d1 = gen(1, 1, 1) + gen(1, 2, 2);
    d1 += NCPolynomial::one(1).scale(Rational(-1));
    CHECK(d[0] == d1);
    // d_2 = t_11 t_22 - t_11 - t_21 t_12
    NCPolynomial d2(1);
    d2.add_ordered({{1, 1, 1}, {2, 2, 1}}, Rational(1));
    d2 -= gen(1, 1, 1);
    d2 -= multiply(gen(1, 2, 1), gen(1, 1, 2));
    CHECK(d[1] == d2);
}

TEST_CASE("all four quantum determinant expressions agree") {
    for (int p = 1; p <= 2; ++p) {
        auto exprs = quantum_determinant_expressions(p);
        CHECK(exprs[0] == exprs[1]);
        CHECK(exprs[0] == exprs[2]);
        CHECK(exprs[0] == exprs[3]);
        CHECK(exprs[0].coeff(2 * p) == NCPolynomial::one(p));
    }
}

TEST_CASE("quantum determinant coefficients are central") {
    for (int p = 1; p <= 2; ++p)
        for (const auto& d : quantum_determinant(p)) CHECK(is_central(d));
}

TEST_CASE("is_central on simple elements") {
    CHECK(is_central(NCPolynomial::one(1)));
    CHECK(is_central(gen(1, 2, 1)) == false);
}

TEST_CASE("gamma generators commute pairwise") {
    for (int p = 1; p <= 2; ++p) {
        auto gens = gamma_generators(p);
        CHECK(gens.size() == std::size_t(3 * p));
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                CHECK(multiply(gens[a], gens[b]) == multiply(gens[b], gens[a]));
    }
}

TEST_CASE("graded symbols of the p=1 gamma generators") {
    auto gens = gamma_generators(1);
    MultiPoly s0 = graded_symbol(gens[0]);
    CHECK(s0 == MultiPoly::variable(4, symbol_index(1, {2, 2, 1})));
    // symbol of d_1 is t11 + t22
    MultiPoly s1 = graded_symbol(gens[1]);
    CHECK(s1 == MultiPoly::variable(4, 0) + MultiPoly::variable(4, 3));
    // symbol of d_2 is t11 t22 - t21 t12
    MultiPoly s2 = graded_symbol(gens[2]);
    MultiPoly want = MultiPoly::variable(4, 0) * MultiPoly::variable(4, 3) -
                     MultiPoly::variable(4, 2) * MultiPoly::variable(4, 1);
    CHECK(s2 == want);
}

TEST_CASE("jacobian rank certifies algebraic independence") {
    SUBCASE("p=1 generic point") {
        CHECK(jacobian_rank_gamma(1, {Rational(2), Rational(3), Rational(5), Rational(7)}) == 3);
    }
    SUBCASE("p=1 origin is allowed to degenerate") {
        CHECK(jacobian_rank_gamma(1, std::vector<Rational>(4, Rational(0))) <= 3);
    }
    SUBCASE("p=2 reaches full rank at some random point") {
        std::mt19937_64 rng(17);
        bool full = false;
        for (int t = 0; t < 5 && !full; ++t) {
            std::vector<Rational> pt;
            for (int i = 0; i < 8; ++i)
                pt.push_back(Rational(1 + static_cast<long>(rng() % 20),
                                      1 + static_cast<long>(rng() % 7)));
            full = jacobian_rank_gamma(2, pt) == 6;
        }
        CHECK(full);
    }
}

TEST_CASE("displacement sets") {
    CHECK(displacement_set(2, {2, 2, 1}) == std::set<LatticeVector>{{0, 0}});
    CHECK(displacement_set(2, {2, 1, 1}) == std::set<LatticeVector>{{1, 0}, {0, 1}});
    CHECK(displacement_set(2, {1, 2, 1}) == std::set<LatticeVector>{{-1, 0}, {0, -1}});
    CHECK(displacement_set(2, {1, 1, 1}) ==
          std::set<LatticeVector>{{0, 0}, {1, -1}, {-1, 1}});
}

TEST_CASE("straightening certificate at p=1") {
    auto cert = straightening_certificate(1, {2, 1, 1}, 1, {{1}});
    REQUIRE(cert.coefficients.size() == 2);
    CHECK(cert.verified);
    // a_1 = 1, a_0 = -(t_22 + 1)
    CHECK(cert.coefficients[1] == NCPolynomial::one(1));
    NCPolynomial a0 = -(gen(1, 2, 2) + NCPolynomial::one(1));
    CHECK(cert.coefficients[0] == a0);
}

TEST_CASE("straightening certificate reproduces the p=2 sample identity") {
    auto cert = straightening_certificate(2, {2, 1, 2}, 2, {{1, 0}, {0, 1}});
    REQUIRE(cert.coefficients.size() == 3);
    CHECK(cert.verified);
    NCPolynomial w = gen(2, 2, 2, 1);  // t_22^(1)
    NCPolynomial z = gen(2, 2, 2, 2);  // t_22^(2)
    CHECK(cert.coefficients[2] == NCPolynomial::one(2));
    CHECK(cert.coefficients[1] == -(multiply(z, NCPolynomial::one(2).scale(Rational(2))) + w));
    CHECK(cert.coefficients[0] == multiply(z, z) + multiply(z, w) + z);

    // the displayed relation, normal-ordered directly, vanishes
    NCPolynomial x = gen(2, 2, 1, 2);
    NCPolynomial lhs = multiply(multiply(z, z), x);
    lhs -= multiply(multiply(z, x), multiply(z, NCPolynomial::one(2).scale(Rational(2))) + w);
    lhs += multiply(x, multiply(z, z) + multiply(z, w) + z);
    CHECK(lhs.is_zero());
}

TEST_CASE("certificates verify for every ladder generator at p=1,2") {
    for (int p = 1; p <= 2; ++p) {
        for (int r = 1; r <= p; ++r) {
            for (int zi = 1; zi <= p; ++zi) {
                for (int updown = 0; updown < 2; ++updown) {
                    Generator x = updown == 0 ? Generator{2, 1, r} : Generator{1, 2, r};
                    auto cert = straightening_certificate(p, x, zi, displacement_set(p, x));
                    CHECK(cert.verified);
                }
            }
        }
    }
}

TEST_CASE("non-invariant displacement sets are rejected") {
    CHECK_THROWS_AS(straightening_certificate(2, {2, 1, 1}, 1, {{1, 0}}), NotInvariant);
}
