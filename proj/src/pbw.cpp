#include "ypgl2/pbw.hpp"

#include <sstream>

#include "ypgl2/errors.hpp"

namespace ypgl2 {

std::string Generator::str() const {
    return "t[" + std::to_string(i) + "][" + std::to_string(j) + "](" +
           std::to_string(r) + ")";
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = filtration_degree(a), db = filtration_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int filtration_degree(const Monomial& m) {
    int d = 0;
    for (const auto& g : m) d += g.r;
    return d;
}

NCPolynomial NCPolynomial::one(int level) {
    NCPolynomial x(level);
    x.add_ordered({}, Rational(1));
    return x;
}

NCPolynomial NCPolynomial::generator(int level, const Generator& g) {
    if (g.r < 1 || g.r > level) throw Error("generator level out of range");
    NCPolynomial x(level);
    x.add_ordered({g}, Rational(1));
    return x;
}

int NCPolynomial::filtration_deg() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, filtration_degree(m));
    return d;
}

void NCPolynomial::add_ordered(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial out(p_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    if (p_ != o.p_) throw Error("mixing Yangian levels");
    for (const auto& [m, c] : o.terms_) add_ordered(m, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    if (p_ != o.p_) throw Error("mixing Yangian levels");
    for (const auto& [m, c] : o.terms_) add_ordered(m, -c);
    return *this;
}

NCPolynomial& NCPolynomial::scale(const Rational& s) {
    if (s.is_zero()) {
        *this = NCPolynomial(p_);
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

std::string NCPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& g : m) os << " " << g.str();
    }
    return os.str();
}

NCPolynomial commutator_basic(int level, const Generator& g1, const Generator& g2) {
    // [t^(r)_ij, t^(s)_kl] = sum_{a=1..min(r,s)}
    //     t^(a-1)_kj t^(r+s-a)_il - t^(r+s-a)_kj t^(a-1)_il
    // with t^(0)_xy = delta_xy and t^(m) = 0 for m > level.
    const int r = g1.r, s = g2.r;
    const int i = g1.i, j = g1.j, k = g2.i, l = g2.j;
    NCPolynomial out(level);
    auto emit = [&](int lev1, int i1, int j1, int lev2, int i2, int j2, int sign) {
        // product t^(lev1)_{i1 j1} t^(lev2)_{i2 j2} with level-0 deltas.
        if (lev1 > level || lev2 > level) return;
        Rational c(sign);
        Monomial word;
        if (lev1 == 0) {
            if (i1 != j1) return;
        } else {
            word.push_back({i1, j1, lev1});
        }
        if (lev2 == 0) {
            if (i2 != j2) return;
        } else {
            word.push_back({i2, j2, lev2});
        }
        out += normal_order(level, word, c);
    };
    for (int a = 1; a <= std::min(r, s); ++a) {
        emit(a - 1, k, j, r + s - a, i, l, +1);
        emit(r + s - a, k, j, a - 1, i, l, -1);
    }
    return out;
}

NCPolynomial normal_order(int level, const Monomial& word, const Rational& coeff) {
    NCPolynomial out(level);
    if (coeff.is_zero()) return out;
    // Worklist of pending (coefficient, word) pairs. Swapping an adjacent
    // inversion emits the swapped word plus commutator terms of strictly
    // lower filtration degree, so the (degree, inversion count) measure
    // decreases and the loop terminates.
    struct Item {
        Rational c;
        Monomial w;
    };
    std::vector<Item> work;
    work.push_back({coeff, word});
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        std::size_t pos = 0;
        bool sorted = true;
        for (std::size_t q = 0; q + 1 < it.w.size(); ++q) {
            if (it.w[q + 1] < it.w[q]) {
                pos = q;
                sorted = false;
                break;
            }
        }
        if (sorted) {
            out.add_ordered(it.w, it.c);
            continue;
        }
        Generator x = it.w[pos], y = it.w[pos + 1];
        Monomial swapped = it.w;
        std::swap(swapped[pos], swapped[pos + 1]);
        work.push_back({it.c, std::move(swapped)});
        NCPolynomial corr = commutator_basic(level, x, y);
        for (const auto& [m, c] : corr.terms()) {
            Monomial spliced;
            spliced.reserve(it.w.size() - 2 + m.size());
            spliced.insert(spliced.end(), it.w.begin(), it.w.begin() + pos);
            spliced.insert(spliced.end(), m.begin(), m.end());
            spliced.insert(spliced.end(), it.w.begin() + pos + 2, it.w.end());
            work.push_back({it.c * c, std::move(spliced)});
        }
    }
    return out;
}

NCPolynomial multiply(const NCPolynomial& x, const NCPolynomial& y) {
    if (x.level() != y.level()) throw Error("mixing Yangian levels");
    NCPolynomial out(x.level());
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Monomial w;
            w.reserve(mx.size() + my.size());
            w.insert(w.end(), mx.begin(), mx.end());
            w.insert(w.end(), my.begin(), my.end());
            out += normal_order(x.level(), w, cx * cy);
        }
    }
    return out;
}

NCPolynomial power(const NCPolynomial& x, int e) {
    NCPolynomial out = NCPolynomial::one(x.level());
    for (int q = 0; q < e; ++q) out = multiply(out, x);
    return out;
}

OperatorPoly OperatorPoly::T(int level, int i, int j) {
    OperatorPoly out(level, level);
    if (i == j) out.c_[level] = NCPolynomial::one(level);
    for (int k = 1; k <= level; ++k)
        out.c_[level - k] = NCPolynomial::generator(level, {i, j, k});
    return out;
}

OperatorPoly OperatorPoly::shift_u(const Rational& a) const {
    OperatorPoly out(p_, degree());
    // u^n -> (u+a)^n expanded binomially
    for (int n = 0; n <= degree(); ++n) {
        if (c_[n].is_zero()) continue;
        Rational binom(1);
        Rational apow(1);
        for (int m = n; m >= 0; --m) {
            // binom = C(n, m) a^(n-m), updated incrementally
            NCPolynomial term = c_[n];
            term.scale(binom * apow);
            out.c_[m] += term;
            binom = binom * Rational(m) / Rational(n - m + 1);
            apow *= a;
        }
    }
    return out;
}

OperatorPoly operator*(const OperatorPoly& A, const OperatorPoly& B) {
    OperatorPoly out(A.p_, A.degree() + B.degree());
    for (int a = 0; a <= A.degree(); ++a) {
        if (A.c_[a].is_zero()) continue;
        for (int b = 0; b <= B.degree(); ++b) {
            if (B.c_[b].is_zero()) continue;
            out.c_[a + b] += multiply(A.c_[a], B.c_[b]);
        }
    }
    return out;
}

OperatorPoly operator-(const OperatorPoly& A, const OperatorPoly& B) {
    OperatorPoly out(A.p_, std::max(A.degree(), B.degree()));
    for (int k = 0; k <= out.degree(); ++k) {
        if (k <= A.degree()) out.c_[k] += A.c_[k];
        if (k <= B.degree()) out.c_[k] -= B.c_[k];
    }
    return out;
}

bool operator==(const OperatorPoly& A, const OperatorPoly& B) {
    if (A.p_ != B.p_) return false;
    int d = std::max(A.degree(), B.degree());
    const NCPolynomial zero = NCPolynomial::zero(A.p_);
    for (int k = 0; k <= d; ++k) {
        const NCPolynomial& a = k <= A.degree() ? A.c_[k] : zero;
        const NCPolynomial& b = k <= B.degree() ? B.c_[k] : zero;
        if (!(a == b)) return false;
    }
    return true;
}

}  // namespace ypgl2
