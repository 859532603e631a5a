#include "ypgl2/unipoly.hpp"

#include <ostream>

#include "ypgl2/errors.hpp"

namespace ypgl2 {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

UniPoly UniPoly::monomial(int degree, const Rational& c) {
    UniPoly p;
    if (!c.is_zero()) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& negated_roots) {
    UniPoly p = constant(1);
    for (const auto& r : negated_roots) {
        // multiply by (u + r)
        std::vector<Rational> next(p.c_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            next[i] += p.c_[i] * r;
            next[i + 1] += p.c_[i];
        }
        p.c_ = std::move(next);
        p.trim();
    }
    return p;
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Rational UniPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::shift(const Rational& c) const {
    // Horner: P(u+c) = (...((c_n)(u+c) + c_{n-1})(u+c) + ...) + c_0
    UniPoly acc;
    UniPoly linear(std::vector<Rational>{c, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * linear;
        acc += constant(*it);
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    UniPoly p(std::move(out));
    return p;
}

UniPoly& UniPoly::scale(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& den) const {
    if (den.is_zero()) throw Error("polynomial division by zero");
    UniPoly rem = *this;
    if (degree() < den.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(degree() - den.degree() + 1, Rational(0));
    Rational lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        Rational factor = rem.leading() / lead;
        q[shift] = factor;
        UniPoly sub = den;
        sub.scale(factor);
        std::vector<Rational> shifted(shift, Rational(0));
        shifted.insert(shifted.end(), sub.c_.begin(), sub.c_.end());
        rem -= UniPoly(std::move(shifted));
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly poly_div_exact(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) {
        std::string msg = "nonzero remainder in exact polynomial division:";
        for (const auto& c : r.coeffs()) msg += " " + c.str();
        throw NonzeroRemainder(msg);
    }
    return q;
}

LagrangeFactor lagrange_numerator(const std::vector<Rational>& beta,
                                  const std::vector<int>& k, int axis) {
    const int p = static_cast<int>(beta.size());
    if (axis < 1 || axis > p) throw Error("lagrange axis out of range");
    LagrangeFactor out;
    out.numerator = UniPoly::constant(1);
    out.denominator = Rational(1);
    const Rational bi = beta[axis - 1] + Rational(k[axis - 1]);
    std::vector<Rational> roots;
    for (int j = 1; j <= p; ++j) {
        if (j == axis) continue;
        Rational bj = beta[j - 1] + Rational(k[j - 1]);
        roots.push_back(bj);
        Rational d = bj - bi;
        if (d.is_zero())
            throw DegenerateDenominator("coincident evaluation points on axes " +
                                        std::to_string(axis) + "," + std::to_string(j));
        out.denominator *= d;
    }
    out.numerator = UniPoly::from_roots(roots);
    return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c.str();
        } else {
            os << "(" << c.str() << ")u";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

}  // namespace ypgl2
