#include "ypgl2/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ypgl2/errors.hpp"

namespace ypgl2 {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    int d = int(-1);
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::scale(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int q = 0; q < e[i]; ++q) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
    if (static_cast<int>(args.size()) != nvars_)
        throw Error("compose: argument count mismatch");
    int m = args.empty() ? 0 : args[0].nvars();
    MultiPoly out(m);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(m, c);
        for (int i = 0; i < nvars_; ++i)
            for (int q = 0; q < e[i]; ++q) t = t * args[i];
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::permute_variables(const std::vector<int>& perm) const {
    MultiPoly out(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [src, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[perm[i]] = src[i];
        out.add_term(e, c);
    }
    return out;
}

bool MultiPoly::is_symmetric() const {
    // Adjacent transpositions generate the full symmetric group.
    std::vector<int> perm(nvars_);
    for (int s = 0; s + 1 < nvars_; ++s) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[s], perm[s + 1]);
        if (!(permute_variables(perm) == *this)) return false;
    }
    return true;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << names[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

MultiPoly elementary_symmetric(int nvars, int k) {
    // Coefficient extraction from prod_i (t + x_i), degree tracked directly.
    if (k == 0) return MultiPoly::constant(nvars, Rational(1));
    if (k > nvars) return MultiPoly(nvars);
    // table[j] = sigma_j of the first i variables
    std::vector<MultiPoly> table(k + 1, MultiPoly(nvars));
    table[0] = MultiPoly::constant(nvars, Rational(1));
    for (int i = 0; i < nvars; ++i) {
        MultiPoly xi = MultiPoly::variable(nvars, i);
        for (int j = std::min(k, i + 1); j >= 1; --j)
            table[j] += table[j - 1] * xi;
    }
    return table[k];
}

MultiPoly express_in_elementary_symmetrics(const MultiPoly& f) {
    const int p = f.nvars();
    if (!f.is_symmetric())
        throw NotSymmetric("input polynomial is not symmetric in its variables");

    std::vector<MultiPoly> sigma;
    sigma.reserve(p);
    for (int k = 1; k <= p; ++k) sigma.push_back(elementary_symmetric(p, k));

    MultiPoly rest = f;
    MultiPoly out(p);
    while (!rest.is_zero()) {
        // Lex-leading term of a symmetric polynomial has weakly decreasing
        // exponents; subtracting the matching sigma-monomial strictly lowers
        // the lex leading term, which bounds the loop.
        auto best = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
            if (std::lexicographical_compare(best->first.begin(), best->first.end(),
                                             it->first.begin(), it->first.end()))
                best = it;
        }
        const std::vector<int>& lambda = best->first;
        const Rational c = best->second;
        for (int i = 0; i + 1 < p; ++i) {
            if (lambda[i] < lambda[i + 1])
                throw NotSymmetric("leading exponent not weakly decreasing");
        }
        std::vector<int> sexp(p, 0);
        for (int i = 0; i < p; ++i) {
            int next = (i + 1 < p) ? lambda[i + 1] : 0;
            sexp[i] = lambda[i] - next;
        }
        out.add_term(sexp, c);
        MultiPoly prod = MultiPoly::constant(p, c);
        for (int i = 0; i < p; ++i)
            for (int q = 0; q < sexp[i]; ++q) prod = prod * sigma[i];
        rest -= prod;
    }
    return out;
}

}  // namespace ypgl2
