#include "foci/laurent.hpp"

#include <sstream>

#include "foci/errors.hpp"
#include "foci/linalg.hpp"

namespace foci {

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ka, ca] : a.coeffs_)
        for (auto& [kb, cb] : b.coeffs_) {
            long k = ka + kb;
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end()) {
                Int prod = ca * cb;
                if (prod != 0) r.coeffs_[k] = prod;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::reciprocal() const {
    Laurent r;
    for (auto& [k, c] : coeffs_) r.coeffs_[-k] = c;
    return r;
}

Laurent Laurent::shifted(long k) const {
    Laurent r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

Int Laurent::evaluate_at_one() const {
    Int s = 0;
    for (auto& [k, c] : coeffs_) s += c;
    return s;
}

Laurent Laurent::derivative() const {
    Laurent r;
    for (auto& [k, c] : coeffs_)
        if (k != 0) r.coeffs_[k - 1] = c * k;
    return r;
}

std::string Laurent::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending exponents
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long k = it->first;
        Int c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (k == 0) {
            out << c.str();
        } else {
            if (c != 1) out << c.str() << "*";
            out << var;
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

void ipoly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int ipoly_deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ipoly_trim(r);
    return r;
}

IntPoly ipoly_divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly rem = a, q;
    ipoly_trim(rem);
    IntPoly bb = b;
    ipoly_trim(bb);
    if (bb.empty()) throw InvalidParams("polynomial division by zero");
    if (rem.empty()) return {};
    if (rem.size() < bb.size()) throw InvalidParams("inexact polynomial division");
    q.assign(rem.size() - bb.size() + 1, Int(0));
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Int lead = rem[i + bb.size() - 1];
        if (lead % bb.back() != 0) throw InvalidParams("inexact polynomial division");
        Int c = lead / bb.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < bb.size(); ++j) rem[i + j] -= c * bb[j];
    }
    for (auto& c : rem)
        if (c != 0) throw InvalidParams("inexact polynomial division");
    ipoly_trim(q);
    return q;
}

Int ipoly_eval(const IntPoly& p, const Int& x) {
    Int r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Int resultant(const IntPoly& f_in, const IntPoly& g_in) {
    IntPoly f = f_in, g = g_in;
    ipoly_trim(f);
    ipoly_trim(g);
    int df = ipoly_deg(f), dg = ipoly_deg(g);
    if (df < 0 || dg < 0) return 0;
    if (df == 0 && dg == 0) return 1;
    if (dg == 0) {
        Int r = 1;
        for (int i = 0; i < df; ++i) r *= g[0];
        return r;
    }
    if (df == 0) {
        Int r = 1;
        for (int i = 0; i < dg; ++i) r *= f[0];
        return r;
    }
    const int n = df + dg;
    std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) s[i][i + j] = f[df - j];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) s[dg + i][i + j] = g[dg - j];
    return bareiss_det(std::move(s));
}

IntPoly char_det_poly(const std::vector<std::vector<Int>>& v) {
    const size_t n = v.size();
    if (n == 0) return {Int(1)};
    // sample det(u*V - V^T) at u = 0..n
    std::vector<Int> xs(n + 1), ys(n + 1);
    for (size_t p = 0; p <= n; ++p) {
        Int u(static_cast<long>(p));
        std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a[i][j] = u * v[i][j] - v[j][i];
        xs[p] = u;
        ys[p] = bareiss_det(std::move(a));
    }
    // exact Lagrange interpolation over Q; result is known to be integral
    const size_t m = n + 1;
    std::vector<Rat> acc(m, Rat(0));
    for (size_t i = 0; i < m; ++i) {
        // basis polynomial prod_{j != i} (u - x_j) / (x_i - x_j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - Rat(xs[j]) * basis[k];
            basis[0] = -Rat(xs[j]) * basis[0];
            denom *= Rat(xs[i] - xs[j]);
        }
        Rat w = Rat(ys[i]) / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
    }
    IntPoly out(m);
    for (size_t k = 0; k < m; ++k) {
        if (acc[k].denominator() != 1)
            throw InvalidParams("determinant interpolation produced a non-integer");
        out[k] = acc[k].numerator();
    }
    ipoly_trim(out);
    return out;
}

}  // namespace foci
