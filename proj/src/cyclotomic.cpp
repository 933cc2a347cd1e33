#include "foci/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <mutex>
#include <sstream>

#include "foci/errors.hpp"

namespace foci {

CycInt CycInt::root_power(int order, long k) {
    CycInt r(order);
    long e = k % order;
    if (e < 0) e += order;
    r.c_[static_cast<size_t>(e)] = 1;
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(order_);
    for (int i = 0; i < order_; ++i) r.c_[i] = -c_[i];
    return r;
}

static void check_orders(const CycInt& a, const CycInt& b) {
    if (a.order() != b.order()) throw InvalidParams("cyclotomic order mismatch");
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    check_orders(a, b);
    CycInt r(a.order_);
    for (int i = 0; i < a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    check_orders(a, b);
    CycInt r(a.order_);
    for (int i = 0; i < a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    check_orders(a, b);
    const int n = a.order_;
    CycInt r(n);
    for (int i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b.c_[j] == 0) continue;
            int k = i + j;
            if (k >= n) k -= n;
            r.c_[k] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

CycInt CycInt::conj() const {
    CycInt r(order_);
    for (int i = 0; i < order_; ++i) r.c_[(order_ - i) % order_] = c_[i];
    return r;
}

const IntPoly& cyclotomic_poly(int n) {
    if (n < 1) throw InvalidParams("cyclotomic order must be positive");
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // fill every divisor of n in increasing order so each step only needs
    // already-computed entries: phi_d = (x^d - 1) / prod_{e | d, e < d} phi_e
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        IntPoly f(d + 1, Int(0));
        f[0] = -1;
        f[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) f = ipoly_divexact(f, cache.at(e));
        cache.emplace(d, std::move(f));
    }
    return cache.at(n);
}

bool CycInt::is_zero() const {
    IntPoly p(c_);
    ipoly_trim(p);
    if (p.empty()) return true;
    const IntPoly& phi = cyclotomic_poly(order_);
    // remainder of p mod the monic phi
    IntPoly rem = p;
    int dphi = ipoly_deg(phi);
    while (ipoly_deg(rem) >= dphi) {
        Int lead = rem.back();
        int shift = ipoly_deg(rem) - dphi;
        for (int i = 0; i <= dphi; ++i) rem[shift + i] -= lead * phi[i];
        ipoly_trim(rem);
    }
    return rem.empty();
}

bool CycInt::is_real() const {
    for (int i = 0; i < order_; ++i)
        if (c_[i] != c_[(order_ - i) % order_]) return (*this - conj()).is_zero();
    return true;
}

namespace {

template <class Float>
int try_sign(const std::vector<Int>& coeffs, int order, long m, int digits) {
    const Float pi = boost::math::constants::pi<Float>();
    Float val = 0, magsum = 0;
    for (int k = 0; k < order; ++k) {
        if (coeffs[k] == 0) continue;
        Float a(coeffs[k].str());
        long e = (static_cast<long>(k) * m) % order;
        val += a * cos(2 * pi * Float(e) / Float(order));
        magsum += abs(a);
    }
    Float bound = (magsum + 1) * pow(Float(10), -(digits - 12));
    if (val > bound) return 1;
    if (val < -bound) return -1;
    return 0;  // not certified at this precision
}

}  // namespace

int CycInt::sign_at(long m) const {
    if (!is_real()) throw InvalidParams("sign requested for a non-real cyclotomic element");
    if (is_zero()) return 0;
    using F50 = boost::multiprecision::cpp_bin_float_50;
    using F150 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>>;
    using F500 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<500>>;
    if (int s = try_sign<F50>(c_, order_, m, 50)) return s;
    if (int s = try_sign<F150>(c_, order_, m, 150)) return s;
    if (int s = try_sign<F500>(c_, order_, m, 500)) return s;
    throw InvalidParams("sign certification exhausted precision ladder");
}

std::string CycInt::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < order_; ++i) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        out << c_[i].str() << "*z^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

int hermitian_signature(std::vector<std::vector<CycInt>> h, long m) {
    const size_t n = h.size();
    size_t processed = 0;
    int total = 0;
    int mult = 1;
    std::vector<size_t> live(n);
    for (size_t i = 0; i < n; ++i) live[i] = i;

    while (!live.empty()) {
        // choose a nonzero diagonal pivot
        size_t pivot = live.size();
        for (size_t a = 0; a < live.size(); ++a) {
            if (!h[live[a]][live[a]].is_zero()) {
                pivot = a;
                break;
            }
        }
        if (pivot == live.size()) {
            // all diagonal entries vanish; look for an off-diagonal entry and
            // make the (j, j) slot nonzero via e_j <- e_j + conj(h_jk) e_k,
            // which turns q(e_j) into 2|h_jk|^2 > 0
            size_t aj = live.size(), ak = live.size();
            for (size_t a = 0; a < live.size() && aj == live.size(); ++a)
                for (size_t b = a + 1; b < live.size(); ++b)
                    if (!h[live[a]][live[b]].is_zero()) {
                        aj = a;
                        ak = b;
                        break;
                    }
            if (aj == live.size())
                throw SingularForm("Hermitian form is degenerate (zero block)");
            size_t j = live[aj], k = live[ak];
            CycInt w = h[j][k];
            CycInt wbar = w.conj();
            // row_j += w * row_k ; col_j += conj(w) * col_k
            for (size_t b : live) h[j][b] = h[j][b] + w * h[k][b];
            for (size_t a : live) h[a][j] = h[a][j] + wbar * h[a][k];
            pivot = aj;
        }
        size_t p = live[pivot];
        CycInt d = h[p][p];
        int sd = d.sign_at(m);
        if (sd == 0) throw SingularForm("pivot with uncertified sign");  // unreachable
        total += mult * sd;
        mult *= sd;
        live.erase(live.begin() + static_cast<long>(pivot));
        ++processed;
        // fraction-free Schur complement: S = d*M22 - col*row
        for (size_t a : live)
            for (size_t b : live) h[a][b] = d * h[a][b] - h[a][p] * h[p][b];
    }
    (void)processed;
    return total;
}

}  // namespace foci
