#include "foci/seifert.hpp"

#include <numeric>

#include "foci/cyclotomic.hpp"
#include "foci/errors.hpp"
#include "foci/linalg.hpp"

namespace foci {

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Int>> entries)
    : entries_(std::move(entries)) {
    const size_t n = entries_.size();
    if (n % 2 != 0) throw ValidationError("Seifert matrix must have even dimension");
    for (auto& row : entries_)
        if (row.size() != n) throw ValidationError("Seifert matrix must be square");
    if (n == 0) return;
    std::vector<std::vector<Int>> skew(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) skew[i][j] = entries_[i][j] - entries_[j][i];
    Int d = bareiss_det(std::move(skew));
    if (d != 1 && d != -1)
        throw ValidationError("det(V - V^T) must be +-1, got " + d.str());
}

SeifertMatrix SeifertMatrix::block_sum(const SeifertMatrix& other) const {
    const size_t n1 = dim(), n2 = other.dim();
    std::vector<std::vector<Int>> e(n1 + n2, std::vector<Int>(n1 + n2, Int(0)));
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) e[i][j] = entries_[i][j];
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) e[n1 + i][n1 + j] = other.entries_[i][j];
    return SeifertMatrix(std::move(e));
}

Laurent alexander_polynomial(const SeifertMatrix& v) {
    const long g = static_cast<long>(v.genus());
    if (g == 0) return Laurent(Int(1));
    // det(t^{1/2} V - t^{-1/2} V^T) = s^{-2g} det(s^2 V - V^T) with s^2 = t,
    // so all odd powers of s cancel identically and
    // delta(t) = t^{-g} det(t V - V^T).
    IntPoly p = char_det_poly(v.entries());
    Laurent delta;
    for (size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) delta.set_coeff(static_cast<long>(k) - g, p[k]);
    Int at_one = delta.evaluate_at_one();
    if (at_one == -1) delta = -delta;
    else if (at_one != 1)
        throw ValidationError("Alexander normalization failed: delta(1) = " + at_one.str());
    if (!delta.is_symmetric())
        throw ValidationError("Alexander polynomial is not symmetric");
    return delta;
}

Int alexander_second_derivative_at_1(const SeifertMatrix& v) {
    return alexander_polynomial(v).derivative().derivative().evaluate_at_one();
}

int tristram_levine_signature(const SeifertMatrix& v, long m, long n) {
    if (n < 2) throw InvalidParams("signature requires n >= 2");
    if (m < 1 || m > n - 1) throw InvalidParams("signature requires 1 <= m <= n-1");
    if (v.dim() == 0) return 0;
    const long g = std::gcd(m, n);
    const long order = n / g;
    const long mp = m / g;  // w = e^{2*pi*i*mp/order}, a primitive root

    // Degenerate exactly when w is a root of delta.
    Laurent delta = alexander_polynomial(v);
    CycInt delta_at(static_cast<int>(order));
    for (auto& [k, c] : delta.coeffs())
        delta_at = delta_at + CycInt::root_power(static_cast<int>(order), k) * CycInt(static_cast<int>(order), c);
    if (delta_at.is_zero())
        throw SingularForm("omega = e^{2 pi i " + std::to_string(m) + "/" + std::to_string(n) +
                           "} is a root of the Alexander polynomial");

    // Work with the abstract primitive root: w = zeta, embedded at
    // e^{2*pi*i*mp/order} when signs are certified.
    const size_t d = v.dim();
    CycInt one_minus_w = CycInt(static_cast<int>(order), Int(1)) - CycInt::root_power(static_cast<int>(order), 1);
    CycInt one_minus_wbar = one_minus_w.conj();
    std::vector<std::vector<CycInt>> h(d, std::vector<CycInt>(d, CycInt(static_cast<int>(order))));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            CycInt vij(static_cast<int>(order), v.entries()[i][j]);
            CycInt vji(static_cast<int>(order), v.entries()[j][i]);
            h[i][j] = one_minus_w * vij + one_minus_wbar * vji;
        }
    int sig = hermitian_signature(std::move(h), mp);
    if (sig % 2 != 0)
        throw ValidationError("internal: Tristram-Levine signature came out odd");
    return sig;
}

std::optional<Int> branched_cover_h1_order(const SeifertMatrix& v, long n) {
    if (n < 2) throw InvalidParams("branched cover order requires n >= 2");
    Laurent delta = alexander_polynomial(v);
    // shift to an ordinary polynomial; roots of unity have modulus one, so
    // the shift does not change |Res|
    IntPoly dp(static_cast<size_t>(delta.max_exp() - delta.min_exp() + 1), Int(0));
    for (auto& [k, c] : delta.coeffs()) dp[static_cast<size_t>(k - delta.min_exp())] = c;
    IntPoly f(static_cast<size_t>(n), Int(1));  // 1 + t + ... + t^{n-1}
    Int res = resultant(f, dp);
    if (res == 0) return std::nullopt;
    return res < 0 ? -res : res;
}

bool is_qhs_branched_cover(const SeifertMatrix& v, long n) {
    return branched_cover_h1_order(v, n).has_value();
}

}  // namespace foci
