#include "doctest.h"

#include <complex>
#include <map>

#include "foci/catalog.hpp"
#include "foci/errors.hpp"
#include "foci/rng.hpp"
#include "foci/seifert.hpp"

using namespace foci;

namespace {

// Independent oracle: Laurent polynomials as exponent->coefficient maps with
// long long arithmetic, and the determinant of (s V - s^{-1} V^T) by direct
// permutation expansion.  Kept deliberately separate from the library path.
using OPoly = std::map<long, long long>;

OPoly omul(const OPoly& a, const OPoly& b) {
    OPoly r;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) r[ka + kb] += ca * cb;
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

void oadd(OPoly& a, const OPoly& b, long long scale) {
    for (auto& [k, c] : b) {
        a[k] += scale * c;
        if (a[k] == 0) a.erase(k);
    }
}

OPoly oracle_alexander(const std::vector<std::vector<long long>>& v) {
    const size_t n = v.size();
    if (n == 0) return {{0, 1}};
    // permutation expansion of det(s v - s^{-1} v^T) in the variable s
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    OPoly det;
    do {
        int sign = 1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        OPoly term;
        term[0] = sign;
        for (size_t i = 0; i < n; ++i) {
            OPoly entry;
            long long up = v[i][perm[i]], dn = v[perm[i]][i];
            if (up != 0) entry[1] += up;
            if (dn != 0) entry[-1] -= dn;
            term = omul(term, entry);
        }
        oadd(det, term, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // substitute t = s^2; odd powers must all have cancelled
    OPoly out;
    for (auto& [k, c] : det) {
        REQUIRE(k % 2 == 0);
        out[k / 2] = c;
    }
    // normalize delta(1) = 1
    long long at_one = 0;
    for (auto& [k, c] : out) at_one += c;
    REQUIRE((at_one == 1 || at_one == -1));
    if (at_one == -1)
        for (auto& [k, c] : out) c = -c;
    return out;
}

long long oracle_ddelta1(const OPoly& p) {
    long long s = 0;
    for (auto& [k, c] : p) s += k * (k - 1) * c;
    return s;
}

OPoly to_oracle(const Laurent& p) {
    OPoly r;
    for (auto& [k, c] : p.coeffs()) r[k] = static_cast<long long>(c);
    return r;
}

std::vector<std::vector<long long>> to_ll(const SeifertMatrix& v) {
    std::vector<std::vector<long long>> r;
    for (auto& row : v.entries()) {
        std::vector<long long> rr;
        for (auto& x : row) rr.push_back(static_cast<long long>(x));
        r.push_back(rr);
    }
    return r;
}

// Floating-point signature oracle: realify the complex Hermitian form to the
// real symmetric [[A, -B], [B, A]] (eigenvalues doubled in multiplicity) and
// run classical cyclic Jacobi.  Returns 9999 when an eigenvalue is too close
// to zero to certify.
int float_signature(const SeifertMatrix& v, long m, long n) {
    const size_t d = v.dim();
    std::complex<double> w = std::polar(1.0, 2.0 * M_PI * double(m) / double(n));
    const size_t nn = 2 * d;
    std::vector<std::vector<double>> a(nn, std::vector<double>(nn, 0.0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            std::complex<double> hij =
                (1.0 - w) * double(static_cast<long long>(v.entries()[i][j])) +
                (1.0 - std::conj(w)) * double(static_cast<long long>(v.entries()[j][i]));
            a[i][j] = hij.real();
            a[i][j + d] = -hij.imag();
            a[i + d][j] = hij.imag();
            a[i + d][j + d] = hij.real();
        }
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0;
        for (size_t p = 0; p < nn; ++p)
            for (size_t q = p + 1; q < nn; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-22) break;
        for (size_t p = 0; p < nn; ++p)
            for (size_t q = p + 1; q < nn; ++q) {
                if (std::abs(a[p][q]) < 1e-14) continue;
                double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (size_t k = 0; k < nn; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < nn; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    int sig2 = 0;
    for (size_t i = 0; i < nn; ++i) {
        if (std::abs(a[i][i]) < 1e-7) return 9999;  // too ill-conditioned to certify
        sig2 += a[i][i] > 0 ? 1 : -1;
    }
    REQUIRE(sig2 % 2 == 0);
    return sig2 / 2;
}

}  // namespace

TEST_CASE("seifert matrix invariants are enforced") {
    CHECK_NOTHROW(SeifertMatrix{});
    CHECK_THROWS_AS(SeifertMatrix({{Int(1)}}), ValidationError);  // odd dimension
    CHECK_THROWS_AS(SeifertMatrix({{Int(0), Int(0)}, {Int(0), Int(0)}}), ValidationError);
    CHECK_THROWS_AS(SeifertMatrix({{Int(1), Int(2)}, {Int(0), Int(1)}}), ValidationError);
    CHECK_NOTHROW(SeifertMatrix({{Int(-1), Int(1)}, {Int(0), Int(-1)}}));
}

TEST_CASE("alexander polynomial matches frozen values and the symbolic oracle") {
    KnotCatalog cat;

    Laurent unknot = alexander_polynomial(cat.lookup("unknot"));
    CHECK(unknot == Laurent(Int(1)));

    Laurent trefoil = alexander_polynomial(cat.lookup("trefoil"));
    Laurent expected_trefoil;  // t - 1 + t^-1
    expected_trefoil.set_coeff(1, Int(1));
    expected_trefoil.set_coeff(0, Int(-1));
    expected_trefoil.set_coeff(-1, Int(1));
    CHECK(trefoil == expected_trefoil);

    Laurent fig8 = alexander_polynomial(cat.lookup("figure_eight"));
    Laurent expected_fig8;  // -t + 3 - t^-1
    expected_fig8.set_coeff(1, Int(-1));
    expected_fig8.set_coeff(0, Int(3));
    expected_fig8.set_coeff(-1, Int(-1));
    CHECK(fig8 == expected_fig8);

    for (auto& [label, v] : cat.table()) {
        CAPTURE(label);
        CHECK(to_oracle(alexander_polynomial(v)) == oracle_alexander(to_ll(v)));
    }
}

TEST_CASE("alexander polynomial is symmetric with delta(1) = 1") {
    KnotCatalog cat;
    for (auto& [label, v] : cat.table()) {
        CAPTURE(label);
        Laurent d = alexander_polynomial(v);
        CHECK(d == d.reciprocal());
        CHECK(d.evaluate_at_one() == 1);
    }
    for (long k = 4; k <= 7; ++k) {
        Laurent d = alexander_polynomial(torus_knot_2_seifert(k));
        CHECK(d == d.reciprocal());
        CHECK(d.evaluate_at_one() == 1);
    }
}

TEST_CASE("second derivative at 1") {
    KnotCatalog cat;
    CHECK(alexander_second_derivative_at_1(cat.lookup("unknot")) == 0);
    CHECK(alexander_second_derivative_at_1(cat.lookup("trefoil")) == 2);
    CHECK(alexander_second_derivative_at_1(cat.lookup("figure_eight")) == -2);
    for (auto& [label, v] : cat.table()) {
        CAPTURE(label);
        CHECK(alexander_second_derivative_at_1(v) ==
              oracle_ddelta1(oracle_alexander(to_ll(v))));
    }
}

TEST_CASE("tristram-levine signatures: frozen examples") {
    KnotCatalog cat;
    CHECK(tristram_levine_signature(cat.lookup("unknot"), 1, 2) == 0);
    CHECK(tristram_levine_signature(cat.lookup("unknot"), 3, 7) == 0);
    // 2(V + V^T) = [[-4, 2], [2, -4]], eigenvalues -2 and -6
    CHECK(tristram_levine_signature(cat.lookup("trefoil"), 1, 2) == -2);
    // det = 6 > 0 with negative trace at the primitive cube root
    CHECK(tristram_levine_signature(cat.lookup("trefoil"), 1, 3) == -2);
    CHECK(tristram_levine_signature(cat.lookup("figure_eight"), 1, 2) == 0);
    CHECK(tristram_levine_signature(cat.lookup("t2_5"), 1, 2) == -4);
}

TEST_CASE("tristram-levine signature raises SingularForm at Alexander roots") {
    KnotCatalog cat;
    CHECK_THROWS_AS(tristram_levine_signature(cat.lookup("trefoil"), 1, 6), SingularForm);
    CHECK_THROWS_AS(tristram_levine_signature(cat.lookup("trefoil"), 5, 6), SingularForm);
    CHECK_THROWS_AS(tristram_levine_signature(cat.lookup("trefoil"), 2, 12), SingularForm);
    CHECK_NOTHROW(tristram_levine_signature(cat.lookup("trefoil"), 1, 12));
}

TEST_CASE("tristram-levine signature parameter validation") {
    KnotCatalog cat;
    CHECK_THROWS_AS(tristram_levine_signature(cat.lookup("trefoil"), 0, 5), InvalidParams);
    CHECK_THROWS_AS(tristram_levine_signature(cat.lookup("trefoil"), 5, 5), InvalidParams);
    CHECK_THROWS_AS(tristram_levine_signature(cat.lookup("trefoil"), 1, 1), InvalidParams);
}

TEST_CASE("signatures are even, conjugation-symmetric, and match the float oracle") {
    KnotCatalog cat;
    for (auto& [label, v] : cat.table()) {
        for (long n = 2; n <= 9; ++n)
            for (long m = 1; m <= n - 1; ++m) {
                CAPTURE(label); CAPTURE(m); CAPTURE(n);
                int s;
                try {
                    s = tristram_levine_signature(v, m, n);
                } catch (const SingularForm&) {
                    // conjugate parameter must be singular too
                    CHECK_THROWS_AS(tristram_levine_signature(v, n - m, n), SingularForm);
                    continue;
                }
                CHECK(s % 2 == 0);
                CHECK(s == tristram_levine_signature(v, n - m, n));
                int fs = float_signature(v, m, n);
                if (fs != 9999) CHECK(s == fs);
            }
    }
}

TEST_CASE("branched cover homology orders") {
    KnotCatalog cat;
    CHECK(branched_cover_h1_order(cat.lookup("unknot"), 5) == Int(1));
    CHECK(branched_cover_h1_order(cat.lookup("trefoil"), 2) == Int(3));
    CHECK(branched_cover_h1_order(cat.lookup("figure_eight"), 2) == Int(5));
    CHECK_FALSE(branched_cover_h1_order(cat.lookup("trefoil"), 6).has_value());
    CHECK(is_qhs_branched_cover(cat.lookup("trefoil"), 2));
    CHECK_FALSE(is_qhs_branched_cover(cat.lookup("trefoil"), 6));
    CHECK(is_qhs_branched_cover(cat.lookup("unknot"), 11));
}

TEST_CASE("cover order cross-checks against the floating-point product") {
    KnotCatalog cat;
    for (auto& [label, v] : cat.table()) {
        Laurent d = alexander_polynomial(v);
        for (long n = 2; n <= 12; ++n) {
            CAPTURE(label); CAPTURE(n);
            auto order = branched_cover_h1_order(v, n);
            double prod = 1.0;
            bool vanished = false;
            for (long m = 1; m <= n - 1; ++m) {
                std::complex<double> w = std::polar(1.0, 2.0 * M_PI * double(m) / double(n));
                std::complex<double> val = 0;
                for (auto& [k, c] : d.coeffs())
                    val += double(static_cast<long long>(c)) * std::pow(w, double(k));
                if (std::abs(val) < 1e-9) vanished = true;
                prod *= std::abs(val);
            }
            if (!order.has_value()) {
                CHECK(vanished);
            } else {
                double exact = static_cast<double>(*order);
                CHECK(std::abs(exact - prod) <= 1e-6 * std::max(1.0, std::abs(exact)));
            }
        }
    }
}

TEST_CASE("connected sums: delta multiplies, ddelta adds, signatures add") {
    KnotCatalog cat;
    Rng rng(20260810);
    std::vector<std::string> labels;
    for (auto& [label, v] : cat.table()) labels.push_back(label);
    for (int iter = 0; iter < 12; ++iter) {
        const auto& a = cat.lookup(labels[rng.below(labels.size())]);
        const auto& b = cat.lookup(labels[rng.below(labels.size())]);
        SeifertMatrix sum = a.block_sum(b);
        CHECK(alexander_polynomial(sum) == alexander_polynomial(a) * alexander_polynomial(b));
        CHECK(alexander_second_derivative_at_1(sum) ==
              alexander_second_derivative_at_1(a) + alexander_second_derivative_at_1(b));
        long m = rng.range(1, 4), n = rng.range(5, 9);
        try {
            int ssum = tristram_levine_signature(sum, m, n);
            CHECK(ssum == tristram_levine_signature(a, m, n) + tristram_levine_signature(b, m, n));
        } catch (const SingularForm&) {
            // one factor is singular at this root; skip
        }
    }
}

TEST_CASE("knot catalog json loading validates entries") {
    KnotCatalog cat;
    cat.load_json_text(R"([{"label": "custom", "seifert": [[-1, 1], [0, -1]]}])");
    CHECK(cat.contains("custom"));
    CHECK(alexander_second_derivative_at_1(cat.lookup("custom")) == 2);
    CHECK_THROWS_AS(cat.load_json_text(R"([{"label": "bad", "seifert": [[1]]}])"),
                    ValidationError);
    CHECK_THROWS_AS(cat.load_json_text("not json"), ValidationError);
    CHECK_THROWS_AS(cat.lookup("missing"), UnknownKnot);
}
