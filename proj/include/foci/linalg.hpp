#pragma once

#include <array>
#include <numeric>
#include <vector>

#include "foci/errors.hpp"
#include "foci/rat.hpp"

namespace foci {

// Integer 3-vectors and 3x3 matrices: gluing matrices act on the ordered
// homology basis (mu, lambda, gamma); the same arithmetic serves the
// pillowcase coordinate transforms.
using IVec3 = std::array<long long, 3>;

struct IMat3 {
    // m[r][c]; columns are images of basis vectors
    std::array<std::array<long long, 3>, 3> m{};

    static IMat3 identity() {
        IMat3 a;
        for (int i = 0; i < 3; ++i) a.m[i][i] = 1;
        return a;
    }

    long long det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    IMat3 transpose() const {
        IMat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
        return t;
    }

    // adjugate / det, valid only when det = +-1 (entries stay integral)
    IMat3 unimodular_inverse() const {
        long long d = det();
        if (d != 1 && d != -1) throw NonUnimodular("matrix determinant is not +-1");
        IMat3 adj;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                long long a = m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3] -
                              m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3];
                adj.m[i][j] = d * a;
            }
        return adj;
    }

    IVec3 apply(const IVec3& v) const {
        IVec3 r{};
        for (int i = 0; i < 3; ++i)
            r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
        return r;
    }

    friend IMat3 operator*(const IMat3& a, const IMat3& b) {
        IMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                long long s = 0;
                for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    friend bool operator==(const IMat3& a, const IMat3& b) { return a.m == b.m; }
};

inline long long ivec_gcd(const IVec3& v) {
    long long g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

inline long long ivec_dot(const IVec3& a, const IVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline IVec3 ivec_cross(const IVec3& a, const IVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Fraction-free (Bareiss) determinant of a dense integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> a);

}  // namespace foci
