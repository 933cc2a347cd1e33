#pragma once

#include <vector>

#include "foci/laurent.hpp"
#include "foci/rat.hpp"

namespace foci {

// Element of Z[x]/(x^n - 1), used as exact arithmetic for Z[zeta_n].  The
// cyclic representation keeps multiplication and conjugation cheap; equality
// with zero in Z[zeta_n] is decided by reduction mod the n-th cyclotomic
// polynomial.
class CycInt {
  public:
    CycInt() : order_(1), c_(1, Int(0)) {}
    explicit CycInt(int order) : order_(order), c_(order, Int(0)) {}
    CycInt(int order, const Int& constant) : order_(order), c_(order, Int(0)) { c_[0] = constant; }

    static CycInt root_power(int order, long k);  // zeta^k

    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return c_; }

    CycInt operator-() const;
    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);

    CycInt conj() const;  // zeta -> zeta^-1

    // exact: true iff the element is 0 in Z[zeta_n]
    bool is_zero() const;
    // real elements have palindromic coefficients in the cyclic basis
    bool is_real() const;

    // Certified sign of a real element at the embedding zeta -> e^{2*pi*i*m/n}
    // with gcd(m, n) = 1: exact zero test, then floating evaluation with
    // escalating precision until the value clears a rigorous error bound.
    int sign_at(long m) const;

    std::string str() const;

  private:
    int order_;
    std::vector<Int> c_;  // c_[k] is the coefficient of zeta^k
};

// n-th cyclotomic polynomial, ascending integer coefficients (cached).
const IntPoly& cyclotomic_poly(int n);

// Signature (positives minus negatives) of a Hermitian matrix with entries in
// Z[zeta_n], evaluated at zeta -> e^{2*pi*i*m/n}.  Throws SingularForm when
// the form is degenerate.
int hermitian_signature(std::vector<std::vector<CycInt>> h, long m);

}  // namespace foci
