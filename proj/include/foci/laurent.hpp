#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foci/rat.hpp"

namespace foci {

// Integer-coefficient Laurent polynomial in one variable.  No zero
// coefficients are stored; the zero polynomial has an empty map.
class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const Int& c) {
        if (c != 0) coeffs_[0] = c;
    }
    static Laurent monomial(const Int& c, long k) {
        Laurent p;
        if (c != 0) p.coeffs_[k] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Int>& coeffs() const { return coeffs_; }
    Int coeff(long k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Int(0) : it->second;
    }
    long min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    long max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    void set_coeff(long k, const Int& c) {
        if (c == 0)
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }

    // substitution t -> t^-1
    Laurent reciprocal() const;
    // multiply by t^k
    Laurent shifted(long k) const;

    Int evaluate_at_one() const;
    // formal d/dt, a Laurent polynomial again
    Laurent derivative() const;

    bool is_symmetric() const { return *this == reciprocal(); }

    std::string str(const std::string& var = "t") const;

  private:
    std::map<long, Int> coeffs_;
};

// Ordinary integer polynomial by ascending coefficient vector; the exact
// kernel behind determinant interpolation and resultants.
using IntPoly = std::vector<Int>;

void ipoly_trim(IntPoly& p);
int ipoly_deg(const IntPoly& p);  // -1 for zero
IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
// exact division, throws if not divisible
IntPoly ipoly_divexact(const IntPoly& a, const IntPoly& b);
Int ipoly_eval(const IntPoly& p, const Int& x);

// Resultant of two integer polynomials via the Sylvester matrix and a
// fraction-free determinant.
Int resultant(const IntPoly& f, const IntPoly& g);

// det(u*V - V^T) as a polynomial in u, by evaluation at deg+1 integer points
// and exact Lagrange interpolation.
IntPoly char_det_poly(const std::vector<std::vector<Int>>& v);

}  // namespace foci
