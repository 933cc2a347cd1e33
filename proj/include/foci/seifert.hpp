#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foci/laurent.hpp"
#include "foci/rat.hpp"

namespace foci {

// Integer Seifert matrix of a genus-g knot: square of even dimension 2g with
// det(V - V^T) = +-1.  Size 0 encodes the unknot.  Immutable after
// construction; construction enforces the invariants.
class SeifertMatrix {
  public:
    SeifertMatrix() = default;  // unknot
    explicit SeifertMatrix(std::vector<std::vector<Int>> entries);

    size_t dim() const { return entries_.size(); }
    size_t genus() const { return entries_.size() / 2; }
    const std::vector<std::vector<Int>>& entries() const { return entries_; }

    // block-diagonal sum, the Seifert matrix of a connected sum
    SeifertMatrix block_sum(const SeifertMatrix& other) const;

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
        return a.entries_ == b.entries_;
    }

  private:
    std::vector<std::vector<Int>> entries_;
};

// Symmetrized Alexander polynomial, Conway-normalized so that
// delta(t) = delta(1/t) and delta(1) = 1.
Laurent alexander_polynomial(const SeifertMatrix& v);

// Exact integer delta''(1), by formal differentiation.
Int alexander_second_derivative_at_1(const SeifertMatrix& v);

// Tristram-Levine signature: signature of (1-w)V + (1-conj(w))V^T at
// w = e^{2*pi*i*m/n}.  Requires n >= 2 and 1 <= m <= n-1; throws SingularForm
// when w is a unit root of the Alexander polynomial.
int tristram_levine_signature(const SeifertMatrix& v, long m, long n);

// Order of H_1 of the n-fold cyclic branched cover; nullopt means infinite.
// Computed exactly as |Res(delta, (t^n - 1)/(t - 1))|.
std::optional<Int> branched_cover_h1_order(const SeifertMatrix& v, long n);

bool is_qhs_branched_cover(const SeifertMatrix& v, long n);

}  // namespace foci
