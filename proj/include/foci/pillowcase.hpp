#pragma once

#include <array>
#include <string>
#include <vector>

#include "foci/expr.hpp"
#include "foci/linalg.hpp"
#include "foci/rat.hpp"

namespace foci {

// Holonomy-logarithm coordinates on the character variety of T^3: points of
// the fundamental cube modulo (x,y,z) ~ (-x,-y,-z), all arithmetic exact.
using RVec3 = std::array<Rat, 3>;

struct CubePoint {
    RVec3 c;  // each coordinate in (-1/2, 1/2]
    friend bool operator==(const CubePoint& a, const CubePoint& b) { return a.c == b.c; }
};

struct ChiPoint {
    CubePoint canonical;  // lexicographically larger of the two wrapped lifts
    friend bool operator==(const ChiPoint& a, const ChiPoint& b) {
        return a.canonical == b.canonical;
    }
};

// wraps mod 1 into (-1/2, 1/2] and picks the canonical representative
ChiPoint canonicalize(const RVec3& raw);

// the 8 gauge classes of central flat connections: coordinates in {0, 1/2}
std::vector<ChiPoint> central_classes();

// Affine plane with integer directions, together with all of its Z^3
// translates; the co-orienting normal fixes crossing signs.
class PlaneImage {
  public:
    PlaneImage(RVec3 basepoint, IVec3 span1, IVec3 span2, IVec3 normal, std::string label);

    const RVec3& basepoint() const { return basepoint_; }
    const IVec3& span1() const { return span1_; }
    const IVec3& span2() const { return span2_; }
    const IVec3& normal() const { return normal_; }
    const std::string& label() const { return label_; }

    // primitive normal (gcd 1, same orientation) and its offset: the plane
    // family is { x : <prim_normal, x> in offset + Z }
    const IVec3& prim_normal() const { return prim_normal_; }
    const Rat& offset() const { return offset_; }
    // true when the family is carried to itself by v -> -v
    bool involution_closed() const;

    bool contains(const ChiPoint& p) const;

  private:
    RVec3 basepoint_;
    IVec3 span1_, span2_, normal_;
    std::string label_;
    IVec3 prim_normal_;
    Rat offset_;
};

// the proof's distinguished planes
PlaneImage plane_PN();  // {x = 0},  normal +x
PlaneImage plane_PM();  // {y = 0},  normal +y
PlaneImage plane_P0();  // {y = 1/2}, normal +y
PlaneImage plane_P1();  // {x + y = 0}, normal (1,1,0)

// The 4 central classes on the plane's pillowcase quotient.  Throws
// NotInvariant when the quotient is not a pillowcase (slanted planes, or
// offsets other than 0 and 1/2).
std::vector<ChiPoint> pillowcase_singular_points(const PlaneImage& plane);

// Induced action on the character variety: classes transform by the
// inverse-transpose, normals by the matrix itself.
ChiPoint apply_gluing(const GluingMatrix& a, const ChiPoint& pt);
PlaneImage apply_gluing(const GluingMatrix& a, const PlaneImage& s);

// set equality of quotient plane families
bool plane_sets_equal(const PlaneImage& a, const PlaneImage& b);

// Piecewise-linear curve given by a continuous lift to R^3; straight segments
// between consecutive vertices.
struct PLCurve {
    std::vector<RVec3> vertices;
    bool closed = false;
};

void validate_curve(const PLCurve& c);
// true if some point of the curve has all coordinates in (1/2)Z, i.e. the
// curve touches a central class
bool touches_central_class(const PLCurve& c);

// Signed count of quotient crossings of the curve with the plane family.
// Signs are sign(<segment direction, normal>); the two involution lifts are
// identified so each quotient crossing counts once.  Throws NonTransverse on
// tangencies, vertices on planes, or crossings at branch points.
long signed_intersection_count(const PLCurve& c, const PlaneImage& s);

struct CountReport {
    long count_p1 = 0;
    long count_pn = 0;
    long count_p0 = 0;
    bool identity_holds = false;  // count_p1 - count_pn == count_p0
    long boundary_sum = 0;        // outward crossings of -P1, PN, P0; zero iff identity
};

// The surgery counting identity for a closed transverse curve.
CountReport surgery_count_identity(const PLCurve& c);

}  // namespace foci
