#include "foci/pillowcase.hpp"

#include <algorithm>
#include <sstream>

#include "foci/errors.hpp"

namespace foci {

namespace {

Rat wrap_unit(const Rat& v) {
    // into (-1/2, 1/2]
    Rat u = v - Rat(rat_floor(v));  // [0, 1)
    if (u > Rat(1, 2)) u -= Rat(1);
    return u;
}

RVec3 wrap3(const RVec3& v) { return {wrap_unit(v[0]), wrap_unit(v[1]), wrap_unit(v[2])}; }

RVec3 neg3(const RVec3& v) { return {-v[0], -v[1], -v[2]}; }

bool lex_less(const RVec3& a, const RVec3& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

std::string point_str(const RVec3& v) {
    std::ostringstream out;
    out << "(" << rat_str(v[0]) << ", " << rat_str(v[1]) << ", " << rat_str(v[2]) << ")";
    return out.str();
}

Rat dot_in(const IVec3& n, const RVec3& v) {
    return Rat(Int(n[0])) * v[0] + Rat(Int(n[1])) * v[1] + Rat(Int(n[2])) * v[2];
}

bool is_integral(const Rat& r) { return r.denominator() == 1; }

bool is_half_integral_triple(const RVec3& v) {
    for (int i = 0; i < 3; ++i)
        if (!is_integral(v[i] * Rat(2))) return false;
    return true;
}

}  // namespace

ChiPoint canonicalize(const RVec3& raw) {
    RVec3 a = wrap3(raw);
    RVec3 b = wrap3(neg3(raw));
    return ChiPoint{CubePoint{lex_less(a, b) ? b : a}};
}

std::vector<ChiPoint> central_classes() {
    std::vector<ChiPoint> out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                out.push_back(canonicalize({Rat(x, 2), Rat(y, 2), Rat(z, 2)}));
    return out;
}

PlaneImage::PlaneImage(RVec3 basepoint, IVec3 span1, IVec3 span2, IVec3 normal, std::string label)
    : basepoint_(std::move(basepoint)),
      span1_(span1),
      span2_(span2),
      normal_(normal),
      label_(std::move(label)) {
    if (ivec_cross(span1_, span2_) == IVec3{0, 0, 0})
        throw ValidationError("plane spanning vectors are linearly dependent");
    if (normal_ == IVec3{0, 0, 0}) throw ValidationError("plane normal must be nonzero");
    if (ivec_dot(normal_, span1_) != 0 || ivec_dot(normal_, span2_) != 0)
        throw ValidationError("plane normal must be orthogonal to both spanning vectors");
    long long g = ivec_gcd(normal_);
    prim_normal_ = {normal_[0] / g, normal_[1] / g, normal_[2] / g};
    offset_ = dot_in(prim_normal_, basepoint_);
}

bool PlaneImage::involution_closed() const { return is_integral(offset_ * Rat(2)); }

bool PlaneImage::contains(const ChiPoint& p) const {
    Rat v = dot_in(prim_normal_, p.canonical.c);
    if (is_integral(v - offset_)) return true;
    return is_integral(v + offset_);  // the mirrored sheet
}

PlaneImage plane_PN() {
    return PlaneImage({Rat(0), Rat(0), Rat(0)}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, "P_N");
}
PlaneImage plane_PM() {
    return PlaneImage({Rat(0), Rat(0), Rat(0)}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, "P_M");
}
PlaneImage plane_P0() {
    return PlaneImage({Rat(0), Rat(1, 2), Rat(0)}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, "P_0");
}
PlaneImage plane_P1() {
    return PlaneImage({Rat(0), Rat(0), Rat(0)}, {1, -1, 0}, {0, 0, 1}, {1, 1, 0}, "P_1");
}

std::vector<ChiPoint> pillowcase_singular_points(const PlaneImage& plane) {
    const IVec3& n = plane.prim_normal();
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
        if (n[i] != 0) ++nonzero;
    if (nonzero != 1)
        throw NotInvariant("plane '" + plane.label() +
                           "' is slanted; its quotient is a cylinder, not a pillowcase");
    Rat off = plane.offset() - Rat(rat_floor(plane.offset()));
    if (off != Rat(0) && off != Rat(1, 2))
        throw NotInvariant("plane '" + plane.label() +
                           "' has offset " + rat_str(plane.offset()) +
                           "; its quotient is a torus, not a pillowcase");
    std::vector<ChiPoint> out;
    for (const auto& p : central_classes())
        if (plane.contains(p)) out.push_back(p);
    if (out.size() != 4)
        throw ValidationError("internal: pillowcase quotient should carry 4 central classes");
    return out;
}

namespace {

IMat3 inverse_transpose(const GluingMatrix& a) { return a.mat().unimodular_inverse().transpose(); }

RVec3 mat_apply(const IMat3& m, const RVec3& v) {
    RVec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = Rat(Int(m.m[i][0])) * v[0] + Rat(Int(m.m[i][1])) * v[1] + Rat(Int(m.m[i][2])) * v[2];
    return r;
}

}  // namespace

ChiPoint apply_gluing(const GluingMatrix& a, const ChiPoint& pt) {
    return canonicalize(mat_apply(inverse_transpose(a), pt.canonical.c));
}

PlaneImage apply_gluing(const GluingMatrix& a, const PlaneImage& s) {
    IMat3 t = inverse_transpose(a);
    return PlaneImage(mat_apply(t, s.basepoint()), t.apply(s.span1()), t.apply(s.span2()),
                      a.mat().apply(s.normal()), s.label() + "'");
}

bool plane_sets_equal(const PlaneImage& a, const PlaneImage& b) {
    IVec3 na = a.prim_normal(), nb = b.prim_normal();
    Rat ha = a.offset(), hb = b.offset();
    // orient both primitive normals the same way
    auto orient = [](IVec3& n, Rat& h) {
        for (int i = 0; i < 3; ++i) {
            if (n[i] == 0) continue;
            if (n[i] < 0) {
                n = {-n[0], -n[1], -n[2]};
                h = -h;
            }
            break;
        }
    };
    orient(na, ha);
    orient(nb, hb);
    if (na != nb) return false;
    auto frac = [](const Rat& r) { return r - Rat(rat_floor(r)); };
    Rat fa = frac(ha), fb = frac(hb);
    return fa == fb || frac(fa + fb) == Rat(0);  // mirrored sheets identified
}

void validate_curve(const PLCurve& c) {
    if (c.vertices.size() < 2) throw InvalidParams("curve needs at least two vertices");
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i)
        if (c.vertices[i] == c.vertices[i + 1])
            throw InvalidParams("consecutive curve vertices must be distinct");
    if (c.closed) {
        for (int i = 0; i < 3; ++i)
            if (!is_integral(c.vertices.front()[i] - c.vertices.back()[i]))
                throw InvalidParams("closed curve lift must end at a Z^3 translate of its start");
    }
}

bool touches_central_class(const PLCurve& c) {
    validate_curve(c);
    for (const auto& v : c.vertices)
        if (is_half_integral_triple(v)) return true;
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        const RVec3& a = c.vertices[i];
        const RVec3& b = c.vertices[i + 1];
        RVec3 d{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        // candidate parameters where 2(a + t d) hits Z^3
        int pivot = -1;
        for (int k = 0; k < 3; ++k) {
            if (d[k] != 0) {
                if (pivot < 0 || abs(d[k]) < abs(d[pivot])) pivot = k;
            } else if (!is_integral(a[k] * Rat(2))) {
                pivot = -2;  // this coordinate never becomes half-integral
                break;
            }
        }
        if (pivot == -2) continue;
        if (pivot < 0) continue;  // unreachable: consecutive vertices distinct
        Rat lo = a[pivot] * Rat(2), hi = lo + d[pivot] * Rat(2);
        if (lo > hi) std::swap(lo, hi);
        if (hi - lo > Rat(10000))
            throw InvalidParams("curve segment too long for the branch-point scan");
        for (Int m = rat_floor(lo); Rat(m) <= hi; ++m) {
            if (Rat(m) < lo) continue;
            Rat t = (Rat(m) - a[pivot] * Rat(2)) / (d[pivot] * Rat(2));
            if (t < Rat(0) || t > Rat(1)) continue;
            bool all = true;
            for (int k = 0; k < 3; ++k)
                if (!is_integral((a[k] + t * d[k]) * Rat(2))) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    }
    return false;
}

namespace {

// signed crossings of one polygonal lift with the family
// { x : <n, x> in offset + Z }
long count_lift(const std::vector<RVec3>& vertices, bool closed, const IVec3& n, const Rat& h,
                const std::string& plane_label) {
    long total = 0;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        const RVec3& a = vertices[i];
        const RVec3& b = vertices[i + 1];
        Rat alpha = dot_in(n, a), beta = dot_in(n, b);
        if (is_integral(alpha - h))
            throw NonTransverse("curve vertex lies on plane " + plane_label, point_str(a));
        if (is_integral(beta - h))
            throw NonTransverse("curve vertex lies on plane " + plane_label, point_str(b));
        if (alpha == beta) continue;  // parallel segment off the family
        Rat lo = alpha, hi = beta;
        int dir = 1;
        if (lo > hi) {
            std::swap(lo, hi);
            dir = -1;
        }
        for (Int k = rat_floor(lo - h) + 1; Rat(k) + h < hi; ++k) {
            Rat o = Rat(k) + h;
            if (o <= lo) continue;
            Rat t = (o - alpha) / (beta - alpha);
            RVec3 p{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
            if (is_half_integral_triple(p))
                throw NonTransverse("crossing with plane " + plane_label + " at a branch point",
                                    point_str(p));
            total += dir;
        }
    }
    (void)closed;
    return total;
}

}  // namespace

long signed_intersection_count(const PLCurve& c, const PlaneImage& s) {
    validate_curve(c);
    long total = count_lift(c.vertices, c.closed, s.prim_normal(), s.offset(), s.label());
    if (!s.involution_closed()) {
        // the mirrored lift meets the other sheet of the quotient plane
        std::vector<RVec3> mirrored;
        mirrored.reserve(c.vertices.size());
        for (const auto& v : c.vertices) mirrored.push_back(neg3(v));
        total += count_lift(mirrored, c.closed, s.prim_normal(), s.offset(), s.label());
    }
    return total;
}

CountReport surgery_count_identity(const PLCurve& c) {
    validate_curve(c);
    if (!c.closed) throw InvalidParams("the counting identity applies to closed curves");
    if (touches_central_class(c))
        throw NonTransverse("curve passes through a central class", "see curve vertices");
    CountReport rep;
    rep.count_p1 = signed_intersection_count(c, plane_P1());
    rep.count_pn = signed_intersection_count(c, plane_PN());
    rep.count_p0 = signed_intersection_count(c, plane_P0());
    rep.identity_holds = (rep.count_p1 - rep.count_pn) == rep.count_p0;
    rep.boundary_sum = -rep.count_p1 + rep.count_pn + rep.count_p0;
    return rep;
}

}  // namespace foci
