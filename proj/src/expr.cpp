#include "foci/expr.hpp"

#include <numeric>
#include <sstream>

#include "foci/errors.hpp"

namespace foci {

ThreePtr make_s3() { return std::make_shared<const ThreeManifold>(ThreeManifold{S3Node{}}); }

ThreePtr make_named_sphere(const std::string& label, const Int& casson) {
    if (label.empty()) throw ValidationError("named sphere needs a label");
    return std::make_shared<const ThreeManifold>(ThreeManifold{NamedSphereNode{label, casson}});
}

KnotInSphere make_knot(ThreePtr ambient, SeifertMatrix seifert, std::string label) {
    if (!ambient) throw ValidationError("knot needs an ambient manifold");
    if (!is_homology_sphere(ambient))
        throw NotAHomologySphere("knot ambient '" + describe(ambient) +
                                 "' is not an integral homology sphere");
    return KnotInSphere{std::move(ambient), std::move(seifert), std::move(label)};
}

ThreePtr make_surgery_1q(ThreePtr base, KnotInSphere knot, long q) {
    if (!base || !is_homology_sphere(base))
        throw NotAHomologySphere("1/q-surgery base must be a homology sphere");
    if (!expr_equal(base, knot.ambient))
        throw ValidationError("1/q-surgery base differs from the knot's ambient manifold");
    return std::make_shared<const ThreeManifold>(
        ThreeManifold{SurgeryOneOverQNode{std::move(base), std::move(knot), q}});
}

ThreePtr make_splice(KnotInSphere k1, KnotInSphere k2) {
    return std::make_shared<const ThreeManifold>(
        ThreeManifold{SpliceNode{std::move(k1), std::move(k2)}});
}

ThreePtr make_zero_surgery(KnotInSphere knot) {
    return std::make_shared<const ThreeManifold>(ThreeManifold{ZeroSurgeryNode{std::move(knot)}});
}

bool is_homology_sphere(const ThreePtr& y) {
    return !std::holds_alternative<ZeroSurgeryNode>(y->node);
}

static bool knot_equal(const KnotInSphere& a, const KnotInSphere& b) {
    return a.label == b.label && a.seifert == b.seifert && expr_equal(a.ambient, b.ambient);
}

bool expr_equal(const ThreePtr& a, const ThreePtr& b) {
    if (a.get() == b.get()) return true;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, S3Node>) {
                return true;
            } else if constexpr (std::is_same_v<T, NamedSphereNode>) {
                return na.label == nb.label && na.casson == nb.casson;
            } else if constexpr (std::is_same_v<T, SurgeryOneOverQNode>) {
                return na.q == nb.q && expr_equal(na.base, nb.base) && knot_equal(na.knot, nb.knot);
            } else if constexpr (std::is_same_v<T, SpliceNode>) {
                return knot_equal(na.k1, nb.k1) && knot_equal(na.k2, nb.k2);
            } else {
                return knot_equal(na.knot, std::get<ZeroSurgeryNode>(b->node).knot);
            }
        },
        a->node);
}

std::string describe(const ThreePtr& y) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, S3Node>) {
                return "S3";
            } else if constexpr (std::is_same_v<T, NamedSphereNode>) {
                return n.label;
            } else if constexpr (std::is_same_v<T, SurgeryOneOverQNode>) {
                return "1/" + std::to_string(n.q) + "-surgery on " + n.knot.label + " in " +
                       describe(n.base);
            } else if constexpr (std::is_same_v<T, SpliceNode>) {
                return "splice(" + n.k1.label + " in " + describe(n.k1.ambient) + ", " +
                       n.k2.label + " in " + describe(n.k2.ambient) + ")";
            } else {
                return "0-surgery on " + n.knot.label + " in " + describe(n.knot.ambient);
            }
        },
        y->node);
}

std::string describe(const TorusDesc& t) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, MappingTorusOfBranchLocus>) {
                return "mapping torus of the branch locus";
            } else if constexpr (std::is_same_v<T, ProductTorus>) {
                return "S1 x " + n.knot.label;
            } else if constexpr (std::is_same_v<T, SurgeryCore>) {
                return "core torus of the previous surgery";
            } else {
                return "abstract torus '" + n.label + "'";
            }
        },
        t.node);
}

GluingMatrix::GluingMatrix(const IMat3& m) : m_(m) {
    long long d = m_.det();
    if (d != 1 && d != -1)
        throw NonUnimodular("gluing matrix determinant must be +-1, got " + std::to_string(d));
    if (m_.m[0][2] != 0 || m_.m[1][2] != 0 || m_.m[2][2] != 1)
        throw ValidationError("gluing matrix is not framing-normalized: third column must be (0,0,1)");
}

std::string GluingMatrix::str() const {
    std::ostringstream out;
    out << "[[" << m_.m[0][0] << "," << m_.m[0][1] << "," << m_.m[0][2] << "],[" << m_.m[1][0]
        << "," << m_.m[1][1] << "," << m_.m[1][2] << "],[" << m_.m[2][0] << "," << m_.m[2][1]
        << "," << m_.m[2][2] << "]]";
    return out.str();
}

GluingMatrix surgery_matrix(long long p, long long q, long long r, long long s) {
    IMat3 m;
    m.m = {{{p, r, 0}, {q, s, 0}, {0, 0, 1}}};
    return GluingMatrix(m);
}

GluingMatrix fiber_sum_matrix() {
    IMat3 m;
    m.m = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
    return GluingMatrix(m);
}

GluingMatrix dehn_twist_matrix(long long p, long long q) {
    IMat3 m;
    m.m = {{{0, 1, 0}, {1, 0, 0}, {-p, -q, 1}}};
    return GluingMatrix(m);
}

FourPtr make_product(ThreePtr y) {
    if (!y) throw ValidationError("product needs a 3-manifold");
    return std::make_shared<const FourManifold>(FourManifold{ProductNode{std::move(y)}});
}

FourPtr make_mapping_torus(long n, KnotInSphere knot) {
    if (n < 2) throw ValidationError("mapping torus requires n > 1");
    return std::make_shared<const FourManifold>(FourManifold{MappingTorusNode{n, std::move(knot)}});
}

FourPtr make_torus_surgery(FourPtr base, TorusDesc torus, long p, long q) {
    if (!base) throw ValidationError("torus surgery needs a base manifold");
    if (p != 0 && p != 1)
        throw ValidationError("only (1,q)- and (0,1)-torus surgeries are supported");
    if (std::gcd(p, q) != 1) throw ValidationError("torus surgery requires gcd(p, q) = 1");
    // a torus descriptor must match the shape of the base it sits in
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, ProductTorus>) {
                const auto* prod = std::get_if<ProductNode>(&base->node);
                if (!prod || !expr_equal(prod->y, t.knot.ambient))
                    throw ValidationError("product torus S1 x " + t.knot.label +
                                          " does not live in " + describe(base));
            } else if constexpr (std::is_same_v<T, MappingTorusOfBranchLocus>) {
                if (!std::holds_alternative<MappingTorusNode>(base->node))
                    throw ValidationError("branch-locus torus requires a mapping-torus base");
            } else if constexpr (std::is_same_v<T, SurgeryCore>) {
                if (!std::holds_alternative<TorusSurgeryNode>(base->node))
                    throw ValidationError("surgery-core torus requires a surgered base");
            }
        },
        torus.node);
    return std::make_shared<const FourManifold>(
        FourManifold{TorusSurgeryNode{std::move(base), std::move(torus), p, q}});
}

FourPtr make_fiber_sum(FourPtr a, TorusDesc ta, FourPtr b, TorusDesc tb) {
    if (!a || !b) throw ValidationError("fiber sum needs two summands");
    return std::make_shared<const FourManifold>(
        FourManifold{FiberSumNode{std::move(a), std::move(ta), std::move(b), std::move(tb)}});
}

FourPtr make_excision(FourPtr a, TorusDesc ta, FourPtr b, TorusDesc tb, GluingMatrix glue) {
    if (!a || !b) throw ValidationError("excision needs two pieces");
    if (glue.det() != -1)
        throw ValidationError(
            "excision gluing must reverse orientation (determinant -1), got matrix " + glue.str());
    return std::make_shared<const FourManifold>(FourManifold{
        ExcisionNode{std::move(a), std::move(ta), std::move(b), std::move(tb), std::move(glue)}});
}

std::string describe(const FourPtr& x) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProductNode>) {
                return "S1 x (" + describe(n.y) + ")";
            } else if constexpr (std::is_same_v<T, MappingTorusNode>) {
                return "mapping torus X_" + std::to_string(n.n) + "(" + describe(n.knot.ambient) +
                       ", " + n.knot.label + ")";
            } else if constexpr (std::is_same_v<T, TorusSurgeryNode>) {
                return "(" + std::to_string(n.p) + "," + std::to_string(n.q) + ")-surgery of " +
                       describe(n.base) + " along " + describe(n.torus);
            } else if constexpr (std::is_same_v<T, FiberSumNode>) {
                return "fiber sum of " + describe(n.a) + " and " + describe(n.b);
            } else {
                return "excision gluing " + describe(n.a) + " to " + describe(n.b) + " by " +
                       n.glue.str();
            }
        },
        x->node);
}

}  // namespace foci
