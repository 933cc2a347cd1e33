#pragma once

#include <memory>
#include <string>
#include <variant>

#include "foci/linalg.hpp"
#include "foci/rat.hpp"
#include "foci/seifert.hpp"

namespace foci {

struct ThreeManifold;
using ThreePtr = std::shared_ptr<const ThreeManifold>;

// A knot presented by its Seifert matrix inside an integral homology sphere.
struct KnotInSphere {
    ThreePtr ambient;
    SeifertMatrix seifert;
    std::string label;
};

struct S3Node {};
struct NamedSphereNode {
    std::string label;
    Int casson;  // Casson invariants are integers; enforced at construction
};
struct SurgeryOneOverQNode {
    ThreePtr base;
    KnotInSphere knot;  // ambient must equal base
    long q = 0;
};
struct SpliceNode {
    KnotInSphere k1, k2;
};
// Homology S^1 x S^2; legal only inside Product for D^0 evaluation.
struct ZeroSurgeryNode {
    KnotInSphere knot;
};

struct ThreeManifold {
    std::variant<S3Node, NamedSphereNode, SurgeryOneOverQNode, SpliceNode, ZeroSurgeryNode> node;
};

ThreePtr make_s3();
ThreePtr make_named_sphere(const std::string& label, const Int& casson);
ThreePtr make_surgery_1q(ThreePtr base, KnotInSphere knot, long q);
ThreePtr make_splice(KnotInSphere k1, KnotInSphere k2);
ThreePtr make_zero_surgery(KnotInSphere knot);

KnotInSphere make_knot(ThreePtr ambient, SeifertMatrix seifert, std::string label);

bool is_homology_sphere(const ThreePtr& y);  // false exactly for zero surgeries
bool expr_equal(const ThreePtr& a, const ThreePtr& b);
std::string describe(const ThreePtr& y);

// Essential torus along which a 4-manifold is cut.
struct MappingTorusOfBranchLocus {};
struct ProductTorus {
    KnotInSphere knot;
};
struct SurgeryCore {};
struct AbstractTorus {
    std::string label;
};

struct TorusDesc {
    std::variant<MappingTorusOfBranchLocus, ProductTorus, SurgeryCore, AbstractTorus> node;
};

std::string describe(const TorusDesc& t);

// Gluing map between torus-complement boundaries, written in the ordered
// basis (mu, lambda, gamma) and framing-normalized: third column (0,0,1)^T,
// determinant -1 (boundary identification) or +1 (coordinate change).
class GluingMatrix {
  public:
    explicit GluingMatrix(const IMat3& m);

    const IMat3& mat() const { return m_; }
    long long det() const { return m_.det(); }
    // entries in the normalized form [[a,b,0],[c,d,0],[p,q,1]]
    long long a() const { return m_.m[0][0]; }
    long long b() const { return m_.m[0][1]; }
    long long c() const { return m_.m[1][0]; }
    long long d() const { return m_.m[1][1]; }
    long long p() const { return m_.m[2][0]; }
    long long q() const { return m_.m[2][1]; }

    std::string str() const;

  private:
    IMat3 m_;
};

// standard gluing matrices
GluingMatrix surgery_matrix(long long p, long long q, long long r, long long s);  // phi_{p,q}
GluingMatrix fiber_sum_matrix();                                                  // mu <-> lambda swap
GluingMatrix dehn_twist_matrix(long long p, long long q);                         // section-7 example

struct FourManifold;
using FourPtr = std::shared_ptr<const FourManifold>;

struct ProductNode {
    ThreePtr y;
};
struct MappingTorusNode {
    long n = 0;
    KnotInSphere knot;
};
struct TorusSurgeryNode {
    FourPtr base;
    TorusDesc torus;
    long p = 0, q = 0;  // gcd(p,q) = 1; p in {0,1}
};
struct FiberSumNode {
    FourPtr a;
    TorusDesc ta;
    FourPtr b;
    TorusDesc tb;
};
struct ExcisionNode {
    FourPtr a;
    TorusDesc ta;
    FourPtr b;
    TorusDesc tb;
    GluingMatrix glue;  // det must be -1
};

struct FourManifold {
    std::variant<ProductNode, MappingTorusNode, TorusSurgeryNode, FiberSumNode, ExcisionNode> node;
};

FourPtr make_product(ThreePtr y);
FourPtr make_mapping_torus(long n, KnotInSphere knot);
FourPtr make_torus_surgery(FourPtr base, TorusDesc torus, long p, long q);
FourPtr make_fiber_sum(FourPtr a, TorusDesc ta, FourPtr b, TorusDesc tb);
FourPtr make_excision(FourPtr a, TorusDesc ta, FourPtr b, TorusDesc tb, GluingMatrix glue);

std::string describe(const FourPtr& x);

}  // namespace foci
