#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace foci {

// su(2) is modeled as R^3: the bracket is the cross product and the invariant
// inner product is the dot product (one fixed normalization scale).
struct Vec3d {
    double x = 0, y = 0, z = 0;

    Vec3d operator+(const Vec3d& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3d operator-(const Vec3d& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3d operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3d operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

// State of the reduced Chern-Simons flow: a harmonic-frame coefficient triple
// in H^1(T^3) (x) su(2).
struct SuTriple {
    Vec3d x1, x2, x3;

    SuTriple operator+(const SuTriple& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    SuTriple operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
};

inline double triple_norm(const SuTriple& b) {
    return std::sqrt(dot(b.x1, b.x1) + dot(b.x2, b.x2) + dot(b.x3, b.x3));
}

struct FlowParams {
    double step = 1e-3;
    double t_max = 100.0;
    double truncation_radius = 50.0;
    int sign_convention = +1;  // calibrated so the orthonormal frame contracts
};

void validate_params(const FlowParams& p);

// Obstruction 2-form coefficients indexed by (e1^e2, e2^e3, e3^e1):
// ([X1,X2], [X2,X3], [X3,X1]).  Zero exactly on commuting (pairwise parallel)
// triples.
SuTriple kuranishi_map(const SuTriple& b);

// Reduced Chern-Simons value: sign * <X1, [X2, X3]>.
double chern_simons_value(const SuTriple& b, int sign_convention = +1);

// Gradient of the value above: sign * ([X2,X3], [X3,X1], [X1,X2]).
SuTriple gradient(const SuTriple& b, int sign_convention = +1);

enum class FlowClass { converges_to_zero, converges_to_commuting, truncated, exhausted };
const char* flow_class_name(FlowClass c);

struct FlowSample {
    double t = 0;
    SuTriple b;
};

struct Trajectory {
    FlowClass classification = FlowClass::exhausted;
    double end_time = 0;
    SuTriple end_state;
    std::vector<FlowSample> samples;
    // max drift of the five conserved quantities against their initial values
    double conserved_drift = 0;
    // max per-step increase of the Chern-Simons value (should be <= 0 up to
    // integrator error)
    double cs_max_increase = 0;
};

// Downward gradient flow db/dt = -gradient(b), fixed-step classical
// Runge-Kutta with per-step truncation check.  `max_samples` trajectory
// samples are kept, evenly spaced in step index.
Trajectory flow(const SuTriple& b0, const FlowParams& p, size_t max_samples = 33);

// Stable set of the origin: pairwise equal norms, pairwise orthogonality,
// and the sign condition sign * <X1,[X2,X3]> >= -tol.
bool stable_set_membership(const SuTriple& b, double tol, int sign_convention = +1);

// (|X1|^2-|X2|^2, |X2|^2-|X3|^2, <X1,X2>, <X1,X3>, <X2,X3>, cs value); the
// first five are first integrals of the flow, the last is non-increasing.
std::array<double, 6> conserved_quantities(const SuTriple& b, int sign_convention = +1);

}  // namespace foci
