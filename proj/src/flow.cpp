#include "foci/flow.hpp"

#include <algorithm>
#include <cmath>

#include "foci/errors.hpp"

namespace foci {

void validate_params(const FlowParams& p) {
    if (!(p.step > 0) || !std::isfinite(p.step)) throw InvalidParams("flow step must be positive");
    if (!(p.t_max > 0) || !std::isfinite(p.t_max))
        throw InvalidParams("flow t_max must be positive");
    if (!(p.truncation_radius > 0) || !std::isfinite(p.truncation_radius))
        throw InvalidParams("flow truncation radius must be positive");
    if (p.sign_convention != 1 && p.sign_convention != -1)
        throw InvalidParams("sign_convention must be +1 or -1");
}

SuTriple kuranishi_map(const SuTriple& b) {
    return {cross(b.x1, b.x2), cross(b.x2, b.x3), cross(b.x3, b.x1)};
}

double chern_simons_value(const SuTriple& b, int sign_convention) {
    return sign_convention * dot(b.x1, cross(b.x2, b.x3));
}

SuTriple gradient(const SuTriple& b, int sign_convention) {
    SuTriple g{cross(b.x2, b.x3), cross(b.x3, b.x1), cross(b.x1, b.x2)};
    return sign_convention > 0 ? g : g * (-1.0);
}

const char* flow_class_name(FlowClass c) {
    switch (c) {
        case FlowClass::converges_to_zero: return "converges_to_zero";
        case FlowClass::converges_to_commuting: return "converges_to_commuting";
        case FlowClass::truncated: return "truncated";
        case FlowClass::exhausted: return "exhausted";
    }
    return "unknown";
}

namespace {

constexpr double kZeroTol = 1e-6;

SuTriple rhs(const SuTriple& b, int sign_convention) {
    return gradient(b, sign_convention) * (-1.0);
}

bool is_exact_fixed_point(const SuTriple& b, int sign_convention) {
    SuTriple g = gradient(b, sign_convention);
    return triple_norm(g) == 0.0;
}

std::array<double, 5> first_integrals(const SuTriple& b) {
    return {dot(b.x1, b.x1) - dot(b.x2, b.x2), dot(b.x2, b.x2) - dot(b.x3, b.x3),
            dot(b.x1, b.x2), dot(b.x1, b.x3), dot(b.x2, b.x3)};
}

}  // namespace

std::array<double, 6> conserved_quantities(const SuTriple& b, int sign_convention) {
    auto f = first_integrals(b);
    return {f[0], f[1], f[2], f[3], f[4], chern_simons_value(b, sign_convention)};
}

Trajectory flow(const SuTriple& b0, const FlowParams& p, size_t max_samples) {
    validate_params(p);
    Trajectory out;
    const long nsteps = static_cast<long>(std::ceil(p.t_max / p.step));
    const long sample_stride =
        std::max<long>(1, nsteps / std::max<size_t>(1, max_samples > 1 ? max_samples - 1 : 1));

    SuTriple b = b0;
    auto ref = first_integrals(b0);
    double cs_prev = chern_simons_value(b0, p.sign_convention);
    bool truncated = false;
    double t = 0;
    out.samples.push_back({0.0, b});

    long step_idx = 0;
    for (; step_idx < nsteps; ++step_idx) {
        if (is_exact_fixed_point(b, p.sign_convention)) {
            t = p.t_max;  // nothing moves; fast-forward
            break;
        }
        const double h = std::min(p.step, p.t_max - t);
        SuTriple k1 = rhs(b, p.sign_convention);
        SuTriple k2 = rhs(b + k1 * (h / 2), p.sign_convention);
        SuTriple k3 = rhs(b + k2 * (h / 2), p.sign_convention);
        SuTriple k4 = rhs(b + k3 * h, p.sign_convention);
        b = b + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        t += h;

        double r = triple_norm(b);
        if (!std::isfinite(r) || r > p.truncation_radius) {
            truncated = true;
            ++step_idx;
            break;
        }
        auto f = first_integrals(b);
        for (int i = 0; i < 5; ++i)
            out.conserved_drift = std::max(out.conserved_drift, std::abs(f[i] - ref[i]));
        double cs = chern_simons_value(b, p.sign_convention);
        out.cs_max_increase = std::max(out.cs_max_increase, cs - cs_prev);
        cs_prev = cs;
        if ((step_idx + 1) % sample_stride == 0) out.samples.push_back({t, b});
    }

    out.end_time = t;
    out.end_state = b;
    if (out.samples.empty() || out.samples.back().t != t) out.samples.push_back({t, b});

    const double r_end = triple_norm(b);
    if (!truncated && r_end < kZeroTol) {
        out.classification = FlowClass::converges_to_zero;
    } else if (!truncated && triple_norm(kuranishi_map(b)) < kZeroTol && r_end >= kZeroTol) {
        out.classification = FlowClass::converges_to_commuting;
    } else if (truncated) {
        out.classification = FlowClass::truncated;
    } else {
        out.classification = FlowClass::exhausted;
    }
    return out;
}

bool stable_set_membership(const SuTriple& b, double tol, int sign_convention) {
    if (!(tol > 0)) throw InvalidParams("tolerance must be positive");
    double n1 = norm(b.x1), n2 = norm(b.x2), n3 = norm(b.x3);
    if (std::abs(n1 - n2) > tol || std::abs(n2 - n3) > tol || std::abs(n1 - n3) > tol)
        return false;
    if (std::abs(dot(b.x1, b.x2)) > tol || std::abs(dot(b.x1, b.x3)) > tol ||
        std::abs(dot(b.x2, b.x3)) > tol)
        return false;
    return sign_convention * dot(b.x1, cross(b.x2, b.x3)) >= -tol;
}

}  // namespace foci
