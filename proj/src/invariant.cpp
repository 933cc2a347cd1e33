#include "foci/invariant.hpp"

#include <numeric>
#include <sstream>

#include "foci/errors.hpp"

namespace foci {

namespace {

void append(std::vector<std::string>& trace, const std::vector<std::string>& more) {
    trace.insert(trace.end(), more.begin(), more.end());
}

void check_integer(const Rat& v, const char* what) {
    if (v.denominator() != 1)
        throw ValidationError(std::string("internal: ") + what + " is not an integer: " +
                              rat_str(v));
}

void check_denominator_divides_8(const Rat& v) {
    Int d = v.denominator();
    if (d != 1 && d != 2 && d != 4 && d != 8)
        throw ValidationError("internal: lambda_FO denominator does not divide 8: " + rat_str(v));
}

// D^0 of the (0,1)-surgery of `base` along `torus`, reduced to knot data.
InvariantValue resolve_d0(const FourPtr& base, const TorusDesc& torus);

}  // namespace

InvariantValue casson(const ThreePtr& y) {
    return std::visit(
        [&](const auto& n) -> InvariantValue {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, S3Node>) {
                return {Rat(0), {"lambda(S3) = 0"}};
            } else if constexpr (std::is_same_v<T, NamedSphereNode>) {
                return {Rat(n.casson), {"lambda(" + n.label + ") = " + n.casson.str() + " (given)"}};
            } else if constexpr (std::is_same_v<T, SurgeryOneOverQNode>) {
                InvariantValue base = casson(n.base);
                Int dd = alexander_second_derivative_at_1(n.knot.seifert);
                Rat val = base.value + Rat(Int(n.q) * dd, 2);
                check_integer(val, "Casson invariant");
                std::ostringstream line;
                line << "casson surgery formula: lambda(" << describe(n.base) << "_{1/" << n.q
                     << "}(" << n.knot.label << ")) = " << rat_str(base.value) << " + (" << n.q
                     << "/2)*" << dd.str() << " = " << rat_str(val);
                base.trace.push_back(line.str());
                return {val, std::move(base.trace)};
            } else if constexpr (std::is_same_v<T, SpliceNode>) {
                InvariantValue a = casson(n.k1.ambient);
                InvariantValue b = casson(n.k2.ambient);
                Rat val = a.value + b.value;
                std::vector<std::string> trace = std::move(a.trace);
                append(trace, b.trace);
                trace.push_back("splice additivity: lambda(" + describe(n.k1.ambient) + " #_K " +
                                describe(n.k2.ambient) + ") = " + rat_str(a.value) + " + " +
                                rat_str(b.value) + " = " + rat_str(val));
                return {val, std::move(trace)};
            } else {
                throw NotAHomologySphere("0-surgery on " + n.knot.label +
                                         " is a homology S1 x S2; the Casson invariant is undefined");
            }
        },
        y->node);
}

namespace {

InvariantValue resolve_d0(const FourPtr& base, const TorusDesc& torus) {
    return std::visit(
        [&](const auto& t) -> InvariantValue {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, ProductTorus>) {
                Int dd = alexander_second_derivative_at_1(t.knot.seifert);
                return {Rat(dd),
                        {"D0(S1 x Y_0(" + t.knot.label + ")) = ddelta(" + t.knot.label +
                         ") = " + dd.str()}};
            } else if constexpr (std::is_same_v<T, MappingTorusOfBranchLocus>) {
                const auto& mt = std::get<MappingTorusNode>(base->node);
                Int dd = alexander_second_derivative_at_1(mt.knot.seifert);
                return {Rat(dd),
                        {"(0,1)-surgery of X_" + std::to_string(mt.n) +
                             " along the branch-locus torus is S1 x Y_0(" + mt.knot.label + ")",
                         "D0(S1 x Y_0(" + mt.knot.label + ")) = ddelta(" + mt.knot.label +
                             ") = " + dd.str()}};
            } else if constexpr (std::is_same_v<T, SurgeryCore>) {
                const auto& ts = std::get<TorusSurgeryNode>(base->node);
                InvariantValue inner = resolve_d0(ts.base, ts.torus);
                inner.trace.insert(inner.trace.begin(),
                                   "(0,1)-surgery along the re-glued core torus of " +
                                       describe(base) + " gives the same zero-surgered manifold");
                return inner;
            } else {
                throw Unresolvable("D0 term for " + describe(TorusDesc{t}) +
                                   " admits no knot reduction");
            }
        },
        torus.node);
}

}  // namespace

InvariantValue lambda_fo(const FourPtr& x) {
    InvariantValue out = std::visit(
        [&](const auto& n) -> InvariantValue {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProductNode>) {
                InvariantValue v = casson(n.y);
                v.trace.push_back("lambda_FO(S1 x Y) = lambda(Y) = " + rat_str(v.value));
                return v;
            } else if constexpr (std::is_same_v<T, MappingTorusNode>) {
                if (!is_qhs_branched_cover(n.knot.seifert, n.n))
                    throw NotAdmissible("branched cover not QHS: the " + std::to_string(n.n) +
                                        "-fold cover branched along " + n.knot.label +
                                        " has infinite first homology");
                InvariantValue amb = casson(n.knot.ambient);
                Int sig_sum = 0;
                std::ostringstream sigs;
                for (long m = 1; m <= n.n - 1; ++m) {
                    int s = tristram_levine_signature(n.knot.seifert, m, n.n);
                    sig_sum += s;
                    if (m > 1) sigs << ",";
                    sigs << s;
                }
                Rat val = Rat(Int(n.n)) * amb.value + Rat(sig_sum, 8);
                std::vector<std::string> trace = std::move(amb.trace);
                std::ostringstream line;
                line << "mapping torus formula: lambda_FO(X_" << n.n << ") = " << n.n
                     << "*lambda(" << describe(n.knot.ambient) << ") + (1/8)*sum sign^{m/" << n.n
                     << "}(" << n.knot.label << ") = " << n.n << "*" << rat_str(amb.value)
                     << " + (1/8)*(" << sig_sum.str() << ")  [signatures " << sigs.str() << "]";
                trace.push_back(line.str());
                return {val, std::move(trace)};
            } else if constexpr (std::is_same_v<T, TorusSurgeryNode>) {
                if (n.p == 0)
                    throw NotAdmissible(
                        "(0,1)-surgered manifold has the homology of S2 x T2, so lambda_FO is "
                        "undefined; D0 is the defined invariant there");
                InvariantValue base = lambda_fo(n.base);
                if (n.q == 0) {
                    base.trace.push_back("(1,0)-surgery is trivial: lambda_FO unchanged");
                    return base;
                }
                InvariantValue d0 = resolve_d0(n.base, n.torus);
                Rat val = base.value + Rat(Int(n.q), 2) * d0.value;
                std::vector<std::string> trace = std::move(base.trace);
                append(trace, d0.trace);
                std::ostringstream line;
                line << "torus surgery formula: lambda_FO(X_{1," << n.q << "}) = "
                     << rat_str(base.value) << " + (" << n.q << "/2)*" << rat_str(d0.value)
                     << " = " << rat_str(val);
                trace.push_back(line.str());
                return {val, std::move(trace)};
            } else if constexpr (std::is_same_v<T, FiberSumNode>) {
                InvariantValue a = lambda_fo(n.a);
                InvariantValue b = lambda_fo(n.b);
                Rat val = a.value + b.value;
                std::vector<std::string> trace = std::move(a.trace);
                append(trace, b.trace);
                trace.push_back("fiber sum additivity along " + describe(n.ta) + " and " +
                                describe(n.tb) + ": " + rat_str(a.value) + " + " +
                                rat_str(b.value) + " = " + rat_str(val));
                return {val, std::move(trace)};
            } else {
                // Excision: lambda_FO(X1 #_phi X2) = lambda_FO(X_{1,phi}) +
                // lambda_FO(X_{2,phi}).  Each summand re-glues a standard
                // D2 x T2; it reduces to a (1,d)-surgery exactly when the
                // disk-bounding curve has no gamma component and unit mu
                // component.
                const auto& g = n.glue;
                // X_{1,phi}: the disk bounds b*mu1 + d*lambda1 + q*gamma1
                if (g.q() != 0 || (g.b() != 1 && g.b() != -1))
                    throw Unresolvable(
                        "excision summand X_{1,phi} with gluing matrix " + g.str() +
                        " is not a (1,d)-torus surgery (needs b = +-1 and q = 0); no generalized "
                        "surgery formula is available");
                // X_{2,phi}: the disk bounds b*mu2 - a*lambda2 - p*b*gamma2
                if (g.p() != 0)
                    throw Unresolvable(
                        "excision summand X_{2,phi} with gluing matrix " + g.str() +
                        " is not a (1,d)-torus surgery (needs p = 0); no generalized surgery "
                        "formula is available");
                long q1 = static_cast<long>(g.b() * g.d());
                long q2 = static_cast<long>(-g.b() * g.a());
                InvariantValue s1 = lambda_fo(make_torus_surgery(n.a, n.ta, 1, q1));
                InvariantValue s2 = lambda_fo(make_torus_surgery(n.b, n.tb, 1, q2));
                Rat val = s1.value + s2.value;
                std::vector<std::string> trace;
                trace.push_back("excision formula: lambda_FO(X1 #_phi X2) = lambda_FO(X_{1,phi}) "
                                "+ lambda_FO(X_{2,phi}) with phi = " +
                                g.str());
                trace.push_back("X_{1,phi} is the (1," + std::to_string(q1) + ")-surgery of " +
                                describe(n.a) + "; X_{2,phi} is the (1," + std::to_string(q2) +
                                ")-surgery of " + describe(n.b));
                append(trace, s1.trace);
                append(trace, s2.trace);
                trace.push_back("excision total: " + rat_str(s1.value) + " + " + rat_str(s2.value) +
                                " = " + rat_str(val));
                return {val, std::move(trace)};
            }
        },
        x->node);
    check_denominator_divides_8(out.value);
    return out;
}

InvariantValue d0_invariant(const FourPtr& x0) {
    if (const auto* prod = std::get_if<ProductNode>(&x0->node)) {
        if (const auto* zs = std::get_if<ZeroSurgeryNode>(&prod->y->node)) {
            Int dd = alexander_second_derivative_at_1(zs->knot.seifert);
            return {Rat(dd),
                    {"D0(S1 x Y_0(" + zs->knot.label + ")) = ddelta(" + zs->knot.label +
                     ") = " + dd.str()}};
        }
        throw ValidationError("d0 expects S1 x (0-surgery), got " + describe(x0));
    }
    if (const auto* ts = std::get_if<TorusSurgeryNode>(&x0->node)) {
        if (ts->p != 0)
            throw ValidationError("d0 expects a (0,1)-surgery expression, got " + describe(x0));
        return resolve_d0(ts->base, ts->torus);
    }
    throw ValidationError("d0 expects S1 x (0-surgery) or a (0,1)-surgery, got " + describe(x0));
}

InvariantValue expand_surgery_chain(const FourPtr& x, long steps) {
    const auto* ts = std::get_if<TorusSurgeryNode>(&x->node);
    if (!ts || ts->p != 1)
        throw InvalidParams("expand_surgery_chain expects a (1,q)-surgery expression");
    if (steps != (ts->q >= 0 ? ts->q : -ts->q))
        throw InvalidParams("expand_surgery_chain: steps must equal |q|");
    InvariantValue acc = lambda_fo(ts->base);
    if (steps == 0) {
        acc.trace.push_back("empty surgery chain: lambda_FO unchanged");
        return acc;
    }
    InvariantValue d0 = resolve_d0(ts->base, ts->torus);
    append(acc.trace, d0.trace);
    const int dir = ts->q > 0 ? 1 : -1;
    for (long k = 1; k <= steps; ++k) {
        acc.value += Rat(Int(dir), 2) * d0.value;
        std::ostringstream line;
        line << "(1," << dir << ")-surgery along the re-glued core torus, step " << k << "/"
             << steps << ": lambda_FO = " << rat_str(acc.value);
        acc.trace.push_back(line.str());
    }
    return acc;
}

namespace {

void admissibility_walk(const FourPtr& x, AdmissibilityReport& rep, bool root) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ProductNode>) {
                if (!is_homology_sphere(n.y)) {
                    rep.pass = false;
                    rep.reasons.push_back(describe(x) +
                                          ": product over a 0-surgery is a homology S1 x S2 x ... "
                                          "not a homology S1 x S3");
                }
            } else if constexpr (std::is_same_v<T, MappingTorusNode>) {
                if (!is_qhs_branched_cover(n.knot.seifert, n.n)) {
                    rep.pass = false;
                    rep.reasons.push_back(describe(x) + ": branched cover not QHS");
                }
            } else if constexpr (std::is_same_v<T, TorusSurgeryNode>) {
                if (n.p == 0) {
                    rep.pass = false;
                    rep.reasons.push_back(describe(x) +
                                          ": (0,1)-surgery has the homology of S2 x T2");
                } else {
                    admissibility_walk(n.base, rep, false);
                }
            } else if constexpr (std::is_same_v<T, FiberSumNode>) {
                admissibility_walk(n.a, rep, false);
                admissibility_walk(n.b, rep, false);
            } else {
                const auto& g = n.glue;
                long long aq = g.a() * g.q();
                bool homology = std::gcd(aq < 0 ? -aq : aq, g.b() < 0 ? -g.b() : g.b()) == 1 &&
                                (aq * aq + g.b() * g.b()) != 0;
                bool level = (g.b() == 1 || g.b() == -1) && g.q() == 0;
                if (root) {
                    rep.homology_test = homology;
                    rep.homology_level_test = level;
                }
                if (!homology) {
                    rep.pass = false;
                    rep.reasons.push_back(describe(x) + ": homology test failed, GCD(a*q, b) = " +
                                          std::to_string(std::gcd(aq < 0 ? -aq : aq,
                                                                  g.b() < 0 ? -g.b() : g.b())) +
                                          " for matrix " + g.str());
                }
                if (!level) {
                    rep.pass = false;
                    rep.reasons.push_back(describe(x) +
                                          ": homology-level admissibility needs b = +-1 and q = 0 "
                                          "in matrix " +
                                          g.str());
                }
                admissibility_walk(n.a, rep, false);
                admissibility_walk(n.b, rep, false);
            }
        },
        x->node);
}

}  // namespace

AdmissibilityReport check_admissibility(const FourPtr& x) {
    AdmissibilityReport rep;
    admissibility_walk(x, rep, true);
    return rep;
}

}  // namespace foci
