#include "doctest.h"

#include "foci/catalog.hpp"
#include "foci/errors.hpp"
#include "foci/invariant.hpp"
#include "foci/manifest.hpp"

using namespace foci;

namespace {

KnotCatalog g_cat;

KnotInSphere knot(const std::string& label) {
    return make_knot(make_s3(), g_cat.lookup(label), label);
}

TorusDesc product_torus(const std::string& label) { return TorusDesc{ProductTorus{knot(label)}}; }

std::vector<std::string> catalog_labels() {
    std::vector<std::string> out;
    for (auto& [label, v] : g_cat.table()) out.push_back(label);
    return out;
}

}  // namespace

TEST_CASE("casson invariant basics") {
    CHECK(casson(make_s3()).value == Rat(0));
    CHECK(casson(make_named_sphere("poincare", Int(-1))).value == Rat(-1));
    for (long q = -5; q <= 5; ++q) {
        // lambda(S3_{1/q}(trefoil)) = q * ddelta / 2 = q
        auto v = casson(make_surgery_1q(make_s3(), knot("trefoil"), q));
        CHECK(v.value == Rat(Int(q)));
        CHECK(v.value.denominator() == 1);
        CHECK_FALSE(v.trace.empty());
    }
    CHECK(casson(make_surgery_1q(make_s3(), knot("figure_eight"), 3)).value == Rat(-3));
}

TEST_CASE("casson on splices is additive and symmetric") {
    auto s1 = casson(make_splice(knot("trefoil"), knot("figure_eight")));
    auto s2 = casson(make_splice(knot("figure_eight"), knot("trefoil")));
    CHECK(s1.value == Rat(0));
    CHECK(s1.value == s2.value);

    // splice of knots in nontrivial spheres picks up both ambient values
    auto p = make_named_sphere("poincare", Int(-1));
    auto k1 = make_knot(p, g_cat.lookup("trefoil"), "trefoil");
    auto v = casson(make_splice(k1, knot("figure_eight")));
    CHECK(v.value == Rat(-1));
}

TEST_CASE("casson rejects zero-surgery input") {
    CHECK_THROWS_AS(casson(make_zero_surgery(knot("trefoil"))), NotAHomologySphere);
}

TEST_CASE("surgery expression validation") {
    auto p = make_named_sphere("poincare", Int(-1));
    // knot lives in S3, surgery base claims poincare
    CHECK_THROWS_AS(make_surgery_1q(p, knot("trefoil"), 1), ValidationError);
    auto kp = make_knot(p, g_cat.lookup("trefoil"), "trefoil");
    CHECK_NOTHROW(make_surgery_1q(p, kp, 1));
}

TEST_CASE("lambda_fo of products is the casson invariant") {
    CHECK(lambda_fo(make_product(make_s3())).value == Rat(0));
    CHECK(lambda_fo(make_product(make_named_sphere("poincare", Int(-1)))).value == Rat(-1));
    auto y = make_surgery_1q(make_s3(), knot("trefoil"), 2);
    CHECK(lambda_fo(make_product(y)).value == Rat(2));
}

TEST_CASE("lambda_fo of mapping tori uses the signature formula") {
    auto x2 = make_mapping_torus(2, knot("trefoil"));
    CHECK(lambda_fo(x2).value == Rat(-1, 4));
    auto x3 = make_mapping_torus(3, knot("trefoil"));
    CHECK(lambda_fo(x3).value == Rat(-1, 2));
    // figure eight: sign^{1/2} = 0, so lambda_FO vanishes
    CHECK(lambda_fo(make_mapping_torus(2, knot("figure_eight"))).value == Rat(0));
    // non-QHS cover is gated
    CHECK_THROWS_AS(lambda_fo(make_mapping_torus(6, knot("trefoil"))), NotAdmissible);
}

TEST_CASE("d0 invariant of zero-surgered products") {
    CHECK(d0_invariant(make_product(make_zero_surgery(knot("unknot")))).value == Rat(0));
    CHECK(d0_invariant(make_product(make_zero_surgery(knot("trefoil")))).value == Rat(2));
    CHECK(d0_invariant(make_product(make_zero_surgery(knot("figure_eight")))).value == Rat(-2));
    // the same value through the (0,1)-surgery expression
    auto x0 = make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 0, 1);
    CHECK(d0_invariant(x0).value == Rat(2));
    CHECK_THROWS_AS(d0_invariant(make_product(make_s3())), ValidationError);
    auto abstract_surgery =
        make_torus_surgery(make_product(make_s3()), TorusDesc{AbstractTorus{"T"}}, 0, 1);
    CHECK_THROWS_AS(d0_invariant(abstract_surgery), Unresolvable);
}

TEST_CASE("torus surgery formula matches the casson surgery formula exactly") {
    for (const auto& label : catalog_labels()) {
        for (long q = -5; q <= 5; ++q) {
            CAPTURE(label);
            CAPTURE(q);
            auto surgered =
                make_torus_surgery(make_product(make_s3()), product_torus(label), 1, q);
            auto via_fo = lambda_fo(surgered);
            auto via_casson = casson(make_surgery_1q(make_s3(), knot(label), q));
            auto via_chain = expand_surgery_chain(surgered, q >= 0 ? q : -q);
            CHECK(via_fo.value == via_casson.value);
            CHECK(via_fo.value == via_chain.value);
        }
    }
}

TEST_CASE("expand_surgery_chain validates its arguments") {
    auto surgered = make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 1, 3);
    CHECK_THROWS_AS(expand_surgery_chain(surgered, 2), InvalidParams);
    CHECK_THROWS_AS(expand_surgery_chain(make_product(make_s3()), 0), InvalidParams);
    CHECK(expand_surgery_chain(surgered, 3).value == Rat(3));
    auto trivial = make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 1, 0);
    CHECK(expand_surgery_chain(trivial, 0).value == Rat(0));
}

TEST_CASE("surgeries stack through the re-glued core torus") {
    auto base = make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 1, 2);
    auto stacked = make_torus_surgery(base, TorusDesc{SurgeryCore{}}, 1, 3);
    // both steps add q * ddelta / 2 = q each
    CHECK(lambda_fo(stacked).value == Rat(5));
}

TEST_CASE("lambda_fo rejects (0,1)-surgery and p outside {0,1}") {
    auto x0 = make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 0, 1);
    CHECK_THROWS_AS(lambda_fo(x0), NotAdmissible);
    CHECK_THROWS_AS(
        make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 2, 1),
        ValidationError);
    CHECK_THROWS_AS(
        make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 0, 2),
        ValidationError);  // gcd(0, 2) = 2
    // (1, 0) is the trivial surgery and is legal
    CHECK(lambda_fo(make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 1, 0))
              .value == Rat(0));
}

TEST_CASE("torus descriptor compatibility is validated") {
    // product torus of a knot in the wrong ambient manifold
    auto p = make_named_sphere("poincare", Int(-1));
    CHECK_THROWS_AS(
        make_torus_surgery(make_product(p), product_torus("trefoil"), 1, 1), ValidationError);
    // branch-locus torus needs a mapping-torus base
    CHECK_THROWS_AS(make_torus_surgery(make_product(make_s3()),
                                       TorusDesc{MappingTorusOfBranchLocus{}}, 1, 1),
                    ValidationError);
    CHECK_NOTHROW(make_torus_surgery(make_mapping_torus(2, knot("trefoil")),
                                     TorusDesc{MappingTorusOfBranchLocus{}}, 1, 1));
}

TEST_CASE("mapping torus consistency through the (1,1)-surgered route") {
    // lambda_FO(X'_n) evaluated by the surgery formula must equal
    // n*lambda(Y) + (1/8) sum sign + (1/2) ddelta, evaluated independently
    for (const auto& label : catalog_labels()) {
        for (long n = 2; n <= 4; ++n) {
            if (!is_qhs_branched_cover(g_cat.lookup(label), n)) continue;
            CAPTURE(label);
            CAPTURE(n);
            auto xn = make_mapping_torus(n, knot(label));
            auto xn1 = make_torus_surgery(xn, TorusDesc{MappingTorusOfBranchLocus{}}, 1, 1);
            Rat lhs = lambda_fo(xn1).value;
            Int sig_sum = 0;
            for (long m = 1; m <= n - 1; ++m)
                sig_sum += tristram_levine_signature(g_cat.lookup(label), m, n);
            Rat rhs = Rat(Int(n)) * casson(make_s3()).value + Rat(sig_sum, 8) +
                      Rat(alexander_second_derivative_at_1(g_cat.lookup(label)), 2);
            CHECK(lhs == rhs);
            CHECK(lambda_fo(xn).value + Rat(alexander_second_derivative_at_1(g_cat.lookup(label)), 2) ==
                  lhs);
        }
    }
}

TEST_CASE("fiber sum additivity") {
    auto a = make_mapping_torus(2, knot("trefoil"));
    auto yb = make_surgery_1q(make_s3(), knot("figure_eight"), 2);
    auto b = make_product(yb);
    // an essential torus in b: the product of S1 with a knot in the surgered sphere
    TorusDesc tb{ProductTorus{make_knot(yb, g_cat.lookup("trefoil"), "trefoil")}};
    auto sum = make_fiber_sum(a, TorusDesc{MappingTorusOfBranchLocus{}}, b, tb);
    CHECK(lambda_fo(sum).value == lambda_fo(a).value + lambda_fo(b).value);
    CHECK(lambda_fo(sum).value == Rat(-1, 4) + Rat(-2));
}

TEST_CASE("excision with the fiber-sum matrix reproduces additivity") {
    auto a = make_mapping_torus(2, knot("trefoil"));
    auto yb = make_surgery_1q(make_s3(), knot("figure_eight"), 2);
    auto b = make_product(yb);
    TorusDesc tb{ProductTorus{make_knot(yb, g_cat.lookup("trefoil"), "trefoil")}};
    auto ex = make_excision(a, TorusDesc{MappingTorusOfBranchLocus{}}, b, tb, fiber_sum_matrix());
    CHECK(lambda_fo(ex).value == lambda_fo(a).value + lambda_fo(b).value);
}

TEST_CASE("excision with a surgery-type matrix reduces to torus surgeries") {
    // glue = [[a,b,0],[c,d,0],[0,0,1]] with b = 1, q = p = 0: X_{1,phi} is the
    // (1, d)-surgery of X1 and X_{2,phi} the (1, -a)-surgery of X2
    IMat3 m;
    m.m = {{{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}};  // det = 2*1 - 1*1 = 1 -> need -1
    CHECK_THROWS_AS(
        make_excision(make_product(make_s3()), product_torus("trefoil"), make_product(make_s3()),
                      product_torus("figure_eight"), GluingMatrix(m)),
        ValidationError);
    m.m = {{{2, 1, 0}, {3, 1, 0}, {0, 0, 1}}};  // det = 2 - 3 = -1
    auto ex = make_excision(make_product(make_s3()), product_torus("trefoil"),
                            make_product(make_s3()), product_torus("figure_eight"),
                            GluingMatrix(m));
    // X_{1,phi}: (1, d) = (1, 1)-surgery along S1 x trefoil: 0 + (1/2)*2 = 1
    // X_{2,phi}: (1, -a) = (1, -2)-surgery along S1 x fig8: 0 + (-2/2)*(-2) = 2
    CHECK(lambda_fo(ex).value == Rat(3));
}

TEST_CASE("dehn twist excisions are unresolvable") {
    auto a = make_product(make_s3());
    auto b = make_product(make_s3());
    auto ex = make_excision(a, product_torus("trefoil"), b, product_torus("figure_eight"),
                            dehn_twist_matrix(1, 1));
    CHECK_THROWS_AS(lambda_fo(ex), Unresolvable);
    try {
        lambda_fo(ex);
    } catch (const Unresolvable& e) {
        // the offending matrix is named in the message
        CHECK(std::string(e.what()).find("[[0,1,0],[1,0,0],[-1,-1,1]]") != std::string::npos);
    }
    // q = 0 twist: the first summand reduces, the second still has a gamma
    // component (p != 0), so the whole evaluation stays unresolvable
    auto ex2 = make_excision(a, product_torus("trefoil"), b, product_torus("figure_eight"),
                             dehn_twist_matrix(1, 0));
    CHECK_THROWS_AS(lambda_fo(ex2), Unresolvable);
}

TEST_CASE("admissibility reports") {
    CHECK(check_admissibility(make_product(make_s3())).pass);
    CHECK_FALSE(check_admissibility(make_product(make_zero_surgery(knot("trefoil")))).pass);

    auto bad_mt = make_mapping_torus(6, knot("trefoil"));
    auto rep = check_admissibility(bad_mt);
    CHECK_FALSE(rep.pass);
    REQUIRE(!rep.reasons.empty());
    CHECK(rep.reasons[0].find("branched cover not QHS") != std::string::npos);

    CHECK(check_admissibility(make_mapping_torus(2, knot("trefoil"))).pass);
    // (1,q)-surgery passes exactly when the base passes
    CHECK(check_admissibility(
              make_torus_surgery(make_product(make_s3()), product_torus("trefoil"), 1, 5))
              .pass);
    CHECK_FALSE(check_admissibility(make_torus_surgery(
                                        bad_mt, TorusDesc{MappingTorusOfBranchLocus{}}, 1, 1))
                    .pass);
}

TEST_CASE("excision admissibility criteria") {
    auto a = make_product(make_s3());
    auto b = make_product(make_s3());
    auto report = [&](const GluingMatrix& g) {
        return check_admissibility(
            make_excision(a, product_torus("trefoil"), b, product_torus("trefoil"), g));
    };

    auto fs = report(fiber_sum_matrix());
    CHECK(fs.pass);
    CHECK(fs.homology_test == true);
    CHECK(fs.homology_level_test == true);

    auto dt = report(dehn_twist_matrix(2, 1));
    CHECK_FALSE(dt.pass);
    CHECK(dt.homology_test == true);  // GCD(a*q, b) = GCD(0, 1) = 1
    CHECK(dt.homology_level_test == false);

    // b = 2, q = 0: GCD(0, 2) = 2, fails the homology test
    IMat3 m;
    m.m = {{{1, 2, 0}, {1, 1, 0}, {0, 0, 1}}};  // det = 1 - 2 = -1
    auto b2 = report(GluingMatrix(m));
    CHECK_FALSE(b2.pass);
    CHECK(b2.homology_test == false);
    CHECK(b2.homology_level_test == false);
}

TEST_CASE("lambda_fo denominators divide 8 and casson values are integers") {
    std::vector<FourPtr> corpus;
    corpus.push_back(make_product(make_s3()));
    corpus.push_back(make_mapping_torus(2, knot("trefoil")));
    corpus.push_back(make_mapping_torus(3, knot("t2_5")));
    corpus.push_back(make_torus_surgery(make_product(make_s3()), product_torus("t2_7"), 1, -3));
    corpus.push_back(make_fiber_sum(corpus[1], TorusDesc{MappingTorusOfBranchLocus{}}, corpus[2],
                                    TorusDesc{MappingTorusOfBranchLocus{}}));
    for (auto& x : corpus) {
        Int den = lambda_fo(x).value.denominator();
        CHECK((den == 1 || den == 2 || den == 4 || den == 8));
    }
}

TEST_CASE("gluing matrix validation") {
    IMat3 bad_col;
    bad_col.m = {{{0, 1, 1}, {1, 0, 0}, {0, 0, 1}}};
    CHECK_THROWS_AS(GluingMatrix{bad_col}, ValidationError);
    IMat3 bad_det;
    bad_det.m = {{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK_THROWS_AS(GluingMatrix{bad_det}, NonUnimodular);
    CHECK_NOTHROW(surgery_matrix(1, 1, 0, 1));
    CHECK(surgery_matrix(1, 1, 0, 1).det() == 1);
    CHECK(fiber_sum_matrix().det() == -1);
}

TEST_CASE("evaluation traces are present and cite each formula applied") {
    auto x = make_torus_surgery(make_mapping_torus(2, knot("trefoil")),
                                TorusDesc{MappingTorusOfBranchLocus{}}, 1, 1);
    auto v = lambda_fo(x);
    CHECK(v.value == Rat(-1, 4) + Rat(1));
    bool saw_mapping_torus = false, saw_surgery = false, saw_d0 = false;
    for (auto& line : v.trace) {
        if (line.find("mapping torus formula") != std::string::npos) saw_mapping_torus = true;
        if (line.find("torus surgery formula") != std::string::npos) saw_surgery = true;
        if (line.find("D0(") != std::string::npos) saw_d0 = true;
    }
    CHECK(saw_mapping_torus);
    CHECK(saw_surgery);
    CHECK(saw_d0);
}
