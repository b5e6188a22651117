#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatknot/sample.hpp"
#include "quatknot/solver.hpp"

using namespace quatknot;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

Traceless t3(long a1, long a2, long a3) {
    return Traceless(Scalar::from_int(Q, a1), Scalar::from_int(Q, a2), Scalar::from_int(Q, a3));
}

HyperbolicParams params(const FieldDescriptor& d, long a0, long a1, long a3, long b1, long b3) {
    return HyperbolicParams{Scalar::from_int(d, a0), Scalar::from_int(d, a1),
                            Scalar::from_int(d, a3), Scalar::from_int(d, b1),
                            Scalar::from_int(d, b3)};
}

Scalar qq(long n, long d) { return Scalar::rational(mpq_class(n, d)); }

} // namespace

TEST_CASE("lambda coefficients") {
    // canonical traceless parts: a = (a1, a1, a3), b = (b1, b1, b3)
    Traceless a = t3(1, 1, 1), b = t3(0, 0, 1);
    Lambdas l = solve_lambdas(a, b);
    CHECK(l.lambda1 == Scalar::one(Q));   // b3
    CHECK(l.lambda2 == -Scalar::one(Q));  // -a3
    // defining relation and the coefficient identities
    CHECK((a * l.lambda1 + b * l.lambda2 + cross(a, b)).is_zero());
    CHECK(l.lambda1 * l.lambda2 == dot(a, b));
    CHECK(l.lambda2 * l.lambda2 == -det(a));
    CHECK(l.lambda1 * l.lambda1 == -det(b));

    CHECK_THROWS_AS(solve_lambdas(a, a * Scalar::from_int(Q, 2)), CommutingPair);
    CHECK_THROWS_AS(solve_lambdas(Traceless::basis_i(Q), Traceless::basis_j(Q)),
                    TripleIndependent);
}

TEST_CASE("lambda identities on random dependent pairs") {
    // build dependent triples from the canonical plane and conjugate them out
    Sampler rng(47);
    int done = 0;
    while (done < 100) {
        Traceless a(rng.scalar(Q), Scalar::zero(Q), rng.scalar(Q));
        Traceless b(rng.scalar(Q), Scalar::zero(Q), rng.nonzero(Q));
        a.a2 = a.a1;
        b.a2 = b.a1;
        if (cross(a, b).is_zero()) continue;
        Mat2 c = rng.invertible(Q);
        Traceless ac = group_conjugate(a, c), bc = group_conjugate(b, c);
        Lambdas l = solve_lambdas(ac, bc);
        CHECK((ac * l.lambda1 + bc * l.lambda2 + cross(ac, bc)).is_zero());
        CHECK(l.lambda1 * l.lambda2 == dot(ac, bc));
        ++done;
    }
}

TEST_CASE("b0 formula") {
    Traceless a = t3(1, 1, 1), b = t3(0, 0, 1);
    // lambda1 = 1, lambda2 = -1; b0 = 1 - 2/(a0 + 1)
    CHECK(b0_from(a, b, Scalar::from_int(Q, 3)) == qq(1, 2));
    CHECK(b0_from(a, b, Scalar::from_int(Q, 7)) == qq(3, 4));
    // pole at a0 = lambda2
    CHECK_THROWS_AS(b0_from(a, b, Scalar::from_int(Q, -1)), PoleAtA0);
}

TEST_CASE("family generator at (3,1,1,0,1)") {
    auto [A, B] = hyperbolic_family(params(Q, 3, 1, 1, 0, 1));
    CHECK(A == Mat2(Scalar::from_int(Q, 4), Scalar::from_int(Q, 2), Scalar::zero(Q),
                    Scalar::from_int(Q, 2)));
    // b0 = 1 - 2/4 = 1/2
    CHECK(B == Mat2(qq(3, 2), Scalar::zero(Q), Scalar::zero(Q), qq(-1, 2)));
    CHECK(fe_residual(A, B).is_solution);
    // Theorem 4.2 relation on the canonical traceless parts
    Traceless a = traceless_part(A), b = traceless_part(B);
    CHECK((a * b.a3 - b * a.a3 + cross(a, b)).is_zero());
}

TEST_CASE("family generator over Q(t)") {
    FieldDescriptor qt = FieldDescriptor::rational_functions();
    Scalar t = Scalar::rat_fun(qt, Poly::variable());
    HyperbolicParams p{t, Scalar::one(qt), Scalar::one(qt), Scalar::zero(qt), Scalar::one(qt)};
    auto [A, B] = hyperbolic_family(p);
    Poly tp = Poly::variable();
    CHECK(A == Mat2(Scalar::rat_fun(qt, tp + Poly(1)), Scalar::from_int(qt, 2),
                    Scalar::zero(qt), Scalar::rat_fun(qt, tp - Poly(1))));
    // b0 = 1 - 2/(t+1) = (t-1)/(t+1)
    CHECK(B == Mat2(Scalar::rat_fun(qt, tp * 2, tp + Poly(1)), Scalar::zero(qt),
                    Scalar::zero(qt), Scalar::rat_fun(qt, Poly(-2), tp + Poly(1))));
    // the residual is the zero rational-function matrix
    CHECK(fe_residual(A, B).residual.is_zero());
}

TEST_CASE("generator exclusions") {
    CHECK_THROWS_AS(hyperbolic_family(params(Q, 1, 1, 1, 0, 1)), InvalidParams);   // a0 = a3
    CHECK_THROWS_AS(hyperbolic_family(params(Q, 2, 1, 1, 0, 1)), InvalidParams);   // a0 = 1 + a3
    CHECK_THROWS_AS(hyperbolic_family(params(Q, 0, 1, 1, 0, 1)), InvalidParams);   // a0 = 1 - a3
    CHECK_THROWS_AS(hyperbolic_family(params(Q, -1, 1, 1, 0, 1)), InvalidParams);  // a0 = -a3
    CHECK_THROWS_AS(hyperbolic_family(params(Q, 3, 1, 1, 0, 0)), InvalidParams);   // b3 = 0
    CHECK_THROWS_AS(hyperbolic_family(params(Q, 3, 1, 1, 1, 1)), InvalidParams);   // commuting
}

TEST_CASE("generator residual vanishes on random valid tuples") {
    Sampler rng(53);
    int done = 0;
    while (done < 1000) {
        HyperbolicParams p{rng.scalar(Q), rng.scalar(Q), rng.scalar(Q), rng.scalar(Q),
                           rng.scalar(Q)};
        try {
            auto [A, B] = hyperbolic_family(p);  // asserts residual = 0 internally
            CHECK(fe_residual(A, B).is_solution);
            ++done;
        } catch (const InvalidParams&) {
        }
    }
}

TEST_CASE("classifier on the canonical instance") {
    auto [A, B] = hyperbolic_family(params(Q, 3, 1, 1, 0, 1));
    Classification c = classify_pair(A, B);
    CHECK(c.kind == ClassKind::Hyperbolic);
    // already canonical: params read back
    CHECK(c.params.a0 == Scalar::from_int(Q, 3));
    CHECK(c.params.a3 == Scalar::one(Q));
    CHECK(c.params.b3 == Scalar::one(Q));
    auto [A2, B2] = conjugate_pair(A, B, c.witness);
    auto [Af, Bf] = hyperbolic_family(c.params);
    CHECK(A2 == Af);
    CHECK(B2 == Bf);
}

TEST_CASE("classifier buckets") {
    Mat2 M(Scalar::from_int(Q, 2), Scalar::one(Q), Scalar::zero(Q), Scalar::from_int(Q, 3));
    CHECK(classify_pair(M, M * M).kind == ClassKind::Commuting);
    Mat2 A3 = Mat2::pauli_i(Q) + Mat2::scalar(Scalar::from_int(Q, 2));
    CHECK(classify_pair(A3, Mat2::pauli_j(Q)).kind == ClassKind::NonSolution);
    CHECK_THROWS_AS(classify_pair(Mat2::identity(Q), M), SingularInput);  // A-1 singular
}

TEST_CASE("classification stable under conjugation") {
    FieldDescriptor f5 = FieldDescriptor::prime(5);
    auto [A, B] = hyperbolic_family(params(f5, 0, 1, 2, 0, 1));
    REQUIRE(classify_pair(A, B).kind == ClassKind::Hyperbolic);
    Sampler rng(59);
    for (int n = 0; n < 25; ++n) {
        Mat2 c = rng.invertible(f5);
        auto [Ac, Bc] = conjugate_pair(A, B, c);
        CHECK(fe_residual(Ac, Bc).is_solution);
        CHECK(classify_pair(Ac, Bc).kind == ClassKind::Hyperbolic);
    }
    // conjugation preserves FE-solution status over Q too
    auto [Aq, Bq] = hyperbolic_family(params(Q, 3, 1, 1, 0, 1));
    Mat2 u(Scalar::one(Q), Scalar::one(Q), Scalar::zero(Q), Scalar::one(Q));
    auto [Au, Bu] = conjugate_pair(Aq, Bq, u);
    CHECK(fe_residual(Au, Bu).is_solution);
}

TEST_CASE("census at p = 3") {
    CensusReport r = enumerate_solutions(3);
    CHECK(r.p == 3);
    CHECK(r.pairs_scanned == 2304);
    CHECK(r.fe_solutions == 480);
    CHECK(r.commuting == 240);
    CHECK(r.matching == 240);
    CHECK(r.hyperbolic == 0);  // every valid tuple mod 3 lands on the matching locus
    CHECK(r.unresolved == 0);
    CHECK(r.fe_solutions == r.commuting + r.matching + r.hyperbolic + r.unresolved);
    CHECK(r.b_form_tuples == 12);
    CHECK(r.generator_failures == 0);
    CHECK(r.theorem11_B_discrepancies == 12);
}

TEST_CASE("census at p = 5") {
    CensusReport r = enumerate_solutions(5);
    CHECK(r.pairs_scanned == 230400);
    CHECK(r.fe_solutions == 21120);
    CHECK(r.commuting == 9120);
    CHECK(r.matching == 9120);
    CHECK(r.hyperbolic == 2880);
    CHECK(r.unresolved == 0);
    CHECK(r.b_form_tuples == 720);
    CHECK(r.generator_failures == 0);
    CHECK(r.printed51_successes == 240);
    CHECK(r.printed_thm_successes == 208);
    CHECK(r.theorem11_B_discrepancies == 512);
    CHECK_THROWS_AS(enumerate_solutions(11), ValidationError);
}

TEST_CASE("all valid tuples over F5 generate exact solutions") {
    FieldDescriptor f5 = FieldDescriptor::prime(5);
    std::size_t valid = 0;
    for (long a0 = 0; a0 < 5; ++a0)
        for (long a1 = 0; a1 < 5; ++a1)
            for (long a3 = 0; a3 < 5; ++a3)
                for (long b1 = 0; b1 < 5; ++b1)
                    for (long b3 = 0; b3 < 5; ++b3) {
                        try {
                            auto [A, B] = hyperbolic_family(params(f5, a0, a1, a3, b1, b3));
                            CHECK(fe_residual(A, B).is_solution);
                            ++valid;
                        } catch (const InvalidParams&) {
                        }
                    }
    CHECK(valid == 720);
}

TEST_CASE("printed B forms against the generator") {
    // worked-example form solves exactly on the matching locus det A = tr A
    FieldDescriptor f5 = FieldDescriptor::prime(5);
    for (long a0 = 0; a0 < 5; ++a0)
        for (long a3 = 0; a3 < 5; ++a3) {
            HyperbolicParams p = params(f5, a0, 1, a3, 0, 1);
            BFormComparison c;
            try {
                c = compare_b_forms(p);
            } catch (const InvalidParams&) {
                continue;
            }
            CHECK(c.generator_solves);
            auto [A, B] = hyperbolic_family(p);
            bool on_matching_locus = det(A) == tr(A);
            CHECK(c.printed51_solves == on_matching_locus);
        }
}
