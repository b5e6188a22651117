#pragma once

// The hyperbolic / mismatching solution theory: the lambda coefficients,
// the b0 formula, the canonical upper-triangular family, the similarity
// classifier, and the finite-field brute-force census.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "switch.hpp"

namespace quatknot {

struct Lambdas {
    Scalar lambda1, lambda2;
};

// Solves lambda1 a + lambda2 b + a x b = 0 for linearly independent a, b
// with dependent triple (a, b, a x b).  The solution is unique.
inline Lambdas solve_lambdas(const Traceless& a, const Traceless& b) {
    Traceless c = cross(a, b);
    if (c.is_zero()) throw CommutingPair("a and b are linearly dependent");
    if (!det(c).is_zero()) throw TripleIndependent("a x b is anisotropic; no linear relation exists");

    // pick an invertible 2x2 subsystem of the 3x2 system [a b] l = -c
    const std::array<Scalar, 3> av{a.a1, a.a2, a.a3}, bv{b.a1, b.a2, b.a3}, cv{c.a1, c.a2, c.a3};
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2) {
            Scalar d = av[r1] * bv[r2] - av[r2] * bv[r1];
            if (d.is_zero()) continue;
            Scalar l1 = ((-cv[r1]) * bv[r2] - (-cv[r2]) * bv[r1]) / d;
            Scalar l2 = (av[r1] * (-cv[r2]) - av[r2] * (-cv[r1])) / d;
            Lambdas l{l1, l2};
            if (!(a * l.lambda1 + b * l.lambda2 + c).is_zero())
                throw InternalError("lambda system inconsistent despite dependent triple");
            // the comparison-of-coefficients identities
            if (l.lambda1 * l.lambda2 != dot(a, b) ||
                l.lambda2 * l.lambda2 != -det(a) ||
                l.lambda1 * l.lambda1 != -det(b))
                throw InternalError("lambda identities violated");
            return l;
        }
    throw CommutingPair("a and b are linearly dependent");
}

// b0 = lambda1 (1 - 2/(a0 - lambda2)).  Derived by substituting the
// lambda identities into the linear relation and separating coefficients;
// the fundamental-equation residual of the resulting pair is zero, which
// pins the sign convention.
inline Scalar b0_from(const Traceless& a, const Traceless& b, const Scalar& a0) {
    Lambdas l = solve_lambdas(a, b);
    Scalar denom = a0 - l.lambda2;
    if (denom.is_zero()) throw PoleAtA0("a0 equals lambda2");
    Scalar two = Scalar::from_int(a0.descriptor(), 2);
    return l.lambda1 * (Scalar::one(a0.descriptor()) - two / denom);
}

// Parameters of the canonical upper-triangular family; a2 = b2 = 0
// implicitly (the plane x1 - x2 = 0 realized in the triangular chart).
struct HyperbolicParams {
    Scalar a0, a1, a3, b1, b3;

    const FieldDescriptor& descriptor() const { return a0.descriptor(); }
};

// A = [[a0+a3, 2a1], [0, a0-a3]],  B = b0 + b with b0 = b3 (1 - 2/(a0+a3))
// (lambda1 = b3, lambda2 = -a3 in the b0 formula above)
inline std::pair<Mat2, Mat2> hyperbolic_family(const HyperbolicParams& p) {
    const FieldDescriptor& d = p.descriptor();
    const Scalar one = Scalar::one(d), two = Scalar::from_int(d, 2);
    if (p.b3.is_zero()) throw InvalidParams("b3 = 0 makes B singular");
    if ((p.a3 * p.b1 - p.a1 * p.b3).is_zero()) throw InvalidParams("a3 b1 - a1 b3 = 0 makes the pair commute");
    if ((p.a0 - p.a3).is_zero() || (p.a0 + p.a3).is_zero()) throw InvalidParams("a0 = +-a3 makes A singular");
    if ((p.a0 - one - p.a3).is_zero() || (p.a0 - one + p.a3).is_zero())
        throw InvalidParams("a0 = 1 +- a3 makes A-1 singular");

    Scalar z = Scalar::zero(d);
    Mat2 A(p.a0 + p.a3, two * p.a1, z, p.a0 - p.a3);
    Scalar b0 = p.b3 * (one - two / (p.a0 + p.a3));
    Mat2 B(b0 + p.b3, two * p.b1, z, b0 - p.b3);

    // the exclusion set above is a fast path; verify directly
    if (det(A).is_zero() || det(B).is_zero() || det(A - Mat2::identity(d)).is_zero())
        throw InternalError("family produced a singular matrix");
    FEReport r = fe_residual(A, B);
    if (r.commuting) throw InternalError("family produced a commuting pair");
    if (!r.is_solution) throw InternalError("family violates the fundamental equation");
    return {A, B};
}

enum class ClassKind { Commuting, NonSolution, Matching, Hyperbolic, Unresolved };

inline std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Commuting: return "commuting";
        case ClassKind::NonSolution: return "not-a-solution";
        case ClassKind::Matching: return "matching";
        case ClassKind::Hyperbolic: return "hyperbolic";
        case ClassKind::Unresolved: return "unresolved";
    }
    return "?";
}

struct Classification {
    ClassKind kind = ClassKind::Unresolved;
    Mat2 witness;             // Hyperbolic: C with C^-1 (A,B) C canonical
    HyperbolicParams params;  // Hyperbolic only
    std::string reason;       // Unresolved only
};

inline std::pair<Mat2, Mat2> conjugate_pair(const Mat2& A, const Mat2& B, const Mat2& C) {
    Mat2 Ci = inverse(C, "conjugator");
    return {Ci * A * C, Ci * B * C};
}

inline Classification classify_pair(const Mat2& A, const Mat2& B) {
    FEReport fe = fe_residual(A, B);  // throws SingularInput for bad inputs
    Classification out;
    if (fe.commuting) {
        out.kind = ClassKind::Commuting;
        return out;
    }
    if (!fe.is_solution) {
        out.kind = ClassKind::NonSolution;
        return out;
    }
    // Theorem statement form of the matching test: tr(A) = det(A), tr(AB^-1) = 0
    if (det(A) == tr(A) && tr(A * inverse(B)).is_zero()) {
        out.kind = ClassKind::Matching;
        return out;
    }

    const FieldDescriptor& d = A.descriptor();
    Traceless a = traceless_part(A), b = traceless_part(B);
    Traceless c = cross(a, b);
    if (!det(c).is_zero()) {
        out.kind = ClassKind::Unresolved;
        out.reason = "a x b is anisotropic: outside both classification branches";
        return out;
    }

    auto can = canonicalize_traceless(c);
    if (!can) {
        out.kind = ClassKind::Unresolved;
        out.reason = "canonicalization needs a square root absent from the field";
        return out;
    }
    Mat2 witness = can->conjugator;
    Traceless ci = can->image;  // (c1, +-c1, 0), c1 != 0
    if (ci.a2 != ci.a1) {
        // flip the i-j ray onto i+j by conjugating with the Pauli j matrix
        witness = witness * Mat2::pauli_j(d);
        ci = group_conjugate(c, witness);
    }
    if (ci.a2 != ci.a1 || !ci.a3.is_zero() || ci.a1.is_zero())
        throw InternalError("isotropic direction not canonicalized to the i+j ray");

    auto [A2, B2] = conjugate_pair(A, B, witness);
    PauliVec pa = to_pauli(A2), pb = to_pauli(B2);
    if (pa.a1 != pa.a2 || pb.a1 != pb.a2)
        throw InternalError("conjugated pair left the x1 = x2 plane");

    HyperbolicParams params{pa.a0, pa.a1, pa.a3, pb.a1, pb.a3};
    try {
        auto [Af, Bf] = hyperbolic_family(params);
        if (Af != A2 || Bf != B2) {
            out.kind = ClassKind::Unresolved;
            out.reason = "canonical family does not reproduce the conjugated pair";
            return out;
        }
    } catch (const InvalidParams& e) {
        out.kind = ClassKind::Unresolved;
        out.reason = std::string("canonical parameters invalid: ") + e.what();
        return out;
    }
    out.kind = ClassKind::Hyperbolic;
    out.witness = witness;
    out.params = params;
    return out;
}

// ---------------------------------------------------------------------------
// Comparison of the two printed forms of B against the generator's.  The
// two printed forms share the canonical A but use b0 = b3 (2/(a0-a3) - 1)
// (worked-example display) respectively lower-right 2 b3 (1/(a0-a3) - 2)
// (theorem display).  The generator uses the derived b0, whose residual is
// zero by construction; the printed forms are tested as raw candidates.

struct BFormComparison {
    bool generator_solves = false;   // b0 = b3 (1 - 2/(a0+a3)), asserted anyway
    bool printed51_solves = false;   // b0 = b3 (2/(a0-a3) - 1)
    bool printed_thm_solves = false; // [[2b3/(a0-a3), 2b1], [0, 2b3(1/(a0-a3)-2)]]
};

inline BFormComparison compare_b_forms(const HyperbolicParams& p) {
    BFormComparison r;
    auto [A, B] = hyperbolic_family(p);  // validates params
    r.generator_solves = fe_residual(A, B).is_solution;

    const FieldDescriptor& d = p.descriptor();
    const Scalar one = Scalar::one(d), two = Scalar::from_int(d, 2);
    Scalar z = Scalar::zero(d);

    auto solves = [&](const Mat2& cand) {
        if (det(cand).is_zero()) return false;
        return fe_residual(A, cand).is_solution;
    };
    Scalar b0p = p.b3 * (two / (p.a0 - p.a3) - one);
    r.printed51_solves = solves(Mat2(b0p + p.b3, two * p.b1, z, b0p - p.b3));

    Scalar inv = one / (p.a0 - p.a3);
    r.printed_thm_solves = solves(Mat2(two * p.b3 * inv, two * p.b1, z, two * p.b3 * (inv - two)));
    return r;
}

// ---------------------------------------------------------------------------
// Finite-field exhaustive census.

struct CensusReport {
    std::uint32_t p = 0;
    std::uint64_t pairs_scanned = 0;
    std::uint64_t fe_solutions = 0;
    std::uint64_t commuting = 0;
    std::uint64_t matching = 0;
    std::uint64_t hyperbolic = 0;
    std::uint64_t unresolved = 0;
    std::uint64_t theorem11_B_discrepancies = 0;
    // extra bookkeeping used by the test suites (not part of the JSON schema)
    std::uint64_t b_form_tuples = 0;
    std::uint64_t generator_failures = 0;
    std::uint64_t printed51_successes = 0;
    std::uint64_t printed_thm_successes = 0;
};

namespace census_detail {

// tiny mod-p 2x2 matrices, independent of the Scalar machinery
struct M2p {
    std::uint32_t a, b, c, d;
};

inline std::uint32_t addp(std::uint32_t x, std::uint32_t y, std::uint32_t p) { return (x + y) % p; }
inline std::uint32_t subp(std::uint32_t x, std::uint32_t y, std::uint32_t p) { return (x + p - y) % p; }
inline std::uint32_t mulp(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p);
}

inline M2p mul(const M2p& x, const M2p& y, std::uint32_t p) {
    return {addp(mulp(x.a, y.a, p), mulp(x.b, y.c, p), p),
            addp(mulp(x.a, y.b, p), mulp(x.b, y.d, p), p),
            addp(mulp(x.c, y.a, p), mulp(x.d, y.c, p), p),
            addp(mulp(x.c, y.b, p), mulp(x.d, y.d, p), p)};
}

inline std::uint32_t detp(const M2p& m, std::uint32_t p) {
    return subp(mulp(m.a, m.d, p), mulp(m.b, m.c, p), p);
}

inline std::uint32_t invp(std::uint32_t x, std::uint32_t p) {
    std::uint64_t b = x, e = p - 2, acc = 1;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

inline M2p inv(const M2p& m, std::uint32_t p) {
    std::uint32_t di = invp(detp(m, p), p);
    return {mulp(m.d, di, p), mulp(subp(0, m.b, p), di, p),
            mulp(subp(0, m.c, p), di, p), mulp(m.a, di, p)};
}

inline bool equal(const M2p& x, const M2p& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

inline Mat2 to_mat2(const M2p& m, const FieldDescriptor& d) {
    return Mat2(Scalar::residue(d, m.a), Scalar::residue(d, m.b),
                Scalar::residue(d, m.c), Scalar::residue(d, m.d));
}

} // namespace census_detail

// Scans all ordered pairs (A, B) in GL2(Fp)^2; pairs where A-1 is singular
// count toward pairs_scanned only.  For the rest: fe_solutions holds every
// pair with zero residual and splits as commuting + matching + hyperbolic
// + unresolved.
inline CensusReport enumerate_solutions(std::uint32_t p) {
    if (p != 3 && p != 5 && p != 7)
        throw ValidationError("census supports p in {3, 5, 7}");
    using namespace census_detail;
    const FieldDescriptor fd = FieldDescriptor::prime(p);

    std::vector<M2p> gl;
    std::vector<M2p> gl_inv;
    std::vector<bool> am1_inv;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    M2p m{a, b, c, d};
                    if (detp(m, p) == 0) continue;
                    gl.push_back(m);
                    gl_inv.push_back(inv(m, p));
                    M2p m1{subp(a, 1, p), b, c, subp(d, 1, p)};
                    am1_inv.push_back(detp(m1, p) != 0);
                }

    CensusReport rep;
    rep.p = p;
    for (std::size_t ia = 0; ia < gl.size(); ++ia) {
        const M2p& A = gl[ia];
        const M2p& Ai = gl_inv[ia];
        for (std::size_t ib = 0; ib < gl.size(); ++ib) {
            const M2p& B = gl[ib];
            ++rep.pairs_scanned;
            if (!am1_inv[ia]) continue;
            const M2p& Bi = gl_inv[ib];
            M2p BAB = mul(mul(Bi, A, p), B, p);
            M2p lhs = mul(Ai, BAB, p);
            M2p rhs = mul(mul(B, mul(Ai, Bi, p), p), A, p);
            // residual = Ai BAB - BAB - B Ai Bi A + A
            M2p res{subp(addp(lhs.a, A.a, p), addp(BAB.a, rhs.a, p), p),
                    subp(addp(lhs.b, A.b, p), addp(BAB.b, rhs.b, p), p),
                    subp(addp(lhs.c, A.c, p), addp(BAB.c, rhs.c, p), p),
                    subp(addp(lhs.d, A.d, p), addp(BAB.d, rhs.d, p), p)};
            if (res.a || res.b || res.c || res.d) continue;
            ++rep.fe_solutions;
            Classification cl = classify_pair(to_mat2(A, fd), to_mat2(B, fd));
            switch (cl.kind) {
                case ClassKind::Commuting: ++rep.commuting; break;
                case ClassKind::Matching: ++rep.matching; break;
                case ClassKind::Hyperbolic: ++rep.hyperbolic; break;
                default: ++rep.unresolved; break;
            }
        }
    }

    // sweep of every valid parameter tuple: which printed B solves the equation
    for (std::uint32_t a0 = 0; a0 < p; ++a0)
        for (std::uint32_t a1 = 0; a1 < p; ++a1)
            for (std::uint32_t a3 = 0; a3 < p; ++a3)
                for (std::uint32_t b1 = 0; b1 < p; ++b1)
                    for (std::uint32_t b3 = 0; b3 < p; ++b3) {
                        HyperbolicParams hp{Scalar::residue(fd, a0), Scalar::residue(fd, a1),
                                            Scalar::residue(fd, a3), Scalar::residue(fd, b1),
                                            Scalar::residue(fd, b3)};
                        BFormComparison cmp;
                        try {
                            cmp = compare_b_forms(hp);
                        } catch (const InvalidParams&) {
                            continue;
                        }
                        ++rep.b_form_tuples;
                        if (!cmp.generator_solves) ++rep.generator_failures;
                        if (cmp.printed51_solves) ++rep.printed51_successes;
                        if (cmp.printed_thm_solves) ++rep.printed_thm_successes;
                        // the theorem-display B fails the equation the generator solves
                        if (cmp.generator_solves && !cmp.printed_thm_solves)
                            ++rep.theorem11_B_discrepancies;
                    }
    return rep;
}

} // namespace quatknot
