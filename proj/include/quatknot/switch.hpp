#pragma once

// The fundamental equation, switch construction, the set-theoretic
// Yang-Baxter check on the rank-6 module, and the invertibility report.

#include <string>
#include <utility>

#include "matn.hpp"
#include "quat2.hpp"

namespace quatknot {

enum class SwitchTag { CommutativeType0, CommutativeType1, NonCommutative, Raw };

inline std::string to_string(SwitchTag t) {
    switch (t) {
        case SwitchTag::CommutativeType0: return "commutative0";
        case SwitchTag::CommutativeType1: return "commutative1";
        case SwitchTag::NonCommutative: return "noncommutative";
        case SwitchTag::Raw: return "raw";
    }
    return "?";
}

inline SwitchTag switch_tag_from_string(const std::string& s) {
    if (s == "commutative0") return SwitchTag::CommutativeType0;
    if (s == "commutative1") return SwitchTag::CommutativeType1;
    if (s == "noncommutative") return SwitchTag::NonCommutative;
    if (s == "raw") return SwitchTag::Raw;
    throw ValidationError("unknown switch tag: " + s);
}

struct Switch {
    Mat2 A, B, C, D;
    SwitchTag tag = SwitchTag::Raw;

    const FieldDescriptor& descriptor() const { return A.descriptor(); }

    MatN as_mat4() const {
        MatN m(descriptor(), 4, 4);
        m.set_block2(0, 0, A);
        m.set_block2(0, 1, B);
        m.set_block2(1, 0, C);
        m.set_block2(1, 1, D);
        return m;
    }
};

struct FEReport {
    Mat2 residual;
    bool is_solution = false;
    bool is_matching = false;
    bool commuting = false;
};

// residual of A^-1 B^-1 A B - B^-1 A B - B A^-1 B^-1 A + A
inline FEReport fe_residual(const Mat2& A, const Mat2& B) {
    if (det(A).is_zero()) throw SingularInput("A is singular");
    if (det(B).is_zero()) throw SingularInput("B is singular");
    Mat2 AmI = A - Mat2::identity(A.descriptor());
    if (det(AmI).is_zero()) throw SingularInput("A-1 is singular");
    Mat2 Ai = inverse(A), Bi = inverse(B);
    Mat2 BAB = Bi * A * B;
    FEReport r;
    r.residual = Ai * BAB - BAB - B * Ai * Bi * A + A;
    r.is_solution = r.residual.is_zero();
    r.is_matching = (det(A) == tr(A)) && dot(A, B).is_zero();
    r.commuting = commutes(A, B);
    return r;
}

// the linear relation implied by the fundamental equation:
// (trA - detA) det(b) a + (detA - trA)(a.b) b + (b0 (detA - trA) + 2 A.B) a x b
inline Traceless linear_relation_residual(const Mat2& A, const Mat2& B) {
    if (det(A).is_zero()) throw SingularInput("A is singular");
    if (det(B).is_zero()) throw SingularInput("B is singular");
    if (det(A - Mat2::identity(A.descriptor())).is_zero()) throw SingularInput("A-1 is singular");
    Traceless a = traceless_part(A), b = traceless_part(B);
    Scalar b0 = scalar_part(B);
    Scalar dmt = det(A) - tr(A);
    Scalar two = Scalar::from_int(A.descriptor(), 2);
    Traceless r = a * ((-dmt) * det(b)) + b * (dmt * dot(a, b)) +
                  cross(a, b) * (b0 * dmt + two * dot(A, B));
    return r;
}

// exact check of (S x id)(id x S)(S x id) = (id x S)(S x id)(id x S) on X^3
inline bool yang_baxter_check(const Switch& s) {
    const FieldDescriptor& d = s.descriptor();
    MatN sx = MatN::identity(d, 6);  // S x id
    sx.set_block2(0, 0, s.A);
    sx.set_block2(0, 1, s.B);
    sx.set_block2(1, 0, s.C);
    sx.set_block2(1, 1, s.D);
    MatN xs = MatN::identity(d, 6);  // id x S
    xs.set_block2(1, 1, s.A);
    xs.set_block2(1, 2, s.B);
    xs.set_block2(2, 1, s.C);
    xs.set_block2(2, 2, s.D);
    return sx * xs * sx == xs * sx * xs;
}

inline Switch make_noncommutative_switch(const Mat2& A, const Mat2& B) {
    FEReport r = fe_residual(A, B);  // throws SingularInput as needed
    if (r.commuting) throw CommutingPair("A and B commute");
    if (!r.is_solution) throw NotASolution("pair does not satisfy the fundamental equation");
    Mat2 I = Mat2::identity(A.descriptor());
    Mat2 Ai = inverse(A), Bi = inverse(B);
    Switch s;
    s.A = A;
    s.B = B;
    s.C = Ai * Bi * A * (I - A);
    s.D = I - Ai * Bi * A * B;
    s.tag = SwitchTag::NonCommutative;
    if (!yang_baxter_check(s)) throw InternalError("constructed switch fails the Yang-Baxter check");
    return s;
}

enum class CommutativeVariant { Type0, Type1 };

inline Switch make_commutative_switch(const Mat2& B, const Mat2& C, CommutativeVariant variant) {
    if (det(B).is_zero()) throw SingularInput("B is singular");
    if (det(C).is_zero()) throw SingularInput("C is singular");
    if (!commutes(B, C)) throw NonCommutingInputs("B and C must commute");
    const FieldDescriptor& d = B.descriptor();
    Mat2 I = Mat2::identity(d);
    Switch s;
    s.B = B;
    s.C = C;
    if (variant == CommutativeVariant::Type0) {
        s.A = Mat2::zero(d);
        s.D = I - B * C;
        s.tag = SwitchTag::CommutativeType0;
    } else {
        s.A = I - B * C;
        s.D = Mat2::zero(d);
        s.tag = SwitchTag::CommutativeType1;
    }
    if (!yang_baxter_check(s)) throw InternalError("constructed switch fails the Yang-Baxter check");
    return s;
}

// the A,D / B,C interchanged companion solution
inline Switch transpose_variant(const Switch& s) {
    Switch t;
    t.A = s.D;
    t.B = s.C;
    t.C = s.B;
    t.D = s.A;
    t.tag = s.tag;
    if (!yang_baxter_check(t)) throw InternalError("transpose variant fails the Yang-Baxter check");
    return t;
}

struct InvertibilityReport {
    bool A = false;
    bool B = false;
    bool AminusI = false;
    bool S = false;
    bool DeltaPrime = false;
};

// Reports invertibility of the switch pieces.  DeltaPrime is evaluated both
// as C^-1 D - A^-1 B and through the closed form (1-A)^-1 A^-1 B (A-1);
// when both routes are available they must agree.
inline InvertibilityReport invertibility_report(const Switch& s) {
    InvertibilityReport r;
    const FieldDescriptor& d = s.descriptor();
    Mat2 I = Mat2::identity(d);
    r.A = is_invertible(s.A);
    r.B = is_invertible(s.B);
    r.AminusI = is_invertible(s.A - I);
    r.S = s.as_mat4().is_invertible();

    bool have_def = is_invertible(s.C) && r.A;
    // the closed form assumes the noncommutative C, D formulas
    bool have_closed = s.tag == SwitchTag::NonCommutative && r.A && r.B && r.AminusI;
    if (have_def) {
        Mat2 dp = inverse(s.C) * s.D - inverse(s.A) * s.B;
        r.DeltaPrime = is_invertible(dp);
        if (have_closed) {
            Mat2 closed = inverse(I - s.A) * inverse(s.A) * s.B * (s.A - I);
            if (dp != closed) throw InternalError("DeltaPrime forms disagree");
        }
    } else if (have_closed) {
        Mat2 closed = inverse(I - s.A) * inverse(s.A) * s.B * (s.A - I);
        r.DeltaPrime = is_invertible(closed);
    }
    return r;
}

} // namespace quatknot
