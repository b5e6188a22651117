#pragma once

// The 2x2 matrix quaternion algebra: Pauli decomposition, adjugate
// conjugation, hyperbolic/euclidean products on traceless parts, the
// dependency predicates, and group-conjugation canonicalization of
// traceless matrices.

#include <array>
#include <optional>
#include <utility>

#include "field.hpp"

namespace quatknot {

class Traceless;

class Mat2 {
public:
    Mat2() = default;
    Mat2(Scalar e11, Scalar e12, Scalar e21, Scalar e22)
        : e11(std::move(e11)), e12(std::move(e12)), e21(std::move(e21)), e22(std::move(e22)) {
        const FieldDescriptor& d = this->e11.descriptor();
        if (this->e12.descriptor() != d || this->e21.descriptor() != d || this->e22.descriptor() != d)
            throw DescriptorMismatch("matrix entries from different fields");
    }

    static Mat2 zero(const FieldDescriptor& d) {
        Scalar z = Scalar::zero(d);
        return Mat2(z, z, z, z);
    }
    static Mat2 identity(const FieldDescriptor& d) {
        Scalar z = Scalar::zero(d), o = Scalar::one(d);
        return Mat2(o, z, z, o);
    }
    static Mat2 scalar(const Scalar& s) {
        Scalar z = Scalar::zero(s.descriptor());
        return Mat2(s, z, z, s);
    }
    // the Pauli generators i, j, k
    static Mat2 pauli_i(const FieldDescriptor& d) {
        Scalar z = Scalar::zero(d), o = Scalar::one(d);
        return Mat2(z, o, -o, z);
    }
    static Mat2 pauli_j(const FieldDescriptor& d) {
        Scalar z = Scalar::zero(d), o = Scalar::one(d);
        return Mat2(z, o, o, z);
    }
    static Mat2 pauli_k(const FieldDescriptor& d) {
        Scalar z = Scalar::zero(d), o = Scalar::one(d);
        return Mat2(o, z, z, -o);
    }

    const FieldDescriptor& descriptor() const { return e11.descriptor(); }

    bool operator==(const Mat2& o) const {
        return e11 == o.e11 && e12 == o.e12 && e21 == o.e21 && e22 == o.e22;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    bool is_zero() const {
        return e11.is_zero() && e12.is_zero() && e21.is_zero() && e22.is_zero();
    }

    Mat2 operator+(const Mat2& o) const {
        return Mat2(e11 + o.e11, e12 + o.e12, e21 + o.e21, e22 + o.e22);
    }
    Mat2 operator-(const Mat2& o) const {
        return Mat2(e11 - o.e11, e12 - o.e12, e21 - o.e21, e22 - o.e22);
    }
    Mat2 operator-() const { return Mat2(-e11, -e12, -e21, -e22); }
    Mat2 operator*(const Mat2& o) const {
        return Mat2(e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
                    e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22);
    }
    Mat2 operator*(const Scalar& s) const {
        return Mat2(e11 * s, e12 * s, e21 * s, e22 * s);
    }

    Scalar e11, e12, e21, e22;
};

struct PauliVec {
    Scalar a0, a1, a2, a3;
};

// the traceless part, as Pauli coordinates (a1, a2, a3)
class Traceless {
public:
    Traceless() = default;
    Traceless(Scalar a1, Scalar a2, Scalar a3)
        : a1(std::move(a1)), a2(std::move(a2)), a3(std::move(a3)) {}

    static Traceless zero(const FieldDescriptor& d) {
        Scalar z = Scalar::zero(d);
        return Traceless(z, z, z);
    }
    static Traceless basis_i(const FieldDescriptor& d) {
        return Traceless(Scalar::one(d), Scalar::zero(d), Scalar::zero(d));
    }
    static Traceless basis_j(const FieldDescriptor& d) {
        return Traceless(Scalar::zero(d), Scalar::one(d), Scalar::zero(d));
    }
    static Traceless basis_k(const FieldDescriptor& d) {
        return Traceless(Scalar::zero(d), Scalar::zero(d), Scalar::one(d));
    }

    const FieldDescriptor& descriptor() const { return a1.descriptor(); }

    bool operator==(const Traceless& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3;
    }
    bool operator!=(const Traceless& o) const { return !(*this == o); }
    bool is_zero() const { return a1.is_zero() && a2.is_zero() && a3.is_zero(); }

    Traceless operator+(const Traceless& o) const {
        return Traceless(a1 + o.a1, a2 + o.a2, a3 + o.a3);
    }
    Traceless operator-(const Traceless& o) const {
        return Traceless(a1 - o.a1, a2 - o.a2, a3 - o.a3);
    }
    Traceless operator-() const { return Traceless(-a1, -a2, -a3); }
    Traceless operator*(const Scalar& s) const {
        return Traceless(a1 * s, a2 * s, a3 * s);
    }

    Scalar a1, a2, a3;
};

// ---------------------------------------------------------------------------
// Pauli basis conversions

inline Mat2 from_pauli(const PauliVec& v) {
    return Mat2(v.a0 + v.a3, v.a2 + v.a1, v.a2 - v.a1, v.a0 - v.a3);
}

inline PauliVec to_pauli(const Mat2& m) {
    Scalar half = Scalar::from_int(m.descriptor(), 2).inverse();
    return PauliVec{(m.e11 + m.e22) * half, (m.e12 - m.e21) * half,
                    (m.e12 + m.e21) * half, (m.e11 - m.e22) * half};
}

inline Traceless traceless_part(const Mat2& m) {
    PauliVec v = to_pauli(m);
    return Traceless(std::move(v.a1), std::move(v.a2), std::move(v.a3));
}

inline Scalar scalar_part(const Mat2& m) {
    return (m.e11 + m.e22) * Scalar::from_int(m.descriptor(), 2).inverse();
}

inline Mat2 to_mat2(const Traceless& a) {
    Scalar z = Scalar::zero(a.descriptor());
    return from_pauli(PauliVec{z, a.a1, a.a2, a.a3});
}

inline Mat2 compose(const Scalar& a0, const Traceless& a) {
    return from_pauli(PauliVec{a0, a.a1, a.a2, a.a3});
}

// ---------------------------------------------------------------------------
// Basic algebra

inline Mat2 conjugate(const Mat2& m) {
    return Mat2(m.e22, -m.e12, -m.e21, m.e11);
}

inline Scalar det(const Mat2& m) { return m.e11 * m.e22 - m.e12 * m.e21; }
inline Scalar tr(const Mat2& m) { return m.e11 + m.e22; }

inline Mat2 inverse(const Mat2& m, const char* name = "matrix") {
    Scalar d = det(m);
    if (d.is_zero()) throw SingularMatrix(std::string(name) + " is singular");
    return conjugate(m) * d.inverse();
}

inline bool is_invertible(const Mat2& m) { return !det(m).is_zero(); }

// bilinear form, (1/2) tr(A conj(B)); its quadratic form is det
inline Scalar dot(const Mat2& a, const Mat2& b) {
    Scalar half = Scalar::from_int(a.descriptor(), 2).inverse();
    return (a.e11 * b.e22 - a.e12 * b.e21 - a.e21 * b.e12 + a.e22 * b.e11) * half;
}

// hyperbolic products on traceless parts
inline Scalar dot(const Traceless& a, const Traceless& b) {
    return a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3;
}

inline Scalar det(const Traceless& a) { return dot(a, a); }

inline Traceless cross(const Traceless& a, const Traceless& b) {
    return Traceless(-(a.a2 * b.a3 - a.a3 * b.a2),
                     a.a3 * b.a1 - a.a1 * b.a3,
                     a.a1 * b.a2 - a.a2 * b.a1);
}

// euclidean variants and the cone involution rho
inline Scalar dot_e(const Traceless& a, const Traceless& b) {
    return a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3;
}

inline Traceless cross_e(const Traceless& a, const Traceless& b) {
    return Traceless(a.a2 * b.a3 - a.a3 * b.a2,
                     a.a3 * b.a1 - a.a1 * b.a3,
                     a.a1 * b.a2 - a.a2 * b.a1);
}

inline Traceless rho(const Traceless& a) { return Traceless(-a.a1, a.a2, a.a3); }

// scalar triple product, the negated 3x3 component determinant
inline Scalar triple(const Traceless& a, const Traceless& b, const Traceless& c) {
    return dot(a, cross(b, c));
}

// ---------------------------------------------------------------------------
// Dependency predicates

inline bool is_isotropic(const Traceless& a) {
    return !a.is_zero() && det(a).is_zero();
}

inline bool pair_dependent(const Traceless& a, const Traceless& b) {
    return cross(a, b).is_zero();
}

// the triple a, b, a x b is linearly dependent
inline bool triple_dependent(const Traceless& a, const Traceless& b) {
    return (det(a) * det(b)) == (dot(a, b) * dot(a, b));
}

inline bool commutes(const Mat2& a, const Mat2& b) {
    return pair_dependent(traceless_part(a), traceless_part(b));
}

// ---------------------------------------------------------------------------
// Group conjugation

inline Mat2 group_conjugate(const Mat2& m, const Mat2& c) {
    return inverse(c, "conjugator") * m * c;
}

inline Traceless group_conjugate(const Traceless& a, const Mat2& c) {
    return traceless_part(group_conjugate(to_mat2(a), c));
}

// Result of canonicalizing a traceless matrix into the a3 = 0 chart.
struct CanonicalTraceless {
    Mat2 conjugator;     // invertible C with C^-1 a C = image
    Traceless image;     // has a3 = 0
};

// Finds C with C^-1 a C of the form a1' i + a2' j.  Returns nullopt
// (NeedsExtension) when sqrt(a2^2 + a3^2) does not exist in the field;
// that is the only way the construction can fail.
inline std::optional<CanonicalTraceless> canonicalize_traceless(const Traceless& a) {
    if (a.is_zero()) throw ZeroInput("cannot canonicalize the zero matrix");
    const FieldDescriptor& d = a.descriptor();
    if (a.a3.is_zero())
        return CanonicalTraceless{Mat2::identity(d), a};

    Scalar s = a.a2 * a.a2 + a.a3 * a.a3;
    if (!s.is_zero()) {
        auto r = s.sqrt();
        if (!r) return std::nullopt;
        // C = (-a2 + r) - a3 i
        Mat2 c = Mat2::scalar(-a.a2 + *r) + Mat2::pauli_i(d) * (-a.a3);
        if (det(c).is_zero()) throw InternalError("degenerate canonicalizing conjugator");
        Traceless img = group_conjugate(a, c);
        if (!img.a3.is_zero()) throw InternalError("canonicalization missed the a3 = 0 chart");
        return CanonicalTraceless{c, img};
    }

    // a2^2 + a3^2 = 0 with a2, a3 nonzero: the field contains I = a3/a2 with
    // I^2 = -1, so no extension is needed.  The literal conjugator 1 + I i has
    // determinant 1 + I^2 = 0; build an invertible one from the eigenstructure
    // of a instead.
    Scalar I = a.a3 / a.a2;
    Mat2 am = to_mat2(a);
    Mat2 c = Mat2::identity(d);
    if (a.a1.is_zero()) {
        // a is nilpotent; basis (w, v) with v spanning the kernel
        // v = (1, -I), w = (1, 0)
        Scalar z = Scalar::zero(d), o = Scalar::one(d);
        c = Mat2(o, o, z, -I);
    } else {
        // distinct eigenvalues +-I a1; C = [u1 + u2, u1 - u2] has the
        // eigen-pair acting antidiagonally
        Scalar mu = I * a.a1;
        auto kernel_vec = [&](const Mat2& m) -> std::pair<Scalar, Scalar> {
            if (!m.e11.is_zero() || !m.e12.is_zero()) return {m.e12, -m.e11};
            return {m.e22, -m.e21};
        };
        auto [u1x, u1y] = kernel_vec(am - Mat2::scalar(mu));
        auto [u2x, u2y] = kernel_vec(am - Mat2::scalar(-mu));
        c = Mat2(u1x + u2x, u1x - u2x, u1y + u2y, u1y - u2y);
    }
    if (det(c).is_zero()) throw InternalError("degenerate canonicalizing conjugator");
    Traceless img = group_conjugate(a, c);
    if (!img.a3.is_zero()) throw InternalError("canonicalization missed the a3 = 0 chart");
    return CanonicalTraceless{c, img};
}

} // namespace quatknot
