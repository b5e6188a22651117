#pragma once

// Seeded pseudo-random sampling of field elements and matrices, shared by
// the property tests and the verify-lemmas CLI sweep.

#include <cstdint>
#include <random>

#include "quat2.hpp"

namespace quatknot {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long small_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Scalar scalar(const FieldDescriptor& d) {
        switch (d.kind) {
            case FieldKind::Rationals: {
                long num = small_int(-9, 9);
                long den = small_int(1, 9);
                return Scalar::rational(mpq_class(num, den));
            }
            case FieldKind::PrimeField:
                return Scalar::from_int(d, small_int(0, static_cast<long>(d.p) - 1));
            case FieldKind::RationalFunctions: {
                Poly num = poly(2), den = poly(1);
                if (den.is_zero()) den = Poly(1);
                return Scalar::rat_fun(d, std::move(num), std::move(den));
            }
        }
        throw InternalError("unreachable field kind");
    }

    Scalar nonzero(const FieldDescriptor& d) {
        for (int tries = 0; tries < 256; ++tries) {
            Scalar s = scalar(d);
            if (!s.is_zero()) return s;
        }
        throw InternalError("sampler failed to draw a nonzero scalar");
    }

    Poly poly(int max_deg) {
        std::vector<mpq_class> c(static_cast<std::size_t>(max_deg) + 1);
        for (auto& q : c) q = small_int(-4, 4);
        return Poly::from_coeffs(std::move(c));
    }

    Traceless traceless(const FieldDescriptor& d) {
        return Traceless(scalar(d), scalar(d), scalar(d));
    }

    Mat2 mat2(const FieldDescriptor& d) {
        return Mat2(scalar(d), scalar(d), scalar(d), scalar(d));
    }

    Mat2 invertible(const FieldDescriptor& d) {
        for (int tries = 0; tries < 256; ++tries) {
            Mat2 m = mat2(d);
            if (!det(m).is_zero()) return m;
        }
        throw InternalError("sampler failed to draw an invertible matrix");
    }

private:
    std::mt19937_64 rng_;
};

} // namespace quatknot
