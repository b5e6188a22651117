#pragma once

// Exact field arithmetic: Q, F_p (odd prime) and the rational function
// field Q(t), together with the univariate polynomial utilities used by
// the invariant engine.  Every value is canonical on construction, so
// equality is plain representation equality.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace quatknot {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;     // PrimeField only
    std::string var = "t";   // RationalFunctions only

    static FieldDescriptor rationals() { return FieldDescriptor{}; }

    static FieldDescriptor prime(std::uint32_t p) {
        if (p < 3 || p > 65536u || p % 2 == 0)
            throw ValidationError("prime field requires an odd prime in [3, 2^16]");
        for (std::uint32_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw ValidationError("not a prime: " + std::to_string(p));
        FieldDescriptor fd;
        fd.kind = FieldKind::PrimeField;
        fd.p = p;
        return fd;
    }

    static FieldDescriptor rational_functions(std::string var = "t") {
        FieldDescriptor fd;
        fd.kind = FieldKind::RationalFunctions;
        fd.var = std::move(var);
        return fd;
    }

    bool operator==(const FieldDescriptor& o) const {
        return kind == o.kind && p == o.p &&
               (kind != FieldKind::RationalFunctions || var == o.var);
    }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case FieldKind::Rationals: return "q";
            case FieldKind::PrimeField: return "fp:" + std::to_string(p);
            case FieldKind::RationalFunctions: return "qt";
        }
        return "?";
    }

    // Accepts the CLI spelling: q | fp:<p> | qt
    static FieldDescriptor parse(const std::string& s) {
        if (s == "q") return rationals();
        if (s == "qt") return rational_functions();
        if (s.rfind("fp:", 0) == 0) {
            try {
                return prime(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
            } catch (const std::logic_error&) {
                throw SyntaxError("bad prime in field descriptor: " + s);
            }
        }
        throw SyntaxError("unknown field descriptor: " + s);
    }
};

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, dense, trailing zeros stripped.

class Poly {
public:
    Poly() = default;

    explicit Poly(const mpq_class& c) {
        if (c != 0) c_.push_back(c);
    }

    explicit Poly(long n) : Poly(mpq_class(n)) {}

    static Poly from_coeffs(std::vector<mpq_class> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    // c * t^k
    static Poly term(const mpq_class& c, std::size_t k) {
        if (c == 0) return Poly();
        std::vector<mpq_class> v(k + 1, mpq_class(0));
        v[k] = c;
        return from_coeffs(std::move(v));
    }

    static Poly variable() { return term(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    // degree of 0 is the sentinel -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    mpq_class coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : mpq_class(0);
    }
    mpq_class leading() const {
        return c_.empty() ? mpq_class(0) : c_.back();
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
        return from_coeffs(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<mpq_class> v(c_.size() + o.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        return from_coeffs(std::move(v));
    }

    Poly operator*(const mpq_class& s) const {
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        q = Poly();
        r = a;
        const int db = b.degree();
        const mpq_class lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            const int k = r.degree() - db;
            const mpq_class f = r.leading() / lb;
            Poly t = term(f, static_cast<std::size_t>(k));
            q = q + t;
            r = r - t * b;
        }
    }

    // exact division; throws InternalError on nonzero remainder
    Poly exact_div(const Poly& b) const {
        Poly q, r;
        divmod(*this, b, q, r);
        if (!r.is_zero()) throw InternalError("inexact polynomial division");
        return q;
    }

    bool divisible_by(const Poly& b) const {
        if (b.is_zero()) return is_zero();
        Poly q, r;
        divmod(*this, b, q, r);
        return r.is_zero();
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (mpq_class(1) / leading());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<mpq_class> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
        return from_coeffs(std::move(v));
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // Scales to integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive_int() const {
        if (is_zero()) return *this;
        mpz_class den_lcm = 1;
        for (const auto& q : c_) {
            mpz_class d = q.get_den();
            den_lcm = den_lcm / ::gcd(den_lcm, d) * d;
        }
        std::vector<mpq_class> v = c_;
        for (auto& q : v) q *= den_lcm;
        mpz_class g = 0;
        for (const auto& q : v) g = ::gcd(g, mpz_class(q.get_num()));
        if (g != 0)
            for (auto& q : v) q /= g;
        Poly r = from_coeffs(std::move(v));
        if (r.leading() < 0) r = -r;
        return r;
    }

    // monic gcd; gcd(0,0) = 0
    static Poly gcd(const Poly& a, const Poly& b) {
        Poly x = a, y = b;
        while (!y.is_zero()) {
            Poly q, r;
            divmod(x, y, q, r);
            x = y;
            y = r.monic();  // keeps coefficient growth in check
        }
        return x.monic();
    }

    // monic square root if one exists
    std::optional<Poly> sqrt_monic() const {
        if (is_zero()) return Poly();
        if (leading() != 1) return std::nullopt;
        const int d = degree();
        if (d % 2 != 0) return std::nullopt;
        const std::size_t m = static_cast<std::size_t>(d / 2);
        std::vector<mpq_class> s(m + 1, mpq_class(0));
        s[m] = 1;
        for (std::size_t k = 1; k <= m; ++k) {
            // coefficient of t^(2m-k) determines s[m-k]
            mpq_class acc = 0;
            for (std::size_t i = m - k + 1; i < m; ++i) {
                const std::size_t j = 2 * m - k - i;
                if (j > m || j <= m - k) continue;
                acc += s[i] * s[j];
            }
            s[m - k] = (coeff(2 * m - k) - acc) / 2;
        }
        Poly cand = from_coeffs(std::move(s));
        if (cand * cand == *this) return cand;
        return std::nullopt;
    }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

// monic gcd of two polynomials (free-function spelling used by the invariant code)
inline Poly poly_gcd(const Poly& a, const Poly& b) { return Poly::gcd(a, b); }

// Divides out every factor of p that lies in unit_factors (full multiplicity),
// then scales to integer-primitive with positive leading coefficient.
inline Poly poly_normalize(const Poly& p, const std::vector<Poly>& unit_factors) {
    if (p.is_zero()) return p;
    Poly r = p;
    for (const auto& u : unit_factors) {
        if (u.is_constant()) continue;
        while (r.degree() >= u.degree() && r.divisible_by(u)) r = r.exact_div(u);
    }
    return r.primitive_int();
}

// Splits p into pairwise-coprime squarefree monic factors (radical decomposition,
// no irreducible factorization needed).  Constants are dropped.
inline std::vector<Poly> poly_squarefree_factors(const Poly& p) {
    std::vector<Poly> out;
    if (p.is_constant()) return out;
    Poly radical = p.exact_div(Poly::gcd(p, p.derivative())).monic();
    if (!radical.is_constant()) out.push_back(radical);
    return out;
}

// Merges f into a pairwise-coprime list of monic factors.
inline void merge_coprime_factor(std::vector<Poly>& basis, Poly f) {
    f = f.monic();
    if (f.is_constant()) return;
    for (std::size_t i = 0; i < basis.size() && !f.is_constant(); ++i) {
        Poly g = Poly::gcd(basis[i], f);
        if (g.is_constant()) continue;
        if (g == basis[i]) {
            f = f.exact_div(g).monic();
            continue;
        }
        // split basis[i]
        Poly rest = basis[i].exact_div(g).monic();
        basis[i] = g;
        if (!rest.is_constant()) basis.push_back(rest);
        f = f.exact_div(g).monic();
    }
    if (!f.is_constant()) basis.push_back(f);
}

// ---------------------------------------------------------------------------
// Reduced rational functions over Q: num/den with monic denominator.

struct RatFun {
    Poly num;
    Poly den = Poly(1);

    RatFun() = default;
    RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        reduce();
    }

    void reduce() {
        if (num.is_zero()) {
            den = Poly(1);
            return;
        }
        Poly g = Poly::gcd(num, den);
        if (!g.is_constant()) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        mpq_class lc = den.leading();
        if (lc != 1) {
            mpq_class inv = mpq_class(1) / lc;
            num = num * inv;
            den = den * inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

// ---------------------------------------------------------------------------
// Scalar: a tagged exact field element.

class Scalar {
public:
    Scalar() : desc_(FieldDescriptor::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const FieldDescriptor& d) { return from_int(d, 0); }
    static Scalar one(const FieldDescriptor& d) { return from_int(d, 1); }

    static Scalar from_int(const FieldDescriptor& d, long n) {
        Scalar s;
        s.desc_ = d;
        switch (d.kind) {
            case FieldKind::Rationals: s.v_ = mpq_class(n); break;
            case FieldKind::PrimeField: {
                long r = n % static_cast<long>(d.p);
                if (r < 0) r += d.p;
                s.v_ = static_cast<std::uint32_t>(r);
                break;
            }
            case FieldKind::RationalFunctions: s.v_ = RatFun(Poly(n), Poly(1)); break;
        }
        return s;
    }

    static Scalar rational(mpq_class q) {
        q.canonicalize();
        Scalar s;
        s.desc_ = FieldDescriptor::rationals();
        s.v_ = std::move(q);
        return s;
    }

    static Scalar residue(const FieldDescriptor& d, const mpz_class& n) {
        if (d.kind != FieldKind::PrimeField) throw DescriptorMismatch("residue() needs a prime field");
        mpz_class r = n % d.p;
        if (r < 0) r += d.p;
        Scalar s;
        s.desc_ = d;
        s.v_ = static_cast<std::uint32_t>(r.get_ui());
        return s;
    }

    static Scalar rat_fun(const FieldDescriptor& d, Poly num, Poly den = Poly(1)) {
        if (d.kind != FieldKind::RationalFunctions)
            throw DescriptorMismatch("rat_fun() needs a rational function field");
        Scalar s;
        s.desc_ = d;
        s.v_ = RatFun(std::move(num), std::move(den));
        return s;
    }

    const FieldDescriptor& descriptor() const { return desc_; }

    bool is_zero() const {
        switch (desc_.kind) {
            case FieldKind::Rationals: return rat() == 0;
            case FieldKind::PrimeField: return res() == 0;
            case FieldKind::RationalFunctions: return fn().is_zero();
        }
        return false;
    }
    bool is_one() const { return *this == one(desc_); }

    bool operator==(const Scalar& o) const {
        if (desc_ != o.desc_) return false;
        return v_ == o.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        Scalar s = *this;
        switch (desc_.kind) {
            case FieldKind::Rationals: s.v_ = mpq_class(-rat()); break;
            case FieldKind::PrimeField: s.v_ = res() == 0 ? 0u : desc_.p - res(); break;
            case FieldKind::RationalFunctions: {
                RatFun f = fn();
                f.num = -f.num;
                s.v_ = std::move(f);
                break;
            }
        }
        return s;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s = *this;
        switch (desc_.kind) {
            case FieldKind::Rationals: s.v_ = mpq_class(rat() + o.rat()); break;
            case FieldKind::PrimeField:
                s.v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res()) + o.res()) % desc_.p);
                break;
            case FieldKind::RationalFunctions: {
                const RatFun &a = fn(), &b = o.fn();
                s.v_ = RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
                break;
            }
        }
        return s;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s = *this;
        switch (desc_.kind) {
            case FieldKind::Rationals: s.v_ = mpq_class(rat() * o.rat()); break;
            case FieldKind::PrimeField:
                s.v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(res()) * o.res() % desc_.p);
                break;
            case FieldKind::RationalFunctions: {
                const RatFun &a = fn(), &b = o.fn();
                s.v_ = RatFun(a.num * b.num, a.den * b.den);
                break;
            }
        }
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        Scalar s = *this;
        switch (desc_.kind) {
            case FieldKind::Rationals: s.v_ = mpq_class(1 / rat()); break;
            case FieldKind::PrimeField: {
                // Fermat; p is prime and res() != 0
                std::uint64_t b = res(), e = desc_.p - 2, acc = 1;
                while (e) {
                    if (e & 1) acc = acc * b % desc_.p;
                    b = b * b % desc_.p;
                    e >>= 1;
                }
                s.v_ = static_cast<std::uint32_t>(acc);
                break;
            }
            case FieldKind::RationalFunctions: {
                const RatFun& a = fn();
                s.v_ = RatFun(a.den, a.num);
                break;
            }
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    // canonical square root if one exists in the field
    std::optional<Scalar> sqrt() const {
        switch (desc_.kind) {
            case FieldKind::Rationals: {
                const mpq_class& q = rat();
                if (q == 0) return zero(desc_);
                if (q < 0) return std::nullopt;
                mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
                if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 2)) return std::nullopt;
                if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 2)) return std::nullopt;
                return rational(mpq_class(rn, rd));
            }
            case FieldKind::PrimeField: {
                const std::uint32_t x = res();
                if (x == 0) return zero(desc_);
                for (std::uint32_t r = 1; r <= desc_.p / 2; ++r)
                    if (static_cast<std::uint64_t>(r) * r % desc_.p == x)
                        return residue(desc_, r);  // least residue root
                return std::nullopt;
            }
            case FieldKind::RationalFunctions: {
                const RatFun& f = fn();
                if (f.is_zero()) return zero(desc_);
                const mpq_class lc = f.num.leading();
                Poly n1 = f.num.monic();
                auto sn = n1.sqrt_monic();
                if (!sn) return std::nullopt;
                auto sd = f.den.sqrt_monic();
                if (!sd) return std::nullopt;
                if (lc < 0) return std::nullopt;
                mpz_class cn, cd;
                if (!mpz_root(cn.get_mpz_t(), mpz_class(lc.get_num()).get_mpz_t(), 2)) return std::nullopt;
                if (!mpz_root(cd.get_mpz_t(), mpz_class(lc.get_den()).get_mpz_t(), 2)) return std::nullopt;
                return rat_fun(desc_, *sn * mpq_class(cn, cd), *sd);
            }
        }
        return std::nullopt;
    }

    // accessors for the underlying representation
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::uint32_t res() const { return std::get<std::uint32_t>(v_); }
    const RatFun& fn() const { return std::get<RatFun>(v_); }

    std::string str() const;

private:
    void check(const Scalar& o) const {
        if (desc_ != o.desc_) throw DescriptorMismatch("scalars from different fields");
    }

    FieldDescriptor desc_;
    std::variant<mpq_class, std::uint32_t, RatFun> v_;
};

// ---------------------------------------------------------------------------
// Printing.  The output round-trips through parse_scalar.

namespace detail {

inline std::string mpq_str(const mpq_class& q) { return q.get_str(); }

// one poly term; `parens` forces (a/b) around fractional coefficients
inline void append_term(std::string& out, const mpq_class& c, std::size_t k,
                        const std::string& var, bool first) {
    mpq_class a = c;
    if (first) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    const bool frac = a.get_den() != 1;
    if (k == 0) {
        if (frac && !first) {
            out += "(" + mpq_str(a) + ")";
        } else if (frac) {
            out += mpq_str(a);
        } else {
            out += mpq_str(a);
        }
        return;
    }
    if (a != 1) {
        if (frac)
            out += "(" + mpq_str(a) + ")";
        else
            out += mpq_str(a);
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
}

} // namespace detail

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {  // high degree first
        if (c_[i] == 0) continue;
        detail::append_term(out, c_[i], i, var, first);
        first = false;
    }
    return out;
}

namespace detail {

inline bool single_term(const Poly& p) {
    int n = 0;
    for (const auto& q : p.coeffs())
        if (q != 0) ++n;
    return n <= 1;
}

inline std::string ratfun_side(const Poly& p, const std::string& var) {
    std::string s = p.str(var);
    if (!single_term(p)) return "(" + s + ")";
    // a bare fraction coefficient would introduce a stray top-level '/'
    if (s.find('/') != std::string::npos) return "(" + s + ")";
    return s;
}

} // namespace detail

inline std::string Scalar::str() const {
    switch (desc_.kind) {
        case FieldKind::Rationals: return detail::mpq_str(rat());
        case FieldKind::PrimeField: return std::to_string(res());
        case FieldKind::RationalFunctions: {
            const RatFun& f = fn();
            if (f.den.is_one()) return f.num.str(desc_.var);
            return detail::ratfun_side(f.num, desc_.var) + "/" + detail::ratfun_side(f.den, desc_.var);
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Scalar literal parsing (grammar shared by CLI and JSON files).

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError(what + " at position " + std::to_string(pos));
    }
};

inline mpz_class parse_uint(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) c.fail("expected digits");
    return mpz_class(c.s.substr(start, c.pos - start));
}

// int or int/int, optionally wrapped in parens; sign allowed
inline mpq_class parse_rational_core(Cursor& c) {
    bool neg = false;
    if (c.eat('-')) neg = true;
    else c.eat('+');
    if (c.eat('(')) {
        mpq_class inner = parse_rational_core(c);
        if (!c.eat(')')) c.fail("expected ')'");
        return neg ? mpq_class(-inner) : inner;
    }
    mpz_class num = parse_uint(c);
    mpq_class q(num);
    if (c.peek() == '/') {
        ++c.pos;
        mpz_class den = parse_uint(c);
        if (den == 0) throw DivisionByZero("zero denominator in literal");
        q = mpq_class(num, den);
        q.canonicalize();
    }
    return neg ? mpq_class(-q) : q;
}

// term := coef [var ['^' uint]] | var ['^' uint]
// poly := [sign] term ((+|-) term)*
inline Poly parse_poly_expr(Cursor& c, const std::string& var, int* terms_out = nullptr) {
    Poly acc;
    int terms = 0;
    bool first = true;
    while (true) {
        c.skip_ws();
        mpq_class sign = 1;
        if (c.peek() == '-') {
            ++c.pos;
            sign = -1;
        } else if (c.peek() == '+') {
            ++c.pos;
        } else if (!first) {
            break;
        }
        c.skip_ws();
        mpq_class coef = 1;
        bool have_coef = false;
        if (c.peek() == '(' || std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = parse_rational_core(c);
            have_coef = true;
        }
        std::size_t k = 0;
        c.skip_ws();
        if (c.s.compare(c.pos, var.size(), var) == 0) {
            c.pos += var.size();
            k = 1;
            if (c.peek() == '^') {
                ++c.pos;
                k = parse_uint(c).get_ui();
            }
        } else if (!have_coef) {
            c.fail("expected coefficient or variable");
        }
        acc = acc + Poly::term(sign * coef, k);
        ++terms;
        first = false;
        c.skip_ws();
        if (c.pos >= c.s.size() || (c.s[c.pos] != '+' && c.s[c.pos] != '-')) break;
    }
    if (terms_out) *terms_out = terms;
    return acc;
}

// a ratfun side: either parenthesized poly, or a single-term poly
inline Poly parse_ratfun_side(const std::string& text, const std::string& var) {
    std::string s = text;
    // strip one matched outer paren pair if it spans the whole side
    auto spans = [&](const std::string& t) {
        if (t.empty() || t.front() != '(' || t.back() != ')') return false;
        int depth = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '(') ++depth;
            if (t[i] == ')') {
                --depth;
                if (depth == 0) return i + 1 == t.size();
            }
        }
        return false;
    };
    // trim
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    bool neg = false;
    if (!s.empty() && s.front() == '-' && spans(s.substr(1))) {
        neg = true;
        s.erase(s.begin());
    }
    const bool wrapped = spans(s);
    if (wrapped) s = s.substr(1, s.size() - 2);
    Cursor c{s};
    int terms = 0;
    Poly p = parse_poly_expr(c, var, &terms);
    if (!c.done()) c.fail("trailing characters in polynomial");
    if (!wrapped && terms > 1)
        throw SyntaxError("multi-term numerator/denominator must be parenthesized: " + text);
    return neg ? -p : p;
}

// first '/' at paren depth 0, or npos
inline std::size_t top_level_slash(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) return i;
    }
    return std::string::npos;
}

} // namespace detail

inline Poly parse_poly(const std::string& text, const std::string& var = "t") {
    detail::Cursor c{text};
    Poly p = detail::parse_poly_expr(c, var);
    if (!c.done()) c.fail("trailing characters in polynomial");
    return p;
}

inline Scalar parse_scalar(const FieldDescriptor& d, const std::string& text) {
    switch (d.kind) {
        case FieldKind::Rationals: {
            detail::Cursor c{text};
            mpq_class q = detail::parse_rational_core(c);
            if (!c.done()) c.fail("trailing characters in rational");
            return Scalar::rational(q);
        }
        case FieldKind::PrimeField: {
            detail::Cursor c{text};
            bool neg = c.eat('-');
            mpz_class n = detail::parse_uint(c);
            if (!c.done()) c.fail("trailing characters in residue");
            return Scalar::residue(d, neg ? mpz_class(-n) : n);
        }
        case FieldKind::RationalFunctions: {
            const std::size_t slash = detail::top_level_slash(text);
            // without a '/' the whole text is one polynomial, parens optional
            if (slash == std::string::npos)
                return Scalar::rat_fun(d, parse_poly(text, d.var));
            if (detail::top_level_slash(text.substr(slash + 1)) != std::string::npos)
                throw SyntaxError("more than one top-level '/' in: " + text);
            Poly num = detail::parse_ratfun_side(text.substr(0, slash), d.var);
            Poly den = detail::parse_ratfun_side(text.substr(slash + 1), d.var);
            if (den.is_zero()) throw DivisionByZero("zero denominator in literal");
            return Scalar::rat_fun(d, std::move(num), std::move(den));
        }
    }
    throw InternalError("unreachable field kind");
}

} // namespace quatknot
