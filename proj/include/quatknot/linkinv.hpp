#pragma once

// From a switch and a diagram description (signed Gauss code or virtual
// braid word) to a presentation matrix and its invariant data: ranks and
// normalized elementary-ideal gcd polynomials.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "matn.hpp"
#include "solver.hpp"
#include "switch.hpp"

namespace quatknot {

// ---------------------------------------------------------------------------
// Diagram encodings

struct Passage {
    int id = 0;
    bool over = false;
    int sign = +1;
};

struct GaussCode {
    std::vector<Passage> passages;  // cyclic order; empty = unknot

    std::size_t crossings() const { return passages.size() / 2; }
};

inline void validate_gauss(const GaussCode& g) {
    std::map<int, std::vector<const Passage*>> by_id;
    for (const auto& p : g.passages) by_id[p.id].push_back(&p);
    for (const auto& [id, ps] : by_id) {
        if (ps.size() != 2)
            throw ValidationError("crossing " + std::to_string(id) + " appears " +
                                  std::to_string(ps.size()) + " times, expected 2");
        if (ps[0]->over == ps[1]->over)
            throw ValidationError("crossing " + std::to_string(id) + " needs one over and one under passage");
        if (ps[0]->sign != ps[1]->sign)
            throw ValidationError("crossing " + std::to_string(id) + " has mismatched signs");
    }
}

// tokens [OU]<id><+->, separated by whitespace or commas
inline GaussCode parse_gauss(const std::string& text) {
    GaussCode g;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        Passage p;
        if (ch == 'O')
            p.over = true;
        else if (ch == 'U')
            p.over = false;
        else
            throw SyntaxError("expected 'O' or 'U' at position " + std::to_string(i));
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw SyntaxError("expected crossing id at position " + std::to_string(start));
        p.id = std::stoi(text.substr(start, i - start));
        if (i >= text.size()) throw SyntaxError("expected sign at position " + std::to_string(i));
        char sg = text[i];
        // accept ASCII +/- and the unicode minus that shows up in copied text
        if (sg == '+')
            p.sign = +1;
        else if (sg == '-')
            p.sign = -1;
        else
            throw SyntaxError("expected '+' or '-' at position " + std::to_string(i));
        ++i;
        g.passages.push_back(p);
    }
    validate_gauss(g);
    return g;
}

inline std::string gauss_str(const GaussCode& g) {
    std::string out;
    for (const auto& p : g.passages) {
        if (!out.empty()) out += " ";
        out += (p.over ? "O" : "U") + std::to_string(p.id) + (p.sign > 0 ? "+" : "-");
    }
    return out;
}

enum class BraidGenKind { Sigma, SigmaInv, Tau };

struct BraidGen {
    BraidGenKind kind = BraidGenKind::Sigma;
    int index = 1;  // 1-based, 1 <= index < strands
};

struct BraidWord {
    int strands = 2;
    std::vector<BraidGen> gens;
};

// tokens s<i>, S<i> (inverse), v<i>
inline BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw ValidationError("braid needs at least one strand");
    BraidWord w;
    w.strands = strands;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        BraidGen g;
        if (ch == 's')
            g.kind = BraidGenKind::Sigma;
        else if (ch == 'S')
            g.kind = BraidGenKind::SigmaInv;
        else if (ch == 'v')
            g.kind = BraidGenKind::Tau;
        else
            throw SyntaxError("expected 's', 'S' or 'v' at position " + std::to_string(i));
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw SyntaxError("expected generator index at position " + std::to_string(start));
        g.index = std::stoi(text.substr(start, i - start));
        if (g.index < 1 || g.index >= strands)
            throw IndexOutOfRange("generator index " + std::to_string(g.index) + " out of range for " +
                                  std::to_string(strands) + " strands");
        w.gens.push_back(g);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Braid representation

namespace linkinv_detail {

inline MatN sigma_matrix(const Switch& s, int index, int strands, bool inverse_gen) {
    const FieldDescriptor& d = s.descriptor();
    MatN m = MatN::identity(d, 2 * static_cast<std::size_t>(strands));
    Mat2 A = s.A, B = s.B, C = s.C, D = s.D;
    if (inverse_gen) {
        MatN s4 = s.as_mat4();
        if (!s4.is_invertible()) throw NonInvertibleSwitch("switch is not invertible");
        MatN i4 = s4.inverse();
        A = i4.block2(0, 0);
        B = i4.block2(0, 1);
        C = i4.block2(1, 0);
        D = i4.block2(1, 1);
    }
    const std::size_t bi = static_cast<std::size_t>(index - 1);
    m.set_block2(bi, bi, A);
    m.set_block2(bi, bi + 1, B);
    m.set_block2(bi + 1, bi, C);
    m.set_block2(bi + 1, bi + 1, D);
    return m;
}

inline MatN tau_matrix(const FieldDescriptor& d, int index, int strands) {
    MatN m = MatN::identity(d, 2 * static_cast<std::size_t>(strands));
    const std::size_t bi = static_cast<std::size_t>(index - 1);
    Mat2 z = Mat2::zero(d), i2 = Mat2::identity(d);
    m.set_block2(bi, bi, z);
    m.set_block2(bi + 1, bi + 1, z);
    m.set_block2(bi, bi + 1, i2);
    m.set_block2(bi + 1, bi, i2);
    return m;
}

} // namespace linkinv_detail

// rho(w): product of generator matrices in word order
inline MatN braid_rep(const Switch& s, const BraidWord& w) {
    if (!yang_baxter_check(s)) throw NotASolution("switch fails the Yang-Baxter check");
    const FieldDescriptor& d = s.descriptor();
    MatN acc = MatN::identity(d, 2 * static_cast<std::size_t>(w.strands));
    for (const auto& g : w.gens) {
        MatN gm = g.kind == BraidGenKind::Tau
                      ? linkinv_detail::tau_matrix(d, g.index, w.strands)
                      : linkinv_detail::sigma_matrix(s, g.index, w.strands,
                                                     g.kind == BraidGenKind::SigmaInv);
        acc = acc * gm;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Presentations

struct Presentation {
    MatN matrix;                    // 2N x 2N scalar matrix, N = block generators
    std::size_t generators = 0;     // block generators (semi-arcs or strands)
    std::vector<Poly> unit_factors; // coprime monic factors of cleared denominators (Q(t))
};

namespace linkinv_detail {

inline void merge_radical(std::vector<Poly>& basis, const Poly& p) {
    if (p.is_zero() || p.is_constant()) return;
    Poly radical = p.exact_div(Poly::gcd(p, p.derivative())).monic();
    merge_coprime_factor(basis, radical);
}

} // namespace linkinv_detail

// The polynomials inverted by the working ring Q[t, d(t)^-1]: entry
// denominators of the switch together with the determinants the whole
// construction assumes invertible (A, B, A-1 and S itself).  Elementary
// ideals are only defined up to these units, and normalizing against the
// same list for every diagram is what makes them comparable.
inline std::vector<Poly> switch_unit_factors(const Switch& s) {
    std::vector<Poly> basis;
    if (s.descriptor().kind != FieldKind::RationalFunctions) return basis;
    for (const Mat2* m : {&s.A, &s.B, &s.C, &s.D})
        for (const Scalar* e : {&m->e11, &m->e12, &m->e21, &m->e22})
            linkinv_detail::merge_radical(basis, e->fn().den);
    Mat2 I = Mat2::identity(s.descriptor());
    for (const Scalar& dt : {det(s.A), det(s.B), det(s.A - I), s.as_mat4().determinant()}) {
        linkinv_detail::merge_radical(basis, dt.fn().num);
        linkinv_detail::merge_radical(basis, dt.fn().den);
    }
    return basis;
}

inline Presentation presentation_from_braid(const Switch& s, const BraidWord& w) {
    Presentation p;
    p.generators = static_cast<std::size_t>(w.strands);
    MatN rho = braid_rep(s, w);
    p.matrix = rho - MatN::identity(s.descriptor(), rho.rows());
    p.unit_factors = switch_unit_factors(s);
    return p;
}

// Semi-arc i enters passage i; the passage's outgoing label is arc i+1 (mod 2n).
// At a positive crossing (o_out, u_out) = S(u_in, o_in); a negative crossing is
// the braid inverse, which also swaps the strand roles: (u_out, o_out) =
// S^-1(o_in, u_in).  Rows encode out - S in = 0.  Both choices are forced by
// the move fixtures: the other input order breaks a kink, and keeping the
// negative slots unswapped breaks a general-position cancelling pair.
inline Presentation presentation_from_gauss(const Switch& s, const GaussCode& g) {
    validate_gauss(g);
    const FieldDescriptor& d = s.descriptor();
    const std::size_t n = g.passages.size();  // semi-arcs
    Presentation p;
    p.unit_factors = switch_unit_factors(s);
    if (n == 0) {
        // unknot convention: one block generator, one trivial (zero) relation
        p.generators = 1;
        p.matrix = MatN(d, 2, 2);
        return p;
    }
    p.generators = n;
    p.matrix = MatN(d, 2 * n, 2 * n);

    bool need_inverse = false;
    for (const auto& pa : g.passages)
        if (pa.sign < 0) need_inverse = true;
    Mat2 iA = s.A, iB = s.B, iC = s.C, iD = s.D;
    if (need_inverse) {
        MatN s4 = s.as_mat4();
        if (!s4.is_invertible())
            throw NonInvertibleSwitch("negative crossings need an invertible switch");
        MatN i4 = s4.inverse();
        iA = i4.block2(0, 0);
        iB = i4.block2(0, 1);
        iC = i4.block2(1, 0);
        iD = i4.block2(1, 1);
    }

    // crossing ids in ascending order for a deterministic row layout
    std::map<int, std::pair<std::size_t, std::size_t>> at;  // id -> (over idx, under idx)
    for (std::size_t i = 0; i < n; ++i) {
        const Passage& pa = g.passages[i];
        auto& e = at[pa.id];
        (pa.over ? e.first : e.second) = i;
    }
    Mat2 id2 = Mat2::identity(d);
    std::size_t row = 0;
    for (const auto& [cid, ou] : at) {
        const auto [io, iu] = ou;
        const int sign = g.passages[io].sign;
        const std::size_t o_in = io, o_out = (io + 1) % n;
        const std::size_t u_in = iu, u_out = (iu + 1) % n;
        // positive: (o_out, u_out) = S (u_in, o_in); negative is the braid
        // inverse, which also swaps the strand roles in the slots:
        // (u_out, o_out) = S^-1 (o_in, u_in)
        const Mat2 &A = sign > 0 ? s.A : iA, &B = sign > 0 ? s.B : iB;
        const Mat2 &C = sign > 0 ? s.C : iC, &D = sign > 0 ? s.D : iD;
        const std::size_t r1 = sign > 0 ? o_out : u_out, r2 = sign > 0 ? u_out : o_out;
        const std::size_t c1 = sign > 0 ? u_in : o_in, c2 = sign > 0 ? o_in : u_in;
        p.matrix.set_block2(row, r1, p.matrix.block2(row, r1) + id2);
        p.matrix.set_block2(row, c1, p.matrix.block2(row, c1) - A);
        p.matrix.set_block2(row, c2, p.matrix.block2(row, c2) - B);
        ++row;
        p.matrix.set_block2(row, r2, p.matrix.block2(row, r2) + id2);
        p.matrix.set_block2(row, c1, p.matrix.block2(row, c1) - C);
        p.matrix.set_block2(row, c2, p.matrix.block2(row, c2) - D);
        ++row;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Invariants

struct InvariantResult {
    FieldDescriptor field;
    std::size_t dim = 0;      // scalar matrix dimension
    std::size_t rank = 0;     // rank over the fraction field
    std::size_t nullity = 0;  // dim - rank; the module invariant to compare
    std::vector<Poly> ideals; // E_0, E_1, ... (E_i from minors of size dim - i)
    std::vector<Poly> unit_factors;
};

namespace linkinv_detail {

inline Poly minor_gcd_fold(Poly acc, const Scalar& minor) {
    if (minor.is_zero()) return acc;
    if (minor.descriptor().kind == FieldKind::RationalFunctions)
        return poly_gcd(acc, minor.fn().num);
    return Poly(1);  // over Q / F_p any nonzero minor is a unit
}

// gcd of all k-minors of m (k >= 1), assuming at least one is nonzero
inline Poly minor_gcd_direct(const MatN& m, std::size_t k) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> rows(k), cols(k);
    Poly acc;
    // enumerate k-subsets of rows and cols
    std::vector<std::size_t> rsel, csel;
    auto choose = [&](auto&& self, std::vector<std::size_t>& sel, std::size_t from,
                      std::size_t need, auto&& leaf) -> void {
        if (need == 0) {
            leaf();
            return;
        }
        for (std::size_t i = from; i + need <= n; ++i) {
            sel.push_back(i);
            self(self, sel, i + 1, need - 1, leaf);
            sel.pop_back();
        }
    };
    choose(choose, rsel, 0, k, [&] {
        choose(choose, csel, 0, k, [&] {
            MatN sub(m.descriptor(), k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
            acc = minor_gcd_fold(std::move(acc), sub.determinant());
        });
    });
    return acc;
}

} // namespace linkinv_detail

inline InvariantResult invariants(const Presentation& p, std::size_t depth = 2) {
    if (depth < 1) throw ValidationError("depth must be at least 1");
    const MatN& m = p.matrix;
    const std::size_t n = m.rows();
    if (depth > n + 1) throw DepthExceedsDimension("depth exceeds presentation dimension");

    InvariantResult out;
    out.field = m.descriptor();
    out.dim = n;
    out.rank = m.rank();
    out.nullity = n - out.rank;
    out.unit_factors = p.unit_factors;
    const bool fun_field = out.field.kind == FieldKind::RationalFunctions;

    for (std::size_t i = 0; i < depth; ++i) {
        const std::size_t k = n - i;  // minor size for E_i
        Poly e;
        if (k == 0) {
            e = Poly(1);
        } else if (out.rank < k) {
            e = Poly(0);
        } else if (!fun_field) {
            e = Poly(1);
        } else if (k == n) {
            e = poly_normalize(m.determinant().fn().num, p.unit_factors);
        } else if (k == n - 1 && out.rank == n) {
            // adjugate route: (n-1)-minors are det * inverse entries up to sign
            Scalar dt = m.determinant();
            MatN inv = m.inverse();
            Poly acc;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    acc = linkinv_detail::minor_gcd_fold(std::move(acc), dt * inv.at(r, c));
            e = poly_normalize(acc, p.unit_factors);
        } else {
            e = poly_normalize(linkinv_detail::minor_gcd_direct(m, k), p.unit_factors);
        }
        out.ideals.push_back(std::move(e));
    }

    // larger-minor gcds divide smaller ones: E_{i+1} | E_i
    for (std::size_t i = 0; i + 1 < out.ideals.size(); ++i) {
        const Poly &hi = out.ideals[i], &lo = out.ideals[i + 1];
        if (hi.is_zero()) continue;  // everything divides 0
        if (lo.is_zero() || !hi.divisible_by(lo))
            throw InternalError("elementary ideal chain violated");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reidemeister move fixtures

inline int fresh_id(const GaussCode& g) {
    int m = 0;
    for (const auto& p : g.passages) m = std::max(m, p.id);
    return m + 1;
}

inline GaussCode r1_insert(const GaussCode& base, std::size_t position, int sign = +1,
                           bool over_first = true) {
    if (position > base.passages.size()) throw BadPosition("R1 position out of range");
    GaussCode g = base;
    const int id = fresh_id(base);
    Passage o{id, true, sign}, u{id, false, sign};
    auto it = g.passages.begin() + static_cast<std::ptrdiff_t>(position);
    if (over_first)
        g.passages.insert(it, {o, u});
    else
        g.passages.insert(it, {u, o});
    validate_gauss(g);
    return g;
}

inline GaussCode r2_insert(const GaussCode& base, std::size_t pos1, std::size_t pos2,
                           int sign = +1) {
    if (pos1 > pos2 || pos2 > base.passages.size()) throw BadPosition("R2 positions out of range");
    GaussCode g = base;
    const int a = fresh_id(base), b = a + 1;
    // Both strands traverse the bigon in the same direction, so the under
    // passages repeat the over pair's order.  Under pair goes in first so
    // pos1 stays valid.
    auto it2 = g.passages.begin() + static_cast<std::ptrdiff_t>(pos2);
    g.passages.insert(it2, {Passage{a, false, sign}, Passage{b, false, -sign}});
    auto it1 = g.passages.begin() + static_cast<std::ptrdiff_t>(pos1);
    g.passages.insert(it1, {Passage{a, true, sign}, Passage{b, true, -sign}});
    validate_gauss(g);
    return g;
}

enum class MoveKind { R1, R2 };

inline GaussCode move_fixture(MoveKind kind, const GaussCode& base, std::size_t position) {
    if (kind == MoveKind::R1) return r1_insert(base, position);
    return r2_insert(base, position, position);
}

} // namespace quatknot
