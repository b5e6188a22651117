#pragma once

// Batch front door.  Exit codes: 0 success, 1 mathematical falsification,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "json_io.hpp"
#include "sample.hpp"

namespace quatknot {
namespace cli {

struct LemmaSweep {
    std::uint64_t samples = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

// The identity battery behind verify-lemmas: conjugation laws, determinant
// multiplicativity, the product expansions, the dependency lemmas and the
// matching-predicate equivalence, all on seeded samples.
inline LemmaSweep verify_lemmas(const FieldDescriptor& d, std::uint64_t samples,
                                std::uint64_t seed) {
    Sampler rng(seed);
    LemmaSweep sweep;
    Mat2 I = Mat2::identity(d);
    for (std::uint64_t n = 0; n < samples && sweep.failures.size() < 8; ++n) {
        ++sweep.samples;
        Mat2 A = rng.mat2(d), B = rng.mat2(d);
        Traceless a = rng.traceless(d), b = rng.traceless(d), c = rng.traceless(d);

        sweep.expect(conjugate(A + B) == conjugate(A) + conjugate(B), "conj additive");
        sweep.expect(conjugate(A * B) == conjugate(B) * conjugate(A), "conj anti-multiplicative");
        sweep.expect(conjugate(conjugate(A)) == A, "conj involution");
        sweep.expect(A * conjugate(A) == I * det(A), "A conj(A) = det(A) I");
        sweep.expect(A + conjugate(A) == I * tr(A), "A + conj(A) = tr(A) I");
        sweep.expect(det(A * B) == det(A) * det(B), "det multiplicative");
        sweep.expect(dot(A, A) == det(A), "quadratic form of dot is det");
        sweep.expect(dot(A, B) == dot(B, A), "dot symmetric");

        Traceless lhs = cross(a, cross(b, c));
        Traceless rhs = b * dot(c, a) - c * dot(b, a);
        sweep.expect(lhs == rhs, "triple cross expansion");
        sweep.expect(dot(cross(a, c), cross(b, c)) == det(c) * dot(a, b) - dot(a, c) * dot(b, c),
                     "cross-dot contraction");
        sweep.expect(det(cross(a, b)) == det(a) * det(b) - dot(a, b) * dot(a, b),
                     "det of cross product");
        sweep.expect(rho(cross(a, b)) == cross_e(a, b), "rho carries cross to euclidean cross");
        sweep.expect(triple(a, b, c) == -triple(b, a, c) && triple(a, a, c).is_zero(),
                     "triple product alternating");

        // matrix products realize dot and cross on traceless parts
        Mat2 am = to_mat2(a), bm = to_mat2(b);
        sweep.expect(am * bm == Mat2::scalar(-dot(a, b)) + to_mat2(cross(a, b)),
                     "ab = -a.b + a x b");

        sweep.expect(commutes(A, B) == (A * B == B * A), "commutation criterion");
        sweep.expect(pair_dependent(a, b) == (am * bm == bm * am), "dependency criterion");
        sweep.expect(triple_dependent(a, b) == det(cross(a, b)).is_zero(),
                     "triple dependency criterion");
        if (!det(B).is_zero())
            sweep.expect(dot(A, B).is_zero() == tr(A * inverse(B)).is_zero(),
                         "matching predicate equivalence");

        Mat2 C = rng.invertible(d);
        sweep.expect(dot(group_conjugate(a, C), group_conjugate(b, C)) == dot(a, b),
                     "dot invariant under group-conjugation");
        if (!a.is_zero()) {
            auto can = canonicalize_traceless(a);
            if (can)
                sweep.expect(can->image.a3.is_zero() &&
                                 group_conjugate(a, can->conjugator) == can->image,
                             "canonicalization contract");
        }
    }
    return sweep;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

inline void write_output(const std::string& path, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << text;
}

inline int run(std::vector<std::string> args) {
    CLI::App app{"exact Yang-Baxter switches and virtual knot invariants"};
    app.require_subcommand(1);

    // verify-lemmas
    auto* vl = app.add_subcommand("verify-lemmas", "run the algebra identity sweep");
    std::string vl_field = "q";
    std::uint64_t vl_samples = 1000, vl_seed = 0;
    vl->add_option("--field", vl_field, "q | fp:<p> | qt");
    vl->add_option("--samples", vl_samples, "number of random draws");
    vl->add_option("--seed", vl_seed, "RNG seed");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "finite-field census of solutions");
    std::uint32_t en_p = 3;
    std::string en_out;
    en->add_option("--p", en_p, "odd prime in {3,5,7}")->required();
    en->add_option("--out", en_out, "output file (default stdout)");

    // generate
    auto* ge = app.add_subcommand("generate", "build the canonical switch from parameters");
    std::string ge_field = "q", ge_a0, ge_a1, ge_a3, ge_b1, ge_b3, ge_out;
    ge->add_option("--field", ge_field, "q | fp:<p> | qt");
    ge->add_option("--a0", ge_a0)->required();
    ge->add_option("--a1", ge_a1)->required();
    ge->add_option("--a3", ge_a3)->required();
    ge->add_option("--b1", ge_b1)->required();
    ge->add_option("--b3", ge_b3)->required();
    ge->add_option("--out", ge_out, "output file (default stdout)");

    // check
    auto* ch = app.add_subcommand("check", "verify a switch file");
    std::string ch_switch;
    ch->add_option("--switch", ch_switch, "switch JSON file")->required();

    // invariant
    auto* iv = app.add_subcommand("invariant", "compute link invariants");
    std::string iv_switch, iv_gauss, iv_braid, iv_out;
    int iv_strands = 2;
    std::size_t iv_depth = 2;
    iv->add_option("--switch", iv_switch, "switch JSON file")->required();
    auto* opt_gauss = iv->add_option("--gauss", iv_gauss, "signed Gauss code");
    auto* opt_braid = iv->add_option("--braid", iv_braid, "virtual braid word");
    iv->add_option("--strands", iv_strands, "strand count for --braid");
    iv->add_option("--depth", iv_depth, "how many elementary ideals");
    iv->add_option("--out", iv_out, "output file (default stdout)");
    opt_gauss->excludes(opt_braid);

    // classify
    auto* cl = app.add_subcommand("classify", "classify a pair file");
    std::string cl_pair;
    cl->add_option("--pair", cl_pair, "pair JSON file")->required();

    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (vl->parsed()) {
            FieldDescriptor d = FieldDescriptor::parse(vl_field);
            LemmaSweep sweep = verify_lemmas(d, vl_samples, vl_seed);
            if (sweep.failures.empty()) {
                std::cout << "ok: " << sweep.samples << " samples over " << d.str()
                          << ", all identities hold\n";
                return 0;
            }
            for (const auto& f : sweep.failures) std::cerr << "FALSIFIED: " << f << "\n";
            return 1;
        }
        if (en->parsed()) {
            CensusReport r = enumerate_solutions(en_p);
            write_output(en_out, census_to_json(r));
            if (r.fe_solutions != r.commuting + r.matching + r.hyperbolic + r.unresolved) {
                std::cerr << "FALSIFIED: census buckets do not sum to fe_solutions\n";
                return 1;
            }
            return 0;
        }
        if (ge->parsed()) {
            FieldDescriptor d = FieldDescriptor::parse(ge_field);
            HyperbolicParams p{parse_scalar(d, ge_a0), parse_scalar(d, ge_a1),
                               parse_scalar(d, ge_a3), parse_scalar(d, ge_b1),
                               parse_scalar(d, ge_b3)};
            auto [A, B] = hyperbolic_family(p);
            Switch s = make_noncommutative_switch(A, B);
            write_output(ge_out, switch_to_json(s));
            return 0;
        }
        if (ch->parsed()) {
            Switch s = switch_from_json(read_json_file(ch_switch));
            bool ybe = yang_baxter_check(s);
            InvertibilityReport ir = invertibility_report(s);
            json rep{{"ybe", ybe},
                     {"invertibility",
                      json{{"A", ir.A},
                           {"B", ir.B},
                           {"A_minus_I", ir.AminusI},
                           {"S", ir.S},
                           {"delta_prime", ir.DeltaPrime}}}};
            bool fe_applicable = ir.A && ir.B && ir.AminusI;
            bool fe_ok = true;
            if (fe_applicable) {
                FEReport fe = fe_residual(s.A, s.B);
                fe_ok = fe.is_solution;
                rep["fe"] = fe_ok;
                rep["matching"] = fe.is_matching;
                rep["commuting"] = fe.commuting;
            } else {
                rep["fe"] = nullptr;  // not applicable for this switch shape
            }
            std::cout << rep.dump(2) << "\n";
            return (ybe && fe_ok) ? 0 : 1;
        }
        if (iv->parsed()) {
            Switch s = switch_from_json(read_json_file(iv_switch));
            Presentation p;
            std::string input;
            if (!iv_gauss.empty() || opt_gauss->count() > 0) {
                p = presentation_from_gauss(s, parse_gauss(iv_gauss));
                input = "gauss:" + iv_gauss;
            } else if (opt_braid->count() > 0) {
                p = presentation_from_braid(s, parse_braid(iv_braid, iv_strands));
                input = "braid[" + std::to_string(iv_strands) + "]:" + iv_braid;
            } else {
                std::cerr << "invariant needs --gauss or --braid\n";
                return 2;
            }
            InvariantResult r = invariants(p, iv_depth);
            write_output(iv_out, invariant_to_json(input, r, s.descriptor().var));
            return 0;
        }
        if (cl->parsed()) {
            auto [A, B] = pair_from_json(read_json_file(cl_pair));
            Classification c = classify_pair(A, B);
            std::cout << classification_to_json(c).dump(2) << "\n";
            return 0;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DescriptorMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadPosition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // mathematical failure: singular inputs, falsified postconditions, ...
        std::cerr << "falsified: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace cli
} // namespace quatknot
