#pragma once

// JSON encodings for matrices, switches, census reports, classifications
// and invariant results.  Scalars travel as strings in the literal grammar
// of the field module, so every artifact round-trips exactly.

#include <string>

#include "json.hpp"

#include "linkinv.hpp"
#include "solver.hpp"
#include "switch.hpp"

namespace quatknot {

using json = nlohmann::json;

inline json mat2_to_json(const Mat2& m) {
    json rows = json::array();
    rows.push_back(json::array({m.e11.str(), m.e12.str()}));
    rows.push_back(json::array({m.e21.str(), m.e22.str()}));
    return json{{"field", m.descriptor().str()}, {"rows", rows}};
}

inline Mat2 mat2_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        throw ValidationError("matrix JSON needs \"field\" and \"rows\"");
    FieldDescriptor d = FieldDescriptor::parse(j.at("field").get<std::string>());
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw ValidationError("matrix JSON needs a 2x2 \"rows\" array");
    return Mat2(parse_scalar(d, rows[0][0].get<std::string>()),
                parse_scalar(d, rows[0][1].get<std::string>()),
                parse_scalar(d, rows[1][0].get<std::string>()),
                parse_scalar(d, rows[1][1].get<std::string>()));
}

inline json switch_to_json(const Switch& s) {
    return json{{"field", s.descriptor().str()},
                {"A", mat2_to_json(s.A)},
                {"B", mat2_to_json(s.B)},
                {"C", mat2_to_json(s.C)},
                {"D", mat2_to_json(s.D)},
                {"tag", to_string(s.tag)}};
}

inline Switch switch_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("switch JSON must be an object");
    Switch s;
    s.A = mat2_from_json(j.at("A"));
    s.B = mat2_from_json(j.at("B"));
    s.C = mat2_from_json(j.at("C"));
    s.D = mat2_from_json(j.at("D"));
    s.tag = j.contains("tag") ? switch_tag_from_string(j.at("tag").get<std::string>())
                              : SwitchTag::Raw;
    const FieldDescriptor& d = s.A.descriptor();
    if (s.B.descriptor() != d || s.C.descriptor() != d || s.D.descriptor() != d)
        throw DescriptorMismatch("switch blocks from different fields");
    if (j.contains("field") && FieldDescriptor::parse(j.at("field").get<std::string>()) != d)
        throw DescriptorMismatch("switch field does not match its blocks");
    return s;
}

inline json census_to_json(const CensusReport& r) {
    return json{{"p", r.p},
                {"pairs_scanned", r.pairs_scanned},
                {"fe_solutions", r.fe_solutions},
                {"commuting", r.commuting},
                {"matching", r.matching},
                {"hyperbolic", r.hyperbolic},
                {"unresolved", r.unresolved},
                {"theorem11_B_discrepancies", r.theorem11_B_discrepancies}};
}

inline CensusReport census_from_json(const json& j) {
    CensusReport r;
    r.p = j.at("p").get<std::uint32_t>();
    r.pairs_scanned = j.at("pairs_scanned").get<std::uint64_t>();
    r.fe_solutions = j.at("fe_solutions").get<std::uint64_t>();
    r.commuting = j.at("commuting").get<std::uint64_t>();
    r.matching = j.at("matching").get<std::uint64_t>();
    r.hyperbolic = j.at("hyperbolic").get<std::uint64_t>();
    r.unresolved = j.at("unresolved").get<std::uint64_t>();
    r.theorem11_B_discrepancies = j.at("theorem11_B_discrepancies").get<std::uint64_t>();
    return r;
}

// pair files for the classify subcommand
inline std::pair<Mat2, Mat2> pair_from_json(const json& j) {
    return {mat2_from_json(j.at("A")), mat2_from_json(j.at("B"))};
}

inline json pair_to_json(const Mat2& A, const Mat2& B) {
    return json{{"field", A.descriptor().str()}, {"A", mat2_to_json(A)}, {"B", mat2_to_json(B)}};
}

inline json classification_to_json(const Classification& c) {
    json j{{"kind", to_string(c.kind)}};
    if (c.kind == ClassKind::Hyperbolic) {
        j["witness"] = mat2_to_json(c.witness);
        j["params"] = json{{"a0", c.params.a0.str()},
                           {"a1", c.params.a1.str()},
                           {"a3", c.params.a3.str()},
                           {"b1", c.params.b1.str()},
                           {"b3", c.params.b3.str()}};
    }
    if (c.kind == ClassKind::Unresolved) j["reason"] = c.reason;
    return j;
}

inline json invariant_to_json(const std::string& input, const InvariantResult& r,
                              const std::string& var = "t") {
    json ideals = json::array();
    for (std::size_t i = 0; i < r.ideals.size(); ++i)
        ideals.push_back(json{{"i", i}, {"poly", r.ideals[i].str(var)}});
    json units = json::array();
    for (const auto& u : r.unit_factors) units.push_back(u.str(var));
    return json{{"input", input},
                {"field", r.field.str()},
                {"dim", r.dim},
                {"rank", r.rank},
                {"nullity", r.nullity},
                {"ideals", ideals},
                {"units_stripped", units}};
}

} // namespace quatknot
