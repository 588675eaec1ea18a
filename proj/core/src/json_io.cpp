#include "spectra/json_io.hpp"

namespace spectra {
namespace {

FieldTag field_from_string(const std::string& s) {
    if (s == "Q") return FieldTag::Q;
    if (s == "Qi") return FieldTag::Qi;
    throw SchemaError("unknown field tag: " + s);
}

std::string field_to_string(FieldTag f) { return f == FieldTag::Q ? "Q" : "Qi"; }

Json matrix_to_json(const Matrix<GQ>& m, FieldTag field) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j), field));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<GQ> matrix_from_json(const Json& j, FieldTag field) {
    if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty array of rows");
    Matrix<GQ> m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != m.cols()) throw SchemaError("ragged matrix");
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            m(i, jj) = scalar_from_json(j[i][jj], field);
    }
    return m;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
    try {
        return Rational(j.get<std::string>());
    } catch (const std::exception&) {
        throw SchemaError("malformed rational: " + j.get<std::string>());
    }
}

Json scalar_to_json(const GQ& z, FieldTag field) {
    if (field == FieldTag::Q) return rational_to_json(z.re);
    return Json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

GQ scalar_from_json(const Json& j, FieldTag field) {
    if (field == FieldTag::Q) return GQ(rational_from_json(j));
    if (j.is_string()) return GQ(rational_from_json(j));  // bare real accepted
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw SchemaError("Q(i) scalar must be {\"re\":...,\"im\":...}");
    return GQ(rational_from_json(j["re"]), rational_from_json(j["im"]));
}

Json ring_to_json(const RingSpec& r) {
    if (r.is_zmod()) return Json{{"kind", "zmod"}, {"n", r.zmod().n}};
    if (r.is_bool()) return Json{{"kind", "bool"}, {"ground", r.bool_ring().ground}};
    const SCAlgebra& a = r.sc();
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim; ++j) {
            Json entry = Json::array();
            for (std::size_t k = 0; k < a.dim; ++k)
                entry.push_back(scalar_to_json(a.table[i][j][k], a.field));
            row.push_back(std::move(entry));
        }
        table.push_back(std::move(row));
    }
    Json unit = Json::array();
    for (const auto& u : a.unit) unit.push_back(scalar_to_json(u, a.field));
    Json out{{"kind", "sc"},
             {"field", field_to_string(a.field)},
             {"dim", a.dim},
             {"unit", std::move(unit)},
             {"table", std::move(table)}};
    if (!a.labels.empty()) out["labels"] = a.labels;
    return out;
}

RingPtr ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError("ring needs a \"kind\"");
    std::string kind = j["kind"];
    if (kind == "zmod") {
        if (!j.contains("n") || !j["n"].is_number_unsigned()) throw SchemaError("zmod needs n >= 1");
        return make_zmod(j["n"].get<std::uint64_t>());
    }
    if (kind == "bool") {
        if (!j.contains("ground")) throw SchemaError("bool ring needs a ground set");
        return make_bool_ring(j["ground"].get<std::vector<std::string>>());
    }
    if (kind != "sc") throw SchemaError("unknown ring kind: " + kind);
    FieldTag field = field_from_string(j.at("field"));
    std::size_t dim = j.at("dim");
    std::vector<GQ> unit;
    for (const auto& u : j.at("unit")) unit.push_back(scalar_from_json(u, field));
    if (unit.size() != dim) throw SchemaError("unit has wrong dimension");
    std::vector<std::vector<std::vector<GQ>>> table(
        dim, std::vector<std::vector<GQ>>(dim, std::vector<GQ>(dim)));
    const Json& t = j.at("table");
    if (t.size() != dim) throw SchemaError("table has wrong shape");
    for (std::size_t i = 0; i < dim; ++i) {
        if (t[i].size() != dim) throw SchemaError("table has wrong shape");
        for (std::size_t jj = 0; jj < dim; ++jj) {
            if (t[i][jj].size() != dim) throw SchemaError("table has wrong shape");
            for (std::size_t k = 0; k < dim; ++k)
                table[i][jj][k] = scalar_from_json(t[i][jj][k], field);
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    try {
        return make_sc_algebra(field, std::move(table), std::move(unit), std::move(labels),
                               std::max<std::size_t>(dim, kDefaultDimCap));
    } catch (const InvalidRing& e) {
        throw SchemaError(std::string("invalid sc algebra: ") + e.what());
    }
}

Json involutive_to_json(const InvolutiveAlgebra& a) {
    Json j = ring_to_json(*a.algebra);
    j["star"] = matrix_to_json(a.star, FieldTag::Qi);
    return j;
}

InvolutiveAlgebra involutive_from_json(const Json& j) {
    RingPtr r = ring_from_json(j);
    if (!j.contains("star")) throw SchemaError("involutive algebra needs a star matrix");
    try {
        return make_involutive(r, matrix_from_json(j["star"], FieldTag::Qi));
    } catch (const AxiomViolation& e) {
        throw SchemaError(std::string("invalid involution: ") + e.what());
    }
}

Json system_to_json(const InverseSystem& sys) {
    return Json{{"levels", sys.level_sizes}, {"transitions", sys.transitions}};
}

InverseSystem system_from_json(const Json& j) {
    if (!j.contains("levels") || !j.contains("transitions"))
        throw SchemaError("system needs levels and transitions");
    try {
        return make_system(j["levels"].get<std::vector<int>>(),
                           j["transitions"].get<std::vector<std::vector<int>>>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("invalid system: ") + e.what());
    }
}

Json clopen_to_json(const ClopenSet& c) {
    return Json{{"level", c.level}, {"members", c.members}};
}

ClopenSet clopen_from_json(const InverseSystem& sys, const Json& j) {
    if (!j.contains("level") || !j.contains("members"))
        throw SchemaError("clopen needs level and members");
    try {
        return make_clopen(sys, j["level"].get<int>(), j["members"].get<std::vector<int>>());
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid clopen: ") + e.what());
    }
}

Json covering_to_json(const Covering& u) {
    Json parts = Json::array();
    for (const auto& p : u.parts) parts.push_back(clopen_to_json(p));
    return parts;
}

Covering covering_from_json(const InverseSystem& sys, const Json& j) {
    if (!j.is_array()) throw SchemaError("covering must be an array of clopens");
    Covering u;
    for (const auto& p : j) u.parts.push_back(clopen_from_json(sys, p));
    return u;
}

Json stepfn_to_json(const StepFn& s) {
    Json vals = Json::array();
    for (const auto& v : s.values) vals.push_back(rational_to_json(v));
    return Json{{"level", s.level}, {"values", std::move(vals)}};
}

StepFn stepfn_from_json(const Json& j) {
    StepFn s;
    s.level = j.at("level");
    for (const auto& v : j.at("values")) s.values.push_back(rational_from_json(v));
    return s;
}

Json represented_to_json(const RepresentedFn& f) {
    return Json{{"depth", f.depth},
                {"values", f.values},
                {"osc", f.modulus.osc},
                {"range", {f.range_lo, f.range_hi}}};
}

RepresentedFn represented_from_json(const InverseSystem& sys, const Json& j) {
    try {
        auto range = j.at("range");
        return make_represented_fn(sys, j.at("depth"),
                                   j.at("values").get<std::vector<std::vector<double>>>(),
                                   ModulusTable{j.at("osc").get<std::vector<double>>()},
                                   range.at(0), range.at(1));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("invalid represented function: ") + e.what());
    }
}

}  // namespace spectra
