#include "cycubic/serialize.hpp"

#include <algorithm>
#include <fstream>

#include "cycubic/errors.hpp"

namespace cycubic {

Json series_to_json(const FormalSeries& s) {
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms()) {
        Json exp = Json::array();
        for (unsigned e : m) exp.push_back(e);
        terms.push_back({{"exp", exp}, {"num", num_string(c)}, {"den", den_string(c)}});
    }
    return {{"vars", s.num_vars()}, {"order", s.order()}, {"terms", terms}};
}

FormalSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("order") || !j.contains("terms"))
        throw StructuralError("series: expected {vars, order, terms}");
    FormalSeries s(j.at("vars").get<int>(), j.at("order").get<int>());
    for (const auto& term : j.at("terms")) {
        MultiIndex m;
        for (const auto& e : term.at("exp")) m.push_back(e.get<unsigned>());
        Rational c = rat_from_strings(term.at("num").get<std::string>(),
                                      term.at("den").get<std::string>());
        if (static_cast<int>(total_degree(m)) > s.order())
            throw StructuralError("series: term exceeds the truncation order");
        s.set_coefficient(m, s.coefficient(m) + c);
    }
    return s;
}

Json log_series_to_json(const LogSeries& s) {
    Json parts = Json::array();
    for (const auto& p : s.parts()) parts.push_back(series_to_json(p));
    return {{"log_degree", s.log_degree()}, {"parts", parts}};
}

Json rat_to_json(const Rational& r) { return rat_string(r); }

Rational rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw StructuralError("rational: expected string or integer");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat_from_strings(s, "1");
    return rat_from_strings(s.substr(0, slash), s.substr(slash + 1));
}

Json rat_matrix_to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(rat_to_json(c));
        out.push_back(r);
    }
    return out;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    RatMatrix out;
    for (const auto& row : j) {
        RatVector r;
        for (const auto& c : row) r.push_back(rat_from_json(c));
        out.push_back(std::move(r));
    }
    return out;
}

Json period_map_to_json(const PeriodMap& p) {
    Json entries = Json::array();
    for (const auto& row : p.entries)
        for (const auto& e : row) entries.push_back(series_to_json(e));
    Json out = {{"g", p.g}, {"n", p.n}, {"divisors", p.polarization_divisors}, {"entries", entries}};
    if (p.base_point_imag) out["base_point_imag"] = rat_matrix_to_json(*p.base_point_imag);
    return out;
}

PeriodMap period_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("n") || !j.contains("entries"))
        throw StructuralError("period map: expected {g, n, entries, ...}");
    PeriodMap p;
    p.g = j.at("g").get<int>();
    p.n = j.at("n").get<int>();
    if (j.contains("divisors"))
        p.polarization_divisors = j.at("divisors").get<std::vector<long>>();
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != p.g * p.g)
        throw StructuralError("period map: need g*g entries (row-major)");
    for (int i = 0; i < p.g; ++i) {
        std::vector<FormalSeries> row;
        for (int k = 0; k < p.g; ++k) row.push_back(series_from_json(entries[i * p.g + k]));
        p.entries.push_back(std::move(row));
    }
    if (j.contains("base_point_imag")) p.base_point_imag = rat_matrix_from_json(j.at("base_point_imag"));
    p.validate();
    return p;
}

AffineFrame frame_from_json(const Json& period_file, const PeriodMap& p) {
    if (!period_file.contains("frame")) return AffineFrame::identity(p.n);
    AffineFrame a{rat_matrix_from_json(period_file.at("frame"))};
    a.validate(p);
    return a;
}

Json section_to_json(const SectionCandidate& s) {
    Json out;
    if (s.kind == SectionCandidate::Kind::translation) {
        out["kind"] = "translation";
        out["m"] = s.m;
        out["n"] = s.n;
    } else {
        out["kind"] = "general";
        Json lift = Json::array();
        for (const auto& comp : s.lift) lift.push_back(series_to_json(comp));
        out["lift"] = lift;
    }
    if (!s.discrete_class.empty()) out["discrete_class"] = s.discrete_class;
    return out;
}

SectionCandidate section_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw StructuralError("section: expected {kind, ...}");
    SectionCandidate s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "translation") {
        s.kind = SectionCandidate::Kind::translation;
        s.m = j.at("m").get<std::vector<long>>();
        s.n = j.at("n").get<std::vector<long>>();
    } else if (kind == "general") {
        s.kind = SectionCandidate::Kind::general;
        for (const auto& comp : j.at("lift")) s.lift.push_back(series_from_json(comp));
        if (s.lift.empty()) throw StructuralError("section: general kind needs a lift");
    } else {
        throw StructuralError("section: kind must be 'translation' or 'general'");
    }
    if (j.contains("discrete_class")) s.discrete_class = j.at("discrete_class").get<std::vector<long>>();
    return s;
}

MirrorPipelineConfig mirror_config_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("operator") || !j.contains("yukawa") ||
        !j.contains("classical_triple"))
        throw StructuralError("mirror fixture: expected {operator, yukawa, classical_triple, ...}");
    MirrorPipelineConfig cfg;
    const Json& op = j.at("operator");
    cfg.op.order = op.at("order").get<int>();
    for (const auto& poly : op.at("coefficients")) {
        std::vector<Rational> c;
        for (const auto& v : poly) c.push_back(rat_from_json(v));
        cfg.op.coefficients.push_back(std::move(c));
    }
    for (const auto& v : j.at("yukawa").at("num")) cfg.yukawa_num.push_back(rat_from_json(v));
    for (const auto& v : j.at("yukawa").at("den")) cfg.yukawa_den.push_back(rat_from_json(v));
    cfg.classical_triple = j.at("classical_triple").get<long>();
    if (j.contains("truncation_order")) cfg.truncation_order = j.at("truncation_order").get<int>();
    if (j.contains("provenance"))
        for (const auto& [k, v] : j.at("provenance").items())
            cfg.provenance[k] = v.get<std::string>();
    cfg.validate();
    return cfg;
}

JacobianRingInput jacobian_ring_input_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("g"))
        throw StructuralError("jacobian ring input: expected {g, ...}");
    JacobianRingInput in;
    int g = j.at("g").get<int>();
    if (j.contains("fermat") && j.at("fermat").get<bool>()) {
        in.cubic = CubicTensor::fermat(g);
    } else if (j.contains("cubic_polynomial")) {
        FormalSeries poly = series_from_json(j.at("cubic_polynomial"));
        if (poly.num_vars() != g)
            throw StructuralError("jacobian ring input: polynomial variable count != g");
        in.cubic = CubicTensor::from_polynomial(poly);
    } else {
        throw StructuralError("jacobian ring input: need cubic_polynomial or fermat flag");
    }
    if (j.contains("degrees"))
        in.degrees = j.at("degrees").get<std::vector<int>>();
    else
        in.degrees = {2};
    if (std::find(in.degrees.begin(), in.degrees.end(), 2) == in.degrees.end())
        in.degrees.push_back(2);
    if (j.contains("quadrics"))
        for (const auto& q : j.at("quadrics")) in.quadrics.push_back(rat_matrix_from_json(q));
    return in;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw StructuralError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace cycubic
