#include "dioph/json_io.hpp"

#include <stdexcept>

#include "dioph/numeric.hpp"
#include "dioph/parse.hpp"

namespace dioph {

namespace {

json rat(const mpq_class& q) { return rational_to_string(q); }

mpq_class unrat(const json& j) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
    return rational_from_string(j.get<std::string>());
}

json int_vec(const std::vector<mpz_class>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(c.get_str());
    return out;
}

}  // namespace

json surd_to_json(const SurdEntry& e) {
    return json{{"r", rat(e.r)}, {"s", rat(e.s)}, {"rad", e.rad}};
}

SurdEntry surd_from_json(const json& j) {
    return SurdEntry(unrat(j.at("r")), unrat(j.at("s")), j.at("rad").get<unsigned long>());
}

json matrix_to_json(const TransformMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size; ++j) row.push_back(surd_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    json tr = json::array();
    for (const auto& c : m.translation) tr.push_back(rat(c));
    return json{{"size", m.size}, {"entries", std::move(rows)}, {"translation", std::move(tr)}};
}

TransformMatrix matrix_from_json(const json& j) {
    TransformMatrix m;
    m.size = j.at("size").get<std::size_t>();
    const json& rows = j.at("entries");
    if (rows.size() != m.size) throw std::invalid_argument("matrix row count mismatch");
    for (const json& row : rows) {
        if (row.size() != m.size) throw std::invalid_argument("matrix column count mismatch");
        for (const json& e : row) m.entries.push_back(surd_from_json(e));
    }
    m.translation.assign(m.size, mpq_class(0));
    if (j.contains("translation")) {
        const json& tr = j.at("translation");
        if (tr.size() != m.size) throw std::invalid_argument("translation length mismatch");
        for (std::size_t i = 0; i < m.size; ++i) m.translation[i] = unrat(tr[i]);
    }
    return m;
}

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(int_vec(r));
    return rows;
}

json count_to_json(const Polynomial& p, const CountResult& r, bool include_elapsed) {
    json out{{"equation", render(p)},
             {"N", r.box.radius},
             {"mode", mode_name(r.box.mode)},
             {"engine", engine_name(r.engine)},
             {"count", r.count}};
    if (!r.slice_counts.empty()) {
        json slices = json::array();
        for (const auto& [value, cnt] : r.slice_counts)
            slices.push_back(json{{"value", value}, {"count", cnt}});
        out["slices"] = std::move(slices);
    }
    if (include_elapsed) out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

json prediction_to_json(const ExponentPrediction& pred) {
    json out;
    switch (pred.kind) {
        case PredictionKind::Exponent: {
            out["kind"] = "exponent";
            out["exponent"] = rat(pred.exponent);
            out["exponent_value"] = pred.exponent.get_d();
            break;
        }
        case PredictionKind::Empty: out["kind"] = "empty"; break;
        case PredictionKind::Finite: out["kind"] = "finite"; break;
    }
    out["method"] = pred.method;
    if (pred.has_constant_factor) out["constant_factor"] = pred.constant_factor.get_str();
    if (!pred.note.empty()) out["note"] = pred.note;
    return out;
}

json fit_points_to_json(const std::vector<FitPoint>& points) {
    json out = json::array();
    for (const auto& pt : points) out.push_back(json{{"N", pt.N}, {"count", pt.count}});
    return out;
}

json bound_report_to_json(const Polynomial& p, const EquationClass& cls, const BoundCheck& chk) {
    json out{{"equation", render(p)},
             {"class", kind_name(cls.kind)},
             {"predicted", prediction_to_json(chk.prediction)},
             {"method", chk.prediction.method},
             {"points", fit_points_to_json(chk.points)}};
    if (!chk.fit.points.empty() && !chk.fit.empty_observed)
        out["alpha"] = chk.fit.alpha;
    else
        out["alpha"] = nullptr;
    out["slack"] = chk.slack;
    out["verdict"] = verdict_name(chk.verdict);
    if (!chk.detail.empty()) out["detail"] = chk.detail;
    return out;
}

json homothety_to_json(const HomothetyCase& hc) {
    json out{{"case", hc.case_id}, {"exists", hc.exists}};
    if (hc.exists) {
        out["t"] = hc.t.get_str();
        out["rad"] = hc.rad;
    }
    if (!hc.reason.empty()) out["reason"] = hc.reason;
    return out;
}

json diagonalization_to_json(const BinaryDiagonalization& d) {
    const char* status = d.status == DiagStatus::AlreadyDiagonal ? "already-diagonal"
                         : d.status == DiagStatus::Deformed      ? "deformed"
                                                                 : "no-integer-homothety";
    json out{{"status", status}, {"disc", d.disc.get_str()}};
    if (d.tan_plus) out["tan_plus"] = rat(*d.tan_plus);
    if (d.tan_minus) out["tan_minus"] = rat(*d.tan_minus);
    if (d.rotation) out["rotation"] = matrix_to_json(*d.rotation);
    if (d.homothety) out["homothety"] = homothety_to_json(*d.homothety);
    if (!d.deformation.empty()) {
        out["deformation"] = int_matrix_to_json(d.deformation);
        out["diag"] = json::array({d.diag_x.get_str(), d.diag_y.get_str()});
        out["multiplier"] = d.multiplier.get_str();
    }
    if (!d.note.empty()) out["note"] = d.note;
    return out;
}

json preservation_to_json(const PreservationReport& rep) {
    return json{{"original_count", rep.original_count},
                {"transformed_count", rep.transformed_count},
                {"inflated_count", rep.inflated_count},
                {"inflated_radius", rep.inflated_radius},
                {"det", rep.det.get_str()},
                {"unimodular", rep.unimodular},
                {"forward_violations", rep.forward_violations},
                {"pulled_back", rep.pulled_back},
                {"bijection_ok", rep.bijection_ok},
                {"inflation_ok", rep.inflation_ok},
                {"pass", rep.pass}};
}

json transformed_to_json(const Polynomial& input, const IntAffine& t,
                         const TransformedEquation& te) {
    return json{{"input", render(input)},
                {"matrix", int_matrix_to_json(t.matrix)},
                {"translation", int_vec(t.translation)},
                {"image", render(te.image)},
                {"content_removed", te.content_removed.get_str()}};
}

json witnesses_to_json(const ScaledWitnesses& w) {
    json pts = json::array();
    for (const auto& wit : w.witnesses) {
        json row = json::array();
        for (const auto& c : wit) row.push_back(to_ll(c));
        pts.push_back(std::move(row));
    }
    return json{{"equation", render(w.equation)},
                {"count", w.count},
                {"max_abs_base", w.max_abs_base.get_str()},
                {"floor_count", w.floor_count},
                {"stated_bound", rat(w.stated_bound)},
                {"witnesses", std::move(pts)}};
}

}  // namespace dioph
