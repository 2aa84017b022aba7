#include "constellab/report.hpp"

namespace constellab {

std::string label_key(const IrrepLabel& label) {
    std::string out;
    for (std::size_t i = 0; i < label.entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(label.entries[i]);
    }
    return out;
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RayTail& tail) {
    switch (tail.kind) {
        case TailKind::Zero: return {{"kind", "zero"}};
        case TailKind::Constant: return {{"kind", "constant"}, {"coeff", to_json(tail.coeff)}};
        case TailKind::Geometric:
            return {{"kind", "geometric"},
                    {"coeff", to_json(tail.coeff)},
                    {"base", to_json(tail.base)}};
    }
    throw InternalError("unhandled tail kind");
}

Json to_json(const IsotypicFunction& f) {
    Json window = Json::object();
    for (const auto& [label, value] : f.window()) window[label_key(label)] = to_json(value);
    return {{"window", std::move(window)},
            {"tail_pos", to_json(f.pos_tail())},
            {"tail_neg", to_json(f.neg_tail())}};
}

Json to_json(const HilbertFunction& h) { return to_json(h.function()); }
Json to_json(const ThetaVector& theta) { return to_json(theta.function()); }

Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const GradedSubspace& s) {
    Json out = Json::object();
    for (const auto& [label, subspace] : s) {
        out[label_key(label)] = {{"dim", subspace.dim()},
                                 {"ambient", subspace.ambient_dim()},
                                 {"basis", to_json(subspace.basis())}};
    }
    return out;
}

Json to_json(const std::set<IrrepLabel>& labels) {
    Json out = Json::array();
    for (const IrrepLabel& label : labels) out.push_back(label_key(label));
    return out;
}

Json to_json(const StabilityVerdict& verdict) {
    Json out{{"status", to_string(verdict.status)},
             {"exactness", to_string(verdict.exactness)},
             {"candidates_checked", verdict.candidates_checked}};
    out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json();
    out["witness_value"] = verdict.witness_value ? to_json(*verdict.witness_value) : Json();
    return out;
}

Json to_json(const GitParameters& params) {
    Json kappa = Json::object();
    for (const auto& [label, value] : params.kappa) kappa[label_key(label)] = to_json(value);
    Json chi = Json::object();
    for (const auto& [label, value] : params.chi) chi[label_key(label)] = to_json(value);
    Json d_minus = Json::array();
    for (const IrrepLabel& label : params.d_minus) d_minus.push_back(label_key(label));
    return {{"window", to_json(params.window)},
            {"d_minus", std::move(d_minus)},
            {"kappa", std::move(kappa)},
            {"chi", std::move(chi)},
            {"dim_A", params.dim_A},
            {"kappa_F", to_json(params.kappa_F)},
            {"S_D", to_json(params.S_D)},
            {"d", params.d},
            {"kappa_over_dim", to_json(params.kappa_over_dim())},
            {"integrality_scale", params.integrality_scale.get_str()}};
}

Json to_json(const GitVerdict& verdict) {
    Json out{{"status", to_string(verdict.status)},
             {"exactness", to_string(verdict.exactness)},
             {"candidates_checked", verdict.candidates_checked}};
    out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json();
    out["witness_mu"] = verdict.witness_mu ? to_json(*verdict.witness_mu) : Json();
    out["witness_closure"] = verdict.witness_closure ? to_json(*verdict.witness_closure) : Json();
    return out;
}

Json to_json(const OneStepWeight& weight) {
    return {{"mu", to_json(weight.mu)},
            {"kappa_F_prime", to_json(weight.kappa_F_prime)},
            {"chi_A_prime", to_json(weight.chi_A_prime)},
            {"dim_A_prime", weight.dim_A_prime},
            {"closure_dims", to_json(weight.closure_dims)}};
}

Json to_json(const LimitReport& report) {
    Json rows = Json::array();
    for (const LimitRow& row : report.rows)
        rows.push_back({{"index", row.index},
                        {"window_size", row.window_size},
                        {"error_abs", to_json(row.error_abs)},
                        {"majorant", to_json(row.majorant)}});
    return {{"rows", std::move(rows)},
            {"majorant_nonincreasing", report.majorant_nonincreasing},
            {"final_error_below_bound", report.final_error_below_bound},
            {"passed", report.passed}};
}

Json to_json(const WindowChoice& choice) {
    Json certificate = Json::array();
    for (const auto& [h_prime, value] : choice.certificate)
        certificate.push_back({{"h_prime", to_json(h_prime)}, {"theta_tilde", to_json(value)}});
    return {{"index", choice.index},
            {"window", to_json(choice.window)},
            {"theta_min", to_json(choice.theta_min)},
            {"majorant", to_json(choice.majorant)},
            {"parameters", to_json(choice.parameters)},
            {"certificate", std::move(certificate)}};
}

Json to_json(const ActionSpec& action, const QuotientPoint& point) {
    Json out = Json::array();
    for (const auto& [exponents, value] : point.coordinates)
        out.push_back({{"monomial", monomial_to_string(action, exponents)},
                       {"exponents", exponents},
                       {"value", to_json(value)}});
    return out;
}

Json to_json(const ActionSpec& action, const InvariantGenerators& gens) {
    Json generators = Json::array();
    for (const std::vector<long>& exponents : gens.exponents)
        generators.push_back({{"monomial", monomial_to_string(action, exponents)},
                              {"exponents", exponents}});
    return {{"degree_bound", gens.degree_bound}, {"generators", std::move(generators)}};
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace constellab
