#include "kcbg/json_io.hpp"

#include "json.hpp"

namespace kcbg {

std::string to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["verdict"] = report.verdict;
    j["method"] = method_name(report.method);
    if (report.witness) {
        nlohmann::ordered_json w;
        if (const auto* s = std::get_if<FaultSetWitness>(&*report.witness)) {
            w["kind"] = "fault_set_U";
            w["vertices"] = s->u_vertices;
        } else {
            const auto& h = std::get<HallWitness>(*report.witness);
            w["kind"] = "hall_violator_V";
            w["vertices"] = h.v_vertices;
        }
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["work"] = report.work;
    j["wall_ms"] = report.wall_ms;
    return j.dump(2) + "\n";
}

std::string to_json(const ConnectivityReport& report, int n, int m) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["k"] = n - m;
    j["kappa"] = report.kappa;
    j["kappa_U"] = report.kappa_U;
    j["kappa_V"] = report.kappa_V;
    j["delta_U"] = report.degrees.delta_U;
    j["Delta_U"] = report.degrees.Delta_U;
    j["delta_V"] = report.degrees.delta_V;
    j["Delta_V"] = report.degrees.Delta_V;
    j["edge_count"] = report.degrees.edge_count;
    j["components"] = report.components;
    nlohmann::ordered_json bounds;
    bounds["kappa_V_ge_k"] = report.kappaV_bound_ok;
    bounds["kappa_U_ge_min_deltaU_k"] = report.kappaU_bound_ok;
    bounds["kappa_ge_min_delta_k"] = report.kappa_bound_ok;
    if (report.small_separator_isolates_u) {
        bounds["small_separator_isolates_u"] = *report.small_separator_isolates_u;
    } else {
        bounds["small_separator_isolates_u"] = nullptr;
    }
    j["bounds"] = std::move(bounds);
    return j.dump(2) + "\n";
}

}  // namespace kcbg
