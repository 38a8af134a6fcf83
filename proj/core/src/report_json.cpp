#include "qwalk/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qwalk {

double round_sig12(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x; // normalize -0.0 too
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

Json complex_to_json(const Complex& z) {
    return Json{{"re", round_sig12(z.real())}, {"im", round_sig12(z.imag())}};
}

Json multiset_to_json(const std::vector<Complex>& values, double cluster_tol) {
    Json clustered = Json::array();
    for (const auto& [rep, count] : cluster_eigenvalues(values, cluster_tol)) {
        Json entry = complex_to_json(rep);
        entry["multiplicity"] = count;
        clustered.push_back(std::move(entry));
    }
    Json raw = Json::array();
    for (const Complex& z : values) raw.push_back(complex_to_json(z));
    return Json{{"eigenvalues", std::move(clustered)}, {"raw", std::move(raw)}};
}

Json spectrum_report_to_json(const SpectrumReport& rep) {
    Json j;
    j["provenance"] = rep.provenance == Provenance::Formula ? "formula" : "direct";
    j["dimension"] = rep.dimension;
    if (rep.provenance == Provenance::Formula) {
        j["s"] = rep.s;
        j["t"] = rep.t;
        j["plus_one_multiplicity"] = rep.plus_one_multiplicity;
        j["minus_one_multiplicity"] = rep.minus_one_multiplicity;
        Json lifted = Json::array();
        for (const LiftedPair& p : rep.lifted) {
            lifted.push_back(Json{{"disc", round_sig12(p.disc_value)},
                                  {"plus", complex_to_json(p.plus)},
                                  {"minus", complex_to_json(p.minus)}});
        }
        j["lifted"] = std::move(lifted);
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    j["spectrum"] = multiset_to_json(rep.values);
    return j;
}

Json spectrum_comparison_json(const SpectrumReport& formula, const SpectrumReport& direct,
                              double tol) {
    const MatchReport match = multiset_match(formula.multiset(), direct.multiset(), tol);
    Json j;
    j["formula"] = spectrum_report_to_json(formula);
    j["direct"] = spectrum_report_to_json(direct);
    j["match"] = Json{{"ok", match.ok},
                      {"max_distance", round_sig12(match.max_distance)},
                      {"tolerance", round_sig12(tol)}};
    return j;
}

Json hitting_report_to_json(const HittingReport& rep) {
    Json j;
    j["threshold"] = round_sig12(rep.threshold);
    j["cap"] = rep.cap;
    j["doubly_stochastic"] = rep.doubly_stochastic;
    if (!rep.doubly_stochastic) j["semantics"] = "diagnostic";
    if (rep.t_hit) {
        j["t_hit"] = *rep.t_hit;
        j["f_at_t_hit"] = round_sig12(rep.f_values.back());
    } else {
        j["t_hit"] = nullptr;
    }
    j["classical_gap"] = round_sig12(rep.classical_gap);
    Json f = Json::array();
    for (double v : rep.f_values) f.push_back(round_sig12(v));
    j["f_values"] = std::move(f);
    return j;
}

} // namespace qwalk
