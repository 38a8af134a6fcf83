#pragma once

#include <string>

#include <json.hpp>

#include "qwalk/eigen.hpp"
#include "qwalk/search.hpp"
#include "qwalk/spectra.hpp"

namespace qwalk {

using Json = nlohmann::ordered_json;

/// Round to 12 significant digits so serialized reports are byte-stable.
double round_sig12(double x);

Json complex_to_json(const Complex& z);

/// Eigenvalues as {"re","im","multiplicity"} triples after clustering,
/// with the unclustered list kept under "raw".
Json multiset_to_json(const std::vector<Complex>& values, double cluster_tol = 1e-7);

Json spectrum_report_to_json(const SpectrumReport& rep);

/// Formula and direct spectra side by side with their match verdict.
Json spectrum_comparison_json(const SpectrumReport& formula, const SpectrumReport& direct,
                              double tol);

Json hitting_report_to_json(const HittingReport& rep);

} // namespace qwalk
