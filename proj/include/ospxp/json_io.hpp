#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ospxp/classification.hpp"
#include "ospxp/matrix_rep.hpp"
#include "ospxp/relations.hpp"
#include "ospxp/spectral.hpp"

namespace ospxp {

std::string to_string(Family f);
std::string to_string(Branch b);
std::string to_string(SystemLabel l);

nlohmann::json to_json(const RelationReport& report);
RelationReport relation_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectrumReport& report);
SpectrumReport spectrum_report_from_json(const nlohmann::json& j);

/// {"mu": "1/4", "candidates": [{"delta": ..., "branch": "lambda1",
///   "admissible": bool, "family": ..., "equivalent_to_mu": ...-or-null}]}
nlohmann::json classification_to_json(
    const Rational& mu, const std::vector<CandidateResult<Rational>>& results);
nlohmann::json classification_to_json(
    double mu, const std::vector<CandidateResult<double>>& results);

/// Dense complex matrix envelope, column-major [re, im] pairs:
/// {"mu":..., "dim":..., "family":..., "operator":..., "entries":[[re,im],...]}
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m, double mu,
                              Family family, const std::string& op_name);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

/// Banded CSV for tridiagonal systems: "band,index,value" rows with band in
/// {diag, offdiag}.
std::string tridiagonal_to_csv(const TridiagonalSystem& system);

std::string spectrum_to_csv(const SpectrumReport& report);

}  // namespace ospxp
