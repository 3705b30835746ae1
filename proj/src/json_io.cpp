#include "ospxp/json_io.hpp"

#include <functional>
#include <sstream>

namespace ospxp {

using nlohmann::json;

std::string to_string(Family f) {
  switch (f) {
    case Family::FinalActions: return "FinalActions";
    case Family::EquivActions: return "EquivActions";
    default: return "None";
  }
}

std::string to_string(Branch b) {
  return b == Branch::lambda1 ? "lambda1" : "lambda2";
}

std::string to_string(SystemLabel l) {
  switch (l) {
    case SystemLabel::PositionFull: return "PositionFull";
    case SystemLabel::MomentumFull: return "MomentumFull";
    case SystemLabel::HamiltonianEven: return "HamiltonianEven";
    default: return "HamiltonianOdd";
  }
}

namespace {

SystemLabel label_from_string(const std::string& s) {
  if (s == "PositionFull") return SystemLabel::PositionFull;
  if (s == "MomentumFull") return SystemLabel::MomentumFull;
  if (s == "HamiltonianEven") return SystemLabel::HamiltonianEven;
  if (s == "HamiltonianOdd") return SystemLabel::HamiltonianOdd;
  throw InvalidParameter("unknown system label: " + s);
}

Family family_from_string(const std::string& s) {
  if (s == "FinalActions") return Family::FinalActions;
  if (s == "EquivActions") return Family::EquivActions;
  if (s == "None") return Family::None;
  throw InvalidParameter("unknown family: " + s);
}

}  // namespace

json to_json(const RelationReport& report) {
  return json{{"identity", report.identity},
              {"dimension", report.dimension},
              {"interior", report.interior},
              {"residual", report.residual},
              {"pass", report.pass},
              {"tolerance", report.tolerance}};
}

RelationReport relation_report_from_json(const json& j) {
  return {j.at("identity").get<std::string>(), j.at("dimension").get<int>(),
          j.at("interior").get<int>(),         j.at("residual").get<double>(),
          j.at("pass").get<bool>(),            j.at("tolerance").get<double>()};
}

json to_json(const SpectrumReport& report) {
  return json{{"mu", report.mu},
              {"dim", report.dimension},
              {"label", to_string(report.label)},
              {"eigenvalues", report.eigenvalues},
              {"residual", report.residual},
              {"interval_counts", report.interval_counts}};
}

SpectrumReport spectrum_report_from_json(const json& j) {
  SpectrumReport r;
  r.mu = j.at("mu").get<double>();
  r.dimension = j.at("dim").get<int>();
  r.label = label_from_string(j.at("label").get<std::string>());
  r.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  r.residual = j.at("residual").get<double>();
  r.interval_counts = j.at("interval_counts").get<std::map<std::string, int>>();
  return r;
}

namespace {

template <class Scalar>
json classification_json_impl(
    const std::string& mu_repr,
    const std::vector<CandidateResult<Scalar>>& results,
    const std::function<std::string(const Scalar&)>& repr) {
  json candidates = json::array();
  for (const auto& c : results) {
    json entry{{"delta", repr(c.params.delta)},
               {"branch", to_string(c.params.branch)},
               {"admissible", c.verdict.admissible},
               {"family", to_string(c.family)},
               {"duplicate", c.duplicate}};
    entry["equivalent_to_mu"] =
        c.equivalent_to_mu ? json(repr(*c.equivalent_to_mu)) : json(nullptr);
    if (c.verdict.lowest_weight_index)
      entry["lowest_weight_index"] = *c.verdict.lowest_weight_index;
    candidates.push_back(std::move(entry));
  }
  return json{{"mu", mu_repr}, {"candidates", std::move(candidates)}};
}

}  // namespace

json classification_to_json(const Rational& mu,
                            const std::vector<CandidateResult<Rational>>& results) {
  return classification_json_impl<Rational>(
      format_rational(mu), results,
      [](const Rational& r) { return format_rational(r); });
}

json classification_to_json(double mu,
                            const std::vector<CandidateResult<double>>& results) {
  auto repr = [](const double& v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  return classification_json_impl<double>(repr(mu), results, repr);
}

json matrix_to_json(const Eigen::MatrixXcd& m, double mu, Family family,
                    const std::string& op_name) {
  json entries = json::array();
  for (Eigen::Index col = 0; col < m.cols(); ++col)
    for (Eigen::Index row = 0; row < m.rows(); ++row)
      entries.push_back(json::array({m(row, col).real(), m(row, col).imag()}));
  return json{{"mu", mu},
              {"dim", static_cast<int>(m.rows())},
              {"family", to_string(family)},
              {"operator", op_name},
              {"entries", std::move(entries)}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  const int n = j.at("dim").get<int>();
  const auto& entries = j.at("entries");
  Eigen::MatrixXcd m(n, n);
  Eigen::Index idx = 0;
  for (Eigen::Index col = 0; col < n; ++col)
    for (Eigen::Index row = 0; row < n; ++row, ++idx)
      m(row, col) = {entries.at(idx).at(0).get<double>(),
                     entries.at(idx).at(1).get<double>()};
  return m;
}

std::string tridiagonal_to_csv(const TridiagonalSystem& system) {
  std::ostringstream os;
  os.precision(17);
  os << "band,index,value\n";
  for (Eigen::Index i = 0; i < system.diagonal.size(); ++i)
    os << "diag," << i << "," << system.diagonal[i] << "\n";
  for (Eigen::Index i = 0; i < system.offdiagonal.size(); ++i)
    os << "offdiag," << i << "," << system.offdiagonal[i] << "\n";
  return os.str();
}

std::string spectrum_to_csv(const SpectrumReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "label,index,eigenvalue\n";
  const std::string label = to_string(report.label);
  for (std::size_t i = 0; i < report.eigenvalues.size(); ++i)
    os << label << "," << i << "," << report.eigenvalues[i] << "\n";
  return os.str();
}

}  // namespace ospxp
