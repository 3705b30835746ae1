// Command-line front end: classification scans, identity verification,
// spectra of x/p/H, three-term recurrence data, and the equivalence check.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ospxp/classification.hpp"
#include "ospxp/json_io.hpp"
#include "ospxp/matrix_rep.hpp"
#include "ospxp/rational.hpp"
#include "ospxp/relations.hpp"
#include "ospxp/spectral.hpp"

using nlohmann::json;

namespace {

struct MuValue {
  std::optional<ospxp::Rational> exact;  // set when written as p/q
  double value = 0.0;
  std::string text;
};

MuValue parse_mu(const std::string& s) {
  MuValue mu;
  mu.text = s;
  if (auto r = ospxp::parse_rational(s)) {
    mu.exact = *r;
    mu.value = ospxp::to_double(*r);
    return mu;
  }
  std::size_t used = 0;
  mu.value = std::stod(s, &used);
  if (used != s.size())
    throw ospxp::InvalidParameter("cannot parse mu: " + s);
  return mu;
}

std::vector<double> parse_interval_radii(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  if (out.empty()) throw ospxp::InvalidParameter("empty interval list");
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("OSP_SPECTRAL_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

template <class Task>
std::vector<json> run_sweep(const std::vector<MuValue>& mus, Task task) {
  const unsigned cap = sweep_threads();
  std::vector<json> results(mus.size());
  if (cap <= 1 || mus.size() <= 1) {
    for (std::size_t i = 0; i < mus.size(); ++i) results[i] = task(mus[i]);
    return results;
  }
  std::vector<std::future<void>> workers;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < std::min<std::size_t>(cap, mus.size()); ++w) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < mus.size(); i = next++)
        results[i] = task(mus[i]);
    }));
  }
  for (auto& worker : workers) worker.get();
  return results;
}

int run_verify(const MuValue& mu, int dim, const std::string& family_name,
               double tolerance, const std::string& format,
               const std::string& out_path) {
  const ospxp::Family family = family_name == "equiv"
                                   ? ospxp::Family::EquivActions
                                   : ospxp::Family::FinalActions;
  const auto rep = ospxp::build_rep(mu.value, dim, family);
  const auto assignment = ospxp::make_assignment(rep);
  std::vector<ospxp::RelationReport> reports;
  for (const auto& identity : ospxp::defining_relation_suite())
    reports.push_back(ospxp::check_identity(identity, assignment, tolerance));
  reports.push_back(ospxp::star_adjoint_check(assignment, tolerance));

  bool all_pass = true;
  std::ostringstream os;
  json arr = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    if (format == "json") {
      arr.push_back(ospxp::to_json(r));
    } else {
      os << (r.pass ? "PASS" : "FAIL") << " " << r.identity
         << " residual=" << r.residual << " interior=" << r.interior << "\n";
    }
  }
  write_output(format == "json" ? arr.dump(2) : os.str(), out_path);
  return all_pass ? 0 : 1;
}

json classify_one(const MuValue& mu, long k_max) {
  if (mu.exact)
    return ospxp::classification_to_json(*mu.exact,
                                         ospxp::classify(*mu.exact, k_max));
  return ospxp::classification_to_json(mu.value,
                                       ospxp::classify(mu.value, k_max));
}

json spectrum_one(const MuValue& mu, const std::string& op,
                  const std::string& parity, int dim,
                  const std::vector<double>& radii) {
  auto report_json = [&](const ospxp::TridiagonalSystem& sys) {
    return ospxp::to_json(ospxp::compute_spectrum(sys, radii));
  };
  if (op == "x") return report_json(ospxp::jacobi_of_position(mu.value, dim));
  if (op == "p") return report_json(ospxp::jacobi_of_momentum(mu.value, dim));
  if (op != "H") throw ospxp::InvalidParameter("operator must be x, p or H");
  if (parity == "even")
    return report_json(
        ospxp::jacobi_of_hamiltonian(mu.value, dim, ospxp::Parity::Even));
  if (parity == "odd")
    return report_json(
        ospxp::jacobi_of_hamiltonian(mu.value, dim, ospxp::Parity::Odd));
  // both: emit both blocks plus the merged eigenvalue multiset.
  const auto even = ospxp::compute_spectrum(
      ospxp::jacobi_of_hamiltonian(mu.value, dim, ospxp::Parity::Even), radii);
  const auto odd = ospxp::compute_spectrum(
      ospxp::jacobi_of_hamiltonian(mu.value, dim, ospxp::Parity::Odd), radii);
  std::vector<double> merged = even.eigenvalues;
  merged.insert(merged.end(), odd.eigenvalues.begin(), odd.eigenvalues.end());
  std::sort(merged.begin(), merged.end());
  return json{{"even", ospxp::to_json(even)},
              {"odd", ospxp::to_json(odd)},
              {"merged", merged}};
}

std::string spectrum_csv(const json& j) {
  auto one = [](const json& r) {
    return ospxp::spectrum_to_csv(ospxp::spectrum_report_from_json(r));
  };
  if (j.contains("even")) {
    std::string even = one(j["even"]), odd = one(j["odd"]);
    // drop the duplicate header of the second block
    return even + odd.substr(odd.find('\n') + 1);
  }
  return one(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner quantization of H = xp: osp(1|2) representation "
               "classification, identity verification and spectra"};
  app.require_subcommand(1);

  std::string mu_text = "1/4", mu_list_text, family_name = "final";
  std::string op = "x", parity = "both", format = "json", out_path;
  std::string intervals_text = "1,2,5";
  int dim = 64;
  long k_max = 200;
  double tolerance = 1e-10, t_value = 0.0;
  bool emit_zeros = false;

  auto* verify = app.add_subcommand("verify", "run the identity suite on a truncated realization");
  verify->add_option("--mu", mu_text, "representation parameter (p/q for exact mode)");
  verify->add_option("--dim", dim, "truncation dimension");
  verify->add_option("--family", family_name, "final|equiv")
      ->check(CLI::IsMember({"final", "equiv"}));
  verify->add_option("--tolerance", tolerance, "residual tolerance");
  verify->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "output path (default stdout)");

  auto* classify = app.add_subcommand("classify", "admissibility scan over the candidate parameter points");
  classify->add_option("--mu", mu_text, "parameter (p/q for exact mode)");
  classify->add_option("--mu-list", mu_list_text, "comma-separated sweep");
  classify->add_option("--kmax", k_max, "positivity scan depth");
  classify->add_option("--out", out_path, "output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of x, p or an H parity block");
  spectrum->add_option("--operator", op, "x|p|H")
      ->check(CLI::IsMember({"x", "p", "H"}));
  spectrum->add_option("--mu", mu_text, "representation parameter");
  spectrum->add_option("--mu-list", mu_list_text, "comma-separated sweep");
  spectrum->add_option("--parity", parity, "even|odd|both (H only)")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  spectrum->add_option("--dim", dim, "system dimension");
  spectrum->add_option("--intervals", intervals_text, "interval radii, e.g. 1,2,5");
  spectrum->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("--out", out_path, "output path (default stdout)");

  auto* recurrence = app.add_subcommand("recurrence", "formal eigenvector coefficients or their zeros");
  recurrence->add_option("--operator", op, "x|p|H")
      ->check(CLI::IsMember({"x", "p", "H"}));
  recurrence->add_option("--mu", mu_text, "representation parameter");
  recurrence->add_option("--parity", parity, "even|odd (H only)")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  recurrence->add_option("--dim", dim, "recurrence length");
  recurrence->add_option("--t", t_value, "candidate eigenvalue");
  recurrence->add_flag("--zeros", emit_zeros, "emit the zeros of alpha_dim instead");
  recurrence->add_option("--out", out_path, "output path (default stdout)");

  auto* equivalence = app.add_subcommand("equivalence", "second-family collapse onto mu - 1/2");
  equivalence->add_option("--mu", mu_text, "parameter, must exceed 1/2");
  equivalence->add_option("--dim", dim, "compared prefix length");
  equivalence->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<MuValue> mus;
    if (!mu_list_text.empty()) {
      std::stringstream ss(mu_list_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) mus.push_back(parse_mu(tok));
    } else {
      mus.push_back(parse_mu(mu_text));
    }

    if (verify->parsed())
      return run_verify(mus.front(), dim, family_name, tolerance, format,
                        out_path);

    if (classify->parsed()) {
      auto results =
          run_sweep(mus, [&](const MuValue& m) { return classify_one(m, k_max); });
      write_output(results.size() == 1 ? results.front().dump(2)
                                       : json(results).dump(2),
                   out_path);
      return 0;
    }

    if (spectrum->parsed()) {
      auto results = run_sweep(mus, [&](const MuValue& m) {
        return spectrum_one(m, op, parity, dim,
                            parse_interval_radii(intervals_text));
      });
      if (format == "csv") {
        std::string csv;
        for (const auto& r : results)
          csv += csv.empty() ? spectrum_csv(r)
                             : spectrum_csv(r).substr(
                                   spectrum_csv(r).find('\n') + 1);
        write_output(csv, out_path);
      } else {
        write_output(results.size() == 1 ? results.front().dump(2)
                                         : json(results).dump(2),
                     out_path);
      }
      return 0;
    }

    if (recurrence->parsed()) {
      const MuValue& m = mus.front();
      ospxp::TridiagonalSystem sys =
          op == "x"   ? ospxp::jacobi_of_position(m.value, dim + 1)
          : op == "p" ? ospxp::jacobi_of_momentum(m.value, dim + 1)
                      : ospxp::jacobi_of_hamiltonian(
                            m.value, dim + 1,
                            parity == "odd" ? ospxp::Parity::Odd
                                            : ospxp::Parity::Even);
      json j{{"mu", m.value}, {"label", ospxp::to_string(sys.label)}};
      if (emit_zeros) {
        j["zeros"] = ospxp::recurrence_zeros(sys, dim);
      } else {
        const auto v = ospxp::formal_eigenvector(sys, t_value, dim);
        j["t"] = v.t;
        j["coefficients"] = v.coefficients;
      }
      write_output(j.dump(2), out_path);
      return 0;
    }

    if (equivalence->parsed()) {
      const MuValue& m = mus.front();
      const bool equal = m.exact ? ospxp::equivalence_shift(*m.exact, dim)
                                 : ospxp::equivalence_shift(m.value, dim);
      json j{{"mu", m.text}, {"dim", dim}, {"equal", equal}};
      if (m.exact)
        j["equivalent_mu"] =
            ospxp::format_rational(*m.exact - ospxp::Rational(1, 2));
      else
        j["equivalent_mu"] = m.value - 0.5;
      write_output(j.dump(2), out_path);
      return equal ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
