#ifndef BALLPOLY_CLI_HPP
#define BALLPOLY_CLI_HPP

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 a construction hit a singular coefficient, 3 invalid arguments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballpoly/families.hpp"
#include "ballpoly/quadrature.hpp"
#include "ballpoly/random.hpp"
#include "ballpoly/serialize.hpp"
#include "ballpoly/spectral.hpp"

namespace ballpoly::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kSingular = 2, kInvalidArguments = 3 };

class InvalidArguments : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandConfig {
  std::string subcommand;
  std::string family = "u";
  int d = 2;
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  int k = 2;
  std::optional<std::string> mu;
  std::string lambda = "1";
  std::string ip = "bilap";
  std::optional<std::string> ip_mu;
  std::optional<int> ip_n;
  std::string mode = "cross";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 20070601;
  int trials = 50;
};

namespace detail {

inline Rational parse_arg_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw InvalidArguments(std::string("malformed rational for ") + flag + ": " + text);
  }
}

inline std::pair<int, int> degree_range(const CommandConfig& c) {
  if (c.n) {
    if (c.n_min || c.n_max) throw InvalidArguments("use either --n or --n-min/--n-max");
    return {*c.n, *c.n};
  }
  if (!c.n_max) throw InvalidArguments("a degree is required: --n or --n-max");
  const int lo = c.n_min.value_or(0);
  if (lo < 0 || *c.n_max < lo) throw InvalidArguments("invalid degree range");
  return {lo, *c.n_max};
}

inline int family_mu(const CommandConfig& c) {
  if (!c.mu) throw InvalidArguments("--mu is required for the wmu family");
  const Rational mu = parse_arg_rational(*c.mu, "--mu");
  if (!is_integer(mu) || mu < 0) throw InvalidArguments("wmu family needs an integer --mu >= 0");
  return static_cast<int>(mu.get_num().get_si());
}

inline FamilyKind parse_family(const CommandConfig& c) {
  if (c.family == "wmu") return family::WMu{family_mu(c)};
  if (c.family == "wminus1") return family::WMinus1{};
  if (c.family == "vdelta") return family::VDelta{};
  if (c.family == "vminus2") return family::VMinus2{};
  if (c.family == "u") {
    if (c.k < 2) throw InvalidArguments("--k must be >= 2");
    return family::UMinusK{c.k};
  }
  throw InvalidArguments("unknown family: " + c.family);
}

/// Operator parameter: --mu if given, otherwise the family's natural value.
inline Rational operator_mu(const CommandConfig& c, const FamilyKind& kind) {
  if (c.mu) return parse_arg_rational(*c.mu, "--mu");
  if (std::holds_alternative<family::WMinus1>(kind)) return -1;
  if (const auto* u = std::get_if<family::UMinusK>(&kind)) return -u->k;
  throw InvalidArguments("--mu is required for family " + c.family);
}

inline InnerProductSpec parse_ip(const CommandConfig& c, const FamilyKind& kind, int n) {
  const Rational lambda = parse_arg_rational(c.lambda, "--lambda");
  InnerProductSpec spec;
  if (c.ip == "classical") {
    int mu = 0;
    if (c.ip_mu) {
      const Rational m = parse_arg_rational(*c.ip_mu, "--ip-mu");
      if (!is_integer(m) || m < 0) throw InvalidArguments("classical form needs an integer --ip-mu >= 0");
      mu = static_cast<int>(m.get_num().get_si());
    } else if (const auto* w = std::get_if<family::WMu>(&kind)) {
      mu = w->mu;
    }
    spec = ClassicalForm{mu};
  } else if (c.ip == "grad") {
    spec = GradForm{lambda};
  } else if (c.ip == "bilap") {
    spec = BiLaplacianForm{lambda};
  } else if (c.ip == "delta") {
    spec = DeltaForm{};
  } else if (c.ip == "star") {
    const Rational mu = c.ip_mu ? parse_arg_rational(*c.ip_mu, "--ip-mu") : Rational(1);
    spec = StarForm{lambda, mu, c.ip_n.value_or(n)};
  } else {
    throw InvalidArguments("unknown inner product: " + c.ip);
  }
  try {
    validate(spec);
  } catch (const std::domain_error& e) {
    throw InvalidArguments(e.what());
  }
  return spec;
}

inline Json singular_json(const SingularCoefficient& e) {
  return Json{{"error", "singular_coefficient"}, {"n", e.n}, {"j", e.j}, {"nu", e.nu}, {"k", e.k}, {"d", e.d}};
}

struct Output {
  std::string body;
  int code = kOk;
};

inline Output cmd_basis(const CommandConfig& c, std::ostream& err) {
  if (!c.n || c.n_min || c.n_max) throw InvalidArguments("basis needs a single --n");
  const FamilyKind kind = parse_family(c);
  BasisFamily fam;
  try {
    fam = make_family(kind, c.d, *c.n);
  } catch (const SingularCoefficient& e) {
    err << singular_json(e).dump() << '\n';
    return {"", kSingular};
  }
  std::ostringstream out;
  if (c.format == "json") {
    out << to_json(fam).dump(2) << '\n';
  } else if (c.format == "csv") {
    out << csv_row({"part", "j", "nu", "poly"});
    for (const auto& e : fam.elements) {
      out << csv_row({e.label.part, std::to_string(e.label.j), std::to_string(e.label.nu), to_string(e.poly)});
    }
  } else {
    out << kind_name(fam.kind) << " d=" << fam.dimension << " n=" << fam.degree << " size=" << fam.size() << '\n';
    for (const auto& e : fam.elements) out << to_string(e.label) << ": " << to_string(e.poly) << '\n';
  }
  return {out.str(), kOk};
}

inline Output cmd_eigencheck(const CommandConfig& c) {
  const FamilyKind kind = parse_family(c);
  const Rational mu = operator_mu(c, kind);
  const auto [lo, hi] = degree_range(c);
  Json reports = Json::array();
  std::ostringstream csv;
  csv << csv_row({"n", "status", "elements", "failing"});
  std::ostringstream text;
  bool failed = false;
  bool singular = false;
  for (int n = lo; n <= hi; ++n) {
    try {
      const EigenReport r = check_eigen(make_family(kind, c.d, n), mu);
      Json j = to_json(r);
      reports.push_back(j);
      failed = failed || !r.pass;
      const std::string status = r.pass ? "pass" : "fail";
      csv << csv_row({std::to_string(n), status, j["parameters"]["elements"].dump(),
                      j["parameters"]["failing"].dump()});
      text << "n=" << n << " " << status << " (" << r.residual_zero.size() << " elements, lambda="
           << to_string(r.eigenvalue) << ")\n";
    } catch (const SingularCoefficient& e) {
      singular = true;
      reports.push_back(Json{{"claim", "construction"}, {"parameters", Json{{"n", n}}}, {"pass", false},
                             {"witnesses", Json::array({singular_json(e)})}});
      csv << csv_row({std::to_string(n), "singular", "", ""});
      text << "n=" << n << " singular (j=" << e.j << ", nu=" << e.nu << ")\n";
    }
  }
  const int code = failed ? kCheckFailed : (singular ? kSingular : kOk);
  if (c.format == "csv") return {csv.str(), code};
  if (c.format == "text") return {text.str(), code};
  Json doc{{"command", "eigencheck"},
           {"family", c.family},
           {"d", c.d},
           {"mu", to_string(mu)},
           {"pass", code == kOk},
           {"reports", reports}};
  return {doc.dump(2) + "\n", code};
}

inline Output cmd_orthocheck(const CommandConfig& c) {
  const FamilyKind kind = parse_family(c);
  const auto [lo, hi] = degree_range(c);
  if (c.mode != "within" && c.mode != "cross") throw InvalidArguments("--mode must be within or cross");
  Json reports = Json::array();
  std::ostringstream csv;
  csv << csv_row({"n", "status", "entries_checked", "nonzero"});
  std::ostringstream text;
  bool failed = false;
  bool singular = false;
  for (int n = lo; n <= hi; ++n) {
    const InnerProductSpec spec = parse_ip(c, kind, n);
    try {
      const BasisFamily fam = make_family(kind, c.d, n);
      const GramReport r = c.mode == "cross" ? check_cross_degree(fam, spec) : check_within_degree(fam, spec);
      reports.push_back(to_json(r));
      failed = failed || !r.pass;
      const std::string status = r.pass ? "pass" : "fail";
      csv << csv_row({std::to_string(n), status, std::to_string(r.entries_checked), std::to_string(r.nonzero.size())});
      text << "n=" << n << " " << status << " " << r.inner_product << " (" << r.entries_checked << " entries, "
           << r.nonzero.size() << " nonzero)\n";
    } catch (const SingularCoefficient& e) {
      singular = true;
      reports.push_back(Json{{"claim", "construction"}, {"parameters", Json{{"n", n}}}, {"pass", false},
                             {"witnesses", Json::array({singular_json(e)})}});
      csv << csv_row({std::to_string(n), "singular", "", ""});
      text << "n=" << n << " singular (j=" << e.j << ", nu=" << e.nu << ")\n";
    }
  }
  const int code = failed ? kCheckFailed : (singular ? kSingular : kOk);
  if (c.format == "csv") return {csv.str(), code};
  if (c.format == "text") return {text.str(), code};
  Json doc{{"command", "orthocheck"}, {"family", c.family}, {"d", c.d}, {"mode", c.mode},
           {"pass", code == kOk}, {"reports", reports}};
  return {doc.dump(2) + "\n", code};
}

inline Output cmd_dimtable(const CommandConfig& c) {
  if (c.k < 2) throw InvalidArguments("--k must be >= 2");
  const auto [lo, hi] = degree_range(c);
  Json rows = Json::array();
  std::ostringstream csv;
  csv << csv_row({"n", "sigma_n", "dim_P", "achieved", "complete", "singular_j", "singular_nu"});
  std::ostringstream text;
  for (int n = lo; n <= hi; ++n) {
    const long sigma = harmonic_dimension(c.d, n);
    const long dim_p = homogeneous_dimension(c.d, n);
    // Count shell by shell so that every singular shell is reported.
    long achieved = harmonic_dimension(c.d, n) + homogeneous_dimension(c.d, n - 2 * c.k);
    std::optional<std::pair<int, int>> witness;
    for (int j = 1; j <= c.k - 1 && n - 2 * j >= 0; ++j) {
      try {
        shell_multiplier(j, n, c.k, c.d);
        achieved += harmonic_dimension(c.d, n - 2 * j);
      } catch (const SingularCoefficient& e) {
        if (!witness) witness = std::make_pair(e.j, e.nu);
      }
    }
    const bool complete = achieved == dim_p && !witness;
    Json row{{"n", n}, {"sigma_n", sigma}, {"dim_P", dim_p}, {"achieved", achieved}, {"complete", complete}};
    row["singular"] = witness ? Json{{"j", witness->first}, {"nu", witness->second}} : Json(nullptr);
    rows.push_back(row);
    csv << csv_row({std::to_string(n), std::to_string(sigma), std::to_string(dim_p), std::to_string(achieved),
                    complete ? "true" : "false", witness ? std::to_string(witness->first) : "",
                    witness ? std::to_string(witness->second) : ""});
    text << "n=" << n << " sigma=" << sigma << " dimP=" << dim_p << " achieved=" << achieved
         << (witness ? " SINGULAR" : "") << '\n';
  }
  if (c.format == "csv") return {csv.str(), kOk};
  if (c.format == "text") return {text.str(), kOk};
  Json doc{{"command", "dimtable"}, {"d", c.d}, {"k", c.k}, {"rows", rows}};
  return {doc.dump(2) + "\n", kOk};
}

inline Output cmd_coeffs(const CommandConfig& c) {
  if (!c.n) throw InvalidArguments("coeffs needs --n");
  if (c.k < 2) throw InvalidArguments("--k must be >= 2");
  const int n = *c.n;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << csv_row({"j", "nu", "value"});
  std::ostringstream text;
  for (int j = 1; j <= c.k - 1; ++j) {
    Json entries = Json::array();
    text << "j=" << j << ':';
    for (int nu = 0; nu <= j; ++nu) {
      std::string value;
      try {
        value = to_string(a_coefficient(j, nu, n, c.k, c.d));
      } catch (const SingularCoefficient&) {
        value = "singular";
      }
      entries.push_back(Json{{"nu", nu}, {"value", value}});
      csv << csv_row({std::to_string(j), std::to_string(nu), value});
      text << ' ' << value;
    }
    text << '\n';
    rows.push_back(Json{{"j", j}, {"entries", entries}});
  }
  if (c.format == "csv") return {csv.str(), kOk};
  if (c.format == "text") return {text.str(), kOk};
  Json doc{{"command", "coeffs"}, {"n", n}, {"k", c.k}, {"d", c.d}, {"rows", rows}};
  return {doc.dump(2) + "\n", kOk};
}

inline Output cmd_gram(const CommandConfig& c) {
  if (!c.n || c.n_min || c.n_max) throw InvalidArguments("gram needs a single --n");
  const FamilyKind kind = parse_family(c);
  const InnerProductSpec spec = parse_ip(c, kind, *c.n);
  const RationalMatrix g = gram_matrix(make_family(kind, c.d, *c.n).polynomials(), spec);
  if (c.format == "csv") return {to_csv(g), kOk};
  Json doc{{"command", "gram"}, {"family", c.family}, {"d", c.d}, {"n", *c.n}, {"inner_product", describe(spec)},
           {"matrix", to_json(g)}};
  return {doc.dump(2) + "\n", kOk};
}

/// Seeded operator identities: the one-factor and k-factor product identities
/// on random (mu, k, p).
inline Output cmd_identities(const CommandConfig& c) {
  PolynomialSampler sampler(c.seed);
  const std::vector<Rational> mus = {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, make_rational(-1, 2), make_rational(3, 2)};
  Json witnesses = Json::array();
  for (int t = 0; t < c.trials; ++t) {
    const Rational mu = mus[static_cast<std::size_t>(sampler.integer(0, static_cast<int>(mus.size()) - 1))];
    const int d = sampler.integer(1, 4);
    const int k = sampler.integer(1, 3);
    const Polynomial p = sampler.polynomial(d, sampler.integer(0, 5));
    const Polynomial r1 = verify_lemma31(mu, p);
    const Polynomial rk = verify_power_identity(mu, k, p);
    if (!r1.is_zero() || !rk.is_zero()) {
      witnesses.push_back(Json{{"mu", to_string(mu)}, {"k", k}, {"d", d}, {"p", to_string(p)},
                               {"lemma_residual", to_string(r1)}, {"power_residual", to_string(rk)}});
    }
  }
  const bool pass = witnesses.empty();
  Json doc{{"claim", "product identities for L_mu[(1-|x|^2)^k P]"},
           {"parameters", Json{{"seed", c.seed}, {"trials", c.trials}}},
           {"pass", pass},
           {"witnesses", witnesses}};
  return {doc.dump(2) + "\n", pass ? kOk : kCheckFailed};
}

inline Output cmd_demo() {
  const Json doc = to_json(missing_eigenpolynomial_demo());
  return {doc.dump(2) + "\n", doc["pass"].get<bool>() ? kOk : kCheckFailed};
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Exact eigenfunctions and orthogonality checks for ball operators"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "ambient dimension")->check(CLI::Range(1, 12));
    sub->add_option("--format", c.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "output file (default stdout)");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "wmu | wminus1 | vdelta | vminus2 | u")
        ->check(CLI::IsMember({"wmu", "wminus1", "vdelta", "vminus2", "u"}));
    sub->add_option("--k", c.k, "k for the U(W_{-k}) family");
    sub->add_option("--mu", c.mu, "weight exponent (wmu) or operator parameter");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "degree");
    sub->add_option("--n-min", c.n_min, "first degree");
    sub->add_option("--n-max", c.n_max, "last degree");
  };
  auto add_ip = [&](CLI::App* sub) {
    sub->add_option("--ip", c.ip, "classical | grad | bilap | delta | star")
        ->check(CLI::IsMember({"classical", "grad", "bilap", "delta", "star"}));
    sub->add_option("--lambda", c.lambda, "lambda > 0 for grad/bilap/star");
    sub->add_option("--ip-mu", c.ip_mu, "classical weight exponent or star surface weight");
    sub->add_option("--ip-n", c.ip_n, "degree parameter of the star form (default: family degree)");
  };

  auto* basis = app.add_subcommand("basis", "emit a basis family");
  add_common(basis);
  add_family(basis);
  add_range(basis);

  auto* eigen = app.add_subcommand("eigencheck", "verify L_mu P = lambda_n P over a degree range");
  add_common(eigen);
  add_family(eigen);
  add_range(eigen);

  auto* ortho = app.add_subcommand("orthocheck", "verify vanishing Gram entries");
  add_common(ortho);
  add_family(ortho);
  add_range(ortho);
  add_ip(ortho);
  ortho->add_option("--mode", c.mode, "within | cross")->check(CLI::IsMember({"within", "cross"}));

  auto* dimtable = app.add_subcommand("dimtable", "dimension table for U(W_{-k})");
  add_common(dimtable);
  dimtable->add_option("--k", c.k, "k >= 2");
  add_range(dimtable);

  auto* coeffs = app.add_subcommand("coeffs", "correction coefficients a_{j,nu}^n");
  add_common(coeffs);
  coeffs->add_option("--k", c.k, "k >= 2");
  coeffs->add_option("--n", c.n, "degree")->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of a family");
  add_common(gram);
  add_family(gram);
  add_range(gram);
  add_ip(gram);

  auto* identities = app.add_subcommand("identities", "seeded checks of the product identities for L_mu");
  add_common(identities);
  identities->add_option("--seed", c.seed, "PRNG seed");
  identities->add_option("--trials", c.trials, "number of random cases");

  auto* demo = app.add_subcommand("demo", "the missing degree-2 eigenpolynomial of L_{-2} for d = 2");
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalidArguments;
  }

  detail::Output result;
  try {
    if (basis->parsed()) result = detail::cmd_basis(c, err);
    else if (eigen->parsed()) result = detail::cmd_eigencheck(c);
    else if (ortho->parsed()) result = detail::cmd_orthocheck(c);
    else if (dimtable->parsed()) result = detail::cmd_dimtable(c);
    else if (coeffs->parsed()) result = detail::cmd_coeffs(c);
    else if (gram->parsed()) result = detail::cmd_gram(c);
    else if (identities->parsed()) result = detail::cmd_identities(c);
    else result = detail::cmd_demo();
  } catch (const InvalidArguments& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const SingularCoefficient& e) {
    err << detail::singular_json(e).dump() << '\n';
    return kSingular;
  }

  if (c.out.empty()) {
    out << result.body;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "cannot open output file: " << c.out << '\n';
      return kInvalidArguments;
    }
    file << result.body;
  }
  return result.code;
}

}  // namespace ballpoly::cli

#endif  // BALLPOLY_CLI_HPP
