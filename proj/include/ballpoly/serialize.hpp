#ifndef BALLPOLY_SERIALIZE_HPP
#define BALLPOLY_SERIALIZE_HPP

// JSON and CSV views of polynomials, families, Gram matrices and reports.
// Rationals are always strings "num/den", never floats.

#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ballpoly/families.hpp"
#include "ballpoly/polynomial.hpp"
#include "ballpoly/quadrature.hpp"
#include "ballpoly/spectral.hpp"

namespace ballpoly {

using Json = nlohmann::ordered_json;

inline Json family_params(const FamilyKind& kind) {
  return std::visit(
      [](const auto& f) -> Json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::WMu>) return Json{{"mu", f.mu}};
        else if constexpr (std::is_same_v<T, family::UMinusK>) return Json{{"k", f.k}};
        else return Json::object();
      },
      kind);
}

inline Json to_json(const ElementLabel& label) {
  return Json{{"part", label.part}, {"j", label.j}, {"nu", label.nu}};
}

/// {kind, d, n, params, elements: [{label: {part, j, nu}, poly}]}
inline Json to_json(const BasisFamily& fam) {
  Json elements = Json::array();
  for (const auto& e : fam.elements) elements.push_back(Json{{"label", to_json(e.label)}, {"poly", to_string(e.poly)}});
  return Json{{"kind", kind_name(fam.kind)},
              {"d", fam.dimension},
              {"n", fam.degree},
              {"params", family_params(fam.kind)},
              {"elements", std::move(elements)}};
}

inline Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// RFC-4180 field quoting.
inline std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\r\n";
}

inline std::string to_csv(const RationalMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    std::vector<std::string> fields;
    for (const auto& v : row) fields.push_back(to_string(v));
    out += csv_row(fields);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports: {claim, parameters, pass, witnesses}

inline Json to_json(const EigenReport& r) {
  Json witnesses = Json::array();
  if (r.worst) {
    witnesses.push_back(Json{{"label", to_json(r.worst->first)}, {"residual", to_string(r.worst->second)}});
  }
  std::size_t failing = 0;
  for (bool z : r.residual_zero) failing += z ? 0 : 1;
  return Json{{"claim", "L_mu P = lambda_n P for every element"},
              {"parameters",
               Json{{"family", r.family},
                    {"d", r.dimension},
                    {"n", r.degree},
                    {"mu", to_string(r.mu)},
                    {"eigenvalue", to_string(r.eigenvalue)},
                    {"elements", r.residual_zero.size()},
                    {"failing", failing}}},
              {"pass", r.pass},
              {"witnesses", std::move(witnesses)}};
}

inline Json to_json(const GramReport& r) {
  Json witnesses = Json::array();
  for (const auto& e : r.nonzero) {
    witnesses.push_back(Json{{"row", e.row}, {"column", e.column}, {"value", to_string(e.value)}});
  }
  return Json{{"claim", "Gram entries vanish: " + r.description},
              {"parameters",
               Json{{"inner_product", r.inner_product}, {"mode", r.mode}, {"entries_checked", r.entries_checked}}},
              {"pass", r.pass},
              {"witnesses", std::move(witnesses)}};
}

inline Json to_json(const SymmetryReport& r) {
  Json witnesses = Json::array();
  if (r.counterexample) {
    witnesses.push_back(Json{{"f", to_string(r.counterexample->f)},
                             {"g", to_string(r.counterexample->g)},
                             {"lhs", to_string(r.counterexample->lhs)},
                             {"rhs", to_string(r.counterexample->rhs)}});
  }
  return Json{{"claim", "<L_mu f, g>_mu = <f, L_mu g>_mu"},
              {"parameters", Json{{"mu", r.mu}, {"d", r.dimension}, {"trials", r.trials}, {"seed", r.seed}}},
              {"pass", r.pass},
              {"witnesses", std::move(witnesses)}};
}

inline Json to_json(const MissingEigenReport& r) {
  Json annihilated = Json::object();
  for (const auto& [name, ok] : r.annihilated) annihilated[name] = ok;
  Json kernel = Json::array();
  for (const auto& p : r.kernel) kernel.push_back(to_string(p));
  const bool pass = r.eigenvalue == 0 && r.kernel_top_parts_harmonic &&
                    r.kernel_degree_two + 1 == r.degree_two_needed;
  return Json{{"claim", "L_{-2} on Pi_2^2 misses exactly one degree-2 eigenpolynomial"},
              {"parameters",
               Json{{"d", 2},
                    {"k", 2},
                    {"eigenvalue", to_string(r.eigenvalue)},
                    {"space_dimension", r.space_dimension},
                    {"kernel_dimension", r.kernel.size()},
                    {"kernel_degree_two", r.kernel_degree_two},
                    {"degree_two_needed", r.degree_two_needed},
                    {"annihilated", annihilated}}},
              {"pass", pass},
              {"witnesses", std::move(kernel)}};
}

}  // namespace ballpoly

#endif  // BALLPOLY_SERIALIZE_HPP
