#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "starsum/identities.hpp"
#include "starsum/sumset.hpp"

namespace starsum {

using json = nlohmann::json;

// Wire encodings, 1-based indices throughout:
//   prime elements      -> integers
//   rational elements   -> "num/den" strings (bare integers accepted)
//   cyclotomic elements -> arrays of rational strings (scalars accepted
//                          and embedded via the constant coordinate)

inline json element_to_json(const PrimeField&, const ModP& e) { return e.value(); }
inline json element_to_json(const RationalField&, const Rational& e) { return e.to_string(); }
inline json element_to_json(const CyclotomicField&, const Cyclotomic& e) {
  json coords = json::array();
  for (const auto& c : e.coords()) coords.push_back(c.to_string());
  return coords;
}

inline ModP element_from_json(const PrimeField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  throw std::invalid_argument("prime-field element must be an integer");
}
inline Rational element_from_json(const RationalField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("rational element must be an integer or \"num/den\" string");
}
inline Cyclotomic element_from_json(const CyclotomicField& f, const json& j) {
  if (j.is_array()) {
    std::vector<Rational> coords;
    for (const auto& c : j) {
      if (c.is_number_integer())
        coords.push_back(Rational(c.get<long>()));
      else
        coords.push_back(Rational::parse(c.get<std::string>()));
    }
    return Cyclotomic(f.q(), std::move(coords));
  }
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.embed(Rational::parse(j.get<std::string>()));
  throw std::invalid_argument("cyclotomic element must be a coordinate array or a rational scalar");
}

template <typename F>
std::vector<typename F::elem> elements_from_json(const F& f, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of ring elements");
  std::vector<typename F::elem> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(element_from_json(f, e));
  return out;
}

template <typename F>
SumsetProblem<F> problem_from_json(F field, const json& j) {
  SumsetProblem<F> prob{std::move(field), {}, {}};
  if (!j.contains("sets") || !j.at("sets").is_array())
    throw std::invalid_argument("sumset config: \"sets\" array required");
  for (const auto& s : j.at("sets")) prob.sets.push_back(elements_from_json(prob.field, s));
  const int n = prob.n();

  auto pair_indices = [&](const json& c) {
    int i = c.at("i").get<int>(), jj = c.at("j").get<int>();
    if (i < 1 || jj < 1 || i > n || jj > n)
      throw std::invalid_argument("constraint: indices must be 1-based and in range");
    return std::pair<int, int>{i - 1, jj - 1};
  };

  for (const auto& c : j.value("constraints", json::array())) {
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "diff_avoid") {
      auto [i, jj] = pair_indices(c);
      prob.constraints.push_back(ConstraintSpec<F>::diff_avoid_between(
          i, jj, elements_from_json(prob.field, c.at("S"))));
    } else if (kind == "pairwise_distinct") {
      prob.constraints.push_back(ConstraintSpec<F>::distinct());
    } else if (kind == "scaled_distinct") {
      if (c.contains("zeta_exps")) {
        if constexpr (ring_traits<F>::kind == RingKind::cyclotomic) {
          auto exps = c.at("zeta_exps").get<std::vector<long>>();
          std::vector<typename F::elem> mult;
          mult.reserve(exps.size());
          for (long e : exps) mult.push_back(prob.field.root(e));
          auto spec = ConstraintSpec<F>::scaled(std::move(mult));
          spec.zeta_exps = std::move(exps);
          prob.constraints.push_back(std::move(spec));
        } else {
          throw std::invalid_argument("scaled_distinct: zeta_exps requires a cyclotomic ring");
        }
      } else {
        prob.constraints.push_back(
            ConstraintSpec<F>::scaled(elements_from_json(prob.field, c.at("alphas"))));
      }
    } else if (kind == "congruence") {
      auto [i, jj] = pair_indices(c);
      prob.constraints.push_back(ConstraintSpec<F>::congruent_apart(
          i, jj, c.at("m").get<long>(), c.at("b").get<std::vector<long>>()));
    } else if (kind == "poly_image_distinct") {
      std::vector<UnivariatePoly<F>> polys;
      for (const auto& coeffs : c.at("polys"))
        polys.emplace_back(prob.field, elements_from_json(prob.field, coeffs));
      prob.constraints.push_back(ConstraintSpec<F>::poly_images(std::move(polys)));
    } else {
      throw std::invalid_argument("unknown constraint kind \"" + kind + "\"");
    }
  }
  prob.validate();
  return prob;
}

using AnyProblem =
    std::variant<SumsetProblem<RationalField>, SumsetProblem<PrimeField>, SumsetProblem<CyclotomicField>>;

inline AnyProblem parse_problem(const json& j) {
  if (!j.contains("ring")) throw std::invalid_argument("sumset config: \"ring\" object required");
  const auto& ring = j.at("ring");
  const std::string kind = ring.at("kind").get<std::string>();
  if (kind == "rational") return problem_from_json(RationalField{}, j);
  if (kind == "prime") return problem_from_json(PrimeField(ring.at("p").get<long long>()), j);
  if (kind == "cyclotomic") return problem_from_json(CyclotomicField(ring.at("q").get<long>()), j);
  throw std::invalid_argument("unknown ring kind \"" + kind + "\"");
}

inline json bound_report_to_json(const BoundReport& r) {
  return json{{"result_id", r.result_id},
              {"hypotheses_met", r.hypotheses_met},
              {"reasons", r.reasons},
              {"claimed_bound", r.claimed_bound},
              {"strict", r.strict},
              {"actual_cardinality", r.actual_cardinality},
              {"pass", r.pass}};
}

// ---------------------------------------------------------------------------
// Identity parameter schemas
// ---------------------------------------------------------------------------

inline Matrix<Rational> rational_matrix_from_json(const json& j) {
  RationalField field;
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) rows.push_back(elements_from_json(field, row));
  return Matrix<Rational>(std::move(rows));
}

inline IdentityParams identity_params_from_json(const json& j) {
  IdentityParams p;
  p.n = j.at("n").get<int>();
  if (j.contains("m")) {
    if (j.at("m").is_array())
      p.m_vec = j.at("m").get<std::vector<long>>();
    else
      p.m = j.at("m").get<long>();
  }
  if (j.contains("k")) p.k = j.at("k").get<long>();
  if (j.contains("delta")) p.delta = j.at("delta").get<int>();
  if (j.contains("A")) p.A = rational_matrix_from_json(j.at("A"));
  if (j.contains("a")) p.a_vec = elements_from_json(RationalField{}, j.at("a"));
  if (j.contains("P")) p.P = parse_poly(RationalField{}, p.n, j.at("P").get<std::string>());
  return p;
}

inline json identity_params_to_json(const IdentityParams& p) {
  json j{{"n", p.n}};
  if (!p.m_vec.empty())
    j["m"] = p.m_vec;
  else if (p.m != 0)
    j["m"] = p.m;
  if (p.k != 0) j["k"] = p.k;
  if (p.delta != 0) j["delta"] = p.delta;
  if (p.A) {
    json rows = json::array();
    for (int i = 0; i < p.A->n(); ++i) {
      json row = json::array();
      for (int c = 0; c < p.A->n(); ++c) row.push_back(p.A->at(i, c).to_string());
      rows.push_back(row);
    }
    j["A"] = rows;
  }
  if (!p.a_vec.empty()) {
    json a = json::array();
    for (const auto& v : p.a_vec) a.push_back(v.to_string());
    j["a"] = a;
  }
  if (p.P) j["P"] = p.P->to_string();
  return j;
}

}  // namespace starsum
