#include "macpieri/json_io.hpp"

#include "macpieri/errors.hpp"

#include <sstream>

namespace macpieri {

json poly_terms_to_json(const MultiPoly& p) {
  json arr = json::array();
  const int nv = var_count(p.vars());
  for (const auto& t : p.terms()) {
    json e = json::array();
    e.push_back(t.e0());
    if (nv == 2) e.push_back(t.e1());
    arr.push_back(json::array({e, t.coeff.get_str()}));
  }
  return arr;
}

json ratfunc_to_json(const RatFunc& r) {
  const VarSet v = r.vars();
  json vars = json::array();
  for (int s = 0; s < var_count(v); ++s) vars.push_back(var_name(v, s));
  json out = json::object();
  out["vars"] = vars;
  out["num"] = poly_terms_to_json(r.num());
  out["den"] = poly_terms_to_json(r.den());
  return out;
}

namespace {

VarSet vars_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParameterError("RatFunc JSON: bad vars");
  const std::string first = j[0].get<std::string>();
  if (j.size() == 2 && first == "q" && j[1].get<std::string>() == "t") return VarSet::qt;
  if (j.size() == 1 && first == "alpha") return VarSet::alpha;
  if (j.size() == 1 && first == "x") return VarSet::x;
  throw ParameterError("RatFunc JSON: unknown variable list");
}

MultiPoly poly_from_json(const json& arr, VarSet v) {
  std::vector<MultiPoly::Term> terms;
  const std::size_t nv = static_cast<std::size_t>(var_count(v));
  for (const auto& item : arr) {
    const json& e = item.at(0);
    if (e.size() != nv) throw ParameterError("RatFunc JSON: exponent length mismatch");
    const auto e0 = e[0].get<std::uint32_t>();
    const auto e1 = nv == 2 ? e[1].get<std::uint32_t>() : 0u;
    mpz_class c(item.at(1).get<std::string>());
    terms.push_back({MultiPoly::make_key(e0, e1), c});
  }
  return MultiPoly::from_terms(std::move(terms), v);
}

}  // namespace

RatFunc ratfunc_from_json(const json& j) {
  const VarSet v = vars_from_json(j.at("vars"));
  return RatFunc(poly_from_json(j.at("num"), v), poly_from_json(j.at("den"), v));
}

json theta_matrix_to_json(const ThetaMatrix& m) {
  json entries = json::array();
  for (int i = 1; i <= m.size(); ++i)
    for (int j = i + 1; j <= m.size(); ++j)
      if (m(i, j) != 0) entries.push_back(json::array({i, j, m(i, j)}));
  return json{{"n", m.size()}, {"entries", entries}};
}

json symfunc_to_json(const SymFunc& f, const std::string& basis_label) {
  int degree = 0;
  json terms = json::array();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    degree = std::max(degree, it->first.weight());
    terms.push_back(json{{"index", it->first.parts()}, {"coeff", ratfunc_to_json(it->second)}});
  }
  return json{{"basis", basis_label}, {"degree", degree}, {"terms", terms}};
}

std::string poly_to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const int nv = var_count(p.vars());
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const mpz_class mag = abs(t.coeff);
    const bool constant = t.key == 0;
    if (sgn(t.coeff) < 0)
      out << (first ? "-" : " - ");
    else if (!first)
      out << " + ";
    if (mag != 1 || constant) out << mag.get_str();
    const std::uint32_t ex[2] = {t.e0(), t.e1()};
    for (int s = 0; s < nv; ++s) {
      if (ex[s] == 0) continue;
      const std::string name = var_name(p.vars(), s);
      out << (name == "alpha" ? "\\alpha{}" : name);
      if (ex[s] > 1) out << "^{" << ex[s] << "}";
    }
    first = false;
  }
  return out.str();
}

std::string ratfunc_to_latex(const RatFunc& r) {
  if (r.den().is_one()) return poly_to_latex(r.num());
  return "\\frac{" + poly_to_latex(r.num()) + "}{" + poly_to_latex(r.den()) + "}";
}

}  // namespace macpieri
