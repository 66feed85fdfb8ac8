// macpieri: expansions, verification suites and tables from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 weight over the budget (default 10, MACPIERI_MAX_WEIGHT, --budget).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "macpieri/errors.hpp"
#include "macpieri/inverse_pieri.hpp"
#include "macpieri/json_io.hpp"
#include "macpieri/oracle.hpp"
#include "macpieri/verify.hpp"

using namespace macpieri;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExpandRequest {
  IntSeq lambda;
  std::string basis = "g";
  std::string family = "macdonald";
  std::string format = "json";
  bool raw = false;
  bool terms = false;
};

// Result of one expansion: either aggregated in a basis or a list of terms.
struct Rendered {
  std::string basis_label;  // g, h, q, e, m, QQ
  SymFunc aggregated;
  bool has_terms = false;
  std::vector<FullTerm> full_terms;     // --terms
  std::vector<ExpansionTerm> steps;     // basis QQ
  StepSide step_side = StepSide::q_g;
};

int weight_of(const IntSeq& s) {
  int w = 0;
  for (int x : s) w += x < 0 ? -x : x;
  return w;
}

IntSeq trimmed(IntSeq s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

SymFunc times_row(const SymFunc& f, int r) {
  SymFunc out(Basis::gprod, f.degree_bound + (r > 0 ? r : 0), f.family);
  if (r < 0) return out;
  for (const auto& [nu, c] : f.coeffs) {
    std::vector<int> idx = nu.parts();
    idx.push_back(r);
    out.add(sorted_partition(idx), c);
  }
  return out;
}

// Q_lambda in g-products for an arbitrary integer sequence, by repeated single
// steps; partition remainders go through the full expansion.
SymFunc raw_q_g(const IntSeq& seq) {
  const IntSeq s = trimmed(seq);
  SymFunc out(Basis::gprod, weight_of(s));
  if (s.empty()) {
    out.add(Partition(), RatFunc(1));
    return out;
  }
  if (s.size() == 1) {
    if (s[0] > 0) out.add(Partition{s[0]}, RatFunc(1));
    return out;
  }
  if (is_partition(s)) {
    for (const auto& t : expand_full(Partition(s), StepSide::q_g).terms) {
      IntSeq idx = t.index;
      bool negative = false;
      for (int x : idx) negative |= x < 0;
      if (!negative) out.add(sorted_partition(idx), t.coeff);
    }
    return out;
  }
  for (const auto& term : invert_step(s, StepSide::q_g)) {
    const IntSeq rest(term.index.begin() + 1, term.index.end());
    out += times_row(raw_q_g(rest), term.index[0]).scaled(term.coeff);
  }
  return out;
}

std::optional<StepSide> g_side(const std::string& family) {
  if (family == "macdonald") return StepSide::q_g;
  if (family == "schur") return StepSide::schur;
  if (family == "jack") return StepSide::jack_q;
  return std::nullopt;
}

StepSide e_side(const std::string& family) {
  if (family == "macdonald") return StepSide::p_e;
  if (family == "hl") return StepSide::hl;
  if (family == "mono") return StepSide::mono;
  if (family == "jack") return StepSide::jack_p;
  throw UsageError("no e-side for family " + family);
}

Rendered from_full(const FullExpansion& e, Basis b, Family fam, const std::string& label, bool with_terms) {
  Rendered r;
  r.basis_label = label;
  r.aggregated = product_sum(full_as_terms(e), b, fam);
  if (with_terms) {
    r.has_terms = true;
    r.full_terms = e.terms;
  }
  return r;
}

Rendered run_expand(const ExpandRequest& req) {
  const IntSeq seq = trimmed(req.lambda);
  const bool partition = is_partition(seq);
  if (!partition && !req.raw) throw UsageError("lambda " + seq_to_string(req.lambda) + " is not a partition (use --raw)");
  const bool raw_ok = (req.basis == "g" && (req.family == "macdonald" || req.family == "hl")) ||
                      (req.basis == "QQ" && req.family == "macdonald");
  if (!partition && !raw_ok) throw UsageError("--raw sequences are supported for basis g (macdonald, hl) and QQ (macdonald)");

  Rendered r;
  if (req.basis == "QQ") {
    StepSide side = req.family == "hl" ? StepSide::hl : req.family == "mono" ? StepSide::mono : *g_side(req.family);
    if (seq.empty()) throw UsageError("QQ needs a nonempty lambda");
    r.basis_label = "QQ";
    r.step_side = side;
    r.steps = invert_step(seq, side);
    return r;
  }
  if (req.basis == "g") {
    if (req.family == "hl") {
      if (req.terms) throw UsageError("--terms is not available for the Hall-Littlewood g expansion");
      r.basis_label = "q";
      r.aggregated = hl_raising_Q(seq);
      return r;
    }
    const auto side = g_side(req.family);
    if (!side) throw UsageError("basis g is not available for family " + req.family);
    if (!partition) {
      if (req.terms) throw UsageError("--terms needs a partition");
      r.basis_label = "g";
      r.aggregated = raw_q_g(seq);
      return r;
    }
    const Family fam = side_family(*side);
    return from_full(expand_full(Partition(seq), *side), Basis::gprod, fam, req.family == "schur" ? "h" : "g",
                     req.terms);
  }
  if (req.basis == "e") {
    if (req.family == "schur") {
      // omega: s_lambda in e equals s_{lambda'} in h
      const FullExpansion e = expand_full(Partition(seq).conjugate(), StepSide::schur);
      return from_full(e, Basis::eprod, Family::macdonald, "e", req.terms);
    }
    const StepSide side = e_side(req.family);
    return from_full(expand_full(Partition(seq), side), Basis::eprod, Family::macdonald, "e", req.terms);
  }
  // monomial basis through the e- (or h-) expansion
  const StepSide side = req.family == "schur" ? StepSide::schur : e_side(req.family);
  const FullExpansion e = expand_full(Partition(seq), side);
  r = from_full(e, side == StepSide::schur ? Basis::gprod : Basis::eprod, side_family(side), "m", false);
  r.aggregated = full_resum(e);
  return r;
}

std::string coeff_text(const RatFunc& c, const std::string& format) {
  return format == "latex" ? ratfunc_to_latex(c) : c.to_string();
}

std::string product_text(const IntSeq& idx, const std::string& sym, const std::string& format) {
  if (idx.empty()) return "1";
  if (sym == "m") return format == "latex" ? "m_{" + seq_to_string(idx) + "}" : "m[" + seq_to_string(idx) + "]";
  std::string out;
  for (int k : idx) {
    if (k == 0) continue;  // the zeroth one-row function is 1
    if (!out.empty()) out += format == "latex" ? " " : "*";
    out += format == "latex" ? sym + "_{" + std::to_string(k) + "}" : sym + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

// Left-hand side in LaTeX: which polynomial of the family is expanded.
std::string latex_lhs(const ExpandRequest& req, const Rendered& r) {
  const std::string sub = "_{(" + seq_to_string(req.lambda) + ")}";
  if (req.family == "schur") return "s" + sub;
  if (req.family == "mono") return "m" + sub;
  const bool q_side = r.basis_label == "QQ" ? is_g_side(r.step_side) : req.basis == "g";
  std::string sym = q_side ? "Q" : "P";
  if (req.family == "jack") return sym + sub + "^{(\\alpha)}";
  if (req.family == "hl") return sym + sub + "(t)";
  return sym + sub + "(q,t)";
}

json terms_json(const Rendered& r) {
  json arr = json::array();
  if (r.basis_label == "QQ") {
    for (const auto& t : r.steps)
      arr.push_back(json{{"row", t.index[0]},
                         {"rest", IntSeq(t.index.begin() + 1, t.index.end())},
                         {"theta", t.theta},
                         {"coeff", ratfunc_to_json(t.coeff)}});
    return arr;
  }
  for (const auto& t : r.full_terms)
    arr.push_back(json{{"index", t.index}, {"theta", theta_matrix_to_json(t.theta)}, {"coeff", ratfunc_to_json(t.coeff)}});
  return arr;
}

void print(const ExpandRequest& req, const Rendered& r, std::ostream& os) {
  const bool qq = r.basis_label == "QQ";
  if (req.format == "json") {
    json j;
    if (qq) {
      j["basis"] = "QQ";
      j["side"] = side_name(r.step_side);
      j["terms"] = terms_json(r);
    } else {
      j = symfunc_to_json(r.aggregated, r.basis_label);
      if (r.has_terms) j["expansion"] = terms_json(r);
    }
    json out;
    out["lambda"] = req.lambda;
    out["family"] = req.family;
    for (auto& [k, v] : j.items()) out[k] = v;
    os << out.dump() << "\n";
    return;
  }
  const std::string lhs = "lambda=(" + seq_to_string(req.lambda) + ") family=" + req.family;
  std::vector<std::string> parts;
  if (qq) {
    const bool g = is_g_side(r.step_side);
    const std::string row = r.step_side == StepSide::schur ? "h" : g ? "g" : "e";
    const std::string poly = g ? "Q" : "P";
    for (const auto& t : r.steps) {
      const IntSeq rest(t.index.begin() + 1, t.index.end());
      const std::string body = req.format == "latex"
                                   ? row + "_{" + std::to_string(t.index[0]) + "} " + poly + "_{(" +
                                         seq_to_string(rest) + ")}"
                                   : row + std::to_string(t.index[0]) + "*" + poly + "(" + seq_to_string(rest) + ")";
      parts.push_back("(" + coeff_text(t.coeff, req.format) + ") " + body);
    }
  } else if (r.has_terms) {
    for (const auto& t : r.full_terms)
      parts.push_back("(" + coeff_text(t.coeff, req.format) + ") " +
                      product_text(t.index, r.basis_label, req.format));
  } else {
    for (auto it = r.aggregated.coeffs.rbegin(); it != r.aggregated.coeffs.rend(); ++it)
      parts.push_back("(" + coeff_text(it->second, req.format) + ") " +
                      product_text(it->first.parts(), r.basis_label, req.format));
  }
  if (req.format == "latex") {
    os << latex_lhs(req, r) << " = ";
    if (parts.empty()) os << "0";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " \\\\\n  + " : "") << parts[i];
    os << "\n";
    return;
  }
  os << lhs << "\n";
  if (parts.empty()) os << "  0\n";
  for (const auto& p : parts) os << "  + " << p << "\n";
}

int budget_from_env() {
  const char* env = std::getenv("MACPIERI_MAX_WEIGHT");
  if (!env || !*env) return 10;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(env, &pos);
    if (pos != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("MACPIERI_MAX_WEIGHT must be a nonnegative integer, got '") + env + "'");
  }
}

void require_budget(int weight, int budget) {
  if (weight > budget)
    throw BudgetError("weight " + std::to_string(weight) + " exceeds the budget " + std::to_string(budget) +
                      " (raise --budget or MACPIERI_MAX_WEIGHT)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse Pieri expansions of Macdonald polynomials"};
  app.require_subcommand(1);
  std::optional<int> budget_flag;
  app.add_option("--budget", budget_flag, "largest weight allowed (default 10 or MACPIERI_MAX_WEIGHT)")
      ->check(CLI::NonNegativeNumber);

  ExpandRequest req;
  std::string lambda_text;
  auto* expand = app.add_subcommand("expand", "expand one polynomial");
  expand->add_option("--lambda", lambda_text, "comma-separated parts, e.g. 3,1,1")->required();
  expand->add_option("--basis", req.basis, "g, e, m or QQ (single step)")
      ->check(CLI::IsMember({"g", "e", "m", "QQ"}));
  expand->add_option("--family", req.family)->check(CLI::IsMember({"macdonald", "schur", "hl", "jack", "mono"}));
  expand->add_option("--format", req.format)->check(CLI::IsMember({"json", "latex", "plain"}));
  expand->add_flag("--raw", req.raw, "accept arbitrary integer sequences");
  expand->add_flag("--terms", req.terms, "list every theta-matrix term instead of the collected sum");

  std::string suite = "all";
  int verify_weight = 6;
  std::uint64_t seed = 7;
  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-weight", verify_weight)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);

  int table_weight = 4;
  std::string table_family = "macdonald", table_basis = "g", out_dir = "tables";
  auto* table = app.add_subcommand("table", "write one JSON file per weight");
  table->add_option("--max-weight", table_weight)->check(CLI::PositiveNumber);
  table->add_option("--family", table_family)->check(CLI::IsMember({"macdonald", "schur", "hl", "jack", "mono"}));
  table->add_option("--basis", table_basis)->check(CLI::IsMember({"g", "e", "m"}));
  table->add_option("--out", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const int budget = budget_flag ? *budget_flag : budget_from_env();
    if (*expand) {
      try {
        req.lambda = parse_int_seq(lambda_text);
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
      require_budget(weight_of(req.lambda), budget);
      print(req, run_expand(req), std::cout);
      return 0;
    }
    if (*verify) {
      require_budget(verify_weight, budget);
      const auto results = run_suite(suite, verify_weight, seed);
      const json report = check_report_json(suite, verify_weight, seed, results);
      std::cout << report.dump(2) << "\n";
      for (const auto& r : results)
        std::cerr << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.checked << " checks)\n";
      return report["violations"].empty() ? 0 : 1;
    }
    if (*table) {
      require_budget(table_weight, budget);
      std::filesystem::create_directories(out_dir);
      for (int w = 1; w <= table_weight; ++w) {
        json entries = json::array();
        for (const auto& lam : enumerate_partitions(w)) {
          ExpandRequest r;
          r.lambda = lam.parts();
          r.basis = table_basis;
          r.family = table_family;
          const Rendered rendered = run_expand(r);
          json item = symfunc_to_json(rendered.aggregated, rendered.basis_label);
          entries.push_back(json{{"lambda", lam.parts()}, {"terms", item["terms"]}});
        }
        const json doc{{"family", table_family}, {"basis", table_basis}, {"weight", w}, {"entries", entries}};
        const std::filesystem::path file =
            std::filesystem::path(out_dir) / (table_family + "_" + table_basis + "_" + std::to_string(w) + ".json");
        std::ofstream os(file, std::ios::binary);
        os << doc.dump(1) << "\n";
        if (!os) throw std::runtime_error("cannot write " + file.string());
        std::cerr << "wrote " << file.string() << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
