#include "psd/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "psd/decomposition.hpp"
#include "psd/dioph_search.hpp"
#include "psd/json_io.hpp"
#include "psd/proof_engine.hpp"
#include "psd/special_polys.hpp"
#include "psd/standard_pairs.hpp"
#include "psd/verify.hpp"

namespace psd::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::int64_t to_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

PowerSumSpec parse_triple(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("expected a,b,k but got '" + text + "'");
  const std::int64_t k = to_int(parts[2]);
  if (k < 1) throw UsageError("exponent must be positive in '" + text + "'");
  return {to_int(parts[0]), to_int(parts[1]), static_cast<unsigned>(k)};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError("expected lo:hi but got '" + text + "'");
  return {to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
}

struct Context {
  bool json = true;
  std::ostream& out;
};

void emit_poly(const Context& ctx, const Polynomial& p, const std::string& var = "x") {
  if (ctx.json) ctx.out << to_json(p).dump() << "\n";
  else ctx.out << to_string(p, var) << "\n";
}

int emit_report(const Context& ctx, const Report& r) {
  if (ctx.json) ctx.out << to_json(r).dump() << "\n";
  else ctx.out << to_text(r);
  return r.all_verified() ? kExitOk : kExitVerificationFailed;
}

void emit_records(const Context& ctx, const std::vector<SolutionRecord>& records) {
  if (ctx.json) {
    for (const auto& rec : records) ctx.out << to_json(rec).dump() << "\n";
    return;
  }
  ctx.out << std::setw(12) << "x" << std::setw(12) << "y" << "  value\n";
  for (const auto& rec : records) {
    ctx.out << std::setw(12) << rec.x << std::setw(12) << rec.y << "  " << to_string(rec.value) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power sums of arithmetic progressions, their decompositions and the equation "
               "S_{a,b}^k(x) = S_{c,d}^l(y)",
               "psd"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // bernoulli
  auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli number B_k or polynomial B_k(x)");
  unsigned bern_k = 0;
  bool bern_poly = false;
  bernoulli->add_option("--k", bern_k, "Index k")->required();
  bernoulli->add_flag("--poly", bern_poly, "Emit B_k(x) instead of B_k");

  // dickson
  auto* dickson = app.add_subcommand("dickson", "Dickson polynomial D_m(x, a)");
  unsigned dickson_m = 1;
  std::string dickson_param = "1";
  dickson->add_option("--m", dickson_m, "Degree m")->required();
  dickson->add_option("--param", dickson_param, "Nonzero rational parameter p/q")->required();

  // powersum
  auto* powersum = app.add_subcommand("powersum", "Power sum S_{a,b}^k as a polynomial or at n");
  std::int64_t ps_a = 1;
  std::int64_t ps_b = 0;
  unsigned ps_k = 1;
  bool ps_poly = false;
  std::optional<std::uint64_t> ps_n;
  powersum->add_option("--a", ps_a)->required();
  powersum->add_option("--b", ps_b)->required();
  powersum->add_option("--k", ps_k)->required();
  powersum->add_flag("--poly", ps_poly, "Emit the closed-form polynomial (default)");
  powersum->add_option("--n", ps_n, "Evaluate at n by direct summation and closed form");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Nontrivial functional decompositions");
  std::string dec_poly;
  std::string dec_spec;
  auto* dec_poly_opt = decompose->add_option("--poly", dec_poly, "Polynomial JSON {\"coeffs\": [...]}");
  auto* dec_spec_opt = decompose->add_option("--powersum", dec_spec, "a,b,k: check the power sum dichotomy");
  dec_poly_opt->excludes(dec_spec_opt);

  // standard-pair
  auto* pair = app.add_subcommand("standard-pair", "Realize a standard pair");
  std::string sp_kind;
  unsigned sp_m = 1;
  unsigned sp_n = 1;
  unsigned sp_r = 0;
  std::string sp_a = "1";
  std::string sp_b = "1";
  std::string sp_p = "{\"coeffs\":[\"1/1\"]}";
  bool sp_switched = false;
  pair->add_option("--kind", sp_kind)->required()->check(CLI::IsMember({"first", "second", "third", "fourth", "fifth"}));
  pair->add_option("--m", sp_m);
  pair->add_option("--n", sp_n);
  pair->add_option("--r", sp_r);
  pair->add_option("--a", sp_a);
  pair->add_option("--b", sp_b);
  pair->add_option("--p", sp_p, "Polynomial JSON");
  pair->add_flag("--switched", sp_switched);

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "Rejection lemmas and the deg-phi case split");
  std::string lem_name;
  std::string lem_spec = "1,0,2";
  std::string lem_c1 = "1";
  std::string lem_c0 = "0";
  std::string lem_delta = "1";
  unsigned lem_k = 2;
  unsigned lem_l = 3;
  lemmas->add_option("--lemma", lem_name)->required()->check(CLI::IsMember({"1", "2", "fifth", "case-split"}));
  lemmas->add_option("--spec", lem_spec, "a,b,k for --lemma 1 and 2; a,b for fifth");
  lemmas->add_option("--c1", lem_c1);
  lemmas->add_option("--c0", lem_c0);
  lemmas->add_option("--delta", lem_delta);
  lemmas->add_option("--k", lem_k);
  lemmas->add_option("--l", lem_l);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Hyperelliptic reductions and the symbolic coefficient comparison");
  std::string red_thm;
  std::int64_t red_a = 1;
  std::int64_t red_b = 0;
  std::string red_rhs;
  unsigned red_k = 2;
  reduce->add_option("--thm", red_thm, "1, 3 (reductions) or 2 (coefficient contradiction)")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3"}));
  reduce->add_option("--a", red_a);
  reduce->add_option("--b", red_b);
  reduce->add_option("--rhs", red_rhs, "c,d,l for the assembled right side");
  reduce->add_option("--k", red_k, "k for --thm 2");

  // solve
  auto* solve = app.add_subcommand("solve", "Integer solutions of S_lhs(x) = S_rhs(y) inside a box");
  std::string sol_lhs;
  std::string sol_rhs;
  std::string sol_x;
  std::string sol_y;
  solve->add_option("--lhs", sol_lhs, "a,b,k")->required();
  solve->add_option("--rhs", sol_rhs, "c,d,l")->required();
  solve->add_option("--xrange", sol_x, "lo:hi")->required();
  solve->add_option("--yrange", sol_y, "lo:hi")->required();

  // family
  auto* family = app.add_subcommand("family", "Infinite families of S_{2,1}^1(x) = S_{1,0}^l(y)");
  unsigned fam_l = 3;
  std::size_t fam_count = 10;
  family->add_option("--l", fam_l)->required()->check(CLI::IsMember({3u, 5u}));
  family->add_option("--count", fam_count)->check(CLI::PositiveNumber);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Re-derive every identity and proof step");
  std::string ver_only;
  verify->add_option("--only", ver_only, "Run one group")->check(CLI::IsMember(verify_groups()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Context ctx{format == "json", out};
  try {
    if (*bernoulli) {
      if (bern_poly) {
        emit_poly(ctx, bernoulli_polynomial(bern_k));
      } else if (ctx.json) {
        Json j;
        j["k"] = bern_k;
        j["value"] = to_string(bernoulli_number(bern_k));
        out << j.dump() << "\n";
      } else {
        out << "B_" << bern_k << " = " << to_string(bernoulli_number(bern_k)) << "\n";
      }
      return kExitOk;
    }
    if (*dickson) {
      emit_poly(ctx, dickson_polynomial({dickson_m, parse_rational(dickson_param)}));
      return kExitOk;
    }
    if (*powersum) {
      const PowerSumSpec spec{ps_a, ps_b, ps_k};
      validate(spec);
      if (ps_n && !ps_poly) {
        const Rational direct(power_sum_direct(spec, *ps_n));
        const Rational closed = evaluate(power_sum_polynomial(spec), Rational(Integer(std::to_string(*ps_n))));
        if (direct != closed) {
          err << "closed form and direct sum disagree\n";
          return kExitVerificationFailed;
        }
        if (ctx.json) {
          Json j;
          j["n"] = *ps_n;
          j["value"] = to_string(direct);
          out << j.dump() << "\n";
        } else {
          out << "S(" << *ps_n << ") = " << to_string(direct) << "\n";
        }
        return kExitOk;
      }
      emit_poly(ctx, power_sum_polynomial(spec));
      return kExitOk;
    }
    if (*decompose) {
      if (!dec_spec.empty()) {
        const Theorem1Report r = theorem1_verify(parse_triple(dec_spec));
        if (ctx.json) {
          out << to_json(r).dump() << "\n";
        } else {
          out << "input: " << to_string(r.input) << "\n";
          for (const auto& c : r.classes) out << "  " << to_string(c.outer, "u") << "  o  " << to_string(c.inner) << "\n";
          out << "verdict: " << r.verdict << "\n";
        }
        return r.ok() ? kExitOk : kExitVerificationFailed;
      }
      if (dec_poly.empty()) throw UsageError("decompose needs --poly or --powersum");
      const Polynomial f = parse_polynomial(dec_poly);
      const auto classes = decompose_all(f);
      const std::string verdict = classes.empty() ? "indecomposable" : "decomposable";
      if (ctx.json) {
        Json j;
        j["input"] = to_json(f);
        Json cls = Json::array();
        for (const auto& c : classes) cls.push_back(to_json(c));
        j["classes"] = std::move(cls);
        j["verdict"] = verdict;
        out << j.dump() << "\n";
      } else {
        out << "input: " << to_string(f) << "\n";
        for (const auto& c : classes) out << "  " << to_string(c.outer, "u") << "  o  " << to_string(c.inner) << "\n";
        out << "verdict: " << verdict << "\n";
      }
      return kExitOk;
    }
    if (*pair) {
      const Rational a = parse_rational(sp_a);
      const Rational b = parse_rational(sp_b);
      StandardPair sp;
      if (sp_kind == "first") sp = FirstKind{sp_m, sp_r, parse_polynomial(sp_p), a, sp_switched};
      else if (sp_kind == "second") sp = SecondKind{a, b, parse_polynomial(sp_p), sp_switched};
      else if (sp_kind == "third") sp = ThirdKind{sp_m, sp_n, a};
      else if (sp_kind == "fourth") sp = FourthKind{sp_m, sp_n, a, b};
      else sp = FifthKind{a, sp_switched};
      const auto [f, g] = realize(sp);
      if (ctx.json) {
        Json j;
        j["kind"] = sp_kind;
        j["f"] = to_json(f);
        j["g"] = to_json(g);
        out << j.dump() << "\n";
      } else {
        out << sp_kind << " kind\n  f = " << to_string(f) << "\n  g = " << to_string(g) << "\n";
      }
      return kExitOk;
    }
    if (*lemmas) {
      if (lem_name == "case-split") return emit_report(ctx, degphi_case_split(lem_k, lem_l));
      if (lem_name == "fifth") {
        const auto parts = split(lem_spec, ',');
        if (parts.size() < 2) throw UsageError("fifth needs --spec a,b");
        return emit_report(ctx, fifth_kind_reject(to_int(parts[0]), to_int(parts[1])));
      }
      const PowerSumSpec spec = parse_triple(lem_spec);
      const Rational c1 = parse_rational(lem_c1);
      const Rational c0 = parse_rational(lem_c0);
      if (lem_name == "1") return emit_report(ctx, lemma1_reject(spec, c1, c0));
      return emit_report(ctx, lemma2_reject(spec, c1, c0, parse_rational(lem_delta)));
    }
    if (*reduce) {
      std::optional<PowerSumSpec> rhs;
      if (!red_rhs.empty()) rhs = parse_triple(red_rhs);
      if (red_thm == "2") return emit_report(ctx, theorem2_contradiction(red_k));
      if (red_thm == "1") {
        const Thm1Reduction r = thm1_reduction(red_a, red_b, rhs);
        if (ctx.json) {
          Json j = to_json(r.report);
          j["scaled_sum"] = to_json(r.scaled_sum);
          j["completed_square"] = to_json(r.completed_square);
          if (r.rhs_in_y) j["rhs_in_y"] = to_json(*r.rhs_in_y);
          out << j.dump() << "\n";
        } else {
          out << to_text(r.report);
        }
        return r.report.all_verified() ? kExitOk : kExitVerificationFailed;
      }
      const Thm3Reduction r = thm3_reduction(red_a, red_b, rhs);
      if (ctx.json) {
        Json j = to_json(r.report);
        j["quartic_in_u"] = to_json(r.quartic);
        j["K"] = to_string(r.K);
        j["s"] = to_string(r.s);
        j["displayed_constants_hold"] = r.displayed_constants_hold;
        if (r.rhs_in_y) j["rhs_in_y"] = to_json(*r.rhs_in_y);
        out << j.dump() << "\n";
      } else {
        out << to_text(r.report);
      }
      return r.report.all_verified() ? kExitOk : kExitVerificationFailed;
    }
    if (*solve) {
      EquationSpec eq;
      eq.lhs = parse_triple(sol_lhs);
      eq.rhs = parse_triple(sol_rhs);
      std::tie(eq.x_min, eq.x_max) = parse_range(sol_x);
      std::tie(eq.y_min, eq.y_max) = parse_range(sol_y);
      emit_records(ctx, solve_bounded(eq));
      return kExitOk;
    }
    if (*family) {
      emit_records(ctx, fam_l == 3 ? family_l3(fam_count) : family_l5(fam_count));
      return kExitOk;
    }
    if (*verify) {
      VerifyOptions options;
      if (const char* seed = std::getenv("PSD_SEED"); seed != nullptr && *seed != '\0') {
        options.seed = static_cast<std::uint64_t>(to_int(seed));
      }
      if (!ver_only.empty()) options.only = ver_only;
      const VerifyResult result = verify_paper(options);
      for (const auto& s : result.steps) {
        if (ctx.json) {
          Json j;
          j["group"] = s.group;
          j["step"] = s.name;
          j["passed"] = s.passed;
          if (!s.passed) j["detail"] = s.detail;
          out << j.dump() << "\n";
        } else {
          out << (s.passed ? "[PASS] " : "[FAIL] ") << s.group << ": " << s.name;
          if (!s.passed) out << " -- " << s.detail;
          out << "\n";
        }
      }
      if (ctx.json) {
        Json j;
        j["steps"] = result.steps.size();
        j["passed"] = result.passed();
        out << j.dump() << "\n";
      } else {
        out << result.steps.size() << " steps, " << result.passed() << " passed\n";
      }
      return result.ok() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace psd::cli
