/*
   Copyright 2026 The clausen authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <utility>

#include "clausen/clausen_poly.hpp"
#include "clausen/errors.hpp"
#include "clausen/rat_poly.hpp"
#include "clausen/rational.hpp"
#include "clausen/sampling.hpp"
#include "clausen/series.hpp"
#include "clausen/verify.hpp"

namespace clausen::cli {

namespace {

using nlohmann::ordered_json;

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : params) j[key] = value;
  return j;
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json j;
  j["identity"] = r.identity;
  j["params"] = params_json(r.params);
  j["terms_checked"] = r.terms_checked;
  j["status"] = std::string(to_string(r.status));
  if (r.first_deviation) {
    j["first_deviation"] = {{"k", r.first_deviation->index},
                            {"lhs", r.first_deviation->lhs.str()},
                            {"rhs", r.first_deviation->rhs.str()}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json polynomial_json(const RatPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  if (p.is_zero()) coeffs.push_back("0");
  return coeffs;
}

int status_exit(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return 0;
    case VerifyStatus::Deviation: return 1;
    case VerifyStatus::Degenerate:
    case VerifyStatus::Refused: return 2;
  }
  return 2;
}

void emit_report(const VerifyReport& r, const ComparisonTrace& trace, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    out << report_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    out << "k,lhs,rhs,equal\n";
    for (const auto& row : trace)
      out << row.index << "," << row.lhs << "," << row.rhs << "," << (row.lhs == row.rhs ? 1 : 0) << "\n";
  } else {
    out << r.identity << ":";
    for (const auto& [key, value] : r.params) out << " " << key << "=" << value;
    out << "\n" << to_string(r.status) << " (" << r.terms_checked << " quantities compared)\n";
    if (r.first_deviation)
      out << "first deviation at k=" << r.first_deviation->index << ": lhs=" << r.first_deviation->lhs
          << " rhs=" << r.first_deviation->rhs << "\n";
    if (!r.note.empty()) out << r.note << "\n";
  }
}

int emit_group(const std::vector<VerifyReport>& reports, const std::string& identity, std::uint64_t seed,
               const std::string& format, std::ostream& out) {
  VerifyStatus worst = VerifyStatus::Verified;
  for (const auto& r : reports)
    if (status_exit(r.status) > status_exit(worst)) worst = r.status;
  if (format == "json") {
    ordered_json j;
    j["identity"] = identity;
    j["seed"] = seed;
    j["runs"] = ordered_json::array();
    for (const auto& r : reports) j["runs"].push_back(report_json(r));
    j["status"] = std::string(to_string(worst));
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "run,identity,status\n";
    for (Natural i = 0; i < reports.size(); ++i)
      out << i << "," << reports[i].identity << "," << to_string(reports[i].status) << "\n";
  } else {
    for (Natural i = 0; i < reports.size(); ++i) {
      out << "[" << i << "] ";
      emit_report(reports[i], {}, "text", out);
    }
    out << identity << ": " << to_string(worst) << " (" << reports.size() << " runs)\n";
  }
  return status_exit(worst);
}

std::vector<VerifyReport> whipple_suite(std::uint64_t seed) {
  ParamSampler sampler(seed);
  std::vector<VerifyReport> out;
  for (int i = 0; i < 50; ++i) {
    const WhippleTuple w = sampler.whipple(6);
    out.push_back(verify_whipple(w.a, w.b, w.c, w.d, w.e, w.n));
  }
  return out;
}

std::vector<VerifyReport> karlsson_suite(std::uint64_t seed, Natural terms) {
  ParamSampler sampler(seed);
  struct Shape {
    Natural tops, bottoms;
    std::vector<Natural> mvec;
  };
  const std::vector<Shape> shapes = {{3, 2, {1}}, {2, 2, {2}}, {2, 1, {1, 1}},
                                     {1, 1, {1, 2}}, {2, 1, {2, 2}}, {1, 2, {2, 1}}};
  std::vector<VerifyReport> out;
  for (const auto& shape : shapes) {
    std::vector<Rational> top, bottom, f;
    for (Natural i = 0; i < shape.tops; ++i) top.push_back(sampler.nonzero_small_rational());
    for (Natural i = 0; i < shape.bottoms; ++i) bottom.push_back(sampler.positive_noninteger());
    for (Natural i = 0; i < shape.mvec.size(); ++i) f.push_back(sampler.positive_noninteger());
    out.push_back(verify_karlsson(top, bottom, f, shape.mvec, terms));
  }
  return out;
}

std::vector<VerifyReport> operator_suite(std::uint64_t seed, Natural length) {
  ParamSampler sampler(seed);
  const TruncatedSeries window = sampler.series_window(length);
  std::vector<VerifyReport> out;
  for (Natural n = 1; n <= 5; ++n) out.push_back(verify_operator_lemma(window, n));
  return out;
}

}  // namespace

ordered_json build_suite_report(std::uint64_t seed) {
  ParamSampler sampler(seed);
  std::vector<std::pair<VerifyReport, VerifyStatus>> entries;
  auto expect = [&](VerifyReport r, VerifyStatus want = VerifyStatus::Verified) {
    entries.emplace_back(std::move(r), want);
  };

  const std::vector<Rational> grid5 = {Rational(1, 3), Rational(1, 2), Rational(3, 5), Rational(5, 4),
                                       Rational(9, 7)};
  const std::vector<Rational> grid3 = {Rational(1, 3), Rational(1, 2), Rational(5, 4)};

  // square identity, m = 0..4 over the 5x5 grid
  for (Natural m = 0; m <= 4; ++m)
    for (const auto& a : grid5)
      for (const auto& b : grid5) expect(verify_square({a, b, m}, 40));

  // printed closed forms at random points
  for (int i = 0; i < 10; ++i)
    expect(verify_quadratic_closed_form(sampler.positive_noninteger(), sampler.positive_noninteger()));
  for (int i = 0; i < 10; ++i)
    expect(verify_quartic_closed_form(sampler.positive_noninteger(), sampler.positive_noninteger()));

  // perturbed products, dual routes and summations over the sweep
  for (Natural m = 0; m <= 3; ++m) {
    for (Natural s = 0; s <= 2 * m + 1; ++s) {
      std::vector<PerturbationInput> sigmas;
      for (int i = 0; i < 3; ++i) sigmas.push_back(sampler.sigma(s));
      for (const auto& f : sigmas)
        for (const auto& a : grid3)
          for (const auto& b : grid3) {
            const ClausenParams p{a, b, m};
            expect(verify_dual_routes(p, f));
            expect(verify_product(p, f, 40));
          }
      for (const auto& a : grid3)
        for (const auto& b : grid3) expect(verify_summations({a, b, m}, sigmas.front(), 12));
    }
    // one past the degree bound: the product is refused and the interpolated
    // polynomial deviates strictly beyond 2m+s
    const PerturbationInput beyond = sampler.sigma(2 * m + 2);
    const ClausenParams p{grid3[0], grid3[1], m};
    expect(verify_product(p, beyond, 40), VerifyStatus::Refused);
    expect(verify_beyond_bound_deviation(p, beyond));
  }

  // recurrence for the characteristic polynomial values
  for (Natural m = 0; m <= 3; ++m)
    for (const auto& a : grid3)
      for (const auto& b : grid3) expect(verify_recurrence({a, b, m}, 30));

  expect(verify_orthogonality(20));
  for (auto& r : whipple_suite(seed)) expect(std::move(r));
  for (auto& r : karlsson_suite(seed, 15)) expect(std::move(r));
  for (auto& r : operator_suite(seed, 20)) expect(std::move(r));

  // explicit pair products and their closed forms
  for (Natural m = 0; m <= 2; ++m)
    for (int i = 0; i < 2; ++i) {
      const ClausenParams p = sampler.clausen(m);
      expect(verify_linear_pair_product(p, sampler.positive_noninteger(), 30));
      expect(verify_orr_type_product(p, 30));
    }
  for (Natural m = 1; m <= 2; ++m)
    for (int i = 0; i < 2; ++i)
      expect(verify_quadratic_pair_closed_form(sampler.clausen(m), sampler.positive_noninteger()));

  // deep window sanity run
  expect(verify_square({grid5[0], grid5[1], 2}, 200));

  ordered_json j;
  j["identity"] = "suite";
  j["seed"] = seed;
  Natural verified = 0, unexpected = 0;
  ordered_json reports = ordered_json::array();
  for (const auto& [report, want] : entries) {
    reports.push_back(report_json(report));
    if (report.status == VerifyStatus::Verified) ++verified;
    if (report.status != want) ++unexpected;
  }
  j["total"] = entries.size();
  j["verified"] = verified;
  j["unexpected"] = unexpected;
  j["all_expected"] = (unexpected == 0);
  j["reports"] = std::move(reports);
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact construction and verification of Clausen-type product identities"};
  app.require_subcommand(1);

  std::string a_str = "1/2", b_str = "1/2", sigma_str = "1", format = "json";
  Natural m = 0, terms = 40, k_max = 12;
  std::uint64_t seed = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_ab = [&](CLI::App* cmd, bool need_m = true) {
    cmd->add_option("--a", a_str, "top parameter a (rational literal)")->required();
    cmd->add_option("--b", b_str, "top parameter b (rational literal)")->required();
    if (need_m) cmd->add_option("--m", m, "half-integer offset m in a+b+m+1/2");
  };

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial P_2m of the square identity");
  add_ab(charpoly);
  add_format(charpoly);

  auto* hatpoly = app.add_subcommand("hatpoly", "characteristic polynomial hatP_{2m+s} of the perturbed product");
  add_ab(hatpoly);
  hatpoly->add_option("--sigma", sigma_str, "perturbation coefficients, lowest degree first")->required();
  add_format(hatpoly);

  auto* series = app.add_subcommand("series", "coefficients of F(a,b; a+b+m+1/2 | F_sigma | x)");
  add_ab(series);
  series->add_option("--sigma", sigma_str, "perturbation coefficients, lowest degree first");
  series->add_option("--terms", terms, "truncation order");
  add_format(series);

  auto* verify = app.add_subcommand("verify", "check an identity coefficient-by-coefficient");
  verify->require_subcommand(1);
  auto* vsquare = verify->add_subcommand("square", "square of the Gauss series vs perturbed 3F2");
  add_ab(vsquare);
  vsquare->add_option("--terms", terms, "truncation order");
  add_format(vsquare);
  auto* vproduct = verify->add_subcommand("product", "Gauss series times its perturbation vs perturbed 3F2");
  add_ab(vproduct);
  vproduct->add_option("--sigma", sigma_str, "perturbation coefficients, lowest degree first")->required();
  vproduct->add_option("--terms", terms, "truncation order");
  add_format(vproduct);
  auto* vsumm = verify->add_subcommand("summations", "terminating 4F3-style summation formulas");
  add_ab(vsumm);
  vsumm->add_option("--sigma", sigma_str, "perturbation coefficients, lowest degree first");
  vsumm->add_option("--k-max", k_max, "largest coefficient index checked");
  add_format(vsumm);
  auto* vrec = verify->add_subcommand("recurrence", "three-term recurrence for P_2m values");
  add_ab(vrec);
  vrec->add_option("--k-max", k_max, "largest index n checked")->default_val(30);
  add_format(vrec);
  auto* vwhip = verify->add_subcommand("whipple", "randomized Whipple 7F6 -> 4F3 transformation suite");
  vwhip->add_option("--seed", seed, "sampler seed");
  add_format(vwhip);
  auto* vkarl = verify->add_subcommand("karlsson", "randomized Karlsson expansion suite");
  vkarl->add_option("--seed", seed, "sampler seed");
  vkarl->add_option("--terms", terms, "truncation order")->default_val(15);
  add_format(vkarl);
  auto* voper = verify->add_subcommand("operator", "randomized operator expansion suite, n = 1..5");
  voper->add_option("--seed", seed, "sampler seed");
  voper->add_option("--terms", terms, "window length")->default_val(20);
  add_format(voper);

  auto* suite = app.add_subcommand("suite", "the full verification grid");
  suite->add_option("--seed", seed, "sampler seed");
  add_format(suite);

  std::vector<const char*> argv;
  argv.push_back("clausen");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (charpoly->parsed()) {
      const ClausenParams p{Rational::parse(a_str), Rational::parse(b_str), m};
      const RatPoly poly = char_poly(p);
      if (format == "json") {
        ordered_json j;
        j["identity"] = "charpoly";
        j["params"] = {{"a", a_str}, {"b", b_str}, {"m", std::to_string(m)}};
        j["polynomial"] = polynomial_json(poly);
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "i,coefficient\n";
        for (Natural i = 0; i < poly.coeffs().size(); ++i) out << i << "," << poly.coeff(i) << "\n";
      } else {
        out << "P(t) = " << poly << "\n";
      }
      return 0;
    }
    if (hatpoly->parsed()) {
      const ClausenParams p{Rational::parse(a_str), Rational::parse(b_str), m};
      const PerturbationInput f{parse_rational_list(sigma_str)};
      validate(f);
      const RatPoly poly = hat_poly_interp(p, f);
      const bool valid = within_degree_bound(p, f);
      if (format == "json") {
        ordered_json j;
        j["identity"] = "hatpoly";
        j["params"] = {{"a", a_str}, {"b", b_str}, {"m", std::to_string(m)}, {"sigma", sigma_str}};
        j["polynomial"] = polynomial_json(poly);
        j["identity_valid"] = valid;
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "i,coefficient\n";
        for (Natural i = 0; i < poly.coeffs().size(); ++i) out << i << "," << poly.coeff(i) << "\n";
      } else {
        out << "hatP(t) = " << poly << "\n";
        if (!valid) out << "note: degree " << f.degree() << " exceeds 2m+1; no product identity holds\n";
      }
      return 0;
    }
    if (series->parsed()) {
      const ClausenParams p{Rational::parse(a_str), Rational::parse(b_str), m};
      validate(p);
      const PerturbationInput f{parse_rational_list(sigma_str)};
      validate(f);
      const Rational c = p.a + p.b + Rational(static_cast<long>(m)) + Rational(1, 2);
      const TruncatedSeries s = series_coeffs({{{p.a, p.b}, {c}}, f.poly()}, terms);
      if (format == "json") {
        ordered_json j;
        j["identity"] = "series";
        j["params"] = {{"a", a_str}, {"b", b_str}, {"m", std::to_string(m)}, {"sigma", sigma_str},
                       {"terms", std::to_string(terms)}};
        ordered_json coeffs = ordered_json::array();
        for (Natural k = 0; k < s.size(); ++k) coeffs.push_back(s[k].str());
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "k,coefficient\n";
        for (Natural k = 0; k < s.size(); ++k) out << k << "," << s[k] << "\n";
      } else {
        out << s << "\n";
      }
      return 0;
    }
    if (vsquare->parsed() || vproduct->parsed() || vsumm->parsed() || vrec->parsed()) {
      const ClausenParams p{Rational::parse(a_str), Rational::parse(b_str), m};
      ComparisonTrace trace;
      VerifyReport report;
      if (vsquare->parsed())
        report = verify_square(p, terms, &trace);
      else if (vproduct->parsed())
        report = verify_product(p, PerturbationInput{parse_rational_list(sigma_str)}, terms, &trace);
      else if (vsumm->parsed())
        report = verify_summations(p, PerturbationInput{parse_rational_list(sigma_str)}, k_max, &trace);
      else
        report = verify_recurrence(p, k_max, &trace);
      emit_report(report, trace, format, out);
      return status_exit(report.status);
    }
    if (vwhip->parsed()) return emit_group(whipple_suite(seed), "whipple_suite", seed, format, out);
    if (vkarl->parsed()) return emit_group(karlsson_suite(seed, terms), "karlsson_suite", seed, format, out);
    if (voper->parsed()) return emit_group(operator_suite(seed, terms), "operator_suite", seed, format, out);
    if (suite->parsed()) {
      const ordered_json j = build_suite_report(seed);
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "index,identity,status\n";
        const auto& reports = j["reports"];
        for (Natural i = 0; i < reports.size(); ++i)
          out << i << "," << reports[i]["identity"].get<std::string>() << ","
              << reports[i]["status"].get<std::string>() << "\n";
      } else {
        out << "suite seed=" << seed << ": " << j["verified"] << "/" << j["total"] << " verified, "
            << j["unexpected"] << " unexpected\n";
      }
      return j["all_expected"].get<bool>() ? 0 : 1;
    }
  } catch (const DegenerateParameter& e) {
    err << "degenerate parameters: " << e.what() << "\n";
    return 2;
  } catch (const NonTerminating& e) {
    err << "non-terminating series: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  err << "no command selected\n";
  return 2;
}

}  // namespace clausen::cli
