#include "CLI11.hpp"

#include "kxval/error.hpp"
#include "kxval/parse.hpp"
#include "kxval/suites.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace kxval;

int emit_report(const Report& report) {
  std::cout << report.to_json().dump(2) << "\n";
  return report.pass ? 0 : 1;
}

RenderFormat format_of(const std::string& name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  return RenderFormat::json;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact valuations, key polynomial truncations, value polygons, "
               "and diskoid decompositions over p-adic and t-adic fields"};
  app.require_subcommand(1);

  std::string ctx_text = "tadic:QQ";
  std::string val_text;
  std::string poly_text;
  std::string q_text;
  std::string rho_text;
  std::string roots_text;
  std::string a_text;
  std::string format_text = "json";
  std::string suite_text;
  std::string check_text;
  std::uint64_t seed = 0;

  CLI::App* value_cmd =
      app.add_subcommand("value", "value of a polynomial under a valuation");
  value_cmd->add_option("--ctx", ctx_text, "field context")->required();
  value_cmd->add_option("--val", val_text, "valuation descriptor")->required();
  value_cmd->add_option("--poly", poly_text, "polynomial in X")->required();

  CLI::App* epsilon_cmd = app.add_subcommand(
      "epsilon", "largest drop rate of the value across derivatives");
  epsilon_cmd->add_option("--ctx", ctx_text, "field context")->required();
  epsilon_cmd->add_option("--val", val_text, "valuation descriptor")->required();
  epsilon_cmd->add_option("--poly", poly_text, "polynomial in X")->required();

  CLI::App* expand_cmd =
      app.add_subcommand("expand", "expansion of a polynomial in powers of a key");
  expand_cmd->add_option("--ctx", ctx_text, "field context")->required();
  expand_cmd->add_option("--poly", poly_text, "polynomial in X")->required();
  expand_cmd->add_option("--q", q_text, "monic key polynomial")->required();

  CLI::App* polygon_cmd =
      app.add_subcommand("polygon", "value polygon of a polynomial");
  polygon_cmd->add_option("--ctx", ctx_text, "field context")->required();
  polygon_cmd->add_option("--val", val_text, "valuation descriptor")->required();
  polygon_cmd->add_option("--poly", poly_text, "polynomial in X")->required();
  polygon_cmd->add_option("--format", format_text, "ascii, svg, or json")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));

  CLI::App* diskoid_cmd = app.add_subcommand(
      "diskoid", "ball decomposition of a polynomial sublevel set");
  diskoid_cmd->add_option("--ctx", ctx_text, "field context")->required();
  diskoid_cmd->add_option("--poly", poly_text, "polynomial in X")->required();
  diskoid_cmd->add_option("--rho", rho_text, "level")->required();
  diskoid_cmd->add_option("--roots", roots_text, "comma-separated roots")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run a named executable check or a seeded property suite");
  verify_cmd->add_option(
      "check", check_text,
      "product-gap, product-rule, pair-equivalence, conjugate-invariance, "
      "or root-matching");
  verify_cmd->add_option("--suite", suite_text,
                         "axioms, newton, correspondence, diskoid, or all");
  verify_cmd->add_option("--seed", seed, "suite sample seed");
  verify_cmd->add_option("--ctx", ctx_text, "field context");
  verify_cmd->add_option("--a", a_text, "center element for product-gap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (value_cmd->parsed()) {
      const FieldContext ctx = parse_context(ctx_text);
      const PolyValuation mu = parse_valuation(val_text, ctx);
      const Polynomial f = parse_polynomial(poly_text, ctx);
      std::cout << value_of(mu, f).str() << "\n";
      return 0;
    }
    if (epsilon_cmd->parsed()) {
      const FieldContext ctx = parse_context(ctx_text);
      const PolyValuation mu = parse_valuation(val_text, ctx);
      const Polynomial f = parse_polynomial(poly_text, ctx);
      std::cout << epsilon_factor(mu, f).str() << "\n";
      return 0;
    }
    if (expand_cmd->parsed()) {
      const FieldContext ctx = parse_context(ctx_text);
      const Polynomial f = parse_polynomial(poly_text, ctx);
      const Polynomial key = parse_polynomial(q_text, ctx);
      Json parts = Json::array();
      for (const auto& part : q_expansion(f, key)) parts.push_back(part.str());
      std::cout << Json{{"key", key.str()}, {"parts", parts}}.dump(2) << "\n";
      return 0;
    }
    if (polygon_cmd->parsed()) {
      const FieldContext ctx = parse_context(ctx_text);
      const PolyValuation mu = parse_valuation(val_text, ctx);
      const Polynomial f = parse_polynomial(poly_text, ctx);
      std::cout << render(slope_data(f, mu), format_of(format_text));
      if (format_text == "json") std::cout << "\n";
      return 0;
    }
    if (diskoid_cmd->parsed()) {
      const FieldContext ctx = parse_context(ctx_text);
      const Polynomial f = parse_polynomial(poly_text, ctx);
      const GroupValue rho = parse_group_value(rho_text, ctx.group_dim);
      const std::vector<FieldElement> roots = parse_element_list(roots_text, ctx);
      std::cout << decompose(f, roots, rho).to_json().dump(2) << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (!suite_text.empty() && !check_text.empty())
        fail(errc::parse_error,
             "give either a named check or --suite, not both");
      if (!suite_text.empty()) return emit_report(run_suite(suite_text, seed));
      if (check_text == "product-gap") {
        const FieldContext ctx = parse_context(ctx_text);
        if (a_text.empty())
          fail(errc::parse_error, "product-gap needs --a <center>");
        return emit_report(product_gap_report(ctx, parse_element(a_text, ctx)));
      }
      if (check_text == "product-rule")
        return emit_report(fixture_product_rule_reports());
      if (check_text == "pair-equivalence")
        return emit_report(fixture_pair_equivalence_report());
      if (check_text == "conjugate-invariance")
        return emit_report(fixture_conjugate_invariance_report());
      if (check_text == "root-matching")
        return emit_report(fixture_root_matching_report());
      if (check_text.empty())
        fail(errc::parse_error, "verify needs a check name or --suite");
      fail(errc::parse_error, "unknown check: " + check_text);
    }
    return 2;
  } catch (const kxval::error& e) {
    Json out{{"error", errc_name(e.code())}, {"message", e.what()}};
    std::cout << out.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json out{{"error", "internal"}, {"message", e.what()}};
    std::cout << out.dump(2) << "\n";
    return 2;
  }
}
