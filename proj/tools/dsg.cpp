#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsg/bounds.hpp"
#include "dsg/errors.hpp"
#include "dsg/game.hpp"
#include "dsg/generator.hpp"
#include "dsg/io.hpp"
#include "dsg/lasso.hpp"
#include "dsg/polynomial.hpp"
#include "dsg/roots.hpp"
#include "dsg/solver.hpp"
#include "dsg/threshold.hpp"

namespace {

using dsg::Int;
using dsg::Rational;

dsg::game::Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dsg::ParseError("cannot open game file '" + path + "'");
  return dsg::game::parse_game(in);
}

dsg::game::PositionalStrategy pick_sigma0(const dsg::game::Game& g,
                                          const std::string& rule) {
  if (rule == "least") return dsg::game::least_index_strategy(g, 1);
  if (rule == "greatest") return dsg::game::greatest_index_strategy(g, 1);
  if (rule == "middle") return dsg::game::middle_index_strategy(g, 1);
  throw dsg::ParseError("unknown start rule '" + rule +
                        "' (expected least, greatest, or middle)");
}

// stdout unless a path is given.
class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw dsg::ParseError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Int parse_big(const std::string& s, const std::string& what) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw dsg::ParseError("malformed " + what + " '" + s + "'");
  }
}

void print_values(std::ostream& out, const std::string& key,
                  const dsg::solve::ValueVector& f) {
  for (std::size_t v = 0; v < f.size(); ++v)
    out << key << "[" << v << "]: " << dsg::format_rational(f[v]) << "\n";
}

void print_strategy(std::ostream& out, const dsg::game::Game& g,
                    const std::string& key,
                    const dsg::game::PositionalStrategy& s) {
  for (int v = 0; v < g.n; ++v) {
    if (g.owner[static_cast<std::size_t>(v)] != s.player) continue;
    out << key << "[" << v << "]: " << s.choice[static_cast<std::size_t>(v)]
        << "\n";
  }
}

void print_certificate(std::ostream& out, const dsg::poly::SignFlipCertificate& c) {
  out << "certified: " << (c.certified ? "true" : "false") << "\n";
  out << "k: " << c.k << "\n";
  out << "f_at_one: " << c.f_at_one.get_str() << "\n";
  out << "f_deriv_at_one: " << c.f_deriv_at_one.get_str() << "\n";
  out << "h_degree: " << c.h_degree.get_str() << "\n";
  out << "beta: " << dsg::format_rational(c.beta) << "\n";
  out << "lhs: " << dsg::format_rational(c.lhs) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact strategy iteration and root bounds for discounted games"};
  app.require_subcommand(1);

  std::string game_path, lambda_text, out_path, sigma0_rule = "least";
  std::string poly_text, lo_text, hi_text, d_text, report_path;
  std::vector<std::string> lambda_list;
  unsigned long long guard_profiles = 1000000ULL;
  unsigned long long guard_space = 10000000ULL;
  std::uint64_t seed = 20240817ULL;
  long game_id = 0;
  bool auto_grid = false, waive = false;
  int gen_n = 0;
  int density = 500;
  long long gen_w = 0;
  unsigned long arg_n = 0, arg_w = 0, arg_k = 0, arg_m = 0, arg_t = 0;
  unsigned grid = 81;

  auto* solve = app.add_subcommand("solve", "optimal values and strategies");
  solve->add_option("game", game_path, "game file")->required();
  solve->add_option("--lambda", lambda_text, "discount factor p/q")->required();
  solve->add_option("--sigma0", sigma0_rule, "start rule: least|greatest|middle");
  solve->add_option("--out", out_path, "output file (default stdout)");
  solve->callback([&] {
    dsg::game::Game g = load_game(game_path);
    Rational lambda = dsg::parse_lambda(lambda_text);
    dsg::solve::SiResult r = dsg::solve::strategy_iteration(
        g, lambda, pick_sigma0(g, sigma0_rule));
    OutStream os(out_path);
    std::ostream& out = os.get();
    out << "n: " << g.n << "\n";
    out << "lambda: " << dsg::format_rational(lambda) << "\n";
    out << "iterations: " << r.trace.iterations() << "\n";
    print_values(out, "value", r.values);
    print_strategy(out, g, "sigma", r.sigma_star);
    print_strategy(out, g, "tau", r.trace.steps.back().second);
  });

  auto* oracle = app.add_subcommand("oracle", "brute-force maxmin and minmax");
  oracle->add_option("game", game_path, "game file")->required();
  oracle->add_option("--lambda", lambda_text, "discount factor p/q")->required();
  oracle->add_option("--guard-profiles", guard_profiles,
                     "abort beyond this many positional profiles");
  oracle->add_option("--out", out_path, "output file (default stdout)");
  oracle->callback([&] {
    dsg::game::Game g = load_game(game_path);
    Rational lambda = dsg::parse_lambda(lambda_text);
    dsg::solve::OracleValues ov =
        dsg::solve::brute_force_values(g, lambda, guard_profiles);
    OutStream os(out_path);
    print_values(os.get(), "maxmin", ov.maxmin);
    print_values(os.get(), "minmax", ov.minmax);
  });

  auto* sweep = app.add_subcommand("sweep", "iteration counts across discounts");
  sweep->add_option("game", game_path, "game file")->required();
  sweep->add_option("--lambda", lambda_list, "discount grid entries p/q");
  sweep->add_flag("--auto", auto_grid,
                  "append the threshold and its midpoint with 1 to the grid");
  sweep->add_option("--sigma0", sigma0_rule, "start rule: least|greatest|middle");
  sweep->add_option("--game-id", game_id, "first CSV column");
  sweep->add_option("--report", report_path,
                    "also write a trace-equivalence report to this file");
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");
  sweep->callback([&] {
    dsg::game::Game g = load_game(game_path);
    std::vector<Rational> lambdas;
    if (lambda_list.empty())
      lambdas = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    else
      for (const std::string& s : lambda_list)
        lambdas.push_back(dsg::parse_lambda(s));
    Rational l0 = dsg::thresh::lambda_zero_for(g);
    if (auto_grid) {
      lambdas.push_back(l0);
      lambdas.push_back(Rational((l0 + 1) / 2));
    }
    dsg::game::PositionalStrategy s0 = pick_sigma0(g, sigma0_rule);
    std::vector<dsg::thresh::SweepRow> rows =
        dsg::thresh::iteration_sweep(g, lambdas, s0);
    OutStream os(out_path);
    dsg::io::write_sweep_csv(os.get(), game_id, rows);
    if (!report_path.empty()) {
      dsg::thresh::ThresholdReport rep;
      rep.n = g.n;
      rep.w = dsg::thresh::game_weight_bound(g);
      rep.exponent = dsg::thresh::lambda_zero_exponent(rep.n, rep.w);
      rep.lambda0 = l0;
      for (const auto& row : rows) {
        if (row.lambda < l0) continue;
        dsg::thresh::ThresholdReport::Row out_row;
        out_row.lambda = row.lambda;
        out_row.iterations = row.iterations;
        out_row.traces_equal =
            dsg::thresh::trace_equivalence(g, s0, row.lambda).equal;
        rep.rows.push_back(out_row);
      }
      std::ofstream rf(report_path);
      if (!rf)
        throw dsg::ParseError("cannot open report file '" + report_path + "'");
      rf << dsg::thresh::threshold_report_text(rep);
    }
  });

  auto* gen = app.add_subcommand("gen", "random game in the text format");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--density", density, "edge probability in permille");
  gen->add_option("--W", gen_w, "weight bound")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen->callback([&] {
    dsg::game::Game g = dsg::game::random_game(gen_n, density, gen_w, seed);
    OutStream os(out_path);
    os.get() << dsg::game::serialize_game(g);
  });

  auto* rootplot = app.add_subcommand(
      "rootplot", "roots of all small polynomials near 1");
  rootplot->add_option("--n", arg_n, "max degree")->required();
  rootplot->add_option("--W", arg_w, "coefficient bound")->required();
  rootplot->add_option("--grid", grid, "magnitude sample resolution");
  rootplot->add_option("--guard", guard_space,
                       "abort beyond this many coefficient vectors");
  rootplot->add_option("--out", out_path, "output prefix (default rootplot)");
  rootplot->callback([&] {
    std::string prefix = out_path.empty() ? "rootplot" : out_path;
    std::ofstream roots(prefix + "_roots.csv");
    std::ofstream gridcsv(prefix + "_grid.csv");
    std::ofstream svg(prefix + ".svg");
    if (!roots || !gridcsv || !svg)
      throw dsg::ParseError("cannot open output files with prefix '" + prefix +
                            "'");
    dsg::io::RootplotSummary sum =
        dsg::io::rootplot(arg_n, arg_w, grid, roots, gridcsv, svg, guard_space);
    std::cout << "polys: " << sum.polys << "\n";
    std::cout << "roots: " << sum.roots << "\n";
    std::cout << "gap_defined: " << (sum.gap_defined ? "true" : "false") << "\n";
    if (sum.gap_defined)
      std::cout << "min_distance_lo: " << dsg::format_rational(sum.min_distance_lo)
                << "\n";
  });

  auto* poly = app.add_subcommand("poly", "polynomial laboratory");
  poly->require_subcommand(1);

  auto* roots_cmd = poly->add_subcommand("roots", "isolate real roots");
  roots_cmd->add_option("--poly", poly_text, "coefficients c0,c1,...")->required();
  roots_cmd->add_option("--lo", lo_text, "open interval lower end p/q");
  roots_cmd->add_option("--hi", hi_text, "open interval upper end p/q");
  roots_cmd->add_option("--out", out_path, "output file (default stdout)");
  roots_cmd->callback([&] {
    dsg::poly::Polynomial p = dsg::poly::Polynomial::parse(poly_text);
    std::vector<dsg::poly::RootInterval> ivs;
    if (lo_text.empty() != hi_text.empty())
      throw dsg::ParseError("--lo and --hi must be given together");
    if (!lo_text.empty())
      ivs = dsg::poly::isolate_real_roots(p, dsg::parse_rational(lo_text),
                                          dsg::parse_rational(hi_text));
    else
      ivs = dsg::poly::isolate_real_roots(p);
    OutStream os(out_path);
    std::ostream& out = os.get();
    out << "roots: " << ivs.size() << "\n";
    for (std::size_t i = 0; i < ivs.size(); ++i)
      out << "root[" << i << "]: " << dsg::format_rational(ivs[i].lo) << " "
          << dsg::format_rational(ivs[i].hi) << "\n";
  });

  auto* order_cmd = poly->add_subcommand("order", "root order at 1");
  order_cmd->add_option("--poly", poly_text, "coefficients c0,c1,...")->required();
  order_cmd->callback([&] {
    dsg::poly::Polynomial p = dsg::poly::Polynomial::parse(poly_text);
    std::cout << "order: " << dsg::poly::root_order_at_one(p) << "\n";
  });

  auto* seed_cmd = poly->add_subcommand("seed", "high-order seed polynomial");
  seed_cmd->add_option("--m", arg_m, "degree")->required();
  seed_cmd->add_option("--out", out_path, "output file (default stdout)");
  seed_cmd->callback([&] {
    OutStream os(out_path);
    os.get() << dsg::poly::constructive_seed(arg_m).to_text() << "\n";
  });

  auto* amplify_cmd = poly->add_subcommand("amplify", "lasso amplification");
  amplify_cmd->add_option("--poly", poly_text, "coefficients c0,c1,...")->required();
  amplify_cmd->add_option("--d", d_text, "inflation factor")->required();
  amplify_cmd->add_option("--out", out_path, "output file (default stdout)");
  amplify_cmd->callback([&] {
    dsg::poly::Polynomial p = dsg::poly::Polynomial::parse(poly_text);
    Int d = parse_big(d_text, "inflation factor");
    if (d < 1 || !d.fits_ulong_p())
      throw dsg::PreconditionViolated("inflation factor out of range");
    OutStream os(out_path);
    os.get() << dsg::poly::lasso_amplify(p, d.get_ui()).to_text() << "\n";
  });

  auto* certify_cmd =
      poly->add_subcommand("certify", "sign-flip certificate near 1");
  certify_cmd->add_option("--poly", poly_text, "coefficients c0,c1,...");
  certify_cmd->add_option("--seed-m", arg_m, "use the seed of this degree");
  certify_cmd->add_option("--d", d_text, "inflation factor")->required();
  certify_cmd->add_flag("--waive", waive, "skip the size gates (cross-check use)");
  certify_cmd->callback([&] {
    if (poly_text.empty() == (arg_m == 0))
      throw dsg::ParseError("give exactly one of --poly and --seed-m");
    dsg::poly::Polynomial p = poly_text.empty()
                                  ? dsg::poly::constructive_seed(arg_m)
                                  : dsg::poly::Polynomial::parse(poly_text);
    Int d = parse_big(d_text, "inflation factor");
    dsg::poly::SignFlipCertificate c = waive
                                           ? dsg::poly::sign_flip_terms(p, d)
                                           : dsg::poly::certify_sign_flip(p, d);
    print_certificate(std::cout, c);
  });

  auto* pigeon_cmd =
      poly->add_subcommand("pigeonhole", "colliding derivative signatures");
  pigeon_cmd->add_option("--n", arg_n, "max degree")->required();
  pigeon_cmd->add_option("--k", arg_k, "signature length")->required();
  pigeon_cmd->callback([&] {
    dsg::poly::Polynomial p = dsg::poly::pigeonhole_search(arg_n, arg_k);
    std::cout << "poly: " << p.to_text() << "\n";
    std::cout << "order: " << dsg::poly::root_order_at_one(p) << "\n";
  });

  auto* mingap_cmd =
      poly->add_subcommand("mingap", "smallest root distance to 1");
  mingap_cmd->add_option("--n", arg_n, "max degree")->required();
  mingap_cmd->add_option("--W", arg_w, "coefficient bound")->required();
  mingap_cmd->add_option("--guard", guard_space,
                         "abort beyond this many coefficient vectors");
  mingap_cmd->callback([&] {
    dsg::poly::MinGapResult r = dsg::poly::enumerate_min_gap(arg_n, arg_w,
                                                             guard_space);
    std::cout << "gap_lo: " << dsg::format_rational(r.gap_lo) << "\n";
    std::cout << "gap_hi: " << dsg::format_rational(r.gap_hi) << "\n";
    std::cout << "witness: " << r.witness.to_text() << "\n";
    std::cout << "searched: " << r.searched << "\n";
    std::cout << "bound: "
              << dsg::format_rational(dsg::poly::root_gap_lower_bound(
                     Int(static_cast<long>(arg_n)), Int(static_cast<long>(arg_w))))
              << "\n";
  });

  auto* cheb_cmd = poly->add_subcommand("chebyshev", "first-kind Chebyshev");
  cheb_cmd->add_option("--t", arg_t, "index")->required();
  cheb_cmd->callback([&] {
    std::cout << dsg::poly::chebyshev(arg_t).to_text() << "\n";
  });

  auto* verifyf_cmd =
      poly->add_subcommand("verify-f", "dominance of the amplification seed");
  verifyf_cmd->add_option("--n", arg_n, "sample count")->required();
  verifyf_cmd->add_option("--W", arg_w, "weight factor")->required();
  verifyf_cmd->callback([&] {
    dsg::poly::FPropertyCheck c = dsg::poly::verify_F_property(arg_n, arg_w);
    std::cout << "holds: " << (c.holds ? "true" : "false") << "\n";
    std::cout << "mu: " << c.mu << "\n";
    std::cout << "f_at_zero: " << dsg::format_rational(c.f_at_zero) << "\n";
    std::cout << "weighted_sum: " << dsg::format_rational(c.weighted_sum) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.cls()) {
      case dsg::ErrorClass::input:
        return 2;
      case dsg::ErrorClass::guard:
        return 3;
      case dsg::ErrorClass::internal:
        return 4;
    }
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
