#include "kah/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "kah/errors.hpp"
#include "kah/io.hpp"

namespace kah::cli {

namespace {

struct Config {
  double tol_membership = kDefaultMembershipTol;
  double tol_residual = kDefaultResidualTol;
  std::uint64_t seed = 0;
};

void emit(std::ostream& out, const io::json& j) { out << j.dump(2) << '\n'; }

template <typename T, typename Parse>
T require_tag(const std::string& name, Parse parse, const char* what) {
  const auto v = parse(name);
  if (!v) throw CLI::ValidationError(std::string("unknown ") + what + ": " + name);
  return *v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cartan KAH decompositions for G2(C), Spin(7,C), SO(7,C)", "kahtool"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tol-membership", cfg.tol_membership, "membership/rank tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-residual", cfg.tol_residual, "decomposition residual tolerance")
      ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "print the octonion multiplication table");

  std::string file;
  std::string group_name;
  auto* check = app.add_subcommand("check", "membership report for a matrix");
  check->add_option("file", file, "CMatrix JSON file, - for stdin")->required();
  check->add_option("--group", group_name,
                    "so8c|so7c|spin7c|g2c|sl3c|so8|so7|spin7|g2|su3")
      ->required();

  std::string pair_name;
  auto* dec = app.add_subcommand("decompose", "Cartan decomposition g = k a h");
  dec->add_option("file", file, "CMatrix JSON file, - for stdin")->required();
  dec->add_option("--pair", pair_name, "r1|r1p|r2")->required();
  dec->add_option("--tol", cfg.tol_residual, "residual tolerance")->check(CLI::PositiveNumber);

  double scale = 1.0;
  auto* rnd = app.add_subcommand("random", "seeded random group element");
  rnd->add_option("--group", group_name, "group tag")->required();
  rnd->add_option("--seed", cfg.seed, "PRNG seed");
  rnd->add_option("--scale", scale, "coefficient range, at most 3")->check(CLI::Range(0.0, 3.0));

  std::size_t samples = 50;
  auto* vis = app.add_subcommand("visible", "check decomposition, slice and sigma0 witness on random samples");
  vis->add_option("--pair", pair_name, "r1|r1p|r2")->required();
  vis->add_option("--samples", samples, "number of samples");
  vis->add_option("--seed", cfg.seed, "PRNG seed");
  vis->add_option("--scale", scale, "sampling scale, at most 3")->check(CLI::Range(0.0, 3.0));

  std::string algebra_name;
  auto* rf = app.add_subcommand("realform", "sigma0-real form diagnostics");
  rf->add_option("--algebra", algebra_name, "g2c|spin7c|so7c|so8c")->required();
  rf->add_option("--seed", cfg.seed, "seed for the generic-element trials");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kIoFailure;
  }

  try {
    if (*table) {
      emit(out, io::table_to_json(mult_table()));
      return kOk;
    }
    if (*check) {
      const GroupTag group = require_tag<GroupTag>(group_name, parse_group_tag, "group");
      const CMatrix g = io::matrix_from_json(io::parse_file(file, in));
      const MembershipReport r = classify(g, cfg.tol_membership);
      const bool member = is_member(r, group);
      emit(out, io::json{{"group", std::string(to_string(group))},
                         {"member", member},
                         {"residual", membership_residual(r, group)},
                         {"report", io::report_to_json(r)}});
      return member ? kOk : kMathFailure;
    }
    if (*dec) {
      const PairType pair = require_tag<PairType>(pair_name, parse_pair, "pair");
      const CMatrix g = io::matrix_from_json(io::parse_file(file, in));
      try {
        emit(out, io::factors_to_json(decompose(pair, g, cfg.tol_residual, cfg.tol_membership)));
      } catch (const MembershipError& e) {
        err << "decompose: " << e.what() << " (residual " << e.residual() << ")\n";
        return kMathFailure;
      } catch (const NumericalError& e) {
        err << "decompose: " << e.what() << '\n';
        return kMathFailure;
      }
      return kOk;
    }
    if (*rnd) {
      const GroupTag group = require_tag<GroupTag>(group_name, parse_group_tag, "group");
      emit(out, io::matrix_to_json(random_element(group, cfg.seed, scale)));
      return kOk;
    }
    if (*vis) {
      const PairType pair = require_tag<PairType>(pair_name, parse_pair, "pair");
      const batch::VisibleSummary s =
          batch::run_visible(pair, samples, cfg.seed, scale, cfg.tol_residual);
      emit(out, io::visible_to_json(s));
      return s.ok ? kOk : kMathFailure;
    }
    if (*rf) {
      const AlgebraTag tag = require_tag<AlgebraTag>(algebra_name, parse_algebra_tag, "algebra");
      if (tag != AlgebraTag::g2C && tag != AlgebraTag::spin7C && tag != AlgebraTag::so7C &&
          tag != AlgebraTag::so8C)
        throw CLI::ValidationError("realform supports g2c, spin7c, so7c, so8c");
      const RealFormReport r = real_form_report(tag, cfg.seed, cfg.tol_membership);
      emit(out, io::real_form_to_json(r));
      return r.inconclusive ? kInconclusive : kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kIoFailure;
  } catch (const io::ParseError& e) {
    err << e.what() << '\n';
    return kIoFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid JSON: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kMathFailure;
  }
  return kIoFailure;
}

}  // namespace kah::cli
