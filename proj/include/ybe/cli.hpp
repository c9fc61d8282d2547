#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybe/campaigns.hpp"
#include "ybe/catalog.hpp"
#include "ybe/io.hpp"
#include "ybe/liftings.hpp"
#include "ybe/operator_checkers.hpp"
#include "ybe/ybe_checkers.hpp"

namespace ybe::cli {

enum class Format { human, machine };

struct Options {
  std::string kind;
  std::string algebra = "catalog:aff1";
  std::string module = "adjoint";
  std::string tensor;
  std::string map;
  std::string beta = "zero";
  std::string weight = "0";
  std::string mass;
  std::string mass2 = "0";
  std::string eps;
  int sign = 1;
  std::string mu1 = "1";
  std::string mu2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Format format = Format::human;
  std::string out;
};

inline std::string index_text(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + ")";
}

inline std::string human(const Report& r) {
  std::ostringstream os;
  os << (r.ok() ? "holds" : "fails") << ": " << r.context;
  if (!r.ok()) os << " (" << r.nonzero.size() << " nonzero)";
  os << '\n';
  const std::size_t shown = std::min<std::size_t>(r.nonzero.size(), 40);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& e = r.nonzero[i];
    os << "  " << index_text(e.index) << " = " << to_string(e.value);
    if (!e.label.empty()) os << "  [" << e.label << "]";
    os << '\n';
  }
  if (shown < r.nonzero.size()) os << "  ... " << r.nonzero.size() - shown << " more\n";
  return os.str();
}

inline Scalar scalar_opt(const std::string& text, const char* flag) {
  if (text.empty()) throw PreconditionError(std::string("missing required ") + flag);
  try {
    return parse_scalar(text);
  } catch (const Error& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

inline const std::string& required(const std::string& value, const char* flag) {
  if (value.empty()) throw PreconditionError(std::string("missing required ") + flag);
  return value;
}

/// Module argument, with "self" for the adjoint g-Lie algebra g itself.
struct Target {
  Representation rep;
  GLieAlgebra K;
  bool self = false;
};

inline Target load_target(const Options& o, const LieAlgebra& g) {
  if (o.module == "self") return {adjoint_representation(g), self_action(g), true};
  Representation rep = io::load_module(o.module, g);
  if (const Report rr = check_representation(g, rep); !rr.ok()) throw PreconditionError("module is not a representation");
  GLieAlgebra K = as_g_lie_algebra(rep);
  return {std::move(rep), std::move(K), false};
}

inline Report run_check(const Options& o) {
  const LieAlgebra g = io::load_algebra(o.algebra);
  const std::string& k = o.kind;
  auto tensor = [&] { return io::parse_tensor_expression(g, required(o.tensor, "--tensor")); };
  auto endo = [&] { return io::parse_map_expression(required(o.map, "--map"), g.space(), g.space(), &g); };
  auto into_g = [&](const Target& t, const std::string& text) {
    return io::parse_map_expression(required(text, "--map"), t.rep.space, g.space(), &g);
  };

  if (k == "cybe") return to_report(cybe_residual(g, tensor()), "cybe");
  if (k == "ecybe") return to_report(ecybe_residual(g, tensor(), scalar_opt(o.eps, "--eps")), "ecybe");
  if (k == "gcybe") return to_report(gcybe_residual(g, tensor()), "gcybe");
  if (k == "invariance") return to_report(invariance_residual(g, tensor()), "invariance");
  if (k == "kupershmidt") return map_report(kupershmidt_residual(g, tensor()), "kupershmidt");
  if (k == "lie-coalgebra") {
    const CoalgebraCheck c = is_lie_coalgebra(g, tensor());
    Report rep = c.direct;
    rep.context = "lie coalgebra";
    if (!c.agree()) throw Error("direct verdict and criterion disagree");
    return rep;
  }
  if (k == "myb") {
    const Scalar kappa = o.mass.empty() ? Scalar(-1) : scalar_opt(o.mass, "--mass");
    return map_report(modified_ybe_residual(g, endo(), kappa), "modified yang-baxter");
  }
  if (k == "rb") return map_report(rota_baxter_residual(g, endo(), scalar_opt(o.weight, "--weight")), "rota-baxter");

  const Target t = load_target(o, g);
  if (k == "o-op") return map_report(o_operator_residual(g, t.rep, into_g(t, o.map)), "o-operator");
  if (k == "o-op-weighted")
    return map_report(o_operator_weighted_residual(g, t.K, into_g(t, o.map), scalar_opt(o.weight, "--weight")),
                      "weighted o-operator");
  if (k == "ext-o-op") {
    const LinearMap beta = io::parse_map_expression(o.beta, t.rep.space, g.space(), &g);
    return map_report(extended_o_residual(g, t.K, into_g(t, o.map), beta, scalar_opt(o.weight, "--weight"),
                                          scalar_opt(o.mass, "--mass"), scalar_opt(o.mass2, "--mass2")),
                      "extended o-operator");
  }
  if (k == "antisym-hom") {
    return antisym_hom_residual(g, t.K, into_g(t, o.map), scalar_opt(o.mass, "--mass"),
                                scalar_opt(o.mass2, "--mass2"));
  }
  if (k == "gen-o-op") {
    const GeneralizedOResiduals r = generalized_o_residuals(g, t.rep, into_g(t, o.map));
    Report rep;
    rep.kind = ResidualKind::map_residual;
    rep.context = "generalized o-operator";
    rep.absorb(r.cyclic, "cyclic");
    rep.absorb(r.equivariance, "equivariance");
    return rep;
  }
  if (k == "reldiff") {
    const LinearMap f = io::parse_map_expression(required(o.map, "--map"), g.space(), t.rep.space, &g);
    return map_report(reldiff_residual(g, t.K, f, scalar_opt(o.weight, "--weight")), "relative differential");
  }
  throw PreconditionError("unknown check kind '" + k + "'");
}

inline LiftResult run_lift(const Options& o) {
  const LieAlgebra g = io::load_algebra(o.algebra);
  const std::string& k = o.kind;
  auto endo = [&] { return io::parse_map_expression(required(o.map, "--map"), g.space(), g.space(), &g); };
  if (k == "baxter") {
    const Representation ad = adjoint_representation(g);
    const LinearMap R = endo();
    return lift_extended(g, ad, LinearMap(ad.space, g.space(), R.matrix()),
                         LinearMap(ad.space, g.space(), Matrix::identity(g.dim())), -1, o.sign);
  }
  if (k == "rb-weight") return lift_rb_weight(g, endo(), scalar_opt(o.weight, "--weight"));

  const Target t = load_target(o, g);
  auto into_g = [&](const std::string& text) {
    return io::parse_map_expression(required(text, "--map"), t.rep.space, g.space(), &g);
  };
  if (k == "o-op") return lift_o_operator(g, t.rep, into_g(o.map));
  if (k == "extended") {
    return lift_extended(g, t.rep, into_g(o.map), into_g(o.beta), scalar_opt(o.mass, "--mass"), o.sign);
  }
  if (k == "o-op-to-rb")
    return o_op_to_rb(g, t.K, into_g(o.map), scalar_opt(o.weight, "--weight"), scalar_opt(o.mu1, "--mu1"));
  if (k == "invertible-o-to-rb") {
    return invertible_o_to_rb(g, t.rep, into_g(o.map), scalar_opt(o.weight, "--weight"), scalar_opt(o.mu1, "--mu1"),
                              scalar_opt(o.mu2, "--mu2"));
  }
  if (k == "reldiff-to-rb") {
    const LinearMap f = io::parse_map_expression(required(o.map, "--map"), g.space(), t.rep.space, &g);
    if (t.self || o.weight == "0") return reldiff_to_rb(g, t.K, f);
    return reldiff_to_rb(g, t.rep, f, scalar_opt(o.weight, "--weight"), scalar_opt(o.mu1, "--mu1"));
  }
  throw PreconditionError("unknown lift kind '" + k + "'");
}

inline void write_lift(const std::string& dir, const LiftResult& lift, const Report& verification) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
  const fs::path base(dir);
  io::write_json_file((base / "algebra.json").string(), io::to_json(lift.big));
  for (std::size_t i = 0; i < lift.tensors.size(); ++i)
    io::write_json_file((base / ("tensor-" + std::to_string(i + 1) + ".json")).string(), io::to_json(lift.tensors[i]));
  for (std::size_t i = 0; i < lift.maps.size(); ++i)
    io::write_json_file((base / ("map-" + std::to_string(i + 1) + ".json")).string(), io::to_json(lift.maps[i]));
  io::write_json_file((base / "lift.json").string(), io::to_json(lift));
  io::write_json_file((base / "report.json").string(), io::to_json(verification));
}

/// Entry point shared by the executable and the tests. Returns the exit
/// code: 0 holds, 1 fails, 2 error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Yang-Baxter type equations and the operators behind them", "ybe"};
  app.require_subcommand(1);
  Options o;
  std::string format = "human";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "catalog:NAME or algebra file");
    sub->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--out", o.out, "output directory");
  };
  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--module", o.module, "adjoint, coadjoint, trivial:N, self, or module file");
    sub->add_option("--tensor", o.tensor, "tensor expression or file");
    sub->add_option("--map", o.map, "zero, id, JSON matrix, catalog map name, or file");
    sub->add_option("--beta", o.beta, "extension map (same forms as --map)");
    sub->add_option("--weight", o.weight, "weight lambda");
    sub->add_option("--mass", o.mass, "mass kappa");
    sub->add_option("--mass2", o.mass2, "second mass mu");
    sub->add_option("--eps", o.eps, "ECYBE mass");
    sub->add_option("--sign", o.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
    sub->add_option("--mu1", o.mu1, "first scale");
    sub->add_option("--mu2", o.mu2, "second scale");
  };

  CLI::App* check_cmd = app.add_subcommand("check", "evaluate a residual");
  check_cmd->add_option("kind", o.kind, "what to check")
      ->required()
      ->check(CLI::IsMember({"cybe", "ecybe", "gcybe", "myb", "invariance", "o-op", "o-op-weighted", "rb", "ext-o-op",
                             "gen-o-op", "reldiff", "antisym-hom", "kupershmidt", "lie-coalgebra"}));
  common(check_cmd);
  inputs(check_cmd);

  CLI::App* lift_cmd = app.add_subcommand("lift", "build a lifted solution and re-verify it");
  lift_cmd->add_option("kind", o.kind, "construction")
      ->required()
      ->check(CLI::IsMember(
          {"o-op", "extended", "baxter", "rb-weight", "o-op-to-rb", "invertible-o-to-rb", "reldiff-to-rb"}));
  common(lift_cmd);
  inputs(lift_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify-theorem", "run a randomized two-sided campaign");
  verify_cmd->add_option("name", o.kind, "theorem name or alias")->required();
  verify_cmd->add_option("--trials", o.trials, "number of trials (at least 1)");
  verify_cmd->add_option("--seed", o.seed, "root seed");
  common(verify_cmd);

  CLI::App* list_cmd = app.add_subcommand("list", "list catalog algebras and theorem names");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  o.format = format == "machine" ? Format::machine : Format::human;
  const bool machine = o.format == Format::machine;

  try {
    (void)catalog();
    if (list_cmd->parsed()) {
      for (const auto& e : catalog()) out << "algebra " << e.name << "  " << e.notes << '\n';
      for (const auto& t : theorems()) {
        out << "theorem " << t.name;
        for (const auto& a : t.aliases) out << " (" << a << ")";
        out << "  " << t.description << '\n';
      }
      return 0;
    }
    if (check_cmd->parsed()) {
      const Report rep = run_check(o);
      if (machine) {
        out << io::to_json(rep).dump(2) << '\n';
      } else {
        out << human(rep);
      }
      if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        io::write_json_file((std::filesystem::path(o.out) / "report.json").string(), io::to_json(rep));
      }
      return rep.ok() ? 0 : 1;
    }
    if (lift_cmd->parsed()) {
      const LiftResult lift = run_lift(o);
      const Report rep = verify_lift(lift);
      if (machine) {
        nlohmann::ordered_json j;
        j["lift"] = io::to_json(lift);
        j["verification"] = io::to_json(rep);
        out << j.dump(2) << '\n';
      } else {
        out << lift.provenance.construction << " lift over " << lift.big.name() << " (dim " << lift.big.dim() << ")\n";
        out << human(rep);
      }
      if (!o.out.empty()) write_lift(o.out, lift, rep);
      return rep.ok() ? 0 : 1;
    }
    const CampaignSummary s = run_campaign(o.kind, o.trials, o.seed);
    if (machine) {
      out << summary_json(s).dump(2) << '\n';
    } else {
      out << summary_text(s);
    }
    if (!o.out.empty()) {
      std::filesystem::create_directories(o.out);
      io::write_json_file((std::filesystem::path(o.out) / (s.theorem + ".json")).string(), summary_json(s));
    }
    return s.ok() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ybe::cli
