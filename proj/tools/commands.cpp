#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "serialize.hpp"
#include "suites.hpp"
#include "yfuse/fusion.hpp"
#include "yfuse/mixed_tensor.hpp"
#include "yfuse/yangian.hpp"

namespace yfuse::cli {

namespace {

/// Options shared by the subcommands.
struct Options {
  std::string outer, inner, outer_tilde, inner_tilde;
  std::string tableau = "column", tableau_tilde = "column";
  bool column = false, row = false;
  int N = 2, M = 0, n = 1;
  std::string z = "0";
  std::uint64_t seed = kDefaultSeed;
  std::string bounds;
  std::string out_path;
  std::string check;
  std::string suite;
};

/// Tableaux and contents alone are cheap; this only guards against absurd input.
constexpr int kMaxTableauCells = 64;

/// Limits applied to single commands.
struct CommandLimits {
  int max_cells;
  long max_dim;
};

CommandLimits limits_for(const SuiteBounds& b) {
  return b.name == "tiny" ? CommandLimits{5, 256} : CommandLimits{8, MixedTensorSpace::kMaxDimension};
}

SuiteBounds resolve_bounds(const Options& o) {
  if (!o.bounds.empty()) return bounds_named(o.bounds);
  if (const char* env = std::getenv(kBoundsEnv); env != nullptr && *env != '\0') return bounds_named(env);
  return default_bounds();
}

StandardTableau make_tableau(const std::string& spec, const SkewShape& shape) {
  if (spec == "column") return column_tableau(shape);
  if (spec == "row") return row_tableau(shape);
  Json j;
  try {
    j = Json::parse(spec);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::InvalidInput, "--tableau expects column, row or a JSON filling");
  }
  if (!j.contains("outer")) j["outer"] = to_json(shape.outer());
  if (!j.contains("inner")) j["inner"] = to_json(shape.inner());
  const StandardTableau t = tableau_from_json(j);
  return t;
}

struct Instance {
  Partition lambda, mu, lambda_tilde, mu_tilde;
  StandardTableau omega, omega_tilde;
};

Instance read_instance(const Options& o, const CommandLimits& lim) {
  Instance in;
  in.lambda = parse_partition(o.outer);
  in.mu = parse_partition(o.inner);
  in.lambda_tilde = parse_partition(o.outer_tilde);
  in.mu_tilde = parse_partition(o.inner_tilde);
  const SkewShape s(in.lambda, in.mu), st(in.lambda_tilde, in.mu_tilde);
  if (s.size() + st.size() > lim.max_cells)
    throw Error(ErrorKind::BoundExceeded, "more than " + std::to_string(lim.max_cells) + " cells");
  in.omega = make_tableau(o.tableau, s);
  in.omega_tilde = make_tableau(o.tableau_tilde, st);
  if (!(in.omega.shape() == s) || !(in.omega_tilde.shape() == st))
    throw Error(ErrorKind::InvalidInput, "tableau shape differs from --outer/--inner");
  return in;
}

void check_dimension(int N, int factors, const CommandLimits& lim) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "N must be positive");
  tensor_dimension(N, factors, lim.max_dim);
}

Json instance_json(const Instance& in, const Options& o) {
  return Json{{"omega", to_json(in.omega)}, {"omega_tilde", to_json(in.omega_tilde)}, {"N", o.N}, {"M", o.M}};
}

Json certificate_json(const EquivalenceCertificate& c) {
  Json j{{"same_dimension", c.same_dimension}, {"solution_dim", c.solution_dim}, {"invertible", c.invertible},
         {"commutant_dims", Json::array({c.commutant_a, c.commutant_b})}, {"coefficients_used", c.K}};
  return j;
}

// ---- commands -----------------------------------------------------------

Json cmd_tableau(const Options& o, const CommandLimits& lim) {
  const SkewShape s(parse_partition(o.outer), parse_partition(o.inner));
  if (s.size() > kMaxTableauCells) throw Error(ErrorKind::BoundExceeded, "too many cells");
  const std::string spec = o.row ? "row" : o.tableau;
  const StandardTableau t = make_tableau(spec, s);
  Json doc{{"command", "tableau"}, {"shape", to_json(s)}, {"tableau", to_json(t)}, {"contents", contents(t)}};
  // Counting by enumeration only within the command limits.
  if (s.size() <= lim.max_cells && o.N >= 1 && o.N <= 4) {
    doc["standard_tableaux"] = static_cast<long>(enumerate_standard_tableaux(s).size());
    doc["semistandard_count"] = ssyt_count(s, o.N);
    doc["N"] = o.N;
  }
  return doc;
}

Json cmd_fuse(const Options& o, const CommandLimits& lim) {
  const SkewShape s(parse_partition(o.outer), parse_partition(o.inner));
  if (s.size() > std::min(lim.max_cells, 6)) throw Error(ErrorKind::BoundExceeded, "group order above 6");
  const StandardTableau t = make_tableau(o.tableau, s);
  const GroupAlgebraQ f = s.is_straight() ? fuse_f_Lambda(t) : fuse_f_Omega(t);
  Json doc{{"command", "fuse"}, {"tableau", to_json(t)}, {"element", to_json(f)}};
  if (s.is_straight()) doc["idempotent_scalar_identity"] = check_idempotent_scalar(t, f);
  return doc;
}

Json cmd_symmetrizer(const Options& o, const CommandLimits& lim, bool& pass) {
  const Instance in = read_instance(o, lim);
  const int n = in.omega.size(), nt = in.omega_tilde.size();
  check_dimension(o.N, n + nt, lim);
  const TensorOperator f = F_OmOmt_op(in.omega, in.omega_tilde, o.N, o.M);
  Json identities{{"exchange", check_G_exchange(in.omega, in.omega_tilde, o.N, o.M)},
                  {"equivariant", commutes_with_gl(f.space, f.matrix)}};
  if (o.M == 0 && in.mu.empty() && in.mu_tilde.empty() &&
      in.lambda.length() + in.lambda_tilde.length() <= o.N) {
    const SymmetrizerReport r = verify_symmetrizer_identities(in.omega, in.omega_tilde, o.N);
    identities["orderings_agree"] = r.orderings_agree;
    identities["transpose_invariant"] = r.transpose_invariant;
    identities["image_traceless"] = r.image_traceless;
    identities["image_intersection"] = r.image_intersection;
    identities["square_scalar"] = r.square_scalar;
    identities["rank_matches_weyl"] = r.rank_matches_weyl;
  }
  for (const auto& [k, v] : identities.items()) pass = pass && v.get<bool>();
  return Json{{"command", "symmetrizer"}, {"instance", instance_json(in, o)}, {"dim", f.space.dim()},
              {"rank", static_cast<long>(rank(f.matrix))}, {"matrix", to_json(f.matrix)}, {"identities", identities},
              {"pass", pass}};
}

Json cmd_verify(const Options& o, const CommandLimits& lim, bool& pass) {
  Json doc{{"command", "verify"}, {"check", o.check}};
  if (o.check == "sec44") {
    if (o.n < 1 || o.n > o.N) throw Error(ErrorKind::InvalidInput, "1 <= n <= N required");
    check_dimension(o.N, 1 + o.n, lim);
    const Rational z = Rational::parse(o.z);
    const ExteriorReport r = verify_exterior_powers(o.N, o.n, z);
    pass = r.all();
    doc["instance"] = Json{{"N", o.N}, {"n", o.n}, {"z", z.str()}};
    doc["results"] = Json{{"commutes_vector", r.commutes_vector}, {"commutes_dual", r.commutes_dual},
                          {"top_value", r.top_value}, {"top_dual_value", r.top_dual_value},
                          {"dual_equivalence", r.dual_equivalence}};
    doc["pass"] = pass;
    return doc;
  }
  const Instance in = read_instance(o, lim);
  const int n = in.omega.size(), nt = in.omega_tilde.size();
  check_dimension(o.N, 1 + n + nt, lim);
  doc["instance"] = instance_json(in, o);
  if (o.check == "rtt") {
    std::vector<Rational> y, z;
    for (int c : contents(in.omega_tilde)) y.push_back(Rational(-c - o.M));
    for (int c : contents(in.omega)) z.push_back(Rational(c));
    Json results{{"rho_mixed", check_RTT(rho_mixed(o.N, y, z), 3, o.seed)},
                 {"sigma_mixed", check_RTT(sigma_mixed(o.N, y, z), 3, o.seed)},
                 {"pi_N_action", check_RTT(pi_N_action(o.N, n, nt), 3, o.seed)}};
    if (!is_zero_matrix(F_OmOmt_op(in.omega, in.omega_tilde, o.N, o.M).matrix))
      results["symmetrizer_image"] = check_RTT(V_OmOmt_module(in.omega, in.omega_tilde, o.N, o.M), 3, o.seed);
    for (const auto& [k, v] : results.items()) pass = pass && v.get<bool>();
    doc["results"] = results;
  } else if (o.check == "prop14") {
    pass = verify_intertwiner_property(in.omega, in.omega_tilde, o.N, o.M);
  } else if (o.check == "thm15" || o.check == "prop16") {
    const EquivalenceCertificate c =
        o.check == "thm15"
            ? verify_module_equivalence(in.lambda, in.lambda_tilde, in.mu, in.mu_tilde, o.N, o.M, in.omega,
                                        in.omega_tilde)
            : verify_polynomial_twist(in.lambda, in.lambda_tilde, in.mu, in.mu_tilde, o.N, o.M, in.omega,
                                      in.omega_tilde);
    pass = c.pass();
    doc["certificate"] = certificate_json(c);
    if (c.solution_dim == 1) doc["witness"] = to_json(c.witness);
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown check '" + o.check + "'");
  }
  doc["pass"] = pass;
  return doc;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BoundExceeded:
      return kBoundExceeded;
    case ErrorKind::ShapeInvalid:
    case ErrorKind::InvalidInput:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::MixedFactorKinds:
    case ErrorKind::SizeMismatch:
    case ErrorKind::DenominatorZero:
    case ErrorKind::EmptyHom:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DivisionByZero:
      return kInvalidInput;
    default:
      return kVerificationFailed;
  }
}

void add_shape_options(CLI::App* app, Options& o) {
  app->add_option("--outer", o.outer, "outer partition, comma separated");
  app->add_option("--inner", o.inner, "inner partition, comma separated");
  app->add_option("--outer-tilde", o.outer_tilde, "outer partition of the dual shape");
  app->add_option("--inner-tilde", o.inner_tilde, "inner partition of the dual shape");
  app->add_option("--tableau", o.tableau, "column, row, or a JSON filling");
  app->add_option("--tableau-tilde", o.tableau_tilde, "column, row, or a JSON filling for the dual shape");
  app->add_option("-N", o.N, "dimension of the vector space");
  app->add_option("-M", o.M, "rank of the centralized group");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Young symmetrizers on mixed tensors and Yangian module checks"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "seed of the sample point sequence");
  app.add_option("--bounds", o.bounds, "tiny or default (overrides the YFUSE_BOUNDS environment variable)");
  app.add_option("--out", o.out_path, "write the JSON document to this file");

  auto* tableau = app.add_subcommand("tableau", "tableau of a skew shape and its contents");
  add_shape_options(tableau, o);
  tableau->add_flag("--column", o.column, "column tableau (default)");
  tableau->add_flag("--row", o.row, "row tableau");

  auto* fuse = app.add_subcommand("fuse", "group algebra element obtained by fusion");
  add_shape_options(fuse, o);

  auto* symm = app.add_subcommand("symmetrizer", "mixed symmetrizer matrix and its identities");
  add_shape_options(symm, o);

  auto* verify = app.add_subcommand("verify", "verify an identity at one instance");
  verify->add_option("check", o.check, "rtt, prop14, thm15, prop16 or sec44")->required();
  add_shape_options(verify, o);
  verify->add_option("--n", o.n, "exterior power degree (sec44)");
  verify->add_option("--z", o.z, "evaluation point (sec44), a rational p/q");

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", o.suite, "all, fusion, tensor or yangian")->required();

  for (auto* sub : {tableau, fuse, symm, verify, suite}) {
    sub->add_option("--seed", o.seed, "seed of the sample point sequence");
    sub->add_option("--bounds", o.bounds, "tiny or default");
    sub->add_option("--out", o.out_path, "write the JSON document to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  Json doc;
  int status = kOk;
  try {
    const SuiteBounds bounds = resolve_bounds(o);
    const CommandLimits lim = limits_for(bounds);
    bool pass = true;
    if (command == "tableau") {
      doc = cmd_tableau(o, lim);
    } else if (command == "fuse") {
      doc = cmd_fuse(o, lim);
    } else if (command == "symmetrizer") {
      doc = cmd_symmetrizer(o, lim, pass);
    } else if (command == "verify") {
      doc = cmd_verify(o, lim, pass);
    } else {
      const auto results = run_suite(o.suite, bounds, o.seed);
      doc = suite_json(o.suite, bounds, o.seed, results);
      pass = doc["pass"].get<bool>();
    }
    doc["seed"] = o.seed;
    if (!pass) status = kVerificationFailed;
  } catch (const Error& e) {
    status = exit_code_for(e.kind());
    doc = Json{{"command", command}, {"error", Json{{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    err << "error: " << e.what() << "\n";
  }

  const std::string text = doc.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return kInvalidInput;
    }
    f << text;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << "elapsed_ms: " << ms << "\n";
  return status;
}

}  // namespace yfuse::cli
