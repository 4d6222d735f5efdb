// Command-line front-end: principal square roots, directional derivatives,
// certified Taylor approximations and batch verification over plain-text
// matrix files.
//
// Exit codes: 0 success; 1 verification failures; 2 usage, parse or
// validation error; 3 input not positive definite; 4 Taylor bound not
// satisfied; 5 perturbation gate rejected the pair.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sqrtx/errors.hpp"
#include "sqrtx/json_writer.hpp"
#include "sqrtx/matrix_io.hpp"
#include "sqrtx/sqrt_frechet.hpp"
#include "sqrtx/taylor.hpp"
#include "sqrtx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotSpd = 3;
constexpr int kExitBoundViolated = 4;
constexpr int kExitGateFailed = 5;

sqrtx::SymMatrix load_sym(const std::string& path) {
  return sqrtx::symmetrize(sqrtx::read_matrix_file(path));
}

sqrtx::NormKind parse_norm(const std::string& name) {
  if (name == "spectral") return sqrtx::NormKind::spectral;
  if (name == "frobenius") return sqrtx::NormKind::frobenius;
  throw sqrtx::ParseError("unknown norm '" + name +
                          "' (expected spectral or frobenius)");
}

void require_same_dim(const sqrtx::SymMatrix& a, const sqrtx::SymMatrix& h) {
  if (a.dim() != h.dim()) {
    throw sqrtx::ParseError(
        "matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
        std::to_string(h.dim()));
  }
}

int cmd_sqrt(const std::string& a_path) {
  const sqrtx::SymMatrix a_sym = load_sym(a_path);
  const sqrtx::SpdMatrix a = sqrtx::assert_spd(a_sym);
  const sqrtx::SpdMatrix root = sqrtx::principal_sqrt(a);

  const sqrtx::Matrix squared = root.mat() * root.mat();
  const double residual = frobenius_norm(squared - a.mat());

  sqrtx::write_matrix(std::cout, root.sym());
  std::cout << "# residual_fro " << sqrtx::JsonWriter::format_double(residual)
            << "\n";
  return kExitOk;
}

int cmd_frechet(const std::string& a_path, const std::string& h_path,
                int order) {
  const sqrtx::SymMatrix a_sym = load_sym(a_path);
  const sqrtx::SymMatrix h = load_sym(h_path);
  require_same_dim(a_sym, h);
  const sqrtx::SpdMatrix a = sqrtx::assert_spd(a_sym);

  const sqrtx::DerivativeStack stack = sqrtx::derivative_stack(a, h, order);
  double factorial = 1.0;
  for (int k = 1; k <= order; ++k) {
    factorial *= k;
    std::cout << "# derivative order " << k << " (k! * s_k)\n";
    sqrtx::write_matrix(std::cout, factorial * stack.s(k));
  }
  std::cout << "# sylvester_residual "
            << sqrtx::JsonWriter::format_double(stack.sylvester_residual)
            << "\n";
  return kExitOk;
}

int cmd_taylor(const std::string& a_path, const std::string& h_path, int order,
               const std::string& norm_name) {
  const sqrtx::SymMatrix a = load_sym(a_path);
  const sqrtx::SymMatrix h = load_sym(h_path);
  require_same_dim(a, h);
  const sqrtx::NormKind kind = parse_norm(norm_name);

  const sqrtx::TaylorReport rep = sqrtx::report(a, h, order, kind);
  std::cout << sqrtx::to_json(rep) << "\n";
  if (rep.gate != sqrtx::GateVerdict::strict) return kExitGateFailed;
  return *rep.bound_satisfied ? kExitOk : kExitBoundViolated;
}

int cmd_verify(const sqrtx::RunConfig& config) {
  const sqrtx::VerifySummary summary = sqrtx::run_verify(config);
  std::cout << sqrtx::to_json(summary) << "\n";
  return summary.failures == 0 ? kExitOk : kExitVerifyFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Principal square roots of SPD matrices, directional derivatives and "
      "certified Taylor approximations"};
  app.require_subcommand(1);

  std::string a_path;
  std::string h_path;
  int order = 1;
  std::string norm_name = "spectral";

  CLI::App* sqrt_cmd =
      app.add_subcommand("sqrt", "Principal square root of an SPD matrix");
  sqrt_cmd->add_option("A", a_path, "matrix file")->required();

  CLI::App* frechet_cmd = app.add_subcommand(
      "frechet", "Directional derivatives k = 1..n of the square root");
  frechet_cmd->add_option("A", a_path, "SPD matrix file")->required();
  frechet_cmd->add_option("H", h_path, "direction matrix file")->required();
  frechet_cmd->add_option("--order", order, "highest derivative order")
      ->default_val(1)
      ->check(CLI::Range(1, sqrtx::kMaxDerivativeOrder));

  CLI::App* taylor_cmd = app.add_subcommand(
      "taylor", "Certified Taylor approximation of sqrt(A + H)");
  taylor_cmd->add_option("A", a_path, "SPD matrix file")->required();
  taylor_cmd->add_option("H", h_path, "perturbation matrix file")->required();
  taylor_cmd->add_option("--order", order, "partial-sum order")
      ->default_val(2)
      ->check(CLI::Range(0, sqrtx::kMaxDerivativeOrder));
  taylor_cmd->add_option("--norm", norm_name, "error norm")
      ->default_val("spectral")
      ->check(CLI::IsMember({"spectral", "frobenius"}));

  sqrtx::RunConfig config;
  int quad_nodes = config.quad.node_count;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Randomized verification suite with JSON summary");
  verify_cmd->add_option("--cases", config.cases, "number of random cases")
      ->default_val(config.cases);
  verify_cmd->add_option("--dim-max", config.dim_max, "largest dimension")
      ->default_val(config.dim_max)
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--rho", config.rho,
                   "perturbation size as a fraction of lambda_min")
      ->default_val(config.rho)
      ->check(CLI::Range(1e-6, 0.999999));
  verify_cmd->add_option("--seed", config.seed, "random seed")
      ->default_val(config.seed);
  verify_cmd
      ->add_option("--max-order", config.max_order,
                   "highest Taylor order checked")
      ->default_val(config.max_order)
      ->check(CLI::Range(0, sqrtx::kMaxDerivativeOrder - 1));
  verify_cmd
      ->add_option("--lambda-lo", config.lambda_lo,
                   "smallest generated eigenvalue")
      ->default_val(config.lambda_lo)
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--lambda-hi", config.lambda_hi,
                   "largest generated eigenvalue")
      ->default_val(config.lambda_hi)
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--quad-nodes", quad_nodes,
                   "Gauss-Legendre nodes per quadrature panel")
      ->default_val(quad_nodes)
      ->envname("SQRTX_QUAD_NODES");
  // Internal handle for harness self-tests: scaling the bounds down must
  // produce counted failures, proving violations are not silently dropped.
  verify_cmd
      ->add_option("--bound-scale", config.bound_scale,
                   "multiply remainder bounds (self-test hook)")
      ->default_val(config.bound_scale)
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sqrt_cmd->parsed()) return cmd_sqrt(a_path);
    if (frechet_cmd->parsed()) return cmd_frechet(a_path, h_path, order);
    if (taylor_cmd->parsed()) {
      return cmd_taylor(a_path, h_path, order, norm_name);
    }
    config.quad.node_count = quad_nodes;
    return cmd_verify(config);
  } catch (const sqrtx::NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSpd;
  } catch (const sqrtx::GateFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGateFailed;
  } catch (const std::exception& e) {
    // Parse errors, asymmetric inputs, order-range and validation problems
    // all land here: operator error rather than a numerical verdict.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
