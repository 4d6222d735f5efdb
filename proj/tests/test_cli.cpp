#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

// End-to-end checks of the installed binary: file parsing, output shape and
// the exit-code contract. The binary path arrives through SQRTX_CLI_PATH so
// the same suite runs against any build tree.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("sqrtx_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string cli_path() {
#ifdef SQRTX_CLI_PATH
  return SQRTX_CLI_PATH;
#else
  const char* p = std::getenv("SQRTX_CLI_PATH");
  REQUIRE_MESSAGE(p != nullptr, "SQRTX_CLI_PATH must point at the binary");
  return p;
#endif
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const fs::path out_file = work_dir() / "stdout.txt";
  const fs::path err_file = work_dir() / "stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + cli_path() +
                          "\" " + args + " > \"" + out_file.string() +
                          "\" 2> \"" + err_file.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

fs::path write_file(const std::string& name, const std::string& body) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << body;
  return p;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("sqrt prints the root and its residual") {
    const fs::path a = write_file("diag49.txt", "2\n4 0\n0 9\n");
    const RunResult r = run_cli("sqrt " + q(a));
    CHECK(r.exit_code == 0);
    std::istringstream out(r.out);
    std::string line;
    REQUIRE(std::getline(out, line));
    CHECK(line == "2");
    REQUIRE(std::getline(out, line));
    double m00 = 0.0, m01 = 0.0;
    std::istringstream(line) >> m00 >> m01;
    CHECK(m00 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(m01) <= 1e-14);
    REQUIRE(std::getline(out, line));
    double m10 = 0.0, m11 = 0.0;
    std::istringstream(line) >> m10 >> m11;
    CHECK(m11 == doctest::Approx(3.0).epsilon(1e-14));
    REQUIRE(std::getline(out, line));
    CHECK(line.rfind("# residual_fro ", 0) == 0);
  }

  TEST_CASE("sqrt rejects malformed and indefinite inputs") {
    SUBCASE("row shorter than the declared dimension") {
      const fs::path a = write_file("short.txt", "2\n1 0\n0\n");
      const RunResult r = run_cli("sqrt " + q(a));
      CHECK(r.exit_code == 2);
      CHECK(r.err.find("error:") != std::string::npos);
    }
    SUBCASE("missing file") {
      const RunResult r = run_cli("sqrt " + q(work_dir() / "absent.txt"));
      CHECK(r.exit_code == 2);
    }
    SUBCASE("asymmetric input") {
      const fs::path a = write_file("asym.txt", "2\n1 1\n0 1\n");
      const RunResult r = run_cli("sqrt " + q(a));
      CHECK(r.exit_code == 2);
    }
    SUBCASE("indefinite input") {
      const fs::path a = write_file("indef.txt", "2\n1 0\n0 -1\n");
      const RunResult r = run_cli("sqrt " + q(a));
      CHECK(r.exit_code == 3);
      // The diagnostic names the offending eigenvalue.
      CHECK(r.err.find("smallest eigenvalue") != std::string::npos);
      CHECK(r.err.find("-1.0") != std::string::npos);
    }
  }

  TEST_CASE("taylor reports a satisfied certificate") {
    const fs::path a = write_file("one.txt", "1\n1\n");
    const fs::path h = write_file("unit.txt", "1\n1\n");
    const RunResult r =
        run_cli("taylor " + q(a) + " " + q(h) + " --order 2");
    CHECK(r.exit_code == 0);
    const nlohmann::json rep = nlohmann::json::parse(r.out);
    CHECK(rep["dim"].get<int>() == 1);
    CHECK(rep["order"].get<int>() == 2);
    CHECK(rep["norm"].get<std::string>() == "spectral");
    CHECK(rep["gate"].get<std::string>() == "strict");
    CHECK(rep["bound_satisfied"].get<bool>());
    CHECK(rep["remainder_bound"].get<double>() ==
          doctest::Approx(0.375).epsilon(1e-12));
    CHECK(rep["actual_error"].get<double>() ==
          doctest::Approx(0.039213562373095145).epsilon(1e-9));
  }

  TEST_CASE("taylor exit codes follow the gate") {
    const fs::path a = write_file("one.txt", "1\n1\n");
    SUBCASE("losing definiteness is a gate failure") {
      const fs::path h = write_file("minus2.txt", "1\n-2\n");
      const RunResult r = run_cli("taylor " + q(a) + " " + q(h));
      CHECK(r.exit_code == 5);
      const nlohmann::json rep = nlohmann::json::parse(r.out);
      CHECK(rep["gate"].get<std::string>() == "failed");
      CHECK_FALSE(rep.contains("actual_error"));
    }
    SUBCASE("zero perturbation is certified for free") {
      const fs::path h = write_file("zero.txt", "1\n0\n");
      const RunResult r = run_cli("taylor " + q(a) + " " + q(h));
      CHECK(r.exit_code == 0);
      const nlohmann::json rep = nlohmann::json::parse(r.out);
      CHECK(rep["actual_error"].get<double>() == 0.0);
      CHECK(rep["remainder_bound"].get<double>() == 0.0);
      CHECK(rep["bound_satisfied"].get<bool>());
    }
    SUBCASE("dimension mismatch between the operands") {
      const fs::path h = write_file("eye2.txt", "2\n1 0\n0 1\n");
      const RunResult r = run_cli("taylor " + q(a) + " " + q(h));
      CHECK(r.exit_code == 2);
    }
    SUBCASE("frobenius norm is accepted") {
      const fs::path h = write_file("tenth.txt", "1\n0.1\n");
      const RunResult r = run_cli("taylor " + q(a) + " " + q(h) +
                                  " --norm frobenius");
      CHECK(r.exit_code == 0);
      const nlohmann::json rep = nlohmann::json::parse(r.out);
      CHECK(rep["norm"].get<std::string>() == "frobenius");
    }
    SUBCASE("unknown norm is a usage error") {
      const fs::path h = write_file("tenth.txt", "1\n0.1\n");
      const RunResult r =
          run_cli("taylor " + q(a) + " " + q(h) + " --norm nuclear");
      CHECK(r.exit_code == 2);
    }
  }

  TEST_CASE("frechet prints scaled derivatives") {
    const fs::path a = write_file("eye2.txt", "2\n1 0\n0 1\n");
    const fs::path h = write_file("dir2.txt", "2\n0.2 0.1\n0.1 -0.2\n");
    SUBCASE("first derivative at the identity halves the direction") {
      const RunResult r = run_cli("frechet " + q(a) + " " + q(h));
      CHECK(r.exit_code == 0);
      CHECK(r.out.find("# derivative order 1 (k! * s_k)") !=
            std::string::npos);
      CHECK(r.out.find("# sylvester_residual ") != std::string::npos);
      // Body starts after the banner: dimension line then two rows.
      std::istringstream out(r.out);
      std::string line;
      std::getline(out, line);  // banner
      std::getline(out, line);  // dim
      CHECK(line == "2");
      std::getline(out, line);
      double v0 = 0.0, v1 = 0.0;
      std::istringstream(line) >> v0 >> v1;
      CHECK(v0 == doctest::Approx(0.1).epsilon(1e-12));
      CHECK(v1 == doctest::Approx(0.05).epsilon(1e-12));
    }
    SUBCASE("higher orders print one block per order") {
      const RunResult r =
          run_cli("frechet " + q(a) + " " + q(h) + " --order 3");
      CHECK(r.exit_code == 0);
      CHECK(r.out.find("# derivative order 1") != std::string::npos);
      CHECK(r.out.find("# derivative order 2") != std::string::npos);
      CHECK(r.out.find("# derivative order 3") != std::string::npos);
    }
    SUBCASE("identity direction at the identity gives I/2 then -I/4") {
      const fs::path hi = write_file("eye2h.txt", "2\n1 0\n0 1\n");
      const RunResult r =
          run_cli("frechet " + q(a) + " " + q(hi) + " --order 2");
      CHECK(r.exit_code == 0);
      std::istringstream out(r.out);
      std::string line;
      double v = 0.0;
      std::getline(out, line);  // order-1 banner
      std::getline(out, line);  // dim
      std::getline(out, line);  // first row of 1! * s_1 = H/2
      std::istringstream(line) >> v;
      CHECK(v == doctest::Approx(0.5).epsilon(1e-13));
      std::getline(out, line);  // second row
      std::getline(out, line);  // order-2 banner
      CHECK(line.rfind("# derivative order 2", 0) == 0);
      std::getline(out, line);  // dim
      std::getline(out, line);  // first row of 2! * s_2 = -I/4
      std::istringstream(line) >> v;
      CHECK(v == doctest::Approx(-0.25).epsilon(1e-13));
    }
    SUBCASE("order above the supported cap is a usage error") {
      const RunResult r =
          run_cli("frechet " + q(a) + " " + q(h) + " --order 31");
      CHECK(r.exit_code == 2);
    }
    SUBCASE("order zero is a usage error") {
      const RunResult r =
          run_cli("frechet " + q(a) + " " + q(h) + " --order 0");
      CHECK(r.exit_code == 2);
    }
  }

  TEST_CASE("verify is deterministic and honours its knobs") {
    const std::string base = "verify --cases 6 --dim-max 5 --seed 42";
    SUBCASE("same seed twice gives byte-identical output") {
      const RunResult r1 = run_cli(base);
      const RunResult r2 = run_cli(base);
      CHECK(r1.exit_code == 0);
      CHECK(r2.exit_code == 0);
      CHECK(r1.out == r2.out);
      CHECK(!r1.out.empty());
      const nlohmann::json summary = nlohmann::json::parse(r1.out);
      CHECK(summary["cases"].get<int>() == 6);
      CHECK(summary["failures"].get<int>() == 0);
      CHECK(summary["seed"].get<int>() == 42);
    }
    SUBCASE("deflated bounds surface as counted failures") {
      const RunResult r = run_cli(base + " --bound-scale 0.01");
      CHECK(r.exit_code == 1);
      const nlohmann::json summary = nlohmann::json::parse(r.out);
      CHECK(summary["failures"].get<int>() > 0);
    }
    SUBCASE("quadrature node floor is enforced") {
      const RunResult r = run_cli(base + " --quad-nodes 4");
      CHECK(r.exit_code == 2);
    }
    SUBCASE("quadrature nodes come from the environment too") {
      const RunResult r = run_cli(base, "SQRTX_QUAD_NODES=4");
      CHECK(r.exit_code == 2);
    }
    SUBCASE("rho is range-checked at parse time") {
      const RunResult r = run_cli("verify --cases 2 --rho 1.5");
      CHECK(r.exit_code == 2);
    }
    SUBCASE("zero cases is an empty clean run") {
      const RunResult r = run_cli("verify --cases 0");
      CHECK(r.exit_code == 0);
      const nlohmann::json summary = nlohmann::json::parse(r.out);
      CHECK(summary["cases"].get<int>() == 0);
      CHECK(summary["failures"].get<int>() == 0);
    }
  }

  TEST_CASE("kernel selection override") {
    const fs::path a = write_file("four.txt", "1\n4\n");
    SUBCASE("forced scalar kernels work everywhere") {
      const RunResult r = run_cli("sqrt " + q(a), "SQRTX_KERNELS=scalar");
      CHECK(r.exit_code == 0);
      CHECK(r.out.find("2") != std::string::npos);
    }
    SUBCASE("auto matches the default") {
      const RunResult plain = run_cli("sqrt " + q(a));
      const RunResult forced = run_cli("sqrt " + q(a), "SQRTX_KERNELS=auto");
      CHECK(forced.exit_code == 0);
      CHECK(forced.out == plain.out);
    }
    SUBCASE("unknown kernel name is a usage error") {
      const RunResult r = run_cli("sqrt " + q(a), "SQRTX_KERNELS=bogus");
      CHECK(r.exit_code == 2);
      CHECK(r.err.find("SQRTX_KERNELS") != std::string::npos);
    }
  }

  TEST_CASE("usage surface") {
    SUBCASE("no subcommand") {
      const RunResult r = run_cli("");
      CHECK(r.exit_code == 2);
    }
    SUBCASE("unknown subcommand") {
      const RunResult r = run_cli("cube");
      CHECK(r.exit_code == 2);
    }
    SUBCASE("help exits cleanly") {
      const RunResult r = run_cli("--help");
      CHECK(r.exit_code == 0);
      CHECK(r.out.find("sqrt") != std::string::npos);
      CHECK(r.out.find("verify") != std::string::npos);
    }
    SUBCASE("sqrt without a file argument") {
      const RunResult r = run_cli("sqrt");
      CHECK(r.exit_code == 2);
    }
  }
}
