// Acceptance suite: every release-gating property at its pinned tolerance,
// one pass/fail line each. Exits nonzero when anything fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <sys/wait.h>

#include "meanspin/entropy.hpp"
#include "meanspin/measurement.hpp"
#include "meanspin/qstate.hpp"
#include "meanspin/schmidt.hpp"
#include "meanspin/state_file.hpp"

#ifndef MEANSPIN_CLI_PATH
#error "MEANSPIN_CLI_PATH must point at the built binary"
#endif

using namespace meanspin;
namespace fs = std::filesystem;

namespace {

constexpr int kStateSamples = 10000;
constexpr double kEntropy75 = 0.81127812445913283;

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::printf("[%s] %d %-22s %s (%.2f s)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

void run_criterion(int index, const std::string& name,
                   const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(index, name, pass, detail, seconds);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::scientific;
  os.precision(2);
  os << v;
  return os.str();
}

PureTwoQubitState bell_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return make_state({Complex(s, 0), {}, {}, Complex(s, 0)});
}

PureTwoQubitState weighted_state() {
  return make_state(
      {Complex(std::sqrt(0.75), 0), {}, {}, Complex(std::sqrt(0.25), 0)});
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path =
      fs::temp_directory_path() / ("meanspin_acc_" + std::to_string(counter++));
  const std::string cmd = std::string(MEANSPIN_CLI_PATH) + " " + args + " >" +
                          out_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  fs::remove(out_path);
  return r;
}

}  // namespace

int main() {
  run_criterion(1, "oracle-equivalence", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int i = 0; i < kStateSamples; ++i) {
      RngStream rng(0xACC0, static_cast<std::uint64_t>(i));
      const auto psi = haar_random_state(rng);
      for (Atom atom : {Atom::One, Atom::Two}) {
        const double s_eig = entropy_eigen(partial_trace(psi, atom));
        const double s_mag = entropy_from_magnitude(
            spin_magnitude(mean_spin_vector(psi, atom)));
        worst = std::max(worst, std::abs(s_eig - s_mag));
      }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return std::make_pair(worst <= 1e-9 && elapsed < 5.0,
                          "max |S_eigen - S_mag| = " + fmt(worst) +
                              " (limit 1e-09, n=10^4, both atoms, <5s)");
  });

  run_criterion(2, "atom-symmetry", [] {
    double worst = 0.0;
    for (int i = 0; i < kStateSamples; ++i) {
      RngStream rng(0xACC0, static_cast<std::uint64_t>(i));
      const auto psi = haar_random_state(rng);
      const double r1 = spin_magnitude(mean_spin_vector(psi, Atom::One));
      const double r2 = spin_magnitude(mean_spin_vector(psi, Atom::Two));
      worst = std::max(worst, std::abs(r1 - r2));
    }
    return std::make_pair(worst <= 1e-12, "max |r1 - r2| = " + fmt(worst) +
                                              " (limit 1e-12)");
  });

  run_criterion(3, "schmidt-consistency", [] {
    double worst_rel = 0.0;
    double worst_fid = 1.0;
    for (int i = 0; i < kStateSamples; ++i) {
      RngStream rng(0xACC1, static_cast<std::uint64_t>(i));
      const auto psi = haar_random_state(rng);
      const auto d = schmidt_decompose(psi);
      const double r = spin_magnitude(mean_spin_vector(psi, Atom::One));
      worst_rel = std::max(
          worst_rel, std::abs(0.5 * (d.c1 * d.c1 - d.c2 * d.c2) - r));
      worst_fid = std::min(worst_fid, fidelity(psi, reconstruct(d)));
    }
    const bool pass = worst_rel <= 1e-11 && worst_fid >= 1.0 - 1e-12;
    return std::make_pair(pass, "max |(c1^2-c2^2)/2 - r| = " + fmt(worst_rel) +
                                    ", min fidelity = 1 - " +
                                    fmt(1.0 - worst_fid));
  });

  run_criterion(4, "operator-algebra", [] {
    const Mat2 jx = spin_operator(Axis::X).matrix;
    const Mat2 jy = spin_operator(Axis::Y).matrix;
    const Mat2 jz = spin_operator(Axis::Z).matrix;
    const Complex i(0, 1);
    double worst_comm = 0.0;
    worst_comm = std::max(worst_comm, max_abs_diff(commutator(jx, jy), i * jz));
    worst_comm = std::max(worst_comm, max_abs_diff(commutator(jy, jz), i * jx));
    worst_comm = std::max(worst_comm, max_abs_diff(commutator(jz, jx), i * jy));

    double worst_op = 0.0;
    for (const Mat2& j : {jx, jy, jz}) {
      worst_op = std::max(worst_op, max_abs_diff(j, j.adjoint()));
      worst_op = std::max(worst_op, std::abs(j.trace()));
      const double tr = j.trace().real();
      const double det = j.det().real();
      const double w = std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
      worst_op = std::max(worst_op, std::abs(0.5 * tr + w - 0.5));
      worst_op = std::max(worst_op, std::abs(0.5 * tr - w + 0.5));
    }
    const bool pass = worst_comm <= 1e-15 && worst_op <= 1e-12;
    return std::make_pair(pass, "max commutator gap = " + fmt(worst_comm) +
                                    ", max operator gap = " + fmt(worst_op));
  });

  run_criterion(5, "named-points", [] {
    double worst = 0.0;
    {
      const auto rep = analyze(bell_state());
      worst = std::max(worst, std::abs(rep.s_eigen_atom1 - 1.0));
      worst = std::max(worst, std::abs(rep.s_from_magnitude - 1.0));
      worst = std::max(worst, rep.magnitude_atom1);
    }
    // Product states: the four basis products plus random separable states.
    std::vector<PureTwoQubitState> products;
    for (int k = 0; k < 4; ++k) {
      std::array<Complex, 4> amps{};
      amps[k] = Complex(1, 0);
      products.push_back(make_state(amps));
    }
    for (int i = 0; i < 20; ++i) {
      RngStream rng(0xACC2, static_cast<std::uint64_t>(i));
      const auto a = haar_random_state(rng);
      const auto b = haar_random_state(rng);
      products.push_back(tensor_product_state(
          make_single_qubit_state(a.amps[0], a.amps[1], true),
          make_single_qubit_state(b.amps[2], b.amps[3], true)));
    }
    for (const auto& psi : products) {
      const auto rep = analyze(psi);
      worst = std::max(worst, rep.s_eigen_atom1);
      worst = std::max(worst, rep.s_from_magnitude);
      worst = std::max(worst, std::abs(rep.magnitude_atom1 - 0.5));
    }
    {
      const auto rep = analyze(weighted_state());
      worst = std::max(worst, std::abs(rep.s_eigen_atom1 - kEntropy75));
      worst = std::max(worst,
                       std::abs(rep.s_from_magnitude - rep.s_eigen_atom1));
      worst = std::max(worst, std::abs(rep.magnitude_atom1 - 0.25));
    }
    return std::make_pair(worst <= 1e-12,
                          "max named-point gap = " + fmt(worst) +
                              " (limit 1e-12)");
  });

  run_criterion(6, "estimator-convergence", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto psi = weighted_state();
    const std::uint64_t shot_grid[3] = {1000, 10000, 100000};
    double scaled[3] = {};
    for (int g = 0; g < 3; ++g) {
      double sq_sum = 0.0;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto run = measure_state(psi, Atom::One, shot_grid[g], seed);
        const double err = run.estimate.magnitude_estimate - 0.25;
        sq_sum += err * err;
      }
      const double rmse = std::sqrt(sq_sum / 200.0);
      scaled[g] = rmse * std::sqrt(static_cast<double>(shot_grid[g]));
    }
    const double lo = std::min({scaled[0], scaled[1], scaled[2]});
    const double hi = std::max({scaled[0], scaled[1], scaled[2]});
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return std::make_pair(hi / lo <= 1.5 && elapsed < 30.0,
                          "RMSE*sqrt(N) spread = " + fmt(hi / lo) +
                              "x (limit 1.5x; N = 1e3, 1e4, 1e5, <30s)");
  });

  run_criterion(7, "interval-coverage", [] {
    const auto psi = weighted_state();
    const double truth = entropy_from_magnitude(0.25);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const auto run = measure_state(psi, Atom::One, 10000, seed);
      if (run.estimate.entropy_low <= truth && truth <= run.estimate.entropy_high)
        ++covered;
    }
    const double rate = covered / 500.0;
    return std::make_pair(rate >= 0.90,
                          "95% interval covered " + std::to_string(covered) +
                              "/500 = " + fmt(rate) + " (limit 0.90)");
  });

  run_criterion(8, "cli-contract", [] {
    const auto self_test = run_cli("random --count 10000 --seed 11");
    if (self_test.exit_code != 0)
      return std::make_pair(false, "random --count 10000 exited " +
                                       std::to_string(self_test.exit_code));

    // State file -> analyze --json -> reparse must reproduce the library's
    // own numbers.
    const fs::path state_path =
        fs::temp_directory_path() / "meanspin_acceptance_state.json";
    StateFile file;
    file.label = "acceptance";
    file.amplitudes = {Complex(std::sqrt(0.75), 0), {}, {},
                       Complex(std::sqrt(0.25), 0)};
    write_state_file(state_path, file);
    const auto analyzed = run_cli("analyze --json " + state_path.string());
    if (analyzed.exit_code != 0)
      return std::make_pair(false, "analyze --json exited " +
                                       std::to_string(analyzed.exit_code));
    const auto doc = nlohmann::json::parse(analyzed.out);
    const auto rep = analyze(to_state(file));
    double worst = 0.0;
    worst = std::max(worst, std::abs(doc["entropy_eigen_atom1"].get<double>() -
                                     rep.s_eigen_atom1));
    worst = std::max(worst, std::abs(doc["entropy_from_magnitude"].get<double>() -
                                     rep.s_from_magnitude));
    worst = std::max(worst, std::abs(doc["magnitude_atom1"].get<double>() -
                                     rep.magnitude_atom1));
    worst = std::max(worst, std::abs(doc["magnitude_atom2"].get<double>() -
                                     rep.magnitude_atom2));
    fs::remove(state_path);
    if (worst > 1e-12)
      return std::make_pair(false, "JSON roundtrip gap " + fmt(worst));

    const fs::path bell_path =
        fs::temp_directory_path() / "meanspin_acceptance_bell.json";
    StateFile bell;
    bell.amplitudes = {Complex(1 / std::sqrt(2.0), 0), {}, {},
                       Complex(1 / std::sqrt(2.0), 0)};
    write_state_file(bell_path, bell);
    const std::string sim_args =
        "simulate " + bell_path.string() + " --shots 20000 --seed 123";
    const auto sim1 = run_cli(sim_args);
    const auto sim2 = run_cli(sim_args);
    fs::remove(bell_path);
    if (sim1.exit_code != 0 || sim1.out != sim2.out)
      return std::make_pair(false,
                            std::string("simulate output not byte-identical"));

    return std::make_pair(true,
                          "self-test exit 0, JSON roundtrip gap " + fmt(worst) +
                              ", simulate byte-identical");
  });

  std::printf("%d/8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
