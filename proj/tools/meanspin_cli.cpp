// meanspin: entanglement entropy of two-qubit pure states from the mean
// spin vector, with a finite-shot measurement simulator.
//
// Exit codes: 0 success, 2 usage or parse failure, 3 normalization failure,
// 4 I/O failure, 5 self-test discrepancy.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "meanspin/entropy.hpp"
#include "meanspin/measurement.hpp"
#include "meanspin/qstate.hpp"
#include "meanspin/schmidt.hpp"
#include "meanspin/state_file.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNormalization = 3;
constexpr int kExitIo = 4;
constexpr int kExitSelfTest = 5;

struct Options {
  std::string state_path;
  bool as_json = false;
  bool renormalize = false;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  int atom = 1;
  int points = 101;
  std::string out_path;
  int count = 10000;
};

std::string fixed9(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << v;
  return os.str();
}

// Human-readable text goes to stdout normally, to stderr under --json so
// stdout stays pure JSON.
std::ostream& text_stream(const Options& opt) {
  return opt.as_json ? std::cerr : std::cout;
}

meanspin::PureTwoQubitState load_state(const Options& opt,
                                       meanspin::StateFile& file) {
  file = meanspin::read_state_file(opt.state_path);
  double norm = 1.0;
  auto psi = meanspin::to_state(file, opt.renormalize, &norm);
  if (std::abs(norm - 1.0) > meanspin::kStateFileNormTolerance)
    std::cerr << "warning: renormalized input state (norm was " << norm
              << ")\n";
  return psi;
}

int run_analyze(const Options& opt) {
  meanspin::StateFile file;
  const auto psi = load_state(opt, file);
  const auto report = meanspin::analyze(psi);
  const auto schmidt = meanspin::schmidt_decompose(psi);

  if (opt.as_json) {
    json doc;
    if (!file.label.empty()) doc["label"] = file.label;
    doc["magnitude_atom1"] = report.magnitude_atom1;
    doc["magnitude_atom2"] = report.magnitude_atom2;
    doc["entropy_eigen_atom1"] = report.s_eigen_atom1;
    doc["entropy_eigen_atom2"] = report.s_eigen_atom2;
    doc["entropy_from_magnitude"] = report.s_from_magnitude;
    doc["schmidt"] = {{"c1", schmidt.c1},
                      {"c2", schmidt.c2},
                      {"degenerate", schmidt.degenerate}};
    doc["entangled"] = report.entangled;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  auto& os = text_stream(opt);
  if (!file.label.empty()) os << "state: " << file.label << "\n";
  os << "Schmidt coefficients: c1 = " << fixed9(schmidt.c1)
     << ", c2 = " << fixed9(schmidt.c2)
     << (schmidt.degenerate ? " (degenerate)" : "") << "\n";
  os << "atom 1: |<J>| = " << fixed9(report.magnitude_atom1)
     << ", S(rho) = " << fixed9(report.s_eigen_atom1) << " bits\n";
  os << "atom 2: |<J>| = " << fixed9(report.magnitude_atom2)
     << ", S(rho) = " << fixed9(report.s_eigen_atom2) << " bits\n";
  os << "entropy from atom-1 magnitude: " << fixed9(report.s_from_magnitude)
     << " bits\n";
  os << "entanglement: " << (report.entangled ? "entangled" : "unentangled")
     << "\n";
  return kExitOk;
}

int run_simulate(const Options& opt) {
  meanspin::StateFile file;
  const auto psi = load_state(opt, file);
  const auto atom = opt.atom == 1 ? meanspin::Atom::One : meanspin::Atom::Two;

  const auto run = meanspin::measure_state(psi, atom, opt.shots, opt.seed);
  const auto exact_j = meanspin::mean_spin_vector(psi, atom);
  const double exact_components[3] = {exact_j.jx, exact_j.jy, exact_j.jz};
  const double exact_r = meanspin::spin_magnitude(exact_j);
  const double exact_s = meanspin::entropy_from_magnitude(exact_r);

  if (opt.as_json) {
    json doc;
    if (!file.label.empty()) doc["label"] = file.label;
    doc["atom"] = opt.atom;
    doc["shots_per_axis"] = opt.shots;
    doc["seed"] = opt.seed;
    json axes = json::array();
    for (int i = 0; i < 3; ++i) {
      const auto& c = run.counts[i];
      const auto& e = run.estimate.components[i];
      axes.push_back({{"axis", meanspin::axis_name(c.axis)},
                      {"shots", c.shots},
                      {"plus_count", c.plus_count},
                      {"component", e.value},
                      {"std_error", e.std_error},
                      {"exact_component", exact_components[i]}});
    }
    doc["axes"] = axes;
    doc["raw_magnitude"] = run.estimate.raw_magnitude;
    doc["magnitude_estimate"] = run.estimate.magnitude_estimate;
    doc["entropy_estimate"] = run.estimate.entropy_estimate;
    doc["entropy_interval"] = {run.estimate.entropy_low,
                               run.estimate.entropy_high};
    doc["exact"] = {{"magnitude", exact_r}, {"entropy", exact_s}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  auto& os = text_stream(opt);
  if (!file.label.empty()) os << "state: " << file.label << "\n";
  os << "atom " << opt.atom << ", " << opt.shots << " shots/axis, seed "
     << opt.seed << "\n";
  for (int i = 0; i < 3; ++i) {
    const auto& c = run.counts[i];
    const auto& e = run.estimate.components[i];
    os << "axis " << meanspin::axis_name(c.axis) << ": " << c.plus_count << "/"
       << c.shots << " plus, component = " << fixed9(e.value) << " +- "
       << fixed9(e.std_error) << " (exact " << fixed9(exact_components[i])
       << ")\n";
  }
  os << "magnitude: estimate " << fixed9(run.estimate.magnitude_estimate)
     << " (raw " << fixed9(run.estimate.raw_magnitude) << "), exact "
     << fixed9(exact_r) << "\n";
  os << "entropy: estimate " << fixed9(run.estimate.entropy_estimate)
     << " bits, 95% CI [" << fixed9(run.estimate.entropy_low) << ", "
     << fixed9(run.estimate.entropy_high) << "], exact " << fixed9(exact_s)
     << "\n";
  return kExitOk;
}

int run_sweep(const Options& opt) {
  std::ofstream file_out;
  std::ostream* os = &std::cout;
  if (!opt.out_path.empty()) {
    file_out.open(opt.out_path);
    if (!file_out) {
      std::cerr << "error: cannot write " << opt.out_path << "\n";
      return kExitIo;
    }
    os = &file_out;
  }
  *os << "r,entropy_bits\n";
  *os << std::setprecision(17);
  for (int i = 0; i < opt.points; ++i) {
    const double r = 0.5 * static_cast<double>(i) /
                     static_cast<double>(opt.points - 1);
    *os << r << "," << meanspin::entropy_from_magnitude(r) << "\n";
  }
  os->flush();
  if (!*os) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_random(const Options& opt) {
  double max_entropy_gap = 0.0;
  double max_magnitude_gap = 0.0;
  for (int i = 0; i < opt.count; ++i) {
    meanspin::RngStream rng(opt.seed, static_cast<std::uint64_t>(i));
    const auto psi = meanspin::haar_random_state(rng);
    for (const auto atom : {meanspin::Atom::One, meanspin::Atom::Two}) {
      const double r =
          meanspin::spin_magnitude(meanspin::mean_spin_vector(psi, atom));
      const double s_eigen =
          meanspin::entropy_eigen(meanspin::partial_trace(psi, atom));
      const double s_mag = meanspin::entropy_from_magnitude(r);
      max_entropy_gap = std::max(max_entropy_gap, std::abs(s_eigen - s_mag));
    }
    const double r1 =
        meanspin::spin_magnitude(meanspin::mean_spin_vector(psi, meanspin::Atom::One));
    const double r2 =
        meanspin::spin_magnitude(meanspin::mean_spin_vector(psi, meanspin::Atom::Two));
    max_magnitude_gap = std::max(max_magnitude_gap, std::abs(r1 - r2));
  }

  const double threshold = 1e-9;
  const bool pass = max_entropy_gap < threshold && max_magnitude_gap < threshold;

  if (opt.as_json) {
    json doc;
    doc["count"] = opt.count;
    doc["seed"] = opt.seed;
    doc["max_entropy_gap"] = max_entropy_gap;
    doc["max_magnitude_gap"] = max_magnitude_gap;
    doc["pass"] = pass;
    std::cout << doc.dump(2) << "\n";
  } else {
    auto& os = text_stream(opt);
    os << std::scientific << std::setprecision(3);
    os << "states: " << opt.count << ", seed " << opt.seed << "\n";
    os << "max |S_eigen - S_from_magnitude| = " << max_entropy_gap << "\n";
    os << "max |r_atom1 - r_atom2| = " << max_magnitude_gap << "\n";
    os << (pass ? "PASS" : "FAIL") << " (threshold " << threshold << ")\n";
  }
  return pass ? kExitOk : kExitSelfTest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entanglement entropy of two-qubit pure states from the magnitude of "
      "one atom's mean spin vector"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze =
      app.add_subcommand("analyze", "Entropy report for a state file");
  analyze->add_option("state", opt.state_path, "state file (JSON)")->required();
  analyze->add_flag("--json", opt.as_json, "machine-readable output on stdout");
  analyze->add_flag("--renormalize", opt.renormalize,
                    "accept and renormalize off-norm states");

  auto* simulate = app.add_subcommand(
      "simulate", "Estimate the entropy from simulated projective measurements");
  simulate->add_option("state", opt.state_path, "state file (JSON)")->required();
  simulate->add_option("--shots", opt.shots, "shots per axis")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--atom", opt.atom, "atom to measure (1 or 2)")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  simulate->add_flag("--json", opt.as_json, "machine-readable output on stdout");
  simulate->add_flag("--renormalize", opt.renormalize,
                     "accept and renormalize off-norm states");

  auto* sweep = app.add_subcommand(
      "sweep", "CSV of the entropy curve over magnitudes in [0, 1/2]");
  sweep->add_option("--points", opt.points, "number of rows")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  sweep->add_option("--out", opt.out_path, "output path (default stdout)");

  auto* random = app.add_subcommand(
      "random", "Cross-check both entropy routes on random states");
  random->add_option("--count", opt.count, "number of random states")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  random->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  random->add_flag("--json", opt.as_json, "machine-readable output on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (simulate->parsed()) return run_simulate(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (random->parsed()) return run_random(opt);
  } catch (const meanspin::StateFileNormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNormalization;
  } catch (const meanspin::StateFileParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
