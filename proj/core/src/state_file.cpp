#include "meanspin/state_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "meanspin/qstate.hpp"

namespace meanspin {

StateFile parse_state_file(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw StateFileParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw StateFileParseError("top level must be a JSON object");
  if (!doc.contains("amplitudes"))
    throw StateFileParseError("missing field \"amplitudes\"");
  const auto& amps = doc["amplitudes"];
  if (!amps.is_array() || amps.size() != 4)
    throw StateFileParseError(
        "field \"amplitudes\" must be an array of exactly 4 [re, im] pairs");

  StateFile file;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& pair = amps[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw StateFileParseError("field \"amplitudes[" + std::to_string(k) +
                                "]\" must be a [re, im] pair of numbers");
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw StateFileParseError("field \"amplitudes[" + std::to_string(k) +
                                "]\" must be finite");
    file.amplitudes[k] = Complex(re, im);
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw StateFileParseError("field \"label\" must be a string");
    file.label = doc["label"].get<std::string>();
  }
  return file;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw StateFileParseError("cannot open state file: " + path.string());
  return parse_state_file(in);
}

PureTwoQubitState to_state(const StateFile& file, bool renormalize,
                           double* norm_out) {
  double norm_sq = 0.0;
  for (const auto& a : file.amplitudes) norm_sq += std::norm(a);
  const double norm = std::sqrt(norm_sq);
  if (norm_out) *norm_out = norm;
  if (std::abs(norm - 1.0) > kStateFileNormTolerance && !renormalize)
    throw StateFileNormError("amplitude norm " + std::to_string(norm) +
                             " is not 1 within tolerance; pass --renormalize "
                             "to accept");
  if (norm < kZeroNormFloor)
    throw StateFileNormError("amplitude norm is (near) zero");
  return make_state(file.amplitudes, /*auto_renormalize=*/true);
}

std::string serialize_state_file(const StateFile& file) {
  nlohmann::json doc;
  if (!file.label.empty()) doc["label"] = file.label;
  auto& amps = doc["amplitudes"];
  for (const auto& a : file.amplitudes)
    amps.push_back({a.real(), a.imag()});
  return doc.dump(2) + "\n";
}

void write_state_file(const std::filesystem::path& path, const StateFile& file) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write state file: " + path.string());
  out << serialize_state_file(file);
}

}  // namespace meanspin
