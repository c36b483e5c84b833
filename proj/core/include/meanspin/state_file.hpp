#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "meanspin/types.hpp"

namespace meanspin {

/// State files carry four [re, im] amplitude pairs in the fixed basis order
/// [(+,+), (+,-), (-,+), (-,-)] plus an optional label:
///
///   { "label": "bell", "amplitudes": [[0.7071067811865476, 0.0],
///                                     [0.0, 0.0], [0.0, 0.0],
///                                     [0.7071067811865476, 0.0]] }
///
/// A file is accepted only when the amplitude norm is within
/// kStateFileNormTolerance of 1, unless the caller opts into
/// renormalization of arbitrary (nonzero) norms.
inline constexpr double kStateFileNormTolerance = 1e-6;

struct StateFile {
  std::array<Complex, 4> amplitudes{};
  std::string label;  // empty when absent
};

/// Malformed file contents: not JSON, wrong shape, non-numeric entries.
/// The message names the offending field.
class StateFileParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid file whose amplitudes are not normalized within
/// kStateFileNormTolerance.
class StateFileNormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StateFile parse_state_file(std::istream& in);
StateFile read_state_file(const std::filesystem::path& path);

/// Build the in-memory state. Amplitudes are always renormalized exactly;
/// a norm off by more than kStateFileNormTolerance throws StateFileNormError
/// unless `renormalize` is set. When `norm_out` is non-null it receives the
/// pre-correction norm, so callers can warn about large corrections.
PureTwoQubitState to_state(const StateFile& file, bool renormalize = false,
                           double* norm_out = nullptr);

std::string serialize_state_file(const StateFile& file);
void write_state_file(const std::filesystem::path& path, const StateFile& file);

}  // namespace meanspin
