#pragma once

namespace guesswork {

// Execution mode for the data-parallel kernels (ranking sweep, game shots).
// Serial and parallel paths compute bit-identical results; the serial path is
// the reference the tests compare against.
enum class Exec { serial, parallel };

// Validation tolerances shared across the object layer.
namespace tol {
inline constexpr double density_trace = 1e-9;
inline constexpr double density_psd = 1e-9;
inline constexpr double povm_sum = 1e-8;
inline constexpr double povm_psd = 1e-8;
inline constexpr double kraus_sum = 1e-8;
inline constexpr double unitary = 1e-9;
inline constexpr double prob_sum = 1e-9;
inline constexpr double prob_negative = 1e-12;
inline constexpr double majorize = 1e-12;
}  // namespace tol

}  // namespace guesswork
