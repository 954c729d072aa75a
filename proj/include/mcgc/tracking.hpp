#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcgc/grid2d.hpp"
#include "mcgc/sequence.hpp"

namespace mcgc {

enum class Trajectory { uniform, walk };

struct SimConfig {
  std::size_t cells = 6;  // basic cells per side
  std::size_t m = 2;      // square detection block side
  std::size_t slots = 1000;
  std::size_t bits = 8;   // per-report budget
  std::uint64_t seed = 1;
  Trajectory trajectory = Trajectory::uniform;
  double move_probability = 0.5;  // walk only

  void validate() const;
};

/// Accepts "uniform" or "walk:P" with 0 <= P <= 1.
void parse_trajectory(const std::string& text, SimConfig& config);
std::string trajectory_string(const SimConfig& config);

/// Flat key=value lines (cells, m, slots, bits, seed, traj); '#' comments.
SimConfig parse_config(std::istream& is);

/// Linear m-distinguishable sequence of exactly `length` on [k] from the
/// constructions, or from a bounded search when none fits.
struct AxisSequence {
  ColorSequence sequence;
  std::string origin;
};
std::optional<AxisSequence> linear_axis(std::size_t m, std::size_t k,
                                        std::size_t length);

struct Deployment {
  SimConfig config;
  AxisSequence axis;
  std::size_t bound_axis_colors = 0;  // min_colors_1d for the axis length
  ColorGrid2D grid;
  Codebook codebook;

  std::size_t side() const noexcept { return grid.rows(); }
  std::size_t colors() const noexcept { return grid.palette_size(); }
};

/// Sensor field of side cells+m-1 colored by the product of one axis
/// sequence with itself; cell (x, y) owns the block tagged (x, y).
Deployment deploy(const SimConfig& config);

struct SlotRecord {
  std::size_t slot = 0;
  Point cell;
  std::vector<Point> sensors;
  std::vector<Color> reported;  // arrival order
  Point decoded;
};

struct SimReport {
  SimConfig config;
  std::size_t side = 0;
  std::size_t axis_colors = 0;
  std::size_t bound_axis_colors = 0;
  std::size_t colors = 0;
  std::string axis_origin;
  std::size_t codebook_size = 0;
  std::size_t baseline_bits = 0;     // ceil(log2 C^2)
  std::size_t mcgc_channel_bits = 0; // ceil(log2 k)
  bool baseline_feasible = false;
  bool mcgc_feasible = false;
  std::optional<double> measured_gain;  // log2 k / log2 C^2
  std::optional<double> bound_gain;     // from min_colors_1d
  std::optional<double> wire_gain;      // ratio of the two bit counts
  std::size_t correct = 0;
  std::size_t permutation_checks = 0;
  double accuracy = 0.0;
};

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

/// Runs every slot, writing one JSON object per slot to `records` when
/// given. Throws Error on any decode mismatch.
SimReport run(const SimConfig& config, std::ostream* records = nullptr);
SimReport run(const Deployment& deployment, std::ostream* records = nullptr);

std::string slot_record_json(const SlotRecord& record,
                             const SimReport& report);
std::string report_json(const SimReport& report, int indent = 2);

}  // namespace mcgc
