#include "mcgc/tracking.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "mcgc/bounds.hpp"
#include "mcgc/constructions.hpp"
#include "mcgc/io.hpp"
#include "mcgc/random.hpp"

namespace mcgc {

namespace {

constexpr std::size_t kSearchBudget = 5'000'000;

std::size_t parse_size(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("config '" + key + "' must be a non-negative integer, got '" +
                value + "'");
  }
  return std::stoull(value);
}

}  // namespace

void SimConfig::validate() const {
  if (m < 1) throw Error("m must be >= 1");
  if (cells < m) throw Error("cells must be >= m");
  if (slots < 1) throw Error("slots must be >= 1");
  if (bits < 1) throw Error("bits must be >= 1");
  if (!(move_probability >= 0.0 && move_probability <= 1.0)) {
    throw Error("walk probability must lie in [0, 1]");
  }
}

void parse_trajectory(const std::string& text, SimConfig& config) {
  if (text == "uniform") {
    config.trajectory = Trajectory::uniform;
    return;
  }
  if (text.rfind("walk:", 0) == 0) {
    const auto p = text.substr(5);
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != p.size() || !(value >= 0.0 && value <= 1.0)) {
      throw Error("walk probability must be a number in [0, 1], got '" + p + "'");
    }
    config.trajectory = Trajectory::walk;
    config.move_probability = value;
    return;
  }
  throw Error("unknown trajectory '" + text + "' (expected uniform or walk:P)");
}

std::string trajectory_string(const SimConfig& config) {
  if (config.trajectory == Trajectory::uniform) return "uniform";
  std::ostringstream out;
  out << "walk:" << config.move_probability;
  return out.str();
}

SimConfig parse_config(std::istream& is) {
  SimConfig config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(lineno) + ": expected key=value");
    }
    auto key = line.substr(0, eq);
    auto value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "cells") config.cells = parse_size(key, value);
    else if (key == "m") config.m = parse_size(key, value);
    else if (key == "slots") config.slots = parse_size(key, value);
    else if (key == "bits") config.bits = parse_size(key, value);
    else if (key == "seed") config.seed = parse_size(key, value);
    else if (key == "traj") parse_trajectory(value, config);
    else throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  config.validate();
  return config;
}

std::optional<AxisSequence> linear_axis(std::size_t m, std::size_t k,
                                        std::size_t length) {
  std::optional<AxisSequence> found;
  auto offer = [&](const ColorSequence& seq, std::string origin) {
    if (found || seq.size() < length) return;
    std::vector<Color> head(seq.colors().begin(),
                            seq.colors().begin() + static_cast<long>(length));
    found = AxisSequence{ColorSequence(std::move(head), k, Mode::linear),
                         std::move(origin)};
  };
  auto padded = [&](auto build, std::size_t base_k, const std::string& name) {
    const auto seq = pad_with_new_colors(build(base_k), m, k - base_k);
    offer(seq, name + "(" + std::to_string(base_k) + ") cut" +
                   (k > base_k ? " + " + std::to_string(k - base_k) + " padded colors"
                               : std::string()));
  };

  if (m == 1) offer(build_m1(k).with_mode(Mode::linear), "distinct colors");
  offer(block_sequence(k, m), "block sequence");
  if (m == 2) {
    for (std::size_t base = k; base >= 3 && !found; --base) {
      padded(build_m2, base, "build_m2");
    }
  }
  if (m == 3) {
    for (std::size_t base = k - k % 3; base >= 3 && !found; base -= 3) {
      padded(build_m3, base, "build_m3");
    }
  }
  for (const auto& w : search_witnesses()) {
    if (w.m == m && w.k == k) {
      offer(ColorSequence(parse_digits(w.digits), k, Mode::linear), "search witness");
    }
  }
  if (!found && length <= multichoose(k, m) + m - 1) {
    if (auto seq = search_linear(m, k, length, kSearchBudget)) {
      offer(*seq, "search");
    }
  }
  if (found && !check_distinguishable(found->sequence, m).ok) {
    throw Error("internal validation failure: axis sequence");
  }
  return found;
}

Deployment deploy(const SimConfig& config) {
  config.validate();
  const auto side = config.cells + config.m - 1;
  const auto bound_k = min_colors_1d(side, config.m);
  std::optional<AxisSequence> axis;
  for (std::size_t k = bound_k; !axis; ++k) axis = linear_axis(config.m, k, side);
  auto grid = product_grid(axis->sequence, axis->sequence, GridMode::plain);
  auto codebook = build_codebook(grid, config.m, config.m);
  if (codebook.size() != config.cells * config.cells) {
    throw Error("internal validation failure: codebook size");
  }
  return Deployment{config, std::move(*axis), bound_k, std::move(grid),
                    std::move(codebook)};
}

std::size_t ceil_log2(std::size_t n) {
  if (n == 0) throw Error("ceil_log2 of zero");
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

namespace {

SimReport make_report(const Deployment& d) {
  const auto& c = d.config;
  SimReport r;
  r.config = c;
  r.side = d.side();
  r.axis_colors = d.axis.sequence.palette_size();
  r.bound_axis_colors = d.bound_axis_colors;
  r.colors = d.colors();
  r.axis_origin = d.axis.origin;
  r.codebook_size = d.codebook.size();
  const auto cells2 = c.cells * c.cells;
  r.baseline_bits = ceil_log2(cells2);
  r.mcgc_channel_bits = ceil_log2(r.colors);
  r.baseline_feasible = r.baseline_bits <= c.bits;
  r.mcgc_feasible = r.mcgc_channel_bits <= c.bits;
  if (cells2 > 1) {
    const double denom = std::log2(static_cast<double>(cells2));
    r.measured_gain = std::log2(static_cast<double>(r.colors)) / denom;
    r.bound_gain = 2.0 * std::log2(static_cast<double>(r.bound_axis_colors)) / denom;
    r.wire_gain = static_cast<double>(r.mcgc_channel_bits) /
                  static_cast<double>(r.baseline_bits);
  }
  return r;
}

Point next_cell(const SimConfig& c, const Point& current, Rng& rng, bool first) {
  if (first || c.trajectory == Trajectory::uniform) {
    return {rng.below(c.cells), rng.below(c.cells)};
  }
  if (!rng.chance(c.move_probability)) return current;
  std::vector<Point> options;
  if (current.x > 0) options.push_back({current.x - 1, current.y});
  if (current.x + 1 < c.cells) options.push_back({current.x + 1, current.y});
  if (current.y > 0) options.push_back({current.x, current.y - 1});
  if (current.y + 1 < c.cells) options.push_back({current.x, current.y + 1});
  if (options.empty()) return current;
  return options[rng.below(options.size())];
}

std::string point_text(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

SimReport run(const SimConfig& config, std::ostream* records) {
  return run(deploy(config), records);
}

SimReport run(const Deployment& d, std::ostream* records) {
  const auto& c = d.config;
  SimReport report = make_report(d);
  Rng rng(c.seed);
  Point cell;
  for (std::size_t slot = 0; slot < c.slots; ++slot) {
    cell = next_cell(c, cell, rng, slot == 0);
    SlotRecord rec;
    rec.slot = slot;
    rec.cell = cell;
    for (std::size_t i = 0; i < c.m; ++i) {
      for (std::size_t j = 0; j < c.m; ++j) {
        rec.sensors.push_back({cell.x + i, cell.y + j});
        rec.reported.push_back(d.grid.at(cell.x + i, cell.y + j));
      }
    }
    rng.shuffle(std::span<Color>(rec.reported));
    rec.decoded = decode(d.codebook, std::span<const Color>(rec.reported));
    if (rec.decoded != cell) {
      throw Error("decode mismatch at slot " + std::to_string(slot) + ": " +
                  point_text(cell) + " decoded as " + point_text(rec.decoded));
    }
    auto again = rec.reported;
    rng.shuffle(std::span<Color>(again));
    if (decode(d.codebook, std::span<const Color>(again)) != rec.decoded) {
      throw Error("decode depends on report order at slot " + std::to_string(slot));
    }
    ++report.permutation_checks;
    ++report.correct;
    if (records) *records << slot_record_json(rec, report) << '\n';
  }
  report.accuracy = static_cast<double>(report.correct) /
                    static_cast<double>(c.slots);
  return report;
}

namespace {

nlohmann::json point_json(const Point& p) { return {p.x, p.y}; }

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string slot_record_json(const SlotRecord& record, const SimReport& report) {
  nlohmann::json j;
  j["slot"] = record.slot;
  j["cell"] = point_json(record.cell);
  auto sensors = nlohmann::json::array();
  for (const auto& p : record.sensors) sensors.push_back(point_json(p));
  j["sensors"] = std::move(sensors);
  j["reported"] = record.reported;
  j["decoded"] = point_json(record.decoded);
  j["bits"] = {{"baseline", report.baseline_bits},
               {"mcgc_per_channel", report.mcgc_channel_bits},
               {"channels", record.sensors.size()}};
  return j.dump();
}

std::string report_json(const SimReport& r, int indent) {
  nlohmann::json j;
  j["config"] = {{"cells", r.config.cells},     {"m", r.config.m},
                 {"slots", r.config.slots},     {"bits", r.config.bits},
                 {"seed", r.config.seed},
                 {"traj", trajectory_string(r.config)}};
  j["deployment"] = {{"sensors_per_side", r.side},
                     {"axis_colors", r.axis_colors},
                     {"bound_axis_colors", r.bound_axis_colors},
                     {"colors", r.colors},
                     {"axis_origin", r.axis_origin},
                     {"codebook_size", r.codebook_size}};
  j["bits"] = {{"baseline_per_report", r.baseline_bits},
               {"mcgc_per_channel", r.mcgc_channel_bits}};
  j["feasible"] = {{"baseline", r.baseline_feasible}, {"mcgc", r.mcgc_feasible}};
  j["gain"] = {{"measured", optional_json(r.measured_gain)},
               {"bound", optional_json(r.bound_gain)},
               {"wire", optional_json(r.wire_gain)}};
  j["correct"] = r.correct;
  j["permutation_checks"] = r.permutation_checks;
  j["accuracy"] = r.accuracy;
  return j.dump(indent);
}

}  // namespace mcgc
