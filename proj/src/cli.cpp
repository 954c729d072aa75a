#include "mcgc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcgc/bounds.hpp"
#include "mcgc/constructions.hpp"
#include "mcgc/cross_product.hpp"
#include "mcgc/grid2d.hpp"
#include "mcgc/io.hpp"
#include "mcgc/tracking.hpp"

namespace mcgc {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string version_text() {
  return std::string("mcgc ") + kToolVersion + " (sequence, grid and codebook formats v" +
         std::to_string(kFormatVersion) + ")";
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  body(file);
  if (!file) throw Error("failed writing '" + path + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  return file;
}

SequenceFile load_sequences(const std::string& path) {
  if (path == "-") return read_sequences(std::cin);
  return read_sequence_file(path);
}

std::size_t header_m(const Header& h, std::optional<std::size_t> flag,
                     const std::string& what) {
  if (flag) return *flag;
  const auto it = h.find("m");
  if (it == h.end()) {
    throw UsageError(what + " has no m= header field; pass it explicitly");
  }
  return std::stoul(it->second);
}

std::vector<std::size_t> parse_list(const std::string& text,
                                    const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("invalid " + what + " entry '" + field + "'");
    }
    out.push_back(std::stoul(field));
  }
  if (out.empty()) throw UsageError("empty " + what + " list");
  return out;
}

// "MxN" or a single "M" meaning MxM.
std::pair<std::size_t, std::size_t> parse_block(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) {
    const auto v = parse_list(text, "block");
    if (v.size() != 1) throw UsageError("invalid block '" + text + "'");
    return {v[0], v[0]};
  }
  const auto a = parse_list(text.substr(0, x), "block");
  const auto b = parse_list(text.substr(x + 1), "block");
  if (a.size() != 1 || b.size() != 1) throw UsageError("invalid block '" + text + "'");
  return {a[0], b[0]};
}

std::vector<std::pair<std::size_t, std::size_t>> parse_blocks(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(parse_block(field));
  if (out.empty()) throw UsageError("empty block list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B");
  const auto a = parse_list(text.substr(0, dots), "range");
  const auto b = parse_list(text.substr(dots + 2), "range");
  if (a.size() != 1 || b.size() != 1 || a[0] > b[0] || a[0] == 0) {
    throw UsageError("invalid range '" + text + "'");
  }
  return {a[0], b[0]};
}

json sequence_json(const ColorSequence& seq, std::size_t m) {
  return {{"k", seq.palette_size()},
          {"mode", to_string(seq.mode())},
          {"m", m},
          {"length", seq.size()},
          {"colors", std::vector<Color>(seq.colors().begin(), seq.colors().end())}};
}

std::string multiset_text(const Multiset& s) {
  std::string out = "{";
  for (const auto c : s.elements()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(c);
  }
  return out + "}";
}

void add_format(CLI::App* sub, std::string& format,
                std::vector<std::string> choices) {
  format = choices.front();
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(choices))
      ->capture_default_str();
}

void add_mode_flags(CLI::App* sub, bool& cyclic, bool& linear) {
  auto* c = sub->add_flag("--cyclic", cyclic, "Cyclic interpretation");
  auto* l = sub->add_flag("--linear", linear, "Linear interpretation");
  c->excludes(l);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Multiset combinatorial Gray codes: constructions, checks, "
               "bounds, 2D codes and a tracking simulator",
               "mcgc"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);
  app.fallthrough(false);

  std::function<void()> action;

  // construct
  struct {
    std::size_t m = 0, k = 0;
    bool cyclic = false, linear = false;
    std::optional<std::size_t> cut, pad;
    std::string output, format;
  } con;
  auto* construct = app.add_subcommand("construct", "Build an m-distinguishable sequence on [k]");
  construct->add_option("--m", con.m, "Window size (1, 2 or 3)")->required();
  construct->add_option("--k", con.k, "Palette size")->required();
  add_mode_flags(construct, con.cyclic, con.linear);
  construct->add_option("--cut", con.cut, "Cut position for linear output");
  construct->add_option("--pad", con.pad, "Extra colors appended as m-blocks (linear)");
  construct->add_option("-o,--output", con.output, "Output file");
  add_format(construct, con.format, {"text", "json"});
  construct->callback([&] {
    action = [&] {
      if (con.linear == false && (con.cut || con.pad)) {
        if (con.cyclic) throw UsageError("--cut and --pad need --linear");
        con.linear = true;
      }
      ColorSequence seq = [&] {
        switch (con.m) {
          case 1: return build_m1(con.k);
          case 2: return build_m2(con.k);
          case 3: return build_m3(con.k);
          default:
            throw Error("no direct construction for m=" + std::to_string(con.m) +
                        "; try 'compose'");
        }
      }();
      if (con.linear) {
        const auto cut = con.cut.value_or(0);
        if (cut >= seq.size()) throw Error("cut position out of range");
        seq = con.pad ? pad_with_new_colors(seq, con.m, *con.pad, cut)
                      : t_cut(seq, cut, con.m);
      }
      emit(con.output, out, [&](std::ostream& os) {
        if (con.format == "json") {
          os << sequence_json(seq, con.m).dump() << '\n';
        } else {
          write_sequence(os, seq, {{"m", std::to_string(con.m)},
                                   {"length", std::to_string(seq.size())}});
        }
      });
    };
  });

  // verify
  struct {
    std::size_t m = 0;
    bool cyclic = false, linear = false;
    std::string input, seq, format;
  } ver;
  auto* verify = app.add_subcommand("verify", "Check m-distinguishability of a sequence");
  verify->add_option("--m", ver.m, "Window size")->required();
  add_mode_flags(verify, ver.cyclic, ver.linear);
  auto* ver_in = verify->add_option("input", ver.input, "Sequence file ('-' for stdin)");
  auto* ver_seq = verify->add_option("--seq", ver.seq, "Inline digit string, e.g. 122344511335524");
  ver_in->excludes(ver_seq);
  add_format(verify, ver.format, {"text", "json"});
  int verify_status = 0;
  verify->callback([&] {
    action = [&] {
      std::optional<ColorSequence> seq;
      if (!ver.seq.empty()) {
        const auto colors = parse_digits(ver.seq);
        const auto k = *std::max_element(colors.begin(), colors.end());
        seq.emplace(colors, k, Mode::cyclic);
      } else {
        if (ver.input.empty()) throw UsageError("give a sequence file or --seq");
        seq.emplace(load_sequences(ver.input).sequences.front());
      }
      if (ver.cyclic) seq = seq->with_mode(Mode::cyclic);
      if (ver.linear) seq = seq->with_mode(Mode::linear);
      const auto report = check_distinguishable(*seq, ver.m);
      if (ver.format == "json") {
        json j{{"ok", report.ok},
               {"m", ver.m},
               {"mode", to_string(seq->mode())},
               {"windows", report.windows}};
        if (report.collision) {
          j["collision"] = {report.collision->first, report.collision->second};
          j["multiset"] = window_multiset(*seq, report.collision->first, ver.m).elements();
        }
        out << j.dump() << '\n';
      } else if (report.ok) {
        out << "ok, " << report.windows << " windows distinct\n";
      } else {
        const auto [a, b] = *report.collision;
        out << "collision (" << a << "," << b << "): windows " << a << " and "
            << b << " share multiset "
            << multiset_text(window_multiset(*seq, a, ver.m)) << '\n';
      }
      if (!report.ok) {
        err << "mcgc: sequence is not " << to_string(seq->mode()) << ' '
            << ver.m << "-distinguishable\n";
        verify_status = 1;
      }
    };
  });

  // cut
  struct {
    std::size_t m = 0, t = 0;
    std::string input = "-", output;
  } cutopt;
  auto* cut = app.add_subcommand("cut", "Linearize a cyclic sequence at position t");
  cut->add_option("--m", cutopt.m, "Window size")->required();
  cut->add_option("--t", cutopt.t, "Cut position")->required();
  cut->add_option("input", cutopt.input, "Sequence file ('-' for stdin)");
  cut->add_option("-o,--output", cutopt.output, "Output file");
  cut->callback([&] {
    action = [&] {
      const auto seq = load_sequences(cutopt.input).sequences.front().with_mode(Mode::cyclic);
      if (cutopt.t >= seq.size()) throw Error("cut position out of range");
      const auto lin = t_cut(seq, cutopt.t, cutopt.m);
      emit(cutopt.output, out, [&](std::ostream& os) {
        write_sequence(os, lin, {{"m", std::to_string(cutopt.m)},
                                 {"cut", std::to_string(cutopt.t)}});
      });
    };
  });

  // search-max
  struct {
    std::size_t m = 0, k = 0, cap = 0;
    std::string output, format;
  } sm;
  auto* search = app.add_subcommand("search-max", "Exhaustive longest cyclic sequence search");
  search->add_option("--m", sm.m, "Window size")->required();
  search->add_option("--k", sm.k, "Palette size")->required();
  search->add_option("--cap", sm.cap, "Largest length to try")->required();
  search->add_option("-o,--output", sm.output, "Output file");
  add_format(search, sm.format, {"text", "json"});
  search->callback([&] {
    action = [&] {
      const auto r = brute_force_max_cyclic(sm.m, sm.k, sm.cap);
      emit(sm.output, out, [&](std::ostream& os) {
        if (sm.format == "json") {
          json j{{"m", sm.m},
                 {"k", sm.k},
                 {"cap", sm.cap},
                 {"max_length", r.max_length},
                 {"proven", r.proven},
                 {"searched_up_to", r.searched_up_to},
                 {"nodes", r.nodes}};
          j["witness"] = r.witness ? sequence_json(*r.witness, sm.m) : json(nullptr);
          os << j.dump() << '\n';
          return;
        }
        std::vector<std::pair<std::string, std::string>> extra{
            {"m", std::to_string(sm.m)},
            {"max_length", std::to_string(r.max_length)},
            {"proven", r.proven ? "true" : "false"},
            {"searched_up_to", std::to_string(r.searched_up_to)},
            {"nodes", std::to_string(r.nodes)}};
        if (r.witness) {
          write_sequence(os, *r.witness, extra);
        } else {
          os << "# k=" << sm.k << " mode=cyclic";
          for (const auto& [key, v] : extra) os << ' ' << key << '=' << v;
          os << '\n';
        }
      });
      if (!r.proven) err << "mcgc: cap reached; maximum not proven\n";
    };
  });

  // cross
  struct {
    std::string s, t, output;
    std::optional<std::size_t> m1, m2;
    bool shift = false;
  } cr;
  auto* crossc = app.add_subcommand("cross", "Cross product of two cyclic sequences");
  crossc->add_option("--s", cr.s, "First sequence file")->required();
  crossc->add_option("--t", cr.t, "Second sequence file")->required();
  crossc->add_option("--m1", cr.m1, "Window size of the first (default: its m= field)");
  crossc->add_option("--m2", cr.m2, "Window size of the second (default: its m= field)");
  crossc->add_flag("--shift", cr.shift, "Shift the second palette above the first");
  crossc->add_option("-o,--output", cr.output, "Output file");
  crossc->callback([&] {
    action = [&] {
      const auto fs = load_sequences(cr.s);
      const auto ft = load_sequences(cr.t);
      const auto m1 = header_m(fs.header, cr.m1, "--s file");
      const auto m2 = header_m(ft.header, cr.m2, "--t file");
      const auto s = fs.sequences.front();
      auto t = ft.sequences.front();
      if (cr.shift) t = shift_palette(t, s.palette_size());
      const auto plan = plan_cross(s.size(), m1, t.size(), m2);
      const auto result = cross(s, m1, t, m2, plan);
      emit(cr.output, out, [&](std::ostream& os) {
        write_sequence(os, result, {{"m", std::to_string(m1 + m2)},
                                    {"split", std::to_string(m1) + "+" + std::to_string(m2)},
                                    {"d", std::to_string(plan.d)},
                                    {"L", std::to_string(plan.L)}});
      });
    };
  });

  // compose
  struct {
    std::size_t m = 0, max_colors = 24;
    bool no_builders = false;
    std::vector<std::string> pool;
    std::string output;
  } cp;
  auto* compose = app.add_subcommand("compose", "Cyclic m-distinguishable sequence by repeated cross products");
  compose->add_option("--m", cp.m, "Window size (>= 2)")->required();
  compose->add_option("--max-colors", cp.max_colors, "Color budget")->capture_default_str();
  compose->add_option("--pool", cp.pool, "Extra base sequence files (need an m= field)");
  compose->add_flag("--no-builders", cp.no_builders, "Use only --pool bases");
  compose->add_option("-o,--output", cp.output, "Output file");
  compose->callback([&] {
    action = [&] {
      ComposeOptions opts;
      opts.max_colors = cp.max_colors;
      opts.use_builders = !cp.no_builders;
      for (const auto& path : cp.pool) {
        const auto f = load_sequences(path);
        opts.pool.push_back({f.sequences.front(), header_m(f.header, std::nullopt, path), path});
      }
      const auto c = compose_for_m(cp.m, opts);
      std::string split, bases, ds, ls;
      for (std::size_t i = 0; i < c.split.size(); ++i) {
        split += (i ? "+" : "") + std::to_string(c.split[i]);
        bases += (i ? ";" : "") + c.bases[i];
      }
      for (std::size_t i = 0; i < c.plans.size(); ++i) {
        ds += (i ? "," : "") + std::to_string(c.plans[i].d);
        ls += (i ? "," : "") + std::to_string(c.plans[i].L);
      }
      std::vector<std::pair<std::string, std::string>> extra{
          {"m", std::to_string(c.m)}, {"split", split}, {"bases", bases}};
      if (!c.plans.empty()) {
        extra.emplace_back("d", ds);
        extra.emplace_back("L", ls);
      }
      emit(cp.output, out, [&](std::ostream& os) { write_sequence(os, c.sequence, extra); });
    };
  });

  // bounds
  struct {
    std::size_t m = 0;
    std::string range, output, format;
  } bd;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the longest sequence");
  bounds->add_option("--m", bd.m, "Window size")->required();
  bounds->add_option("--k-range", bd.range, "Palette sizes A..B")->required();
  bounds->add_option("-o,--output", bd.output, "Output file");
  add_format(bounds, bd.format, {"csv", "json"});
  bounds->callback([&] {
    action = [&] {
      if (bd.m == 0) throw UsageError("--m must be >= 1");
      const auto [a, b] = parse_range(bd.range);
      emit(bd.output, out, [&](std::ostream& os) {
        if (bd.format == "csv") {
          write_bounds_csv(os, bd.m, a, b);
          return;
        }
        json rows = json::array();
        for (std::size_t k = a; k <= b; ++k) {
          const auto r = lower_bound(bd.m, k);
          rows.push_back({{"m", r.m},
                          {"k", r.k},
                          {"lower", r.lower.str()},
                          {"upper", r.upper.str()},
                          {"tight", r.tight},
                          {"lower_source", r.lower_source},
                          {"upper_source", r.upper_source},
                          {"below_threshold", r.below_threshold},
                          {"existence_only", r.existence_only},
                          {"asymptotic_only", r.asymptotic_only}});
        }
        os << rows.dump(2) << '\n';
      });
    };
  });

  // kmin
  struct {
    std::string ms, sizes, output, format;
  } km;
  auto* kmin = app.add_subcommand("kmin", "Fewest colors for a sequence of length M");
  kmin->add_option("--m", km.ms, "Window sizes, comma separated")->required();
  kmin->add_option("--sizes", km.sizes, "Lengths M, comma separated")->required();
  kmin->add_option("-o,--output", km.output, "Output file");
  add_format(kmin, km.format, {"csv", "json"});
  kmin->callback([&] {
    action = [&] {
      auto ms = parse_list(km.ms, "m");
      auto sizes = parse_list(km.sizes, "size");
      std::sort(ms.begin(), ms.end());
      std::sort(sizes.begin(), sizes.end());
      emit(km.output, out, [&](std::ostream& os) {
        if (km.format == "csv") {
          write_kmin_csv(os, ms, sizes);
          return;
        }
        json rows = json::array();
        for (auto m : ms) {
          for (auto M : sizes) rows.push_back({{"m", m}, {"M", M}, {"k_min", min_colors_1d(M, m)}});
        }
        os << rows.dump(2) << '\n';
      });
    };
  });

  // gain
  struct {
    std::string sizes, blocks, output, format;
  } gn;
  auto* gain = app.add_subcommand("gain", "Color coding gains of the product code");
  gain->add_option("--sizes", gn.sizes, "Grid sides, comma separated")->required();
  gain->add_option("--blocks", gn.blocks, "Blocks like 4x3,2x2 (a bare m means mxm)")->required();
  gain->add_option("-o,--output", gn.output, "Output file");
  add_format(gain, gn.format, {"csv", "json"});
  gain->callback([&] {
    action = [&] {
      auto sizes = parse_list(gn.sizes, "size");
      auto blocks = parse_blocks(gn.blocks);
      std::sort(sizes.begin(), sizes.end());
      std::sort(blocks.begin(), blocks.end());
      emit(gn.output, out, [&](std::ostream& os) {
        if (gn.format == "csv") {
          write_gain_csv(os, sizes, blocks);
          return;
        }
        json rows = json::array();
        for (const auto& [m, n] : blocks) {
          for (auto M : sizes) {
            for (auto N : sizes) {
              const auto r = gain_record(M, N, m, n);
              rows.push_back({{"m", m}, {"n", n}, {"M", M}, {"N", N},
                              {"k_M", r.k_M}, {"k_N", r.k_N},
                              {"gain", format_gain(r.gain)}, {"gain_raw", r.gain}});
            }
          }
        }
        os << rows.dump(2) << '\n';
      });
    };
  });

  // grid
  struct {
    std::string s1, s2, mode, check, output;
  } gr;
  auto* grid = app.add_subcommand("grid", "Product color grid of two sequences");
  grid->add_option("--s1", gr.s1, "Row-axis sequence file")->required();
  grid->add_option("--s2", gr.s2, "Column-axis sequence file")->required();
  grid->add_option("--mode", gr.mode, "plain or cyclic (default: cyclic iff both inputs are)")
      ->check(CLI::IsMember({"plain", "cyclic"}));
  grid->add_option("--check", gr.check, "Also verify (m,n)-distinguishability, e.g. 2x2");
  grid->add_option("-o,--output", gr.output, "Output file");
  int grid_status = 0;
  grid->callback([&] {
    action = [&] {
      const auto s1 = load_sequences(gr.s1).sequences.front();
      const auto s2 = load_sequences(gr.s2).sequences.front();
      std::optional<GridMode> mode;
      if (!gr.mode.empty()) mode = parse_grid_mode(gr.mode);
      const auto g = product_grid(s1, s2, mode);
      if (!gr.check.empty()) {
        const auto [m, n] = parse_block(gr.check);
        const auto rep = check_grid_distinguishable(g, m, n);
        if (!rep.ok) {
          const auto [p, q] = *rep.collision;
          err << "mcgc: blocks at (" << p.x << "," << p.y << ") and (" << q.x
              << "," << q.y << ") share a multiset\n";
          grid_status = 1;
          return;
        }
        err << "ok, " << rep.blocks << " blocks distinct\n";
      }
      emit(gr.output, out, [&](std::ostream& os) { write_grid_csv(os, g); });
    };
  });

  // codebook
  struct {
    std::string grid, block, output;
  } cbo;
  auto* codebook = app.add_subcommand("codebook", "Multiset-to-position table of a grid");
  codebook->add_option("--grid", cbo.grid, "Grid CSV file")->required();
  codebook->add_option("--block", cbo.block, "Block size, e.g. 2x2")->required();
  codebook->add_option("-o,--output", cbo.output, "Output file");
  codebook->callback([&] {
    action = [&] {
      auto in = open_input(cbo.grid);
      const auto g = read_grid_csv(in);
      const auto [m, n] = parse_block(cbo.block);
      const auto cb = build_codebook(g, m, n);
      emit(cbo.output, out, [&](std::ostream& os) { write_codebook_csv(os, cb); });
    };
  });

  // decode
  struct {
    std::string codebook, colors, key, format;
  } dc;
  auto* decodec = app.add_subcommand("decode", "Position of a reported block multiset");
  decodec->add_option("--codebook", dc.codebook, "Codebook CSV file")->required();
  auto* dc_colors = decodec->add_option("--colors", dc.colors, "Reported colors, comma separated, any order");
  auto* dc_key = decodec->add_option("--key", dc.key, "Count-vector key, e.g. 1-0-2");
  dc_colors->excludes(dc_key);
  add_format(decodec, dc.format, {"text", "json"});
  decodec->callback([&] {
    action = [&] {
      auto in = open_input(dc.codebook);
      const auto cb = read_codebook_csv(in);
      Point p;
      if (!dc.colors.empty()) {
        std::vector<Color> colors;
        for (auto c : parse_list(dc.colors, "color")) colors.push_back(static_cast<Color>(c));
        p = decode(cb, std::span<const Color>(colors));
      } else if (!dc.key.empty()) {
        p = decode(cb, Multiset::from_key(dc.key));
      } else {
        throw UsageError("give --colors or --key");
      }
      if (dc.format == "json") {
        out << json{{"x0", p.x}, {"y0", p.y}}.dump() << '\n';
      } else {
        out << p.x << ',' << p.y << '\n';
      }
    };
  });

  // simulate
  struct {
    std::string config, records, output, traj;
    std::optional<std::size_t> cells, m, slots, bits;
    std::optional<std::uint64_t> seed;
  } si;
  auto* simulate = app.add_subcommand("simulate", "Tracking simulation: unique IDs vs. color multisets");
  simulate->add_option("--config", si.config, "key=value config file");
  simulate->add_option("--cells", si.cells, "Basic cells per side");
  simulate->add_option("--m", si.m, "Detection block side");
  simulate->add_option("--slots", si.slots, "Number of time slots");
  simulate->add_option("--bits", si.bits, "Bit budget per report");
  simulate->add_option("--seed", si.seed, "PRNG seed (required here or in --config)");
  simulate->add_option("--traj", si.traj, "uniform or walk:P");
  simulate->add_option("--records", si.records, "Write per-slot NDJSON records here ('-' for stdout)");
  simulate->add_option("-o,--output", si.output, "Report file (default stdout)");
  simulate->callback([&] {
    action = [&] {
      SimConfig config;
      bool seeded = false;
      if (!si.config.empty()) {
        auto in = open_input(si.config);
        std::stringstream text;
        text << in.rdbuf();
        seeded = text.str().find("seed") != std::string::npos;
        config = parse_config(text);
      }
      if (si.cells) config.cells = *si.cells;
      if (si.m) config.m = *si.m;
      if (si.slots) config.slots = *si.slots;
      if (si.bits) config.bits = *si.bits;
      if (si.seed) {
        config.seed = *si.seed;
        seeded = true;
      }
      if (!si.traj.empty()) parse_trajectory(si.traj, config);
      if (!seeded) throw UsageError("simulate needs --seed (or seed= in --config)");
      config.validate();
      SimReport report;
      if (si.records.empty()) {
        report = run(config);
      } else if (si.records == "-") {
        report = run(config, &out);
      } else {
        std::ofstream rec(si.records, std::ios::binary);
        if (!rec) throw Error("cannot open '" + si.records + "' for writing");
        report = run(config, &rec);
      }
      emit(si.output, out, [&](std::ostream& os) { os << report_json(report) << '\n'; });
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "mcgc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "mcgc: " << e.what() << '\n';
    return 1;
  }
  return std::max(verify_status, grid_status);
}

}  // namespace mcgc
