#include "mcgc/cross_product.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "mcgc/bounds.hpp"
#include "mcgc/constructions.hpp"

namespace mcgc {

std::optional<CrossPlan> try_plan_cross(std::size_t M1, std::size_t m1,
                                        std::size_t M2, std::size_t m2,
                                        std::string* reason) {
  auto fail = [&](std::string why) -> std::optional<CrossPlan> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  if (!M1 || !m1 || !M2 || !m2) return fail("all parameters must be positive");
  if (M1 % m1) return fail("m1 does not divide M1");
  if (M2 % m2) return fail("m2 does not divide M2");
  CrossPlan plan;
  plan.M1 = M1;
  plan.m1 = m1;
  plan.M2 = M2;
  plan.m2 = m2;
  plan.words1 = M1 / m1;
  plan.words2 = M2 / m2;
  plan.d = std::gcd(plan.words1, plan.words2);
  if (plan.d < 2) return fail("d = gcd(M1/m1, M2/m2) is less than 2");
  if (std::gcd(plan.d, plan.words1 / plan.d) != 1) {
    return fail("gcd(d, M1/(m1*d)) != 1");
  }
  if (std::gcd(plan.d, plan.words2 / plan.d) != 1) {
    return fail("gcd(d, M2/(m2*d)) != 1");
  }
  plan.L = plan.words1 / plan.d * plan.words2;
  return plan;
}

CrossPlan plan_cross(std::size_t M1, std::size_t m1, std::size_t M2,
                     std::size_t m2) {
  std::string reason;
  auto plan = try_plan_cross(M1, m1, M2, m2, &reason);
  if (!plan) {
    throw Error("invalid cross plan (M1=" + std::to_string(M1) +
                ", m1=" + std::to_string(m1) + ", M2=" + std::to_string(M2) +
                ", m2=" + std::to_string(m2) + "): " + reason);
  }
  return *plan;
}

std::vector<std::pair<std::size_t, std::size_t>> word_pairs(
    const CrossPlan& plan) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(plan.L);
  for (std::size_t x = 0; x < plan.L; ++x) {
    out.emplace_back(x % plan.words1, x % plan.words2);
  }
  return out;
}

ColorSequence shift_palette(const ColorSequence& seq, std::size_t offset) {
  std::vector<Color> colors(seq.colors().begin(), seq.colors().end());
  for (auto& c : colors) c += static_cast<Color>(offset);
  return ColorSequence(std::move(colors), seq.palette_size() + offset,
                       seq.mode());
}

ColorSequence cross(const ColorSequence& s, std::size_t m1,
                    const ColorSequence& t, std::size_t m2,
                    const CrossPlan& plan) {
  if (plan.M1 != s.size() || plan.m1 != m1 || plan.M2 != t.size() ||
      plan.m2 != m2) {
    throw Error("cross plan does not match the operands");
  }
  const auto k1 = s.palette_size();
  for (Color c : t.colors()) {
    if (c <= k1) {
      throw Error("palette overlap: second operand uses color " +
                  std::to_string(c) + " of the first palette [1," +
                  std::to_string(k1) + "]");
    }
  }
  std::vector<Color> out;
  out.reserve(plan.length());
  for (const auto& [i, j] : word_pairs(plan)) {
    for (std::size_t r = 0; r < m1; ++r) out.push_back(s[i * m1 + r]);
    for (std::size_t r = 0; r < m2; ++r) out.push_back(t[j * m2 + r]);
  }
  ColorSequence result(std::move(out), t.palette_size(), Mode::cyclic);
  if (!check_distinguishable(result, m1 + m2).ok) {
    throw Error(
        "internal validation failure: cross product not distinguishable "
        "(are both operands cyclic distinguishable?)");
  }
  return result;
}

ColorSequence cross(const ColorSequence& s, std::size_t m1,
                    const ColorSequence& t, std::size_t m2) {
  return cross(s, m1, t, m2, plan_cross(s.size(), m1, t.size(), m2));
}

std::vector<std::size_t> split_window(std::size_t m) {
  if (m < 2) throw Error("window split requires m >= 2");
  std::size_t threes = m / 3;
  std::size_t twos = 0;
  switch (m % 3) {
    case 1:
      threes -= 1;
      twos = 2;
      break;
    case 2:
      twos = 1;
      break;
    default:
      break;
  }
  std::vector<std::size_t> out(threes, 3);
  out.insert(out.end(), twos, 2);
  return out;
}

namespace {

// Relabels so the smallest used color becomes 1.
ColorSequence normalized(const ColorSequence& seq) {
  const auto cs = seq.colors();
  const Color lo = *std::min_element(cs.begin(), cs.end());
  const Color hi = *std::max_element(cs.begin(), cs.end());
  std::vector<Color> out(cs.begin(), cs.end());
  for (auto& c : out) c -= lo - 1;
  return ColorSequence(std::move(out), hi - lo + 1, seq.mode());
}

struct Option {
  std::size_t colors;
  std::size_t length;
  std::string origin;
  std::optional<std::size_t> pool_index;
};

std::vector<Option> options_for(std::size_t m, const ComposeOptions& opts) {
  std::vector<Option> out;
  if (opts.use_builders) {
    if (m == 2) {
      for (std::size_t k = 3; k <= opts.max_colors; ++k) {
        const auto h = static_cast<std::size_t>(multichoose(k, 2));
        out.push_back({k, k % 2 ? h : h - k / 2,
                       "build_m2(" + std::to_string(k) + ")", std::nullopt});
      }
    } else if (m == 3) {
      for (std::size_t k = 3; k <= opts.max_colors; k += 3) {
        const auto h = static_cast<std::size_t>(multichoose(k, 3));
        out.push_back({k, h - k / 3, "build_m3(" + std::to_string(k) + ")",
                       std::nullopt});
      }
    }
  }
  for (std::size_t i = 0; i < opts.pool.size(); ++i) {
    const auto& base = opts.pool[i];
    const auto colors = normalized(base.sequence).palette_size();
    if (base.m != m || colors > opts.max_colors) continue;
    out.push_back({colors, base.sequence.size(),
                   base.origin.empty() ? "pool[" + std::to_string(i) + "]"
                                       : base.origin,
                   i});
  }
  std::stable_sort(out.begin(), out.end(), [](const Option& a, const Option& b) {
    return std::tie(a.colors, a.length) < std::tie(b.colors, b.length);
  });
  return out;
}

ColorSequence materialize(const Option& opt, std::size_t m,
                          const ComposeOptions& opts) {
  if (opt.pool_index) return normalized(opts.pool[*opt.pool_index].sequence);
  return m == 2 ? build_m2(opt.colors) : build_m3(opt.colors);
}

struct Choice {
  std::size_t colors;
  std::size_t length;
  std::vector<std::size_t> picks;
};

}  // namespace

Composition compose_for_m(std::size_t m, const ComposeOptions& options) {
  const auto split = split_window(m);
  std::vector<std::vector<Option>> options_per(split.size());
  for (std::size_t f = 0; f < split.size(); ++f) {
    options_per[f] = options_for(split[f], options);
  }
  for (const auto& pool_entry : options.pool) {
    if (!pool_entry.sequence.cyclic() ||
        !check_distinguishable(pool_entry.sequence, pool_entry.m).ok) {
      throw Error("compose pool entry '" + pool_entry.origin +
                  "' is not cyclic distinguishable");
    }
  }

  std::optional<Choice> best;
  std::vector<std::size_t> picks(split.size());
  // Depth-first over factor choices; prunes on the color budget and on
  // invalid intermediate plans.
  auto visit = [&](auto&& self, std::size_t f, std::size_t colors,
                   std::size_t acc_len, std::size_t acc_m) -> void {
    if (f == split.size()) {
      Choice c{colors, acc_len, picks};
      if (!best || std::tie(c.colors, c.length, c.picks) <
                       std::tie(best->colors, best->length, best->picks)) {
        best = std::move(c);
      }
      return;
    }
    for (std::size_t i = 0; i < options_per[f].size(); ++i) {
      const auto& opt = options_per[f][i];
      if (colors + opt.colors > options.max_colors) break;
      std::size_t len = opt.length;
      if (f > 0) {
        auto plan = try_plan_cross(acc_len, acc_m, opt.length, split[f]);
        if (!plan) continue;
        len = plan->length();
      }
      picks[f] = i;
      self(self, f + 1, colors + opt.colors, len, acc_m + split[f]);
    }
  };
  visit(visit, 0, 0, 0, 0);

  if (!best) {
    std::string splits;
    for (auto s : split) splits += (splits.empty() ? "" : "+") + std::to_string(s);
    throw Error("no admissible composition for m=" + std::to_string(m) +
                " within " + std::to_string(options.max_colors) +
                " colors (tried split " + splits + ")");
  }

  Composition out{materialize(options_per[0][best->picks[0]], split[0], options),
                  split[0], split, {options_per[0][best->picks[0]].origin}, {}};
  for (std::size_t f = 1; f < split.size(); ++f) {
    const auto& opt = options_per[f][best->picks[f]];
    const auto t = shift_palette(materialize(opt, split[f], options),
                                 out.sequence.palette_size());
    const auto plan = plan_cross(out.sequence.size(), out.m, t.size(), split[f]);
    out.sequence = cross(out.sequence, out.m, t, split[f], plan);
    out.m += split[f];
    out.bases.push_back(opt.origin);
    out.plans.push_back(plan);
  }
  return out;
}

}  // namespace mcgc
