#include "mcgc/sequence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <sstream>

namespace mcgc {

std::string to_string(Mode mode) {
  return mode == Mode::cyclic ? "cyclic" : "linear";
}

Mode parse_mode(const std::string& text) {
  if (text == "cyclic") return Mode::cyclic;
  if (text == "linear") return Mode::linear;
  throw Error("unknown sequence mode '" + text + "'");
}

ColorSequence::ColorSequence(std::vector<Color> colors,
                             std::size_t palette_size, Mode mode)
    : colors_(std::move(colors)), palette_(palette_size), mode_(mode) {
  if (colors_.empty()) throw Error("color sequence must be non-empty");
  if (palette_ == 0) throw Error("palette size must be positive");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1 || colors_[i] > palette_) {
      throw Error("color " + std::to_string(colors_[i]) + " at position " +
                  std::to_string(i) + " outside palette [1," +
                  std::to_string(palette_) + "]");
    }
  }
}

ColorSequence ColorSequence::with_mode(Mode mode) const {
  return ColorSequence(colors_, palette_, mode);
}

ColorSequence ColorSequence::with_palette(std::size_t palette_size) const {
  return ColorSequence(colors_, palette_size, mode_);
}

ColorSequence ColorSequence::rotated(std::size_t r) const {
  std::vector<Color> out(colors_.size());
  const std::size_t n = colors_.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = colors_[(i + r) % n];
  return ColorSequence(std::move(out), palette_, mode_);
}

std::string ColorSequence::str() const {
  std::ostringstream os;
  const bool compact = palette_ <= 9;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (!compact && i) os << ' ';
    os << colors_[i];
  }
  return os.str();
}

std::vector<Color> parse_digits(const std::string& digits) {
  std::vector<Color> out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch == ' ') continue;
    if (ch < '1' || ch > '9') {
      throw Error(std::string("invalid color digit '") + ch + "'");
    }
    out.push_back(static_cast<Color>(ch - '0'));
  }
  return out;
}

Multiset::Multiset(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  for (auto c : counts_) cardinality_ += c;
}

Multiset Multiset::of(std::span<const Color> colors, std::size_t palette_size) {
  Multiset s(std::vector<std::uint32_t>(palette_size, 0));
  for (Color c : colors) s.add(c);
  return s;
}

void Multiset::add(Color c) {
  if (c < 1 || c > counts_.size()) {
    throw Error("color " + std::to_string(c) + " outside multiset palette");
  }
  ++counts_[c - 1];
  ++cardinality_;
}

void Multiset::remove(Color c) {
  if (c < 1 || c > counts_.size() || counts_[c - 1] == 0) {
    throw Error("color " + std::to_string(c) + " not present in multiset");
  }
  --counts_[c - 1];
  --cardinality_;
}

std::string Multiset::key() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(counts_[i]);
  }
  return out;
}

Multiset Multiset::from_key(const std::string& key) {
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const auto next = key.find('-', pos);
    const auto field = key.substr(pos, next == std::string::npos
                                           ? std::string::npos
                                           : next - pos);
    if (field.empty() ||
        field.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("malformed multiset key '" + key + "'");
    }
    counts.push_back(static_cast<std::uint32_t>(std::stoul(field)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return Multiset(std::move(counts));
}

std::vector<Color> Multiset::elements() const {
  std::vector<Color> out;
  out.reserve(cardinality_);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out.insert(out.end(), counts_[i], static_cast<Color>(i + 1));
  }
  return out;
}

std::size_t MultisetHash::operator()(const Multiset& s) const noexcept {
  // FNV-1a over the count vector.
  std::uint64_t h = 1469598103934665603ull;
  for (auto c : s.counts()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::size_t window_count(const ColorSequence& seq, std::size_t m) {
  if (m == 0) throw Error("window size must be positive");
  if (m > seq.size()) {
    throw Error("window size " + std::to_string(m) +
                " exceeds sequence length " + std::to_string(seq.size()));
  }
  return seq.cyclic() ? seq.size() : seq.size() - m + 1;
}

}  // namespace

Multiset window_multiset(const ColorSequence& seq, std::size_t t,
                         std::size_t m) {
  const std::size_t count = window_count(seq, m);
  if (t >= count) {
    throw Error("window start " + std::to_string(t) + " out of range for " +
                to_string(seq.mode()) + " sequence of length " +
                std::to_string(seq.size()) + " with m=" + std::to_string(m));
  }
  Multiset s(std::vector<std::uint32_t>(seq.palette_size(), 0));
  for (std::size_t i = 0; i < m; ++i) s.add(seq[(t + i) % seq.size()]);
  return s;
}

std::vector<Multiset> window_multisets(const ColorSequence& seq,
                                       std::size_t m) {
  const std::size_t count = window_count(seq, m);
  const std::size_t n = seq.size();
  std::vector<Multiset> out;
  out.reserve(count);
  Multiset s(std::vector<std::uint32_t>(seq.palette_size(), 0));
  for (std::size_t i = 0; i < m; ++i) s.add(seq[i]);
  out.push_back(s);
  for (std::size_t t = 1; t < count; ++t) {
    s.remove(seq[t - 1]);
    s.add(seq[(t + m - 1) % n]);
    out.push_back(s);
  }
  return out;
}

DistinguishabilityReport check_distinguishable(const ColorSequence& seq,
                                               std::size_t m) {
  const auto windows = window_multisets(seq, m);
  DistinguishabilityReport report;
  report.windows = windows.size();

  // First occurrence of every key; a later repeat pairs with it. The
  // smallest first element among colliding keys, then its smallest partner,
  // is the lexicographic minimum.
  std::unordered_map<Multiset, std::size_t, MultisetHash> first;
  first.reserve(windows.size() * 2);
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t t = 0; t < windows.size(); ++t) {
    auto [it, inserted] = first.emplace(windows[t], t);
    if (inserted) continue;
    const std::pair<std::size_t, std::size_t> candidate{it->second, t};
    if (!best || candidate < *best) best = candidate;
  }
  if (best) {
    report.ok = false;
    report.collision = best;
  }
  return report;
}

ColorSequence t_cut(const ColorSequence& seq, std::size_t t, std::size_t m) {
  if (!seq.cyclic()) throw Error("t-cut requires a cyclic sequence");
  if (t >= seq.size()) {
    throw Error("cut position " + std::to_string(t) + " out of range");
  }
  if (m == 0) throw Error("window size must be positive");
  const std::size_t n = seq.size();
  std::vector<Color> out;
  out.reserve(n + m - 1);
  for (std::size_t i = 0; i < n + m - 1; ++i) out.push_back(seq[(t + 1 + i) % n]);
  return ColorSequence(std::move(out), seq.palette_size(), Mode::linear);
}

}  // namespace mcgc
