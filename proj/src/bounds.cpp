#include "mcgc/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <ostream>

#include "mcgc/sequence.hpp"

namespace mcgc {

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

BigInt multichoose(std::size_t k, std::size_t m) {
  if (k == 0) return m == 0 ? 1 : 0;
  return binomial(k + m - 1, m);
}

std::size_t mcycle_threshold(std::size_t m) {
  switch (m) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 4;
    case 4: return 5;
    case 6: return 11;
    default: return 0;
  }
}

bool supported_m(std::size_t m) {
  return m == 1 || m == 2 || m == 3 || m == 4 || m == 6;
}

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Whether an (m,k)-Mcycle is known to exist.
bool mcycle_known(std::size_t m, std::size_t k) {
  if (k == 1 || m == 1) return true;
  if (m == 2) return k % 2 == 1;
  if (m == 3 || m == 4 || m == 6) {
    return k >= mcycle_threshold(m) && std::gcd(m, k) == 1;
  }
  return false;
}

struct Candidate {
  BigInt value;
  std::string source;
};

}  // namespace

BigInt upper_bound(std::size_t m, std::size_t k, bool cyclic) {
  if (m < 1 || k < 1) throw Error("upper_bound requires m, k >= 1");
  BigInt h = multichoose(k, m);
  if (!cyclic) return h + (m - 1);
  if (is_prime(m) && k % m == 0) h -= k / m;
  return h;
}

std::span<const SearchWitness> search_witnesses() {
  static constexpr SearchWitness kWitnesses[] = {
      {3, 3, "122233311123"},
      {4, 2, "11112222"},
      {4, 3, "11222233331111232"},
      {4, 4, "1111222231114224233231444433331144243"},
  };
  return kWitnesses;
}

BoundRecord lower_bound(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw Error("lower_bound requires m, k >= 1");
  BoundRecord rec;
  rec.m = m;
  rec.k = k;
  rec.upper = upper_bound(m, k, /*cyclic=*/false);
  rec.upper_source = "multiset count";

  if (m == 1) {
    rec.lower = k;
    rec.lower_source = "exact (distinct colors)";
    rec.tight = true;
    return rec;
  }

  std::vector<Candidate> candidates;
  if (mcycle_known(m, k)) {
    candidates.push_back({multichoose(k, m) + (m - 1), "mcycle cut"});
  } else {
    // Cut of an Mcycle on k-t colors followed by m copies of each new color.
    // t = k-1 is the block sequence 1^m 2^m ... k^m.
    for (std::size_t t = 1; t < k; ++t) {
      if (!mcycle_known(m, k - t)) continue;
      candidates.push_back(
          {multichoose(k - t, m) + (m - 1) + t * m,
           t == k - 1 ? "block sequence"
                      : "padded mcycle (+" + std::to_string(t) + " colors)"});
      break;
    }
  }
  if (m == 2 && k % 2 == 0 && k >= 4) {
    candidates.push_back(
        {multichoose(k, 2) - k / 2 + 1, "even-k Eulerian construction cut"});
  }
  if (m == 3 && k % 3 == 0) {
    candidates.push_back(
        {multichoose(k, 3) - k / 3 + 2, "recursive m=3 construction cut"});
  }
  for (const auto& w : search_witnesses()) {
    if (w.m == m && w.k == k) {
      candidates.push_back({BigInt(std::strlen(w.digits)), "search witness"});
    }
  }
  if (!supported_m(m)) {
    if (binomial(k - 1, m - 1) % m == 0) {
      candidates.push_back({binomial(k, m) + (m - 1), "ucycle existence"});
      rec.existence_only = true;
    } else {
      rec.asymptotic_only = true;
    }
  }
  if (candidates.empty()) {
    candidates.push_back({BigInt(k * m), "block sequence"});
  }

  const Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.value > best->value) best = &c;
  }
  rec.lower = best->value;
  rec.lower_source = best->source;
  if (m >= 3 && supported_m(m) && k < mcycle_threshold(m)) {
    rec.below_threshold = true;
  }
  if (m >= 3 && best->source.rfind("mcycle", 0) == 0 && k > 1) {
    rec.existence_only = true;
  }
  if (m >= 3 && best->source.rfind("padded", 0) == 0) {
    rec.existence_only = true;
  }
  rec.tight = rec.lower == rec.upper;
  return rec;
}

std::size_t min_colors_1d(std::size_t M, std::size_t m) {
  if (m < 1 || M < m) throw Error("min_colors_1d requires M >= m >= 1");
  if (!supported_m(m)) {
    throw Error("min_colors_1d: no lower bound table for m=" +
                std::to_string(m));
  }
  for (std::size_t k = 1;; ++k) {
    if (lower_bound(m, k).lower >= M) return k;
  }
}

std::size_t min_colors_2d(std::size_t M, std::size_t N, std::size_t m,
                          std::size_t n) {
  return min_colors_1d(M, m) * min_colors_1d(N, n);
}

GainRecord gain_record(std::size_t M, std::size_t N, std::size_t m,
                       std::size_t n) {
  if (M * N < 2) throw Error("coding gain needs a grid with at least 2 cells");
  GainRecord rec{M, N, m, n, min_colors_1d(M, m), min_colors_1d(N, n), 0.0};
  rec.gain = (std::log2(static_cast<double>(rec.k_M)) +
              std::log2(static_cast<double>(rec.k_N))) /
             (std::log2(static_cast<double>(M)) +
              std::log2(static_cast<double>(N)));
  return rec;
}

double coding_gain(std::size_t M, std::size_t N, std::size_t m,
                   std::size_t n) {
  return gain_record(M, N, m, n).gain;
}

std::string format_gain(double gain) {
  // The 1e-9 slack keeps exact thousandths from truncating one step down.
  const double truncated = std::floor(gain * 1000.0 + 1e-9) / 1000.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", truncated);
  return buf;
}

void write_bounds_csv(std::ostream& os, std::size_t m, std::size_t k_from,
                      std::size_t k_to) {
  os << "m,k,lower,upper,tight,lower_source,upper_source,flags\n";
  for (std::size_t k = k_from; k <= k_to; ++k) {
    const auto rec = lower_bound(m, k);
    std::string flags;
    auto flag = [&](bool on, const char* name) {
      if (!on) return;
      if (!flags.empty()) flags += ';';
      flags += name;
    };
    flag(rec.below_threshold, "below_threshold");
    flag(rec.existence_only, "existence_only");
    flag(rec.asymptotic_only, "asymptotic_only");
    os << m << ',' << k << ',' << rec.lower << ',' << rec.upper << ','
       << (rec.tight ? "true" : "false") << ',' << rec.lower_source << ','
       << rec.upper_source << ',' << flags << '\n';
  }
}

void write_kmin_csv(std::ostream& os, const std::vector<std::size_t>& ms,
                    const std::vector<std::size_t>& sizes) {
  os << "m,M,k_min\n";
  for (auto m : ms) {
    for (auto M : sizes) os << m << ',' << M << ',' << min_colors_1d(M, m) << '\n';
  }
}

void write_gain_csv(
    std::ostream& os, const std::vector<std::size_t>& sizes,
    const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
  os << "m,n,M,N,k_M,k_N,gain\n";
  for (const auto& [m, n] : blocks) {
    for (auto M : sizes) {
      for (auto N : sizes) {
        const auto rec = gain_record(M, N, m, n);
        os << m << ',' << n << ',' << M << ',' << N << ',' << rec.k_M << ','
           << rec.k_N << ',' << format_gain(rec.gain) << '\n';
      }
    }
  }
}

}  // namespace mcgc
