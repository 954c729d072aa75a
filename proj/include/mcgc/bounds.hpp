#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mcgc {

using BigInt = boost::multiprecision::cpp_int;

/// C(k+m-1, m): the number of m-multisets of [k].
BigInt multichoose(std::size_t k, std::size_t m);
BigInt binomial(std::size_t n, std::size_t r);

/// Largest-known-length bookkeeping for m-distinguishable sequences on [k].
struct BoundRecord {
  std::size_t m = 0;
  std::size_t k = 0;
  BigInt lower;
  BigInt upper;
  bool tight = false;
  std::string lower_source;
  std::string upper_source;
  /// k is below the threshold from which the mcycle results apply.
  bool below_threshold = false;
  /// The lower bound rests on an existence theorem with no explicit
  /// threshold for k.
  bool existence_only = false;
  /// No quantitative lower bound beyond the block fallback is available.
  bool asymptotic_only = false;
};

/// Threshold y0(m) for m in {2,3,4,6}; 1 for m = 1; 0 when unknown.
std::size_t mcycle_threshold(std::size_t m);

/// True for m with full lower-bound coverage (1, 2, 3, 4, 6).
bool supported_m(std::size_t m);

/// Upper bound on the longest (cyclic or linear) m-distinguishable sequence
/// on [k]. The cyclic bound drops k/m when m is prime and divides k.
BigInt upper_bound(std::size_t m, std::size_t k, bool cyclic);

/// Linear m-distinguishable sequences on [k] found by exhaustive search for
/// small k below the mcycle thresholds; colors as digits.
struct SearchWitness {
  std::size_t m;
  std::size_t k;
  const char* digits;
};
std::span<const SearchWitness> search_witnesses();

/// Best known lower bound on the linear maximum, with provenance.
BoundRecord lower_bound(std::size_t m, std::size_t k);

/// Smallest k with lower_bound(m, k) >= M.
std::size_t min_colors_1d(std::size_t M, std::size_t m);

/// Product-code upper bound on the 2D color count.
std::size_t min_colors_2d(std::size_t M, std::size_t N, std::size_t m,
                          std::size_t n);

struct GainRecord {
  std::size_t M, N, m, n;
  std::size_t k_M, k_N;
  double gain;
};

GainRecord gain_record(std::size_t M, std::size_t N, std::size_t m,
                       std::size_t n);

/// (log2 K_M(m) + log2 K_N(n)) / (log2 M + log2 N).
double coding_gain(std::size_t M, std::size_t N, std::size_t m, std::size_t n);

/// Three decimals, truncated toward zero ("0.368").
std::string format_gain(double gain);

/// CSV tables. Bounds rows ascend in k; kmin rows ascend in (m, M); gain
/// rows ascend in (m, n, M, N).
void write_bounds_csv(std::ostream& os, std::size_t m, std::size_t k_from,
                      std::size_t k_to);
void write_kmin_csv(std::ostream& os, const std::vector<std::size_t>& ms,
                    const std::vector<std::size_t>& sizes);
void write_gain_csv(
    std::ostream& os, const std::vector<std::size_t>& sizes,
    const std::vector<std::pair<std::size_t, std::size_t>>& blocks);

}  // namespace mcgc
