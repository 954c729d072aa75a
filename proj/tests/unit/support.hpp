#pragma once

#include "mcgc/sequence.hpp"
#include "oracles.hpp"

inline oracle::Seq to_seq(const mcgc::ColorSequence& s) {
  return oracle::Seq(s.colors().begin(), s.colors().end());
}

inline mcgc::ColorSequence make_seq(const oracle::Seq& s, std::size_t k,
                                    mcgc::Mode mode = mcgc::Mode::cyclic) {
  return mcgc::ColorSequence(std::vector<mcgc::Color>(s.begin(), s.end()), k,
                             mode);
}

inline mcgc::ColorSequence from_digits(const std::string& digits,
                                       mcgc::Mode mode = mcgc::Mode::cyclic) {
  const auto colors = mcgc::parse_digits(digits);
  const auto k = *std::max_element(colors.begin(), colors.end());
  return mcgc::ColorSequence(colors, k, mode);
}
