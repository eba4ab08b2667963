#pragma once

#include "maxvisit/rational.hpp"

#include <cstdint>

namespace maxvisit {

// Counter-based deterministic stream: one 64-bit word per (seed, path, step)
// key, so path i is identical regardless of batching or worker count.
std::uint64_t counter_word(std::uint64_t seed, std::uint64_t path, std::uint64_t step);

// Exact Bernoulli draw: treat `word` as a uniform u = word / 2^64 and test
// u < p by cross-multiplication, with no float rounding at rational thresholds.
bool bernoulli_from_word(std::uint64_t word, const Rational& p);

}  // namespace maxvisit
