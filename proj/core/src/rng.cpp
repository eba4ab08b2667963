#include "maxvisit/rng.hpp"

namespace maxvisit {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counter_word(std::uint64_t seed, std::uint64_t path, std::uint64_t step) {
  return mix64(mix64(mix64(seed) ^ path) ^ step);
}

bool bernoulli_from_word(std::uint64_t word, const Rational& p) {
  // u < p  <=>  word * den(p) < num(p) * 2^64.
  Int lhs = Int(word) * denominator(p);
  Int rhs = numerator(p);
  rhs <<= 64;
  return lhs < rhs;
}

}  // namespace maxvisit
