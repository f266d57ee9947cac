#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pl/oracle.hpp"

namespace pl::gen {

// Deterministic 64-bit generator (splitmix64). Hand-rolled so that streams
// are identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    long range(long lo, long hi);              // uniform in [lo, hi]
    bool chance(unsigned percent);

private:
    std::uint64_t state_;
};

// n curves of one family with pairwise-distinct slopes/shifts (admissible as
// a set) and random second coefficients.
std::vector<PseudoLine> random_admissible_set(Rng& rng, Family family, std::size_t n,
                                              const std::string& id_prefix = "g");

// A random lower envelope with exactly n segments, built directly as a
// concave chain: strictly decreasing slopes glued continuously at random
// breakpoints (each chain line lies above the chain elsewhere, so the chain
// is the envelope of its own lines). Parabola envelopes are the same chains
// shifted by x^2, since (x-c)^2 + d = x^2 + (-2c)x + (c^2 + d).
oracle::EnvelopeDescription random_envelope(Rng& rng, Family family, std::size_t n,
                                            const std::string& id_prefix = "e");

// Two random envelopes whose defining sets are separated in the order at
// x = -infinity (every curve of the first precedes every curve of the
// second): one strictly decreasing slope run split between the sides, with
// independent breakpoints and intercepts, so the envelopes cross at a
// single point in a random position inside both chains.
std::pair<oracle::EnvelopeDescription, oracle::EnvelopeDescription>
separated_envelope_pair(Rng& rng, Family family, std::size_t n_left, std::size_t n_right);

EnvelopeTree tree_from_description(const oracle::EnvelopeDescription& d);

}  // namespace pl::gen
