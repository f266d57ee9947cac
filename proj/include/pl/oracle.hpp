#pragma once

#include <vector>

#include "pl/envelope_tree.hpp"

namespace pl {
// Brute-force references, deliberately simple and independent of the tree
// machinery; they share only the geometry kernel with the main code paths.
namespace oracle {

// Reference form of a lower envelope: a contiguous, x-sorted segment list
// covering (-inf, +inf).
using EnvelopeDescription = std::vector<EnvelopeSegment>;

// Pointwise-minimum envelope by exhaustion: all pairwise crossings, argmin
// at an exact rational midpoint of every open interval. Quadratic and proud
// of it.
EnvelopeDescription brute_envelope(const std::vector<PseudoLine>& lines);

// Argmin of evaluate at x0; ties resolve to the curve that is smaller in
// the order at -inf (the left segment at a breakpoint).
const PseudoLine& brute_ray_shoot(const std::vector<PseudoLine>& lines, const Rational& x0);

struct BruteIntersection {
    Point q;
    PseudoLine left_line, right_line;
};

// Scans both segment lists in x-order and returns the unique pair whose
// curves cross inside both segments under the half-open conventions
// (right-closed in the left envelope, left-closed in the right one).
// Throws PreconditionViolation when no or multiple such pairs exist.
BruteIntersection brute_intersection(const EnvelopeDescription& left_env,
                                     const EnvelopeDescription& right_env);

// Root-to-leaf paths to the leaves containing the intersection point of the
// two trees' envelopes, computed from the trees' segment lists via
// brute_intersection.
std::pair<std::vector<const LambdaNode*>, std::vector<const LambdaNode*>>
true_paths(const EnvelopeTree& left_env, const EnvelopeTree& right_env);

}  // namespace oracle
}  // namespace pl
