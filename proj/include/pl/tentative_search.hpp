#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pl/envelope_tree.hpp"

namespace pl {

enum class CaseLabel { Case1, Case2, Case3 };

// Role a node plays in the search. In the left envelope a leaf's reference
// point is its left endpoint; in the right envelope its right endpoint.
// Inner nodes use their breakpoint in both roles.
enum class SearchRole { LeftEnv, RightEnv };

const Point& node_point(const LambdaNode* n, SearchRole role);

// The three-way outcome of comparing the current nodes u (left envelope)
// and v (right envelope). Case 3 holds iff u's point is strictly below the
// two-curve envelope at v and v's point is strictly below the one at u;
// symbolic endpoints count as strictly below. Otherwise Case 1 when u's
// point is on or above, else Case 2.
CaseLabel classify(const LambdaNode* u, const LambdaNode* v);

struct Intersection {
    Point q;
    PseudoLine left_line, right_line;
};

struct SearchStats {
    unsigned iterations = 0;
    unsigned classify_calls = 0;
};

// One record per loop iteration: the state on entry plus the case(s) taken.
struct TraceStep {
    const LambdaNode* u;
    const LambdaNode* v;
    std::vector<const LambdaNode*> u_stack, v_stack;
    CaseLabel primary;
    std::optional<CaseLabel> secondary;
};

struct SearchTrace {
    std::vector<TraceStep> steps;
    const LambdaNode* u_star = nullptr;
    const LambdaNode* v_star = nullptr;
};

// Finds the intersection point q of two lower envelopes where every
// pseudo-line of the left envelope precedes every pseudo-line of the right
// envelope in the order at x = -infinity. Returns q together with the
// pseudo-lines of the two leaves whose half-open segments contain it
// (right-closed on the left envelope, left-closed on the right one).
// Runs in O(log n) via tentative binary search with two stacks.
Intersection find_intersection(const EnvelopeTree& left_env, const EnvelopeTree& right_env,
                               SearchStats* stats = nullptr, SearchTrace* trace = nullptr);

struct TraceChecks {
    bool invariant1 = true;        // stack prefixes/suffixes are contiguous and cover u*/v*
    bool progress = true;          // every iteration pops or discovers a new path node
    bool push_discipline = true;   // pushes happen only in discovering iterations
};

// Replays a trace against the independently computed correct paths.
TraceChecks check_trace(const SearchTrace& trace, const EnvelopeTree& left_env, const EnvelopeTree& right_env,
                        std::span<const LambdaNode* const> path_left,
                        std::span<const LambdaNode* const> path_right);

// Convenience wrapper for the first of the checks.
bool check_invariant1(const SearchTrace& trace, const EnvelopeTree& left_env, const EnvelopeTree& right_env,
                      std::span<const LambdaNode* const> path_left,
                      std::span<const LambdaNode* const> path_right);

}  // namespace pl
