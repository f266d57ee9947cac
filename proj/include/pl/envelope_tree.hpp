#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pl/geometry.hpp"

namespace pl {

// One maximal piece of a lower envelope: a pseudo-line together with the
// x-interval where it realizes the envelope. Either endpoint may be a
// symbolic infinity. Both endpoints are stored; algorithms that follow a
// half-open convention read only one of them per role.
struct EnvelopeSegment {
    PseudoLine line;
    Point left, right;
};

// Node of the balanced leaf-oriented tree. A leaf carries a segment; an
// inner node carries the common point of the last segment in its left
// subtree and the first segment in its right subtree, plus those two
// incident pseudo-lines.
struct LambdaNode {
    std::unique_ptr<LambdaNode> left, right;
    int height = 0;

    EnvelopeSegment seg;  // leaf payload

    Point bp;                    // inner: breakpoint
    PseudoLine line_before;      // inner: line of the last leaf on the left
    PseudoLine line_after;       // inner: line of the first leaf on the right

    bool is_leaf() const { return !left; }
};

// Balanced search tree over the consecutive segments of a lower envelope
// (the Lambda structure). Height-balanced (AVL); split, join and locate run
// in O(log n). Move-only; use clone() for an explicit deep copy.
class EnvelopeTree {
public:
    EnvelopeTree() = default;
    EnvelopeTree(EnvelopeTree&&) = default;
    EnvelopeTree& operator=(EnvelopeTree&&) = default;
    EnvelopeTree(const EnvelopeTree&) = delete;
    EnvelopeTree& operator=(const EnvelopeTree&) = delete;

    // One leaf spanning (-inf, +inf) on pl.
    static EnvelopeTree singleton(const PseudoLine& pl);

    // Balanced build from a contiguous, x-sorted segment list.
    static EnvelopeTree from_segments(std::vector<EnvelopeSegment> segs);

    bool empty() const { return !root_; }
    std::size_t size() const;
    int height() const { return root_ ? root_->height : -1; }
    const LambdaNode* root() const { return root_.get(); }

    Point span_left() const;
    Point span_right() const;

    // The pseudo-line of the unique leaf whose segment contains x0; ties at a
    // breakpoint resolve to the left segment.
    const PseudoLine& locate(const Rational& x0) const;

    std::vector<EnvelopeSegment> segments() const;

    // Whitespace-separated "<id>@[<xl>,<xr>]" tokens, sentinels as -inf/+inf.
    std::string dump() const;

    EnvelopeTree clone() const;

    // Splits into (x <= q.x, x >= q.x). A segment hit strictly inside is cut
    // into two segments sharing endpoint q. Throws OutOfSpan if q.x is
    // outside the tree's x-range.
    static std::pair<EnvelopeTree, EnvelopeTree> split_at(EnvelopeTree t, const Point& q);

    // Concatenation at the shared boundary point q. Boundary leaves carrying
    // the same pseudo-line (a previously cut segment) are merged back into
    // one leaf. Throws MismatchedBoundary / OrderViolation.
    static EnvelopeTree join(EnvelopeTree t1, EnvelopeTree t2, const Point& q);

    // Hiding splits used by the dynamic structure: the leaf whose segment
    // strictly contains q stays whole on the kept side with its cache
    // clipped to q; the far side starts at the next whole segment. Keeps
    // every pseudo-line in exactly one physical leaf.
    static std::pair<EnvelopeTree, EnvelopeTree> split_keep_left(EnvelopeTree t, const Point& q);
    static std::pair<EnvelopeTree, EnvelopeTree> split_keep_right(EnvelopeTree t, const Point& q);

    // Inverse of the hiding splits: re-attach a hidden suffix (or prefix) to
    // a visible part, restoring the clipped boundary cache from the hidden
    // side (or to the unbounded sentinel when the hidden part is empty).
    static EnvelopeTree rejoin_suffix(EnvelopeTree visible, EnvelopeTree hidden);
    static EnvelopeTree rejoin_prefix(EnvelopeTree hidden, EnvelopeTree visible);

    // Asserts all structural invariants; throws ValidationError naming the
    // violated one.
    void check() const;

private:
    explicit EnvelopeTree(std::unique_ptr<LambdaNode> r) : root_(std::move(r)) {}

    enum class SplitPolicy { Cut, KeepLeft, KeepRight };
    static std::pair<EnvelopeTree, EnvelopeTree> split_impl(EnvelopeTree t, const Point& q, SplitPolicy policy);

    std::unique_ptr<LambdaNode> root_;
};

}  // namespace pl
