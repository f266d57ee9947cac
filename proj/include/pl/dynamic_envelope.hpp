#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pl/envelope_tree.hpp"

namespace pl {

// Fully dynamic lower envelope of a homogeneous set of pseudo-lines.
//
// A balanced leaf-oriented tree over the pseudo-lines in the order at
// x = -infinity. Every node owns the part of its subtree's envelope that is
// hidden from its parent (a suffix for left children, a prefix for right
// children); the root owns the entire envelope. Inner nodes cache the
// bridge point where the children's envelopes intersect, so updates can
// reassemble envelopes on the way down and re-hide them on the way up.
// Insert and erase take O(log^2 n); ray shooting takes O(log n); storage is
// linear (every pseudo-line lives in exactly one envelope-tree leaf).
//
// Single writer; ray_shoot is read-only and may run concurrently with other
// reads but not with updates.
class DynamicEnvelope {
public:
    explicit DynamicEnvelope(Family family);
    ~DynamicEnvelope();
    DynamicEnvelope(DynamicEnvelope&&) noexcept;
    DynamicEnvelope& operator=(DynamicEnvelope&&) noexcept;

    Family family() const { return family_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // Throws DuplicateId, FamilyMismatch, or InadmissiblePair (a member with
    // the same slope/shift already exists).
    void insert(const PseudoLine& pl);

    // Throws UnknownId.
    void erase(const std::string& id);

    // The envelope pseudo-line at x0; ties at a breakpoint resolve to the
    // left segment. Throws EmptyStructure.
    const PseudoLine& ray_shoot(const Rational& x0) const;

    // The root's envelope tree: the lower envelope of the current set.
    const EnvelopeTree& envelope() const;

    std::vector<PseudoLine> members() const;

    // Leaf count summed over every node's envelope tree; equals size().
    std::size_t total_lambda_leaves() const;

    // Asserts every structural invariant, reconstructing each node's full
    // envelope from the hidden parts. Throws ValidationError naming the
    // violated invariant.
    void validate() const;

private:
    struct Node;
    using NodePtr = std::unique_ptr<Node>;

    static std::pair<EnvelopeTree, EnvelopeTree> pull_down(Node* n, EnvelopeTree full);
    static EnvelopeTree recompute(Node* n, EnvelopeTree full_left, EnvelopeTree full_right);
    static std::pair<NodePtr, EnvelopeTree> rebalance_recompute(NodePtr n, EnvelopeTree fl, EnvelopeTree fr);
    static std::pair<NodePtr, EnvelopeTree> insert_rec(NodePtr n, const PseudoLine& pl, EnvelopeTree full);
    static std::pair<NodePtr, EnvelopeTree> erase_rec(NodePtr n, const PseudoLine& target, EnvelopeTree full);

    Family family_;
    NodePtr root_;
    EnvelopeTree empty_envelope_;
    std::map<std::string, PseudoLine> members_;
    std::map<Rational, std::string> key_index_;  // slope/shift -> id

    friend struct DynamicEnvelopeTestAccess;
};

// Test-only hooks for corrupting internals (negative controls).
struct DynamicEnvelopeTestAccess {
    // The max pointer of the root, if the root is an inner node.
    static PseudoLine* root_max(DynamicEnvelope& s);
};

}  // namespace pl
