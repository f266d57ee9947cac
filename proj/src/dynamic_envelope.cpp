#include "pl/dynamic_envelope.hpp"

#include <algorithm>

#include "pl/errors.hpp"
#include "pl/tentative_search.hpp"

namespace pl {

struct DynamicEnvelope::Node {
    NodePtr left, right;
    int height = 0;
    PseudoLine max;       // maximum pseudo-line in the subtree; for a leaf, its line
    EnvelopeTree hidden;  // part of this subtree's envelope not on the parent's; full at the root
    Point bridge;         // inner: intersection of the children's envelopes

    bool is_leaf() const { return !left; }
};

// Reassembles both children's full envelopes from this node's full envelope,
// emptying the children's hidden parts.
DynamicEnvelope::DynamicEnvelope(Family family) : family_(family) {}
DynamicEnvelope::~DynamicEnvelope() = default;
DynamicEnvelope::DynamicEnvelope(DynamicEnvelope&&) noexcept = default;
DynamicEnvelope& DynamicEnvelope::operator=(DynamicEnvelope&&) noexcept = default;

std::pair<EnvelopeTree, EnvelopeTree> DynamicEnvelope::pull_down(Node* n, EnvelopeTree full) {
    auto [vis_l, vis_r] = EnvelopeTree::split_keep_left(std::move(full), n->bridge);
    EnvelopeTree fl = EnvelopeTree::rejoin_suffix(std::move(vis_l), std::move(n->left->hidden));
    EnvelopeTree fr = EnvelopeTree::rejoin_prefix(std::move(n->right->hidden), std::move(vis_r));
    n->left->hidden = EnvelopeTree();
    n->right->hidden = EnvelopeTree();
    return {std::move(fl), std::move(fr)};
}

// Given both children's full envelopes, finds the new bridge, hides the
// invisible parts at the children, and returns this node's full envelope.
EnvelopeTree DynamicEnvelope::recompute(Node* n, EnvelopeTree full_left, EnvelopeTree full_right) {
    Intersection is = find_intersection(full_left, full_right);
    auto [visible_l, hid_l] = EnvelopeTree::split_keep_left(std::move(full_left), is.q);
    auto [hid_r, visible_r] = EnvelopeTree::split_keep_right(std::move(full_right), is.q);
    n->left->hidden = std::move(hid_l);
    n->right->hidden = std::move(hid_r);
    n->bridge = is.q;
    n->max = n->right->max;
    n->height = 1 + std::max(n->left->height, n->right->height);
    return EnvelopeTree::join(std::move(visible_l), std::move(visible_r), is.q);
}

std::pair<DynamicEnvelope::NodePtr, EnvelopeTree>
DynamicEnvelope::rebalance_recompute(NodePtr n, EnvelopeTree fl, EnvelopeTree fr) {
    int hl = n->left->height;
    int hr = n->right->height;
    if (hl > hr + 1) {
        NodePtr x = std::move(n->left);
        auto [fa, fb] = pull_down(x.get(), std::move(fl));
        if (x->left->height >= x->right->height) {
            // single right rotation
            n->left = std::move(x->right);
            EnvelopeTree fn = recompute(n.get(), std::move(fb), std::move(fr));
            x->right = std::move(n);
            EnvelopeTree fx = recompute(x.get(), std::move(fa), std::move(fn));
            return {std::move(x), std::move(fx)};
        }
        // left-right double rotation
        NodePtr y = std::move(x->right);
        auto [fb1, fb2] = pull_down(y.get(), std::move(fb));
        x->right = std::move(y->left);
        EnvelopeTree fx = recompute(x.get(), std::move(fa), std::move(fb1));
        n->left = std::move(y->right);
        EnvelopeTree fn = recompute(n.get(), std::move(fb2), std::move(fr));
        y->left = std::move(x);
        y->right = std::move(n);
        EnvelopeTree fy = recompute(y.get(), std::move(fx), std::move(fn));
        return {std::move(y), std::move(fy)};
    }
    if (hr > hl + 1) {
        NodePtr x = std::move(n->right);
        auto [fb, fc] = pull_down(x.get(), std::move(fr));
        if (x->right->height >= x->left->height) {
            // single left rotation
            n->right = std::move(x->left);
            EnvelopeTree fn = recompute(n.get(), std::move(fl), std::move(fb));
            x->left = std::move(n);
            EnvelopeTree fx = recompute(x.get(), std::move(fn), std::move(fc));
            return {std::move(x), std::move(fx)};
        }
        // right-left double rotation
        NodePtr y = std::move(x->left);
        auto [fb1, fb2] = pull_down(y.get(), std::move(fb));
        x->left = std::move(y->right);
        EnvelopeTree fx = recompute(x.get(), std::move(fb2), std::move(fc));
        n->right = std::move(y->left);
        EnvelopeTree fn = recompute(n.get(), std::move(fl), std::move(fb1));
        y->left = std::move(n);
        y->right = std::move(x);
        EnvelopeTree fy = recompute(y.get(), std::move(fn), std::move(fx));
        return {std::move(y), std::move(fy)};
    }
    EnvelopeTree f = recompute(n.get(), std::move(fl), std::move(fr));
    return {std::move(n), std::move(f)};
}

std::pair<DynamicEnvelope::NodePtr, EnvelopeTree>
DynamicEnvelope::insert_rec(NodePtr n, const PseudoLine& pl, EnvelopeTree full) {
    if (n->is_leaf()) {
        auto fresh = std::make_unique<Node>();
        fresh->max = pl;
        EnvelopeTree f_fresh = EnvelopeTree::singleton(pl);

        auto m = std::make_unique<Node>();
        EnvelopeTree fl, fr;
        if (below_at_neg_inf(pl, n->max)) {
            m->left = std::move(fresh);
            m->right = std::move(n);
            fl = std::move(f_fresh);
            fr = std::move(full);
        } else {
            m->left = std::move(n);
            m->right = std::move(fresh);
            fl = std::move(full);
            fr = std::move(f_fresh);
        }
        EnvelopeTree f = recompute(m.get(), std::move(fl), std::move(fr));
        return {std::move(m), std::move(f)};
    }

    auto [fl, fr] = pull_down(n.get(), std::move(full));
    if (below_at_neg_inf(pl, n->left->max)) {
        auto [child, f] = insert_rec(std::move(n->left), pl, std::move(fl));
        n->left = std::move(child);
        fl = std::move(f);
    } else {
        auto [child, f] = insert_rec(std::move(n->right), pl, std::move(fr));
        n->right = std::move(child);
        fr = std::move(f);
    }
    return rebalance_recompute(std::move(n), std::move(fl), std::move(fr));
}

std::pair<DynamicEnvelope::NodePtr, EnvelopeTree>
DynamicEnvelope::erase_rec(NodePtr n, const PseudoLine& target, EnvelopeTree full) {
    if (n->is_leaf()) {
        if (n->max.id != target.id)
            throw InternalError("erase descended to the wrong leaf");
        return {nullptr, EnvelopeTree()};
    }

    auto [fl, fr] = pull_down(n.get(), std::move(full));
    bool go_left = target.id == n->left->max.id || below_at_neg_inf(target, n->left->max);
    if (go_left) {
        auto [child, f] = erase_rec(std::move(n->left), target, std::move(fl));
        if (!child) return {std::move(n->right), std::move(fr)};  // parent collapses into the sibling
        n->left = std::move(child);
        fl = std::move(f);
    } else {
        auto [child, f] = erase_rec(std::move(n->right), target, std::move(fr));
        if (!child) return {std::move(n->left), std::move(fl)};
        n->right = std::move(child);
        fr = std::move(f);
    }
    return rebalance_recompute(std::move(n), std::move(fl), std::move(fr));
}

void DynamicEnvelope::insert(const PseudoLine& pl) {
    if (pl.family != family_)
        throw FamilyMismatch("curve " + pl.id + " is not from the structure's family");
    if (members_.count(pl.id)) throw DuplicateId("id " + pl.id + " already present");
    if (auto it = key_index_.find(pl.a); it != key_index_.end())
        throw InadmissiblePair("curve " + pl.id + " shares its " +
                               (family_ == Family::Line ? std::string("slope") : std::string("shift")) +
                               " with member " + it->second);

    if (!root_) {
        root_ = std::make_unique<Node>();
        root_->max = pl;
        root_->hidden = EnvelopeTree::singleton(pl);
    } else {
        EnvelopeTree full = std::move(root_->hidden);
        auto [r, f] = insert_rec(std::move(root_), pl, std::move(full));
        root_ = std::move(r);
        root_->hidden = std::move(f);
    }
    members_.emplace(pl.id, pl);
    key_index_.emplace(pl.a, pl.id);
}

void DynamicEnvelope::erase(const std::string& id) {
    auto it = members_.find(id);
    if (it == members_.end()) throw UnknownId("id " + id + " not present");

    if (root_->is_leaf()) {
        root_.reset();
    } else {
        EnvelopeTree full = std::move(root_->hidden);
        auto [r, f] = erase_rec(std::move(root_), it->second, std::move(full));
        root_ = std::move(r);
        root_->hidden = std::move(f);
    }
    key_index_.erase(it->second.a);
    members_.erase(it);
}

const PseudoLine& DynamicEnvelope::ray_shoot(const Rational& x0) const {
    if (!root_) throw EmptyStructure("ray_shoot on an empty structure");
    return root_->hidden.locate(x0);
}

const EnvelopeTree& DynamicEnvelope::envelope() const {
    return root_ ? root_->hidden : empty_envelope_;
}

std::vector<PseudoLine> DynamicEnvelope::members() const {
    std::vector<PseudoLine> out;
    out.reserve(members_.size());
    for (const auto& [id, pl] : members_) out.push_back(pl);
    return out;
}

std::size_t DynamicEnvelope::total_lambda_leaves() const {
    struct Walk {
        std::size_t total = 0;
        void operator()(const Node* n) {
            if (!n) return;
            total += n->hidden.size();
            if (!n->is_leaf()) {
                (*this)(n->left.get());
                (*this)(n->right.get());
            }
        }
    } walk;
    walk(root_.get());
    return walk.total;
}

namespace {

struct SubtreeSummary {
    const PseudoLine* min;
    const PseudoLine* max;
    std::size_t leaves;
};

}  // namespace

void DynamicEnvelope::validate() const {
    if (!root_) {
        if (!members_.empty()) throw ValidationError("empty tree but nonempty member index");
        return;
    }
    struct Checker {
        SubtreeSummary walk(const Node* n, const EnvelopeTree& full) {
            full.check();
            if (full.empty() || full.span_left().kind != Point::Kind::NegInf ||
                full.span_right().kind != Point::Kind::PosInf)
                throw ValidationError("reconstructed envelope does not span the whole line");
            if (n->is_leaf()) {
                if (n->height != 0) throw ValidationError("leaf with nonzero height");
                auto segs = full.segments();
                if (segs.size() != 1 || segs[0].line.id != n->max.id)
                    throw ValidationError("leaf envelope is not its own pseudo-line");
                return {&n->max, &n->max, 1};
            }
            if (!n->bridge.is_finite()) throw ValidationError("inner node without a finite bridge");
            auto [vis_l, vis_r] = EnvelopeTree::split_keep_left(full.clone(), n->bridge);
            EnvelopeTree fl = EnvelopeTree::rejoin_suffix(std::move(vis_l), n->left->hidden.clone());
            EnvelopeTree fr = EnvelopeTree::rejoin_prefix(n->right->hidden.clone(), std::move(vis_r));
            if (evaluate(fl.locate(n->bridge.x), n->bridge.x) != n->bridge.y)
                throw ValidationError("bridge point is not on the left child's envelope");
            if (evaluate(fr.locate(n->bridge.x), n->bridge.x) != n->bridge.y)
                throw ValidationError("bridge point is not on the right child's envelope");
            SubtreeSummary l = walk(n->left.get(), fl);
            SubtreeSummary r = walk(n->right.get(), fr);
            if (n->height != 1 + std::max(n->left->height, n->right->height))
                throw ValidationError("stale height");
            if (std::abs(n->left->height - n->right->height) > 1)
                throw ValidationError("balance violated");
            if (!below_at_neg_inf(*l.max, *r.min))
                throw ValidationError("leaves out of order at -inf");
            if (n->max.id != r.max->id) throw ValidationError("stale max pointer");
            return {l.min, r.max, l.leaves + r.leaves};
        }
    } checker;
    SubtreeSummary s = checker.walk(root_.get(), root_->hidden);
    if (s.leaves != members_.size()) throw ValidationError("leaf count disagrees with the member index");
    if (total_lambda_leaves() != members_.size())
        throw ValidationError("storage is not linear: envelope leaves != member count");
}

PseudoLine* DynamicEnvelopeTestAccess::root_max(DynamicEnvelope& s) {
    if (!s.root_ || s.root_->is_leaf()) return nullptr;
    return &s.root_->max;
}

}  // namespace pl
