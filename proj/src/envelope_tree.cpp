#include "pl/envelope_tree.hpp"

#include <cmath>
#include <sstream>

#include "pl/counters.hpp"
#include "pl/errors.hpp"

namespace pl {

namespace {

using NodePtr = std::unique_ptr<LambdaNode>;

int height_of(const NodePtr& n) { return n ? n->height : -1; }

void update_height(LambdaNode* n) {
    n->height = 1 + std::max(height_of(n->left), height_of(n->right));
}

int balance_factor(const LambdaNode* n) {
    return height_of(n->left) - height_of(n->right);
}

LambdaNode* first_leaf(LambdaNode* n) {
    while (!n->is_leaf()) n = n->left.get();
    return n;
}

LambdaNode* last_leaf(LambdaNode* n) {
    while (!n->is_leaf()) n = n->right.get();
    return n;
}

const LambdaNode* first_leaf(const LambdaNode* n) {
    while (!n->is_leaf()) n = n->left.get();
    return n;
}

const LambdaNode* last_leaf(const LambdaNode* n) {
    while (!n->is_leaf()) n = n->right.get();
    return n;
}

NodePtr make_leaf(EnvelopeSegment seg) {
    auto n = std::make_unique<LambdaNode>();
    n->seg = std::move(seg);
    return n;
}

// Inner node over two adjacent subtrees; the breakpoint is the shared
// boundary of the two boundary leaves.
NodePtr make_inner(NodePtr l, NodePtr r) {
    const LambdaNode* ll = last_leaf(l.get());
    const LambdaNode* rf = first_leaf(r.get());
    if (ll->seg.right != rf->seg.left)
        throw InternalError("envelope tree: adjacent subtrees do not share a boundary point");
    auto n = std::make_unique<LambdaNode>();
    n->bp = ll->seg.right;
    n->line_before = ll->seg.line;
    n->line_after = rf->seg.line;
    n->left = std::move(l);
    n->right = std::move(r);
    update_height(n.get());
    return n;
}

NodePtr rotate_left(NodePtr n) {
    NodePtr y = std::move(n->right);
    n->right = std::move(y->left);
    update_height(n.get());
    y->left = std::move(n);
    update_height(y.get());
    return y;
}

NodePtr rotate_right(NodePtr n) {
    NodePtr x = std::move(n->left);
    n->left = std::move(x->right);
    update_height(n.get());
    x->right = std::move(n);
    update_height(x.get());
    return x;
}

NodePtr rebalance(NodePtr n) {
    update_height(n.get());
    int bf = balance_factor(n.get());
    if (bf > 1) {
        if (balance_factor(n->left.get()) < 0) n->left = rotate_left(std::move(n->left));
        return rotate_right(std::move(n));
    }
    if (bf < -1) {
        if (balance_factor(n->right.get()) > 0) n->right = rotate_right(std::move(n->right));
        return rotate_left(std::move(n));
    }
    return n;
}

// Balanced concatenation of two adjacent trees.
NodePtr concat(NodePtr l, NodePtr r) {
    if (!l) return r;
    if (!r) return l;
    if (std::abs(l->height - r->height) <= 1) return make_inner(std::move(l), std::move(r));
    if (l->height > r->height) {
        l->right = concat(std::move(l->right), std::move(r));
        return rebalance(std::move(l));
    }
    r->left = concat(std::move(l), std::move(r->left));
    return rebalance(std::move(r));
}

NodePtr remove_last(NodePtr n, EnvelopeSegment& out) {
    if (n->is_leaf()) {
        out = std::move(n->seg);
        return nullptr;
    }
    n->right = remove_last(std::move(n->right), out);
    if (!n->right) return std::move(n->left);
    return rebalance(std::move(n));
}

void require_on_curve(const PseudoLine& line, const Point& q) {
    if (evaluate(line, q.x) != q.y)
        throw PreconditionViolation("split point " + q.str() + " is not on the envelope (curve " + line.id + ")");
}

}  // namespace

EnvelopeTree EnvelopeTree::singleton(const PseudoLine& pl) {
    return EnvelopeTree(make_leaf(EnvelopeSegment{pl, Point::neg_inf(), Point::pos_inf()}));
}

EnvelopeTree EnvelopeTree::from_segments(std::vector<EnvelopeSegment> segs) {
    if (segs.empty()) return {};
    struct Builder {
        std::vector<EnvelopeSegment>& s;
        NodePtr build(std::size_t lo, std::size_t hi) {
            if (hi - lo == 1) return make_leaf(std::move(s[lo]));
            std::size_t mid = lo + (hi - lo) / 2;
            return make_inner(build(lo, mid), build(mid, hi));
        }
    } b{segs};
    return EnvelopeTree(b.build(0, segs.size()));
}

std::size_t EnvelopeTree::size() const {
    std::size_t n = 0;
    struct Walk {
        std::size_t& n;
        void operator()(const LambdaNode* v) {
            if (!v) return;
            if (v->is_leaf()) { ++n; return; }
            (*this)(v->left.get());
            (*this)(v->right.get());
        }
    } walk{n};
    walk(root_.get());
    return n;
}

Point EnvelopeTree::span_left() const {
    if (!root_) throw EmptyStructure("span of empty envelope tree");
    return first_leaf(root_.get())->seg.left;
}

Point EnvelopeTree::span_right() const {
    if (!root_) throw EmptyStructure("span of empty envelope tree");
    return last_leaf(root_.get())->seg.right;
}

const PseudoLine& EnvelopeTree::locate(const Rational& x0) const {
    if (!root_) throw EmptyStructure("locate on empty envelope tree");
    const LambdaNode* n = root_.get();
    while (!n->is_leaf()) {
        ++counters().locate_steps;
        // ties at a breakpoint go to the left segment (owner of its right endpoint)
        n = (x0 <= n->bp.x) ? n->left.get() : n->right.get();
    }
    ++counters().locate_steps;
    return n->seg.line;
}

std::vector<EnvelopeSegment> EnvelopeTree::segments() const {
    std::vector<EnvelopeSegment> out;
    struct Walk {
        std::vector<EnvelopeSegment>& out;
        void operator()(const LambdaNode* v) {
            if (!v) return;
            if (v->is_leaf()) { out.push_back(v->seg); return; }
            (*this)(v->left.get());
            (*this)(v->right.get());
        }
    } walk{out};
    walk(root_.get());
    return out;
}

std::string EnvelopeTree::dump() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : segments()) {
        if (!first) os << ' ';
        first = false;
        os << s.line.id << "@[" << (s.left.is_finite() ? s.left.x.str() : std::string("-inf")) << ","
           << (s.right.is_finite() ? s.right.x.str() : std::string("+inf")) << "]";
    }
    return os.str();
}

namespace {
NodePtr clone_node(const LambdaNode* n) {
    if (!n) return nullptr;
    auto c = std::make_unique<LambdaNode>();
    c->height = n->height;
    c->seg = n->seg;
    c->bp = n->bp;
    c->line_before = n->line_before;
    c->line_after = n->line_after;
    c->left = clone_node(n->left.get());
    c->right = clone_node(n->right.get());
    return c;
}
}  // namespace

EnvelopeTree EnvelopeTree::clone() const { return EnvelopeTree(clone_node(root_.get())); }

namespace {

std::pair<NodePtr, NodePtr> split_node(NodePtr n, const Point& q, int policy_cut, bool keep_left) {
    if (n->is_leaf()) {
        int cl = cmp_x(n->seg.left, q.x);
        int cr = cmp_x(n->seg.right, q.x);
        if (cl == 0) return {nullptr, std::move(n)};
        if (cr == 0) return {std::move(n), nullptr};
        if (cl > 0 || cr < 0)
            throw InternalError("envelope tree split: navigation landed outside the segment");
        if (policy_cut) {
            require_on_curve(n->seg.line, q);
            auto piece = make_leaf(EnvelopeSegment{n->seg.line, q, n->seg.right});
            n->seg.right = q;
            return {std::move(n), std::move(piece)};
        }
        if (keep_left) {
            require_on_curve(n->seg.line, q);
            n->seg.right = q;
            return {std::move(n), nullptr};
        }
        require_on_curve(n->seg.line, q);
        n->seg.left = q;
        return {nullptr, std::move(n)};
    }
    if (q.x < n->bp.x) {
        auto [a, b] = split_node(std::move(n->left), q, policy_cut, keep_left);
        return {std::move(a), concat(std::move(b), std::move(n->right))};
    }
    if (n->bp.x < q.x) {
        auto [a, b] = split_node(std::move(n->right), q, policy_cut, keep_left);
        return {concat(std::move(n->left), std::move(a)), std::move(b)};
    }
    return {std::move(n->left), std::move(n->right)};
}

}  // namespace

std::pair<EnvelopeTree, EnvelopeTree> EnvelopeTree::split_impl(EnvelopeTree t, const Point& q, SplitPolicy policy) {
    ++counters().split;
    if (!q.is_finite()) throw PreconditionViolation("split point must be finite");
    if (t.empty()) throw OutOfSpan("split of empty envelope tree");
    if (cmp_x(t.span_left(), q.x) > 0 || cmp_x(t.span_right(), q.x) < 0)
        throw OutOfSpan("split point x=" + q.x.str() + " outside the tree's x-range");
    auto [a, b] = split_node(std::move(t.root_), q, policy == SplitPolicy::Cut ? 1 : 0,
                             policy == SplitPolicy::KeepLeft);
    return {EnvelopeTree(std::move(a)), EnvelopeTree(std::move(b))};
}

std::pair<EnvelopeTree, EnvelopeTree> EnvelopeTree::split_at(EnvelopeTree t, const Point& q) {
    return split_impl(std::move(t), q, SplitPolicy::Cut);
}

std::pair<EnvelopeTree, EnvelopeTree> EnvelopeTree::split_keep_left(EnvelopeTree t, const Point& q) {
    return split_impl(std::move(t), q, SplitPolicy::KeepLeft);
}

std::pair<EnvelopeTree, EnvelopeTree> EnvelopeTree::split_keep_right(EnvelopeTree t, const Point& q) {
    return split_impl(std::move(t), q, SplitPolicy::KeepRight);
}

EnvelopeTree EnvelopeTree::join(EnvelopeTree t1, EnvelopeTree t2, const Point& q) {
    ++counters().join;
    if (t1.empty() || t2.empty()) throw MismatchedBoundary("join with an empty side");
    LambdaNode* l = last_leaf(t1.root_.get());
    LambdaNode* r = first_leaf(t2.root_.get());
    if (l->seg.right != q || r->seg.left != q)
        throw MismatchedBoundary("join boundaries disagree with " + q.str());
    if (l->seg.line.id == r->seg.line.id) {
        // inverse of a cut: merge the two pieces back into one leaf
        EnvelopeSegment cut;
        t1.root_ = remove_last(std::move(t1.root_), cut);
        r->seg.left = cut.left;
        if (!t1.root_) return t2;
    } else if (!below_at_neg_inf(l->seg.line, r->seg.line)) {
        throw OrderViolation("join would break the segment order: " + l->seg.line.id +
                             " is not below " + r->seg.line.id + " at -inf");
    }
    return EnvelopeTree(concat(std::move(t1.root_), std::move(t2.root_)));
}

EnvelopeTree EnvelopeTree::rejoin_suffix(EnvelopeTree visible, EnvelopeTree hidden) {
    ++counters().join;
    if (visible.empty()) throw InternalError("rejoin_suffix: empty visible part");
    LambdaNode* l = last_leaf(visible.root_.get());
    if (hidden.empty()) {
        l->seg.right = Point::pos_inf();
        return visible;
    }
    l->seg.right = first_leaf(hidden.root_.get())->seg.left;
    return EnvelopeTree(concat(std::move(visible.root_), std::move(hidden.root_)));
}

EnvelopeTree EnvelopeTree::rejoin_prefix(EnvelopeTree hidden, EnvelopeTree visible) {
    ++counters().join;
    if (visible.empty()) throw InternalError("rejoin_prefix: empty visible part");
    LambdaNode* r = first_leaf(visible.root_.get());
    if (hidden.empty()) {
        r->seg.left = Point::neg_inf();
        return visible;
    }
    r->seg.left = last_leaf(hidden.root_.get())->seg.right;
    return EnvelopeTree(concat(std::move(hidden.root_), std::move(visible.root_)));
}

namespace {

struct CheckResult {
    const LambdaNode* leftmost;
    const LambdaNode* rightmost;
    std::size_t leaves;
};

CheckResult check_node(const LambdaNode* n) {
    if (n->is_leaf()) {
        if (n->height != 0) throw ValidationError("leaf with nonzero height");
        if (!x_less(n->seg.left, n->seg.right))
            throw ValidationError("leaf segment endpoints out of x-order (" + n->seg.line.id + ")");
        return {n, n, 1};
    }
    if (!n->left || !n->right) throw ValidationError("inner node with a missing child");
    CheckResult l = check_node(n->left.get());
    CheckResult r = check_node(n->right.get());
    if (n->height != 1 + std::max(n->left->height, n->right->height))
        throw ValidationError("stale height");
    if (std::abs(n->left->height - n->right->height) > 1) throw ValidationError("AVL balance violated");
    if (l.rightmost->seg.right != n->bp || r.leftmost->seg.left != n->bp)
        throw ValidationError("breakpoint does not match the boundary leaves");
    if (l.rightmost->seg.line.id != n->line_before.id || r.leftmost->seg.line.id != n->line_after.id)
        throw ValidationError("incident pseudo-lines do not match the boundary leaves");
    if (evaluate(n->line_before, n->bp.x) != n->bp.y || evaluate(n->line_after, n->bp.x) != n->bp.y)
        throw ValidationError("breakpoint is not on both incident pseudo-lines");
    if (!below_at_neg_inf(n->line_before, n->line_after))
        throw ValidationError("segment order does not follow the order at -inf");
    return {l.leftmost, r.rightmost, l.leaves + r.leaves};
}

}  // namespace

void EnvelopeTree::check() const {
    if (!root_) return;
    CheckResult r = check_node(root_.get());
    double bound = 1.45 * std::log2(static_cast<double>(r.leaves) + 1) + 2.0;
    if (static_cast<double>(root_->height) > bound)
        throw ValidationError("height exceeds the balance bound");
}

}  // namespace pl
