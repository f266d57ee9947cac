#include "pl/tentative_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pl/counters.hpp"
#include "pl/errors.hpp"

namespace pl {

const Point& node_point(const LambdaNode* n, SearchRole role) {
    if (n->is_leaf()) return role == SearchRole::LeftEnv ? n->seg.left : n->seg.right;
    return n->bp;
}

namespace {

// The two-curve envelope a node stands for, evaluated at x.
Rational envelope_at(const LambdaNode* n, const Rational& x) {
    if (n->is_leaf()) return evaluate(n->seg.line, x);
    return min2_at(n->line_before, n->line_after, x);
}

bool on_or_above(const Point& p, const LambdaNode* n) {
    if (!p.is_finite()) return false;  // symbolic endpoints lie below every pseudo-line
    return p.y >= envelope_at(n, p.x);
}

}  // namespace

CaseLabel classify(const LambdaNode* u, const LambdaNode* v) {
    ++counters().classify;
    bool u_above = on_or_above(node_point(u, SearchRole::LeftEnv), v);
    bool v_above = on_or_above(node_point(v, SearchRole::RightEnv), u);
    if (!u_above && !v_above) return CaseLabel::Case3;
    return u_above ? CaseLabel::Case1 : CaseLabel::Case2;
}

Intersection find_intersection(const EnvelopeTree& left_env, const EnvelopeTree& right_env,
                               SearchStats* stats, SearchTrace* trace) {
    if (left_env.empty() || right_env.empty())
        throw PreconditionViolation("find_intersection requires two nonempty envelopes");

    const LambdaNode* u = left_env.root();
    const LambdaNode* v = right_env.root();
    std::vector<const LambdaNode*> u_stack, v_stack;
    const unsigned budget = 2u * static_cast<unsigned>(left_env.height() + right_env.height() + 2);

    SearchStats st;
    bool done = false;
    while (!done) {
        if (++st.iterations > budget)
            throw StepBudgetExceeded("tentative search exceeded its step budget; this is a bug");
        TraceStep step;
        if (trace) step = TraceStep{u, v, u_stack, v_stack, CaseLabel::Case3, std::nullopt};

        ++st.classify_calls;
        CaseLabel c = classify(u, v);
        if (trace) step.primary = c;
        switch (c) {
            case CaseLabel::Case3: {
                if (!x_less(node_point(u, SearchRole::LeftEnv), node_point(v, SearchRole::RightEnv)))
                    throw PreconditionViolation("Case 3 with u.p not strictly left of v.p: envelopes are not separated");
                if (!u->is_leaf()) {
                    u_stack.push_back(u);
                    u = u->right.get();
                }
                if (!v->is_leaf()) {
                    v_stack.push_back(v);
                    v = v->left.get();
                }
                if (u->is_leaf() && v->is_leaf()) done = true;
                break;
            }
            case CaseLabel::Case1: {
                if (u_stack.empty()) {
                    if (u->is_leaf())
                        throw InternalError("Case 1 at a leaf with an empty stack; this is a bug");
                    u = u->left.get();
                } else if (u->is_leaf()) {
                    u = u_stack.back()->left.get();
                    u_stack.pop_back();
                } else {
                    const LambdaNode* u_top = u_stack.back();
                    ++st.classify_calls;
                    CaseLabel c2 = classify(u_top, v);
                    if (trace) step.secondary = c2;
                    switch (c2) {
                        case CaseLabel::Case1:
                            u_stack.pop_back();
                            u = u_top->left.get();
                            break;
                        case CaseLabel::Case2:
                            u = u->left.get();
                            if (!v->is_leaf()) v = v->right.get();
                            break;
                        case CaseLabel::Case3:
                            u = u->left.get();
                            if (!v->is_leaf()) {
                                v_stack.push_back(v);
                                v = v->left.get();
                            }
                            break;
                    }
                }
                break;
            }
            case CaseLabel::Case2: {
                if (v_stack.empty()) {
                    if (v->is_leaf())
                        throw InternalError("Case 2 at a leaf with an empty stack; this is a bug");
                    v = v->right.get();
                } else if (v->is_leaf()) {
                    v = v_stack.back()->right.get();
                    v_stack.pop_back();
                } else {
                    const LambdaNode* v_top = v_stack.back();
                    ++st.classify_calls;
                    CaseLabel c2 = classify(u, v_top);
                    if (trace) step.secondary = c2;
                    switch (c2) {
                        case CaseLabel::Case2:
                            v_stack.pop_back();
                            v = v_top->right.get();
                            break;
                        case CaseLabel::Case1:
                            v = v->right.get();
                            if (!u->is_leaf()) u = u->left.get();
                            break;
                        case CaseLabel::Case3:
                            v = v->right.get();
                            if (!u->is_leaf()) {
                                u_stack.push_back(u);
                                u = u->right.get();
                            }
                            break;
                    }
                }
                break;
            }
        }
        if (trace) trace->steps.push_back(std::move(step));
    }

    Intersection out{cross(u->seg.line, v->seg.line), u->seg.line, v->seg.line};
    // The found leaves must contain q under the half-open conventions; a
    // failure here means the separation precondition was violated.
    if (cmp_x(u->seg.left, out.q.x) >= 0 || cmp_x(u->seg.right, out.q.x) < 0 ||
        cmp_x(v->seg.left, out.q.x) > 0 || cmp_x(v->seg.right, out.q.x) <= 0)
        throw PreconditionViolation("intersection point escapes the found leaves: envelopes are not separated");
    if (trace) {
        trace->u_star = u;
        trace->v_star = v;
    }
    if (stats) *stats = st;
    return out;
}

namespace {

struct LeafRanges {
    std::map<const LambdaNode*, std::pair<std::size_t, std::size_t>> range;
    std::size_t total = 0;

    void assign(const LambdaNode* n) {
        if (n->is_leaf()) {
            range[n] = {total, total + 1};
            ++total;
            return;
        }
        std::size_t lo = total;
        assign(n->left.get());
        assign(n->right.get());
        range[n] = {lo, total};
    }
};

bool tiles_prefix(const std::vector<std::pair<std::size_t, std::size_t>>& parts, std::size_t star_index) {
    auto sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::size_t at = 0;
    for (const auto& [lo, hi] : sorted) {
        if (lo != at) return false;
        at = hi;
    }
    return star_index < at;
}

bool tiles_suffix(const std::vector<std::pair<std::size_t, std::size_t>>& parts, std::size_t star_index,
                  std::size_t total) {
    auto sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::size_t at = total;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        if (it->second != at) return false;
        at = it->first;
    }
    return star_index >= at;
}

}  // namespace

TraceChecks check_trace(const SearchTrace& trace, const EnvelopeTree& left_env, const EnvelopeTree& right_env,
                        std::span<const LambdaNode* const> path_left,
                        std::span<const LambdaNode* const> path_right) {
    TraceChecks out;
    if (trace.steps.empty()) {
        out.invariant1 = out.progress = out.push_discipline = false;
        return out;
    }

    LeafRanges lr, rr;
    lr.assign(left_env.root());
    rr.assign(right_env.root());
    std::set<const LambdaNode*> pi_l(path_left.begin(), path_left.end());
    std::set<const LambdaNode*> pi_r(path_right.begin(), path_right.end());
    const LambdaNode* u_star = path_left.back();
    const LambdaNode* v_star = path_right.back();
    std::size_t iu = lr.range.at(u_star).first;
    std::size_t iv = rr.range.at(v_star).first;

    std::set<const LambdaNode*> discovered;
    std::size_t prev_stack_total = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];

        std::vector<std::pair<std::size_t, std::size_t>> parts;
        for (const LambdaNode* n : s.u_stack) parts.push_back(lr.range.at(n->left.get()));
        parts.push_back(lr.range.at(s.u));
        if (!tiles_prefix(parts, iu)) out.invariant1 = false;

        parts.clear();
        for (const LambdaNode* n : s.v_stack) parts.push_back(rr.range.at(n->right.get()));
        parts.push_back(rr.range.at(s.v));
        if (!tiles_suffix(parts, iv, rr.total)) out.invariant1 = false;

        if (!pi_l.count(s.u) && !pi_r.count(s.v)) out.invariant1 = false;

        bool discovery = false;
        if (pi_l.count(s.u) && discovered.insert(s.u).second) discovery = true;
        if (pi_r.count(s.v) && discovered.insert(s.v).second) discovery = true;
        std::size_t stack_total = s.u_stack.size() + s.v_stack.size();
        if (i > 0) {
            bool popped = stack_total < prev_stack_total;
            bool pushed = stack_total > prev_stack_total;
            if (!popped && !discovery) out.progress = false;
            if (pushed && !discovery) out.push_discipline = false;
        }
        prev_stack_total = stack_total;
    }
    // the run must end at the correct leaves
    if (trace.u_star != u_star || trace.v_star != v_star) out.invariant1 = false;
    return out;
}

bool check_invariant1(const SearchTrace& trace, const EnvelopeTree& left_env, const EnvelopeTree& right_env,
                      std::span<const LambdaNode* const> path_left,
                      std::span<const LambdaNode* const> path_right) {
    return check_trace(trace, left_env, right_env, path_left, path_right).invariant1;
}

}  // namespace pl
