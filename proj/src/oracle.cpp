#include "pl/oracle.hpp"

#include <algorithm>
#include <set>

#include "pl/errors.hpp"

namespace pl::oracle {

namespace {

// Evaluates curves into reused storage; the argmin loops below are the hot
// path of the fuzzing oracle.
struct Evaluator {
    mpq_class val, tmp;

    const mpq_class& at(const PseudoLine& l, const mpq_class& x) {
        if (l.family == Family::Line) {
            val = l.a.raw();
            val *= x;
            val += l.b.raw();
        } else {
            tmp = x;
            tmp -= l.a.raw();
            val = tmp;
            val *= tmp;
            val += l.b.raw();
        }
        return val;
    }
};

std::size_t argmin_at(const std::vector<PseudoLine>& lines, const mpq_class& x) {
    Evaluator ev;
    mpq_class best;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const mpq_class& y = ev.at(lines[i], x);
        if (i == 0 || mpq_cmp(y.get_mpq_t(), best.get_mpq_t()) < 0) {
            best = y;
            best_i = i;
        } else if (mpq_cmp(y.get_mpq_t(), best.get_mpq_t()) == 0 &&
                   below_at_neg_inf(lines[i], lines[best_i])) {
            best_i = i;  // left tie-break: the smaller curve in the order at -inf
        }
    }
    return best_i;
}

}  // namespace

EnvelopeDescription brute_envelope(const std::vector<PseudoLine>& lines) {
    if (lines.empty()) throw PreconditionViolation("brute_envelope of an empty set");

    std::vector<Rational> xs;
    xs.reserve(lines.size() * lines.size() / 2);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            xs.push_back(cross(lines[i], lines[j]).x);  // also rejects inadmissible pairs
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // One sample beyond each end and an exact rational midpoint of every
    // open interval between consecutive crossing abscissas.
    std::vector<Rational> samples;
    if (xs.empty()) {
        samples.push_back(Rational(0));
    } else {
        samples.push_back(xs.front() - Rational(1));
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            samples.push_back(Rational(mpq_class((xs[i].raw() + xs[i + 1].raw()) / 2)));
        samples.push_back(xs.back() + Rational(1));
    }

    std::vector<std::size_t> winners;
    for (const Rational& x : samples) {
        std::size_t w = argmin_at(lines, x.raw());
        if (winners.empty() || winners.back() != w) winners.push_back(w);
    }

    EnvelopeDescription out;
    Point prev = Point::neg_inf();
    for (std::size_t k = 0; k < winners.size(); ++k) {
        Point right = Point::pos_inf();
        if (k + 1 < winners.size()) right = cross(lines[winners[k]], lines[winners[k + 1]]);
        out.push_back(EnvelopeSegment{lines[winners[k]], prev, right});
        prev = right;
    }

    // Properties (A) and (B): one segment per curve, segments in the order
    // at -inf.
    std::set<std::string> seen;
    for (const auto& s : out)
        if (!seen.insert(s.line.id).second)
            throw InternalError("oracle envelope repeats curve " + s.line.id);
    for (std::size_t k = 0; k + 1 < out.size(); ++k)
        if (!below_at_neg_inf(out[k].line, out[k + 1].line))
            throw InternalError("oracle envelope violates the order at -inf");
    return out;
}

const PseudoLine& brute_ray_shoot(const std::vector<PseudoLine>& lines, const Rational& x0) {
    if (lines.empty()) throw PreconditionViolation("brute_ray_shoot of an empty set");
    return lines[argmin_at(lines, x0.raw())];
}

BruteIntersection brute_intersection(const EnvelopeDescription& left_env,
                                     const EnvelopeDescription& right_env) {
    if (left_env.empty() || right_env.empty())
        throw PreconditionViolation("brute_intersection with an empty envelope");

    std::vector<BruteIntersection> found;
    std::size_t i = 0, j = 0;
    while (i < left_env.size() && j < right_env.size()) {
        const EnvelopeSegment& sl = left_env[i];
        const EnvelopeSegment& sr = right_env[j];
        Point p = cross(sl.line, sr.line);
        // right-closed in the left envelope, left-closed in the right one
        if (cmp_x(sl.left, p.x) < 0 && cmp_x(sl.right, p.x) >= 0 &&
            cmp_x(sr.left, p.x) <= 0 && cmp_x(sr.right, p.x) > 0)
            found.push_back(BruteIntersection{p, sl.line, sr.line});
        // On equal right endpoints advance j: the pair (next left segment,
        // this right segment) has disjoint half-open spans and can be skipped,
        // while advancing i here would skip a pair that may contain q.
        if (x_less_eq(sr.right, sl.right)) ++j;
        else ++i;
    }
    if (found.size() != 1)
        throw PreconditionViolation("expected exactly one envelope intersection, found " +
                                    std::to_string(found.size()) + " (separation violated?)");
    return found.front();
}

std::pair<std::vector<const LambdaNode*>, std::vector<const LambdaNode*>>
true_paths(const EnvelopeTree& left_env, const EnvelopeTree& right_env) {
    BruteIntersection bi = brute_intersection(left_env.segments(), right_env.segments());

    std::vector<const LambdaNode*> pl_path, pr_path;
    const LambdaNode* n = left_env.root();
    pl_path.push_back(n);
    while (!n->is_leaf()) {
        n = (bi.q.x <= n->bp.x) ? n->left.get() : n->right.get();
        pl_path.push_back(n);
    }
    n = right_env.root();
    pr_path.push_back(n);
    while (!n->is_leaf()) {
        n = (bi.q.x < n->bp.x) ? n->left.get() : n->right.get();
        pr_path.push_back(n);
    }
    return {std::move(pl_path), std::move(pr_path)};
}

}  // namespace pl::oracle
