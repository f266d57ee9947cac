#include "pl/gen.hpp"

#include "pl/errors.hpp"

namespace pl::gen {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return bound ? next() % bound : 0; }

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(unsigned percent) { return below(100) < percent; }

namespace {

// Strictly increasing values with small rational gaps.
std::vector<Rational> increasing_values(Rng& rng, std::size_t n, long start_lo, long start_hi) {
    std::vector<Rational> vs;
    vs.reserve(n);
    Rational v(rng.range(start_lo, start_hi));
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(v);
        v += Rational(rng.range(1, 8), 2);
    }
    return vs;
}

// Concave chain over the given strictly decreasing slopes: intercepts glued
// continuously at random increasing breakpoints. Returned as a line
// envelope; parabola envelopes are derived by the x^2 shift.
oracle::EnvelopeDescription line_chain(Rng& rng, const std::vector<Rational>& slopes,
                                       const Rational& b0, const std::string& id_prefix) {
    std::size_t n = slopes.size();
    std::vector<Rational> bps = increasing_values(rng, n - 1, -50, 50);

    oracle::EnvelopeDescription out;
    Rational b = b0;
    Point prev = Point::neg_inf();
    for (std::size_t i = 0; i < n; ++i) {
        PseudoLine l = PseudoLine::line(id_prefix + std::to_string(i), slopes[i], b);
        Point right = Point::pos_inf();
        if (i + 1 < n) {
            const Rational& x = bps[i];
            right = Point::finite(x, evaluate(l, x));
            b += (slopes[i] - slopes[i + 1]) * x;  // continuity at the breakpoint
        }
        out.push_back(EnvelopeSegment{l, prev, right});
        prev = right;
    }
    return out;
}

// Strictly decreasing slopes with small rational gaps.
std::vector<Rational> decreasing_slopes(Rng& rng, std::size_t n) {
    std::vector<Rational> ss = increasing_values(rng, n, -50, 50);
    std::reverse(ss.begin(), ss.end());
    return ss;
}

Rational chain_at(const oracle::EnvelopeDescription& env, const Rational& x) {
    for (const EnvelopeSegment& s : env)
        if (cmp_x(s.right, x) >= 0) return evaluate(s.line, x);
    return evaluate(env.back().line, x);
}

oracle::EnvelopeDescription to_parabolas(oracle::EnvelopeDescription env) {
    for (EnvelopeSegment& s : env) {
        Rational c = -s.line.a / Rational(2);
        Rational d = s.line.b - c * c;
        s.line = PseudoLine::parabola(s.line.id, c, d);
        if (s.left.is_finite()) s.left.y += s.left.x * s.left.x;
        if (s.right.is_finite()) s.right.y += s.right.x * s.right.x;
    }
    return env;
}

}  // namespace

std::vector<PseudoLine> random_admissible_set(Rng& rng, Family family, std::size_t n,
                                              const std::string& id_prefix) {
    std::vector<Rational> keys = increasing_values(rng, n, -50, 50);
    std::vector<PseudoLine> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational second(rng.range(-100, 100), rng.chance(50) ? 1 : 2);
        std::string id = id_prefix + std::to_string(i);
        out.push_back(family == Family::Line ? PseudoLine::line(id, keys[i], second)
                                             : PseudoLine::parabola(id, keys[i], second));
    }
    // shuffle so callers do not see the keys in sorted order
    for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
    return out;
}

oracle::EnvelopeDescription random_envelope(Rng& rng, Family family, std::size_t n,
                                            const std::string& id_prefix) {
    if (n == 0) throw PreconditionViolation("random_envelope needs n >= 1");
    oracle::EnvelopeDescription env = line_chain(rng, decreasing_slopes(rng, n),
                                                 Rational(rng.range(-50, 50)), id_prefix);
    return family == Family::Line ? env : to_parabolas(std::move(env));
}

std::pair<oracle::EnvelopeDescription, oracle::EnvelopeDescription>
separated_envelope_pair(Rng& rng, Family family, std::size_t n_left, std::size_t n_right) {
    if (n_left == 0 || n_right == 0)
        throw PreconditionViolation("separated_envelope_pair needs nonempty sides");
    std::vector<Rational> ss = decreasing_slopes(rng, n_left + n_right);
    std::vector<Rational> sl(ss.begin(), ss.begin() + static_cast<long>(n_left));
    std::vector<Rational> sr(ss.begin() + static_cast<long>(n_left), ss.end());
    oracle::EnvelopeDescription le = line_chain(rng, sl, Rational(rng.range(-50, 50)), "l");
    oracle::EnvelopeDescription re = line_chain(rng, sr, Rational(0), "r");

    // Pin the crossing of the two chains to a random abscissa: shift the
    // right chain so the (strictly increasing) difference vanishes there.
    // Without this the crossing clusters near the chains' left ends.
    Rational lo(-55), hi(55);
    for (const oracle::EnvelopeDescription* e : {&le, &re})
        for (const EnvelopeSegment& s : *e)
            if (s.right.is_finite() && hi < s.right.x) hi = s.right.x;
    hi += Rational(5);
    Rational xt = lo + (hi - lo) * Rational(rng.range(0, 1024), 1024);
    Rational delta = chain_at(le, xt) - chain_at(re, xt);
    for (EnvelopeSegment& s : re) {
        s.line.b += delta;
        if (s.left.is_finite()) s.left.y += delta;
        if (s.right.is_finite()) s.right.y += delta;
    }
    if (family == Family::Parabola) {
        le = to_parabolas(std::move(le));
        re = to_parabolas(std::move(re));
    }
    return {std::move(le), std::move(re)};
}

EnvelopeTree tree_from_description(const oracle::EnvelopeDescription& d) {
    return EnvelopeTree::from_segments(d);
}

}  // namespace pl::gen
