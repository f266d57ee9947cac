#pragma once

#include <concepts>
#include <string>

#include "pl/rational.hpp"

namespace pl {

// Planar point with exact coordinates, or a symbolic endpoint at infinity.
// A symbolic endpoint lies below every pseudo-line in on-or-above tests.
struct Point {
    enum class Kind { Finite, NegInf, PosInf };

    Kind kind = Kind::Finite;
    Rational x, y;  // meaningful only when finite

    static Point finite(Rational px, Rational py) { return Point{Kind::Finite, std::move(px), std::move(py)}; }
    static Point neg_inf() { return Point{Kind::NegInf, {}, {}}; }
    static Point pos_inf() { return Point{Kind::PosInf, {}, {}}; }

    bool is_finite() const { return kind == Kind::Finite; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != Kind::Finite) return true;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    std::string str() const;
};

// Three-way comparison of a point's x-coordinate against a finite x, with
// sentinel semantics (-inf compares below everything, +inf above).
int cmp_x(const Point& p, const Rational& x);

// Strict x-order of two points; equal sentinels are not less than each other.
bool x_less(const Point& a, const Point& b);
bool x_less_eq(const Point& a, const Point& b);

enum class Family { Line, Parabola };

std::string family_name(Family f);

// One curve of a homogeneous family. Line: y = a*x + b with slope a and
// intercept b. Parabola: y = (x - a)^2 + b with shift a and offset b.
struct PseudoLine {
    std::string id;
    Family family = Family::Line;
    Rational a, b;

    static PseudoLine line(std::string id, Rational slope, Rational intercept) {
        return PseudoLine{std::move(id), Family::Line, std::move(slope), std::move(intercept)};
    }
    static PseudoLine parabola(std::string id, Rational shift, Rational offset) {
        return PseudoLine{std::move(id), Family::Parabola, std::move(shift), std::move(offset)};
    }
};

// Capability contract a pseudo-line family must provide: exact evaluation,
// the unique pairwise crossing, and the total order at x = -infinity.
// below_at_neg_inf must be a strict total order on any admissible set, and
// crossing a reverses it: a is below b left of cross(a, b) and above right
// of it. The built-in families below are the reference implementations.
template <class F>
concept PseudoLineFamily = requires(const PseudoLine& c1, const PseudoLine& c2, const Rational& x) {
    { F::evaluate(c1, x) } -> std::same_as<Rational>;
    { F::cross(c1, c2) } -> std::same_as<Point>;
    { F::below_at_neg_inf(c1, c2) } -> std::same_as<bool>;
};

struct LineFamily {
    static Rational evaluate(const PseudoLine& pl, const Rational& x);
    static Point cross(const PseudoLine& p1, const PseudoLine& p2);
    static bool below_at_neg_inf(const PseudoLine& p1, const PseudoLine& p2);
};

struct ParabolaFamily {
    static Rational evaluate(const PseudoLine& pl, const Rational& x);
    static Point cross(const PseudoLine& p1, const PseudoLine& p2);
    static bool below_at_neg_inf(const PseudoLine& p1, const PseudoLine& p2);
};

static_assert(PseudoLineFamily<LineFamily>);
static_assert(PseudoLineFamily<ParabolaFamily>);

// Exact y-coordinate of pl at x.
Rational evaluate(const PseudoLine& pl, const Rational& x);

// The unique finite intersection point of two admissible curves of the same
// family. Throws InadmissiblePair for identical slope/shift, FamilyMismatch
// for mixed families.
Point cross(const PseudoLine& p1, const PseudoLine& p2);

// True iff p1 lies below p2 for all x left of their crossing.
bool below_at_neg_inf(const PseudoLine& p1, const PseudoLine& p2);

// Pointwise minimum of two curves at x (the two-curve envelope L(v) kept at
// inner search nodes).
Rational min2_at(const PseudoLine& pa, const PseudoLine& pb, const Rational& x);

}  // namespace pl
