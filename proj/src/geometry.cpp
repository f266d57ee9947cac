#include "pl/geometry.hpp"

#include "pl/errors.hpp"

namespace pl {

std::string Point::str() const {
    switch (kind) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        default: return "(" + x.str() + "," + y.str() + ")";
    }
}

int cmp_x(const Point& p, const Rational& x) {
    switch (p.kind) {
        case Point::Kind::NegInf: return -1;
        case Point::Kind::PosInf: return 1;
        default: break;
    }
    if (p.x < x) return -1;
    if (x < p.x) return 1;
    return 0;
}

bool x_less(const Point& a, const Point& b) {
    if (a.kind == Point::Kind::NegInf) return b.kind != Point::Kind::NegInf;
    if (a.kind == Point::Kind::PosInf) return false;
    return cmp_x(b, a.x) > 0;
}

bool x_less_eq(const Point& a, const Point& b) { return !x_less(b, a); }

std::string family_name(Family f) { return f == Family::Line ? "lines" : "parabolas"; }

namespace {

void require_same_family(const PseudoLine& p1, const PseudoLine& p2) {
    if (p1.family != p2.family)
        throw FamilyMismatch("curves " + p1.id + " and " + p2.id + " are from different families");
}

void require_admissible(const PseudoLine& p1, const PseudoLine& p2) {
    require_same_family(p1, p2);
    if (p1.a == p2.a)
        throw InadmissiblePair("curves " + p1.id + " and " + p2.id + " share their " +
                               (p1.family == Family::Line ? std::string("slope") : std::string("shift")));
}

}  // namespace

Rational LineFamily::evaluate(const PseudoLine& pl, const Rational& x) {
    return pl.a * x + pl.b;
}

Point LineFamily::cross(const PseudoLine& p1, const PseudoLine& p2) {
    // a1 x + b1 = a2 x + b2
    Rational x = (p2.b - p1.b) / (p1.a - p2.a);
    return Point::finite(x, evaluate(p1, x));
}

bool LineFamily::below_at_neg_inf(const PseudoLine& p1, const PseudoLine& p2) {
    // (a1 - a2) x -> -inf iff a1 > a2
    return p1.a > p2.a;
}

Rational ParabolaFamily::evaluate(const PseudoLine& pl, const Rational& x) {
    Rational t = x - pl.a;
    return t * t + pl.b;
}

Point ParabolaFamily::cross(const PseudoLine& p1, const PseudoLine& p2) {
    // (x-c1)^2 + d1 = (x-c2)^2 + d2 is linear in x.
    Rational x = (p2.a * p2.a + p2.b - p1.a * p1.a - p1.b) / (Rational(2) * (p2.a - p1.a));
    return Point::finite(x, evaluate(p1, x));
}

bool ParabolaFamily::below_at_neg_inf(const PseudoLine& p1, const PseudoLine& p2) {
    // difference is 2(c2-c1) x + const
    return p1.a < p2.a;
}

Rational evaluate(const PseudoLine& pl, const Rational& x) {
    return pl.family == Family::Line ? LineFamily::evaluate(pl, x) : ParabolaFamily::evaluate(pl, x);
}

Point cross(const PseudoLine& p1, const PseudoLine& p2) {
    require_admissible(p1, p2);
    return p1.family == Family::Line ? LineFamily::cross(p1, p2) : ParabolaFamily::cross(p1, p2);
}

bool below_at_neg_inf(const PseudoLine& p1, const PseudoLine& p2) {
    require_admissible(p1, p2);
    return p1.family == Family::Line ? LineFamily::below_at_neg_inf(p1, p2)
                                     : ParabolaFamily::below_at_neg_inf(p1, p2);
}

Rational min2_at(const PseudoLine& pa, const PseudoLine& pb, const Rational& x) {
    require_same_family(pa, pb);
    Rational ya = evaluate(pa, x);
    Rational yb = evaluate(pb, x);
    return ya < yb ? ya : yb;
}

}  // namespace pl
