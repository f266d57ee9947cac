#include "pl/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "pl/counters.hpp"
#include "pl/dynamic_envelope.hpp"
#include "pl/errors.hpp"
#include "pl/gen.hpp"
#include "pl/oracle.hpp"
#include "pl/tentative_search.hpp"

namespace pl::cli {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> t;
    std::string w;
    while (is >> w) t.push_back(std::move(w));
    return t;
}

std::optional<Family> parse_family(const std::string& w) {
    if (w == "lines") return Family::Line;
    if (w == "parabolas") return Family::Parabola;
    return std::nullopt;
}

// Shared by run, plot and the script-based tests; `out` receives query/dump
// output, `result` the final structure.
int exec_script(std::istream& in, std::ostream& out, std::ostream& err,
                std::optional<DynamicEnvelope>* result) {
    std::optional<DynamicEnvelope> s;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens_of(line);
        if (t.empty()) continue;

        if (!s) {
            if (t[0] != "family" || t.size() != 2) {
                err << "line " << lineno << ": expected `family lines|parabolas`\n";
                return 2;
            }
            std::optional<Family> f = parse_family(t[1]);
            if (!f) {
                err << "line " << lineno << ": unknown family `" << t[1] << "`\n";
                return 2;
            }
            s.emplace(*f);
            continue;
        }

        try {
            if (t[0] == "insert" && t.size() == 4) {
                Rational p1, p2;
                try {
                    p1 = Rational::parse(t[2]);
                    p2 = Rational::parse(t[3]);
                } catch (const ParseError& e) {
                    err << "line " << lineno << ": insert: " << e.what() << "\n";
                    return 2;
                }
                s->insert(s->family() == Family::Line ? PseudoLine::line(t[1], p1, p2)
                                                      : PseudoLine::parabola(t[1], p1, p2));
            } else if (t[0] == "delete" && t.size() == 2) {
                s->erase(t[1]);
            } else if (t[0] == "query" && t.size() == 2) {
                Rational x;
                try {
                    x = Rational::parse(t[1]);
                } catch (const ParseError& e) {
                    err << "line " << lineno << ": query: " << e.what() << "\n";
                    return 2;
                }
                out << s->ray_shoot(x).id << "\n";
            } else if (t[0] == "dump" && t.size() == 1) {
                out << s->envelope().dump() << "\n";
            } else if (t[0] == "validate" && t.size() == 1) {
                s->validate();
            } else {
                err << "line " << lineno << ": unknown or malformed command `" << t[0] << "`\n";
                return 2;
            }
        } catch (const Error& e) {
            err << "line " << lineno << ": " << t[0] << ": " << e.what() << "\n";
            return 1;
        }
    }
    if (result) *result = std::move(s);
    return 0;
}

}  // namespace

int run_script(std::istream& in, std::ostream& out, std::ostream& err) {
    return exec_script(in, out, err, nullptr);
}

int run_file(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream f(path);
    if (!f) {
        err << "cannot open " << path << "\n";
        return 2;
    }
    return run_script(f, out, err);
}

namespace {

struct CaseShape {
    std::size_t cap;
    std::size_t ops;
    bool grow_only;
};

// Mostly small cases (the oracle is cubic in n), a few large ones, and one
// full-size growth run per family at the front.
CaseShape case_shape(gen::Rng& rng, std::size_t case_index, std::size_t max_n) {
    auto clamp = [&](std::size_t c) { return c < max_n ? c : max_n; };
    if (case_index < 2) return {max_n, max_n, true};
    std::uint64_t r = rng.below(100);
    if (r < 70) return {clamp(8), 20, false};
    if (r < 90) return {clamp(16), 36, false};
    if (r < 98) return {clamp(32), 50, false};
    return {clamp(64), 60, false};
}

struct CheckFail {
    std::string message;
};

void check_state(const DynamicEnvelope& s, const std::vector<PseudoLine>& members, gen::Rng& rng) {
    if (s.total_lambda_leaves() != members.size())
        throw ValidationError("storage not linear: " + std::to_string(s.total_lambda_leaves()) +
                              " leaves for " + std::to_string(members.size()) + " members");
    s.validate();
    if (members.empty()) return;

    std::vector<EnvelopeSegment> got = s.envelope().segments();
    oracle::EnvelopeDescription want = oracle::brute_envelope(members);
    if (got.size() != want.size())
        throw ValidationError("envelope has " + std::to_string(got.size()) + " segments, oracle " +
                              std::to_string(want.size()));
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i].line.id != want[i].line.id)
            throw ValidationError("segment " + std::to_string(i) + " is " + got[i].line.id +
                                  ", oracle says " + want[i].line.id);
        if (got[i].left != want[i].left || got[i].right != want[i].right)
            throw ValidationError("segment " + std::to_string(i) + " (" + got[i].line.id +
                                  ") has wrong endpoints");
    }

    for (int k = 0; k < 100; ++k) {
        long den = 1L << rng.below(3);
        Rational x(rng.range(-400, 400), den);
        const PseudoLine& a = s.ray_shoot(x);
        const PseudoLine& b = oracle::brute_ray_shoot(members, x);
        if (a.id != b.id)
            throw ValidationError("ray_shoot(" + x.str() + ") = " + a.id + ", oracle " + b.id);
    }
    for (std::size_t i = 0; i + 1 < got.size(); ++i) {
        const Point& bp = got[i].right;
        if (s.ray_shoot(bp.x).id != got[i].line.id)
            throw ValidationError("ray_shoot at breakpoint " + bp.x.str() +
                                  " did not take the left segment");
    }
}

}  // namespace

std::optional<FuzzFailure> fuzz(const FuzzOptions& opt) {
    for (std::size_t ci = 0; ci < opt.cases; ++ci) {
        gen::Rng rng(opt.seed + 0x9e3779b97f4a7c15ULL * (ci + 1));
        Family family = (ci % 2 == 0) ? Family::Line : Family::Parabola;
        CaseShape shape = case_shape(rng, ci, opt.max_n);

        DynamicEnvelope s(family);
        std::vector<PseudoLine> members;
        std::set<Rational> used;
        std::size_t step = 0;
        try {
            for (step = 0; step < shape.ops; ++step) {
                bool do_insert = members.empty() ||
                                 (members.size() < shape.cap && (shape.grow_only || rng.chance(60)));
                if (do_insert) {
                    Rational key;
                    do {
                        key = Rational(rng.range(-300, 300), rng.chance(50) ? 1 : 2);
                    } while (used.count(key));
                    used.insert(key);
                    Rational second(rng.range(-100, 100), rng.chance(50) ? 1 : 2);
                    std::string id = "c" + std::to_string(step);
                    PseudoLine c = family == Family::Line ? PseudoLine::line(id, key, second)
                                                          : PseudoLine::parabola(id, key, second);
                    s.insert(c);
                    members.push_back(c);
                } else {
                    std::size_t victim = rng.below(members.size());
                    s.erase(members[victim].id);
                    used.erase(members[victim].a);
                    members.erase(members.begin() + static_cast<long>(victim));
                }
                check_state(s, members, rng);
            }
        } catch (const std::exception& e) {
            return FuzzFailure{ci, step, e.what()};
        }
    }
    return std::nullopt;
}

int fuzz_main(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
    std::optional<FuzzFailure> f = fuzz(opt);
    if (f) {
        err << "FAIL: repro with --seed " << opt.seed << ", case " << f->case_index << ", step "
            << f->step << ": " << f->message << "\n";
        return 1;
    }
    out << opt.cases << " cases passed (seed " << opt.seed << ", max-n " << opt.max_n << ")\n";
    return 0;
}

namespace {

struct CounterDelta {
    std::uint64_t classify = 0, split_join = 0, locate = 0;
};

template <class F>
CounterDelta counted(F&& f) {
    PrimitiveCounters before = counters();
    f();
    const PrimitiveCounters& after = counters();
    return CounterDelta{after.classify - before.classify,
                        (after.split - before.split) + (after.join - before.join),
                        after.locate_steps - before.locate_steps};
}

}  // namespace

std::vector<BenchRow> bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                            std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        gen::Rng rng(seed ^ (0x51ed2701u + n));
        DynamicEnvelope s(Family::Line);
        for (const PseudoLine& c : gen::random_admissible_set(rng, Family::Line, n)) s.insert(c);

        double ins_c = 0, ins_sj = 0, ins_ns = 0;
        double del_c = 0, del_sj = 0, del_ns = 0;
        std::set<Rational> extra;
        for (std::size_t t = 0; t < trials; ++t) {
            Rational key;
            do {
                key = Rational(3 * rng.range(-1000000, 1000000) + 1, 3);  // denominator 3: never collides
            } while (extra.count(key));
            extra.insert(key);
            PseudoLine c = PseudoLine::line("x" + std::to_string(t), key, Rational(rng.range(-100, 100)));

            auto t0 = clock::now();
            CounterDelta di = counted([&] { s.insert(c); });
            auto t1 = clock::now();
            CounterDelta dd = counted([&] { s.erase(c.id); });
            auto t2 = clock::now();
            ins_c += static_cast<double>(di.classify);
            ins_sj += static_cast<double>(di.split_join);
            ins_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();
            del_c += static_cast<double>(dd.classify);
            del_sj += static_cast<double>(dd.split_join);
            del_ns += std::chrono::duration<double, std::nano>(t2 - t1).count();
        }
        double m = static_cast<double>(trials);
        rows.push_back({n, "insert", ins_c / m, ins_sj / m, ins_ns / m});
        rows.push_back({n, "delete", del_c / m, del_sj / m, del_ns / m});

        double q_steps = 0, q_ns = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            Rational x(rng.range(-100000, 100000), 2);
            auto t0 = clock::now();
            CounterDelta d = counted([&] { (void)s.ray_shoot(x); });
            q_steps += static_cast<double>(d.locate);
            q_ns += std::chrono::duration<double, std::nano>(clock::now() - t0).count();
        }
        rows.push_back({n, "query", q_steps / m, 0.0, q_ns / m});

        const std::size_t kPairs = 16;
        std::vector<std::pair<EnvelopeTree, EnvelopeTree>> pairs;
        for (std::size_t p = 0; p < kPairs; ++p) {
            auto [l, r] = gen::separated_envelope_pair(rng, Family::Line, n, n);
            pairs.emplace_back(gen::tree_from_description(l), gen::tree_from_description(r));
        }
        double mg_c = 0, mg_sj = 0, mg_ns = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            auto& [l, r] = pairs[t % kPairs];
            auto t0 = clock::now();
            CounterDelta d = counted([&] { (void)find_intersection(l, r); });
            mg_c += static_cast<double>(d.classify);
            mg_sj += static_cast<double>(d.split_join);
            mg_ns += std::chrono::duration<double, std::nano>(clock::now() - t0).count();
        }
        rows.push_back({n, "merge", mg_c / m, mg_sj / m, mg_ns / m});
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "n,op,mean_classify,mean_split_join,mean_wall_ns\n";
    char buf[128];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%s,%.3f,%.3f,%.0f\n", r.n, r.op.c_str(),
                      r.mean_classify, r.mean_split_join, r.mean_wall_ns);
        os << buf;
    }
    return os.str();
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Deterministic SVG of one or two envelopes; parabola segments are exact
// quadratic Beziers (control point at the tangent crossing).
std::string render_svg(const std::vector<const std::vector<EnvelopeSegment>*>& envs,
                       const std::vector<Point>& markers) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto* env : envs)
        for (const EnvelopeSegment& seg : *env) {
            if (seg.left.is_finite()) pts.emplace_back(seg.left.x, seg.left.y);
            if (seg.right.is_finite()) pts.emplace_back(seg.right.x, seg.right.y);
        }
    for (const Point& p : markers)
        if (p.is_finite()) pts.emplace_back(p.x, p.y);

    Rational xmin(-1), xmax(1), ymin(-1), ymax(1);
    if (!pts.empty()) {
        xmin = xmax = pts[0].first;
        ymin = ymax = pts[0].second;
        for (const auto& [x, y] : pts) {
            if (x < xmin) xmin = x;
            if (x > xmax) xmax = x;
            if (y < ymin) ymin = y;
            if (y > ymax) ymax = y;
        }
    }
    // include curve heights at the clipped ends, then pad by the margin
    for (const auto* env : envs)
        if (!env->empty()) {
            for (const Rational& x : {xmin, xmax}) {
                Rational yl = evaluate(env->front().line, x);
                Rational yr = evaluate(env->back().line, x);
                if (yl < ymin) ymin = yl;
                if (yr < ymin) ymin = yr;
                if (yl > ymax) ymax = yl;
                if (yr > ymax) ymax = yr;
            }
        }
    xmin -= Rational(1);
    xmax += Rational(1);
    ymin -= Rational(1);
    ymax += Rational(1);

    const double W = 800, H = 600;
    double x0 = xmin.to_double(), x1 = xmax.to_double();
    double y0 = ymin.to_double(), y1 = ymax.to_double();
    auto X = [&](const Rational& x) { return (x.to_double() - x0) / (x1 - x0) * W; };
    auto Y = [&](const Rational& y) { return H - (y.to_double() - y0) / (y1 - y0) * H; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    const char* colors[] = {"#1f77b4", "#d62728"};
    for (std::size_t e = 0; e < envs.size(); ++e) {
        const auto& env = *envs[e];
        if (env.empty()) continue;
        std::ostringstream d;
        Rational px = env.front().left.is_finite() && xmin < env.front().left.x ? env.front().left.x : xmin;
        d << "M " << fmt(X(px)) << " " << fmt(Y(evaluate(env.front().line, px)));
        for (const EnvelopeSegment& seg : env) {
            Rational qx = seg.right.is_finite() ? seg.right.x : xmax;
            if (qx > xmax) qx = xmax;
            if (qx < px) qx = px;
            if (seg.line.family == Family::Parabola && qx != px) {
                Rational mx = (px + qx) / Rational(2);
                Rational my = evaluate(seg.line, px) + (px - seg.line.a) * (qx - px);
                d << " Q " << fmt(X(mx)) << " " << fmt(Y(my)) << " " << fmt(X(qx)) << " "
                  << fmt(Y(evaluate(seg.line, qx)));
            } else {
                d << " L " << fmt(X(qx)) << " " << fmt(Y(evaluate(seg.line, qx)));
            }
            px = qx;
        }
        os << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << colors[e % 2]
           << "\" stroke-width=\"2\"/>\n";
    }
    for (const Point& p : markers)
        if (p.is_finite())
            os << "<circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y))
               << "\" r=\"4\" fill=\"#2ca02c\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace

int plot_file(const std::string& script_path, const std::string& out_svg, std::ostream& err) {
    std::ifstream f(script_path);
    if (!f) {
        err << "cannot open " << script_path << "\n";
        return 2;
    }
    std::ostringstream sink;
    std::optional<DynamicEnvelope> s;
    int rc = exec_script(f, sink, err, &s);
    if (rc != 0) return rc;

    std::vector<EnvelopeSegment> segs;
    if (s) segs = s->envelope().segments();
    std::string svg = render_svg({&segs}, {});
    std::ofstream o(out_svg, std::ios::binary);
    if (!o) {
        err << "cannot write " << out_svg << "\n";
        return 1;
    }
    o << svg;
    return 0;
}

namespace {

int read_set_file(const std::string& path, std::ostream& err, std::vector<PseudoLine>& out,
                  std::optional<Family>& family) {
    std::ifstream f(path);
    if (!f) {
        err << "cannot open " << path << "\n";
        return 2;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::vector<std::string> t = tokens_of(line);
        if (t.empty()) continue;
        if (!family) {
            if (t[0] != "family" || t.size() != 2 || !parse_family(t[1])) {
                err << path << " line " << lineno << ": expected `family lines|parabolas`\n";
                return 2;
            }
            family = parse_family(t[1]);
            continue;
        }
        if (t.size() != 3) {
            err << path << " line " << lineno << ": expected `<id> <p1> <p2>`\n";
            return 2;
        }
        try {
            Rational p1 = Rational::parse(t[1]), p2 = Rational::parse(t[2]);
            out.push_back(*family == Family::Line ? PseudoLine::line(t[0], p1, p2)
                                                  : PseudoLine::parabola(t[0], p1, p2));
        } catch (const ParseError& e) {
            err << path << " line " << lineno << ": " << e.what() << "\n";
            return 2;
        }
    }
    if (out.empty()) {
        err << path << ": empty pseudo-line set\n";
        return 2;
    }
    return 0;
}

std::string node_name(const LambdaNode* n) {
    if (n->is_leaf()) return n->seg.line.id;
    return n->bp.str();
}

std::string stack_name(const std::vector<const LambdaNode*>& st) {
    if (st.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (i) s += ";";
        s += node_name(st[i]);
    }
    return s;
}

std::string case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case 1";
        case CaseLabel::Case2: return "Case 2";
        case CaseLabel::Case3: return "Case 3";
    }
    return "?";
}

}  // namespace

int trace_files(const std::string& left_path, const std::string& right_path,
                const std::string& out_tsv, const std::string& svg_path, std::ostream& err) {
    std::vector<PseudoLine> ls, rs;
    std::optional<Family> lf, rf;
    if (int rc = read_set_file(left_path, err, ls, lf)) return rc;
    if (int rc = read_set_file(right_path, err, rs, rf)) return rc;
    if (*lf != *rf) {
        err << "the two sets use different families\n";
        return 2;
    }

    try {
        oracle::EnvelopeDescription le = oracle::brute_envelope(ls);
        oracle::EnvelopeDescription re = oracle::brute_envelope(rs);
        EnvelopeTree lt = gen::tree_from_description(le);
        EnvelopeTree rt = gen::tree_from_description(re);

        SearchTrace trace;
        Intersection q = find_intersection(lt, rt, nullptr, &trace);

        std::ofstream o(out_tsv, std::ios::binary);
        if (!o) {
            err << "cannot write " << out_tsv << "\n";
            return 1;
        }
        o << "Step\tu\tv\tuStack\tvStack\tCase\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const TraceStep& st = trace.steps[i];
            std::string c = case_name(st.primary);
            if (st.secondary) c += " / " + case_name(*st.secondary);
            o << (i + 1) << "\t" << node_name(st.u) << "\t" << node_name(st.v) << "\t"
              << stack_name(st.u_stack) << "\t" << stack_name(st.v_stack) << "\t" << c << "\n";
        }

        if (!svg_path.empty()) {
            std::vector<Point> markers;
            for (const TraceStep& st : trace.steps) {
                markers.push_back(node_point(st.u, SearchRole::LeftEnv));
                markers.push_back(node_point(st.v, SearchRole::RightEnv));
            }
            markers.push_back(q.q);
            std::ofstream so(svg_path, std::ios::binary);
            if (!so) {
                err << "cannot write " << svg_path << "\n";
                return 1;
            }
            so << render_svg({&le, &re}, markers);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pl::cli
