#include "catk/viscosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "catk/detail/format.hpp"
#include "catk/rng.hpp"

namespace catk {

double seq_value(const SequenceSpec& s, std::int64_t n) {
    if (n < 1) throw domain_error("sequence index starts at 1");
    if (const auto* h = std::get_if<HarmonicSeq>(&s))
        return h->c / std::pow(static_cast<double>(n + 1), h->p);
    if (const auto* c = std::get_if<ConstantSeq>(&s)) return c->value;
    const auto& t = std::get<TableSeq>(s);
    if (static_cast<std::size_t>(n) > t.values.size())
        throw config_error("sequence table shorter than the requested iteration count");
    return t.values[static_cast<std::size_t>(n - 1)];
}

namespace {

void add_check(HypothesisReport& rep, std::string name, bool ok, std::string detail,
               bool verifiable = true) {
    rep.checks.push_back({std::move(name), ok, verifiable, std::move(detail)});
    if (verifiable && !ok) rep.ok = false;
}

void fail(const std::string& name, const std::string& detail) {
    throw config_error("hypothesis violated: " + name + ": " + detail);
}

// Conditions (i)-(iv). Built-in families are decided in closed form; tables
// only on their prefix.
void validate_sequences(const SequencePair& seqs, std::int64_t max_iter, HypothesisReport& rep) {
    const auto* th = std::get_if<HarmonicSeq>(&seqs.t);
    const auto* tt = std::get_if<TableSeq>(&seqs.t);
    if (th) {
        if (!(th->c > 0.0)) fail("(i) t_n in (0,1)", "harmonic c must be positive");
        if (!(th->p > 0.0 && th->p <= 1.0))
            fail("(iv) sum t_n = inf", "harmonic exponent p must lie in (0, 1]");
        if (!(th->c < std::pow(2.0, th->p)))
            fail("(i) t_n in (0,1)", "harmonic c/(n+1)^p needs c < 2^p so that t_1 < 1");
        add_check(rep, "(i),(iii),(iv) on t_n", true, "harmonic family, holds by construction");
    } else if (tt) {
        if (static_cast<std::int64_t>(tt->values.size()) < max_iter)
            fail("(i) t_n in (0,1)", "t table shorter than max_iter");
        for (double v : tt->values)
            if (!(v > 0.0 && v < 1.0)) fail("(i) t_n in (0,1)", "table entry outside (0,1)");
        add_check(rep, "(iii),(iv) on t_n", true, "custom table: unverifiable in the limit",
                  false);
    } else {
        fail("(iii) t_n -> 0", "constant t_n does not vanish; use a harmonic family or a table");
    }

    const auto* bc = std::get_if<ConstantSeq>(&seqs.b);
    const auto* bt = std::get_if<TableSeq>(&seqs.b);
    if (bc) {
        if (!(bc->value > 0.0 && bc->value < 1.0))
            fail("(ii) 0 < liminf b_n <= limsup b_n < 1", "constant b outside (0,1)");
        add_check(rep, "(i),(ii) on b_n", true, "constant family, holds by construction");
    } else if (bt) {
        if (static_cast<std::int64_t>(bt->values.size()) < max_iter)
            fail("(i) b_n in (0,1)", "b table shorter than max_iter");
        for (double v : bt->values)
            if (!(v > 0.0 && v < 1.0)) fail("(i) b_n in (0,1)", "table entry outside (0,1)");
        add_check(rep, "(ii) on b_n", true, "custom table: unverifiable in the limit", false);
    } else {
        fail("(ii) 0 < liminf b_n <= limsup b_n < 1",
             "harmonic b_n has liminf 0; use a constant or a table");
    }
}

} // namespace

Point solve_q_oracle(const FixSet& fs, const MapSpec& f, double tol) {
    if (!f.is_contraction_family())
        throw domain_error("solve_q_oracle: f must be a contraction (homothety or constant)");

    const Space& sp = fs.space;
    std::vector<Point> starts;
    switch (fs.kind) {
    case FixSet::Kind::singleton: return *fs.point;
    case FixSet::Kind::segment:
        starts = {fs.segment->a, fs.segment->b, combine(sp, 0.5, fs.segment->a, fs.segment->b)};
        break;
    case FixSet::Kind::whole_space: {
        Point p0;
        if (sp.has_cap()) {
            p0 = sp.cap().center;
        } else if (sp.kind() == SpaceKind::glued_example) {
            p0 = glued_point(2, 0.3, 0.5);
        } else {
            throw domain_error("solve_q_oracle: whole-space fix set needs a bounded start");
        }
        starts = {p0, catk::apply(f, p0), catk::apply(f, catk::apply(f, p0))};
        break;
    }
    }

    Point limit = starts.front();
    bool have_limit = false;
    for (const Point& start : starts) {
        Point p = start;
        double prev_step = std::numeric_limits<double>::infinity();
        int non_contracting = 0;
        for (int it = 0;; ++it) {
            const Point next = project_fixset(fs, catk::apply(f, p));
            const double step = dist(sp, p, next);
            p = next;
            if (step < tol) break;
            if (step >= prev_step) {
                if (++non_contracting >= 100)
                    throw divergence_error("solve_q_oracle: no contraction across 100 steps");
            } else {
                non_contracting = 0;
            }
            prev_step = step;
            if (it > 1000000)
                throw divergence_error("solve_q_oracle: iteration budget exhausted");
        }
        if (have_limit && dist(sp, limit, p) > 10.0 * tol)
            throw divergence_error("solve_q_oracle: limit depends on the start point");
        limit = p;
        have_limit = true;
    }
    return limit;
}

HypothesisReport validate_config(const IterationConfig& cfg) {
    HypothesisReport rep;
    const Space& sp = cfg.space;

    if (sp.kind() == SpaceKind::glued_example && !cfg.explore_no_n)
        fail("N-property", "the glued example fails the N-property; pass the exploratory "
                           "flag to run it anyway (no convergence claim)");

    if (sp.kind() != SpaceKind::glued_example && !sp.has_cap())
        fail("admissible region", "experiment spaces need a cap/disk to sample and bound");

    if (!sp.contains(cfg.u)) fail("u admissible", "u lies outside the admissible region");
    if (!cfg.f.is_contraction_family())
        fail("f k-contractive", "f must be a homothety or a constant map");
    if (cfg.max_iter < 1) fail("max_iter", "must be >= 1");
    if (cfg.report_every < 1) fail("report_every", "must be >= 1");

    validate_sequences(cfg.sequences, cfg.max_iter, rep);

    rep.k = cfg.f.contraction_k();

    const bool cat1 = sp.sphere_like();
    if (cat1) {
        // CAT(1)-scale diameter bound M = sqrt(kappa) * (2 * cap radius).
        rep.M = std::sqrt(sp.kappa()) * sp.diameter_cap();
        if (!(rep.M > 0.0 && rep.M < std::numbers::pi / 2.0))
            fail("diam(C) < pi/2", "enforced diameter (CAT(1) scale) must lie in (0, pi/2)");
        rep.k_bound = theorem_k_bound(rep.M);
        // The homothety's Lipschitz constant on a cap of diameter M.
        rep.k_eff = rep.k == 0.0 ? 0.0 : std::sin(rep.k * rep.M) / std::sin(rep.M);
        if (!(rep.k_eff < rep.k_bound))
            fail("k-bound k < 2 sin^2(M/2) cos(M) / M^2",
                 "effective contraction constant sin(kM)/sin M = " +
                     detail::fmt_g17(rep.k_eff) + " is not below the bound " +
                     detail::fmt_g17(rep.k_bound) + " at M = " + detail::fmt_g17(rep.M));
        add_check(rep, "k-bound", true,
                  "k_eff = " + detail::fmt_g17(rep.k_eff) + " < " + detail::fmt_g17(rep.k_bound));
    } else {
        rep.M = std::numeric_limits<double>::quiet_NaN();
        rep.k_bound = 0.5;
        rep.k_eff = rep.k;
        if (!(rep.k_eff < 0.5))
            fail("k < 1/2 (CAT(0))", "contraction constant " + detail::fmt_g17(rep.k_eff) +
                                         " is not below 1/2");
        add_check(rep, "k < 1/2 (CAT(0))", true, "k = " + detail::fmt_g17(rep.k));
    }

    // Rotations must fix the cap: axis through the cap center.
    if (const auto* rot = std::get_if<RotationMap>(&cfg.T.impl())) {
        const double align = std::abs(dot(rot->axis, as_spherical(sp.cap().center).v));
        if (align < 1.0 - 1e-9)
            fail("T self-map", "rotation axis must pass through the cap center");
    }

    // Sampled nonexpansiveness of T. Segment projection on a positively
    // curved cap genuinely expands some pairs, so this is a real gate, not
    // a formality.
    {
        const double lip = empirical_lipschitz(cfg.T, 1000, cfg.seed);
        if (!(lip <= 1.0 + 1e-9))
            fail("T nonexpansive", "sampled Lipschitz constant " + detail::fmt_g17(lip) +
                                       " exceeds 1 (metric projection is not nonexpansive "
                                       "on positively curved caps)");
        add_check(rep, "T nonexpansive (sampled)", true, "max ratio " + detail::fmt_g17(lip));
    }

    const FixSet fs = fix_set(cfg.T);
    rep.q = solve_q_oracle(fs, cfg.f, 1e-12);
    {
        const double res = dist(sp, rep.q, project_fixset(fs, catk::apply(cfg.f, rep.q)));
        add_check(rep, "P_{Fix T}(f(q)) = q residual", res < 1e-11,
                  "residual " + detail::fmt_g17(res));
        if (res >= 1e-11) fail("P_{Fix T}(f(q)) = q", "oracle residual " + detail::fmt_g17(res));
    }

    // Ball hypotheses (native units): dist(p, f(p)) <= M/(4 sqrt(kappa)) on
    // Fix T, and dist(u, q) likewise. CAT(0) has no such hypotheses.
    if (cat1) {
        const double ball = rep.M / (4.0 * std::sqrt(sp.kappa()));
        double worst = 0.0;
        switch (fs.kind) {
        case FixSet::Kind::singleton:
            worst = dist(sp, *fs.point, catk::apply(cfg.f, *fs.point));
            break;
        case FixSet::Kind::segment: {
            for (int i = 0; i <= 1000; ++i) {
                const Point p = geodesic_point(sp, fs.segment->a, fs.segment->b, i / 1000.0);
                worst = std::max(worst, dist(sp, p, catk::apply(cfg.f, p)));
            }
            break;
        }
        case FixSet::Kind::whole_space: {
            Rng rng(cfg.seed);
            for (int i = 0; i < 1000; ++i) {
                const Point p = rng.in_space(sp);
                worst = std::max(worst, dist(sp, p, catk::apply(cfg.f, p)));
            }
            break;
        }
        }
        if (!(worst <= ball))
            fail("rho(p, f(p)) <= M/4 on Fix T", "worst sampled value " +
                                                     detail::fmt_g17(worst) + " exceeds " +
                                                     detail::fmt_g17(ball));
        add_check(rep, "rho(p, f(p)) <= M/4 on Fix T", true,
                  "worst " + detail::fmt_g17(worst) + " <= " + detail::fmt_g17(ball) +
                      (fs.kind == FixSet::Kind::singleton ? " (exact)" : " (sampled)"));

        const double du = dist(sp, cfg.u, rep.q);
        if (!(du <= ball))
            fail("rho(u, q) <= M/4",
                 detail::fmt_g17(du) + " exceeds " + detail::fmt_g17(ball));
        add_check(rep, "rho(u, q) <= M/4", true, detail::fmt_g17(du));

        rep.containment_radius = rep.M / (4.0 * (1.0 - rep.k_eff)) / std::sqrt(sp.kappa());
    } else {
        const double dfq = dist(sp, rep.q, catk::apply(cfg.f, rep.q));
        rep.containment_radius =
            std::max(dist(sp, cfg.u, rep.q), dfq / (1.0 - rep.k_eff));
        add_check(rep, "CAT(0): no ball hypotheses", true, "Theorem applies for every u");
    }

    return rep;
}

Trace run_viscosity(const IterationConfig& cfg) {
    const HypothesisReport rep = validate_config(cfg);
    const Space& sp = cfg.space;
    const std::int64_t N = cfg.max_iter;

    Trace trace;
    trace.q = rep.q;
    trace.hypotheses = rep;
    trace.iterations = N;
    trace.r_fix_all.reserve(N);
    trace.r_xy_all.reserve(N);
    trace.d_q_all.reserve(N);
    trace.suzuki_all.reserve(N > 0 ? N - 1 : 0);
    trace.step3_all.reserve(N);

    const Point fq = catk::apply(cfg.f, rep.q);
    const double cos_fq_q = std::cos(dist(sp, fq, rep.q));
    const double ball = rep.containment_radius + 1e-9;

    Point x = cfg.u;
    Point y_prev = cfg.u;     // overwritten before first use
    double x_step_prev = 0.0; // dist(x_{n-1}, x_n)

    const auto containment = [&](const Point& p, std::int64_t n, const char* label) {
        if (dist(sp, p, rep.q) > ball)
            throw invariant_error(std::string(label) +
                                      " escaped the containment ball at step " +
                                      std::to_string(n),
                                  n);
        if (!sp.contains(p, 1e-9))
            throw invariant_error(std::string(label) + " left the admissible region at step " +
                                      std::to_string(n),
                                  n);
    };

    for (std::int64_t n = 1; n <= N; ++n) {
        const double t = seq_value(cfg.sequences.t, n);
        const double b = seq_value(cfg.sequences.b, n);

        const Point Tx = catk::apply(cfg.T, x);
        const Point fx = catk::apply(cfg.f, x);
        const Point y = combine(sp, t, fx, Tx);

        containment(x, n, "x_n");
        containment(y, n, "y_n");

        const double r_fix = dist(sp, x, Tx);
        const double r_xy = dist(sp, x, y);
        const double d_q = dist(sp, x, rep.q);
        trace.r_fix_all.push_back(r_fix);
        trace.r_xy_all.push_back(r_xy);
        trace.d_q_all.push_back(d_q);
        trace.step3_all.push_back(std::cos(dist(sp, fq, Tx)) - cos_fq_q);

        if ((n - 1) % cfg.report_every == 0 || n == N)
            trace.rows.push_back({n, t, b, x, y, r_fix, r_xy, d_q});

        // dist(y_n, y_{n-1}) - dist(x_n, x_{n-1}), defined from n = 2 on.
        if (n > 1) trace.suzuki_all.push_back(dist(sp, y, y_prev) - x_step_prev);

        const Point x_next = combine(sp, b, x, y);
        x_step_prev = dist(sp, x, x_next);
        y_prev = y;
        x = x_next;
    }

    return trace;
}

Trace run_halpern(IterationConfig cfg) {
    cfg.f = MapSpec::constant(cfg.space, cfg.u);
    return run_viscosity(cfg);
}

XuResult xu_simulate(double s1, const XuSequences& seqs, std::int64_t N) {
    if (!(s1 >= 0.0)) throw config_error("xu_simulate: s1 must be nonnegative");
    if (N < 1) throw config_error("xu_simulate: N must be >= 1");

    // Hypotheses of the recursion lemma.
    if (const auto* a = std::get_if<HarmonicSeq>(&seqs.alpha)) {
        if (!(a->c > 0.0 && a->p > 0.0 && a->p <= 1.0 && a->c <= std::pow(2.0, a->p)))
            throw config_error("xu_simulate: alpha must lie in [0,1] with sum alpha = inf");
    } else if (const auto* a = std::get_if<ConstantSeq>(&seqs.alpha)) {
        if (!(a->value > 0.0 && a->value <= 1.0))
            throw config_error("xu_simulate: constant alpha must lie in (0,1]");
    } else {
        throw config_error("xu_simulate: alpha table not supported");
    }
    if (const auto* b = std::get_if<ConstantSeq>(&seqs.beta)) {
        if (b->value > 0.0)
            throw config_error("xu_simulate: constant beta must satisfy limsup beta <= 0");
    }
    if (const auto* g = std::get_if<HarmonicSeq>(&seqs.gamma)) {
        if (!(g->c >= 0.0))
            throw config_error("xu_simulate: gamma must be nonnegative");
        if (g->c > 0.0 && !(g->p > 1.0))
            throw config_error("xu_simulate: harmonic gamma needs p > 1 for sum gamma < inf");
    } else if (const auto* g = std::get_if<ConstantSeq>(&seqs.gamma)) {
        if (g->value != 0.0)
            throw config_error("xu_simulate: constant gamma must be zero for sum gamma < inf");
    } else {
        throw config_error("xu_simulate: gamma table not supported");
    }

    XuResult res;
    std::vector<double> s(static_cast<std::size_t>(N));
    s[0] = s1;
    for (std::int64_t n = 1; n < N; ++n) {
        const double a = seq_value(seqs.alpha, n);
        const double b = seq_value(seqs.beta, n);
        const double g = seq_value(seqs.gamma, n);
        double next = (1.0 - a) * s[static_cast<std::size_t>(n - 1)] + a * b + g;
        if (next < 0.0) {
            next = 0.0;
            res.clamped = true;
        }
        s[static_cast<std::size_t>(n)] = next;
    }
    res.s_final = s.back();
    for (std::int64_t n = N / 2; n <= N; ++n)
        if (n >= 1) res.tail_max = std::max(res.tail_max, s[static_cast<std::size_t>(n - 1)]);
    res.block_max = dyadic_block_max(s);
    return res;
}

SuzukiMargins suzuki_check(const Trace& trace) {
    SuzukiMargins m;
    const auto tail_start = [](std::size_t len) {
        return static_cast<std::size_t>(std::floor(0.9 * static_cast<double>(len)));
    };
    const auto tail_max = [&](const std::vector<double>& v) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = tail_start(v.size()); i < v.size(); ++i) best = std::max(best, v[i]);
        return best;
    };
    m.tail_max_r_xy = tail_max(trace.r_xy_all);
    m.tail_max_r_fix = tail_max(trace.r_fix_all);
    m.tail_max_suzuki = tail_max(trace.suzuki_all);
    m.tail_max_step3 = tail_max(trace.step3_all);
    return m;
}

std::vector<double> dyadic_block_max(const std::vector<double>& values) {
    std::vector<double> out;
    std::size_t lo = 1; // 1-based step indices
    while (lo <= values.size()) {
        const std::size_t hi = std::min(values.size() + 1, lo * 2);
        double best = 0.0;
        for (std::size_t n = lo; n < hi; ++n)
            best = std::max(best, std::abs(values[n - 1]));
        out.push_back(best);
        lo *= 2;
    }
    return out;
}

bool dyadic_envelope_nonincreasing(const std::vector<double>& values, double burn_in_frac,
                                   double rel_slack) {
    const auto blocks = dyadic_block_max(values);
    const double burn = burn_in_frac * static_cast<double>(values.size());
    double prev = std::numeric_limits<double>::infinity();
    std::size_t lo = 1;
    for (const double m : blocks) {
        if (static_cast<double>(lo) >= burn) {
            if (m > prev * (1.0 + rel_slack) + 1e-15) return false;
            prev = m;
        }
        lo *= 2;
    }
    return true;
}

} // namespace catk
