#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "catk/maps.hpp"
#include "catk/point.hpp"
#include "catk/projections.hpp"
#include "catk/space.hpp"

namespace catk {

// Scalar sequence families. Harmonic is c / (n+1)^p with n >= 1.
struct HarmonicSeq {
    double c = 1.0;
    double p = 1.0;
};
struct ConstantSeq {
    double value = 0.0;
};
struct TableSeq {
    std::vector<double> values;
};
using SequenceSpec = std::variant<HarmonicSeq, ConstantSeq, TableSeq>;

double seq_value(const SequenceSpec& s, std::int64_t n); // n >= 1

// The pair (t_n, b_n) of the two-step scheme, under the conditions
//   (i) t_n, b_n in (0,1); (ii) 0 < liminf b_n <= limsup b_n < 1;
//   (iii) t_n -> 0; (iv) sum t_n = inf.
// Built-in families satisfy them by construction (validated); custom tables
// are checked on their finite prefix and flagged unverifiable in the limit.
struct SequencePair {
    SequenceSpec t;
    SequenceSpec b;
};

struct IterationConfig {
    Space space;
    MapSpec T;
    MapSpec f;
    Point u;
    SequencePair sequences;
    std::int64_t max_iter = 1000;
    std::int64_t report_every = 1;
    std::uint64_t seed = 0;       // used by sampled hypothesis checks only
    bool explore_no_n = false;    // opt-in: run on the glued example anyway
};

struct HypothesisCheck {
    std::string name;
    bool ok = true;
    bool verifiable = true;
    std::string detail;
};

struct HypothesisReport {
    double M = 0.0;       // CAT(1)-scale diameter bound (NaN on CAT(0))
    double k = 0.0;       // nominal contraction parameter of f
    double k_eff = 0.0;   // effective contraction constant used by the bound
    double k_bound = 0.5; // admissibility threshold
    Point q;              // oracle limit, P_{Fix T}(f(q)) = q
    double containment_radius = 0.0; // native units, ball around q
    std::vector<HypothesisCheck> checks;
    bool ok = true;
};

// Validates every Theorem hypothesis the config touches; throws config_error
// (naming the violated hypothesis) on failure. Computes the oracle limit q.
HypothesisReport validate_config(const IterationConfig& cfg);

struct TraceRow {
    std::int64_t n = 1;
    double t = 0.0;
    double b = 0.0;
    Point x;
    Point y;
    double r_fix = 0.0; // dist(x_n, T x_n)
    double r_xy = 0.0;  // dist(x_n, y_n)
    double d_q = 0.0;   // dist(x_n, q)
};

struct Trace {
    std::vector<TraceRow> rows; // every report_every steps, plus the last
    // Per-step series, index i = step n = i + 1.
    std::vector<double> r_fix_all;
    std::vector<double> r_xy_all;
    std::vector<double> d_q_all;
    std::vector<double> suzuki_all; // dist(y_{n+1}, y_n) - dist(x_{n+1}, x_n)
    std::vector<double> step3_all;  // cos d(f(q), T x_n) - cos d(f(q), q)
    Point q;
    std::int64_t iterations = 0;
    HypothesisReport hypotheses;
};

// x_1 = u; y_n = t_n f(x_n) + (1 - t_n) T(x_n);
// x_{n+1} = b_n x_n + (1 - b_n) y_n, with the combination convention of
// combine(): the first argument carries weight (1 - its coefficient) of the
// distance. Iterates are checked against the containment ball every step.
Trace run_viscosity(const IterationConfig& cfg);

// The Halpern specialization: f replaced by the constant map to u.
Trace run_halpern(IterationConfig cfg);

// Fixed point of p -> P_{Fix T}(f(p)), iterated from three starts until the
// step length falls below tol; detects non-contraction.
Point solve_q_oracle(const FixSet& fs, const MapSpec& f, double tol);

struct XuSequences {
    SequenceSpec alpha; // in [0,1], sum = inf
    SequenceSpec beta;  // limsup <= 0
    SequenceSpec gamma; // >= 0, summable
};

struct XuResult {
    double s_final = 0.0;
    bool clamped = false;      // a negative iterate was clamped to zero
    double tail_max = 0.0;     // running max over n in [N/2, N]
    std::vector<double> block_max; // dyadic block maxima of s_n
};

// s_{n+1} = (1 - alpha_n) s_n + alpha_n beta_n + gamma_n, n = 1..N-1.
XuResult xu_simulate(double s1, const XuSequences& seqs, std::int64_t N);

struct SuzukiMargins {
    double tail_max_r_xy = 0.0;
    double tail_max_r_fix = 0.0;
    double tail_max_suzuki = 0.0; // max of dist(y_{n+1},y_n) - dist(x_{n+1},x_n)
    double tail_max_step3 = 0.0;  // max of cos d(f(q),T x_n) - cos d(f(q),q)
};

// Tail (last 10%) maxima of the Lemma-type quantities along a trace.
SuzukiMargins suzuki_check(const Trace& trace);

// Maxima of |values| over dyadic index blocks [2^j, 2^{j+1}).
std::vector<double> dyadic_block_max(const std::vector<double>& values);

// Nonincreasing block maxima after discarding blocks before burn_in_frac*N.
bool dyadic_envelope_nonincreasing(const std::vector<double>& values, double burn_in_frac,
                                   double rel_slack = 1e-12);

} // namespace catk
