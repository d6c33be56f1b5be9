#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alleemem/model.hpp"

namespace alleemem {

struct NetworkShape {
    int L = 1;    // layers
    int N_u = 1;  // pre-synaptic neurons per layer
    int N_v = 1;  // post-synaptic neurons per layer

    int n_pre() const { return L * N_u; }
    int n_post() const { return L * N_v; }
};

// Dense (L*N_u) x (L*N_v) weight matrix, row-major over (pre, post).
struct WeightTensor {
    NetworkShape shape;
    std::vector<double> w;  // n_pre * n_post

    double& at(int i, int j) { return w[static_cast<std::size_t>(i) * shape.n_post() + j]; }
    double at(int i, int j) const { return w[static_cast<std::size_t>(i) * shape.n_post() + j]; }
};

// +-1 pattern pair. Components are stored as doubles (+1.0 / -1.0).
struct Pattern {
    std::vector<double> u;  // length n_pre
    std::vector<double> v;  // length n_post
};

enum class RuleKind {
    Hebbian,
    Oja,
    Allee,
    StdpPair,
    StdpWeight,
    StdpAddMul,
    StdpPower,
    StdpContinuous,
    AlleeTemporal,
};

const char* to_string(RuleKind k);
bool rule_kind_from_string(const std::string& s, RuleKind& out);
bool is_stdp(RuleKind k);

struct LearningRule {
    RuleKind kind = RuleKind::Hebbian;
    double A = 0.0;
    double K = ModelParams::unbounded();
    double eta = 0.01;
    // STDP (Table-1) parameters
    double B_plus = 0.01;
    double B_minus = 0.012;
    double tau_plus = 20.0;
    double tau_minus = 20.0;
    double gamma = 0.7;
    double B = 0.01;       // continuous-time amplitude
    double delta_t = 0.1;  // spike-time difference magnitude
    // temporal eligibility traces
    double kappa = 0.0;
    double lambda_trace = 0.0;
    double tau1 = 0.6;
    double tau2 = 0.6;
};

struct RetrievalResult {
    std::vector<double> retrieved_v;
    int iterations = 0;
    bool converged = false;
    double accuracy = 0.0;  // fraction of components matching the original v
};

inline constexpr double kNormFloor = 1e-6;  // allee column-norm divisor guard
inline constexpr double kWeightInit = 0.01; // init range [-0.01, 0.01]
inline constexpr double kWeightClip = 10.0; // per-entry clip after each update

// P independent uniform +-1 patterns from the given seed.
std::vector<Pattern> generate_patterns(const NetworkShape& shape, int P, std::uint64_t seed);

// One increment matrix (not eta-scaled, not clipped):
//   hebbian: u_i v_j
//   oja:     v_j (u_i - W_ij v_j / K)
//   allee:   oja increment * (1 - A/S_j), S_j = max(sum_i W_ij^2, 1e-6)
//   stdp_*:  Table-1 F((dt)_ij) with (dt)_ij = delta_t * u_i * v_j and
//            w = clamp(W_ij, 0, 1) in the weight-dependent factors
//   allee_temporal: allee increment + kappa e^{-dt/tau1} (dt > 0)
//                                   + lambda e^{-dt/tau2} (dt < 0)
// Throws std::invalid_argument on shape mismatch.
std::vector<double> delta_w(const LearningRule& rule, const WeightTensor& W,
                            const Pattern& pattern);

// The temporal variant only (rule.kind must be AlleeTemporal).
std::vector<double> delta_w_temporal(const LearningRule& rule, const WeightTensor& W,
                                     const Pattern& pattern);

// W init uniform in [-0.01, 0.01] from the seed, then per epoch, per pattern:
// W += eta * delta_w, entries clipped to [-10, 10].
WeightTensor train(const NetworkShape& shape, const LearningRule& rule,
                   const std::vector<Pattern>& patterns, std::uint64_t seed,
                   int epochs = 1);

// Flips exactly round(sigma * len) components, chosen without replacement.
std::vector<double> corrupt(const std::vector<double>& u, double sigma, std::uint64_t seed);

// Bipartite iteration v = sign(u W), u = sign(W v), sign(0) = -1; stops when
// v repeats (converged) or after max_iters. Accuracy scored against v_orig.
RetrievalResult retrieve(const WeightTensor& W, const std::vector<double>& u_noisy,
                         const std::vector<double>& v_orig, int max_iters = 50);

struct AccuracyTable {
    std::vector<RuleKind> rules;
    std::vector<double> sigmas;
    // mean/sd over all (seed, pattern) samples, indexed [rule][sigma]
    std::vector<std::vector<double>> mean;
    std::vector<std::vector<double>> sd;
    long n_samples = 0;  // seeds * patterns per cell
};

// Full harness: per seed, generate patterns (sub-stream 1), train every rule
// on the same init (sub-stream 2), corrupt each pattern at each sigma
// (sub-stream 3, sigma-index, pattern-index — identical cues across rules),
// retrieve and score. Deterministic given seeds; seeds may run in parallel.
AccuracyTable noise_sweep(const NetworkShape& shape, const std::vector<LearningRule>& rules,
                          int P, const std::vector<double>& sigmas,
                          const std::vector<std::uint64_t>& seeds, int epochs = 1,
                          int max_iters = 50);

}  // namespace alleemem
