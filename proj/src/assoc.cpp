#include "alleemem/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "alleemem/kernels.hpp"
#include "alleemem/parallel.hpp"
#include "alleemem/rng.hpp"

namespace alleemem {

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::Hebbian: return "hebbian";
        case RuleKind::Oja: return "oja";
        case RuleKind::Allee: return "allee";
        case RuleKind::StdpPair: return "stdp_pair";
        case RuleKind::StdpWeight: return "stdp_weight";
        case RuleKind::StdpAddMul: return "stdp_addmul";
        case RuleKind::StdpPower: return "stdp_power";
        case RuleKind::StdpContinuous: return "stdp_continuous";
        case RuleKind::AlleeTemporal: return "allee_temporal";
    }
    return "?";
}

bool rule_kind_from_string(const std::string& s, RuleKind& out) {
    static const std::pair<const char*, RuleKind> table[] = {
        {"hebbian", RuleKind::Hebbian},
        {"oja", RuleKind::Oja},
        {"allee", RuleKind::Allee},
        {"stdp_pair", RuleKind::StdpPair},
        {"stdp_weight", RuleKind::StdpWeight},
        {"stdp_addmul", RuleKind::StdpAddMul},
        {"stdp_power", RuleKind::StdpPower},
        {"stdp_continuous", RuleKind::StdpContinuous},
        {"allee_temporal", RuleKind::AlleeTemporal},
    };
    for (const auto& [name, kind] : table)
        if (s == name) {
            out = kind;
            return true;
        }
    return false;
}

bool is_stdp(RuleKind k) {
    return k == RuleKind::StdpPair || k == RuleKind::StdpWeight ||
           k == RuleKind::StdpAddMul || k == RuleKind::StdpPower ||
           k == RuleKind::StdpContinuous;
}

namespace {

// Table-1 branch constants; shared by the oracle (delta_w) and the fused
// training path so the two compute bit-identical increments.
double stdp_pos(const LearningRule& r) { return r.B_plus * std::exp(-r.delta_t / r.tau_plus); }
double stdp_neg(const LearningRule& r) { return -r.B_minus * std::exp(-r.delta_t / r.tau_minus); }
double stdp_cont(const LearningRule& r) {
    return r.B * r.delta_t / (r.tau_plus * r.tau_plus) * std::exp(-r.delta_t / r.tau_plus);
}
double trace_pos(const LearningRule& r) { return r.kappa * std::exp(-r.delta_t / r.tau1); }
double trace_neg(const LearningRule& r) { return r.lambda_trace * std::exp(r.delta_t / r.tau2); }

double inv_k(const LearningRule& r) { return std::isinf(r.K) ? 0.0 : 1.0 / r.K; }

void check_shapes(const WeightTensor& W, const Pattern& pat) {
    const auto nu = static_cast<size_t>(W.shape.n_pre());
    const auto nv = static_cast<size_t>(W.shape.n_post());
    if (W.w.size() != nu * nv || pat.u.size() != nu || pat.v.size() != nv)
        throw std::invalid_argument("delta_w: pattern/weight shape mismatch");
}

// S_j = max(sum_i W_ij^2, 1e-6); f_j = 1 - A/S_j. Plain loops, but the
// accumulation order matches the colnorms kernel so results agree bitwise.
std::vector<double> allee_factors(const WeightTensor& W, double A) {
    const auto nu = static_cast<size_t>(W.shape.n_pre());
    const auto nv = static_cast<size_t>(W.shape.n_post());
    std::vector<double> S(nv, 0.0);
    for (size_t i = 0; i < nu; ++i) {
        const double* row = W.w.data() + i * nv;
        for (size_t j = 0; j < nv; ++j) S[j] += row[j] * row[j];
    }
    for (size_t j = 0; j < nv; ++j) {
        const double s = S[j] < kNormFloor ? kNormFloor : S[j];
        S[j] = 1.0 - A / s;
    }
    return S;
}

}  // namespace

std::vector<Pattern> generate_patterns(const NetworkShape& shape, int P, std::uint64_t seed) {
    if (P < 1) throw std::invalid_argument("generate_patterns: P >= 1");
    Rng rng(seed);
    std::vector<Pattern> out(static_cast<size_t>(P));
    for (auto& pat : out) {
        pat.u.resize(static_cast<size_t>(shape.n_pre()));
        pat.v.resize(static_cast<size_t>(shape.n_post()));
        for (auto& x : pat.u) x = rng.next_double() < 0.5 ? -1.0 : 1.0;
        for (auto& x : pat.v) x = rng.next_double() < 0.5 ? -1.0 : 1.0;
    }
    return out;
}

std::vector<double> delta_w(const LearningRule& rule, const WeightTensor& W,
                            const Pattern& pattern) {
    if (rule.kind == RuleKind::AlleeTemporal) return delta_w_temporal(rule, W, pattern);
    check_shapes(W, pattern);
    const auto nu = static_cast<size_t>(W.shape.n_pre());
    const auto nv = static_cast<size_t>(W.shape.n_post());
    const double* u = pattern.u.data();
    const double* v = pattern.v.data();
    std::vector<double> dw(nu * nv, 0.0);

    if (is_stdp(rule.kind) && rule.delta_t == 0.0) return dw;  // dt = 0: no branch fires

    switch (rule.kind) {
        case RuleKind::Hebbian:
        case RuleKind::Oja:
        case RuleKind::Allee: {
            const double invK = rule.kind == RuleKind::Hebbian ? 0.0 : inv_k(rule);
            std::vector<double> f;
            if (rule.kind == RuleKind::Allee) f = allee_factors(W, rule.A);
            for (size_t i = 0; i < nu; ++i) {
                const double ui = u[i];
                const double* row = W.w.data() + i * nv;
                double* out = dw.data() + i * nv;
                for (size_t j = 0; j < nv; ++j) {
                    double t = v[j] * (ui - (row[j] * v[j]) * invK);
                    if (!f.empty()) t = t * f[j];
                    out[j] = t;
                }
            }
            break;
        }
        case RuleKind::StdpPair:
        case RuleKind::StdpContinuous: {
            const double pos = rule.kind == RuleKind::StdpPair ? stdp_pos(rule) : stdp_cont(rule);
            const double neg = rule.kind == RuleKind::StdpPair ? stdp_neg(rule) : -stdp_cont(rule);
            for (size_t i = 0; i < nu; ++i)
                for (size_t j = 0; j < nv; ++j)
                    dw[i * nv + j] = u[i] * v[j] > 0.0 ? pos : neg;
            break;
        }
        case RuleKind::StdpWeight:
        case RuleKind::StdpAddMul: {
            const double pos = stdp_pos(rule), neg = stdp_neg(rule);
            for (size_t i = 0; i < nu; ++i) {
                const double* row = W.w.data() + i * nv;
                for (size_t j = 0; j < nv; ++j) {
                    double w = row[j];
                    w = w > 0.0 ? w : 0.0;
                    w = w < 1.0 ? w : 1.0;
                    dw[i * nv + j] = u[i] * v[j] > 0.0 ? pos * (1.0 - w) : neg * w;
                }
            }
            break;
        }
        case RuleKind::StdpPower: {
            const double pos = stdp_pos(rule), neg = stdp_neg(rule);
            for (size_t i = 0; i < nu; ++i) {
                const double* row = W.w.data() + i * nv;
                for (size_t j = 0; j < nv; ++j) {
                    double w = row[j];
                    w = w > 0.0 ? w : 0.0;
                    w = w < 1.0 ? w : 1.0;
                    dw[i * nv + j] = u[i] * v[j] > 0.0 ? pos * std::pow(1.0 - w, rule.gamma)
                                                       : neg * std::pow(w, rule.gamma);
                }
            }
            break;
        }
        case RuleKind::AlleeTemporal:
            break;  // handled above
    }
    return dw;
}

std::vector<double> delta_w_temporal(const LearningRule& rule, const WeightTensor& W,
                                     const Pattern& pattern) {
    if (rule.kind != RuleKind::AlleeTemporal)
        throw std::invalid_argument("delta_w_temporal: rule.kind must be allee_temporal");
    check_shapes(W, pattern);
    const auto nu = static_cast<size_t>(W.shape.n_pre());
    const auto nv = static_cast<size_t>(W.shape.n_post());
    const double* u = pattern.u.data();
    const double* v = pattern.v.data();
    const double invK = inv_k(rule);
    const std::vector<double> f = allee_factors(W, rule.A);
    std::vector<double> dw(nu * nv);

    const bool traced = rule.delta_t != 0.0 && !(rule.kappa == 0.0 && rule.lambda_trace == 0.0);
    const double tp = trace_pos(rule), tn = trace_neg(rule);
    for (size_t i = 0; i < nu; ++i) {
        const double ui = u[i];
        const double* row = W.w.data() + i * nv;
        double* out = dw.data() + i * nv;
        for (size_t j = 0; j < nv; ++j) {
            const double t = (v[j] * (ui - (row[j] * v[j]) * invK)) * f[j];
            // no `t + 0.0` when traces are off: that would flip -0.0 to +0.0
            // and break the bit-for-bit equivalence with plain allee
            out[j] = traced ? t + (ui * v[j] > 0.0 ? tp : tn) : t;
        }
    }
    return dw;
}

WeightTensor train(const NetworkShape& shape, const LearningRule& rule,
                   const std::vector<Pattern>& patterns, std::uint64_t seed, int epochs) {
    if (epochs < 0) throw std::invalid_argument("train: epochs >= 0");
    const auto nu = static_cast<size_t>(shape.n_pre());
    const auto nv = static_cast<size_t>(shape.n_post());
    WeightTensor W;
    W.shape = shape;
    W.w.resize(nu * nv);
    Rng rng(seed);
    for (auto& x : W.w) x = rng.uniform(-kWeightInit, kWeightInit);

    for (const auto& pat : patterns) check_shapes(W, pat);

    const Kernels& k = active_kernels();
    const double invK = rule.kind == RuleKind::Hebbian ? 0.0 : inv_k(rule);
    std::vector<double> S(nv), f(nv);

    for (int e = 0; e < epochs; ++e) {
        for (const auto& pat : patterns) {
            const double* u = pat.u.data();
            const double* v = pat.v.data();
            double* w = W.w.data();
            switch (rule.kind) {
                case RuleKind::Hebbian:
                case RuleKind::Oja:
                    k.update_oja_family(w, nu, nv, u, v, rule.eta, invK, nullptr, kWeightClip);
                    break;
                case RuleKind::Allee: {
                    k.colnorms(w, nu, nv, S.data());
                    for (size_t j = 0; j < nv; ++j) {
                        const double s = S[j] < kNormFloor ? kNormFloor : S[j];
                        f[j] = 1.0 - rule.A / s;
                    }
                    k.update_oja_family(w, nu, nv, u, v, rule.eta, invK, f.data(), kWeightClip);
                    break;
                }
                case RuleKind::StdpPair:
                    if (rule.delta_t == 0.0) break;
                    k.update_signed_const(w, nu, nv, u, v, rule.eta, stdp_pos(rule),
                                          stdp_neg(rule), kWeightClip);
                    break;
                case RuleKind::StdpContinuous: {
                    if (rule.delta_t == 0.0) break;
                    const double c = stdp_cont(rule);
                    k.update_signed_const(w, nu, nv, u, v, rule.eta, c, -c, kWeightClip);
                    break;
                }
                case RuleKind::StdpWeight:
                case RuleKind::StdpAddMul:
                    if (rule.delta_t == 0.0) break;
                    k.update_weight_dep(w, nu, nv, u, v, rule.eta, stdp_pos(rule),
                                        stdp_neg(rule), kWeightClip);
                    break;
                case RuleKind::StdpPower: {
                    if (rule.delta_t == 0.0) break;
                    // pow() keeps this branch scalar in both SIMD modes
                    const double pos = stdp_pos(rule), neg = stdp_neg(rule);
                    for (size_t i = 0; i < nu; ++i) {
                        double* row = w + i * nv;
                        const double ui = u[i];
                        for (size_t j = 0; j < nv; ++j) {
                            double wc = row[j];
                            wc = wc > 0.0 ? wc : 0.0;
                            wc = wc < 1.0 ? wc : 1.0;
                            const double incr = ui * v[j] > 0.0
                                                    ? pos * std::pow(1.0 - wc, rule.gamma)
                                                    : neg * std::pow(wc, rule.gamma);
                            double nw = row[j] + rule.eta * incr;
                            nw = nw < -kWeightClip ? -kWeightClip : nw;
                            row[j] = nw > kWeightClip ? kWeightClip : nw;
                        }
                    }
                    break;
                }
                case RuleKind::AlleeTemporal: {
                    k.colnorms(w, nu, nv, S.data());
                    for (size_t j = 0; j < nv; ++j) {
                        const double s = S[j] < kNormFloor ? kNormFloor : S[j];
                        f[j] = 1.0 - rule.A / s;
                    }
                    const bool traced = rule.delta_t != 0.0 &&
                                        !(rule.kappa == 0.0 && rule.lambda_trace == 0.0);
                    if (!traced)
                        k.update_oja_family(w, nu, nv, u, v, rule.eta, invK, f.data(),
                                            kWeightClip);
                    else
                        k.update_allee_traced(w, nu, nv, u, v, rule.eta, invK, f.data(),
                                              trace_pos(rule), trace_neg(rule), kWeightClip);
                    break;
                }
            }
        }
    }
    return W;
}

std::vector<double> corrupt(const std::vector<double>& u, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0 && sigma <= 1.0))
        throw std::invalid_argument("corrupt: sigma must lie in [0, 1]");
    const size_t n = u.size();
    const auto k = static_cast<size_t>(std::llround(sigma * static_cast<double>(n)));
    std::vector<double> out = u;
    if (k == 0) return out;

    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (size_t t = 0; t < k; ++t) {
        const size_t j = t + rng.below(static_cast<std::uint64_t>(n - t));
        std::swap(idx[t], idx[j]);
        out[idx[t]] = -out[idx[t]];
    }
    return out;
}

RetrievalResult retrieve(const WeightTensor& W, const std::vector<double>& u_noisy,
                         const std::vector<double>& v_orig, int max_iters) {
    const auto nu = static_cast<size_t>(W.shape.n_pre());
    const auto nv = static_cast<size_t>(W.shape.n_post());
    if (W.w.size() != nu * nv || u_noisy.size() != nu || v_orig.size() != nv)
        throw std::invalid_argument("retrieve: shape mismatch");

    const Kernels& k = active_kernels();
    std::vector<double> u = u_noisy, v(nv), v_new(nv), acc_v(nv), acc_u(nu);
    auto sign_into = [](const std::vector<double>& raw, std::vector<double>& out) {
        for (size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] > 0.0 ? 1.0 : -1.0;
    };

    k.matvec_uW(W.w.data(), nu, nv, u.data(), acc_v.data());
    sign_into(acc_v, v);

    RetrievalResult res;
    for (int it = 1; it <= max_iters; ++it) {
        k.matvec_Wv(W.w.data(), nu, nv, v.data(), acc_u.data());
        sign_into(acc_u, u);
        k.matvec_uW(W.w.data(), nu, nv, u.data(), acc_v.data());
        sign_into(acc_v, v_new);
        res.iterations = it;
        if (v_new == v) {
            res.converged = true;
            break;
        }
        v.swap(v_new);
    }
    res.retrieved_v = std::move(v);
    size_t hits = 0;
    for (size_t j = 0; j < nv; ++j)
        if (res.retrieved_v[j] == v_orig[j]) ++hits;
    res.accuracy = static_cast<double>(hits) / static_cast<double>(nv);
    return res;
}

AccuracyTable noise_sweep(const NetworkShape& shape, const std::vector<LearningRule>& rules,
                          int P, const std::vector<double>& sigmas,
                          const std::vector<std::uint64_t>& seeds, int epochs,
                          int max_iters) {
    if (rules.empty() || sigmas.empty() || seeds.empty() || P < 1)
        throw std::invalid_argument("noise_sweep: rules, sigmas, seeds nonempty and P >= 1");

    const size_t nr = rules.size(), ns = sigmas.size();
    struct Partial {
        std::vector<double> sum, sumsq;  // [rule*ns + sigma]
    };
    std::vector<Partial> per_seed(seeds.size());

    parallel_for(seeds.size(), [&](size_t si_seed) {
        const std::uint64_t seed = seeds[si_seed];
        Partial part;
        part.sum.assign(nr * ns, 0.0);
        part.sumsq.assign(nr * ns, 0.0);

        const auto patterns =
            generate_patterns(shape, P, derive_seed({seed, 1}));
        const std::uint64_t init_seed = derive_seed({seed, 2});

        std::vector<WeightTensor> weights(nr);
        for (size_t r = 0; r < nr; ++r)
            weights[r] = train(shape, rules[r], patterns, init_seed, epochs);

        for (size_t s = 0; s < ns; ++s) {
            for (int mu = 0; mu < P; ++mu) {
                const auto cue =
                    corrupt(patterns[static_cast<size_t>(mu)].u, sigmas[s],
                            derive_seed({seed, 3, s, static_cast<std::uint64_t>(mu)}));
                for (size_t r = 0; r < nr; ++r) {
                    const auto res = retrieve(weights[r], cue,
                                              patterns[static_cast<size_t>(mu)].v, max_iters);
                    part.sum[r * ns + s] += res.accuracy;
                    part.sumsq[r * ns + s] += res.accuracy * res.accuracy;
                }
            }
        }
        per_seed[si_seed] = std::move(part);
    });

    AccuracyTable table;
    table.rules.reserve(nr);
    for (const auto& r : rules) table.rules.push_back(r.kind);
    table.sigmas = sigmas;
    table.n_samples = static_cast<long>(seeds.size()) * P;
    table.mean.assign(nr, std::vector<double>(ns, 0.0));
    table.sd.assign(nr, std::vector<double>(ns, 0.0));
    for (size_t r = 0; r < nr; ++r) {
        for (size_t s = 0; s < ns; ++s) {
            double sum = 0.0, sumsq = 0.0;
            for (const auto& part : per_seed) {  // seed order: deterministic
                sum += part.sum[r * ns + s];
                sumsq += part.sumsq[r * ns + s];
            }
            const double n = static_cast<double>(table.n_samples);
            const double mean = sum / n;
            const double var = std::max(0.0, sumsq / n - mean * mean);
            table.mean[r][s] = mean;
            table.sd[r][s] = std::sqrt(var);
        }
    }
    return table;
}

}  // namespace alleemem
