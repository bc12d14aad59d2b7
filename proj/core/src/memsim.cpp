#include "hgpred/memsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "hgpred/reducer.hpp"

namespace hgpred {

DecodingGraph build_decoding_graph(const CssCode& code, std::size_t rounds) {
    if (rounds < 1) throw std::invalid_argument("build_decoding_graph: rounds must be >= 1");
    if (!code.logical_z)
        throw std::invalid_argument("build_decoding_graph: code needs canonical logicals");

    DecodingGraph g;
    g.n = code.n();
    g.mz = code.hz.rows();
    g.rounds = rounds;

    // Data block: hz x I_rounds (an error in round r flips that round's
    // detector only, since later syndrome differences cancel). Measurement
    // block: I_mz x rep^T couples flip (c, r) to detectors (c, r) and (c, r+1).
    BitMatrix data_block = kron(code.hz, BitMatrix::identity(rounds));
    if (rounds > 1) {
        BitMatrix rep = local_repetition_transform(rounds);   // (rounds-1) x rounds
        BitMatrix meas_block = kron(BitMatrix::identity(g.mz), transpose(rep));
        g.detector = hstack(data_block, meas_block);
    } else {
        g.detector = std::move(data_block);
    }

    const BitMatrix& lz = *code.logical_z;
    g.logical_action = BitMatrix(lz.rows(), g.num_vars());
    for (std::size_t i = 0; i < lz.rows(); ++i)
        for (std::size_t q : lz.row_support(i))
            for (std::size_t r = 0; r < rounds; ++r)
                g.logical_action.set(i, g.data_var(q, r), true);
    return g;
}

void attach_priors(DecodingGraph& graph, const NoiseModel& noise) {
    if (noise.p_data < 0 || noise.p_data > 0.5 || noise.p_meas < 0 || noise.p_meas > 0.5)
        throw std::invalid_argument("attach_priors: probabilities must lie in [0, 0.5]");
    std::size_t nv = graph.num_vars();
    std::vector<std::size_t> degree(nv, 0);
    for (std::size_t r = 0; r < graph.detector.rows(); ++r)
        for (std::size_t v : graph.detector.row_support(r)) ++degree[v];
    double mean = 0.0;
    for (auto d : degree) mean += static_cast<double>(d);
    mean = nv ? mean / static_cast<double>(nv) : 1.0;

    graph.prior.assign(nv, 0.0);
    for (std::size_t v = 0; v < nv; ++v) {
        double base = v < graph.num_data_vars() ? noise.p_data : noise.p_meas;
        double scaled = base * (mean > 0 ? static_cast<double>(degree[v]) / mean : 1.0);
        graph.prior[v] = std::clamp(scaled, 1e-12, 0.49);
    }
}

MemorySample sample_memory(const CssCode& code, const DecodingGraph& graph,
                           const NoiseModel& noise, std::uint64_t seed) {
    if (graph.rounds != noise.rounds)
        throw std::invalid_argument("sample_memory: graph and noise round counts differ");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip_data(noise.p_data);
    std::bernoulli_distribution flip_meas(noise.p_meas);

    MemorySample s;
    s.error_vars = BitVector(graph.num_vars());
    s.detectors = BitVector(graph.mz * graph.rounds);

    BitVector cumulative(code.n());
    BitVector prev_syndrome(graph.mz);
    for (std::size_t r = 0; r < graph.rounds; ++r) {
        for (std::size_t q = 0; q < code.n(); ++q) {
            if (noise.p_data > 0 && flip_data(rng)) {
                cumulative.flip(q);
                s.error_vars.flip(graph.data_var(q, r));
            }
        }
        BitVector syndrome = matvec(code.hz, cumulative);
        if (r + 1 < graph.rounds) {   // final round reads out noiselessly
            for (std::size_t c = 0; c < graph.mz; ++c) {
                if (noise.p_meas > 0 && flip_meas(rng)) {
                    syndrome.flip(c);
                    s.error_vars.flip(graph.meas_var(c, r));
                }
            }
        }
        BitVector diff = syndrome;
        diff.xor_with(prev_syndrome);
        for (std::size_t c = 0; c < graph.mz; ++c)
            if (diff.get(c)) s.detectors.flip(c * graph.rounds + r);
        prev_syndrome = std::move(syndrome);
    }
    s.true_flips = matvec(*code.logical_z, cumulative);
    return s;
}

namespace {

struct SparseGraph {
    std::vector<std::vector<std::size_t>> check_vars;
    std::vector<std::vector<std::size_t>> var_checks;
    std::vector<std::vector<std::size_t>> edge_index;   // per check, position keys
};

}  // namespace

BpResult bp_decode(const DecodingGraph& graph, const BitVector& detectors, std::size_t max_iters,
                   double normalization) {
    if (graph.prior.size() != graph.num_vars())
        throw std::invalid_argument("bp_decode: priors not attached");
    if (detectors.size() != graph.detector.rows())
        throw std::invalid_argument("bp_decode: detector length mismatch");

    std::size_t nc = graph.detector.rows();
    std::size_t nv = graph.num_vars();

    std::vector<std::vector<std::size_t>> check_vars(nc);
    for (std::size_t c = 0; c < nc; ++c) check_vars[c] = graph.detector.row_support(c);

    std::vector<double> posterior(nv);
    std::vector<double> llr0(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        llr0[v] = std::log((1.0 - graph.prior[v]) / graph.prior[v]);
        posterior[v] = llr0[v];
    }

    // check-to-variable messages, stored per (check, slot)
    std::vector<std::vector<double>> c2v(nc);
    for (std::size_t c = 0; c < nc; ++c) c2v[c].assign(check_vars[c].size(), 0.0);

    BpResult result;
    result.correction = BitVector(nv);

    auto hard_decide = [&]() {
        for (std::size_t v = 0; v < nv; ++v) result.correction.set(v, posterior[v] < 0.0);
    };
    auto satisfied = [&]() {
        return matvec(graph.detector, result.correction) == detectors;
    };

    if (detectors.is_zero()) {          // nothing to explain
        hard_decide();
        if (result.correction.is_zero()) {
            result.converged = true;
            return result;
        }
    }

    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        for (std::size_t c = 0; c < nc; ++c) {
            const auto& vars = check_vars[c];
            if (vars.empty()) continue;
            // Peel off the old message, then min-sum combine.
            double min1 = 1e300, min2 = 1e300;
            std::size_t argmin = 0;
            int sign = detectors.get(c) ? -1 : 1;
            static thread_local std::vector<double> t;
            t.resize(vars.size());
            for (std::size_t s = 0; s < vars.size(); ++s) {
                double m = posterior[vars[s]] - c2v[c][s];
                t[s] = m;
                double a = std::fabs(m);
                if (m < 0) sign = -sign;
                if (a < min1) {
                    min2 = min1;
                    min1 = a;
                    argmin = s;
                } else if (a < min2) {
                    min2 = a;
                }
            }
            for (std::size_t s = 0; s < vars.size(); ++s) {
                double mag = (s == argmin) ? min2 : min1;
                int msg_sign = sign * (t[s] < 0 ? -1 : 1);
                double msg = normalization * msg_sign * mag;
                c2v[c][s] = msg;
                posterior[vars[s]] = t[s] + msg;
            }
        }
        hard_decide();
        result.iterations = iter;
        if (satisfied()) {
            result.converged = true;
            return result;
        }
    }
    hard_decide();
    result.converged = satisfied();
    return result;
}

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t shots) {
    if (shots == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;   // 95%
    double n = static_cast<double>(shots);
    double p = static_cast<double>(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    double lo = failures == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = failures == shots ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

TrialResult run_memory(const CssCode& code, const NoiseModel& noise, std::size_t shots,
                       std::uint64_t seed, std::size_t threads) {
    if (!code.logical_z)
        throw std::invalid_argument("run_memory: code needs canonical logicals");
    DecodingGraph graph = build_decoding_graph(code, noise.rounds);
    attach_priors(graph, noise);

    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    // Fixed chunking makes the failure count independent of the thread count.
    constexpr std::size_t kChunk = 256;
    std::size_t num_chunks = (shots + kChunk - 1) / kChunk;

    auto run_chunk = [&](std::size_t chunk) {
        std::size_t begin = chunk * kChunk;
        std::size_t end = std::min(shots, begin + kChunk);
        std::size_t failures = 0;
        for (std::size_t shot = begin; shot < end; ++shot) {
            std::uint64_t shot_seed = seed ^ (0x9e3779b97f4a7c15ull * (shot + 1));
            MemorySample s = sample_memory(code, graph, noise, shot_seed);
            BpResult decoded = bp_decode(graph, s.detectors);
            BitVector predicted = matvec(graph.logical_action, decoded.correction);
            predicted.xor_with(s.true_flips);
            if (!predicted.is_zero()) ++failures;
        }
        return failures;
    };

    std::vector<std::size_t> chunk_failures(num_chunks, 0);
    if (threads <= 1 || num_chunks <= 1) {
        for (std::size_t c = 0; c < num_chunks; ++c) chunk_failures[c] = run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                while (true) {
                    std::size_t c = next.fetch_add(1);
                    if (c >= num_chunks) break;
                    chunk_failures[c] = run_chunk(c);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    TrialResult result;
    result.shots = shots;
    for (auto f : chunk_failures) result.failures += f;
    result.bler = shots ? static_cast<double>(result.failures) / static_cast<double>(shots) : 0.0;
    auto [lo, hi] = wilson_interval(result.failures, shots);
    result.ci_low = lo;
    result.ci_high = hi;
    return result;
}

}  // namespace hgpred
