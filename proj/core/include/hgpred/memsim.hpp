#pragma once

#include <cstdint>
#include <vector>

#include "hgpred/hgp.hpp"

namespace hgpred {

struct NoiseModel {
    double p_data = 0.0;    // per-round data X-flip probability
    double p_meas = 0.0;    // per-round syndrome-flip probability
    std::size_t rounds = 1;
};

/// Spacetime phenomenological Z-decoding graph: variables are per-round data
/// X-errors plus per-round measurement flips (final round noiseless), detectors
/// are consecutive-round syndrome differences. Structurally the product of the
/// Z-Tanner graph with a length-rounds repetition chain.
struct DecodingGraph {
    BitMatrix detector;                    // (m_z * rounds) x num_variables
    BitMatrix logical_action;              // k x num_variables
    std::size_t n = 0;                     // data qubits
    std::size_t mz = 0;
    std::size_t rounds = 0;
    std::vector<double> prior;             // per-variable error prior

    std::size_t num_data_vars() const { return n * rounds; }
    std::size_t num_meas_vars() const { return rounds > 0 ? mz * (rounds - 1) : 0; }
    std::size_t num_vars() const { return num_data_vars() + num_meas_vars(); }
    std::size_t data_var(std::size_t qubit, std::size_t round) const {
        return qubit * rounds + round;
    }
    std::size_t meas_var(std::size_t check, std::size_t round) const {
        return num_data_vars() + check * (rounds - 1) + round;
    }
};

DecodingGraph build_decoding_graph(const CssCode& code, std::size_t rounds);

/// Fill per-variable priors from the noise model, scaled proportionally to
/// variable degree in the decoding graph.
void attach_priors(DecodingGraph& graph, const NoiseModel& noise);

struct MemorySample {
    BitVector detectors;     // flattened (check, round)
    BitVector true_flips;    // logical Z-measurement flips of the injected error
    BitVector error_vars;    // ground-truth variable assignment
};

MemorySample sample_memory(const CssCode& code, const DecodingGraph& graph,
                           const NoiseModel& noise, std::uint64_t seed);

struct BpResult {
    BitVector correction;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Normalized min-sum belief propagation with a serial-among-checks update
/// schedule and per-iteration hard decisions; converged means H e = s exactly.
BpResult bp_decode(const DecodingGraph& graph, const BitVector& detectors,
                   std::size_t max_iters = 60, double normalization = 0.8);

struct TrialResult {
    std::size_t shots = 0;
    std::size_t failures = 0;
    double bler = 0.0;
    double ci_low = 0.0;     // Wilson 95% interval
    double ci_high = 0.0;
};

/// Z-memory Monte Carlo: failure iff the decoder's predicted logical flips
/// differ from the true flips. Shots are split into chunks with per-chunk RNG
/// streams, so results are independent of the thread count.
TrialResult run_memory(const CssCode& code, const NoiseModel& noise, std::size_t shots,
                       std::uint64_t seed, std::size_t threads = 0);

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t shots);

}  // namespace hgpred
