#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfs/basis.hpp"

namespace qfs {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Full parameter set for one simulation scenario. Couplings g1, g2 are in
/// units of omega0; times are in units of 1/omega0 when omega0 = 1.
struct ScenarioConfig {
    std::string name = "custom";

    double g1 = 0.0;
    double g2 = 0.0;
    double omega0 = 1.0;
    std::vector<double> omega_modes = {1.0};
    double delta = 0.0;   // omega_f + omega_fbar - omega0
    double sigma_t = 3.0; // width of the interaction region
    double T = 18.0;      // total pair-process time; envelope centered at T/2
    double t_final = 18.0;

    std::vector<int> boson_cutoffs = {15};
    BasisLabel initial_state{1, {0}};

    double integrator_step = kTwoPi / 1000.0;
    double sample_every = kTwoPi / 100.0;
    int dyson_order = 6;
    int dyson_nodes = 32; // quadrature points per unit time
    std::uint64_t rng_seed = 12345;
    bool emit_dyson = false;

    void validate() const; // throws std::invalid_argument on bad values
};

struct GaussianEnvelope {
    double center = 0.0;
    double width = 1.0;
};

/// One term of the interaction Hamiltonian: amplitude * envelope(t) *
/// exp(-i * frequency * t) * op. Terms come in hermitian-conjugate pairs so
/// the instantaneous sum is exactly hermitian.
struct HamiltonianTerm {
    SparseOperator op;
    cplx amplitude = 0.0;
    double frequency = 0.0; // the omega in exp(-i omega t)
    std::optional<GaussianEnvelope> envelope;
    std::string ion_op_label; // displacement | red-sideband | blue-sideband | h.c.-partner
};

/// Time-dependent pair coupling g(t) = g2 * omega0 * exp(-(t-T/2)^2 / (2 sigma_t^2)).
double envelope_value(double t, const ScenarioConfig& cfg);

/// Scalar coefficient of one term at time t.
cplx term_coefficient(const HamiltonianTerm& term, double t);

/// Assembles the interaction Hamiltonian: a displacement term per boson mode
/// at frequency omega_k, plus the envelope-modulated pair terms (red and
/// blue sidebands between levels 1 and 4) on mode 0, each with its h.c.
/// partner. 6 terms for one mode, 4 + 2*modes in general.
std::vector<HamiltonianTerm> build_hamiltonian(const ScenarioConfig& cfg,
                                               const HilbertSpace& space);

/// Instantaneous Hamiltonian matrix, exactly hermitian.
SparseOperator evaluate_hamiltonian(const std::vector<HamiltonianTerm>& terms, double t);

}  // namespace qfs
