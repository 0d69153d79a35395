#include "qfs/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfs {

void ScenarioConfig::validate() const {
    if (g1 < 0.0 || g2 < 0.0) throw std::invalid_argument("couplings g1, g2 must be >= 0");
    if (omega0 <= 0.0) throw std::invalid_argument("omega0 must be > 0");
    if (sigma_t <= 0.0) throw std::invalid_argument("sigma_t must be > 0");
    if (T <= 0.0) throw std::invalid_argument("T must be > 0");
    if (t_final <= 0.0) throw std::invalid_argument("t_final must be > 0");
    if (integrator_step <= 0.0) throw std::invalid_argument("integrator_step must be > 0");
    if (sample_every <= 0.0) throw std::invalid_argument("sample_every must be > 0");
    if (boson_cutoffs.empty()) throw std::invalid_argument("at least one boson mode is required");
    for (int c : boson_cutoffs) {
        if (c < 1) throw std::invalid_argument("boson cutoff must be >= 1");
    }
    if (omega_modes.size() != boson_cutoffs.size()) {
        throw std::invalid_argument("omega_modes length must equal boson_cutoffs length");
    }
    if (initial_state.occupations.size() != boson_cutoffs.size()) {
        throw std::invalid_argument("initial_state occupations must cover every mode");
    }
    if (initial_state.level < 1 || initial_state.level > HilbertSpace::kLevels) {
        throw std::invalid_argument("initial_state level must be in 1..4");
    }
    for (std::size_t k = 0; k < boson_cutoffs.size(); ++k) {
        const int n = initial_state.occupations[k];
        if (n < 0 || n > boson_cutoffs[k]) {
            throw std::invalid_argument("initial occupation exceeds cutoff for mode " +
                                        std::to_string(k));
        }
    }
    if (dyson_order < 1) throw std::invalid_argument("dyson_order must be >= 1");
    if (dyson_nodes < 10) throw std::invalid_argument("dyson_nodes must be >= 10");
}

double envelope_value(double t, const ScenarioConfig& cfg) {
    const double u = (t - cfg.T / 2.0) / cfg.sigma_t;
    return cfg.g2 * cfg.omega0 * std::exp(-0.5 * u * u);
}

cplx term_coefficient(const HamiltonianTerm& term, double t) {
    cplx coeff = term.amplitude * std::polar(1.0, -term.frequency * t);
    if (term.envelope) {
        const double u = (t - term.envelope->center) / term.envelope->width;
        coeff *= std::exp(-0.5 * u * u);
    }
    return coeff;
}

std::vector<HamiltonianTerm> build_hamiltonian(const ScenarioConfig& cfg,
                                               const HilbertSpace& space) {
    cfg.validate();
    if (space.cutoffs() != cfg.boson_cutoffs) {
        throw std::invalid_argument("space cutoffs do not match the configuration");
    }

    std::vector<HamiltonianTerm> terms;
    const double g1 = cfg.g1 * cfg.omega0;
    const double g2 = cfg.g2 * cfg.omega0;

    if (g1 != 0.0) {
        // (|1><1| + 2|2><2| + |4><4|) a_k at frequency omega_k, plus h.c.
        const SparseOperator weights = level_transition(space, 1, 1) +
                                       cplx(2.0) * level_transition(space, 2, 2) +
                                       level_transition(space, 4, 4);
        for (int k = 0; k < space.n_modes(); ++k) {
            const SparseOperator a = boson_annihilation(space, k);
            terms.push_back({weights * a, g1, cfg.omega_modes[k], std::nullopt, "displacement"});
            terms.push_back({weights * a.adjoint(), g1, -cfg.omega_modes[k], std::nullopt,
                             "h.c.-partner"});
        }
    }

    if (g2 != 0.0) {
        // pair terms couple |1><4| to mode 0 only
        const GaussianEnvelope env{cfg.T / 2.0, cfg.sigma_t};
        const SparseOperator t14 = level_transition(space, 1, 4);
        const SparseOperator t41 = level_transition(space, 4, 1);
        const SparseOperator a0 = boson_annihilation(space, 0);
        const SparseOperator a0_dag = a0.adjoint();

        terms.push_back({t14 * a0_dag, -g2, cfg.delta, env, "red-sideband"});
        terms.push_back({t41 * a0, -g2, -cfg.delta, env, "h.c.-partner"});
        terms.push_back({t14 * a0, -g2, 2.0 * cfg.omega0 + cfg.delta, env, "blue-sideband"});
        terms.push_back({t41 * a0_dag, -g2, -(2.0 * cfg.omega0 + cfg.delta), env, "h.c.-partner"});
    }

    return terms;
}

SparseOperator evaluate_hamiltonian(const std::vector<HamiltonianTerm>& terms, double t) {
    if (terms.empty()) return SparseOperator::from_triplets(0, {});
    const int dim = terms.front().op.dimension();
    std::vector<Eigen::Triplet<cplx>> trips;
    for (const auto& term : terms) {
        const cplx coeff = term_coefficient(term, t);
        for (const auto& [r, c, v] : term.op.entries()) {
            trips.emplace_back(r, c, coeff * v);
        }
    }
    return SparseOperator::from_triplets(dim, trips);
}

}  // namespace qfs
