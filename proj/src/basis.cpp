#include "qfs/basis.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qfs {

namespace {

void check_level(int level) {
    if (level < 1 || level > HilbertSpace::kLevels) {
        throw std::invalid_argument("level must be in 1..4, got " + std::to_string(level));
    }
}

}  // namespace

HilbertSpace::HilbertSpace(std::vector<int> boson_cutoffs) : cutoffs_(std::move(boson_cutoffs)) {
    if (cutoffs_.empty()) {
        throw std::invalid_argument("at least one boson mode is required");
    }
    dim_ = kLevels;
    for (int c : cutoffs_) {
        if (c < 1) {
            throw std::invalid_argument("boson cutoff must be >= 1, got " + std::to_string(c));
        }
        dim_ *= c + 1;
    }
}

int HilbertSpace::cutoff(int mode) const {
    if (mode < 0 || mode >= n_modes()) {
        throw std::invalid_argument("mode index out of range: " + std::to_string(mode));
    }
    return cutoffs_[mode];
}

int HilbertSpace::index_of(const BasisLabel& label) const {
    check_level(label.level);
    if (static_cast<int>(label.occupations.size()) != n_modes()) {
        throw std::invalid_argument("occupation list length does not match mode count");
    }
    int idx = label.level - 1;
    for (int k = 0; k < n_modes(); ++k) {
        const int n = label.occupations[k];
        if (n < 0 || n > cutoffs_[k]) {
            throw std::invalid_argument("occupation exceeds cutoff for mode " + std::to_string(k));
        }
        idx = idx * (cutoffs_[k] + 1) + n;
    }
    return idx;
}

BasisLabel HilbertSpace::label_of(int index) const {
    if (index < 0 || index >= dim_) {
        throw std::invalid_argument("basis index out of range: " + std::to_string(index));
    }
    BasisLabel label;
    label.occupations.resize(n_modes());
    for (int k = n_modes() - 1; k >= 0; --k) {
        const int d = cutoffs_[k] + 1;
        label.occupations[k] = index % d;
        index /= d;
    }
    label.level = index + 1;
    return label;
}

SparseOperator SparseOperator::identity(int dim) {
    Matrix m(dim, dim);
    m.setIdentity();
    return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::from_triplets(int dim,
                                             const std::vector<Eigen::Triplet<cplx>>& entries) {
    Matrix m(dim, dim);
    m.setFromTriplets(entries.begin(), entries.end());
    return SparseOperator(std::move(m));
}

std::vector<std::tuple<int, int, cplx>> SparseOperator::entries() const {
    std::vector<std::tuple<int, int, cplx>> out;
    out.reserve(static_cast<std::size_t>(mat_.nonZeros()));
    for (int k = 0; k < mat_.outerSize(); ++k) {
        for (Matrix::InnerIterator it(mat_, k); it; ++it) {
            if (it.value() != cplx(0.0, 0.0)) {
                out.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
            }
        }
    }
    return out;
}

namespace {

std::map<std::pair<int, int>, cplx> entry_map(const SparseOperator& op) {
    std::map<std::pair<int, int>, cplx> m;
    for (const auto& [r, c, v] : op.entries()) {
        m[{r, c}] = v;
    }
    return m;
}

}  // namespace

bool SparseOperator::is_hermitian() const {
    if (mat_.rows() != mat_.cols()) return false;
    const auto m = entry_map(*this);
    for (const auto& [rc, v] : m) {
        const auto it = m.find({rc.second, rc.first});
        const cplx other = it == m.end() ? cplx(0.0, 0.0) : it->second;
        if (v != std::conj(other)) return false;
    }
    return true;
}

SparseOperator SparseOperator::adjoint() const {
    Matrix m = mat_.adjoint();
    return SparseOperator(std::move(m));
}

bool SparseOperator::exact_equal(const SparseOperator& a, const SparseOperator& b) {
    if (a.dimension() != b.dimension()) return false;
    return entry_map(a) == entry_map(b);
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator(SparseOperator::Matrix(a.mat_ + b.mat_));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator(SparseOperator::Matrix(a.mat_ - b.mat_));
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator(SparseOperator::Matrix(a.mat_ * b.mat_));
}

SparseOperator operator*(cplx s, const SparseOperator& a) {
    return SparseOperator(SparseOperator::Matrix(s * a.mat_));
}

HilbertSpace build_space(const std::vector<int>& boson_cutoffs) {
    return HilbertSpace(boson_cutoffs);
}

SparseOperator boson_annihilation(const HilbertSpace& space, int mode) {
    if (mode < 0 || mode >= space.n_modes()) {
        throw std::invalid_argument("mode index out of range: " + std::to_string(mode));
    }
    std::vector<Eigen::Triplet<cplx>> trips;
    const int dim = space.dimension();
    for (int col = 0; col < dim; ++col) {
        BasisLabel label = space.label_of(col);
        const int n = label.occupations[mode];
        if (n == 0) continue;
        label.occupations[mode] = n - 1;
        trips.emplace_back(space.index_of(label), col, cplx(std::sqrt(static_cast<double>(n)), 0.0));
    }
    return SparseOperator::from_triplets(dim, trips);
}

SparseOperator boson_creation(const HilbertSpace& space, int mode) {
    return boson_annihilation(space, mode).adjoint();
}

SparseOperator boson_number(const HilbertSpace& space, int mode) {
    if (mode < 0 || mode >= space.n_modes()) {
        throw std::invalid_argument("mode index out of range: " + std::to_string(mode));
    }
    std::vector<Eigen::Triplet<cplx>> trips;
    const int dim = space.dimension();
    for (int i = 0; i < dim; ++i) {
        const int n = space.label_of(i).occupations[mode];
        if (n > 0) trips.emplace_back(i, i, cplx(static_cast<double>(n), 0.0));
    }
    return SparseOperator::from_triplets(dim, trips);
}

namespace {

// Embeds a 4x4 register block as block (x) identity over the boson modes.
SparseOperator embed_level_block(const HilbertSpace& space, const Eigen::Matrix4cd& block) {
    std::vector<Eigen::Triplet<cplx>> trips;
    const int dim = space.dimension();
    const int boson_dim = dim / HilbertSpace::kLevels;
    for (int r = 0; r < HilbertSpace::kLevels; ++r) {
        for (int c = 0; c < HilbertSpace::kLevels; ++c) {
            const cplx v = block(r, c);
            if (v == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < boson_dim; ++j) {
                trips.emplace_back(r * boson_dim + j, c * boson_dim + j, v);
            }
        }
    }
    return SparseOperator::from_triplets(dim, trips);
}

}  // namespace

SparseOperator level_transition(const HilbertSpace& space, int i, int j) {
    check_level(i);
    check_level(j);
    Eigen::Matrix4cd block = Eigen::Matrix4cd::Zero();
    block(i - 1, j - 1) = 1.0;
    return embed_level_block(space, block);
}

FermionOperators jordan_wigner_operators(const HilbertSpace& space) {
    // level - 1 = 2*aq + fq; sigma_z on a qubit is +1 when occupied, -1 when
    // empty.
    Eigen::Matrix4cd b_dag = Eigen::Matrix4cd::Zero();
    Eigen::Matrix4cd d_dag = Eigen::Matrix4cd::Zero();
    for (int aq = 0; aq < 2; ++aq) {
        // b_dag = I (x) sigma+: flips the fermion qubit 0 -> 1.
        b_dag(2 * aq + 1, 2 * aq + 0) = 1.0;
    }
    for (int fq = 0; fq < 2; ++fq) {
        // d_dag = sigma+ (x) sigma_z: flips the antifermion qubit, picks up
        // the string sign from the fermion qubit.
        d_dag(2 * 1 + fq, 2 * 0 + fq) = fq == 0 ? -1.0 : 1.0;
    }
    FermionOperators ops;
    ops.b_dag = embed_level_block(space, b_dag);
    ops.b = embed_level_block(space, Eigen::Matrix4cd(b_dag.adjoint()));
    ops.d_dag = embed_level_block(space, d_dag);
    ops.d = embed_level_block(space, Eigen::Matrix4cd(d_dag.adjoint()));
    return ops;
}

StateVector basis_state(const HilbertSpace& space, const BasisLabel& label) {
    StateVector v = StateVector::Zero(space.dimension());
    v[space.index_of(label)] = 1.0;
    return v;
}

}  // namespace qfs
