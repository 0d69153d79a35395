#pragma once

#include <complex>
#include <cstdint>
#include <tuple>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qfs {

using cplx = std::complex<double>;
using StateVector = Eigen::VectorXcd;

/// Label of one composite basis state: internal level 1..4 plus one
/// occupation number per boson mode.
struct BasisLabel {
    int level = 1;
    std::vector<int> occupations;
};

/// Composite Hilbert space: 4-level register tensored with truncated boson
/// modes. Tensor ordering is register first, then modes in declared order;
/// the flat index runs level-major.
class HilbertSpace {
public:
    static constexpr int kLevels = 4;

    explicit HilbertSpace(std::vector<int> boson_cutoffs);

    int dimension() const { return dim_; }
    int n_modes() const { return static_cast<int>(cutoffs_.size()); }
    int cutoff(int mode) const;
    const std::vector<int>& cutoffs() const { return cutoffs_; }

    int index_of(const BasisLabel& label) const;
    BasisLabel label_of(int index) const;

private:
    std::vector<int> cutoffs_;
    int dim_ = 0;
};

/// Sparse complex operator over one Hilbert space. Entry algebra is exact:
/// hermiticity and equality checks compare stored values with no tolerance.
class SparseOperator {
public:
    using Matrix = Eigen::SparseMatrix<cplx>;

    SparseOperator() = default;
    explicit SparseOperator(Matrix m) : mat_(std::move(m)) { mat_.makeCompressed(); }

    static SparseOperator identity(int dim);
    static SparseOperator from_triplets(int dim, const std::vector<Eigen::Triplet<cplx>>& entries);

    int dimension() const { return static_cast<int>(mat_.rows()); }
    std::int64_t nnz() const { return mat_.nonZeros(); }
    const Matrix& matrix() const { return mat_; }

    /// Stored entries as (row, col, value), structural zeros dropped.
    std::vector<std::tuple<int, int, cplx>> entries() const;

    bool is_hermitian() const;
    SparseOperator adjoint() const;

    StateVector apply(const StateVector& v) const { return mat_ * v; }

    /// Exact entrywise equality (stored zeros count as absent).
    static bool exact_equal(const SparseOperator& a, const SparseOperator& b);

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(cplx s, const SparseOperator& a);

private:
    Matrix mat_;
};

/// Validates cutoffs (each >= 1, list nonempty) and builds the space.
HilbertSpace build_space(const std::vector<int>& boson_cutoffs);

/// Truncated ladder operator a for one mode: a|n> = sqrt(n)|n-1>, identity
/// on the register and the other modes.
SparseOperator boson_annihilation(const HilbertSpace& space, int mode);
SparseOperator boson_creation(const HilbertSpace& space, int mode);
SparseOperator boson_number(const HilbertSpace& space, int mode);

/// |i><j| on the register factor, identity on all boson modes.
SparseOperator level_transition(const HilbertSpace& space, int i, int j);

struct FermionOperators {
    SparseOperator b;
    SparseOperator b_dag;
    SparseOperator d;
    SparseOperator d_dag;
};

/// Fermion/antifermion mode operators encoded on the 4-level register as
/// two qubits: b_dag = I (x) sigma+, d_dag = sigma+ (x) sigma_z, with the
/// level index enumerating |antifermion qubit, fermion qubit> in binary
/// (level = 2*aq + fq + 1) and sigma_z = |occupied><occupied| -
/// |empty><empty|. This enumeration makes b_dag*d_dag|level 1> = -|level 4>.
FermionOperators jordan_wigner_operators(const HilbertSpace& space);

/// Unit vector for one basis label.
StateVector basis_state(const HilbertSpace& space, const BasisLabel& label);

}  // namespace qfs
