#pragma once

// Finite-dimensional matrix Lie algebras over Q(i) and their invariant
// tensors:
//
//   [T^a, T^b] = f^{ab}_c T^c
//   kappa^{ab} = tr(T^a T^b)
//   d^{abc}    = tr({T^a, T^b} T^c)
//
// The basis need not be orthonormal; kappa is kept as a full symmetric
// matrix.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "currents/exact.hpp"
#include "currents/linalg.hpp"

namespace currents {

using ComplexMatrix = DenseMatrix<Gaussian>;

/// Dense dim x dim x dim tensor.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    Gaussian& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * dim_ + b) * dim_ + c]; }
    const Gaussian& operator()(std::size_t a, std::size_t b, std::size_t c) const {
        return data_[(a * dim_ + b) * dim_ + c];
    }

    bool is_totally_symmetric() const;
    bool is_zero() const;

private:
    std::size_t dim_ = 0;
    std::vector<Gaussian> data_;
};

/// One nonzero term of a contraction: coefficient `coeff` on basis index `index`.
struct IndexTerm {
    std::size_t index;
    Gaussian coeff;
};

class MatrixLieAlgebra {
public:
    const std::string& name() const { return name_; }
    std::size_t rep_size() const { return rep_size_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ComplexMatrix>& basis() const { return basis_; }

    /// Human-readable names of the basis elements ("H1", "E12", "1", ...).
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> find_label(std::string_view label) const;

    /// f^{ab}_c
    const Gaussian& f(std::size_t a, std::size_t b, std::size_t c) const { return f_(a, b, c); }
    const Gaussian& kappa(std::size_t a, std::size_t b) const { return kappa_(a, b); }
    /// d^{abc}, unchecked. See d_tensor() for the range-checked query.
    const Gaussian& d(std::size_t a, std::size_t b, std::size_t c) const { return d_(a, b, c); }

    const Tensor3& structure_constants() const { return f_; }
    const ComplexMatrix& kappa_matrix() const { return kappa_; }
    const Tensor3& d_tensor() const { return d_; }

    /// Nonzero (c, f^{ab}_c).
    std::span<const IndexTerm> bracket_terms(std::size_t a, std::size_t b) const { return bracket_terms_[a * dim() + b]; }
    /// Nonzero (c, f^{ac}_b): the coadjoint action of T^a on the dual index b.
    std::span<const IndexTerm> coadjoint_terms(std::size_t a, std::size_t b) const {
        return coadjoint_terms_[a * dim() + b];
    }
    /// Nonzero (c, d^{abc}).
    std::span<const IndexTerm> d_terms(std::size_t a, std::size_t b) const { return d_terms_[a * dim() + b]; }

    bool is_abelian() const;
    /// Non-fatal observations made while building (abelian algebra, degenerate trace form).
    const std::vector<std::string>& warnings() const { return warnings_; }

    void check_index(std::size_t a) const;

private:
    friend MatrixLieAlgebra build_algebra(std::string, std::vector<ComplexMatrix>, std::vector<std::string>);
    friend MatrixLieAlgebra corrupt_structure_constant(const MatrixLieAlgebra&, std::size_t, std::size_t,
                                                       std::size_t, const Gaussian&);

    MatrixLieAlgebra() = default;
    void rebuild_term_tables();

    std::string name_;
    std::size_t rep_size_ = 0;
    std::vector<ComplexMatrix> basis_;
    std::vector<std::string> labels_;
    Tensor3 f_;
    ComplexMatrix kappa_;
    Tensor3 d_;
    std::vector<std::vector<IndexTerm>> bracket_terms_;
    std::vector<std::vector<IndexTerm>> coadjoint_terms_;
    std::vector<std::vector<IndexTerm>> d_terms_;
    std::vector<std::string> warnings_;
};

/// Builds the algebra spanned by `basis`, computing f by exact expansion of
/// every commutator and kappa, d by traces, then verifies every structural
/// identity. Labels default to "1".."dim".
///
/// Throws LinearlyDependentBasis, NonClosedBasis, DimensionMismatch or
/// InvariantViolation.
MatrixLieAlgebra build_algebra(std::string name, std::vector<ComplexMatrix> basis,
                               std::vector<std::string> labels = {});

/// tr({T^a, T^b} T^c), range-checked.
Gaussian d_tensor(const MatrixLieAlgebra& alg, std::size_t a, std::size_t b, std::size_t c);

/// f^{(di)a}_e X^{ebc} + f^{(di)b}_e X^{aec} + f^{(di)c}_e X^{abe}
Gaussian invariance_defect(const MatrixLieAlgebra& alg, const Tensor3& x, std::size_t di, std::size_t a,
                           std::size_t b, std::size_t c);

/// kappa analogue of invariance_defect: f^{(di)a}_e kappa^{eb} + f^{(di)b}_e kappa^{ae}.
Gaussian kappa_invariance_defect(const MatrixLieAlgebra& alg, std::size_t di, std::size_t a, std::size_t b);

/// f^{ab}_d f^{dc}_e + f^{bc}_d f^{da}_e + f^{ca}_d f^{db}_e
Gaussian jacobi_defect(const MatrixLieAlgebra& alg, std::size_t a, std::size_t b, std::size_t c, std::size_t e);

/// Exhaustively checks antisymmetry, Jacobi, symmetry and ad-invariance of
/// kappa and d. Returns a description of the first violated identity.
std::optional<std::string> find_invariant_violation(const MatrixLieAlgebra& alg);

/// Compact su(2): T^a = -(i/2) sigma^a, labels "1", "2", "3".
MatrixLieAlgebra su2();
/// sl(3) in the elementary-matrix basis E12, E21, E13, E31, E23, E32, H1, H2.
MatrixLieAlgebra sl3();

/// Copy of `alg` with f^{ab}_c shifted by `delta` and no verification.
/// Exists only to fabricate contract violations in tests.
MatrixLieAlgebra corrupt_structure_constant(const MatrixLieAlgebra& alg, std::size_t a, std::size_t b,
                                            std::size_t c, const Gaussian& delta);

}  // namespace currents
