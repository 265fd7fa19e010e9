#pragma once

#include <vector>

#include "lielap/algebra.hpp"
#include "lielap/irreps.hpp"
#include "lielap/rational.hpp"

namespace lielap {

/// D_V(s) in the monomial basis of V.
struct OperatorMatrix {
    GMatrix entries;
    IrrepLabel label;
    SymTensor tensor;

    [[nodiscard]] long dim() const { return static_cast<long>(entries.rows()); }
};

/// D_V(s) = -sum_pq S_pq rho_*(X_p) rho_*(X_q).
OperatorMatrix build_DV(const Irrep& irrep, const SymTensor& s);
OperatorMatrix build_DV(const IrrepLabel& label, const SymTensor& s, const GroupSpec& spec);

/// Sparse variant used where the dense matrix would be wasteful.
GSparse build_DV_sparse(const Irrep& irrep, const SymTensor& s);

/// sum_j (H_j^2 + A_j^2 + B_j^2) + sum_i e_i^2, i.e. the identity matrix.
SymTensor casimir_tensor(const GroupSpec& spec);

/// Eigenvalue of D_V(casimir) = sum m_j (m_j + 2) + |lambda|^2.
Rational casimir_value(const IrrepLabel& label);

struct EigenCluster {
    double value = 0;
    int multiplicity = 0;
};

struct NumericSpectrum {
    std::vector<double> eigenvalues;  // ascending
    std::vector<EigenCluster> clusters;
    double tolerance = 0;
};

constexpr double kDefaultClusterTolerance = 1e-8;

/// Hermitian eigensolve after rescaling to the invariant orthonormal basis
/// (norm of v_l is sqrt(l!(m-l)!) per factor). Throws std::runtime_error if
/// the rescaled matrix is not hermitian to working precision.
NumericSpectrum eigen_decompose_numeric(const OperatorMatrix& op, double relative_tolerance = kDefaultClusterTolerance);

/// Groups sorted eigenvalues whose neighbour gap is within tol * max|lambda|.
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& sorted, double relative_tolerance);

struct KroneckerCheck {
    bool matrix_identity = false;  // D(i(s) + eps i'(s')) == D(s) (x) I + eps I (x) D(s')
    bool char_poly = false;        // exact composed-sum identity
    bool numeric = false;          // sorted spectra agree within tolerance
    [[nodiscard]] bool ok() const { return matrix_identity && char_poly && numeric; }
};

/// Compares the spectrum of D on V (x) V' for iota(s) + eps iota'(s') with the
/// Minkowski sum {mu_i + eps nu_j}.
KroneckerCheck kronecker_spectrum_check(const GroupSpec& spec1, const IrrepLabel& label1, const SymTensor& s1,
                                        const GroupSpec& spec2, const IrrepLabel& label2, const SymTensor& s2,
                                        const Rational& eps);

}  // namespace lielap
