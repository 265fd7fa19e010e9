#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "lielap/algebra.hpp"
#include "lielap/rational.hpp"

namespace lielap {

/// V_{m_1} (x) ... (x) V_{m_k} (x) V_lambda.
struct IrrepLabel {
    std::vector<int> spins;
    std::vector<long> weight;

    [[nodiscard]] long dimension() const;
    [[nodiscard]] bool is_trivial() const;
    /// "m1,m2,...;l1,...,ln" (the ';' part is omitted when n = 0).
    [[nodiscard]] std::string str() const;
    static IrrepLabel parse(const std::string& text);

    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

enum class RepType { real, complex, quaternionic };

std::string to_string(RepType t);

/// A complex irrep with its Lie algebra action in the monomial tensor basis
/// v_{l_1} (x) ... (x) v_{l_k}, v_l = z1^(m-l) z2^l, first factor most significant.
struct Irrep {
    IrrepLabel label;
    long dim = 1;
    RepType rep_type = RepType::real;
    /// rho_*(X_p) for each basis element X_p of the Lie algebra.
    std::vector<GSparse> generators;

    /// rho_*(sum_p y_p X_p)
    [[nodiscard]] GSparse action(const QVector& y) const;
};

/// rho_*(H), rho_*(A), rho_*(B) on V_m; entries are Gaussian integers.
std::array<GSparse, 3> su2_generators(int m);

Irrep build_irrep(const IrrepLabel& label, const GroupSpec& spec);

RepType classify_type(const IrrepLabel& label);

IrrepLabel dual_label(const IrrepLabel& label);

/// Canonical representative of {V, V*}: the weight is zero or its first
/// nonzero entry is positive.
bool is_dual_representative(const IrrepLabel& label);

/// True iff the irrep is trivial on the central subgroup of `spec`.
bool descends_to_quotient(const IrrepLabel& label, const GroupSpec& spec);

/// Conjugate-linear map J(v) = P * conj(v) with P a signed permutation.
struct QuaternionicStructure {
    GSparse matrix;
    /// J^2 = square_sign * Id
    int square_sign = 1;

    /// Applies J column-wise.
    [[nodiscard]] GMatrix apply(const GMatrix& v) const;
};

/// J(sum c_l v_l) = sum conj(c_l) (-1)^l v_{m-l} on V_m.
QuaternionicStructure quaternionic_structure(int m);
/// Tensor product of the single-factor maps; requires a self-dual label (zero weight).
QuaternionicStructure quaternionic_structure(const IrrepLabel& label);

/// True iff P conj(rho_*(X)) = rho_*(X) P for every generator.
bool is_equivariant(const QuaternionicStructure& j, const Irrep& irrep);
/// J^2 computed from the matrix: P conj(P) = sign * Id. Returns 0 if not +-Id.
int structure_square_sign(const QuaternionicStructure& j);

/// rho(x) for x = exp(pi/2 B) = [[0,-1],[1,0]] on V_m: v_l -> (-1)^l v_{m-l}.
GSparse su2_quarter_turn(int m);

/// All labels with 0 <= m_j <= level and |lambda_i| <= level that descend to
/// the quotient, one per dual pair, sorted.
std::vector<IrrepLabel> labels_up_to_level(const GroupSpec& spec, int level);

/// Kronecker product of sparse matrices (first factor most significant).
GSparse kron(const GSparse& a, const GSparse& b);
GSparse sparse_identity(long n);

}  // namespace lielap
