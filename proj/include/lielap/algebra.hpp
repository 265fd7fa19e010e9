#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lielap/rational.hpp"

namespace lielap {

/// Element of the center of SU(2)^k x T^n: a sign per SU(2) factor (the
/// element +-Id of that factor) and a torus point t in (Q/Z)^n.
struct CentralElement {
    std::vector<int> signs;
    std::vector<Rational> torus_part;

    friend bool operator==(const CentralElement&, const CentralElement&) = default;
};

/// The group SU(2)^k x T^n, optionally divided by the finite central
/// subgroup generated by `central_generators`.
///
/// The Lie algebra basis is fixed as (H_1, A_1, B_1, ..., H_k, A_k, B_k,
/// e_1, ..., e_n). Torus directions are normalized so that the character with
/// weight lambda differentiates to i*lambda_i along e_i.
class GroupSpec {
public:
    GroupSpec(int k, int n, std::vector<CentralElement> central_generators = {}, std::string name = "custom");

    [[nodiscard]] int su2_factors() const noexcept { return k_; }
    [[nodiscard]] int torus_rank() const noexcept { return n_; }
    [[nodiscard]] int dimension() const noexcept { return 3 * k_ + n_; }
    [[nodiscard]] const std::vector<CentralElement>& central_generators() const noexcept { return gamma_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    /// Number of blocks for embed_factor_tensor: k SU(2) blocks, plus one
    /// torus block when n > 0.
    [[nodiscard]] int factor_count() const noexcept { return k_ + (n_ > 0 ? 1 : 0); }
    [[nodiscard]] int factor_offset(int factor) const;
    [[nodiscard]] int factor_size(int factor) const;

    [[nodiscard]] int H(int j) const { return check_su2(j) * 3; }
    [[nodiscard]] int A(int j) const { return check_su2(j) * 3 + 1; }
    [[nodiscard]] int B(int j) const { return check_su2(j) * 3 + 2; }
    [[nodiscard]] int e(int i) const;

    [[nodiscard]] std::string basis_name(int p) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    [[nodiscard]] int check_su2(int j) const;

    int k_;
    int n_;
    std::vector<CentralElement> gamma_;
    std::string name_;
};

/// Validates and builds a group description.
GroupSpec build_group_spec(int k, int n, std::vector<CentralElement> central_generators,
                           std::string name = "custom");

/// Named groups: su2, so3, u2, so4, spin4 (alias su2xsu2), t<n>, and products
/// such as "su2^3xt2" or "su2xt1".
GroupSpec group_preset(const std::string& name);

/// Product group with no central quotient; the basis of `a` precedes that of
/// `b` within the SU(2) block and within the torus block.
GroupSpec product_spec(const GroupSpec& a, const GroupSpec& b);
/// Index of basis element p of factor `which` (0 = a, 1 = b) inside product_spec(a, b).
int product_basis_index(const GroupSpec& a, const GroupSpec& b, int which, int p);

/// Symmetric 2-tensor s = sum_pq S_pq X_p (x) X_q over the fixed basis.
class SymTensor {
public:
    explicit SymTensor(QMatrix coefficients);

    static SymTensor zero(int n) { return SymTensor(QMatrix::Zero(n, n)); }
    static SymTensor identity(int n) { return SymTensor(lielap::identity<Rational>(n)); }
    /// y (x) y for a Lie algebra vector y, i.e. the square Y^2.
    static SymTensor square(const QVector& y);

    [[nodiscard]] const QMatrix& matrix() const noexcept { return s_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(s_.rows()); }
    [[nodiscard]] const Rational& operator()(int p, int q) const { return s_(p, q); }

    SymTensor& operator+=(const SymTensor& rhs);
    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator*(const Rational& c, const SymTensor& s);
    friend bool operator==(const SymTensor& a, const SymTensor& b) { return exactly_equal(a.s_, b.s_); }

private:
    QMatrix s_;
};

/// Gram matrix of a left-invariant metric in the fixed basis.
class MetricSpec {
public:
    explicit MetricSpec(QMatrix gram);
    [[nodiscard]] const QMatrix& gram() const noexcept { return g_; }

private:
    QMatrix g_;
};

/// Exact inverse over Q; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);

/// Columns form a basis of the right kernel of m over Q.
QMatrix nullspace(const QMatrix& m);

/// The tensor sum_i Y_i^2 of a g-orthonormal basis; its coefficient matrix is G^-1.
SymTensor metric_to_tensor(const MetricSpec& m);

/// Exact test for S in Sym^2_+ via Sylvester's criterion.
bool is_positive_definite(const SymTensor& s);
bool is_positive_definite(const QMatrix& s);

/// Block-embeds a tensor on one factor (see GroupSpec::factor_count).
SymTensor embed_factor_tensor(int factor, const SymTensor& factor_tensor, const GroupSpec& spec);

/// coeff * X_p . X_q, where Y.Z = (Y(x)Z + Z(x)Y)/2.
SymTensor symmetric_product(int p, int q, const Rational& coeff, int dimension);

/// Stable 64-bit FNV-1a hash of the canonical text of a tensor, as hex.
std::string tensor_hash(const SymTensor& s);

}  // namespace lielap
