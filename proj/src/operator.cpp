#include "lielap/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "lielap/polycert.hpp"

namespace lielap {

GSparse build_DV_sparse(const Irrep& irrep, const SymTensor& s) {
    const int n = s.size();
    if (n != static_cast<int>(irrep.generators.size()))
        throw std::invalid_argument("tensor size does not match the Lie algebra dimension");
    // D = -sum_p rho_p (sum_q S_pq rho_q), one sparse product per p.
    GSparse d(irrep.dim, irrep.dim);
    for (int p = 0; p < n; ++p) {
        const GSparse& rho_p = irrep.generators[static_cast<std::size_t>(p)];
        if (rho_p.nonZeros() == 0) continue;
        GSparse inner(irrep.dim, irrep.dim);
        bool any = false;
        for (int q = 0; q < n; ++q) {
            if (s(p, q).is_zero()) continue;
            const GSparse& rho_q = irrep.generators[static_cast<std::size_t>(q)];
            if (rho_q.nonZeros() == 0) continue;
            inner += rho_q * GaussRational(s(p, q));
            any = true;
        }
        if (!any) continue;
        GSparse term = rho_p * inner;
        d -= term;
    }
    return drop_zeros(d);
}

OperatorMatrix build_DV(const Irrep& irrep, const SymTensor& s) {
    GMatrix dense = GMatrix(build_DV_sparse(irrep, s));
    return OperatorMatrix{std::move(dense), irrep.label, s};
}

OperatorMatrix build_DV(const IrrepLabel& label, const SymTensor& s, const GroupSpec& spec) {
    if (s.size() != spec.dimension()) throw std::invalid_argument("tensor size does not match the group");
    return build_DV(build_irrep(label, spec), s);
}

SymTensor casimir_tensor(const GroupSpec& spec) { return SymTensor::identity(spec.dimension()); }

Rational casimir_value(const IrrepLabel& label) {
    long long v = 0;
    for (int m : label.spins) v += static_cast<long long>(m) * (m + 2);
    for (long l : label.weight) v += static_cast<long long>(l) * l;
    return Rational(v);
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& sorted, double relative_tolerance) {
    std::vector<EigenCluster> clusters;
    if (sorted.empty()) return clusters;
    double scale = 0;
    for (double v : sorted) scale = std::max(scale, std::abs(v));
    const double gap = relative_tolerance * scale;
    double sum = sorted.front();
    int count = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] <= gap) {
            sum += sorted[i];
            ++count;
        } else {
            clusters.push_back({sum / count, count});
            sum = sorted[i];
            count = 1;
        }
    }
    clusters.push_back({sum / count, count});
    return clusters;
}

NumericSpectrum eigen_decompose_numeric(const OperatorMatrix& op, double relative_tolerance) {
    const long n = op.dim();
    const auto& spins = op.label.spins;
    if (op.label.dimension() != n) throw std::invalid_argument("operator dimension does not match its label");

    // log of the invariant norm of each monomial tensor basis vector
    std::vector<double> log_norm(static_cast<std::size_t>(n), 0.0);
    for (long idx = 0; idx < n; ++idx) {
        long rest = idx;
        double acc = 0;
        for (auto it = spins.rbegin(); it != spins.rend(); ++it) {
            const long d = *it + 1;
            const long l = rest % d;
            rest /= d;
            acc += 0.5 * (std::lgamma(double(l) + 1) + std::lgamma(double(*it - l) + 1));
        }
        log_norm[static_cast<std::size_t>(idx)] = acc;
    }

    Eigen::MatrixXcd m = to_complex(op.entries);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < n; ++i)
            if (m(i, j) != std::complex<double>(0, 0))
                m(i, j) *= std::exp(log_norm[static_cast<std::size_t>(i)] - log_norm[static_cast<std::size_t>(j)]);

    const double magnitude = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asymmetry = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-9 * magnitude)
        throw std::runtime_error("rescaled operator is not hermitian (asymmetry " + std::to_string(asymmetry) + ")");

    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian eigensolver failed");

    NumericSpectrum out;
    out.tolerance = relative_tolerance;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.clusters = cluster_eigenvalues(out.eigenvalues, relative_tolerance);
    return out;
}

KroneckerCheck kronecker_spectrum_check(const GroupSpec& spec1, const IrrepLabel& label1, const SymTensor& s1,
                                        const GroupSpec& spec2, const IrrepLabel& label2, const SymTensor& s2,
                                        const Rational& eps) {
    const GroupSpec prod = product_spec(spec1, spec2);
    const int n = prod.dimension();

    QMatrix embedded = QMatrix::Zero(n, n);
    for (int p = 0; p < spec1.dimension(); ++p)
        for (int q = 0; q < spec1.dimension(); ++q)
            embedded(product_basis_index(spec1, spec2, 0, p), product_basis_index(spec1, spec2, 0, q)) = s1(p, q);
    for (int p = 0; p < spec2.dimension(); ++p)
        for (int q = 0; q < spec2.dimension(); ++q)
            embedded(product_basis_index(spec1, spec2, 1, p), product_basis_index(spec1, spec2, 1, q)) += eps * s2(p, q);

    IrrepLabel joint;
    joint.spins = label1.spins;
    joint.spins.insert(joint.spins.end(), label2.spins.begin(), label2.spins.end());
    joint.weight = label1.weight;
    joint.weight.insert(joint.weight.end(), label2.weight.begin(), label2.weight.end());

    // Torus characters are one-dimensional, so the monomial basis of `joint`
    // is exactly the tensor basis of V (x) V'.
    OperatorMatrix full = build_DV(joint, SymTensor(embedded), prod);
    OperatorMatrix d1 = build_DV(label1, s1, spec1);
    OperatorMatrix d2 = build_DV(label2, s2, spec2);
    const long n1 = d1.dim(), n2 = d2.dim();

    GMatrix scaled2 = d2.entries;
    for (long j = 0; j < n2; ++j)
        for (long i = 0; i < n2; ++i) scaled2(i, j) *= GaussRational(eps);

    GMatrix kron_sum = GMatrix::Zero(n1 * n2, n1 * n2);
    for (long a = 0; a < n1; ++a)
        for (long b = 0; b < n1; ++b)
            if (!d1.entries(a, b).is_zero())
                for (long c = 0; c < n2; ++c) kron_sum(a * n2 + c, b * n2 + c) += d1.entries(a, b);
    for (long a = 0; a < n1; ++a)
        for (long c = 0; c < n2; ++c)
            for (long e = 0; e < n2; ++e)
                if (!scaled2(c, e).is_zero()) kron_sum(a * n2 + c, a * n2 + e) += scaled2(c, e);

    KroneckerCheck check;
    check.matrix_identity = exactly_equal(full.entries, kron_sum);

    // p_full(x) = (-1)^(n1 n2) res_Y(p_1(Y), p_{eps D2}(x - Y)), checked at n1*n2 + 1 points.
    const Polynomial p_full = char_poly_exact(full).poly;
    const Polynomial p1 = char_poly_exact(d1).poly;
    OperatorMatrix eps_d2{scaled2, label2, d2.tensor};
    const Polynomial p2 = char_poly_exact(eps_d2).poly;
    const long degree = n1 * n2;
    const Rational sign((degree % 2 == 0) ? 1 : -1);
    check.char_poly = true;
    for (long x = 0; x <= degree && check.char_poly; ++x) {
        Polynomial q = p2.compose_affine(Rational(-1), Rational(static_cast<long long>(x)));
        if (!(p_full(Rational(static_cast<long long>(x))) == sign * resultant(p1, q))) check.char_poly = false;
    }

    const NumericSpectrum sf = eigen_decompose_numeric(full);
    const NumericSpectrum s1n = eigen_decompose_numeric(d1);
    const NumericSpectrum s2n = eigen_decompose_numeric(d2);
    std::vector<double> sums;
    const double e = eps.to_double();
    for (double mu : s1n.eigenvalues)
        for (double nu : s2n.eigenvalues) sums.push_back(mu + e * nu);
    std::sort(sums.begin(), sums.end());
    double scale = 1;
    for (double v : sums) scale = std::max(scale, std::abs(v));
    check.numeric = sums.size() == sf.eigenvalues.size();
    for (std::size_t i = 0; check.numeric && i < sums.size(); ++i)
        if (std::abs(sums[i] - sf.eigenvalues[i]) > kDefaultClusterTolerance * scale) check.numeric = false;
    return check;
}

}  // namespace lielap
