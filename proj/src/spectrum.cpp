#include "lielap/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "lielap/operator.hpp"
#include "lielap/parallel.hpp"
#include "lielap/polycert.hpp"

namespace lielap {

Rational eigenvalue_lower_bound(const SymTensor& s) {
    if (!is_positive_definite(s)) throw std::domain_error("tensor is not positive definite");
    const Eigen::MatrixXd d = to_double(s.matrix());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d, Eigen::EigenvaluesOnly);
    const double lmin = solver.eigenvalues()(0) * (1 - 1e-6);
    Rational c = lmin > 0 ? dyadic_floor(lmin, 40) : Rational(0);
    if (c.sign() <= 0) c = Rational(1, 1LL << 40);
    QMatrix shifted = s.matrix();
    for (int it = 0; it < 400; ++it) {
        for (int i = 0; i < s.size(); ++i) shifted(i, i) = s(i, i) - c;
        if (is_positive_definite(shifted)) return c;
        c /= Rational(2);
    }
    throw std::logic_error("no positive lower bound found for a positive definite tensor");
}

long casimir_level(const IrrepLabel& label) {
    long v = 0;
    for (int m : label.spins) v += static_cast<long>(m) * (m + 2);
    for (long l : label.weight) v += l * l;
    return v;
}

std::vector<IrrepLabel> labels_with_casimir_at_most(const GroupSpec& spec, const Rational& bound) {
    std::vector<IrrepLabel> out;
    if (bound.sign() < 0) return out;
    const long cap = static_cast<long>(floor(bound).get_si());
    IrrepLabel cur;
    cur.spins.assign(static_cast<std::size_t>(spec.su2_factors()), 0);
    cur.weight.assign(static_cast<std::size_t>(spec.torus_rank()), 0);
    const int k = spec.su2_factors();
    const int slots = k + spec.torus_rank();
    std::function<void(int, long)> rec = [&](int slot, long left) {
        if (slot == slots) {
            if (is_dual_representative(cur) && descends_to_quotient(cur, spec)) out.push_back(cur);
            return;
        }
        if (slot < k) {
            for (int m = 0; static_cast<long>(m) * (m + 2) <= left; ++m) {
                cur.spins[static_cast<std::size_t>(slot)] = m;
                rec(slot + 1, left - static_cast<long>(m) * (m + 2));
            }
            cur.spins[static_cast<std::size_t>(slot)] = 0;
        } else {
            const long r = static_cast<long>(std::floor(std::sqrt(static_cast<double>(left)))) + 1;
            for (long l = -r; l <= r; ++l) {
                if (l * l > left) continue;
                cur.weight[static_cast<std::size_t>(slot - k)] = l;
                rec(slot + 1, left - l * l);
            }
            cur.weight[static_cast<std::size_t>(slot - k)] = 0;
        }
    };
    rec(0, cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrepLabel> enumerate_irreps(const GroupSpec& spec, const SymTensor& s, const Rational& cutoff) {
    if (s.size() != spec.dimension()) throw std::invalid_argument("tensor size does not match the group");
    if (cutoff.sign() < 0) throw std::invalid_argument("cutoff must be non-negative");
    // min spec D_V(s) >= c * Casimir(V) whenever S - c Id is positive semidefinite.
    const Rational c = eigenvalue_lower_bound(s);
    return labels_with_casimir_at_most(spec, cutoff / c);
}

std::vector<CoprimeBasisElement> coprime_basis(const std::vector<Polynomial>& inputs) {
    std::vector<CoprimeBasisElement> basis;
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        Polynomial f = inputs[idx].monic();
        if (f.degree() < 1) continue;
        std::vector<CoprimeBasisElement> next;
        next.reserve(basis.size() + 2);
        for (auto& b : basis) {
            if (f.degree() < 1) {
                next.push_back(std::move(b));
                continue;
            }
            const Polynomial g = gcd(f, b.poly);
            if (g.degree() < 1) {
                next.push_back(std::move(b));
                continue;
            }
            // Square-free inputs make g, b/g and f/g pairwise coprime.
            Polynomial rest = exact_quotient(b.poly, g);
            f = exact_quotient(f, g).monic();
            std::vector<std::size_t> shared = b.sources;
            shared.push_back(idx);
            if (rest.degree() >= 1) next.push_back({rest.monic(), b.sources});
            next.push_back({g, std::move(shared)});
        }
        if (f.degree() >= 1) next.push_back({f, {idx}});
        basis = std::move(next);
    }
    return basis;
}

std::vector<double> isolate_real_roots(const Polynomial& squarefree, const Rational& lo, const Rational& hi,
                                       const Rational& width) {
    std::vector<double> roots;
    const SturmChain chain(squarefree);
    std::function<void(const Rational&, const Rational&, int)> rec = [&](const Rational& a, const Rational& b,
                                                                        int n) {
        if (n == 0) return;
        if (n == 1) {
            Rational l = a, r = b;
            while (r - l > width) {
                Rational mid = (l + r) / Rational(2);
                if (chain.count_in(l, mid) == 1)
                    r = mid;
                else
                    l = mid;
            }
            roots.push_back(((l + r) / Rational(2)).to_double());
            return;
        }
        const Rational mid = (a + b) / Rational(2);
        const int left = chain.count_in(a, mid);
        rec(a, mid, left);
        rec(mid, b, n - left);
    };
    rec(lo, hi, chain.count_in(lo, hi));
    return roots;
}

namespace {

struct LabelData {
    IrrepLabel label;
    RepType type = RepType::real;
    long dim = 1;
    std::vector<std::pair<int, Polynomial>> factors;  // (j, g_j), all of them
    std::vector<double> cluster_values;
};

double newton_distance(const Polynomial& h, double x) {
    const double d = h.derivative().eval(x);
    if (d == 0) return std::numeric_limits<double>::infinity();
    return std::abs(h.eval(x) / d);
}

}  // namespace

SpectrumTable assemble_spectrum(const GroupSpec& spec, const SymTensor& s, const Rational& cutoff,
                                double cluster_tolerance) {
    const Rational c = eigenvalue_lower_bound(s);
    if (s.size() != spec.dimension()) throw std::invalid_argument("tensor size does not match the group");
    if (cutoff.sign() < 0) throw std::invalid_argument("cutoff must be non-negative");
    SpectrumTable table{spec, s, cutoff, c, labels_with_casimir_at_most(spec, cutoff / c), {}};

    std::vector<LabelData> data(table.labels.size());
    parallel_for(data.size(), [&](std::size_t i) {
        LabelData& d = data[i];
        d.label = table.labels[i];
        d.type = classify_type(d.label);
        d.dim = d.label.dimension();
        const OperatorMatrix op = build_DV(d.label, s, spec);
        d.factors = squarefree_decomposition(char_poly_exact(op).poly);
        for (const auto& cl : eigen_decompose_numeric(op, cluster_tolerance).clusters) d.cluster_values.push_back(cl.value);
    });

    // Merge only factors with an eigenvalue <= cutoff; the rest stay label-local
    // and serve only to place numeric approximations.
    const Rational below(-1);
    std::vector<Polynomial> inputs;
    std::vector<std::pair<std::size_t, int>> origin;  // (label index, j) per input
    std::vector<std::vector<Polynomial>> local(data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        for (const auto& [j, g] : data[i].factors) {
            if (SturmChain(g).count_in(below, cutoff) > 0) {
                inputs.push_back(g);
                origin.emplace_back(i, j);
            } else {
                local[i].push_back(g);
            }
        }
    const auto basis = coprime_basis(inputs);

    // candidates[i]: the factors of label i's square-free part, as polynomials
    std::vector<std::vector<const Polynomial*>> candidates(data.size());
    for (const auto& b : basis)
        for (std::size_t src : b.sources) candidates[origin[src].first].push_back(&b.poly);
    for (std::size_t i = 0; i < data.size(); ++i)
        for (const auto& g : local[i]) candidates[i].push_back(&g);

    auto nearest = [&](std::size_t i, double x) {
        const Polynomial* best = nullptr;
        double best_d = std::numeric_limits<double>::infinity();
        for (const Polynomial* h : candidates[i]) {
            const double nd = newton_distance(*h, x);
            if (best == nullptr || nd < best_d) {
                best = h;
                best_d = nd;
            }
        }
        return best;
    };

    const double scale = std::max(1.0, cutoff.to_double());
    for (const auto& b : basis) {
        const SturmChain chain(b.poly);
        const int below_count = chain.count_at_most(below);
        const int count = chain.count_in(below, cutoff);
        if (count == 0) continue;

        // A root of h is an eigenvalue of every contributor; read it off the first.
        std::vector<double> approx;
        const std::size_t first_label = origin[b.sources.front()].first;
        for (double x : data[first_label].cluster_values)
            if (nearest(first_label, x) == &b.poly) approx.push_back(x);
        std::sort(approx.begin(), approx.end());
        const double tol = 1e-6 * scale;
        const bool consistent = static_cast<int>(approx.size()) == b.poly.degree() &&
                                approx[static_cast<std::size_t>(count - 1)] <= cutoff.to_double() + tol &&
                                (static_cast<std::size_t>(count) == approx.size() ||
                                 approx[static_cast<std::size_t>(count)] >= cutoff.to_double() - tol);
        if (!consistent) approx = isolate_real_roots(b.poly, below, cutoff, Rational(1, 1LL << 50));

        std::vector<Contributor> contributors;
        for (std::size_t src : b.sources) {
            const auto& d = data[origin[src].first];
            contributors.push_back({d.label, d.type, d.dim, origin[src].second});
        }
        long real_mult = 0;
        for (const auto& ct : contributors)
            real_mult += static_cast<long>(ct.multiplicity) * ct.dim * (ct.type == RepType::complex ? 2 : 1);
        std::string violation;
        if (contributors.size() > 1) {
            violation = "a";
        } else {
            const auto& ct = contributors.front();
            if (ct.type == RepType::quaternionic && ct.multiplicity != 2)
                violation = "c";
            else if (ct.type != RepType::quaternionic && ct.multiplicity != 1)
                violation = "b";
        }
        for (int r = 0; r < count; ++r)
            table.entries.push_back({approx[static_cast<std::size_t>(r)], b.poly, below_count + r, real_mult,
                                     contributors, violation.empty(), violation});
    }
    std::sort(table.entries.begin(), table.entries.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        if (x.eigenvalue_approx != y.eigenvalue_approx) return x.eigenvalue_approx < y.eigenvalue_approx;
        return x.exact_factor.str() < y.exact_factor.str();
    });
    return table;
}

VerdictReport verdict_report(const SpectrumTable& table) {
    VerdictReport report;
    for (const auto& e : table.entries) {
        if (e.irreducible) continue;
        report.all_irreducible = false;
        Violation v{e.eigenvalue_approx, e.violation, {}};
        for (const auto& ct : e.contributors) v.labels.push_back(ct.label);
        report.violations.push_back(std::move(v));
    }
    return report;
}

}  // namespace lielap
