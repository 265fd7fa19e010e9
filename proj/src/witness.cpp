#include "lielap/witness.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lielap/operator.hpp"
#include "lielap/parallel.hpp"

namespace lielap {

namespace {

QMatrix real_part_exact(const GMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!m(i, j).is_real()) throw std::logic_error("expected a real matrix");
            out(i, j) = m(i, j).real();
        }
    return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    QMatrix c = QMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index k = 0; k < a.cols(); ++k)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (b(k, j).is_zero()) continue;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (!a(i, k).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

bool sparse_is_zero(const GSparse& m) { return drop_zeros(m).nonZeros() == 0; }

/// R with D W = W R, for a D-invariant column span W; `exact` reports the check.
QMatrix restrict_to(const QMatrix& d, const QMatrix& w, bool& exact) {
    const QMatrix wt = w.transpose();
    const QMatrix dw = matmul(d, w);
    const QMatrix r = matmul(inverse(matmul(wt, w)), matmul(wt, dw));
    exact = exactly_equal(dw, matmul(w, r));
    return r;
}

std::vector<Rational> weights(int m) {
    std::vector<Rational> out;
    for (int k = m; k >= -m; k -= 2) out.emplace_back(k);
    return out;
}

std::vector<int> first_primes(int count) {
    std::vector<int> out;
    for (int c = 2; static_cast<int>(out.size()) < count; ++c)
        if (std::none_of(out.begin(), out.end(), [c](int p) { return c % p == 0; })) out.push_back(c);
    return out;
}

std::string rstr(const Rational& r) { return r.str(); }

}  // namespace

Rational epsilon_separation(const std::vector<Rational>& mu, const std::vector<Rational>& nu, SeparationMode mode) {
    if (mu.empty() || nu.empty()) throw std::invalid_argument("epsilon_separation needs non-empty spectra");
    auto counts = [](const std::vector<Rational>& v) {
        std::vector<Rational> s = v;
        std::sort(s.begin(), s.end());
        std::vector<std::pair<Rational, int>> out;
        for (const auto& x : s) {
            if (!out.empty() && out.back().first == x)
                ++out.back().second;
            else
                out.emplace_back(x, 1);
        }
        return out;
    };
    const auto cm = counts(mu), cn = counts(nu);
    const auto all = [](const auto& c, int j) {
        return std::all_of(c.begin(), c.end(), [j](const auto& e) { return e.second == j; });
    };
    if (!all(cm, 1)) throw std::invalid_argument("epsilon_separation needs a simple first spectrum");
    if (mode == SeparationMode::simple && !all(cn, 1))
        throw std::invalid_argument("epsilon_separation (simple) needs a simple second spectrum");
    if (mode == SeparationMode::pairs && !all(cn, 2))
        throw std::invalid_argument("epsilon_separation (pairs) needs every second eigenvalue exactly twice");

    std::optional<Rational> least;
    for (const auto& [mi, a] : cm)
        for (const auto& [mk, b] : cm)
            for (const auto& [nl, c] : cn)
                for (const auto& [nj, d] : cn) {
                    if (nl == nj) continue;
                    const Rational f = (mi - mk) / (nl - nj);
                    if (f.sign() > 0 && (!least || f < *least)) least = f;
                }
    const Rational eps = least ? *least / Rational(2) : Rational(1);

    std::set<Rational> sums;
    for (const auto& [x, a] : cm)
        for (const auto& [y, b] : cn)
            if (!sums.insert(x + eps * y).second) throw std::logic_error("epsilon_separation produced a collision");
    return eps;
}

EvenBWitness su2_even_b_witness(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("su2_even_b_witness needs an even spin m >= 2");
    const GroupSpec spec = group_preset("su2");
    const IrrepLabel label{{m}, {}};
    const Irrep irrep = build_irrep(label, spec);
    const SymTensor h2 = symmetric_product(spec.H(0), spec.H(0), Rational(1), spec.dimension());
    const SymTensor a2 = symmetric_product(spec.A(0), spec.A(0), Rational(1), spec.dimension());

    EvenBWitness w;
    w.m = m;
    const OperatorMatrix dh = build_DV(irrep, h2);
    w.precheck_zero = b_value(char_poly_exact(dh)).is_zero();

    const QMatrix a = real_part_exact(build_DV(irrep, a2).entries);  // -rho(A)^2
    const long d = m + 1;
    w.parity_split = true;
    w.diagonal_ok = true;
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            const bool allowed = i == j || i - j == 2 || j - i == 2;
            if (!allowed && !a(i, j).is_zero()) w.parity_split = false;
        }
    for (long l = 0; l < d; ++l)
        if (!(a(l, l) == Rational((m - l) * (l + 1) + l * (m - l + 1)))) w.diagonal_ok = false;
    w.subdiagonal_ok = true;
    for (long l = 0; l + 2 < d; ++l) {
        const Rational v = a(l + 2, l);
        (l % 2 == 0 ? w.w0_subdiagonal : w.w1_subdiagonal).push_back(v);
        if (!(v == Rational((m - l) * (m - l - 1))) || v.is_zero()) w.subdiagonal_ok = false;
    }

    // D(H^2) is diagonal; split its eigenvalues by index parity.
    const QMatrix hq = real_part_exact(dh.entries);
    Polynomial p0 = Polynomial::constant(Rational(1)), p1 = Polynomial::constant(Rational(1));
    for (long l = 0; l < d; ++l) (l % 2 == 0 ? p0 : p1) *= Polynomial::linear_factor(hq(l, l));
    w.blocks_disjoint = !resultant(p0, p1).is_zero();

    for (int p : first_primes(50)) {
        ++w.scanned;
        const Rational eps(1, p);
        const SymTensor s = h2 + eps * a2;
        const Rational value = b_value(char_poly_exact(build_DV(irrep, s)));
        if (!value.is_zero()) {
            w.epsilon = eps;
            w.certificate = Certificate{CertKind::b, {label}, tensor_hash(s), value};
            break;
        }
    }
    if (!w.certificate) throw std::logic_error("su2_even_b_witness: scan exhausted for m = " + std::to_string(m));
    return w;
}

MixedWitness pairs_mixed_witness(int m, const std::vector<long>& lambda, const std::vector<Rational>& y) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("pairs_mixed_witness needs an odd spin");
    if (lambda.empty() || lambda.size() != y.size())
        throw std::invalid_argument("pairs_mixed_witness needs a weight and a direction of the same rank");
    Rational ly(0);
    for (std::size_t i = 0; i < y.size(); ++i) ly += Rational(static_cast<long long>(lambda[i])) * y[i];
    if (ly.is_zero()) throw std::invalid_argument("pairs_mixed_witness needs lambda(Y) != 0");

    const GroupSpec spec(1, static_cast<int>(lambda.size()));
    SymTensor s = SymTensor::zero(spec.dimension());
    for (std::size_t i = 0; i < y.size(); ++i)
        s += symmetric_product(spec.H(0), spec.e(static_cast<int>(i)), y[i], spec.dimension());

    MixedWitness w{IrrepLabel{{m}, lambda}, y, s, ly, {}, false, false, {}};
    const CharPoly cp = char_poly_exact(build_DV(w.label, s, spec));
    Polynomial expected = Polynomial::constant(Rational(1));
    for (const auto& k : weights(m)) {
        w.expected.push_back(k * ly);
        expected *= Polynomial::linear_factor(k * ly);
    }
    w.spectrum_ok = cp.poly == expected;
    w.simple = multiplicity_profile(cp).all_simple();
    w.certificate = Certificate{CertKind::b, {w.label}, tensor_hash(s), b_value(cp)};
    return w;
}

std::vector<Rational> default_alpha_grid() {
    std::vector<Rational> out;
    for (int j = 1; j <= 63; ++j) out.emplace_back(j, 64);
    return out;
}

Rational default_pairs_epsilon(int m_prime) { return Rational(1, 2LL * m_prime); }

PairsPipelineReport pairs_pipeline(int m, int m_prime, const Rational& epsilon, const std::vector<Rational>& alpha_grid) {
    if (m < 1 || m % 2 == 0 || m_prime < 1 || m_prime % 2 == 0)
        throw std::invalid_argument("pairs_pipeline needs odd spins");
    if (epsilon.sign() <= 0 || !(epsilon < Rational(1, m_prime)))
        throw std::invalid_argument("pairs_pipeline needs 0 < eps < 1/m'");
    PairsPipelineReport r;
    r.m = m;
    r.m_prime = m_prime;
    r.epsilon = epsilon;

    std::set<Rational> sums;
    bool distinct = true;
    for (const auto& a : weights(m))
        for (const auto& b : weights(m_prime)) distinct = sums.insert(a + epsilon * b).second && distinct;
    if (!distinct) throw std::invalid_argument("pairs_pipeline: eps makes two of +-k +- eps k' collide");
    r.collision_free = true;

    const GroupSpec spec(2, 0, {}, "spin4");
    const IrrepLabel label{{m, m_prime}, {}};
    const Irrep irrep = build_irrep(label, spec);
    const int n = spec.dimension();
    const auto& g = irrep.generators;
    const GSparse phi = drop_zeros(g[spec.H(0)] + g[spec.H(1)] * GaussRational(epsilon));
    const GSparse psi = drop_zeros(g[spec.B(0)] + g[spec.B(1)] * GaussRational(epsilon));

    QVector yh = QVector::Zero(n), yb = QVector::Zero(n);
    yh(spec.H(0)) = Rational(1);
    yh(spec.H(1)) = epsilon;
    yb(spec.B(0)) = Rational(1);
    yb(spec.B(1)) = epsilon;
    const SymTensor sh = SymTensor::square(yh), sb = SymTensor::square(yb);
    const GMatrix dh_g = build_DV(irrep, sh).entries;
    r.sh_is_phi_squared = exactly_equal(dh_g, GMatrix(GSparse(phi * phi) * GaussRational(-1)));

    const GSparse t = kron(su2_quarter_turn(m), su2_quarter_turn(m_prime));
    const long dim = irrep.dim;
    r.t_involution = sparse_is_zero(GSparse(t * t) - sparse_identity(dim));
    r.t_anticommutes_phi = sparse_is_zero(GSparse(t * phi) + GSparse(phi * t));
    r.t_commutes_psi = sparse_is_zero(GSparse(t * psi) - GSparse(psi * t));
    r.t_integer = true;
    for (Eigen::Index k = 0; k < t.outerSize(); ++k)
        for (GSparse::InnerIterator it(t, k); it; ++it)
            if (!it.value().is_real() || !it.value().real().is_integer()) r.t_integer = false;
    if (!r.t_integer) return r;

    const QMatrix tq = real_part_exact(GMatrix(t));
    const QMatrix id = identity<Rational>(dim);
    const QMatrix w_plus = nullspace(QMatrix(tq - id));
    const QMatrix w_minus = nullspace(QMatrix(tq + id));
    r.dim_plus = w_plus.cols();
    r.dim_minus = w_minus.cols();

    const QMatrix dh = real_part_exact(dh_g);
    const QMatrix db = real_part_exact(build_DV(irrep, sb).entries);
    bool e1 = false, e2 = false, e3 = false, e4 = false;
    const QMatrix dh_plus = restrict_to(dh, w_plus, e1), dh_minus = restrict_to(dh, w_minus, e2);
    const QMatrix db_plus = restrict_to(db, w_plus, e3), db_minus = restrict_to(db, w_minus, e4);
    r.restrictions_exact = e1 && e2 && e3 && e4 && r.dim_plus + r.dim_minus == dim;

    const CharPoly ph = char_poly_exact(dh);
    Polynomial expected = Polynomial::constant(Rational(1));
    for (const auto& a : weights(m))
        for (const auto& b : weights(m_prime)) {
            const Rational v = a + epsilon * b;
            expected *= Polynomial::linear_factor(v * v);
        }
    r.sh_spectrum_ok = ph.poly == expected;
    r.sh_all_double = multiplicity_profile(ph).all_double();
    r.d0_simple_plus = r.dim_plus > 0 && multiplicity_profile(char_poly_exact(dh_plus)).all_simple();
    r.d0_simple_minus = r.dim_minus > 0 && multiplicity_profile(char_poly_exact(dh_minus)).all_simple();
    r.d1_disjoint = !resultant(char_poly_exact(db_plus).poly, char_poly_exact(db_minus).poly).is_zero();

    for (const auto& alpha : alpha_grid) {
        r.alphas_tried.push_back(alpha);
        const QMatrix d = (Rational(1) - alpha) * dh + alpha * db;
        const CharPoly p = char_poly_exact(d);
        const Rational value = b_value(p);
        if (value.is_zero()) continue;
        const SymTensor s = (Rational(1) - alpha) * sh + alpha * sb;
        r.alpha = alpha;
        r.profile = multiplicity_profile(p);
        r.certificate = Certificate{CertKind::b, {label}, tensor_hash(s), value};
        break;
    }
    return r;
}

SymTensor random_definite_tensor(int n, std::mt19937_64& rng, long long range) {
    if (range < 1) throw std::invalid_argument("random tensor range must be positive");
    const long long d = range * n + 1;
    const auto width = static_cast<std::uint64_t>(2 * range + 1);
    QMatrix s = QMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const long long q = static_cast<long long>(rng() % width) - range;
            s(i, j) = Rational(q, d) + (i == j ? Rational(1) : Rational(0));
            s(j, i) = s(i, j);
        }
    return SymTensor(s);
}

long long trial_range(int trial) {
    long long r = 3;
    for (int t = 0; t < trial && r < (1LL << 40); ++t) r *= 4;
    return r;
}

std::vector<Certificate> certify_all(const GroupSpec& spec, const SymTensor& s, int level) {
    const auto labels = labels_up_to_level(spec, level);
    std::vector<CharPoly> polys(labels.size());
    parallel_for(labels.size(), [&](std::size_t i) { polys[i] = char_poly_exact(build_DV(labels[i], s, spec)); });
    const std::string hash = tensor_hash(s);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) pairs.emplace_back(i, j);
    std::vector<Certificate> certs(labels.size() + pairs.size());
    parallel_for(certs.size(), [&](std::size_t idx) {
        if (idx < labels.size()) {
            if (classify_type(labels[idx]) == RepType::quaternionic)
                certs[idx] = Certificate{CertKind::c, {labels[idx]}, hash, c_value(polys[idx])};
            else
                certs[idx] = Certificate{CertKind::b, {labels[idx]}, hash, b_value(polys[idx])};
        } else {
            const auto [i, j] = pairs[idx - labels.size()];
            certs[idx] = Certificate{CertKind::a, {labels[i], labels[j]}, hash, a_value(polys[i], polys[j])};
        }
    });
    return certs;
}

WitnessReport witness_search(const GroupSpec& spec, int level, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("witness_search needs at least one trial");
    std::mt19937_64 rng(seed);
    WitnessReport best{spec, level, seed, trials, 0, false, SymTensor::identity(spec.dimension()),
                       labels_up_to_level(spec, level), {}, -1, 0};
    for (int t = 0; t < trials; ++t) {
        SymTensor s = random_definite_tensor(spec.dimension(), rng, trial_range(t));
        auto certs = certify_all(spec, s, level);
        const int score =
            static_cast<int>(std::count_if(certs.begin(), certs.end(), [](const Certificate& c) { return c.nonzero(); }));
        best.trials_used = t + 1;
        if (score > best.score) {
            best.score = score;
            best.total = static_cast<int>(certs.size());
            best.tensor = std::move(s);
            best.certificates = std::move(certs);
        }
        if (best.score == best.total) {
            best.success = true;
            break;
        }
    }
    return best;
}

std::vector<DeviceRun> run_proof_devices(const GroupSpec& spec, int level) {
    std::vector<DeviceRun> runs;
    const int k = spec.su2_factors(), n = spec.torus_rank();
    auto descends = [&spec](const IrrepLabel& l) { return descends_to_quotient(l, spec); };
    if (k == 1 && n == 0) {
        for (int m = 2; m <= level; m += 2) {
            if (!descends(IrrepLabel{{m}, {}})) continue;
            const auto w = su2_even_b_witness(m);
            runs.push_back({"su2_even_b_witness", "m=" + std::to_string(m), w.ok(),
                            "eps=" + rstr(w.epsilon) + " b=" + (w.certificate ? w.certificate->value.str() : "")});
        }
    } else if (k == 2 && n == 0) {
        for (int m = 1; m <= level; m += 2)
            for (int mp = m; mp <= level; mp += 2) {
                if (!descends(IrrepLabel{{m, mp}, {}})) continue;
                const auto r = pairs_pipeline(m, mp, default_pairs_epsilon(mp), default_alpha_grid());
                std::ostringstream detail;
                detail << "eps=" << r.epsilon.str() << " dimW+=" << r.dim_plus << " dimW-=" << r.dim_minus
                       << " alpha=" << (r.alpha ? r.alpha->str() : "none");
                runs.push_back({"pairs_pipeline", "m=" + std::to_string(m) + ",m'=" + std::to_string(mp), r.ok(),
                                detail.str()});
            }
    } else if (k == 1 && n >= 1) {
        std::vector<Rational> y;
        for (int i = 0; i < n; ++i) y.emplace_back(i + 1);
        for (const auto& l : labels_up_to_level(spec, level)) {
            if (l.spins[0] % 2 == 0 || classify_type(l) != RepType::complex) continue;
            Rational ly(0);
            for (int i = 0; i < n; ++i) ly += Rational(static_cast<long long>(l.weight[i])) * y[i];
            if (ly.is_zero()) continue;
            const auto w = pairs_mixed_witness(l.spins[0], l.weight, y);
            runs.push_back({"pairs_mixed_witness", l.str(), w.ok(), "lambda(Y)=" + w.lambda_y.str()});
        }
    }
    return runs;
}

}  // namespace lielap
