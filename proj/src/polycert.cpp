#include "lielap/polycert.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "lielap/modular.hpp"

namespace lielap {

namespace {

using GPoly = std::vector<GaussRational>;  // low degree first

void hessenberg_in_place(GMatrix& h) {
    const Eigen::Index n = h.rows();
    for (Eigen::Index m = 1; m + 1 < n; ++m) {
        Eigen::Index pivot = m;
        while (pivot < n && h(pivot, m - 1).is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != m) {
            h.row(pivot).swap(h.row(m));
            h.col(pivot).swap(h.col(m));
        }
        const GaussRational inv = GaussRational(1) / h(m, m - 1);
        for (Eigen::Index i = m + 1; i < n; ++i) {
            if (h(i, m - 1).is_zero()) continue;
            const GaussRational u = h(i, m - 1) * inv;
            for (Eigen::Index j = m - 1; j < n; ++j)
                if (!h(m, j).is_zero()) h(i, j) -= u * h(m, j);
            for (Eigen::Index r = 0; r < n; ++r)
                if (!h(r, i).is_zero()) h(r, m) += u * h(r, i);
        }
    }
}

}  // namespace

std::vector<GaussRational> char_poly_hessenberg(const GMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    GMatrix h = m;
    hessenberg_in_place(h);
    const Eigen::Index n = h.rows();
    // p_{k+1} = (X - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
    std::vector<GPoly> p;
    p.reserve(static_cast<std::size_t>(n + 1));
    p.push_back({GaussRational(1)});
    for (Eigen::Index k = 0; k < n; ++k) {
        const GPoly& prev = p.back();
        GPoly next(prev.size() + 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] += prev[d];
            if (!h(k, k).is_zero()) next[d] -= h(k, k) * prev[d];
        }
        GaussRational t(1);
        for (Eigen::Index i = k - 1; i >= 0; --i) {
            t *= h(i + 1, i);
            if (t.is_zero()) break;
            if (h(i, k).is_zero()) continue;
            const GaussRational f = h(i, k) * t;
            const GPoly& pi = p[static_cast<std::size_t>(i)];
            for (std::size_t d = 0; d < pi.size(); ++d) next[d] -= f * pi[d];
        }
        p.push_back(std::move(next));
    }
    GPoly out = std::move(p.back());
    if (n % 2 == 1)
        for (auto& c : out) c = -c;
    return out;
}

std::vector<GaussRational> char_poly_coefficients(const GMatrix& m) { return char_poly_multimodular(m); }

CharPoly char_poly_exact(const OperatorMatrix& op) {
    const auto coeffs = char_poly_coefficients(op.entries);
    std::vector<Rational> real;
    real.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_real())
            throw std::logic_error("characteristic polynomial of D_V(s) for " + op.label.str() +
                                   " has a non-real coefficient");
        real.push_back(c.real());
    }
    return CharPoly{Polynomial(std::move(real))};
}

CharPoly char_poly_exact(const QMatrix& m) {
    const auto coeffs = char_poly_coefficients(to_gauss(m));
    std::vector<Rational> real;
    for (const auto& c : coeffs) real.push_back(c.real());
    return CharPoly{Polynomial(std::move(real))};
}

int MultiplicityProfile::degree() const {
    int d = 0;
    for (auto [j, count] : classes) d += j * count;
    return d;
}

std::string MultiplicityProfile::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < classes.size(); ++i)
        os << (i ? "," : "") << "(" << classes[i].first << "," << classes[i].second << ")";
    os << "]";
    return os.str();
}

MultiplicityProfile multiplicity_profile(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("multiplicity profile of the zero polynomial");
    MultiplicityProfile profile;
    for (const auto& [j, g] : squarefree_decomposition(p)) profile.classes.emplace_back(j, g.degree());
    return profile;
}

MultiplicityProfile multiplicity_profile(const CharPoly& p) { return multiplicity_profile(p.poly); }

MultiplicityProfile multiplicity_profile(const NumericSpectrum& spectrum) {
    std::map<int, int> counts;
    for (const auto& c : spectrum.clusters) ++counts[c.multiplicity];
    MultiplicityProfile profile;
    for (auto [j, d] : counts) profile.classes.emplace_back(j, d);
    return profile;
}

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::a: return "a";
        case CertKind::b: return "b";
        case CertKind::c: return "c";
    }
    return "?";
}

Rational a_value(const CharPoly& pv, const CharPoly& pw) { return resultant(pv.poly, pw.poly); }

Rational b_value(const CharPoly& pv) { return resultant(pv.poly, pv.poly.derivative()); }

Rational c_value(const CharPoly& pv) { return resultant(pv.poly, pv.poly.derivative().derivative()); }

Certificate cert_a(const IrrepLabel& v, const IrrepLabel& w, const SymTensor& s, const GroupSpec& spec) {
    if (w == v || w == dual_label(v))
        throw std::invalid_argument("condition (a) needs W distinct from V and V*: " + v.str() + " vs " + w.str());
    Certificate cert{CertKind::a, {v, w}, tensor_hash(s), {}};
    cert.value = a_value(char_poly_exact(build_DV(v, s, spec)), char_poly_exact(build_DV(w, s, spec)));
    return cert;
}

Certificate cert_b(const IrrepLabel& v, const SymTensor& s, const GroupSpec& spec) {
    Certificate cert{CertKind::b, {v}, tensor_hash(s), {}};
    cert.value = b_value(char_poly_exact(build_DV(v, s, spec)));
    return cert;
}

Certificate cert_c(const IrrepLabel& v, const SymTensor& s, const GroupSpec& spec) {
    Certificate cert{CertKind::c, {v}, tensor_hash(s), {}};
    cert.value = c_value(char_poly_exact(build_DV(v, s, spec)));
    return cert;
}

}  // namespace lielap
