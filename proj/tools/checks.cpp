#include "checks.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "lielap/operator.hpp"

namespace lielap::checks {

namespace {

using GPoly = std::vector<GaussRational>;

GPoly gmul(const GPoly& a, const GPoly& b) {
    GPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

bool sparse_is_scalar(const GSparse& m, const Rational& c) {
    GSparse d = m - sparse_identity(m.rows()) * GaussRational(c);
    return drop_zeros(d).nonZeros() == 0;
}

std::vector<int> spins_to(int hi, int step, int from) {
    std::vector<int> out;
    for (int m = from; m <= hi; m += step) out.push_back(m);
    return out;
}

Result casimir(const Params& p) {
    const int hi = p.max_m.value_or(p.m.value_or(30));
    const GroupSpec su2 = group_preset("su2"), su2sq = group_preset("su2xsu2");
    Result r{"casimir", true, Json::object()};
    Json failures = Json::array();
    int singles = 0, products = 0;
    for (int m = p.m ? *p.m : 0; m <= hi; ++m) {
        const GSparse d = build_DV_sparse(build_irrep(IrrepLabel{{m}, {}}, su2), casimir_tensor(su2));
        ++singles;
        if (!sparse_is_scalar(d, Rational(m * (m + 2)))) failures.push_back(std::to_string(m));
    }
    for (int m = 0; m <= hi; ++m)
        for (int mp = 0; mp <= hi && (m + 1) * (mp + 1) <= 256; ++mp) {
            const GSparse d = build_DV_sparse(build_irrep(IrrepLabel{{m, mp}, {}}, su2sq), casimir_tensor(su2sq));
            ++products;
            if (!sparse_is_scalar(d, Rational(m * (m + 2) + mp * (mp + 2))))
                failures.push_back(std::to_string(m) + "," + std::to_string(mp));
        }
    r.pass = failures.empty();
    r.details = {{"identity", "D(H^2+A^2+B^2) = m(m+2) Id"},
                 {"max_m", hi},
                 {"single_factor_labels", singles},
                 {"product_labels_dim_le_256", products},
                 {"failures", failures}};
    return r;
}

Result eig_h(const Params& p) {
    const GroupSpec su2 = group_preset("su2");
    const auto ms = p.m ? std::vector<int>{*p.m} : spins_to(p.max_m.value_or(30), 1, 0);
    Result r{"eigH", true, Json::object()};
    Json failures = Json::array();
    for (int m : ms) {
        const Irrep irrep = build_irrep(IrrepLabel{{m}, {}}, su2);
        const GMatrix h(irrep.generators[static_cast<std::size_t>(su2.H(0))]);
        bool ok = true;
        GPoly expected{GaussRational(1)};
        for (int l = 0; l <= m; ++l) {
            const GaussRational v(Rational(0), Rational(m - 2 * l));
            for (int c = 0; c <= m; ++c)
                if (!(h(l, c) == (c == l ? v : GaussRational(0)))) ok = false;
            expected = gmul(expected, GPoly{v, GaussRational(-1)});
        }
        if (!(char_poly_coefficients(h) == expected)) ok = false;
        if (!ok) failures.push_back(m);
    }
    r.pass = failures.empty();
    r.details = {{"identity", "rho(H) = diag(i(m-2l))"}, {"spins_checked", ms.size()}, {"failures", failures}};
    return r;
}

Result quaternionic_double(const Params& p) {
    const GroupSpec su2 = group_preset("su2");
    if (p.m && *p.m % 2 == 0) throw std::invalid_argument("quaternionic-double needs an odd m");
    const auto ms = p.m ? std::vector<int>{*p.m} : spins_to(p.max_m.value_or(15), 2, 1);
    const SymTensor h2 = symmetric_product(su2.H(0), su2.H(0), Rational(1), 3);
    Result r{"quaternionic-double", true, Json::array()};
    for (int m : ms) {
        const CharPoly cp = char_poly_exact(build_DV(IrrepLabel{{m}, {}}, h2, su2));
        Polynomial expected = Polynomial::constant(Rational(1));
        for (int l = 0; l <= m; ++l) expected *= Polynomial::linear_factor(Rational((m - 2 * l) * (m - 2 * l)));
        const auto profile = multiplicity_profile(cp);
        const Rational c = c_value(cp);
        const bool ok = cp.poly == expected && profile.all_double() && !c.is_zero();
        r.pass = r.pass && ok;
        r.details.push_back({{"m", m}, {"char_poly", cp.poly.str()}, {"profile", to_json(profile)},
                             {"c", c.str()}, {"pass", ok}});
    }
    return r;
}

Result tridiag(const Params& p) {
    if (p.m && (*p.m < 2 || *p.m % 2 != 0)) throw std::invalid_argument("tridiag needs an even m >= 2");
    const auto ms = p.m ? std::vector<int>{*p.m} : spins_to(p.max_m.value_or(12), 2, 2);
    Result r{"tridiag", true, Json::array()};
    for (int m : ms) {
        const auto w = su2_even_b_witness(m);
        r.pass = r.pass && w.ok();
        r.details.push_back(to_json(w));
    }
    return r;
}

Result pairs_i(const Params& p) {
    if (p.m && *p.m % 2 == 0) throw std::invalid_argument("pairs-i needs an odd m");
    if (p.lambda && *p.lambda == 0) throw std::invalid_argument("pairs-i needs lambda != 0");
    const auto ms = p.m ? std::vector<int>{*p.m} : spins_to(9, 2, 1);
    const auto ls = p.lambda ? std::vector<long>{*p.lambda} : std::vector<long>{1, 2, 3};
    Result r{"pairs-i", true, Json::array()};
    for (int m : ms)
        for (long l : ls) {
            const auto w = pairs_mixed_witness(m, {l}, {Rational(1)});
            r.pass = r.pass && w.ok();
            r.details.push_back(to_json(w));
        }
    return r;
}

Result pairs_ii(const Params& p) {
    std::vector<std::pair<int, int>> pairs;
    if (p.m || p.m_prime)
        pairs.emplace_back(p.m.value_or(1), p.m_prime.value_or(p.m.value_or(1)));
    else
        pairs = {{1, 1}, {1, 3}, {3, 3}, {3, 5}};
    Result r{"pairs-ii", true, Json::array()};
    for (auto [m, mp] : pairs) {
        const auto rep = pairs_pipeline(m, mp, p.epsilon.value_or(default_pairs_epsilon(mp)), default_alpha_grid());
        r.pass = r.pass && rep.ok();
        r.details.push_back(to_json(rep));
    }
    return r;
}

Result torus(const Params&) {
    Result r{"torus", true, Json::object()};
    const GroupSpec t2 = group_preset("t2");
    // D_{V_lambda}(Y.Z) = lambda(Y) lambda(Z) in the internal normalization.
    const std::vector<std::array<Rational, 2>> dirs = {{Rational(1), Rational(0)}, {Rational(2, 3), Rational(-5, 7)},
                                                      {Rational(-1, 2), Rational(3)}};
    int checked = 0;
    bool products_ok = true;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (const auto& y : dirs)
                for (const auto& z : dirs) {
                    SymTensor s = SymTensor::zero(2);
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) s += symmetric_product(i, j, y[i] * z[j], 2);
                    const OperatorMatrix d = build_DV(IrrepLabel{{}, {a, b}}, s, t2);
                    const Rational ly = Rational(a) * y[0] + Rational(b) * y[1];
                    const Rational lz = Rational(a) * z[0] + Rational(b) * z[1];
                    if (!(d.entries(0, 0) == GaussRational(ly * lz))) products_ok = false;
                    ++checked;
                }
    const GroupSpec t1 = group_preset("t1");
    const SymTensor y2 = SymTensor::identity(1);
    const auto a = cert_a(IrrepLabel{{}, {1}}, IrrepLabel{{}, {2}}, y2, t1);
    const auto b = cert_b(IrrepLabel{{}, {3}}, y2, t1);
    r.pass = products_ok && a.nonzero() && b.value == Rational(-1);
    r.details = {{"products_checked", checked},
                 {"products_ok", products_ok},
                 {"a_lambda1_lambda2_at_Y2", to_json(a)},
                 {"b_lambda3_at_Y2", to_json(b)},
                 {"conversion_factor_to_2pi_convention", "4*pi^2"},
                 {"note", torus_convention_note()}};
    return r;
}

Result types(const Params&) {
    Result r{"types", true, Json::object()};
    const GroupSpec su2 = group_preset("su2"), su2sq = group_preset("su2xsu2");
    Json failures = Json::array();
    auto expected_sign = [](const IrrepLabel& l) { return classify_type(l) == RepType::quaternionic ? -1 : 1; };
    for (int m = 0; m <= 10; ++m) {
        const IrrepLabel l{{m}, {}};
        const auto j = quaternionic_structure(l);
        if (!is_equivariant(j, build_irrep(l, su2)) || structure_square_sign(j) != expected_sign(l))
            failures.push_back(l.str());
    }
    for (int m = 0; m <= 5; ++m)
        for (int mp = 0; mp <= 5; ++mp) {
            const IrrepLabel l{{m, mp}, {}};
            const auto j = quaternionic_structure(l);
            // real (x) real and quaternionic (x) quaternionic are real; mixed is quaternionic
            const bool rule = (classify_type(l) == RepType::real) == ((m % 2) == (mp % 2));
            if (!rule || !is_equivariant(j, build_irrep(l, su2sq)) || structure_square_sign(j) != expected_sign(l))
                failures.push_back(l.str());
        }
    r.pass = failures.empty();
    r.details = {{"rule", "V_m quaternionic iff m odd; products multiply the J^2 signs"}, {"failures", failures}};
    return r;
}

const std::map<std::string, std::function<Result(const Params&)>>& table() {
    static const std::map<std::string, std::function<Result(const Params&)>> t = {
        {"casimir", casimir}, {"eigH", eig_h},       {"quaternionic-double", quaternionic_double},
        {"tridiag", tridiag}, {"pairs-i", pairs_i}, {"pairs-ii", pairs_ii},
        {"torus", torus},     {"types", types}};
    return t;
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"casimir", "eigH",   "quaternionic-double", "tridiag",
                                               "pairs-i", "pairs-ii", "torus",             "types"};
    return n;
}

Result run(const std::string& name, const Params& params) {
    const auto it = table().find(name);
    if (it == table().end()) throw std::invalid_argument("unknown check: " + name);
    return it->second(params);
}

}  // namespace lielap::checks
