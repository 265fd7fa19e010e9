#include <doctest.h>

#include <random>

#include "lielap/operator.hpp"
#include "lielap/polycert.hpp"
#include "lielap/witness.hpp"
#include "oracles.hpp"

using namespace lielap;

namespace {

const GroupSpec kSu2 = group_preset("su2");

SymTensor h2() { return SymTensor::square(QVector::Unit(3, 0)); }

GMatrix diag(std::initializer_list<long long> v) {
    GMatrix m = GMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (long long x : v) m(i, i) = GaussRational(x), ++i;
    return m;
}

Polynomial poly_from_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (const auto& r : roots) p *= Polynomial::linear_factor(r);
    return p;
}

}  // namespace

TEST_CASE("D_V examples") {
    CHECK(exactly_equal(build_DV(IrrepLabel{{1}, {}}, h2(), kSu2).entries, diag({1, 1})));
    CHECK(exactly_equal(build_DV(IrrepLabel{{2}, {}}, h2(), kSu2).entries, diag({4, 0, 4})));
    for (int m = 0; m <= 30; ++m) {
        const GMatrix d = build_DV(IrrepLabel{{m}, {}}, casimir_tensor(kSu2), kSu2).entries;
        CHECK(exactly_equal(d, GMatrix(identity<GaussRational>(m + 1) * GaussRational(m * (m + 2)))));
    }
    CHECK_THROWS_AS(build_DV(IrrepLabel{{1}, {}}, SymTensor::identity(4), kSu2), std::invalid_argument);
}

TEST_CASE("Casimir eigenvalues") {
    CHECK(casimir_value(IrrepLabel{{1}, {}}) == Rational(3));
    CHECK(casimir_value(IrrepLabel{{2}, {}}) == Rational(8));
    const GroupSpec g = group_preset("su2xsu2");
    const GMatrix d = build_DV(IrrepLabel{{1, 2}, {}}, casimir_tensor(g), g).entries;
    CHECK(d.rows() == 6);
    CHECK(exactly_equal(d, GMatrix(identity<GaussRational>(6) * GaussRational(11))));
    const GroupSpec t = group_preset("t1");
    CHECK(build_DV(IrrepLabel{{}, {3}}, casimir_tensor(t), t).entries(0, 0) == GaussRational(9));
}

TEST_CASE("numeric spectra and clustering") {
    const auto s = eigen_decompose_numeric(build_DV(IrrepLabel{{2}, {}}, h2(), kSu2));
    REQUIRE(s.clusters.size() == 2);
    CHECK(s.clusters[0].value == doctest::Approx(0));
    CHECK(s.clusters[0].multiplicity == 1);
    CHECK(s.clusters[1].value == doctest::Approx(4));
    CHECK(s.clusters[1].multiplicity == 2);

    const auto c = eigen_decompose_numeric(build_DV(IrrepLabel{{3}, {}}, casimir_tensor(kSu2), kSu2));
    REQUIRE(c.clusters.size() == 1);
    CHECK(c.clusters[0].value == doctest::Approx(15));
    CHECK(c.clusters[0].multiplicity == 4);

    const GroupSpec g = group_preset("su2xsu2");
    QVector y = QVector::Zero(6);
    y(0) = 1;
    y(3) = Rational(1, 2);
    const auto p = eigen_decompose_numeric(build_DV(IrrepLabel{{1, 1}, {}}, SymTensor::square(y), g));
    REQUIRE(p.clusters.size() == 2);
    CHECK(p.clusters[0].value == doctest::Approx(0.25));
    CHECK(p.clusters[0].multiplicity == 2);
    CHECK(p.clusters[1].value == doctest::Approx(2.25));
    CHECK(p.clusters[1].multiplicity == 2);
}

TEST_CASE("Kronecker sums") {
    const GroupSpec su2 = kSu2;
    const SymTensor cas = casimir_tensor(su2);
    CHECK(kronecker_spectrum_check(su2, IrrepLabel{{1}, {}}, cas, su2, IrrepLabel{{1}, {}}, cas, Rational(1)).ok());
    CHECK(kronecker_spectrum_check(su2, IrrepLabel{{2}, {}}, h2(), su2, IrrepLabel{{0}, {}}, h2(), Rational(5)).ok());
    CHECK(kronecker_spectrum_check(su2, IrrepLabel{{1}, {}}, h2(), su2, IrrepLabel{{2}, {}}, h2(), Rational(1, 3)).ok());

    // brute-force 6x6: spectrum of D_{(1,2)}(i(H^2) + 1/3 i'(H^2)) is {1 + k^2/3 : k in 2,0,-2} twice
    const GroupSpec g = group_preset("su2xsu2");
    const SymTensor s = embed_factor_tensor(0, h2(), g) + Rational(1, 3) * embed_factor_tensor(1, h2(), g);
    const CharPoly p = char_poly_exact(build_DV(IrrepLabel{{1, 2}, {}}, s, g));
    const Rational a(7, 3), b(1);
    CHECK(p.poly == poly_from_roots({a, a, b, b, a, a}));
}

TEST_CASE("exact characteristic polynomials") {
    CHECK(char_poly_exact(QMatrix(identity<Rational>(2))).poly ==
          Polynomial::linear_factor(Rational(1)) * Polynomial::linear_factor(Rational(1)));
    const CharPoly p = char_poly_exact(build_DV(IrrepLabel{{2}, {}}, h2(), kSu2));
    CHECK(p.poly == Polynomial({Rational(0), Rational(-16), Rational(8), Rational(-1)}));
    CHECK(p.poly.str() == "-X^3 + 8*X^2 - 16*X");
    for (int m = 0; m <= 6; ++m) {
        const CharPoly c = char_poly_exact(build_DV(IrrepLabel{{m}, {}}, casimir_tensor(kSu2), kSu2));
        CHECK(c.poly == poly_from_roots(std::vector<Rational>(static_cast<std::size_t>(m + 1), Rational(m * (m + 2)))));
    }
    GMatrix bad = GMatrix::Zero(1, 1);
    bad(0, 0) = GaussRational::i();
    CHECK_THROWS_AS(char_poly_exact(OperatorMatrix{bad, IrrepLabel{{0}, {}}, SymTensor::identity(3)}),
                    std::logic_error);
}

TEST_CASE("three characteristic polynomial routes agree") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 10;
        GMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = GaussRational(Rational(dist(rng), 1 + t % 3), Rational(dist(rng), 2));
        const auto fl = oracle::faddeev_leverrier(m);
        CHECK(char_poly_coefficients(m) == fl);
        CHECK(char_poly_hessenberg(m) == fl);
    }
    // D_V operators, where entries carry large denominators
    for (int t = 0; t < 6; ++t) {
        const SymTensor s = random_definite_tensor(6, rng, 40);
        const OperatorMatrix d = build_DV(IrrepLabel{{1 + t % 3, 2}, {}}, s, group_preset("su2xsu2"));
        CHECK(char_poly_coefficients(d.entries) == oracle::faddeev_leverrier(d.entries));
    }
}

TEST_CASE("multiplicity profiles") {
    const Polynomial p = poly_from_roots({Rational(1), Rational(1), Rational(2)});
    CHECK(multiplicity_profile(p).str() == "[(1,1),(2,1)]");
    QVector h = QVector::Unit(3, 0);
    const CharPoly c3 = char_poly_exact(build_DV(IrrepLabel{{3}, {}}, SymTensor::square(h), kSu2));
    CHECK(multiplicity_profile(c3).all_double());
    CHECK(multiplicity_profile(c3).str() == "[(2,2)]");
    const CharPoly cas = char_poly_exact(build_DV(IrrepLabel{{2}, {}}, casimir_tensor(kSu2), kSu2));
    CHECK(multiplicity_profile(cas).str() == "[(3,1)]");
    CHECK_THROWS(multiplicity_profile(Polynomial()));
}

TEST_CASE("certificates a, b, c") {
    const SymTensor cas = casimir_tensor(kSu2);
    const IrrepLabel v0{{0}, {}}, v1{{1}, {}}, v2{{2}, {}}, v3{{3}, {}};
    CHECK(cert_a(v1, v2, cas, kSu2).nonzero());
    CHECK(cert_a(v1, v3, h2(), kSu2).value.is_zero());
    CHECK_THROWS_AS(cert_a(v1, v1, cas, kSu2), std::invalid_argument);

    const GroupSpec t1 = group_preset("t1");
    const SymTensor e2 = SymTensor::identity(1);
    const Certificate a = cert_a(IrrepLabel{{}, {1}}, IrrepLabel{{}, {2}}, e2, t1);
    CHECK(a.value == Rational(-3));  // det [[-1, 1], [-1, 4]]
    CHECK_THROWS_AS(cert_a(IrrepLabel{{}, {1}}, IrrepLabel{{}, {-1}}, e2, t1), std::invalid_argument);

    CHECK(cert_b(v2, h2(), kSu2).value.is_zero());
    CHECK(cert_b(v0, h2(), kSu2).nonzero());
    const EvenBWitness w = su2_even_b_witness(2);
    REQUIRE(w.certificate);
    const SymTensor perturbed = h2() + w.epsilon * SymTensor::square(QVector::Unit(3, 1));
    CHECK(cert_b(v2, perturbed, kSu2).nonzero());

    CHECK(cert_c(v1, h2(), kSu2).nonzero());
    CHECK(cert_c(v3, cas, kSu2).value.is_zero());
    CHECK(cert_c(v1, cas, kSu2).value == Rational(4));
    CHECK(cert_b(v1, h2(), kSu2).tensor_hash == tensor_hash(h2()));
}

TEST_CASE("b and c agree with multiplicity profiles on random tensors") {
    std::mt19937_64 rng(17);
    const GroupSpec g = group_preset("su2xsu2");
    for (int t = 0; t < 40; ++t) {
        // small ranges so that coincidences actually occur
        const SymTensor s = t % 2 ? random_definite_tensor(6, rng, 1) : casimir_tensor(g);
        const IrrepLabel l{{t % 4, (t / 4) % 3}, {}};
        const CharPoly p = char_poly_exact(build_DV(l, s, g));
        const MultiplicityProfile prof = multiplicity_profile(p);
        CHECK(b_value(p).is_zero() != prof.all_simple());
        if (!c_value(p).is_zero()) CHECK(prof.max_multiplicity() <= 2);
    }
}

TEST_CASE("dual labels have equal characteristic polynomials") {
    std::mt19937_64 rng(23);
    const GroupSpec g = group_preset("su2xt1");
    for (int t = 0; t < 10; ++t) {
        const SymTensor s = random_definite_tensor(4, rng, 20);
        const IrrepLabel l{{t % 4}, {1 + t % 3}};
        CHECK(char_poly_exact(build_DV(l, s, g)).poly == char_poly_exact(build_DV(dual_label(l), s, g)).poly);
        CHECK(cert_b(l, s, g).value == cert_b(dual_label(l), s, g).value);
    }
}

TEST_CASE("eigenspaces on quaternionic labels have even dimension") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 5; ++t) {
        const SymTensor s = random_definite_tensor(3, rng, 10);
        for (int m : {1, 3, 5}) {
            const MultiplicityProfile prof = multiplicity_profile(char_poly_exact(build_DV(IrrepLabel{{m}, {}}, s, kSu2)));
            for (auto [j, d] : prof.classes) CHECK(j % 2 == 0);
        }
    }
}
