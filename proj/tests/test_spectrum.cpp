#include <doctest.h>

#include <cmath>
#include <random>

#include "lielap/spectrum.hpp"
#include "lielap/witness.hpp"
#include "oracles.hpp"

using namespace lielap;

namespace {

bool contains(const std::vector<IrrepLabel>& v, const IrrepLabel& l) {
    return std::find(v.begin(), v.end(), l) != v.end();
}

}  // namespace

TEST_CASE("enumeration bound") {
    const GroupSpec su2 = group_preset("su2"), so3 = group_preset("so3");
    const auto a = enumerate_irreps(su2, SymTensor::identity(3), Rational(10));
    CHECK(a == std::vector<IrrepLabel>{{{0}, {}}, {{1}, {}}, {{2}, {}}});
    CHECK(enumerate_irreps(su2, SymTensor::identity(3), Rational(0)) == std::vector<IrrepLabel>{{{0}, {}}});
    CHECK(enumerate_irreps(so3, SymTensor::identity(3), Rational(10)) == std::vector<IrrepLabel>{{{0}, {}}, {{2}, {}}});
    CHECK_THROWS_AS(enumerate_irreps(su2, SymTensor(symmetric_product(0, 1, Rational(1), 3)), Rational(1)),
                    std::domain_error);

    QMatrix s = identity<Rational>(3);
    s(0, 0) = Rational(1, 4);
    const Rational c = eigenvalue_lower_bound(SymTensor(s));
    CHECK(c > Rational(0));
    CHECK(c <= Rational(1, 4));
    QMatrix shifted = s;
    for (int i = 0; i < 3; ++i) shifted(i, i) -= c;
    CHECK(is_positive_definite(shifted));
}

TEST_CASE("bi-invariant SU(2) table") {
    const SpectrumTable t = assemble_spectrum(group_preset("su2"), SymTensor::identity(3), Rational(8));
    REQUIRE(t.entries.size() == 3);
    CHECK(t.entries[0].eigenvalue_approx == doctest::Approx(0));
    CHECK(t.entries[0].real_multiplicity == 1);
    CHECK(t.entries[0].irreducible);
    CHECK(t.entries[1].eigenvalue_approx == doctest::Approx(3));
    CHECK(t.entries[1].real_multiplicity == 4);
    CHECK(t.entries[1].irreducible);
    CHECK(t.entries[1].contributors.at(0).type == RepType::quaternionic);
    CHECK(t.entries[2].eigenvalue_approx == doctest::Approx(8));
    CHECK(t.entries[2].real_multiplicity == 9);
    CHECK_FALSE(t.entries[2].irreducible);
    CHECK(t.entries[2].violation == "b");
    const VerdictReport v = verdict_report(t);
    CHECK_FALSE(v.all_irreducible);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].condition == "b");
    CHECK(v.violations[0].eigenvalue_approx == doctest::Approx(8));
}

TEST_CASE("flat circle table") {
    const SpectrumTable t = assemble_spectrum(group_preset("t1"), SymTensor::identity(1), Rational(5));
    REQUIRE(t.entries.size() == 3);
    const double expect[] = {0, 1, 4};
    const long mult[] = {1, 2, 2};
    for (int i = 0; i < 3; ++i) {
        CHECK(t.entries[static_cast<std::size_t>(i)].eigenvalue_approx == doctest::Approx(expect[i]));
        CHECK(t.entries[static_cast<std::size_t>(i)].real_multiplicity == mult[i]);
        CHECK(t.entries[static_cast<std::size_t>(i)].irreducible);
    }
    QMatrix s(1, 1);
    s(0, 0) = Rational(7, 5);
    CHECK(verdict_report(assemble_spectrum(group_preset("t1"), SymTensor(s), Rational(30))).all_irreducible);
}

TEST_CASE("witness tensor gives an irreducible table") {
    const GroupSpec su2 = group_preset("su2");
    const WitnessReport w = witness_search(su2, 4, 20, 1);
    REQUIRE(w.success);
    const SpectrumTable t = assemble_spectrum(su2, w.tensor, Rational(10));
    CHECK(verdict_report(t).all_irreducible);
    // eigenvalues of D_{V_m} stay above c * m(m+2), so labels up to m = 4 cover Lambda = 10
    for (const auto& l : t.labels) CHECK(l.spins[0] <= 4);
}

TEST_CASE("coprime basis and root isolation") {
    const Polynomial a = Polynomial::linear_factor(Rational(1)) * Polynomial::linear_factor(Rational(2));
    const Polynomial b = Polynomial::linear_factor(Rational(2)) * Polynomial::linear_factor(Rational(3));
    const auto basis = coprime_basis({a.monic(), b.monic()});
    REQUIRE(basis.size() == 3);
    int shared = 0;
    for (const auto& e : basis) {
        if (e.sources.size() == 2) {
            ++shared;
            CHECK(e.poly == Polynomial::linear_factor(Rational(2)).monic());
        }
        for (const auto& f : basis)
            if (&e != &f) CHECK(gcd(e.poly, f.poly).degree() == 0);
    }
    CHECK(shared == 1);

    const Polynomial x2m2{Rational(-2), Rational(0), Rational(1)};
    const auto roots = isolate_real_roots(x2m2, Rational(-5), Rational(5), Rational(1, 1 << 30));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(roots[1] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("zero eigenvalue is the constants") {
    std::mt19937_64 rng(31);
    for (const char* name : {"su2", "so3", "u2", "su2xt1", "t2", "so4"}) {
        const GroupSpec g = group_preset(name);
        const SpectrumTable t = assemble_spectrum(g, random_definite_tensor(g.dimension(), rng, 12), Rational(2));
        REQUIRE_FALSE(t.entries.empty());
        CHECK(t.entries[0].eigenvalue_approx == doctest::Approx(0).epsilon(1e-9));
        CHECK(t.entries[0].real_multiplicity == 1);
        if (t.entries.size() > 1) CHECK(t.entries[1].eigenvalue_approx > 1e-6);
    }
}

TEST_CASE("torus sum rule") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 5; ++t) {
        const GroupSpec g = group_preset("t2");
        const SymTensor s = random_definite_tensor(2, rng, 5 + t);
        const Rational cutoff(12);
        const SpectrumTable table = assemble_spectrum(g, s, cutoff);
        long total = 0;
        for (const auto& e : table.entries) total += e.real_multiplicity;
        long lattice = 0;
        for (long a = -20; a <= 20; ++a)
            for (long b = -20; b <= 20; ++b) {
                const Rational q = s(0, 0) * Rational(a * a) + Rational(2) * s(0, 1) * Rational(a * b) +
                                   s(1, 1) * Rational(b * b);
                if (q <= cutoff) ++lattice;
            }
        CHECK(total == lattice);
    }
}

TEST_CASE("completeness spot check one level beyond the enumeration bound") {
    std::mt19937_64 rng(41);
    for (const char* name : {"su2", "su2xt1", "so4"}) {
        const GroupSpec g = group_preset(name);
        const SymTensor s = random_definite_tensor(g.dimension(), rng, 8);
        const Rational cutoff(14);
        const SpectrumTable table = assemble_spectrum(g, s, cutoff);
        const double lam = cutoff.to_double();
        // every numeric eigenvalue below the cutoff of every enumerated label appears in the table
        for (const auto& l : table.labels) {
            const auto num = eigen_decompose_numeric(build_DV(l, s, g));
            for (double mu : num.eigenvalues) {
                if (mu > lam * (1 - 1e-9)) continue;
                bool found = false;
                for (const auto& e : table.entries)
                    if (std::abs(e.eigenvalue_approx - mu) <= 1e-7 * std::max(1.0, std::abs(mu))) found = true;
                CHECK(found);
            }
        }
        // labels at the next Casimir shell contribute nothing below the cutoff
        const Rational c = table.lower_bound;
        const auto wider = labels_with_casimir_at_most(g, cutoff / c + Rational(16));
        for (const auto& l : wider) {
            if (contains(table.labels, l)) continue;
            const auto num = eigen_decompose_numeric(build_DV(l, s, g));
            CHECK(num.eigenvalues.front() > lam);
        }
    }
}
