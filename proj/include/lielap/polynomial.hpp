#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lielap/rational.hpp"

namespace lielap {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    /// (root - X)
    static Polynomial linear_factor(const Rational& root) { return Polynomial({root, Rational(-1)}); }

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return c_.size() <= 1; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return c_; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] const Rational& leading() const;

    [[nodiscard]] Rational operator()(const Rational& x) const;
    [[nodiscard]] double eval(double x) const;
    [[nodiscard]] Polynomial derivative() const;
    [[nodiscard]] Polynomial monic() const;
    /// p(a*X + b)
    [[nodiscard]] Polynomial compose_affine(const Rational& a, const Rational& b) const;
    /// Human-readable form, highest degree first, e.g. "-X^3 + 8*X^2 - 16*X".
    [[nodiscard]] std::string str(const std::string& var = "X") const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division over Q.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// a / b, throwing if the division leaves a remainder.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Resultant in the Sylvester-determinant convention, via the subresultant
/// PRS over Z after clearing denominators. res(p, c) = c^deg p for a nonzero
/// constant c; throws std::invalid_argument if both inputs are zero.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// Square-free decomposition p = lc * prod_j g_j^j (Yun). Each entry is
/// (j, g_j) with g_j monic, square-free, nonconstant and pairwise coprime.
std::vector<std::pair<int, Polynomial>> squarefree_decomposition(const Polynomial& p);

/// Sturm chain of a square-free polynomial; counts distinct real roots exactly.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& squarefree);

    /// Number of distinct real roots in (-inf, x].
    [[nodiscard]] int count_at_most(const Rational& x) const;
    /// Number of distinct real roots in (a, b].
    [[nodiscard]] int count_in(const Rational& a, const Rational& b) const;
    [[nodiscard]] int count_real() const;

private:
    [[nodiscard]] int variations_at(const Rational& x) const;
    [[nodiscard]] int variations_at_infinity(int direction) const;

    std::vector<std::vector<Integer>> chain_;
};

}  // namespace lielap
