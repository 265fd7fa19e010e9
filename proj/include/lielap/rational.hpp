#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace lielap {

using Integer = mpz_class;

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// all arithmetic on them runs on machine integers with 128-bit intermediates.
/// Anything larger spills to a heap-allocated mpq_class and is demoted again as
/// soon as it fits. The representation is always canonical: positive
/// denominator, gcd(num, den) = 1.
class Rational {
public:
    Rational() noexcept = default;
    Rational(int v) noexcept : num_(v) {}
    Rational(long v) noexcept : num_(v) {}
    Rational(long long v) noexcept : num_(v) {}
    Rational(long long num, long long den);
    explicit Rational(const mpz_class& v);
    explicit Rational(const mpq_class& v);
    Rational(const mpz_class& num, const mpz_class& den);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p", "p/q", "-p/q" or a terminating decimal "1.25".
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] double to_double() const;
    /// Canonical text form: "p" when the denominator is one, else "p/q".
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(Rational v);
    friend Rational operator+(Rational v) { return v; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void set_big(mpq_class&& v);
    void normalize_small(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, long exponent);
/// Largest integer not exceeding r.
mpz_class floor(const Rational& r);
/// Fractional part r - floor(r), in [0, 1).
Rational frac(const Rational& r);
/// Rational approximation r <= x with denominator 2^bits (exact dyadic floor).
Rational dyadic_floor(double x, int bits);

/// Element of Q(i). Generator matrices and D_V operators live over this field.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int v) : re_(v) {}
    GaussRational(long v) : re_(v) {}
    GaussRational(long long v) : re_(v) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& real() const noexcept { return re_; }
    [[nodiscard]] const Rational& imag() const noexcept { return im_; }
    [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }
    [[nodiscard]] GaussRational conj() const { return {re_, -im_}; }
    [[nodiscard]] Rational norm2() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] std::string str() const;

    GaussRational& operator+=(const GaussRational& rhs);
    GaussRational& operator-=(const GaussRational& rhs);
    GaussRational& operator*=(const GaussRational& rhs);
    GaussRational& operator/=(const GaussRational& rhs);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend GaussRational operator+(const GaussRational& a) { return a; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& z);

private:
    Rational re_;
    Rational im_;
};

inline GaussRational conj(const GaussRational& z) { return z.conj(); }

/// Dense and sparse containers over the exact scalars.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using GMatrix = Matrix<GaussRational>;
using GSparse = SparseMatrix<GaussRational>;

/// Exact equality of two dense matrices (shape and entries).
template <typename Scalar>
bool exactly_equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) return false;
    return true;
}

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

/// Removes explicitly stored zeros (Eigen's prune() needs abs/precision).
GSparse drop_zeros(const GSparse& m);
GMatrix to_gauss(const QMatrix& m);
Eigen::MatrixXd to_double(const QMatrix& m);
Eigen::MatrixXcd to_complex(const GMatrix& m);

}  // namespace lielap

namespace Eigen {

template <>
struct NumTraits<lielap::Rational> : GenericNumTraits<lielap::Rational> {
    using Real = lielap::Rational;
    using NonInteger = lielap::Rational;
    using Nested = lielap::Rational;
    using Literal = lielap::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lielap::GaussRational> : GenericNumTraits<lielap::GaussRational> {
    using Real = lielap::GaussRational;
    using NonInteger = lielap::GaussRational;
    using Nested = lielap::GaussRational;
    using Literal = lielap::GaussRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 48
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
