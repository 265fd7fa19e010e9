#include "lielap/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lielap {

GroupSpec::GroupSpec(int k, int n, std::vector<CentralElement> central_generators, std::string name)
    : k_(k), n_(n), gamma_(std::move(central_generators)), name_(std::move(name)) {
    if (k_ < 0 || n_ < 0) throw std::invalid_argument("group spec needs k >= 0 and n >= 0");
    if (k_ + n_ < 1) throw std::invalid_argument("group spec needs k + n >= 1");
    for (auto& g : gamma_) {
        if (static_cast<int>(g.signs.size()) != k_)
            throw std::invalid_argument("central element needs one sign per SU(2) factor");
        if (static_cast<int>(g.torus_part.size()) != n_)
            throw std::invalid_argument("central element needs one torus coordinate per circle");
        for (int s : g.signs)
            if (s != 1 && s != -1) throw std::invalid_argument("central element signs must be +1 or -1");
        for (auto& t : g.torus_part) t = frac(t);
    }
}

int GroupSpec::check_su2(int j) const {
    if (j < 0 || j >= k_) throw std::out_of_range("SU(2) factor index out of range");
    return j;
}

int GroupSpec::e(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("torus direction out of range");
    return 3 * k_ + i;
}

int GroupSpec::factor_offset(int factor) const {
    if (factor < 0 || factor >= factor_count()) throw std::out_of_range("factor index out of range");
    return factor < k_ ? 3 * factor : 3 * k_;
}

int GroupSpec::factor_size(int factor) const {
    if (factor < 0 || factor >= factor_count()) throw std::out_of_range("factor index out of range");
    return factor < k_ ? 3 : n_;
}

std::string GroupSpec::basis_name(int p) const {
    if (p < 0 || p >= dimension()) throw std::out_of_range("basis index out of range");
    if (p < 3 * k_) {
        static const char* names[] = {"H", "A", "B"};
        return std::string(names[p % 3]) + std::to_string(p / 3 + 1);
    }
    return "e" + std::to_string(p - 3 * k_ + 1);
}

GroupSpec build_group_spec(int k, int n, std::vector<CentralElement> central_generators, std::string name) {
    return GroupSpec(k, n, std::move(central_generators), std::move(name));
}

namespace {

int parse_count(const std::string& s, const std::string& whole) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("unknown group: " + whole);
    return std::stoi(s);
}

}  // namespace

GroupSpec group_preset(const std::string& raw) {
    std::string name;
    for (char c : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (name == "so3") return GroupSpec(1, 0, {CentralElement{{-1}, {}}}, "so3");
    if (name == "so4") return GroupSpec(2, 0, {CentralElement{{-1, -1}, {}}}, "so4");
    if (name == "u2") return GroupSpec(1, 1, {CentralElement{{-1}, {Rational(1, 2)}}}, "u2");
    if (name == "spin4" || name == "su2xsu2") return GroupSpec(2, 0, {}, name);
    if (name == "su2") return GroupSpec(1, 0, {}, "su2");

    int k = 0, n = 0;
    std::stringstream ss(name);
    std::string token;
    while (std::getline(ss, token, 'x')) {
        if (token.rfind("su2", 0) == 0) {
            std::string rest = token.substr(3);
            if (rest.empty())
                k += 1;
            else if (rest[0] == '^')
                k += parse_count(rest.substr(1), raw);
            else
                throw std::invalid_argument("unknown group: " + raw);
        } else if (!token.empty() && token[0] == 't') {
            std::string rest = token.substr(1);
            if (!rest.empty() && rest[0] == '^') rest.erase(0, 1);
            n += rest.empty() ? 1 : parse_count(rest, raw);
        } else {
            throw std::invalid_argument("unknown group: " + raw);
        }
    }
    return GroupSpec(k, n, {}, name);
}

GroupSpec product_spec(const GroupSpec& a, const GroupSpec& b) {
    return GroupSpec(a.su2_factors() + b.su2_factors(), a.torus_rank() + b.torus_rank(), {},
                     a.name() + "x" + b.name());
}

int product_basis_index(const GroupSpec& a, const GroupSpec& b, int which, int p) {
    const GroupSpec& f = which == 0 ? a : b;
    if (p < 0 || p >= f.dimension()) throw std::out_of_range("basis index out of range");
    const int su2_total = 3 * (a.su2_factors() + b.su2_factors());
    if (p < 3 * f.su2_factors()) return which == 0 ? p : 3 * a.su2_factors() + p;
    const int t = p - 3 * f.su2_factors();
    return su2_total + (which == 0 ? t : a.torus_rank() + t);
}

SymTensor::SymTensor(QMatrix coefficients) : s_(std::move(coefficients)) {
    if (s_.rows() != s_.cols()) throw std::invalid_argument("tensor coefficient matrix must be square");
    for (Eigen::Index i = 0; i < s_.rows(); ++i)
        for (Eigen::Index j = i + 1; j < s_.cols(); ++j)
            if (!(s_(i, j) == s_(j, i))) throw std::invalid_argument("tensor coefficient matrix must be symmetric");
}

SymTensor SymTensor::square(const QVector& y) {
    QMatrix m(y.size(), y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i)
        for (Eigen::Index j = 0; j < y.size(); ++j) m(i, j) = y(i) * y(j);
    return SymTensor(std::move(m));
}

SymTensor& SymTensor::operator+=(const SymTensor& rhs) {
    if (rhs.size() != size()) throw std::invalid_argument("tensor size mismatch");
    for (Eigen::Index j = 0; j < s_.cols(); ++j)
        for (Eigen::Index i = 0; i < s_.rows(); ++i) s_(i, j) += rhs.s_(i, j);
    return *this;
}

SymTensor operator*(const Rational& c, const SymTensor& s) {
    QMatrix m = s.s_;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) *= c;
    return SymTensor(std::move(m));
}

MetricSpec::MetricSpec(QMatrix gram) : g_(std::move(gram)) {
    SymTensor check(g_);  // validates square + symmetric
    if (!is_positive_definite(g_)) throw std::domain_error("metric Gram matrix is not positive definite");
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const Eigen::Index n = m.rows();
    QMatrix a = m;
    QMatrix inv = identity<Rational>(n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("matrix is singular");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        Rational p = a(col, col);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Rational f = a(r, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

QMatrix nullspace(const QMatrix& m) {
    // Reduced row echelon form; one basis vector per free column.
    QMatrix a = m;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    std::vector<Eigen::Index> pivot_cols;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) a.row(p).swap(a.row(r));
        const Rational inv = Rational(1) / a(r, c);
        for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    QMatrix basis = QMatrix::Zero(cols, cols - static_cast<Eigen::Index>(pivot_cols.size()));
    Eigen::Index out = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, out) = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            basis(pivot_cols[i], out) = -a(static_cast<Eigen::Index>(i), f);
        ++out;
    }
    return basis;
}

SymTensor metric_to_tensor(const MetricSpec& m) { return SymTensor(inverse(m.gram())); }

bool is_positive_definite(const QMatrix& s) {
    // Elimination without pivoting: the k-th pivot is the ratio of the k-th
    // and (k-1)-th leading principal minors.
    if (s.rows() != s.cols()) return false;
    QMatrix a = s;
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (a(k, k).sign() <= 0) return false;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rational f = a(i, k) / a(k, k);
            for (Eigen::Index j = k + 1; j < n; ++j)
                if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

bool is_positive_definite(const SymTensor& s) { return is_positive_definite(s.matrix()); }

SymTensor embed_factor_tensor(int factor, const SymTensor& factor_tensor, const GroupSpec& spec) {
    const int offset = spec.factor_offset(factor);
    const int size = spec.factor_size(factor);
    if (factor_tensor.size() != size) throw std::invalid_argument("factor tensor size mismatch");
    QMatrix m = QMatrix::Zero(spec.dimension(), spec.dimension());
    m.block(offset, offset, size, size) = factor_tensor.matrix();
    return SymTensor(std::move(m));
}

SymTensor symmetric_product(int p, int q, const Rational& coeff, int dimension) {
    if (p < 0 || q < 0 || p >= dimension || q >= dimension) throw std::out_of_range("basis index out of range");
    QMatrix m = QMatrix::Zero(dimension, dimension);
    if (p == q) {
        m(p, p) = coeff;
    } else {
        Rational half = coeff / Rational(2);
        m(p, q) = half;
        m(q, p) = half;
    }
    return SymTensor(std::move(m));
}

std::string tensor_hash(const SymTensor& s) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& text) {
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    mix(std::to_string(s.size()));
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j) {
            mix(",");
            mix(s(i, j).str());
        }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace lielap
