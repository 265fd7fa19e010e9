#include "lielap/irreps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lielap {

namespace {

using Triplet = Eigen::Triplet<GaussRational>;

GSparse from_triplets(long rows, long cols, std::vector<Triplet>& t) {
    GSparse m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

GSparse conj(const GSparse& m) {
    GSparse out = m;
    for (Eigen::Index k = 0; k < out.outerSize(); ++k)
        for (GSparse::InnerIterator it(out, k); it; ++it) it.valueRef() = it.value().conj();
    return out;
}

bool sparse_equal(const GSparse& a, const GSparse& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    GSparse d = a - b;
    return drop_zeros(d).nonZeros() == 0;
}

void check_label(const IrrepLabel& label, const GroupSpec& spec) {
    if (static_cast<int>(label.spins.size()) != spec.su2_factors() ||
        static_cast<int>(label.weight.size()) != spec.torus_rank())
        throw std::invalid_argument("label " + label.str() + " does not match the group");
    for (int m : label.spins)
        if (m < 0) throw std::invalid_argument("spins must be non-negative");
}

}  // namespace

long IrrepLabel::dimension() const {
    long d = 1;
    for (int m : spins) d *= m + 1;
    return d;
}

bool IrrepLabel::is_trivial() const {
    return std::all_of(spins.begin(), spins.end(), [](int m) { return m == 0; }) &&
           std::all_of(weight.begin(), weight.end(), [](long l) { return l == 0; });
}

std::string IrrepLabel::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < spins.size(); ++i) os << (i ? "," : "") << spins[i];
    if (!weight.empty()) {
        os << ";";
        for (std::size_t i = 0; i < weight.size(); ++i) os << (i ? "," : "") << weight[i];
    }
    return os.str();
}

IrrepLabel IrrepLabel::parse(const std::string& text) {
    IrrepLabel label;
    auto split = [&text](const std::string& part, auto&& push) {
        if (part.empty()) return;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed label: " + text);
            }
            if (used != item.size()) throw std::invalid_argument("malformed label: " + text);
            push(v);
        }
    };
    auto semi = text.find(';');
    split(text.substr(0, semi), [&](long v) {
        if (v < 0) throw std::invalid_argument("spins must be non-negative: " + text);
        label.spins.push_back(static_cast<int>(v));
    });
    if (semi != std::string::npos) split(text.substr(semi + 1), [&](long v) { label.weight.push_back(v); });
    return label;
}

std::string to_string(RepType t) {
    switch (t) {
        case RepType::real: return "real";
        case RepType::complex: return "complex";
        case RepType::quaternionic: return "quaternionic";
    }
    return "?";
}

GSparse Irrep::action(const QVector& y) const {
    if (y.size() != static_cast<Eigen::Index>(generators.size()))
        throw std::invalid_argument("Lie algebra vector size mismatch");
    GSparse out(dim, dim);
    for (Eigen::Index p = 0; p < y.size(); ++p)
        if (!y(p).is_zero()) out += generators[static_cast<std::size_t>(p)] * GaussRational(y(p));
    return drop_zeros(out);
}

std::array<GSparse, 3> su2_generators(int m) {
    if (m < 0) throw std::invalid_argument("spin must be non-negative");
    const long d = m + 1;
    std::vector<Triplet> h, a, b;
    for (long l = 0; l <= m; ++l) {
        if (m - 2 * l != 0) h.emplace_back(l, l, GaussRational(Rational(0), Rational(m - 2 * l)));
        // column l holds the image of v_l
        if (l + 1 <= m) {
            a.emplace_back(l + 1, l, GaussRational(Rational(0), Rational(m - l)));
            b.emplace_back(l + 1, l, GaussRational(Rational(m - l)));
        }
        if (l - 1 >= 0) {
            a.emplace_back(l - 1, l, GaussRational(Rational(0), Rational(l)));
            b.emplace_back(l - 1, l, GaussRational(Rational(-l)));
        }
    }
    return {from_triplets(d, d, h), from_triplets(d, d, a), from_triplets(d, d, b)};
}

GSparse sparse_identity(long n) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) t.emplace_back(i, i, GaussRational(1));
    return from_triplets(n, n, t);
}

GSparse kron(const GSparse& a, const GSparse& b) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka)
        for (GSparse::InnerIterator ia(a, ka); ia; ++ia)
            for (Eigen::Index kb = 0; kb < b.outerSize(); ++kb)
                for (GSparse::InnerIterator ib(b, kb); ib; ++ib)
                    t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                                   ia.value() * ib.value());
    return from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), t);
}

Irrep build_irrep(const IrrepLabel& label, const GroupSpec& spec) {
    check_label(label, spec);
    Irrep irrep;
    irrep.label = label;
    irrep.dim = label.dimension();
    irrep.rep_type = classify_type(label);
    irrep.generators.reserve(static_cast<std::size_t>(spec.dimension()));

    const int k = spec.su2_factors();
    for (int j = 0; j < k; ++j) {
        long before = 1, after = 1;
        for (int i = 0; i < j; ++i) before *= label.spins[static_cast<std::size_t>(i)] + 1;
        for (int i = j + 1; i < k; ++i) after *= label.spins[static_cast<std::size_t>(i)] + 1;
        auto factor = su2_generators(label.spins[static_cast<std::size_t>(j)]);
        for (auto& g : factor) {
            GSparse lifted = g;
            if (before > 1) lifted = kron(sparse_identity(before), lifted);
            if (after > 1) lifted = kron(lifted, sparse_identity(after));
            irrep.generators.push_back(std::move(lifted));
        }
    }
    for (int i = 0; i < spec.torus_rank(); ++i) {
        const long lambda = label.weight[static_cast<std::size_t>(i)];
        std::vector<Triplet> t;
        if (lambda != 0)
            for (long r = 0; r < irrep.dim; ++r) t.emplace_back(r, r, GaussRational(Rational(0), Rational(lambda)));
        irrep.generators.push_back(from_triplets(irrep.dim, irrep.dim, t));
    }
    return irrep;
}

RepType classify_type(const IrrepLabel& label) {
    if (std::any_of(label.weight.begin(), label.weight.end(), [](long l) { return l != 0; })) return RepType::complex;
    const auto odd = std::count_if(label.spins.begin(), label.spins.end(), [](int m) { return m % 2 != 0; });
    return odd % 2 == 1 ? RepType::quaternionic : RepType::real;
}

IrrepLabel dual_label(const IrrepLabel& label) {
    IrrepLabel out = label;
    for (auto& l : out.weight) l = -l;
    return out;
}

bool is_dual_representative(const IrrepLabel& label) {
    for (long l : label.weight) {
        if (l > 0) return true;
        if (l < 0) return false;
    }
    return true;
}

bool descends_to_quotient(const IrrepLabel& label, const GroupSpec& spec) {
    check_label(label, spec);
    for (const auto& gamma : spec.central_generators()) {
        // (+-Id) acts on V_m by (+-1)^m; t acts on V_lambda by exp(2 pi i lambda.t).
        int sign = 1;
        for (std::size_t j = 0; j < gamma.signs.size(); ++j)
            if (gamma.signs[j] < 0 && label.spins[j] % 2 != 0) sign = -sign;
        Rational phase(0);
        for (std::size_t i = 0; i < gamma.torus_part.size(); ++i)
            phase += Rational(static_cast<long long>(label.weight[i])) * gamma.torus_part[i];
        phase = frac(phase);
        const bool trivial = sign == 1 ? phase.is_zero() : phase == Rational(1, 2);
        if (!trivial) return false;
    }
    return true;
}

GMatrix QuaternionicStructure::apply(const GMatrix& v) const {
    GMatrix c = v.unaryExpr([](const GaussRational& z) { return z.conj(); });
    return GMatrix(matrix * c);
}

QuaternionicStructure quaternionic_structure(int m) {
    if (m < 0) throw std::invalid_argument("spin must be non-negative");
    std::vector<Triplet> t;
    for (long l = 0; l <= m; ++l) t.emplace_back(m - l, l, GaussRational(l % 2 == 0 ? 1 : -1));
    QuaternionicStructure j;
    j.matrix = from_triplets(m + 1, m + 1, t);
    j.square_sign = m % 2 == 0 ? 1 : -1;
    return j;
}

QuaternionicStructure quaternionic_structure(const IrrepLabel& label) {
    if (std::any_of(label.weight.begin(), label.weight.end(), [](long l) { return l != 0; }))
        throw std::invalid_argument("complex-type label has no real or quaternionic structure");
    QuaternionicStructure out;
    out.matrix = sparse_identity(1);
    out.square_sign = 1;
    for (int m : label.spins) {
        auto j = quaternionic_structure(m);
        out.matrix = kron(out.matrix, j.matrix);
        out.square_sign *= j.square_sign;
    }
    return out;
}

bool is_equivariant(const QuaternionicStructure& j, const Irrep& irrep) {
    for (const auto& g : irrep.generators) {
        GSparse lhs = j.matrix * conj(g);
        GSparse rhs = g * j.matrix;
        if (!sparse_equal(lhs, rhs)) return false;
    }
    return true;
}

int structure_square_sign(const QuaternionicStructure& j) {
    // J(J(v)) = P conj(P conj(v)) = P conj(P) v
    GSparse sq = j.matrix * conj(j.matrix);
    const long n = j.matrix.rows();
    if (sparse_equal(sq, sparse_identity(n))) return 1;
    GSparse neg = sparse_identity(n) * GaussRational(-1);
    if (sparse_equal(sq, neg)) return -1;
    return 0;
}

GSparse su2_quarter_turn(int m) {
    if (m < 0) throw std::invalid_argument("spin must be non-negative");
    std::vector<Triplet> t;
    for (long l = 0; l <= m; ++l) t.emplace_back(m - l, l, GaussRational(l % 2 == 0 ? 1 : -1));
    return from_triplets(m + 1, m + 1, t);
}

std::vector<IrrepLabel> labels_up_to_level(const GroupSpec& spec, int level) {
    if (level < 0) throw std::invalid_argument("level must be non-negative");
    std::vector<IrrepLabel> out;
    IrrepLabel cur;
    cur.spins.assign(static_cast<std::size_t>(spec.su2_factors()), 0);
    cur.weight.assign(static_cast<std::size_t>(spec.torus_rank()), 0);
    const int slots = spec.su2_factors() + spec.torus_rank();
    std::function<void(int)> rec = [&](int slot) {
        if (slot == slots) {
            if (is_dual_representative(cur) && descends_to_quotient(cur, spec)) out.push_back(cur);
            return;
        }
        if (slot < spec.su2_factors()) {
            for (int m = 0; m <= level; ++m) {
                cur.spins[static_cast<std::size_t>(slot)] = m;
                rec(slot + 1);
            }
        } else {
            for (long l = -level; l <= level; ++l) {
                cur.weight[static_cast<std::size_t>(slot - spec.su2_factors())] = l;
                rec(slot + 1);
            }
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lielap
