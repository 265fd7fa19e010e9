#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lielap/algebra.hpp"
#include "lielap/irreps.hpp"
#include "lielap/operator.hpp"
#include "lielap/polynomial.hpp"

namespace lielap {

/// p(X) = det(D - X Id); leading coefficient (-1)^dim.
struct CharPoly {
    Polynomial poly;
    [[nodiscard]] int degree() const { return poly.degree(); }
};

/// Exact characteristic polynomial (multimodular, see modular.hpp).
/// Throws std::logic_error if a coefficient has a nonzero imaginary part.
CharPoly char_poly_exact(const OperatorMatrix& op);
/// det(m - X Id) over Q(i), low degree first.
std::vector<GaussRational> char_poly_coefficients(const GMatrix& m);
/// Same polynomial by Hessenberg reduction directly over Q(i); slower, kept
/// as an independent path.
std::vector<GaussRational> char_poly_hessenberg(const GMatrix& m);
CharPoly char_poly_exact(const QMatrix& m);

/// (j, d_j): d_j distinct eigenvalues of multiplicity exactly j.
struct MultiplicityProfile {
    std::vector<std::pair<int, int>> classes;  // ascending j

    [[nodiscard]] int degree() const;
    [[nodiscard]] bool all_simple() const { return classes.size() == 1 && classes[0].first == 1; }
    [[nodiscard]] bool all_double() const { return classes.size() == 1 && classes[0].first == 2; }
    [[nodiscard]] int max_multiplicity() const { return classes.empty() ? 0 : classes.back().first; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

MultiplicityProfile multiplicity_profile(const CharPoly& p);
MultiplicityProfile multiplicity_profile(const Polynomial& p);
/// Profile read off numeric clusters, for cross-checks.
MultiplicityProfile multiplicity_profile(const NumericSpectrum& spectrum);

enum class CertKind { a, b, c };

std::string to_string(CertKind k);

struct Certificate {
    CertKind kind = CertKind::b;
    std::vector<IrrepLabel> labels;
    std::string tensor_hash;
    Rational value;

    [[nodiscard]] bool nonzero() const { return !value.is_zero(); }
};

/// res(p_V, p_W)
Rational a_value(const CharPoly& pv, const CharPoly& pw);
/// res(p_V, p_V')
Rational b_value(const CharPoly& pv);
/// res(p_V, p_V'')
Rational c_value(const CharPoly& pv);

/// Requires W not isomorphic to V or V*.
Certificate cert_a(const IrrepLabel& v, const IrrepLabel& w, const SymTensor& s, const GroupSpec& spec);
Certificate cert_b(const IrrepLabel& v, const SymTensor& s, const GroupSpec& spec);
Certificate cert_c(const IrrepLabel& v, const SymTensor& s, const GroupSpec& spec);

}  // namespace lielap
