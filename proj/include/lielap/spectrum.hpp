#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lielap/algebra.hpp"
#include "lielap/irreps.hpp"
#include "lielap/operator.hpp"
#include "lielap/polynomial.hpp"

namespace lielap {

/// An irrep (or complex dual pair, represented by one label) whose operator
/// D_V(s) has the eigenvalue with multiplicity `multiplicity`.
struct Contributor {
    IrrepLabel label;
    RepType type = RepType::real;
    long dim = 1;
    int multiplicity = 0;
};

struct SpectrumEntry {
    double eigenvalue_approx = 0;
    Polynomial exact_factor;  // monic square-free; the eigenvalue is one of its real roots
    int root_index = 0;       // 0-based position among the real roots of exact_factor
    long real_multiplicity = 0;
    std::vector<Contributor> contributors;
    bool irreducible = false;
    /// Failed condition when reducible: "a" (several contributors), "b"
    /// (real/complex contributor with multiplicity > 1) or "c" (quaternionic
    /// contributor with multiplicity other than 2).
    std::string violation;
};

struct SpectrumTable {
    GroupSpec spec;
    SymTensor tensor;
    Rational cutoff;
    Rational lower_bound;  // c with S - c Id positive definite, used for enumeration
    std::vector<IrrepLabel> labels;
    std::vector<SpectrumEntry> entries;  // ascending eigenvalue
};

/// Exact rational c > 0 with S - c Id positive definite, close to the least
/// eigenvalue of S. Throws std::domain_error if S is not positive definite.
Rational eigenvalue_lower_bound(const SymTensor& s);

/// Casimir eigenvalue sum m_j(m_j + 2) + |lambda|^2 of a label.
long casimir_level(const IrrepLabel& label);

/// Labels (one per complex dual pair, descending to the quotient) whose
/// Casimir eigenvalue is at most bound.
std::vector<IrrepLabel> labels_with_casimir_at_most(const GroupSpec& spec, const Rational& bound);

/// Every label that can contribute an eigenvalue <= cutoff for tensor s.
std::vector<IrrepLabel> enumerate_irreps(const GroupSpec& spec, const SymTensor& s, const Rational& cutoff);

/// Exact merge across labels; numeric clusters (relative tolerance
/// `cluster_tolerance`) only supply the approximate eigenvalues.
SpectrumTable assemble_spectrum(const GroupSpec& spec, const SymTensor& s, const Rational& cutoff,
                                double cluster_tolerance = kDefaultClusterTolerance);

struct Violation {
    double eigenvalue_approx = 0;
    std::string condition;
    std::vector<IrrepLabel> labels;
};

struct VerdictReport {
    bool all_irreducible = true;
    std::vector<Violation> violations;
};

VerdictReport verdict_report(const SpectrumTable& table);

/// Pairwise coprime square-free polynomials with the same set of roots as the
/// inputs; each output records which inputs it divides.
struct CoprimeBasisElement {
    Polynomial poly;
    std::vector<std::size_t> sources;  // ascending indices into the input list
};
std::vector<CoprimeBasisElement> coprime_basis(const std::vector<Polynomial>& squarefree_inputs);

/// Real roots of a square-free polynomial in (lo, hi], ascending, each located
/// by Sturm bisection to within `width`.
std::vector<double> isolate_real_roots(const Polynomial& squarefree, const Rational& lo, const Rational& hi,
                                       const Rational& width);

}  // namespace lielap
