#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lielap/algebra.hpp"
#include "lielap/irreps.hpp"
#include "lielap/polycert.hpp"

namespace lielap {

enum class SeparationMode { simple, pairs };

/// Smallest-but-safe eps so that {mu_i + eps nu_j} has the multiplicities of
/// the pure tensor product: half the least positive (mu_i - mu_k)/(nu_l - nu_j),
/// or 1 if there is none. mu and nu list eigenvalues with repetition.
/// `simple` needs both lists simple; `pairs` needs mu simple and every value
/// of nu exactly twice. Throws std::invalid_argument otherwise.
Rational epsilon_separation(const std::vector<Rational>& mu, const std::vector<Rational>& nu, SeparationMode mode);

struct EvenBWitness {
    int m = 0;
    bool precheck_zero = false;     // b(H^2) = 0
    bool parity_split = false;      // -rho(A)^2 preserves even/odd monomials
    bool diagonal_ok = false;       // d_l = (m-l)(l+1) + l(m-l+1)
    std::vector<Rational> w0_subdiagonal;
    std::vector<Rational> w1_subdiagonal;
    bool subdiagonal_ok = false;    // expected values, all nonzero
    bool blocks_disjoint = false;   // D(H^2) on W0 and on W1 share no eigenvalue
    Rational epsilon;
    int scanned = 0;
    std::optional<Certificate> certificate;  // b(H^2 + eps A^2) != 0

    [[nodiscard]] bool ok() const {
        return precheck_zero && parity_split && diagonal_ok && subdiagonal_ok && blocks_disjoint &&
               certificate.has_value() && certificate->nonzero();
    }
};

/// Even m >= 2: checks the tridiagonal structure and scans eps over 1/p for
/// the first 50 primes p.
EvenBWitness su2_even_b_witness(int m);

struct MixedWitness {
    IrrepLabel label;
    std::vector<Rational> y;
    SymTensor tensor = SymTensor::zero(1);
    Rational lambda_y;
    std::vector<Rational> expected;  // k lambda(Y), k = m, m-2, ..., -m
    bool spectrum_ok = false;        // exact char poly equals prod (k lambda(Y) - X)
    bool simple = false;
    Certificate certificate;

    [[nodiscard]] bool ok() const { return spectrum_ok && simple && certificate.nonzero(); }
};

/// SU(2) x T^n with label (m; lambda), tensor (H,0).(0,Y). Requires m odd and lambda(Y) != 0.
MixedWitness pairs_mixed_witness(int m, const std::vector<long>& lambda, const std::vector<Rational>& y);

struct PairsPipelineReport {
    int m = 0;
    int m_prime = 0;
    Rational epsilon;
    bool collision_free = false;      // all +-k +- eps k' distinct
    bool sh_is_phi_squared = false;   // D(s_H) = -phi^2
    bool t_involution = false;        // T^2 = Id
    bool t_anticommutes_phi = false;  // T phi + phi T = 0
    bool t_commutes_psi = false;      // T psi = psi T
    bool t_integer = false;           // T has integer entries, so preserves the real span
    long dim_plus = 0;
    long dim_minus = 0;
    bool restrictions_exact = false;  // D W = W R for both splittings
    bool sh_spectrum_ok = false;      // char poly of D(s_H) = prod ((k + eps k')^2 - X)
    bool sh_all_double = false;
    bool d0_simple_plus = false;
    bool d0_simple_minus = false;
    bool d1_disjoint = false;         // res(D_1|W+, D_1|W-) != 0
    std::vector<Rational> alphas_tried;
    std::optional<Rational> alpha;
    std::optional<MultiplicityProfile> profile;  // of D_alpha on the whole space
    std::optional<Certificate> certificate;

    [[nodiscard]] bool structure_ok() const {
        return collision_free && sh_is_phi_squared && t_involution && t_anticommutes_phi && t_commutes_psi &&
               t_integer && restrictions_exact && sh_spectrum_ok && sh_all_double && d0_simple_plus &&
               d0_simple_minus && d1_disjoint;
    }
    [[nodiscard]] bool ok() const {
        return structure_ok() && certificate.has_value() && certificate->nonzero() && profile &&
               profile->all_simple();
    }
};

/// {j/64 : 1 <= j <= 63}
std::vector<Rational> default_alpha_grid();
/// 1/(2 m')
Rational default_pairs_epsilon(int m_prime);

/// Odd m, m'. Throws std::invalid_argument on bad spins, eps outside
/// (0, 1/m') or a collision among +-k +- eps k'. An exhausted grid leaves
/// `alpha` empty.
PairsPipelineReport pairs_pipeline(int m, int m_prime, const Rational& epsilon, const std::vector<Rational>& alpha_grid);

struct WitnessReport {
    GroupSpec spec;
    int level = 0;
    std::uint64_t seed = 0;
    int trials_requested = 0;
    int trials_used = 0;
    bool success = false;
    SymTensor tensor;                        // the certified tensor, or the best partial one
    std::vector<IrrepLabel> labels;
    std::vector<Certificate> certificates;   // in label order: b/c per label, then a per pair
    int score = 0;                           // nonzero certificates of `tensor`
    int total = 0;
};

/// Candidate tensor I + Q/(range*N + 1), Q symmetric with entries in
/// [-range, range]; strictly diagonally dominant, so positive definite.
SymTensor random_definite_tensor(int n, std::mt19937_64& rng, long long range);
/// Entry range for trial t: 3 * 4^t (capped near 2^40). Small denominators
/// first; wider ranges escape coincidences that lattice-like spectra force
/// on coarse tensors.
long long trial_range(int trial);

/// All certificates required up to `level` (see labels_up_to_level): b for
/// real/complex labels, c for quaternionic ones, a for every pair.
std::vector<Certificate> certify_all(const GroupSpec& spec, const SymTensor& s, int level);

WitnessReport witness_search(const GroupSpec& spec, int level, int trials, std::uint64_t seed);

/// Result of one structural construction (even-b witness, pairs pipeline,
/// mixed witness) applicable to a group up to a level.
struct DeviceRun {
    std::string device;
    std::string parameters;
    bool ok = false;
    std::string detail;
};
std::vector<DeviceRun> run_proof_devices(const GroupSpec& spec, int level);

}  // namespace lielap
