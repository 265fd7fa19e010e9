#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lielap/algebra.hpp"
#include "lielap/polycert.hpp"
#include "lielap/spectrum.hpp"
#include "lielap/witness.hpp"

namespace lielap {

/// Malformed or unreadable input (as opposed to a mathematically invalid one).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// Rationals are strings "p" or "p/q" (decimal strings are read exactly);
/// JSON integers are accepted, JSON floats are rejected.
Rational rational_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);

Json to_json(const Rational& r);
Json to_json(const QMatrix& m);
Json to_json(const IrrepLabel& l);
Json to_json(const GroupSpec& g);
Json to_json(const Certificate& c);
Json to_json(const MultiplicityProfile& p);
Json to_json(const SpectrumTable& t);
Json to_json(const VerdictReport& v);
Json to_json(const WitnessReport& w);
Json to_json(const EvenBWitness& w);
Json to_json(const MixedWitness& w);
Json to_json(const PairsPipelineReport& r);
Json to_json(const DeviceRun& d);

/// {"tensor": M} or {"gram": G} (exactly one); a witness report qualifies
/// through its "tensor" field. Validates the size against `dimension` when positive.
SymTensor tensor_from_json(const Json& j, int dimension = 0);

/// Preset name, or {"k":..,"n":..,"central_generators":[{"signs":[..],"torus_part":[..]}],"name":..}.
GroupSpec group_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Parses inline JSON when `text` starts with '[' or '{', else reads the file.
Json read_json_argument(const std::string& text);

/// Fixed 12-significant-digit rendering used for every floating output.
double round_for_output(double x);

/// eigenvalue_approx,exact_factor,real_multiplicity,contributors,irreducible,violation
std::string spectrum_csv(const SpectrumTable& t);
std::string spectrum_pretty(const SpectrumTable& t);

/// Metadata note on the torus normalization.
std::string torus_convention_note();

}  // namespace lielap
