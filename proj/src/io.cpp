#include "lielap/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lielap {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError("malformed rational \"" + j.get<std::string>() + "\": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<unsigned long long>()));
    throw InputError("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

QMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    QMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw InputError("matrix must be square");
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const IrrepLabel& l) { return l.str(); }

Json to_json(const GroupSpec& g) {
    Json gens = Json::array();
    for (const auto& c : g.central_generators()) {
        Json torus = Json::array();
        for (const auto& t : c.torus_part) torus.push_back(t.str());
        gens.push_back({{"signs", c.signs}, {"torus_part", torus}});
    }
    return {{"name", g.name()}, {"k", g.su2_factors()}, {"n", g.torus_rank()}, {"central_generators", gens}};
}

Json to_json(const Certificate& c) {
    Json labels = Json::array();
    for (const auto& l : c.labels) labels.push_back(l.str());
    return {{"kind", to_string(c.kind)},
            {"labels", labels},
            {"tensor_hash", c.tensor_hash},
            {"value", c.value.str()},
            {"verdict", c.nonzero() ? "nonzero" : "zero"}};
}

Json to_json(const MultiplicityProfile& p) {
    Json out = Json::array();
    for (auto [j, d] : p.classes) out.push_back({j, d});
    return out;
}

double round_for_output(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::stod(buf);
    return r == 0 ? 0.0 : r;  // no negative zero
}

std::string torus_convention_note() {
    return "Torus directions e_i are normalized so that the character with weight lambda differentiates to "
           "i*lambda_i. In the R^n/Z^n parametrization (characters exp(2*pi*i*lambda.x)) the same metric has "
           "torus eigenvalue contributions multiplied by 4*pi^2.";
}

Json to_json(const SpectrumTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json contributors = Json::array();
        for (const auto& c : e.contributors)
            contributors.push_back({{"label", c.label.str()},
                                    {"type", to_string(c.type)},
                                    {"dim", c.dim},
                                    {"multiplicity", c.multiplicity}});
        entries.push_back({{"eigenvalue_approx", round_for_output(e.eigenvalue_approx)},
                           {"exact_factor", e.exact_factor.str()},
                           {"root_index", e.root_index},
                           {"real_multiplicity", e.real_multiplicity},
                           {"contributors", contributors},
                           {"irreducible", e.irreducible},
                           {"violation", e.violation.empty() ? Json(nullptr) : Json(e.violation)}});
    }
    Json labels = Json::array();
    for (const auto& l : t.labels) labels.push_back(l.str());
    return {{"group", to_json(t.spec)},
            {"tensor", to_json(t.tensor.matrix())},
            {"tensor_hash", tensor_hash(t.tensor)},
            {"cutoff", t.cutoff.str()},
            {"lower_bound", t.lower_bound.str()},
            {"labels_enumerated", labels},
            {"convention_note", torus_convention_note()},
            {"entries", entries},
            {"verdict", to_json(verdict_report(t))}};
}

Json to_json(const VerdictReport& v) {
    Json violations = Json::array();
    for (const auto& x : v.violations) {
        Json labels = Json::array();
        for (const auto& l : x.labels) labels.push_back(l.str());
        violations.push_back(
            {{"eigenvalue_approx", round_for_output(x.eigenvalue_approx)}, {"condition", x.condition}, {"labels", labels}});
    }
    return {{"all_irreducible", v.all_irreducible}, {"violations", violations}};
}

Json to_json(const WitnessReport& w) {
    Json certs = Json::array();
    for (const auto& c : w.certificates) certs.push_back(to_json(c));
    Json labels = Json::array();
    for (const auto& l : w.labels) labels.push_back(l.str());
    return {{"group", to_json(w.spec)},
            {"level", w.level},
            {"seed", w.seed},
            {"trials_requested", w.trials_requested},
            {"trials_used", w.trials_used},
            {"success", w.success},
            {"score", w.score},
            {"total", w.total},
            {"tensor", to_json(w.tensor.matrix())},
            {"tensor_hash", tensor_hash(w.tensor)},
            {"labels", labels},
            {"certificates", certs},
            {"scope", "conditions certified for labels with every spin and every |weight| at most the level"}};
}

namespace {
Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}
}  // namespace

Json to_json(const EvenBWitness& w) {
    return {{"m", w.m},
            {"precheck_b_zero", w.precheck_zero},
            {"parity_split", w.parity_split},
            {"diagonal_ok", w.diagonal_ok},
            {"w0_subdiagonal", rationals(w.w0_subdiagonal)},
            {"w1_subdiagonal", rationals(w.w1_subdiagonal)},
            {"subdiagonal_ok", w.subdiagonal_ok},
            {"blocks_disjoint", w.blocks_disjoint},
            {"epsilon", w.epsilon.str()},
            {"scanned", w.scanned},
            {"certificate", w.certificate ? to_json(*w.certificate) : Json(nullptr)},
            {"ok", w.ok()}};
}

Json to_json(const MixedWitness& w) {
    return {{"label", w.label.str()},
            {"y", rationals(w.y)},
            {"tensor", to_json(w.tensor.matrix())},
            {"lambda_y", w.lambda_y.str()},
            {"expected_spectrum", rationals(w.expected)},
            {"spectrum_ok", w.spectrum_ok},
            {"simple", w.simple},
            {"certificate", to_json(w.certificate)},
            {"ok", w.ok()}};
}

Json to_json(const PairsPipelineReport& r) {
    return {{"m", r.m},
            {"m_prime", r.m_prime},
            {"epsilon", r.epsilon.str()},
            {"collision_free", r.collision_free},
            {"sh_is_minus_phi_squared", r.sh_is_phi_squared},
            {"t_involution", r.t_involution},
            {"t_anticommutes_phi", r.t_anticommutes_phi},
            {"t_commutes_psi", r.t_commutes_psi},
            {"t_integer", r.t_integer},
            {"dim_w_plus", r.dim_plus},
            {"dim_w_minus", r.dim_minus},
            {"restrictions_exact", r.restrictions_exact},
            {"sh_spectrum_ok", r.sh_spectrum_ok},
            {"sh_all_double", r.sh_all_double},
            {"d0_simple_on_w_plus", r.d0_simple_plus},
            {"d0_simple_on_w_minus", r.d0_simple_minus},
            {"d1_disjoint", r.d1_disjoint},
            {"alphas_tried", r.alphas_tried.size()},
            {"alpha", r.alpha ? Json(r.alpha->str()) : Json(nullptr)},
            {"profile", r.profile ? to_json(*r.profile) : Json(nullptr)},
            {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)},
            {"ok", r.ok()}};
}

Json to_json(const DeviceRun& d) {
    return {{"device", d.device}, {"parameters", d.parameters}, {"ok", d.ok}, {"detail", d.detail}};
}

SymTensor tensor_from_json(const Json& j, int dimension) {
    if (!j.is_object()) throw InputError("tensor file must be a JSON object with \"tensor\" or \"gram\"");
    const bool has_t = j.contains("tensor"), has_g = j.contains("gram");
    if (has_t == has_g) throw InputError("tensor file needs exactly one of \"tensor\" and \"gram\"");
    QMatrix m = matrix_from_json(has_t ? j.at("tensor") : j.at("gram"));
    if (dimension > 0 && m.rows() != dimension)
        throw InputError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.rows()) +
                         " but the group has dimension " + std::to_string(dimension));
    try {
        if (has_t) return SymTensor(std::move(m));
        return metric_to_tensor(MetricSpec(std::move(m)));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());  // not symmetric
    }
}

GroupSpec group_from_json(const Json& j) {
    try {
        if (j.is_string()) return group_preset(j.get<std::string>());
        if (!j.is_object()) throw InputError("group must be a preset name or an object");
        std::vector<CentralElement> gens;
        if (j.contains("central_generators"))
            for (const auto& g : j.at("central_generators")) {
                CentralElement c;
                if (g.contains("signs")) c.signs = g.at("signs").get<std::vector<int>>();
                if (g.contains("torus_part"))
                    for (const auto& t : g.at("torus_part")) c.torus_part.push_back(rational_from_json(t));
                gens.push_back(std::move(c));
            }
        return build_group_spec(j.value("k", 0), j.value("n", 0), std::move(gens), j.value("name", "custom"));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed group: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid group: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

Json read_json_argument(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("invalid inline JSON: ") + e.what());
        }
    }
    return read_json_file(text);
}

namespace {
std::string contributor_text(const SpectrumEntry& e) {
    std::string out;
    for (std::size_t i = 0; i < e.contributors.size(); ++i) {
        const auto& c = e.contributors[i];
        out += (i ? " " : "") + c.label.str() + "^" + std::to_string(c.multiplicity);
    }
    return out;
}
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}
}  // namespace

std::string spectrum_csv(const SpectrumTable& t) {
    std::ostringstream os;
    os << "eigenvalue_approx,exact_factor,real_multiplicity,contributors,irreducible,violation\n";
    for (const auto& e : t.entries) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", round_for_output(e.eigenvalue_approx));
        os << buf << ',' << csv_field(e.exact_factor.str()) << ',' << e.real_multiplicity << ','
           << csv_field(contributor_text(e)) << ',' << (e.irreducible ? "true" : "false") << ',' << e.violation << '\n';
    }
    return os.str();
}

std::string spectrum_pretty(const SpectrumTable& t) {
    std::ostringstream os;
    os << "group " << t.spec.name() << ", cutoff " << t.cutoff.str() << ", " << t.labels.size()
       << " labels enumerated\n";
    os << std::left << std::setw(18) << "eigenvalue" << std::setw(8) << "mult" << std::setw(14) << "verdict"
       << "contributors (label^multiplicity)\n";
    for (const auto& e : t.entries) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", round_for_output(e.eigenvalue_approx));
        os << std::setw(18) << buf << std::setw(8) << e.real_multiplicity << std::setw(14)
           << (e.irreducible ? "irreducible" : "reducible(" + e.violation + ")") << contributor_text(e) << '\n';
    }
    const auto v = verdict_report(t);
    os << "all eigenspaces irreducible: " << (v.all_irreducible ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace lielap
