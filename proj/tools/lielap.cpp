// lielap: spectra, certificates and witness metrics for SU(2)^k x T^n.
//
// Exit codes: 0 ok, 1 a check or verdict failed, 2 usage or input error,
// 3 mathematically invalid input (indefinite tensor, non-descending label).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lielap/io.hpp"
#include "lielap/operator.hpp"
#include "lielap/spectrum.hpp"
#include "lielap/witness.hpp"
#include "checks.hpp"

using namespace lielap;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3 };

/// Reads --config files as JSON; nested objects address subcommands.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        Json j;
        try {
            input >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
        return items(j, "", {});
    }

private:
    static CLI::ConfigItem marker(const std::string& name, const std::vector<std::string>& parents) {
        CLI::ConfigItem item;
        item.name = name;
        item.parents = parents;
        return item;
    }

    static std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

    std::vector<CLI::ConfigItem> items(const Json& j, const std::string& name,
                                       const std::vector<std::string>& prefix) const {
        std::vector<CLI::ConfigItem> out;
        if (j.is_object()) {
            auto next = prefix;
            if (!name.empty()) next.push_back(name);
            // "++" / "--" open and close a section, which lets it select a subcommand
            if (!name.empty()) out.push_back(marker("++", next));
            for (auto it = j.begin(); it != j.end(); ++it) {
                auto sub = items(it.value(), it.key(), next);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            if (!name.empty()) out.push_back(marker("--", next));
            return out;
        }
        CLI::ConfigItem item;
        item.name = name;
        item.parents = prefix;
        if (j.is_array() && !j.empty() && j.front().is_array()) {
            item.inputs = {j.dump()};  // an inline matrix stays one argument
        } else if (j.is_array()) {
            for (const auto& v : j) item.inputs.push_back(scalar(v));
        } else if (j.is_boolean()) {
            item.inputs = {j.get<bool>() ? "true" : "false"};
        } else {
            item.inputs = {scalar(j)};
        }
        out.push_back(std::move(item));
        return out;
    }
};

struct GroupArgs {
    std::string group;
    std::string group_file;
};

struct TensorArgs {
    std::string tensor;
    std::string gram;
};

struct OutputArgs {
    std::string output;
    std::string format = "json";
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
    auto* a = cmd->add_option("--group", g.group, "Preset: su2, so3, u2, so4, spin4, su2xsu2, t<n>, su2^3xt2, ...");
    auto* b = cmd->add_option("--group-file", g.group_file, "JSON group description {k, n, central_generators}");
    a->excludes(b);
}

void add_tensor_options(CLI::App* cmd, TensorArgs& t) {
    auto* a = cmd->add_option("--tensor", t.tensor,
                              "Tensor S: 'identity', inline JSON matrix, or a JSON file ({\"tensor\": ...} or a witness report)");
    auto* b = cmd->add_option("--gram", t.gram, "Metric Gram matrix G (S = G^-1): inline JSON matrix or a JSON file");
    a->excludes(b);
}

void add_output_options(CLI::App* cmd, OutputArgs& o, const std::vector<std::string>& formats) {
    cmd->add_option("-o,--output", o.output, "Write to this file instead of stdout");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
}

std::optional<Json> file_group;  // group carried by a tensor file (witness reports)

GroupSpec resolve_group(const GroupArgs& g) {
    if (!g.group.empty()) return group_from_json(Json(g.group));
    if (!g.group_file.empty()) return group_from_json(read_json_file(g.group_file));
    if (file_group) return group_from_json(*file_group);
    throw InputError("one of --group or --group-file is required");
}

Json load_tensor_json(const TensorArgs& t) {
    if (t.tensor.empty() && t.gram.empty()) throw InputError("one of --tensor or --gram is required");
    const bool is_tensor = !t.tensor.empty();
    const std::string& arg = is_tensor ? t.tensor : t.gram;
    if (is_tensor && arg == "identity") return Json{{"identity", true}};
    Json j = read_json_argument(arg);
    if (j.is_array()) return Json{{is_tensor ? "tensor" : "gram", j}};
    if (j.is_object() && j.contains("group") && !j.contains("gram") && !j.contains("tensor"))
        throw InputError(arg + " has no \"tensor\" or \"gram\" field");
    if (j.is_object() && j.contains("group")) file_group = j.at("group");
    return j;
}

SymTensor resolve_tensor(const Json& j, const GroupSpec& spec) {
    if (j.contains("identity")) return SymTensor::identity(spec.dimension());
    if (j.contains("tensor") && j.contains("gram")) throw InputError("give exactly one of \"tensor\" and \"gram\"");
    return tensor_from_json(j.contains("tensor") ? Json{{"tensor", j.at("tensor")}} : Json{{"gram", j.at("gram")}},
                            spec.dimension());
}

void emit(const OutputArgs& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw InputError("cannot write " + o.output);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_spectrum(const GroupArgs& g, const TensorArgs& t, const std::string& max_eig, double tolerance,
                 const OutputArgs& o) {
    const Json tj = load_tensor_json(t);
    const GroupSpec spec = resolve_group(g);
    const SymTensor s = resolve_tensor(tj, spec);
    Rational cutoff;
    try {
        cutoff = Rational::parse(max_eig);
    } catch (const std::exception&) {
        throw InputError("--max-eig must be a rational, got " + max_eig);
    }
    if (cutoff.sign() <= 0) throw InputError("--max-eig must be positive");
    if (!(tolerance > 0)) throw InputError("--tolerance must be positive");
    const SpectrumTable table = assemble_spectrum(spec, s, cutoff, tolerance);
    if (o.format == "csv")
        emit(o, spectrum_csv(table));
    else if (o.format == "pretty")
        emit(o, spectrum_pretty(table));
    else
        emit(o, dump(to_json(table)));
    return kOk;
}

int cmd_certify(const GroupArgs& g, const TensorArgs& t, int level, const std::vector<std::string>& label_args,
                const OutputArgs& o) {
    const Json tj = load_tensor_json(t);
    const GroupSpec spec = resolve_group(g);
    const SymTensor s = resolve_tensor(tj, spec);
    if (!is_positive_definite(s)) throw std::domain_error("tensor is not positive definite");
    if (level < 0) throw InputError("--level must be non-negative");

    std::vector<Certificate> certs;
    std::vector<IrrepLabel> labels;
    if (label_args.empty()) {
        labels = labels_up_to_level(spec, level);
        certs = certify_all(spec, s, level);
    } else {
        for (const auto& text : label_args) {
            IrrepLabel l = IrrepLabel::parse(text);
            if (!descends_to_quotient(l, spec))
                throw std::domain_error("label " + l.str() + " does not descend to " + spec.name());
            labels.push_back(std::move(l));
        }
        for (const auto& l : labels)
            certs.push_back(classify_type(l) == RepType::quaternionic ? cert_c(l, s, spec) : cert_b(l, s, spec));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (!(labels[j] == labels[i]) && !(labels[j] == dual_label(labels[i])))
                    certs.push_back(cert_a(labels[i], labels[j], s, spec));
    }
    bool verdict = true;
    Json all = Json::array(), failed = Json::array();
    for (const auto& c : certs) {
        all.push_back(to_json(c));
        if (!c.nonzero()) {
            verdict = false;
            failed.push_back(to_json(c));
        }
    }
    Json ls = Json::array();
    for (const auto& l : labels) ls.push_back(l.str());
    const Json out = {{"group", to_json(spec)},
                      {"level", label_args.empty() ? Json(level) : Json(nullptr)},
                      {"labels", ls},
                      {"tensor", to_json(s.matrix())},
                      {"tensor_hash", tensor_hash(s)},
                      {"certificates", all},
                      {"failed", failed},
                      {"verdict", verdict}};
    if (o.format == "pretty") {
        std::ostringstream os;
        os << "group " << spec.name() << ", " << labels.size() << " labels, " << certs.size() << " certificates\n";
        for (const auto& c : certs)
            if (!c.nonzero()) {
                os << "zero: " << to_string(c.kind) << " on";
                for (const auto& l : c.labels) os << " (" << l.str() << ")";
                os << "\n";
            }
        os << "verdict: " << (verdict ? "true" : "false") << "\n";
        emit(o, os.str());
    } else {
        emit(o, dump(out));
    }
    return verdict ? kOk : kFailed;
}

int cmd_witness(const GroupArgs& g, int level, int trials, std::uint64_t seed, bool devices, const OutputArgs& o) {
    const GroupSpec spec = resolve_group(g);
    if (level < 0) throw InputError("--level must be non-negative");
    if (trials < 1) throw InputError("--trials must be at least 1");
    const WitnessReport report = witness_search(spec, level, trials, seed);
    Json out = to_json(report);
    bool devices_ok = true;
    if (devices) {
        Json runs = Json::array();
        for (const auto& d : run_proof_devices(spec, level)) {
            devices_ok = devices_ok && d.ok;
            runs.push_back(to_json(d));
        }
        out["proof_devices"] = runs;
    }
    if (o.format == "pretty") {
        std::ostringstream os;
        os << "group " << spec.name() << ", level " << level << ", seed " << seed << "\n"
           << "success: " << (report.success ? "true" : "false") << " after " << report.trials_used << " trial(s), "
           << report.score << "/" << report.total << " certificates nonzero\n";
        if (devices)
            for (const auto& d : out["proof_devices"])
                os << d["device"].get<std::string>() << " " << d["parameters"].get<std::string>() << ": "
                   << (d["ok"].get<bool>() ? "ok" : "FAILED") << " (" << d["detail"].get<std::string>() << ")\n";
        emit(o, os.str());
    } else {
        emit(o, dump(out));
    }
    return report.success && devices_ok ? kOk : kFailed;
}

int cmd_verify(const std::vector<std::string>& names, const checks::Params& params, const OutputArgs& o) {
    const auto& selected = names.empty() ? checks::names() : names;
    for (const auto& n : selected)
        if (std::find(checks::names().begin(), checks::names().end(), n) == checks::names().end())
            throw InputError("unknown check: " + n);
    bool pass = true;
    Json results = Json::array();
    std::ostringstream pretty;
    for (const auto& n : selected) {
        const auto r = checks::run(n, params);
        pass = pass && r.pass;
        results.push_back({{"check", r.name}, {"pass", r.pass}, {"details", r.details}});
        pretty << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
    }
    emit(o, o.format == "pretty" ? pretty.str() : dump({{"checks", results}, {"pass", pass}}));
    return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplace spectra and irreducibility certificates for left-invariant metrics on SU(2)^k x T^n"};
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file mirroring the command-line flags, e.g. {\"spectrum\": {\"group\": \"su2\"}}");
    app.require_subcommand(0, 1);

    GroupArgs sg, cg, wg;
    TensorArgs st, ct;
    OutputArgs so, co, wo, vo;

    auto* spectrum = app.add_subcommand("spectrum", "Laplace spectrum below a cutoff with irreducibility verdicts");
    spectrum->configurable();
    add_group_options(spectrum, sg);
    add_tensor_options(spectrum, st);
    std::string max_eig;
    double tolerance = kDefaultClusterTolerance;
    spectrum->add_option("--max-eig", max_eig, "Eigenvalue cutoff (rational, > 0)")->required();
    spectrum->add_option("--tolerance", tolerance, "Relative clustering tolerance of the numeric cross-check");
    add_output_options(spectrum, so, {"json", "csv", "pretty"});

    auto* certify = app.add_subcommand("certify", "Certificates a/b/c for a tensor up to a level");
    certify->configurable();
    add_group_options(certify, cg);
    add_tensor_options(certify, ct);
    int certify_level = 4;
    std::vector<std::string> certify_labels;
    certify->add_option("--level", certify_level, "Largest spin and |weight| certified");
    certify->add_option("--label", certify_labels, "Certify only these labels \"m1,m2;l1\" (repeatable)");
    add_output_options(certify, co, {"json", "pretty"});

    auto* witness = app.add_subcommand("witness", "Search for a tensor certifying all conditions up to a level");
    witness->configurable();
    add_group_options(witness, wg);
    int witness_level = 4, trials = 50;
    std::uint64_t seed = 0;
    bool no_devices = false;
    witness->add_option("--level", witness_level, "Largest spin and |weight| certified");
    witness->add_option("--trials", trials, "Maximum number of random tensors");
    witness->add_option("--seed", seed, "RNG seed");
    witness->add_flag("--no-devices", no_devices, "Skip the structural constructions");
    add_output_options(witness, wo, {"json", "pretty"});

    auto* verify = app.add_subcommand("verify-paper", "Named exact checks of the structural identities");
    verify->configurable();
    std::vector<std::string> check_names;
    checks::Params params;
    int m = -1, mprime = -1, max_m = -1;
    long lambda = 0;
    std::string epsilon;
    verify->add_option("--check", check_names, "casimir, eigH, quaternionic-double, tridiag, pairs-i, pairs-ii, torus, types (default: all)");
    verify->add_option("--m", m, "Spin m");
    verify->add_option("--mprime", mprime, "Second spin m'");
    verify->add_option("--max-m", max_m, "Largest spin for sweeps");
    verify->add_option("--lambda", lambda, "Torus weight");
    verify->add_option("--epsilon", epsilon, "Rational epsilon for pairs-ii");
    add_output_options(verify, vo, {"json", "pretty"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*spectrum) return cmd_spectrum(sg, st, max_eig, tolerance, so);
        if (*certify) return cmd_certify(cg, ct, certify_level, certify_labels, co);
        if (*witness) return cmd_witness(wg, witness_level, trials, seed, !no_devices, wo);
        if (*verify) {
            if (m >= 0) params.m = m;
            if (mprime >= 0) params.m_prime = mprime;
            if (max_m >= 0) params.max_m = max_m;
            if (verify->count("--lambda")) params.lambda = lambda;
            if (!epsilon.empty()) params.epsilon = Rational::parse(epsilon);
            return cmd_verify(check_names, params, vo);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    std::cerr << "a subcommand is required (spectrum, certify, witness, verify-paper)\n" << app.help();
    return kUsage;
}
