// Command line front end: verify relations, apply operators to spinor
// polynomials, print matrices on graded components, report group facts.
// Exit codes: 0 pass, 1 verification failure or ungraded input, 2 usage.

#include "CLI11.hpp"
#include "json.hpp"

#include "dunkl/catalogue.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/group.hpp"
#include "dunkl/matrixrep.hpp"
#include "dunkl/parser.hpp"
#include "dunkl/relations.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct RunConfig {
    std::string group = "g2";
    std::string epsilon = "+1";
    int max_degree = 4;
    std::string kappa1;
    std::string kappa2;
    std::string format = "text";
    int jobs = 0;
    unsigned seed = 0;
};

dunkl::Signature signature_of(const RunConfig& cfg) {
    return dunkl::Signature{cfg.epsilon == "-1" ? -1 : +1};
}

int jobs_of(const RunConfig& cfg) {
    if (cfg.jobs > 0) return cfg.jobs;
    unsigned n = std::thread::hardware_concurrency();
    return n > 0 ? static_cast<int>(n) : 1;
}

std::optional<std::pair<dunkl::Rational, dunkl::Rational>> kappa_of(const RunConfig& cfg) {
    if (cfg.kappa1.empty() && cfg.kappa2.empty()) return std::nullopt;
    if (cfg.kappa1.empty() || cfg.kappa2.empty())
        throw std::invalid_argument("kappa1 and kappa2 must be given together");
    return std::make_pair(dunkl::Rational::parse(cfg.kappa1), dunkl::Rational::parse(cfg.kappa2));
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string kappa_text(const std::optional<std::pair<dunkl::Rational, dunkl::Rational>>& kappa) {
    if (!kappa) return "symbolic";
    return "kappa1=" + kappa->first.str() + " kappa2=" + kappa->second.str();
}

json report_json(const dunkl::CheckReport& r) {
    json j{{"relation", r.relation}, {"check", r.check},       {"statement", r.statement},
           {"citation", r.citation}, {"verdict", r.pass ? "pass" : "fail"},
           {"candidate", r.candidate}, {"degree", r.max_degree}, {"basis", r.basis_size}};
    j["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
    return j;
}

std::string report_line(const dunkl::CheckReport& r) {
    std::ostringstream os;
    os << r.relation << "  " << r.check << (r.pass ? "  pass" : "  FAIL") << "  degree "
       << r.max_degree << "  basis " << r.basis_size << "  " << r.statement;
    if (!r.candidate.empty()) os << "  [holds: " << r.candidate << "]";
    if (r.witness) os << "\n    witness " << r.witness->str();
    return os.str();
}

std::string report_csv(const dunkl::CheckReport& r) {
    std::ostringstream os;
    os << csv_quote(r.relation) << ',' << csv_quote(r.check) << ','
       << (r.pass ? "pass" : "fail") << ',' << r.max_degree << ',' << r.basis_size << ','
       << csv_quote(r.candidate) << ',' << csv_quote(r.statement) << ','
       << csv_quote(r.witness ? r.witness->str() : "");
    return os.str();
}

int run_verify(const RunConfig& cfg, const std::string& expr_text, const std::string& relation) {
    dunkl::Signature sig = signature_of(cfg);
    dunkl::Catalogue cat(dunkl::preset_by_name(cfg.group), sig);
    auto kappa = kappa_of(cfg);
    std::ostringstream out;
    bool pass = false;

    if (!expr_text.empty() && relation.empty()) {
        dunkl::OpPtr op = dunkl::resolve_operator(dunkl::parse(expr_text), cat);
        if (kappa) op = dunkl::instantiate_params(op, kappa->first, kappa->second);
        std::string statement = dunkl::render(dunkl::parse(expr_text)) + " = 0";
        dunkl::CheckResult res =
            dunkl::equal_up_to_degree(op, dunkl::op_zero(), cfg.max_degree, sig, jobs_of(cfg));
        pass = res.pass;
        if (cfg.format == "json") {
            json j{{"check", "expr"},          {"statement", statement},
                   {"verdict", pass ? "pass" : "fail"}, {"degree", res.max_degree},
                   {"basis", res.basis_size},  {"preset", cfg.group},
                   {"epsilon", sig.epsilon},   {"kappa", kappa_text(kappa)}};
            j["witness"] = res.witness ? json(res.witness->str()) : json(nullptr);
            out << j.dump() << '\n';
        } else if (cfg.format == "csv") {
            out << "check,verdict,degree,basis,statement,witness\n";
            out << "expr," << (pass ? "pass" : "fail") << ',' << res.max_degree << ','
                << res.basis_size << ',' << csv_quote(statement) << ','
                << csv_quote(res.witness ? res.witness->str() : "") << '\n';
        } else {
            out << "expr" << (pass ? "  pass" : "  FAIL") << "  degree " << res.max_degree
                << "  basis " << res.basis_size << "  " << statement;
            if (res.witness) out << "\n    witness " << res.witness->str();
            out << '\n';
        }
    } else {
        dunkl::VerifyOptions opts;
        opts.max_degree = cfg.max_degree;
        opts.jobs = jobs_of(cfg);
        opts.kappa = kappa;
        if (!relation.empty()) opts.only_relation = relation;
        std::vector<dunkl::CheckReport> reports = dunkl::verify_relations(cat, opts);
        pass = dunkl::all_pass(reports);
        std::size_t failures = 0;
        for (const auto& r : reports)
            if (!r.pass) ++failures;
        if (cfg.format == "json") {
            for (const auto& r : reports) out << report_json(r).dump() << '\n';
            json summary{{"checks", reports.size()},
                         {"failures", failures},
                         {"verdict", pass ? "pass" : "fail"},
                         {"preset", cfg.group},
                         {"epsilon", sig.epsilon},
                         {"degree", cfg.max_degree},
                         {"kappa", kappa_text(kappa)}};
            out << summary.dump() << '\n';
        } else if (cfg.format == "csv") {
            out << "relation,check,verdict,degree,basis,candidate,statement,witness\n";
            for (const auto& r : reports) out << report_csv(r) << '\n';
        } else {
            out << "preset " << cfg.group << "  epsilon " << (sig.epsilon > 0 ? "+1" : "-1")
                << "  max degree " << cfg.max_degree << "  kappa " << kappa_text(kappa) << '\n';
            for (const auto& r : reports) out << report_line(r) << '\n';
            out << "checks " << reports.size() << "  failures " << failures << "  "
                << (pass ? "pass" : "FAIL") << '\n';
        }
    }
    std::cout << out.str();
    return pass ? exit_pass : exit_fail;
}

int run_apply(const RunConfig& cfg, const std::string& expr_text, const std::string& input_text) {
    dunkl::Signature sig = signature_of(cfg);
    dunkl::Catalogue cat(dunkl::preset_by_name(cfg.group), sig);
    auto kappa = kappa_of(cfg);
    dunkl::OpPtr op = dunkl::resolve_operator(dunkl::parse(expr_text), cat);
    dunkl::SpinorPolynomial v = dunkl::evaluate_spinor(dunkl::parse(input_text), sig);
    dunkl::SpinorPolynomial result = dunkl::apply(op, v, sig);
    if (kappa) result = result.instantiate(kappa->first, kappa->second);

    std::ostringstream out;
    if (cfg.format == "json") {
        json j{{"expr", dunkl::render(dunkl::parse(expr_text))},
               {"input", dunkl::render(dunkl::parse(input_text))},
               {"preset", cfg.group},
               {"epsilon", sig.epsilon},
               {"result", result.str()}};
        json comps = json::array();
        for (dunkl::Blade b = 0; b < 8; ++b) {
            if (result.component(b).is_zero()) continue;
            comps.push_back(json{{"blade", dunkl::blade_str(b)}, {"poly", result.component(b).str()}});
        }
        j["components"] = comps;
        out << j.dump() << '\n';
    } else if (cfg.format == "csv") {
        out << "blade,polynomial\n";
        for (dunkl::Blade b = 0; b < 8; ++b) {
            if (result.component(b).is_zero()) continue;
            out << dunkl::blade_str(b) << ',' << csv_quote(result.component(b).str()) << '\n';
        }
    } else {
        out << result.str() << '\n';
    }
    std::cout << out.str();
    return exit_pass;
}

int run_matrix(const RunConfig& cfg, const std::string& expr_text, int degree, bool want_charpoly) {
    dunkl::Signature sig = signature_of(cfg);
    dunkl::Catalogue cat(dunkl::preset_by_name(cfg.group), sig);
    auto kappa = kappa_of(cfg);
    dunkl::OpPtr op = dunkl::resolve_operator(dunkl::parse(expr_text), cat);
    dunkl::GradedBasis basis(degree);
    if (want_charpoly && !kappa)
        throw std::invalid_argument("charpoly requires numeric kappa1 and kappa2");

    std::ostringstream out;
    std::vector<std::string> labels;
    labels.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(basis.label(i));

    if (kappa) {
        dunkl::RadicalMatrix m =
            dunkl::matrix_of(op, basis, sig, kappa->first, kappa->second, jobs_of(cfg));
        if (want_charpoly) {
            std::vector<dunkl::RadicalComplex> cp = dunkl::charpoly(m);
            if (cfg.format == "json") {
                json coeffs = json::array();
                for (const auto& c : cp) coeffs.push_back(c.str());
                json j{{"expr", dunkl::render(dunkl::parse(expr_text))},
                       {"degree", degree},
                       {"dim", m.dim()},
                       {"charpoly", dunkl::charpoly_str(cp)},
                       {"coefficients", coeffs}};
                out << j.dump() << '\n';
            } else if (cfg.format == "csv") {
                for (std::size_t k = 0; k < cp.size(); ++k)
                    out << csv_quote(cp[k].str()) << (k + 1 < cp.size() ? "," : "");
                out << '\n';
            } else {
                out << dunkl::charpoly_str(cp) << '\n';
            }
        } else if (cfg.format == "json") {
            json rows = json::array();
            for (std::size_t i = 0; i < m.dim(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
                rows.push_back(row);
            }
            json j{{"expr", dunkl::render(dunkl::parse(expr_text))},
                   {"degree", degree},
                   {"dim", m.dim()},
                   {"labels", labels},
                   {"rows", rows}};
            out << j.dump() << '\n';
        } else if (cfg.format == "csv") {
            out << dunkl::to_csv(m);
        } else {
            out << "degree " << degree << "  dim " << m.dim() << '\n';
            out << "basis";
            for (const auto& l : labels) out << ' ' << l;
            out << '\n' << dunkl::to_csv(m);
        }
    } else {
        dunkl::ParamMatrix m = dunkl::matrix_of(op, basis, sig, jobs_of(cfg));
        if (cfg.format == "json") {
            json rows = json::array();
            for (std::size_t i = 0; i < m.dim(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
                rows.push_back(row);
            }
            json j{{"expr", dunkl::render(dunkl::parse(expr_text))},
                   {"degree", degree},
                   {"dim", m.dim()},
                   {"labels", labels},
                   {"rows", rows}};
            out << j.dump() << '\n';
        } else if (cfg.format == "csv") {
            out << dunkl::to_csv(m);
        } else {
            out << "degree " << degree << "  dim " << m.dim() << '\n';
            out << "basis";
            for (const auto& l : labels) out << ' ' << l;
            out << '\n' << dunkl::to_csv(m);
        }
    }
    std::cout << out.str();
    return exit_pass;
}

std::string word_str(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) s += '*';
        s += 's' + std::to_string(word[i] + 1);
    }
    return s;
}

std::string root_str(const dunkl::Root& r) {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i > 0) s += ", ";
        s += r.v[static_cast<std::size_t>(i)].str();
    }
    s += ")";
    return s;
}

int run_groupinfo(const RunConfig& cfg) {
    dunkl::Signature sig = signature_of(cfg);
    dunkl::RootSystemPreset preset = dunkl::preset_by_name(cfg.group);
    std::vector<dunkl::GroupElement> group = dunkl::generate_group(preset.reflections);
    std::vector<dunkl::PinElement> lifts;
    lifts.reserve(preset.positive_roots.size());
    for (const auto& r : preset.positive_roots) lifts.push_back(dunkl::tilde_lift(r));
    std::vector<dunkl::PinElement> cover = dunkl::generate_pin(lifts, sig);
    std::vector<int> orbits = dunkl::root_orbits(preset);

    std::ostringstream out;
    if (cfg.format == "json") {
        json roots = json::array();
        for (std::size_t k = 0; k < preset.positive_roots.size(); ++k) {
            const dunkl::Root& r = preset.positive_roots[k];
            json coords = json::array();
            for (int i = 0; i < 3; ++i) coords.push_back(r.v[static_cast<std::size_t>(i)].str());
            roots.push_back(json{{"coords", coords},
                                 {"orbit", orbits[k]},
                                 {"weight", r.weight_class == 0 ? "kappa1" : "kappa2"}});
        }
        json elements = json::array();
        for (const auto& g : group) elements.push_back(word_str(g.word));
        json j{{"preset", preset.name},
               {"epsilon", sig.epsilon},
               {"order", group.size()},
               {"double_cover_order", cover.size()},
               {"roots", roots},
               {"elements", elements}};
        out << j.dump() << '\n';
    } else if (cfg.format == "csv") {
        out << "kind,index,value\n";
        out << "preset,," << preset.name << '\n';
        out << "epsilon,," << sig.epsilon << '\n';
        out << "order,," << group.size() << '\n';
        out << "double_cover_order,," << cover.size() << '\n';
        for (std::size_t k = 0; k < preset.positive_roots.size(); ++k) {
            const dunkl::Root& r = preset.positive_roots[k];
            out << "root," << k + 1 << ','
                << csv_quote(root_str(r) + " orbit " + std::to_string(orbits[k]) + " weight " +
                             (r.weight_class == 0 ? "kappa1" : "kappa2"))
                << '\n';
        }
        for (std::size_t k = 0; k < group.size(); ++k)
            out << "element," << k + 1 << ',' << word_str(group[k].word) << '\n';
    } else {
        out << "preset " << preset.name << '\n';
        out << "epsilon " << (sig.epsilon > 0 ? "+1" : "-1") << '\n';
        out << "order " << group.size() << '\n';
        out << "double cover order " << cover.size() << '\n';
        out << "positive roots " << preset.positive_roots.size() << '\n';
        for (std::size_t k = 0; k < preset.positive_roots.size(); ++k) {
            const dunkl::Root& r = preset.positive_roots[k];
            out << "root " << k + 1 << ": " << root_str(r) << "  orbit " << orbits[k]
                << "  weight " << (r.weight_class == 0 ? "kappa1" : "kappa2") << '\n';
        }
        out << "elements:" << '\n';
        for (const auto& g : group) out << "  " << word_str(g.word) << '\n';
    }
    std::cout << out.str();
    return exit_pass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for Dunkl operator symmetry algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string expr_text;
    std::string input_text;
    std::string relation;
    bool want_charpoly = false;
    int degree = 0;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--group", cfg.group, "root system preset, g2 or a2");
        cmd->add_option("--epsilon", cfg.epsilon, "Clifford generator square")
            ->check(CLI::IsMember({"+1", "-1"}));
        cmd->add_option("--kappa1", cfg.kappa1, "numeric kappa1 as p or p/q");
        cmd->add_option("--kappa2", cfg.kappa2, "numeric kappa2 as p or p/q");
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--jobs", cfg.jobs, "worker threads, 0 means all cores");
        cmd->add_option("--seed", cfg.seed, "seed for sampled checks");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the relation registry, one relation, "
                                                    "or one expression against zero");
    add_common(verify);
    verify->add_option("--max-degree", cfg.max_degree, "largest polynomial degree checked");
    verify->add_option("--expr", expr_text, "operator expression compared with zero");
    verify->add_option("--relation", relation, "restrict to one registry entry, e.g. R8");

    CLI::App* apply_cmd =
        app.add_subcommand("apply", "apply an operator expression to a spinor polynomial");
    add_common(apply_cmd);
    apply_cmd->add_option("--expr", expr_text, "operator expression")->required();
    apply_cmd->add_option("--input", input_text, "spinor polynomial literal")->required();

    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "matrix of an operator on one homogeneous component");
    add_common(matrix_cmd);
    matrix_cmd->add_option("--expr", expr_text, "operator expression")->required();
    matrix_cmd->add_option("--degree", degree, "homogeneous polynomial degree")->required();
    matrix_cmd->add_flag("--charpoly", want_charpoly,
                         "print the characteristic polynomial instead of entries");

    CLI::App* group_cmd =
        app.add_subcommand("groupinfo", "reflection group order, elements, orbits, double cover");
    add_common(group_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*verify) return run_verify(cfg, expr_text, relation);
        if (*apply_cmd) return run_apply(cfg, expr_text, input_text);
        if (*matrix_cmd) return run_matrix(cfg, expr_text, degree, want_charpoly);
        return run_groupinfo(cfg);
    } catch (const dunkl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const dunkl::ScopeMismatch& e) {
        std::cerr << "scope mismatch: " << e.what() << '\n';
        return exit_usage;
    } catch (const dunkl::InvalidPreset& e) {
        std::cerr << "invalid preset: " << e.what() << '\n';
        return exit_usage;
    } catch (const dunkl::NotGraded& e) {
        std::cerr << "not graded: " << e.what() << '\n';
        return exit_fail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
}
