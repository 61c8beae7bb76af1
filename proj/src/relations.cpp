#include "dunkl/relations.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dunkl {

namespace {

RelationCheck plain_check(std::string name, std::string statement, OpPtr lhs, OpPtr rhs,
                          bool kappa_zero = false) {
    RelationCheck c;
    c.name = std::move(name);
    c.statement = std::move(statement);
    c.candidates.push_back({"", std::move(lhs), std::move(rhs)});
    c.kappa_zero = kappa_zero;
    return c;
}

OpPtr scale_by(const RadicalComplex& c, OpPtr x) { return op_scale(ParamScalar(c), std::move(x)); }

// O3 + wp*O1 + wm*O2
OpPtr weighted_one_index(const Catalogue& cat, const RadicalComplex& wp, const RadicalComplex& wm) {
    return op_sum({cat.one_index(2), scale_by(wp, cat.one_index(0)), scale_by(wm, cat.one_index(1))});
}

// comm(O1,O2) + wp*comm(O2,O3) + wm*comm(O3,O1)
OpPtr weighted_brackets(const Catalogue& cat, const RadicalComplex& wp, const RadicalComplex& wm) {
    return op_sum({op_comm(cat.one_index(0), cat.one_index(1)),
                   scale_by(wp, op_comm(cat.one_index(1), cat.one_index(2))),
                   scale_by(wm, op_comm(cat.one_index(2), cat.one_index(0)))});
}

std::string pair_name(int i, int j) {
    return "O" + std::to_string(i + 1) + std::to_string(j + 1);
}

char check_letter(std::size_t idx) { return static_cast<char>('a' + idx); }

std::vector<RelationCheck> build_r1(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    std::size_t idx = 0;
    for (auto [i, j] : pairs) {
        std::string st = "comm(D" + std::to_string(i + 1) + ",D" + std::to_string(j + 1) + ") = 0";
        out.push_back(plain_check(std::string("R1") + check_letter(idx++), st,
                                  op_comm(cat.dunkl(i), cat.dunkl(j)), op_zero()));
    }
    return out;
}

std::vector<RelationCheck> build_r2(const Catalogue& cat) {
    OpPtr laplacian = op_sum({op_pow(cat.dunkl(0), 2), op_pow(cat.dunkl(1), 2), op_pow(cat.dunkl(2), 2)});
    OpPtr rhs = op_scale(ParamScalar(static_cast<long>(cat.signature().epsilon)), std::move(laplacian));
    return {plain_check("R2a", "D*D = epsilon*(D1*D1 + D2*D2 + D3*D3)", op_pow(cat.dirac(), 2),
                        std::move(rhs))};
}

std::vector<RelationCheck> build_r3(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    const int n = static_cast<int>(cat.preset().positive_roots.size());
    std::size_t idx = 0;
    for (int k = 0; k < n; ++k) {
        std::string st = "acomm(D,tsig" + std::to_string(k + 1) + ") = 0";
        out.push_back(plain_check(std::string("R3") + check_letter(idx++), st,
                                  op_acomm(cat.dirac(), cat.tilde(k)), op_zero()));
    }
    for (int k = 0; k < n; ++k) {
        std::string st = "acomm(X,tsig" + std::to_string(k + 1) + ") = 0";
        out.push_back(plain_check(std::string("R3") + check_letter(idx++), st,
                                  op_acomm(cat.dual_vector(), cat.tilde(k)), op_zero()));
    }
    return out;
}

std::vector<RelationCheck> build_r4(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    const bool hexagonal = cat.preset().name == "g2";
    const long eps = cat.signature().epsilon;
    const int s0 = cat.preset().simple[0];
    const int s1 = cat.preset().simple[1];
    OpPtr eps_id = op_scale(ParamScalar(eps), op_identity());
    out.push_back(plain_check("R4a", "tsig1*tsig1 = epsilon", op_pow(cat.tilde(s0), 2), eps_id));
    out.push_back(plain_check("R4b", "tsig2*tsig2 = epsilon", op_pow(cat.tilde(s1), 2), eps_id));
    OpPtr prod = op_compose({cat.tilde(s0), cat.tilde(s1)});
    if (hexagonal) {
        out.push_back(plain_check("R4c", "(tsig1*tsig2)^6 = -1", op_pow(prod, 6),
                                  op_scale(ParamScalar(-1L), op_identity())));
        out.push_back(plain_check("R4d", "tsig1*tsig2*tsig1 = -epsilon*tsig4",
                                  op_compose({cat.tilde(s0), cat.tilde(s1), cat.tilde(s0)}),
                                  op_scale(ParamScalar(-eps), cat.tilde(3))));
    } else {
        out.push_back(plain_check("R4c", "(tsig1*tsig2)^3 = epsilon", op_pow(prod, 3), eps_id));
        out.push_back(plain_check("R4d", "tsig1*tsig2*tsig1 = -epsilon*tsig3",
                                  op_compose({cat.tilde(s0), cat.tilde(s1), cat.tilde(s0)}),
                                  op_scale(ParamScalar(-eps), cat.tilde(2))));
    }
    return out;
}

std::vector<RelationCheck> build_r5(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    std::size_t idx = 0;
    for (int simple_pos = 0; simple_pos < 2; ++simple_pos) {
        const int k = cat.preset().simple[static_cast<std::size_t>(simple_pos)];
        const Matrix3 m = reflection_matrix(cat.preset().positive_roots[static_cast<std::size_t>(k)].v);
        const std::string tname = "tsig" + std::to_string(k + 1);
        for (auto [i, j] : pairs) {
            std::vector<OpPtr> terms;
            std::string rhs_text;
            for (auto [a, b] : pairs) {
                RadicalComplex c = m.at(a, i) * m.at(b, j) - m.at(a, j) * m.at(b, i);
                if (c.is_zero()) continue;
                OpPtr term = op_compose({cat.two_index(a, b), cat.tilde(k)});
                if (!rhs_text.empty()) rhs_text += " + ";
                if (c.is_one()) {
                    rhs_text += pair_name(a, b) + "*" + tname;
                } else {
                    rhs_text += "(" + c.str() + ")*" + pair_name(a, b) + "*" + tname;
                    term = scale_by(c, std::move(term));
                }
                terms.push_back(std::move(term));
            }
            std::string st = tname + "*" + pair_name(i, j) + " = " + rhs_text;
            out.push_back(plain_check(std::string("R5") + check_letter(idx++), st,
                                      op_compose({cat.tilde(k), cat.two_index(i, j)}),
                                      op_sum(std::move(terms))));
        }
    }
    return out;
}

std::vector<RelationCheck> build_r6(const Catalogue& cat) {
    return {plain_check("R6a", "O1 + O2 + O3 = 0",
                        op_sum({cat.one_index(0), cat.one_index(1), cat.one_index(2)}), op_zero())};
}

std::vector<RelationCheck> build_r7(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    out.push_back(plain_check("R7a", "comm(O1,O2) = E", op_comm(cat.one_index(0), cat.one_index(1)),
                              cat.one_index_bracket()));
    out.push_back(plain_check("R7b", "comm(O2,O3) = E", op_comm(cat.one_index(1), cat.one_index(2)),
                              cat.one_index_bracket()));
    out.push_back(plain_check("R7c", "comm(O1,O3) = -E", op_comm(cat.one_index(0), cat.one_index(2)),
                              op_neg(cat.one_index_bracket())));
    return out;
}

std::vector<RelationCheck> build_r8(const Catalogue& cat) {
    OpPtr o12 = cat.two_index(0, 1);
    OpPtr o13 = cat.two_index(0, 2);
    OpPtr o23 = cat.two_index(1, 2);
    auto volume_term = [&](int l) {
        return op_scale(ParamScalar(2L), op_compose({cat.three_index(), cat.one_index(l)}));
    };
    // The standalone bracket term carries the generator-square sign.
    long eps = cat.signature().epsilon;
    OpPtr bracket = op_scale(ParamScalar(eps), cat.one_index_bracket());
    std::string etxt = eps > 0 ? " + E" : " - E";
    std::vector<RelationCheck> out;
    out.push_back(plain_check("R8a", "comm(O13,O12) = O23 + 2*O123*O1" + etxt, op_comm(o13, o12),
                              op_sum({o23, volume_term(0), bracket})));
    out.push_back(plain_check("R8b", "comm(O23,O12) = -O13 + 2*O123*O2" + etxt, op_comm(o23, o12),
                              op_sum({op_neg(o13), volume_term(1), bracket})));
    out.push_back(plain_check("R8c", "comm(O23,O13) = O12 + 2*O123*O3" + etxt, op_comm(o23, o13),
                              op_sum({o12, volume_term(2), bracket})));
    return out;
}

std::vector<RelationCheck> build_r9(const Catalogue& cat) {
    OpPtr o12 = cat.two_index(0, 1);
    OpPtr o13 = cat.two_index(0, 2);
    OpPtr o23 = cat.two_index(1, 2);
    std::vector<RelationCheck> out;
    out.push_back(plain_check("R9a", "comm(O13,O12) = O23 at kappa1 = kappa2 = 0", op_comm(o13, o12),
                              o23, true));
    out.push_back(plain_check("R9b", "comm(O23,O12) = -O13 at kappa1 = kappa2 = 0", op_comm(o23, o12),
                              op_neg(o13), true));
    out.push_back(plain_check("R9c", "comm(O23,O13) = O12 at kappa1 = kappa2 = 0", op_comm(o23, o13),
                              o12, true));
    return out;
}

std::vector<RelationCheck> build_r10(const Catalogue& cat) {
    const RadicalComplex wp = RadicalComplex::omega();
    const RadicalComplex wm = wp.conj();
    // i*sqrt6/3 and 2*i*sqrt3/3
    const RadicalComplex c_pm = RadicalComplex::unit(7, Rational(1, 3));
    const RadicalComplex c_0 = RadicalComplex::unit(6, Rational(2, 3));
    auto volume_sum = [&](const RadicalComplex& a, const RadicalComplex& b) {
        return op_scale(ParamScalar(2L), op_compose({cat.three_index(), weighted_one_index(cat, a, b)}));
    };
    std::vector<RelationCheck> out;
    out.push_back(plain_check(
        "R10a",
        "comm(O0,Op) = Op - (i*sqrt6/3)*(2*O123*(O3 + w*O1 + w2*O2) + comm(O1,O2) + w*comm(O2,O3) + "
        "w2*comm(O3,O1)) with w = omega, w2 = omega^2",
        op_comm(cat.o_zero(), cat.o_plus()),
        op_sum({cat.o_plus(),
                scale_by(-c_pm, op_sum({volume_sum(wp, wm), weighted_brackets(cat, wp, wm)}))})));
    out.push_back(plain_check(
        "R10b",
        "comm(O0,Om) = -Om + (i*sqrt6/3)*(2*O123*(O3 + w2*O1 + w*O2) + comm(O1,O2) + w2*comm(O2,O3) + "
        "w*comm(O3,O1)) with w = omega, w2 = omega^2",
        op_comm(cat.o_zero(), cat.o_minus()),
        op_sum({op_neg(cat.o_minus()),
                scale_by(c_pm, op_sum({volume_sum(wm, wp), weighted_brackets(cat, wm, wp)}))})));
    // The standalone bracket sum carries the generator-square sign.
    long eps = cat.signature().epsilon;
    std::string bsign = eps > 0 ? " + " : " - ";
    out.push_back(plain_check(
        "R10c",
        "comm(Op,Om) = 2*O0 - (2*i*sqrt3/3)*(2*O123*(O1 + O2 + O3)" + bsign +
            "(comm(O1,O2) + comm(O2,O3) + comm(O3,O1)))",
        op_comm(cat.o_plus(), cat.o_minus()),
        op_sum({op_scale(ParamScalar(2L), cat.o_zero()),
                scale_by(-c_0, op_sum({op_scale(ParamScalar(2L),
                                                op_compose({cat.three_index(),
                                                            op_sum({cat.one_index(0), cat.one_index(1),
                                                                    cat.one_index(2)})})),
                                       op_scale(ParamScalar(eps),
                                                weighted_brackets(cat, RadicalComplex(1),
                                                                  RadicalComplex(1)))}))})));
    return out;
}

std::vector<RelationCheck> build_r11(const Catalogue& cat) {
    const RadicalComplex wp = RadicalComplex::omega();
    const RadicalComplex wm = wp.conj();
    // 2*i*sqrt6/3 and 2*i*sqrt3
    const RadicalComplex c_pm = RadicalComplex::unit(7, Rational(2, 3));
    const RadicalComplex c_e = RadicalComplex::unit(6, Rational(2));
    std::vector<RelationCheck> out;
    out.push_back(plain_check(
        "R11a", "comm(O0,Op) = Op - (2*i*sqrt6/3)*O123*(O3 + w*O1 + w2*O2) with w = omega, w2 = omega^2",
        op_comm(cat.o_zero(), cat.o_plus()),
        op_sum({cat.o_plus(),
                scale_by(-c_pm, op_compose({cat.three_index(), weighted_one_index(cat, wp, wm)}))})));
    out.push_back(plain_check(
        "R11b", "comm(O0,Om) = -Om + (2*i*sqrt6/3)*O123*(O3 + w2*O1 + w*O2) with w = omega, w2 = omega^2",
        op_comm(cat.o_zero(), cat.o_minus()),
        op_sum({op_neg(cat.o_minus()),
                scale_by(c_pm, op_compose({cat.three_index(), weighted_one_index(cat, wm, wp)}))})));
    // The standalone bracket term carries the generator-square sign.
    long eps = cat.signature().epsilon;
    std::string esign = eps > 0 ? "-" : "+";
    out.push_back(plain_check("R11c", "comm(Op,Om) = 2*O0 " + esign + " 2*i*sqrt3*E",
                              op_comm(cat.o_plus(), cat.o_minus()),
                              op_sum({op_scale(ParamScalar(2L), cat.o_zero()),
                                      scale_by(-c_e * RadicalComplex(eps),
                                               cat.one_index_bracket())})));
    return out;
}

std::vector<RelationCheck> build_r12(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    out.push_back(plain_check("R12a", "comm(O0,Kp) = Kp", op_comm(cat.o_zero(), cat.ladder_plus()),
                              cat.ladder_plus()));
    out.push_back(plain_check("R12b", "comm(O0,Km) = -Km", op_comm(cat.o_zero(), cat.ladder_minus()),
                              op_neg(cat.ladder_minus())));
    return out;
}

std::vector<RelationCheck> build_r13(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    const int n = static_cast<int>(cat.preset().positive_roots.size());
    for (int k = 0; k < n; ++k) {
        std::string st = "acomm(tsig" + std::to_string(k + 1) + ",O0) = 0";
        out.push_back(plain_check(std::string("R13") + check_letter(static_cast<std::size_t>(k)), st,
                                  op_acomm(cat.tilde(k), cat.o_zero()), op_zero()));
    }
    return out;
}

std::vector<RelationCheck> build_r14(const Catalogue& cat) {
    std::vector<std::pair<std::string, OpPtr>> targets;
    targets.emplace_back("D", cat.dirac());
    targets.emplace_back("X", cat.dual_vector());
    targets.emplace_back("O12", cat.two_index(0, 1));
    targets.emplace_back("O23", cat.two_index(1, 2));
    targets.emplace_back("O1", cat.one_index(0));
    targets.emplace_back("O0", cat.o_zero());
    targets.emplace_back("tsig1", cat.tilde(cat.preset().simple[0]));
    std::vector<RelationCheck> out;
    std::size_t idx = 0;
    for (auto& [name, target] : targets) {
        RelationCheck c;
        c.name = std::string("R14") + check_letter(idx++);
        c.statement = "comm(O123," + name + ") = 0 or acomm(O123," + name + ") = 0";
        c.candidates.push_back({"commutator", op_comm(cat.three_index(), target), op_zero()});
        c.candidates.push_back({"anticommutator", op_acomm(cat.three_index(), target), op_zero()});
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RelationCheck> build_r15(const Catalogue& cat) {
    std::vector<RelationCheck> out;
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    std::size_t idx = 0;
    for (auto [i, j] : pairs) {
        std::string st = "comm(D," + pair_name(i, j) + ") = 0";
        out.push_back(plain_check(std::string("R15") + check_letter(idx++), st,
                                  op_comm(cat.dirac(), cat.two_index(i, j)), op_zero()));
    }
    return out;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned>(ch));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

} // namespace

bool RelationSpec::in_scope(std::string_view preset_name) const {
    return std::find(presets.begin(), presets.end(), preset_name) != presets.end();
}

const std::vector<RelationSpec>& relation_registry() {
    static const std::vector<RelationSpec> registry = [] {
        const std::vector<std::string> both = {"g2", "a2"};
        const std::vector<std::string> hex_only = {"g2"};
        std::vector<RelationSpec> r;
        r.push_back({"R1", "deformed derivative commutativity",
                     "the deformed partial derivatives commute pairwise", both, build_r1});
        r.push_back({"R2", "Dirac square",
                     "the square of the Dirac operator is epsilon times the deformed Laplacian", both,
                     build_r2});
        r.push_back({"R3", "reflection anticommutation",
                     "the Dirac operator and the coordinate vector anticommute with every lifted "
                     "reflection",
                     both, build_r3});
        r.push_back({"R4", "double cover presentation",
                     "the lifted simple reflections satisfy the double cover presentation of the "
                     "reflection group",
                     both, build_r4});
        r.push_back({"R5", "simple reflection action",
                     "conjugating a two-index symmetry by a lifted simple reflection permutes the "
                     "index pairs with the reflection's coefficients",
                     both, build_r5});
        r.push_back({"R6", "one-index sum",
                     "the three one-index symmetries sum to zero", both, build_r6});
        r.push_back({"R7", "one-index brackets",
                     "the cyclic brackets of the one-index symmetries agree with a single element",
                     both, build_r7});
        r.push_back({"R8", "two-index brackets",
                     "brackets of two-index symmetries close onto two-index, three-index and "
                     "one-index elements",
                     both, build_r8});
        r.push_back({"R9", "deformation-free reduction",
                     "at vanishing deformation the two-index symmetries obey orthogonal Lie algebra "
                     "brackets",
                     both, build_r9});
        r.push_back({"R10", "diagonal ladder brackets",
                     "ladder-form brackets of the diagonal combinations for a rank-three root system",
                     both, build_r10});
        r.push_back({"R11", "hexagonal ladder brackets",
                     "for the hexagonal root system the ladder-form brackets reduce to three-index "
                     "terms",
                     hex_only, build_r11});
        r.push_back({"R12", "ladder property",
                     "the symmetrised products raise and lower the diagonal eigenvalue by one",
                     hex_only, build_r12});
        r.push_back({"R13", "diagonal reflection anticommutation",
                     "the diagonal combination anticommutes with every lifted reflection", both,
                     build_r13});
        r.push_back({"R14", "three-index centrality probes",
                     "bracket probes of the three-index element against generators of the algebra",
                     both, build_r14});
        r.push_back({"R15", "Dirac symmetry",
                     "every two-index symmetry commutes with the Dirac operator", both, build_r15});
        return r;
    }();
    return registry;
}

std::string CheckReport::str() const {
    std::ostringstream os;
    os << check << (pass ? "  pass" : "  FAIL") << "  degree " << max_degree << "  basis "
       << basis_size << "  " << millis << " ms  " << statement;
    if (!candidate.empty()) os << "  [holds: " << candidate << "]";
    if (witness) os << "\n    witness " << witness->str();
    return os.str();
}

std::string CheckReport::record() const {
    std::ostringstream os;
    os << "{\"relation\":\"" << json_escape(relation) << "\",\"check\":\"" << json_escape(check)
       << "\",\"statement\":\"" << json_escape(statement) << "\",\"citation\":\""
       << json_escape(citation) << "\",\"verdict\":\"" << (pass ? "pass" : "fail")
       << "\",\"candidate\":\"" << json_escape(candidate) << "\",\"degree\":" << max_degree
       << ",\"basis\":" << basis_size << ",\"witness\":";
    if (witness) {
        os << '"' << json_escape(witness->str()) << '"';
    } else {
        os << "null";
    }
    os << ",\"millis\":" << millis << "}";
    return os.str();
}

std::vector<CheckReport> verify_relations(const Catalogue& cat, const VerifyOptions& opts) {
    const auto& registry = relation_registry();
    const std::string& preset_name = cat.preset().name;
    if (opts.only_relation) {
        auto it = std::find_if(registry.begin(), registry.end(),
                               [&](const RelationSpec& s) { return s.id == *opts.only_relation; });
        if (it == registry.end()) {
            throw std::invalid_argument("unknown relation id: " + *opts.only_relation);
        }
        if (!it->in_scope(preset_name)) {
            throw ScopeMismatch("relation " + it->id + " is not defined for preset " + preset_name);
        }
    }

    struct Job {
        const RelationSpec* spec;
        RelationCheck check;
    };
    std::vector<Job> jobs;
    for (const RelationSpec& spec : registry) {
        if (opts.only_relation && spec.id != *opts.only_relation) continue;
        if (!spec.in_scope(preset_name)) continue;
        for (RelationCheck& check : spec.build(cat)) {
            jobs.push_back({&spec, std::move(check)});
        }
    }

    std::vector<CheckReport> reports(jobs.size());
    auto run_one = [&](std::size_t idx) {
        const Job& job = jobs[idx];
        CheckReport rep;
        rep.relation = job.spec->id;
        rep.check = job.check.name;
        rep.statement = job.check.statement;
        rep.citation = job.spec->citation;
        rep.max_degree = opts.max_degree;
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> held;
        std::optional<Witness> first_witness;
        for (const RelationCandidate& cand : job.check.candidates) {
            OpPtr lhs = cand.lhs;
            OpPtr rhs = cand.rhs;
            if (job.check.kappa_zero) {
                lhs = instantiate_params(lhs, Rational(0), Rational(0));
                rhs = instantiate_params(rhs, Rational(0), Rational(0));
            } else if (opts.kappa) {
                lhs = instantiate_params(lhs, opts.kappa->first, opts.kappa->second);
                rhs = instantiate_params(rhs, opts.kappa->first, opts.kappa->second);
            }
            CheckResult res = equal_up_to_degree(lhs, rhs, opts.max_degree, cat.signature(), opts.jobs);
            rep.basis_size = res.basis_size;
            if (res.pass) {
                held.push_back(cand.label);
            } else if (!first_witness && res.witness) {
                first_witness = res.witness;
            }
        }
        rep.pass = !held.empty();
        if (job.check.candidates.size() > 1) {
            std::string joined;
            for (const std::string& h : held) {
                if (!joined.empty()) joined += ", ";
                joined += h;
            }
            rep.candidate = joined;
        }
        if (!rep.pass) rep.witness = first_witness;
        rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        reports[idx] = std::move(rep);
    };

    if (opts.jobs <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        const std::size_t workers =
            std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), jobs.size());
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= jobs.size()) return;
                    try {
                        run_one(idx);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.pass; });
}

} // namespace dunkl
