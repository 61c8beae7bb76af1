#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/relations.hpp"

#include <algorithm>
#include <stdexcept>

using namespace dunkl;

namespace {

const CheckReport& report_named(const std::vector<CheckReport>& reports, const std::string& check) {
    auto it = std::find_if(reports.begin(), reports.end(),
                           [&](const CheckReport& r) { return r.check == check; });
    REQUIRE(it != reports.end());
    return *it;
}

// Deformed derivative built from public factories, with the k-th root term's
// coefficient sign flipped in every component.
OpPtr flipped_dunkl(const RootSystemPreset& preset, int i, int flip_k) {
    std::vector<OpPtr> terms;
    terms.push_back(op_partial(i));
    for (std::size_t k = 0; k < preset.positive_roots.size(); ++k) {
        const Root& r = preset.positive_roots[k];
        RadicalComplex coord = r.v[static_cast<std::size_t>(i)];
        if (coord.is_zero()) continue;
        if (static_cast<int>(k) == flip_k) coord = -coord;
        terms.push_back(op_scale(preset.weight(static_cast<int>(k)).scaled(coord), op_root_term(r)));
    }
    return op_sum(std::move(terms));
}

CliffordElement gen(int i) {
    CliffordElement e;
    e.add_term(static_cast<Blade>(1u << i), RadicalComplex(1));
    return e;
}

} // namespace

TEST_CASE("registry lists fifteen relations in order") {
    const auto& reg = relation_registry();
    REQUIRE(reg.size() == 15);
    for (std::size_t n = 0; n < reg.size(); ++n) {
        CHECK(reg[n].id == "R" + std::to_string(n + 1));
        CHECK_FALSE(reg[n].citation.empty());
        CHECK_FALSE(reg[n].title.empty());
        CHECK(reg[n].in_scope("g2"));
    }
    CHECK_FALSE(reg[10].in_scope("a2")); // R11
    CHECK_FALSE(reg[11].in_scope("a2")); // R12
    CHECK(reg[12].in_scope("a2"));
}

TEST_CASE("full registry passes on the hexagonal preset") {
    Catalogue cat(g2_preset(), Signature{1});
    VerifyOptions opts;
    opts.max_degree = 2;
    auto reports = verify_relations(cat, opts);
    CHECK(reports.size() == 60);
    for (const auto& rep : reports) {
        CAPTURE(rep.check);
        CAPTURE(rep.statement);
        if (rep.witness) CAPTURE(rep.witness->str());
        CHECK(rep.pass);
        CHECK(rep.basis_size == 80);
        CHECK(rep.max_degree == 2);
    }
    CHECK(all_pass(reports));

    // reports come back in registry order
    CHECK(reports.front().check == "R1a");
    CHECK(reports.back().check == "R15c");
    std::vector<std::string> relation_sequence;
    for (const auto& rep : reports) {
        if (relation_sequence.empty() || relation_sequence.back() != rep.relation) {
            relation_sequence.push_back(rep.relation);
        }
    }
    std::vector<std::string> want;
    for (int n = 1; n <= 15; ++n) want.push_back("R" + std::to_string(n));
    CHECK(relation_sequence == want);

    // the probe checks report which bracket vanishes
    CHECK(report_named(reports, "R14a").candidate == "anticommutator"); // dirac
    CHECK(report_named(reports, "R14b").candidate == "anticommutator"); // coordinate vector
    CHECK(report_named(reports, "R14c").candidate == "commutator");     // O12
    CHECK(report_named(reports, "R14e").candidate == "commutator");     // O1
    CHECK(report_named(reports, "R14f").candidate == "commutator");     // O0
    CHECK(report_named(reports, "R14g").candidate == "commutator");     // tsig1

    // conjugation statements carry the printed coefficients
    CHECK(report_named(reports, "R5a").statement == "tsig1*O12 = O13*tsig1");
    CHECK(report_named(reports, "R5c").statement == "tsig1*O23 = (-1)*O23*tsig1");
    CHECK(report_named(reports, "R5d").statement ==
          "tsig2*O12 = (-2/3)*O12*tsig2 + (2/3)*O13*tsig2 + (1/3)*O23*tsig2");
}

TEST_CASE("full registry passes on the hexagonal preset with negative signature") {
    Catalogue cat(g2_preset(), Signature{-1});
    VerifyOptions opts;
    opts.max_degree = 1;
    auto reports = verify_relations(cat, opts);
    CHECK(reports.size() == 60);
    for (const auto& rep : reports) {
        CAPTURE(rep.check);
        if (rep.witness) CAPTURE(rep.witness->str());
        CHECK(rep.pass);
    }
}

TEST_CASE("in-scope registry passes on the triangular preset") {
    for (int eps : {1, -1}) {
        Catalogue cat(a2_preset(), Signature{eps});
        VerifyOptions opts;
        opts.max_degree = eps == 1 ? 2 : 1;
        auto reports = verify_relations(cat, opts);
        CHECK(reports.size() == 46);
        for (const auto& rep : reports) {
            CAPTURE(eps);
            CAPTURE(rep.check);
            CAPTURE(rep.statement);
            if (rep.witness) CAPTURE(rep.witness->str());
            CHECK(rep.pass);
            CHECK(rep.relation != "R11");
            CHECK(rep.relation != "R12");
        }
    }
}

TEST_CASE("relation filter and scope screening") {
    Catalogue a2(a2_preset(), Signature{1});
    VerifyOptions opts;
    opts.max_degree = 1;
    opts.only_relation = "R11";
    CHECK_THROWS_AS(verify_relations(a2, opts), ScopeMismatch);
    opts.only_relation = "R12";
    CHECK_THROWS_AS(verify_relations(a2, opts), ScopeMismatch);
    opts.only_relation = "R99";
    CHECK_THROWS_AS(verify_relations(a2, opts), std::invalid_argument);

    Catalogue g2(g2_preset(), Signature{1});
    VerifyOptions r8;
    r8.max_degree = 2;
    r8.only_relation = "R8";
    auto reports = verify_relations(g2, r8);
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) {
        CHECK(rep.relation == "R8");
        CHECK(rep.pass);
    }
    CHECK(reports[0].statement == "comm(O13,O12) = O23 + 2*O123*O1 + E");
}

TEST_CASE("vanishing deformation reduces to orthogonal brackets") {
    Catalogue cat(g2_preset(), Signature{1});
    VerifyOptions opts;
    opts.max_degree = 3;
    opts.only_relation = "R9";
    auto reports = verify_relations(cat, opts);
    REQUIRE(reports.size() == 3);
    CHECK(all_pass(reports));

    // explicit numeric parameters do not disturb the fixed zero substitution
    opts.kappa = {Rational(5), Rational(7)};
    auto again = verify_relations(cat, opts);
    CHECK(all_pass(again));
}

TEST_CASE("numeric parameter instantiation verifies specializations") {
    Catalogue cat(g2_preset(), Signature{1});
    VerifyOptions opts;
    opts.max_degree = 2;
    opts.kappa = {Rational(1, 2), Rational(1, 3)};
    opts.only_relation = "R8";
    CHECK(all_pass(verify_relations(cat, opts)));
    opts.only_relation = "R11";
    CHECK(all_pass(verify_relations(cat, opts)));
}

TEST_CASE("flipping any single root coefficient breaks commutativity") {
    auto preset = g2_preset();
    for (int k = 0; k < 6; ++k) {
        bool broken = false;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            auto res = equal_up_to_degree(
                op_comm(flipped_dunkl(preset, i, k), flipped_dunkl(preset, j, k)), op_zero(), 3,
                Signature{1});
            if (!res.pass) {
                CHECK(res.witness.has_value());
                broken = true;
                break;
            }
        }
        CAPTURE(k);
        CHECK(broken);
    }
    // unflipped control: the same construction satisfies commutativity
    auto control = equal_up_to_degree(op_comm(flipped_dunkl(preset, 0, -1), flipped_dunkl(preset, 1, -1)),
                                      op_zero(), 3, Signature{1});
    CHECK(control.pass);
}

TEST_CASE("the printed-sign replica breaks the symmetry property") {
    Catalogue cat(g2_preset(), Signature{1});
    // Dirac operator with the diagnostic second component
    auto dirac_variant = op_sum({op_compose({op_clifford(gen(0)), cat.dunkl(0)}),
                                 op_compose({op_clifford(gen(1)), cat.dunkl2_variant()}),
                                 op_compose({op_clifford(gen(2)), cat.dunkl(2)})});
    auto res = equal_up_to_degree(op_comm(dirac_variant, cat.two_index(0, 1)), op_zero(), 3,
                                  Signature{1});
    REQUIRE_FALSE(res.pass);
    REQUIRE(res.witness.has_value());

    auto comm = equal_up_to_degree(op_comm(cat.dunkl(0), cat.dunkl2_variant()), op_zero(), 3,
                                   Signature{1});
    REQUIRE_FALSE(comm.pass);
    REQUIRE(comm.witness.has_value());
}

TEST_CASE("report rendering") {
    Catalogue cat(g2_preset(), Signature{1});
    VerifyOptions opts;
    opts.max_degree = 1;
    opts.only_relation = "R1";
    auto reports = verify_relations(cat, opts);
    REQUIRE(reports.size() == 3);
    const CheckReport& rep = reports[0];
    CHECK(rep.str().find("R1a") != std::string::npos);
    CHECK(rep.str().find("pass") != std::string::npos);
    CHECK(rep.str().find("comm(D1,D2) = 0") != std::string::npos);
    CHECK(rep.record().find("\"relation\":\"R1\"") != std::string::npos);
    CHECK(rep.record().find("\"check\":\"R1a\"") != std::string::npos);
    CHECK(rep.record().find("\"verdict\":\"pass\"") != std::string::npos);
    CHECK(rep.record().find("\"witness\":null") != std::string::npos);
    CHECK(rep.record().find("\"degree\":1") != std::string::npos);
    CHECK(rep.record().find("\"basis\":32") != std::string::npos);
    CHECK(rep.millis >= 0);

    CheckReport failing = rep;
    failing.pass = false;
    auto res = equal_up_to_degree(op_partial(0), op_zero(), 1, Signature{1});
    failing.witness = res.witness;
    CHECK(failing.str().find("FAIL") != std::string::npos);
    CHECK(failing.str().find("witness") != std::string::npos);
    CHECK(failing.record().find("\"verdict\":\"fail\"") != std::string::npos);
    CHECK(failing.record().find("\"witness\":\"") != std::string::npos);
}

TEST_CASE("parallel verification matches sequential reports") {
    Catalogue cat(g2_preset(), Signature{1});
    VerifyOptions seq;
    seq.max_degree = 2;
    seq.only_relation = "R3";
    VerifyOptions par = seq;
    par.jobs = 3;
    auto a = verify_relations(cat, seq);
    auto b = verify_relations(cat, par);
    REQUIRE(a.size() == b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(a[n].check == b[n].check);
        CHECK(a[n].pass == b[n].pass);
        CHECK(a[n].statement == b[n].statement);
        CHECK(a[n].basis_size == b[n].basis_size);
    }
}
