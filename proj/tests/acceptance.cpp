// Acceptance gate: one line per criterion, exit 0 only when every criterion
// holds. Exercises the library directly and the command line binary given as
// argv[1]. Every check is exact; there are no tolerances.

#include "dunkl/catalogue.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/group.hpp"
#include "dunkl/matrixrep.hpp"
#include "dunkl/parser.hpp"
#include "dunkl/relations.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace dunkl;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& binary, const std::string& args) {
    std::string cmd = binary + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult res;
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << id << (pass ? " PASS  " : " FAIL  ") << detail << std::endl;
}

// C1: full registry, hexagonal preset, degree 4, symbolic parameters, both
// generator squares, through the command line; each run under ten minutes.
void criterion_1(const std::string& cli) {
    auto t0 = std::chrono::steady_clock::now();
    CliResult plus = run_cli(cli, "verify --group g2 --max-degree 4 --epsilon +1");
    long long ms_plus = elapsed_ms(t0);
    auto t1 = std::chrono::steady_clock::now();
    CliResult minus = run_cli(cli, "verify --group g2 --max-degree 4 --epsilon -1");
    long long ms_minus = elapsed_ms(t1);
    bool pass = plus.exit_code == 0 && minus.exit_code == 0 &&
                contains(plus.output, "checks 60  failures 0") &&
                contains(minus.output, "checks 60  failures 0") && ms_plus < 600000 &&
                ms_minus < 600000;
    std::ostringstream d;
    d << "full registry, g2, degree 4, symbolic kappa, epsilon +1 (" << ms_plus
      << " ms, exit " << plus.exit_code << ") and -1 (" << ms_minus << " ms, exit "
      << minus.exit_code << ")";
    report("C1", pass, d.str());
}

// C2: the signature-independent relations hold for the triangular preset at
// degree 3 for both generator squares.
void criterion_2(const std::string& cli) {
    CliResult plus = run_cli(cli, "verify --group a2 --max-degree 3 --epsilon +1");
    CliResult minus = run_cli(cli, "verify --group a2 --max-degree 3 --epsilon -1");
    bool pass = plus.exit_code == 0 && minus.exit_code == 0 &&
                contains(plus.output, "checks 46  failures 0") &&
                contains(minus.output, "checks 46  failures 0");
    std::ostringstream d;
    d << "a2 registry scope, degree 3, both epsilon (exit " << plus.exit_code << ", "
      << minus.exit_code << ")";
    report("C2", pass, d.str());
}

// C3: group order 12, double cover order 24 for both generator squares,
// (t1 t2)^6 = -1, and every lifted reflection squares to epsilon.
void criterion_3() {
    RootSystemPreset p = g2_preset();
    bool pass = generate_group(p.reflections).size() == 12;
    std::vector<PinElement> lifts;
    for (const auto& r : p.positive_roots) lifts.push_back(tilde_lift(r));
    for (int eps : {1, -1}) {
        Signature sig{eps};
        pass = pass && generate_pin(lifts, sig).size() == 24;
        PinElement prod = pin_mul(lifts[0], lifts[1], sig);
        PinElement acc = pin_identity();
        for (int k = 0; k < 6; ++k) acc = pin_mul(acc, prod, sig);
        pass = pass && acc.matrix == Matrix3::identity() &&
               acc.spinor == CliffordElement(RadicalComplex(-1));
        for (const auto& t : lifts) {
            PinElement sq = pin_mul(t, t, sig);
            pass = pass && sq.matrix == Matrix3::identity() &&
                   sq.spinor == CliffordElement(RadicalComplex(eps));
        }
    }
    report("C3", pass, "group order 12, cover order 24 both epsilon, (t1*t2)^6 = -1, t^2 = eps");
}

// C4: ladder relations as operator identities at degree 3 with symbolic
// parameters, and as exact matrix identities on degrees 0..2 at
// kappa1 = 1/2, kappa2 = 1/3 with generator square +1.
void criterion_4() {
    bool pass = true;
    for (int eps : {1, -1}) {
        Catalogue cat(g2_preset(), Signature{eps});
        OpPtr o0 = cat.o_zero();
        OpPtr kp = cat.ladder_plus();
        OpPtr km = cat.ladder_minus();
        pass = pass && equal_up_to_degree(op_comm(o0, kp), kp, 3, cat.signature()).pass;
        pass = pass && equal_up_to_degree(op_comm(o0, km), op_neg(km), 3, cat.signature()).pass;
    }
    Catalogue cat(g2_preset(), Signature{1});
    auto kappa = std::make_pair(Rational(1, 2), Rational(1, 3));
    std::ostringstream dims;
    for (int d = 0; d <= 2; ++d) {
        LadderMatrixReport rep = ladder_matrix_check(cat, d, kappa);
        pass = pass && rep.pass();
        dims << (d ? ", " : "") << rep.dim << "x" << rep.dim;
    }
    report("C4", pass,
           "comm(O0,Kp) = Kp and comm(O0,Km) = -Km at degree 3 symbolic, matrices " + dims.str() +
               " at kappa 1/2, 1/3");
}

// C5: characteristic polynomial of the degree-0 matrix of O0 at kappa = 0.
void criterion_5(const std::string& cli) {
    CliResult r = run_cli(
        cli, "matrix --expr \"O0\" --degree 0 --kappa1 0 --kappa2 0 --epsilon +1 --charpoly");
    bool pass = r.exit_code == 0 && r.output == "(l^2 - 1/4)^4\n";
    report("C5", pass,
           "charpoly of M(O0) at degree 0, kappa 0: " + r.output.substr(0, r.output.find('\n')));
}

// C6: deformed derivative values on x2 and the defining identities
// comm(Di,Dj) = 0 and D^2 = eps*Laplacian up to degree 6.
void criterion_6() {
    bool pass = true;
    std::string v1, v2;
    {
        Catalogue cat(g2_preset(), Signature{1});
        SpinorPolynomial x2 = SpinorPolynomial::basis(Monomial{{0, 1, 0}}, 0);
        v2 = apply(cat.dunkl(1), x2, cat.signature()).str();
        v1 = apply(cat.dunkl(0), x2, cat.signature()).str();
        pass = pass && v2 == "1 + 2*kappa1 + 2*kappa2" && v1 == "-kappa1 - kappa2";
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                pass = pass &&
                       equal_up_to_degree(op_comm(cat.dunkl(i), cat.dunkl(j)), op_zero(), 6,
                                          cat.signature())
                           .pass;
    }
    for (int eps : {1, -1}) {
        Catalogue cat(g2_preset(), Signature{eps});
        OpPtr laplacian = op_sum({op_pow(cat.dunkl(0), 2), op_pow(cat.dunkl(1), 2),
                                  op_pow(cat.dunkl(2), 2)});
        OpPtr lhs = op_compose({cat.dirac(), cat.dirac()});
        pass = pass &&
               equal_up_to_degree(lhs, op_scale(ParamScalar(eps), laplacian), 6, cat.signature())
                   .pass;
    }
    report("C6", pass,
           "D2(x2) = " + v2 + ", D1(x2) = " + v1 +
               ", commuting deformed derivatives and D^2 = eps*(deformed Laplacian) at degree 6");
}

// C7: the diagnostic variant of the second deformed derivative, transcribed
// with the flipped third-root sign and short fourth-root divisor, breaks
// commutativity at degree 3 and yields a witness.
void criterion_7() {
    Catalogue cat(g2_preset(), Signature{1});
    CheckResult res = equal_up_to_degree(op_comm(cat.dunkl(0), cat.dunkl2_variant()), op_zero(), 3,
                                         cat.signature());
    bool pass = !res.pass && res.witness.has_value();
    report("C7", pass,
           "printed-form variant breaks comm(D1,D2) = 0, witness " +
               (res.witness ? res.witness->str().substr(0, 60) : std::string("missing")));
}

// C8: with both parameters at zero the two-index bracket relations close as
// so(3) brackets.
void criterion_8() {
    bool pass = true;
    for (int eps : {1, -1}) {
        Catalogue cat(g2_preset(), Signature{eps});
        VerifyOptions opts;
        opts.max_degree = 3;
        opts.only_relation = "R9";
        pass = pass && all_pass(verify_relations(cat, opts));
    }
    report("C8", pass, "kappa = 0 degeneration closes as so(3) brackets, both epsilon");
}

std::string random_expr(std::mt19937& rng, int depth) {
    static const std::vector<std::string> names = {"D",  "D2",  "X",  "E",    "O12", "O23",
                                                   "O1", "O123", "O0", "Kp",  "tsig1"};
    static const std::vector<std::string> scalars = {"2", "1/2", "kappa1", "kappa2", "i", "sqrt3"};
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    switch (pick(rng)) {
    case 0:
        return names[rng() % names.size()];
    case 1:
        return scalars[rng() % scalars.size()];
    case 2:
        return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 3:
        return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 4:
        return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
    case 5:
        return "comm(" + random_expr(rng, depth - 1) + ", " + random_expr(rng, depth - 1) + ")";
    case 6:
        return "acomm(" + random_expr(rng, depth - 1) + ", " + random_expr(rng, depth - 1) + ")";
    default:
        // Negations and powers of compound operands are only well formed
        // when parenthesized, so they are emitted that way.
        return rng() % 2 ? "(-" + random_expr(rng, depth - 1) + ")"
                         : "(" + random_expr(rng, depth - 1) + ")^" +
                               std::to_string(2 + rng() % 3);
    }
}

// C9: parser round trip on 500 generated expressions plus the golden command
// line invocations with their exit codes.
void criterion_9(const std::string& cli) {
    bool pass = true;
    std::mt19937 rng(20240817);
    int trips = 0;
    for (int n = 0; n < 500; ++n) {
        std::string s = random_expr(rng, 3);
        ExprPtr e = parse(s);
        std::string r = render(e);
        pass = pass && equal(parse(r), e) && render(parse(r)) == r;
        ++trips;
    }

    CliResult ap = run_cli(cli, "apply --group g2 --expr \"D2\" --input \"x2\"");
    pass = pass && ap.exit_code == 0 && ap.output == "1 + 2*kappa1 + 2*kappa2\n";
    CliResult gi = run_cli(cli, "groupinfo --group g2 --epsilon -1");
    pass = pass && gi.exit_code == 0 && contains(gi.output, "order 12") &&
           contains(gi.output, "double cover order 24");
    CliResult mx = run_cli(
        cli, "matrix --expr \"O0\" --degree 0 --kappa1 0 --kappa2 0 --epsilon +1 --charpoly");
    pass = pass && mx.exit_code == 0 && mx.output == "(l^2 - 1/4)^4\n";
    CliResult ladder =
        run_cli(cli, "verify --group g2 --epsilon -1 --expr \"comm(O0,Kp) - Kp\" --max-degree 3");
    pass = pass && ladder.exit_code == 0;
    CliResult scope =
        run_cli(cli, "verify --group a2 --expr \"O123\" --relation R11 2>/dev/null");
    pass = pass && scope.exit_code == 2;
    CliResult syntax = run_cli(cli, "verify --expr \"comm(O12\" 2>/dev/null");
    pass = pass && syntax.exit_code == 2;

    std::ostringstream d;
    d << trips << " round trips, apply/groupinfo/matrix goldens, exit codes "
      << ladder.exit_code << "/" << scope.exit_code << "/" << syntax.exit_code;
    report("C9", pass, d.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    std::string cli = argv[1];

    CliResult probe = run_cli(cli, "groupinfo --group a2 2>/dev/null");
    if (probe.exit_code != 0) {
        std::cerr << "cannot run " << cli << '\n';
        return 2;
    }

    criterion_1(cli);
    criterion_2(cli);
    criterion_3();
    criterion_4();
    criterion_5(cli);
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(cli);

    std::cout << "acceptance: " << (9 - failures) << "/9 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
