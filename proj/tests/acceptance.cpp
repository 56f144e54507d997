// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in code next to each check.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spinrep/catalog.hpp"
#include "spinrep/clifford.hpp"
#include "spinrep/mass_model.hpp"
#include "spinrep/rep.hpp"
#include "spinrep/rwe.hpp"
#include "spinrep/spin_lines.hpp"
#include "spinrep/su3.hpp"

using namespace spinrep;

namespace {

int criteria_failed = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++criteria_failed;
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(SPINREP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (pipe == nullptr) return out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

double max_abs(const SpMatC& m) {
    double mx = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatC::InnerIterator it(m, k); it; ++it) mx = std::max(mx, std::abs(it.value()));
    return mx;
}

double comm_residual(const SpMatC& a, const SpMatC& b, const SpMatC& expect) {
    SpMatC c = SpMatC(a * b) - SpMatC(b * a) - expect;
    c.prune([](int, int, const std::complex<double>& v) { return std::abs(v) > 0.0; });
    double scale = std::max(1.0, max_abs(expect));
    return max_abs(c) / scale;
}

// --------------------------------------------------------------------------

void criterion_1_degree_table() {
    const long long expect[7][7] = {
        {1, 3, 6, 10, 15, 21, 28},       {3, 8, 15, 24, 35, 48, 63},
        {6, 15, 27, 42, 60, 81, 105},    {10, 24, 42, 64, 90, 120, 154},
        {15, 35, 60, 90, 125, 165, 210}, {21, 48, 81, 120, 165, 216, 273},
        {28, 63, 105, 154, 210, 273, 343}};
    std::string out = run_cli("su3 degrees --max 6 --format csv");
    std::istringstream ss(out);
    std::string line;
    std::getline(ss, line);  // header
    bool ok = true;
    int rows = 0;
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');
        int p = std::stoi(cell);
        int q = 0;
        while (std::getline(ls, cell, ',')) {
            if (p > 6 || q > 6 || std::stoll(cell) != expect[p][q]) ok = false;
            ++q;
        }
        ok = ok && q == 7;
        ++rows;
    }
    ok = ok && rows == 7;
    report(1, "degree table from the command line matches all 49 entries", ok);
}

void criterion_2_catalog_degrees() {
    const std::vector<std::pair<std::string, long long>> expect = {
        {"p", 3540},  {"Sigma0", 4556}, {"Xi0", 5112},  {"Lambda", 4290}, {"pi0", 529},
        {"K0", 1936}, {"eta", 2116},    {"rho0", 3024}, {"K*0", 3480},    {"phi", 3135}};
    bool ok = true;
    for (const auto& [name, deg] : expect) {
        const ParticleState* s = find_state(name);
        if (s == nullptr || degree(s->rep) != deg) ok = false;
    }
    report(2, "the ten catalog labels reproduce the published degrees exactly", ok);
}

void criterion_3_commutator_suite() {
    bool ok = true;
    std::string detail;

    // single-factor ladder relations for every half-integer weight <= 30
    for (long long tl = 0; tl <= 60 && ok; ++tl) {
        LadderOps ops = ladder_matrices(HalfInt(tl));
        Eigen::MatrixXd x3 = ops.third();
        auto resid = [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                         const Eigen::MatrixXd& e) {
            double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
            return ((a * b - b * a) - e).cwiseAbs().maxCoeff() / scale;
        };
        if (resid(x3, ops.plus, ops.plus) > 1e-10 || resid(x3, ops.minus, -ops.minus) > 1e-10 ||
            resid(ops.plus, ops.minus, 2.0 * x3) > 1e-10) {
            ok = false;
            detail = "ladder relations failed at 2l = " + std::to_string(tl);
        }
    }

    // product representations: a dense small grid plus the large catalog reps
    std::vector<std::pair<long long, long long>> reps;
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b) reps.emplace_back(a, b);
    for (auto pr : std::initializer_list<std::pair<long long, long long>>{
             {59, 58}, {58, 59}, {60, 60}, {43, 43}, {45, 45},
             {55, 53}, {59, 57}, {56, 54}, {71, 35}, {35, 71}})
        reps.push_back(pr);

    for (const auto& [ta, tb] : reps) {
        if (!ok) break;
        RepLabel rep = RepLabel::from_twice(ta, tb);
        if (degree(rep) > 4000) continue;
        ProductOperators ops = product_operators(rep);
        auto cS = [](const SpMat& m) { return SpMatC(m.cast<std::complex<double>>()); };
        SpMatC xp = cS(ops.xp()), xm = cS(ops.xm()), x3 = cS(ops.x3());
        SpMatC yp = cS(ops.yp()), ym = cS(ops.ym()), y3 = cS(ops.y3());
        long long d = degree(rep);
        SpMatC zero(d, d);

        // the x set commutes with the y set
        for (const SpMatC* x : {&xp, &xm, &x3})
            for (const SpMatC* y : {&yp, &ym, &y3})
                if (comm_residual(*x, *y, zero) > 1e-12) {
                    ok = false;
                    detail = "cross commutator nonzero at " + rep.str();
                }

        // su(2) relations within each factor
        SpMatC two_x3 = SpMatC(2.0 * x3), two_y3 = SpMatC(2.0 * y3);
        if (comm_residual(x3, xp, xp) > 1e-10 || comm_residual(x3, xm, SpMatC(-1.0 * xm)) > 1e-10 ||
            comm_residual(xp, xm, two_x3) > 1e-10 || comm_residual(y3, yp, yp) > 1e-10 ||
            comm_residual(y3, ym, SpMatC(-1.0 * ym)) > 1e-10 ||
            comm_residual(yp, ym, two_y3) > 1e-10) {
            ok = false;
            detail = "factor ladder relations failed at " + rep.str();
        }

        // full boost/rotation bracket table
        Sl2cGenerators gen = sl2c_generators(rep);
        auto A = [&](int i) { return gen.a[static_cast<size_t>(i)]; };
        auto B = [&](int i) { return gen.b[static_cast<size_t>(i)]; };
        for (int i = 0; i < 3 && ok; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            if (comm_residual(A(i), A(j), A(k)) > 1e-10 ||
                comm_residual(B(i), B(j), SpMatC(-1.0 * A(k))) > 1e-10 ||
                comm_residual(A(i), B(i), zero) > 1e-10 ||
                comm_residual(A(i), B(j), B(k)) > 1e-10 ||
                comm_residual(A(j), B(i), SpMatC(-1.0 * B(k))) > 1e-10) {
                ok = false;
                detail = "boost/rotation brackets failed at " + rep.str();
            }
        }
    }
    report(3, "ladder and bracket relations to 1e-10 for weights <= 30 and products <= 4000",
           ok, detail);
}

void criterion_4_lambda3_fixture() {
    Lambda3 lam = lambda3_generalized(HalfInt(59), HalfInt(58));
    bool ok = lam.dimension() == 3540 && lam.blocks.size() == 59;

    auto check_block = [&](size_t index, Rational first, Rational step) {
        const auto& blk = lam.blocks[index];
        if (blk.size() != 60 || blk.front() != first) return false;
        for (size_t i = 0; i + 1 < blk.size(); ++i)
            if (blk[i + 1] - blk[i] != step) return false;
        return true;
    };
    ok = ok && check_block(0, Rational(1711, 2), Rational(-29));
    ok = ok && check_block(1, Rational(826), Rational(-28));
    ok = ok && check_block(2, Rational(1593, 2), Rational(-27));
    ok = ok && check_block(28, Rational(59, 2), Rational(-1));

    // documented deviation: the central zero block spans the full first
    // factor, dimension 60 rather than the published 59
    const auto& zero = lam.blocks[29];
    ok = ok && zero.size() == 60;
    for (const auto& v : zero) ok = ok && v == Rational(0);

    for (size_t k = 0; k < 29 && ok; ++k) {
        const auto& pos = lam.blocks[k];
        const auto& neg = lam.blocks[58 - k];
        ok = ok && pos.size() == neg.size();
        for (size_t i = 0; i < pos.size() && ok; ++i) ok = ok && neg[i] == -pos[i];
    }
    report(4, "weight-operator blocks match the published values exactly "
              "(zero block stored at dimension 60)", ok);
}

void criterion_5_bivector_metric() {
    Matrix6ll got = bivector_metric(minkowski_metric());
    Matrix6ll expect = Matrix6ll::Zero();
    expect(0, 0) = -1;
    expect(1, 1) = -1;
    expect(2, 2) = -1;
    expect(3, 3) = 1;
    expect(4, 4) = 1;
    expect(5, 5) = 1;
    report(5, "bivector metric of diag(-1,-1,-1,1) equals diag(-1,-1,-1,1,1,1) exactly",
           got == expect);
}

void criterion_6_dirac_l() {
    DiracLMatrices lm = dirac_l_matrices(2.0);
    using C = std::complex<double>;
    Eigen::Matrix2cd s1, s2, s3;
    s1 << C(0), C(1), C(1), C(0);
    s2 << C(0), C(0, -1), C(0, 1), C(0);
    s3 << C(1), C(0), C(0), C(-1);
    bool ok = (lm.l[0] - s1).cwiseAbs().maxCoeff() == 0.0 &&
              (lm.l[1] - s2).cwiseAbs().maxCoeff() == 0.0 &&
              (lm.l[2] - s3).cwiseAbs().maxCoeff() == 0.0;
    report(6, "first-order 2x2 blocks at c=2 equal the Pauli matrices exactly", ok);
}

void criterion_7_conjugation_suite() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 8 && ok; n += 2)
        for (int p = 0; p <= n && ok; ++p) {
            CliffordSignature sig(p, n - p);
            GammaBasis basis = gamma_basis(sig);
            PiResult pi = pi_matrix(basis);
            GMat prod = pi.pi * pi.pi.conj();
            auto [is_scalar, s] = prod.unit_scalar();
            int product_sign = (is_scalar && s == GInt(1)) ? +1
                               : (is_scalar && s == GInt(-1)) ? -1 : 0;
            if (product_sign == 0 || product_sign != pi.sign_rule) {
                ok = false;
                detail = sig.str() + " census sign " + std::to_string(pi.sign_rule) +
                         " vs product " + std::to_string(product_sign);
            }
        }
    report(7, "conjugation census rule equals the exact matrix product for all p+q <= 8", ok,
           detail);
}

void criterion_8_cpt_table() {
    CptTable table = cpt_table();
    bool ok = cpt_table_is_elementary_abelian(table);

    // twelve transcribed cells of the published table (row, col, phase, word)
    struct Expect {
        int r, c;
        PhaseMonomial phase;
        const char* word;
    };
    const std::vector<Expect> cells = {
        {1, 2, {1, 1, 0}, "WE"},        {4, 4, {0, 0, 2}, "Π²"},
        {2, 1, {1, 1, 0}, "EW"},        {1, 1, {2, 0, 0}, "W²"},
        {1, 5, {2, 0, 1}, "WK"},        {4, 1, {1, 0, 1}, "ΠW"},
        {3, 6, {1, 2, 1}, "CS"},        {7, 7, {2, 2, 2}, "F²"},
        {2, 7, {1, 2, 1}, "EF"},        {5, 3, {2, 1, 1}, "KC"},
        {6, 4, {0, 1, 2}, "SΠ"},   {3, 3, {2, 2, 0}, "C²"},
    };
    for (const auto& e : cells) {
        const auto& cell = table.cells[static_cast<size_t>(e.r)][static_cast<size_t>(e.c)];
        if (!(cell.phase == e.phase) || cell.word != e.word) ok = false;
    }
    report(8, "discrete-symmetry table: elementary abelian at unit phases, "
              "symbolic cells match the published table", ok);
}

void criterion_9_search() {
    struct Case {
        double ratio;
        long long twice_spin;
        long long tl, tldot;
        int within;
    };
    const std::vector<Case> cases = {
        {1800, 1, 59, 58, 1}, {2280, 1, 67, 66, 1}, {2140, 1, 65, 64, 1}, {270, 0, 22, 22, 1},
        {972, 0, 43, 43, 1},  {1076, 0, 45, 45, 1}, {1496, 2, 55, 53, 1}, {1747, 2, 59, 57, 1},
        {2520, 1, 71, 70, 2}, {1533, 2, 56, 54, 2},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        auto found = search_rep(c.ratio, HalfInt(c.twice_spin), c.within);
        RepLabel want = RepLabel::from_twice(c.tl, c.tldot);
        bool hit = false;
        for (const auto& rep : found) hit = hit || rep == want;
        if (!hit) {
            ok = false;
            detail = "ratio " + std::to_string(c.ratio) + " missed " + want.str();
        }
    }
    // the mapping is nearest-neighbor for the first eight ratios only; the
    // last two land at rank 2, which is asserted as such
    auto xi = search_rep(2520, HalfInt(1), 1);
    auto phi = search_rep(1533, HalfInt(2), 1);
    ok = ok && !(xi[0] == RepLabel::from_twice(71, 70));
    ok = ok && !(phi[0] == RepLabel::from_twice(56, 54));
    report(9, "ratio search: eight assignments at rank 1, the remaining two inside the top 2",
           ok, detail);
}

void criterion_10_closure() {
    ClosureReport baryon = closure_baryon(939, 1115, 1192, 1318);
    bool ok = std::abs(baryon.lhs - 2257.0) < 1e-12 && std::abs(baryon.rhs - 2268.5) < 1e-12;
    ok = ok && baryon.rel_diff <= 0.01;

    ClosureReport meson = closure_meson(496, 549, 138);
    ok = ok && meson.rel_to_lhs <= 0.07;

    ClosureReport vector = closure_meson(892, 782, 770);
    // independently hand-computed: |4*892^2 - (3*782^2 + 770^2)| / (4*892^2)
    double hand = 755184.0 / 3182656.0;
    ok = ok && std::abs(vector.rel_to_lhs - hand) <= 1e-9 * hand;
    report(10, "closure relations: baryon <= 1%, pseudoscalar <= 7%, vector matches the oracle",
           ok,
           "baryon " + std::to_string(baryon.rel_diff) + ", pseudoscalar " +
               std::to_string(meson.rel_to_lhs) + ", vector " + std::to_string(vector.rel_to_lhs));
}

void criterion_11_fit_oracle() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"F12", "B0", "B1"}) {
        const Octet& octet = octet_by_name(name);
        bool quadratic = octet.baryon == 0;
        FitOptions opts;
        opts.quadratic = quadratic;
        opts.beta_zero = octet.baryon == 0;
        double m0 = octet_m0(octet, quadratic);
        std::vector<Observation> obs = octet_observations(octet);
        FitResult fit = gmo_fit(obs, opts, m0);
        if (fit.rank_deficient) {
            ok = false;
            detail = std::string(name) + " unexpectedly rank-deficient";
            continue;
        }
        std::vector<std::vector<double>> design;
        std::vector<double> target;
        for (const auto& o : obs) {
            auto row = gmo_coefficients(o.qn, o.gamma_prime_coeff);
            std::vector<double> r = {1.0};
            if (!opts.beta_zero) r.push_back(row[1].value());
            r.push_back(row[2].value());
            r.push_back(row[4].value());
            r.push_back(row[5].value());
            design.push_back(r);
            target.push_back((quadratic ? o.mass * o.mass : o.mass) - m0);
        }
        std::vector<double> x = oracles::normal_equations_solve(design, target);
        std::vector<double> res = oracles::residuals(design, target, x);
        std::vector<double> fitted = {fit.params.alpha};
        if (!opts.beta_zero) fitted.push_back(fit.params.beta);
        fitted.push_back(fit.params.gamma);
        fitted.push_back(fit.params.beta_prime);
        fitted.push_back(fit.params.gamma_prime);
        double scale = 0.0;
        for (double v : x) scale = std::max(scale, std::abs(v));
        for (size_t i = 0; i < x.size(); ++i)
            if (std::abs(fitted[i] - x[i]) > 1e-9 * scale) {
                ok = false;
                detail = std::string(name) + " parameter mismatch";
            }
        for (size_t i = 0; i < res.size(); ++i)
            if (std::abs(fit.residuals[i] - res[i]) > 1e-9 * std::max(1.0, std::abs(res[i]))) {
                ok = false;
                detail = std::string(name) + " residual mismatch";
            }
    }

    // synthetic round-trip
    GmoParams truth;
    truth.m0 = 1141.0;
    truth.alpha = 37.0;
    truth.beta = -93.0;
    truth.gamma = 24.5;
    truth.beta_prime = 2.25;
    truth.gamma_prime = -1.75;
    std::vector<Observation> obs = octet_observations(octet_by_name("F12"));
    for (auto& o : obs) o.mass = gmo_predict(truth, o.qn, o.gamma_prime_coeff);
    FitOptions opts;
    FitResult fit = gmo_fit(obs, opts, truth.m0);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)); };
    ok = ok && !fit.rank_deficient && close(fit.params.alpha, truth.alpha) &&
         close(fit.params.beta, truth.beta) && close(fit.params.gamma, truth.gamma) &&
         close(fit.params.beta_prime, truth.beta_prime) &&
         close(fit.params.gamma_prime, truth.gamma_prime);

    report(11, "least-squares fits equal the normal-equations oracle; synthetic data round-trips",
           ok, detail);
}

void criterion_12_catalog_validation() {
    auto findings = validate_catalog();
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& f : findings) got.emplace_back(f.entity, f.kind);
    std::sort(got.begin(), got.end());
    std::vector<std::pair<std::string, std::string>> expect = {{"Xi-", "label-note"},
                                                               {"eta", "signature"},
                                                               {"p", "u-coefficient"},
                                                               {"phi", "signature"}};
    std::sort(expect.begin(), expect.end());
    report(12, "validator reports exactly the documented anomaly set over all 24 states",
           got == expect);
}

void criterion_13_okubo() {
    const auto& A = su3::okubo_basis3();
    auto delta = [](int x, int y) { return x == y ? Rational(1) : Rational(0); };
    bool ok = true;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                for (int m = 1; m <= 3; ++m) {
                    su3::Mat3r lhs = su3::mat3_sub(su3::mat3_mul(A.at(i, k), A.at(l, m)),
                                                   su3::mat3_mul(A.at(l, m), A.at(i, k)));
                    su3::Mat3r rhs = su3::mat3_sub(su3::mat3_scale(delta(i, m), A.at(l, k)),
                                                   su3::mat3_scale(delta(l, k), A.at(i, m)));
                    if (!su3::mat3_eq(lhs, rhs)) ok = false;
                }

    // embedded 2x2 operators
    su3::Su2Embedding e = su3::su2_embedding();
    su3::Mat3r want = su3::mat3_zero();
    want[0][0] = Rational(1, 2);
    want[1][1] = Rational(-1, 2);
    ok = ok && su3::mat3_eq(e.a11, want);
    ok = ok && su3::mat3_eq(su3::mat3_add(e.a11, e.a22), su3::mat3_zero());
    ok = ok && e.a21[0][1] == Rational(1) && e.a12[1][0] == Rational(1);

    // adjoint images preserve every commutator exactly
    std::vector<su3::Mat3r> gens;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            if (!(i == 2 && k == 2)) gens.push_back(A.at(i, k));
    for (const auto& x : gens)
        for (const auto& y : gens) {
            su3::Mat3r c = su3::mat3_sub(su3::mat3_mul(x, y), su3::mat3_mul(y, x));
            su3::Mat8r lhs = su3::adjoint_image(c);
            su3::Mat8r ax = su3::adjoint_image(x);
            su3::Mat8r ay = su3::adjoint_image(y);
            for (int r = 0; r < 8; ++r)
                for (int col = 0; col < 8; ++col) {
                    Rational s(0);
                    for (int k2 = 0; k2 < 8; ++k2)
                        s += ax[static_cast<size_t>(r)][static_cast<size_t>(k2)] *
                                 ay[static_cast<size_t>(k2)][static_cast<size_t>(col)] -
                             ay[static_cast<size_t>(r)][static_cast<size_t>(k2)] *
                                 ax[static_cast<size_t>(k2)][static_cast<size_t>(col)];
                    if (s != lhs[static_cast<size_t>(r)][static_cast<size_t>(col)]) ok = false;
                }
        }
    report(13, "operator basis: 81 exact commutators, embedded su(2), adjoint preservation", ok);
}

}  // namespace

int main() {
    criterion_1_degree_table();
    criterion_2_catalog_degrees();
    criterion_3_commutator_suite();
    criterion_4_lambda3_fixture();
    criterion_5_bivector_metric();
    criterion_6_dirac_l();
    criterion_7_conjugation_suite();
    criterion_8_cpt_table();
    criterion_9_search();
    criterion_10_closure();
    criterion_11_fit_oracle();
    criterion_12_catalog_validation();
    criterion_13_okubo();

    if (criteria_failed == 0) {
        std::cout << "acceptance: all 13 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << criteria_failed << " criteria failed\n";
    return 1;
}
