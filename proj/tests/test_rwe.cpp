#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "spinrep/rwe.hpp"

using namespace spinrep;

TEST_CASE("bivector metric of the default metric") {
    Matrix6ll g6 = bivector_metric(minkowski_metric());
    Matrix6ll expect = Matrix6ll::Zero();
    expect(0, 0) = -1;
    expect(1, 1) = -1;
    expect(2, 2) = -1;
    expect(3, 3) = 1;
    expect(4, 4) = 1;
    expect(5, 5) = 1;
    CHECK(g6 == expect);
}

TEST_CASE("bivector metric of the euclidean metric is the identity") {
    Matrix4ll g = Matrix4ll::Identity();
    CHECK(bivector_metric(g) == Matrix6ll::Identity());
}

TEST_CASE("bivector metric is even in the metric") {
    Matrix4ll g = minkowski_metric();
    Matrix4ll neg = -g;
    CHECK(bivector_metric(g) == bivector_metric(neg));
}

TEST_CASE("gamma of p evaluates the symbol") {
    GammaSet dirac = dirac_gamma_set();
    Eigen::MatrixXcd at_rest = gamma_of_p(dirac, {1, 0, 0, 0});
    CHECK((at_rest - dirac.gamma[0]).cwiseAbs().maxCoeff() == 0.0);
    Eigen::MatrixXcd zero = gamma_of_p(dirac, {0, 0, 0, 0});
    CHECK(zero.cwiseAbs().maxCoeff() == 0.0);

    // at rest the eigenvalues are +-m, each twice
    double m = 2.5;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(gamma_of_p(dirac, {m, 0, 0, 0}), false);
    int plus = 0, minus = 0;
    for (int i = 0; i < 4; ++i) {
        std::complex<double> ev = es.eigenvalues()[i];
        CHECK(std::abs(ev.imag()) < 1e-12);
        if (std::abs(ev.real() - m) < 1e-12) ++plus;
        if (std::abs(ev.real() + m) < 1e-12) ++minus;
    }
    CHECK(plus == 2);
    CHECK(minus == 2);
}

TEST_CASE("plus-minus pairing check") {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(4, 4);
    diag(0, 0) = 1;
    diag(1, 1) = 1;
    diag(2, 2) = -1;
    diag(3, 3) = -1;
    CHECK(pm_pairing_check(diag).paired);

    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(3, 3);
    bad(0, 0) = 1;
    bad(1, 1) = 2;
    bad(2, 2) = 3;
    CHECK(!pm_pairing_check(bad).paired);

    Eigen::MatrixXcd with_zero = Eigen::MatrixXcd::Zero(3, 3);
    with_zero(0, 0) = 2;
    with_zero(1, 1) = -2;
    CHECK(pm_pairing_check(with_zero).paired);

    Eigen::MatrixXcd nan = Eigen::MatrixXcd::Constant(2, 2, std::nan(""));
    CHECK_THROWS(pm_pairing_check(nan));
}

TEST_CASE("mass spectrum from the time component matrix") {
    Eigen::MatrixXcd g2 = Eigen::MatrixXcd::Zero(2, 2);
    g2(0, 0) = 1;
    g2(1, 1) = -1;
    MassSpectrum s2 = mass_spectrum_from_gamma0(g2, 1.0);
    REQUIRE(s2.masses.size() == 1);
    CHECK(s2.masses[0] == doctest::Approx(1.0));

    MassSpectrum dirac = mass_spectrum_from_gamma0(dirac_gamma_set().gamma[0], 0.511);
    REQUIRE(dirac.masses.size() == 1);
    CHECK(dirac.masses[0] == doctest::Approx(0.511));

    Eigen::MatrixXcd g4 = Eigen::MatrixXcd::Zero(4, 4);
    g4(0, 0) = 2;
    g4(1, 1) = 1;
    g4(2, 2) = -1;
    g4(3, 3) = -2;
    MassSpectrum s4 = mass_spectrum_from_gamma0(g4, 1.0);
    REQUIRE(s4.masses.size() == 2);
    CHECK(s4.masses[0] == doctest::Approx(2.0));
    CHECK(s4.masses[1] == doctest::Approx(1.0));
    CHECK(s4.complex_eigenvalues.empty());
}

TEST_CASE("determinant factorization for the spin-1/2 system") {
    GammaSet dirac = dirac_gamma_set();
    double m = 1.25;

    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<std::array<double, 4>> samples;
    for (int i = 0; i < 100; ++i)
        samples.push_back({dist(rng), dist(rng), dist(rng), dist(rng)});
    // determinant equals (s^2 - m^2)^2 at every sample
    for (const auto& p : samples) {
        double s2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
        Eigen::MatrixXcd mat = gamma_of_p(dirac, p);
        mat += m * Eigen::MatrixXcd::Identity(4, 4);
        std::complex<double> det = mat.determinant();
        double expect = (s2 - m * m) * (s2 - m * m);
        CHECK(std::abs(det - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
    }

    // two samples on one hyperboloid share the determinant
    std::vector<std::array<double, 4>> on_shell = {{2.0, 1.0, 0.5, 0.25},
                                                   {2.0, 0.5, 1.0, 0.25},
                                                   {std::sqrt(4.0 + 1.0), 1.0, 1.0, 1.0}};
    DetFactorizationReport rep = det_factorization_check(dirac, m, on_shell);
    CHECK(rep.constant_on_hyperboloids);

    // the root sits at s^2 = m^2
    bool found = false;
    for (double r : rep.roots_s2)
        if (std::abs(r - m * m) < 1e-3) found = true;
    CHECK(found);

    // a sample exactly on the mass shell makes the determinant vanish
    std::array<double, 4> shell = {std::hypot(m, 1.0), 1.0, 0.0, 0.0};
    Eigen::MatrixXcd mat = gamma_of_p(dirac, shell);
    mat += m * Eigen::MatrixXcd::Identity(4, 4);
    CHECK(std::abs(mat.determinant()) < 1e-7);
}

TEST_CASE("first-order system 2x2 blocks scale with the coupling") {
    DiracLMatrices pauli = dirac_l_matrices(2.0);
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << std::complex<double>(0, 0), std::complex<double>(0, -1), std::complex<double>(0, 1),
        std::complex<double>(0, 0);
    s3 << 1, 0, 0, -1;
    CHECK((pauli.l[0] - s1).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pauli.l[1] - s2).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pauli.l[2] - s3).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pauli.l_conj[1] + s2).cwiseAbs().maxCoeff() == 0.0);

    DiracLMatrices zero = dirac_l_matrices(0.0);
    for (const auto& l : zero.l) CHECK(l.cwiseAbs().maxCoeff() == 0.0);

    DiracLMatrices halves = dirac_l_matrices(1.0);
    CHECK((2.0 * halves.l[2] - s3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("block-diagonal weight operator of the nucleon label") {
    Lambda3 lam = lambda3_generalized(HalfInt(59), HalfInt(58));
    CHECK(lam.dimension() == 3540);
    REQUIRE(lam.blocks.size() == 59);  // mdot = 29 .. -29

    // first block: 1711/2 stepping -29
    const auto& b1 = lam.blocks[0];
    REQUIRE(b1.size() == 60);
    CHECK(b1[0] == Rational(1711, 2));
    CHECK(b1[1] == Rational(1653, 2));
    CHECK(b1[2] == Rational(1595, 2));
    for (size_t i = 0; i + 1 < b1.size(); ++i) CHECK(b1[i + 1] - b1[i] == Rational(-29));
    CHECK(b1.back() == Rational(-1711, 2));

    // second block: 826 stepping -28
    const auto& b2 = lam.blocks[1];
    CHECK(b2[0] == Rational(826));
    CHECK(b2[1] == Rational(798));
    CHECK(b2[2] == Rational(770));
    for (size_t i = 0; i + 1 < b2.size(); ++i) CHECK(b2[i + 1] - b2[i] == Rational(-28));

    // third block: 1593/2
    CHECK(lam.blocks[2][0] == Rational(1593, 2));
    CHECK(lam.blocks[2][1] == Rational(1539, 2));

    // block 29: 59/2 .. -59/2
    const auto& b29 = lam.blocks[28];
    CHECK(b29[0] == Rational(59, 2));
    CHECK(b29[1] == Rational(57, 2));
    CHECK(b29.back() == Rational(-59, 2));

    // central zero block has the full factor dimension 60
    const auto& zero = lam.blocks[29];
    CHECK(zero.size() == 60);
    for (const auto& v : zero) CHECK(v == Rational(0));

    // mirrored negated blocks
    for (size_t k = 0; k < 29; ++k) {
        const auto& pos = lam.blocks[k];
        const auto& neg = lam.blocks[58 - k];
        REQUIRE(pos.size() == neg.size());
        for (size_t i = 0; i < pos.size(); ++i) CHECK(neg[i] == -pos[i]);
    }

    CHECK(lam.trace() == Rational(0));
}

TEST_CASE("weight operator blocks for degenerate labels") {
    Lambda3 tiny = lambda3_generalized(HalfInt(1), HalfInt(0));
    CHECK(tiny.dimension() == 2);
    REQUIRE(tiny.blocks.size() == 1);
    CHECK(tiny.blocks[0] == std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("weight operator eigenvalues match the brute-force outer product") {
    for (auto [tl, tld] : std::vector<std::pair<long long, long long>>{
             {1, 1}, {4, 3}, {7, 2}, {59, 58}}) {
        Lambda3 lam = lambda3_generalized(HalfInt(tl), HalfInt(tld));
        std::vector<Rational> expect;
        for (long long tmd = tld; tmd >= -tld; tmd -= 2)
            for (long long tm = tl; tm >= -tl; tm -= 2)
                expect.push_back(HalfInt(tm) * HalfInt(tmd));
        CHECK(lam.eigenvalues() == expect);
        CHECK(lam.trace() == Rational(0));

        // spectrum symmetric under negation
        auto evs = lam.eigenvalues();
        std::vector<double> vals;
        for (const auto& e : evs) vals.push_back(e.value());
        std::sort(vals.begin(), vals.end());
        for (size_t i = 0; i < vals.size(); ++i)
            CHECK(vals[i] == doctest::Approx(-vals[vals.size() - 1 - i]));
    }
}

TEST_CASE("weight operator spectra pass the pairing check as matrices") {
    for (auto [tl, tld] : std::vector<std::pair<long long, long long>>{{3, 2}, {5, 4}, {2, 2}}) {
        Lambda3 lam = lambda3_generalized(HalfInt(tl), HalfInt(tld));
        long long d = lam.dimension();
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
        long long i = 0;
        for (const auto& blk : lam.blocks)
            for (const auto& v : blk) diag(i, i) = v.value(), ++i;
        CHECK(pm_pairing_check(diag).paired);
    }
}

TEST_CASE("difference-form system matrices") {
    // single factor: reduces to the plain su(2) matrices
    auto chiral = bivector_system_matrices(RepLabel::from_twice(1, 0));
    Eigen::MatrixXcd l3 = Eigen::MatrixXcd(chiral[2]);
    CHECK(l3(0, 0).real() == doctest::Approx(0.5));
    CHECK(l3(1, 1).real() == doctest::Approx(-0.5));

    // (1/2,1/2): third component has eigenvalues m - mdot = {1, 0, 0, -1}
    auto sys = bivector_system_matrices(RepLabel::from_twice(1, 1));
    Eigen::MatrixXcd d3 = Eigen::MatrixXcd(sys[2]);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(d3, false);
    std::vector<double> evs;
    for (int i = 0; i < 4; ++i) evs.push_back(es.eigenvalues()[i].real());
    std::sort(evs.begin(), evs.end());
    CHECK(evs[0] == doctest::Approx(-1.0));
    CHECK(evs[1] == doctest::Approx(0.0));
    CHECK(evs[2] == doctest::Approx(0.0));
    CHECK(evs[3] == doctest::Approx(1.0));

    // the three difference matrices close like one angular momentum algebra
    for (auto [tl, tld] : std::vector<std::pair<long long, long long>>{{1, 1}, {3, 2}, {2, 2}}) {
        auto d = bivector_system_matrices(RepLabel::from_twice(tl, tld));
        Eigen::MatrixXcd m1 = Eigen::MatrixXcd(d[0]);
        Eigen::MatrixXcd m2 = Eigen::MatrixXcd(d[1]);
        Eigen::MatrixXcd m3 = Eigen::MatrixXcd(d[2]);
        std::complex<double> I(0, 1);
        CHECK((m1 * m2 - m2 * m1 - I * m3).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((m2 * m3 - m3 * m2 - I * m1).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((m3 * m1 - m1 * m3 - I * m2).cwiseAbs().maxCoeff() < 1e-10);
    }

    CHECK_THROWS(bivector_system_matrices(RepLabel::from_twice(200, 200)));
}
