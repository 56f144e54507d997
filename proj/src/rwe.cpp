#include "spinrep/rwe.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <map>

namespace spinrep {

Matrix4ll minkowski_metric() {
    Matrix4ll g = Matrix4ll::Zero();
    g(0, 0) = -1;
    g(1, 1) = -1;
    g(2, 2) = -1;
    g(3, 3) = 1;
    return g;
}

const BivectorOrder& bivector_order() {
    // Boost pairs first, rotations after; written with collective labels in
    // which 0 names the timelike axis (stored last in the metric).
    static const BivectorOrder order = [] {
        BivectorOrder o;
        o.label_pairs = {{{1, 0}, {2, 0}, {3, 0}, {2, 3}, {3, 1}, {1, 2}}};
        o.names = {"10", "20", "30", "23", "31", "12"};
        return o;
    }();
    return order;
}

namespace {

// Collective label -> storage axis: labels 1,2,3 are axes 0,1,2 and the
// timelike label 0 is the last axis.
int label_axis(int label) { return label == 0 ? 3 : label - 1; }

}  // namespace

Matrix6ll bivector_metric(const Matrix4ll& g) {
    if (g != g.transpose()) throw std::invalid_argument("bivector_metric: metric must be symmetric");
    const auto& order = bivector_order();
    Matrix6ll out = Matrix6ll::Zero();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int a = label_axis(order.label_pairs[static_cast<size_t>(i)].first);
            int b = label_axis(order.label_pairs[static_cast<size_t>(i)].second);
            int c = label_axis(order.label_pairs[static_cast<size_t>(j)].first);
            int d = label_axis(order.label_pairs[static_cast<size_t>(j)].second);
            out(i, j) = g(a, c) * g(b, d) - g(a, d) * g(b, c);
        }
    return out;
}

GammaSet dirac_gamma_set() {
    using C = std::complex<double>;
    GammaSet set;
    Eigen::Matrix2cd s1, s2, s3, id;
    s1 << C(0), C(1), C(1), C(0);
    s2 << C(0), C(0, -1), C(0, 1), C(0);
    s3 << C(1), C(0), C(0), C(-1);
    id = Eigen::Matrix2cd::Identity();

    for (auto& m : set.gamma) m = Eigen::MatrixXcd::Zero(4, 4);
    set.gamma[0].topLeftCorner(2, 2) = id;
    set.gamma[0].bottomRightCorner(2, 2) = -id;
    const Eigen::Matrix2cd sig[3] = {s1, s2, s3};
    for (int i = 0; i < 3; ++i) {
        set.gamma[static_cast<size_t>(i + 1)].topRightCorner(2, 2) = sig[i];
        set.gamma[static_cast<size_t>(i + 1)].bottomLeftCorner(2, 2) = -sig[i];
    }
    return set;
}

Eigen::MatrixXcd gamma_of_p(const GammaSet& g, const std::array<double, 4>& p) {
    return g.gamma[0] * p[0] - g.gamma[1] * p[1] - g.gamma[2] * p[2] - g.gamma[3] * p[3];
}

PairingReport pm_pairing_check(const Eigen::MatrixXcd& g0, double tol) {
    PairingReport report;
    if (!g0.allFinite()) throw std::invalid_argument("pm_pairing_check: non-finite entries");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(g0, false);
    std::vector<std::complex<double>> evs(solver.eigenvalues().data(),
                                          solver.eigenvalues().data() + g0.rows());
    std::sort(evs.begin(), evs.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    report.eigenvalues = evs;

    double scale = 0.0;
    for (auto v : evs) scale = std::max(scale, std::abs(v));
    double eps = tol * std::max(1.0, scale);

    std::vector<bool> used(evs.size(), false);
    for (size_t i = 0; i < evs.size(); ++i) {
        if (used[i] || std::abs(evs[i]) <= eps) continue;
        bool matched = false;
        for (size_t j = 0; j < evs.size(); ++j) {
            if (j == i || used[j]) continue;
            if (std::abs(evs[i] + evs[j]) <= eps) {
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) {
            report.paired = false;
            report.message = "unpaired eigenvalue " + std::to_string(evs[i].real());
            return report;
        }
    }
    report.paired = true;
    report.message = "spectrum symmetric under negation";
    return report;
}

MassSpectrum mass_spectrum_from_gamma0(const Eigen::MatrixXcd& g0, double mu0, double tol) {
    MassSpectrum out;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(g0, false);
    double scale = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
        scale = std::max(scale, std::abs(solver.eigenvalues()[i]));
    double eps = tol * std::max(1.0, scale);
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        std::complex<double> ev = solver.eigenvalues()[i];
        if (std::abs(ev.imag()) > eps) {
            out.complex_eigenvalues.push_back(ev);
        } else if (ev.real() > eps) {
            out.masses.push_back(mu0 * ev.real());
        }
    }
    std::sort(out.masses.rbegin(), out.masses.rend());
    // merge numerically equal masses arising from degenerate eigenvalues
    std::vector<double> merged;
    for (double m : out.masses)
        if (merged.empty() || std::abs(merged.back() - m) > eps * std::max(1.0, std::abs(m)))
            merged.push_back(m);
    out.masses = merged;
    return out;
}

namespace {

double invariant_s2(const std::array<double, 4>& p) {
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
}

std::complex<double> det_at(const GammaSet& g, double m, const std::array<double, 4>& p) {
    Eigen::MatrixXcd mat = gamma_of_p(g, p);
    mat += m * Eigen::MatrixXcd::Identity(mat.rows(), mat.cols());
    return mat.determinant();
}

// Evaluates the determinant polynomial as a function of s^2 alone by picking
// a canonical representative momentum on the hyperboloid.
std::complex<double> det_of_s2(const GammaSet& g, double m, double s2) {
    std::array<double, 4> p{0, 0, 0, 0};
    if (s2 >= 0)
        p[0] = std::sqrt(s2);
    else
        p[1] = std::sqrt(-s2);
    return det_at(g, m, p);
}

}  // namespace

DetFactorizationReport det_factorization_check(const GammaSet& g, double m,
                                               const std::vector<std::array<double, 4>>& samples,
                                               double tol) {
    if (samples.empty()) throw std::invalid_argument("det_factorization_check: no samples");
    DetFactorizationReport report;

    std::map<long long, DetFactorizationReport::Group> groups;  // key: rounded s2 bucket
    double smin = 1e300, smax = -1e300;
    for (const auto& p : samples) {
        double s2 = invariant_s2(p);
        smin = std::min(smin, s2);
        smax = std::max(smax, s2);
        long long key = llround(s2 / std::max(tol, 1e-12));
        auto& grp = groups[key];
        grp.s2 = s2;
        grp.determinants.push_back(det_at(g, m, p));
    }
    report.constant_on_hyperboloids = true;
    for (auto& [key, grp] : groups) {
        double scale = 0.0;
        for (auto d : grp.determinants) scale = std::max(scale, std::abs(d));
        double dev = 0.0;
        for (auto d : grp.determinants) dev = std::max(dev, std::abs(d - grp.determinants[0]));
        grp.max_rel_deviation = scale > 0 ? dev / scale : dev;
        if (grp.max_rel_deviation > 1e-9) report.constant_on_hyperboloids = false;
        report.groups.push_back(grp);
    }

    // Root scan over the sampled s^2 range: bisect across sign changes of the
    // real part and record grid points where |det| dips below tolerance.
    const int kGrid = 4096;
    double lo = smin - 1.0, hi = smax + 1.0;
    double prev_s2 = lo;
    std::complex<double> prev = det_of_s2(g, m, lo);
    double det_scale = std::abs(prev) + 1.0;
    for (int i = 1; i <= kGrid; ++i) {
        double s2 = lo + (hi - lo) * i / kGrid;
        std::complex<double> cur = det_of_s2(g, m, s2);
        det_scale = std::max(det_scale, std::abs(cur));
        if (prev.real() * cur.real() < 0.0) {
            double a = prev_s2, b = s2;
            for (int it = 0; it < 200 && (b - a) > tol; ++it) {
                double mid = 0.5 * (a + b);
                double v = det_of_s2(g, m, mid).real();
                if (v * det_of_s2(g, m, a).real() <= 0.0)
                    b = mid;
                else
                    a = mid;
            }
            report.roots_s2.push_back(0.5 * (a + b));
        }
        prev = cur;
        prev_s2 = s2;
    }
    // even-order roots leave no sign change; refine local minima of |det|
    std::vector<double> mags(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) mags[static_cast<size_t>(i)] = std::abs(det_of_s2(g, m, lo + (hi - lo) * i / kGrid));
    for (int i = 1; i < kGrid; ++i) {
        if (!(mags[static_cast<size_t>(i)] <= mags[static_cast<size_t>(i - 1)] &&
              mags[static_cast<size_t>(i)] <= mags[static_cast<size_t>(i + 1)]))
            continue;
        double a = lo + (hi - lo) * (i - 1) / kGrid;
        double b = lo + (hi - lo) * (i + 1) / kGrid;
        for (int it = 0; it < 200 && (b - a) > tol * 1e-3; ++it) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (std::abs(det_of_s2(g, m, m1)) < std::abs(det_of_s2(g, m, m2)))
                b = m2;
            else
                a = m1;
        }
        double s2 = 0.5 * (a + b);
        if (std::abs(det_of_s2(g, m, s2)) > tol * det_scale) continue;
        bool dup = false;
        for (double r : report.roots_s2)
            if (std::abs(r - s2) <= 2.0 * (hi - lo) / kGrid) dup = true;
        if (!dup) report.roots_s2.push_back(s2);
    }
    std::sort(report.roots_s2.begin(), report.roots_s2.end());
    return report;
}

DiracLMatrices dirac_l_matrices(double c) {
    using C = std::complex<double>;
    DiracLMatrices out;
    Eigen::Matrix2cd s1, s2, s3;
    s1 << C(0), C(1), C(1), C(0);
    s2 << C(0), C(0, -1), C(0, 1), C(0);
    s3 << C(1), C(0), C(0), C(-1);
    out.l = {0.5 * c * s1, 0.5 * c * s2, 0.5 * c * s3};
    for (int i = 0; i < 3; ++i) out.l_conj[static_cast<size_t>(i)] = out.l[static_cast<size_t>(i)].conjugate();
    return out;
}

long long Lambda3::dimension() const {
    return (rep.l.twice + 1) * (rep.ldot.twice + 1);
}

Rational Lambda3::trace() const {
    Rational t(0);
    for (const auto& blk : blocks)
        for (const auto& v : blk) t += v;
    return t;
}

std::vector<Rational> Lambda3::eigenvalues() const {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(dimension()));
    for (const auto& blk : blocks) out.insert(out.end(), blk.begin(), blk.end());
    return out;
}

Lambda3 lambda3_generalized(HalfInt l, HalfInt ldot) {
    Lambda3 out;
    out.rep = RepLabel(l, ldot);
    for (long long t = ldot.twice; t >= -ldot.twice; t -= 2) {
        HalfInt mdot(t);
        out.block_mdot.push_back(mdot);
        std::vector<Rational> blk;
        blk.reserve(static_cast<size_t>(l.twice + 1));
        for (long long tm = l.twice; tm >= -l.twice; tm -= 2) blk.push_back(HalfInt(tm) * mdot);
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

std::array<SpMatC, 3> bivector_system_matrices(const RepLabel& rep, long long cap) {
    if (degree(rep) > cap)
        throw std::invalid_argument("bivector_system_matrices: degree exceeds cap");
    LadderOps lx = ladder_matrices(rep.l);
    LadderOps ly = ladder_matrices(rep.ldot);
    std::array<Eigen::MatrixXcd, 3> jx = {lx.j1().cast<std::complex<double>>(), lx.j2c(),
                                          lx.third().cast<std::complex<double>>()};
    std::array<Eigen::MatrixXcd, 3> jy = {ly.j1().cast<std::complex<double>>(), ly.j2c(),
                                          ly.third().cast<std::complex<double>>()};

    std::array<SpMatC, 3> out;
    long long dx = lx.dim, dy = ly.dim;
    for (int k = 0; k < 3; ++k) {
        std::vector<Eigen::Triplet<std::complex<double>>> trips;
        Eigen::MatrixXcd yconj = jy[static_cast<size_t>(k)].conjugate();
        for (int r = 0; r < dx; ++r)
            for (int c = 0; c < dx; ++c) {
                std::complex<double> v = jx[static_cast<size_t>(k)](r, c);
                if (v == std::complex<double>(0)) continue;
                for (int j = 0; j < dy; ++j)
                    trips.emplace_back(r * dy + j, c * dy + j, v);
            }
        for (int r = 0; r < dy; ++r)
            for (int c = 0; c < dy; ++c) {
                std::complex<double> v = -yconj(r, c);
                if (v == std::complex<double>(0)) continue;
                for (int i = 0; i < dx; ++i)
                    trips.emplace_back(i * dy + r, i * dy + c, v);
            }
        SpMatC mat(dx * dy, dx * dy);
        mat.setFromTriplets(trips.begin(), trips.end());
        out[static_cast<size_t>(k)] = mat;
    }
    return out;
}

}  // namespace spinrep
