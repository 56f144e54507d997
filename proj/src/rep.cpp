#include "spinrep/rep.hpp"

#include <cmath>

namespace spinrep {

long long degree(const RepLabel& rep) { return (rep.l.twice + 1) * (rep.ldot.twice + 1); }

HalfInt spin(const RepLabel& rep) { return (rep.l - rep.ldot).abs(); }

std::vector<HalfInt> spin_values(const RepLabel& rep) {
    HalfInt s = spin(rep);
    std::vector<HalfInt> out;
    for (long long t = -s.twice; t <= s.twice; t += 2) out.push_back(HalfInt(t));
    return out;
}

std::vector<HalfInt> clebsch_gordan_spins(const RepLabel& rep) {
    long long k = rep.l.twice;
    long long r = rep.ldot.twice;
    long long top = k + r;                       // twice (k+r)/2
    long long bottom = k > r ? k - r : r - k;    // twice |k-r|/2
    std::vector<HalfInt> out;
    for (long long t = top; t >= bottom; t -= 2) out.push_back(HalfInt(t));
    return out;
}

GelfandNaimarkPair to_gelfand_naimark(const RepLabel& rep) {
    // l0 = l + ldot, l1 = l - ldot + 1
    return {rep.l + rep.ldot, rep.l - rep.ldot + HalfInt::whole(1)};
}

RepLabel from_gelfand_naimark(const GelfandNaimarkPair& pair) {
    // l = (l0 + l1 - 1)/2, ldot = (l0 - l1 + 1)/2
    long long tl = pair.l0.twice + pair.l1.twice - 2;
    long long tld = pair.l0.twice - pair.l1.twice + 2;
    if (tl % 2 != 0 || tld % 2 != 0)
        throw std::invalid_argument("from_gelfand_naimark: pair does not map to half-integer weights");
    if (tl < 0 || tld < 0)
        throw std::invalid_argument("from_gelfand_naimark: pair produces negative weights");
    return RepLabel::from_twice(tl / 2, tld / 2);
}

long long ladder_entry_sq(HalfInt l, HalfInt m, int dir) {
    // dir=+1: (l-m)(l+m+1); dir=-1: (l+m)(l-m+1).  Both factors are integers.
    long long lm = (l - m).as_integer();
    long long lp = (l + m).as_integer();
    return dir > 0 ? lm * (lp + 1) : lp * (lm + 1);
}

Eigen::MatrixXd LadderOps::third() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) d(i, i) = scale * weights[i].value();
    return d;
}

Eigen::MatrixXd LadderOps::j1() const { return 0.5 * (plus + minus); }

Eigen::MatrixXd LadderOps::j2() const {
    // J2 = (plus - minus)/(2i) has purely imaginary entries; this returns the
    // real matrix M with J2 = iM, i.e. M = (minus - plus)/2.
    return 0.5 * (minus - plus);
}

Eigen::MatrixXcd LadderOps::j2c() const {
    std::complex<double> o_2i(0.0, -0.5);
    return o_2i * (plus - minus).cast<std::complex<double>>();
}

LadderOps ladder_matrices(HalfInt l, double scale) {
    if (l.twice < 0) throw std::invalid_argument("ladder_matrices: l must be non-negative");
    LadderOps ops;
    ops.l = l;
    ops.scale = scale;
    ops.dim = static_cast<int>(l.twice + 1);
    ops.plus = Eigen::MatrixXd::Zero(ops.dim, ops.dim);
    ops.minus = Eigen::MatrixXd::Zero(ops.dim, ops.dim);
    ops.weights.resize(ops.dim);
    // index i corresponds to m = l - i
    for (int i = 0; i < ops.dim; ++i) ops.weights[i] = HalfInt(l.twice - 2 * i);
    for (int i = 0; i < ops.dim; ++i) {
        HalfInt m = ops.weights[i];
        if (m < l) {
            // raising maps |l,m> to |l,m+1>, row index i-1... m+1 sits at index i-1
            double amp = std::sqrt(static_cast<double>(ladder_entry_sq(l, m, +1)));
            ops.plus(i - 1, i) = scale * amp;
        }
        if (-l < m) {
            double amp = std::sqrt(static_cast<double>(ladder_entry_sq(l, m, -1)));
            ops.minus(i + 1, i) = scale * amp;
        }
    }
    return ops;
}

namespace {

// Embeds op acting on one factor of a two-factor product into the full space.
// first=true: op (x) identity; first=false: identity (x) op.
SpMat embed(const Eigen::MatrixXd& op, int other_dim, bool first) {
    int d = static_cast<int>(op.rows());
    std::vector<Eigen::Triplet<double>> trips;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            double v = op(r, c);
            if (v == 0.0) continue;
            for (int j = 0; j < other_dim; ++j) {
                if (first)
                    trips.emplace_back(r * other_dim + j, c * other_dim + j, v);
                else
                    trips.emplace_back(j * d + r, j * d + c, v);
            }
        }
    SpMat out(d * other_dim, d * other_dim);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

}  // namespace

SpMat ProductOperators::xp() const { return embed(x_factor.plus, y_factor.dim, true); }
SpMat ProductOperators::xm() const { return embed(x_factor.minus, y_factor.dim, true); }
SpMat ProductOperators::x3() const { return embed(x_factor.third(), y_factor.dim, true); }
SpMat ProductOperators::yp() const { return embed(y_factor.plus, x_factor.dim, false); }
SpMat ProductOperators::ym() const { return embed(y_factor.minus, x_factor.dim, false); }
SpMat ProductOperators::y3() const { return embed(y_factor.third(), x_factor.dim, false); }

std::vector<HalfInt> ProductOperators::x3_diagonal() const {
    std::vector<HalfInt> out;
    out.reserve(static_cast<size_t>(dim()));
    for (const auto& m : x_factor.weights)
        for (int j = 0; j < y_factor.dim; ++j) {
            (void)j;
            out.push_back(m);
        }
    return out;
}

std::vector<HalfInt> ProductOperators::y3_diagonal() const {
    std::vector<HalfInt> out;
    out.reserve(static_cast<size_t>(dim()));
    for (int i = 0; i < x_factor.dim; ++i)
        for (const auto& md : y_factor.weights) {
            (void)i;
            out.push_back(md);
        }
    return out;
}

ProductOperators product_operators(const RepLabel& rep, double scale) {
    return ProductOperators{rep, ladder_matrices(rep.l, scale), ladder_matrices(rep.ldot, scale)};
}

Sl2cGenerators sl2c_generators(const RepLabel& rep) {
    ProductOperators ops = product_operators(rep);
    std::complex<double> I(0.0, 1.0);
    auto cmplx = [](const SpMat& m) { return SpMatC(m.cast<std::complex<double>>()); };

    std::array<SpMatC, 3> x;
    std::array<SpMatC, 3> y;
    SpMat xp = ops.xp(), xm = ops.xm(), yp = ops.yp(), ym = ops.ym();
    x[0] = cmplx(0.5 * (xp + xm));
    x[1] = SpMatC((-0.5 * I) * cmplx(xp - xm));
    x[2] = cmplx(ops.x3());
    y[0] = cmplx(0.5 * (yp + ym));
    y[1] = SpMatC((-0.5 * I) * cmplx(yp - ym));
    y[2] = cmplx(ops.y3());

    Sl2cGenerators gen;
    for (int i = 0; i < 3; ++i) {
        gen.a[i] = SpMatC((-I) * SpMatC(x[i] + y[i]));
        gen.b[i] = SpMatC(y[i] - x[i]);
    }
    return gen;
}

}  // namespace spinrep
