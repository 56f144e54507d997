#include "spinrep/su3.hpp"

#include <algorithm>
#include <set>

namespace spinrep {
namespace su3 {

long long degree(const YoungPQ& pq) {
    long long p = pq.p, q = pq.q;
    return (p + 1) * (q + 1) * (p + q + 2) / 2;
}

std::vector<std::vector<long long>> degrees_table(int max) {
    if (max < 0) throw std::invalid_argument("degrees_table: max must be non-negative");
    std::vector<std::vector<long long>> table(static_cast<size_t>(max) + 1);
    for (int p = 0; p <= max; ++p) {
        table[static_cast<size_t>(p)].resize(static_cast<size_t>(max) + 1);
        for (int q = 0; q <= max; ++q)
            table[static_cast<size_t>(p)][static_cast<size_t>(q)] = degree(YoungPQ(p, q));
    }
    return table;
}

bool admissible(const YoungPQ& pq) { return (pq.p - pq.q) % 3 == 0; }

std::vector<long long> admissible_degrees(long long max_degree) {
    std::set<long long> degrees;
    // (p+1)(q+1)(p+q+2)/2 >= (p+1)(p+2)/2, so p (and q) are bounded by the
    // triangular-number inverse of the requested cap.
    int bound = 1;
    while (static_cast<long long>(bound + 1) * (bound + 2) / 2 <= max_degree) ++bound;
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q) {
            YoungPQ pq(p, q);
            if (!admissible(pq)) continue;
            long long d = degree(pq);
            if (d <= max_degree) degrees.insert(d);
        }
    return {degrees.begin(), degrees.end()};
}

Mat3r mat3_zero() { return Mat3r{}; }

Mat3r mat3_identity() {
    Mat3r m{};
    for (int i = 0; i < 3; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
    return m;
}

Mat3r mat3_add(const Mat3r& a, const Mat3r& b) {
    Mat3r out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] + b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

Mat3r mat3_sub(const Mat3r& a, const Mat3r& b) {
    Mat3r out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] - b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

Mat3r mat3_mul(const Mat3r& a, const Mat3r& b) {
    Mat3r out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s(0);
            for (int k = 0; k < 3; ++k)
                s += a[static_cast<size_t>(i)][static_cast<size_t>(k)] * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    return out;
}

Mat3r mat3_scale(const Rational& s, const Mat3r& a) {
    Mat3r out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = s * a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

bool mat3_eq(const Mat3r& a, const Mat3r& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != b[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
    return true;
}

Rational mat3_trace(const Mat3r& a) {
    return a[0][0] + a[1][1] + a[2][2];
}

namespace {

OkuboBasis3 build_okubo_basis() {
    OkuboBasis3 b{};
    // A^i_k is the matrix unit with its 1 at row k, column i for i != k,
    // and the traceless diagonal combination for i == k.
    for (int upper = 1; upper <= 3; ++upper)
        for (int lower = 1; lower <= 3; ++lower) {
            Mat3r m = mat3_zero();
            if (upper == lower) {
                for (int j = 0; j < 3; ++j)
                    m[static_cast<size_t>(j)][static_cast<size_t>(j)] =
                        (j == upper - 1) ? Rational(2, 3) : Rational(-1, 3);
            } else {
                m[static_cast<size_t>(lower - 1)][static_cast<size_t>(upper - 1)] = Rational(1);
            }
            b.a[upper - 1][lower - 1] = m;
        }
    return b;
}

}  // namespace

const OkuboBasis3& okubo_basis3() {
    static const OkuboBasis3 basis = build_okubo_basis();
    return basis;
}

const Mat3r& Su2Embedding::at(int upper, int lower) const {
    if (upper == 1 && lower == 1) return a11;
    if (upper == 1 && lower == 2) return a12;
    if (upper == 2 && lower == 1) return a21;
    if (upper == 2 && lower == 2) return a22;
    throw std::invalid_argument("Su2Embedding: index out of range");
}

Su2Embedding su2_embedding() {
    const auto& A = okubo_basis3();
    Rational h(1, 2);
    Su2Embedding e;
    e.a11 = mat3_add(A.at(1, 1), mat3_scale(h, A.at(3, 3)));
    e.a22 = mat3_add(A.at(2, 2), mat3_scale(h, A.at(3, 3)));
    e.a12 = A.at(1, 2);
    e.a21 = A.at(2, 1);
    return e;
}

SpinFixations spin_fixations() {
    const auto& A = okubo_basis3();
    Rational h(1, 2);
    SpinFixations f;
    f.i3 = mat3_add(A.at(1, 1), mat3_scale(h, A.at(3, 3)));
    f.u3 = mat3_add(A.at(3, 3), mat3_scale(h, A.at(1, 1)));
    f.v3 = mat3_add(A.at(1, 1), mat3_scale(h, A.at(2, 2)));
    return f;
}

namespace {

// Adjoint coordinate basis: the six off-diagonal operators in a fixed order,
// then A^1_1 and A^3_3 spanning the diagonal traceless part.
struct AdjointBasisEntry {
    int upper;
    int lower;
};
constexpr AdjointBasisEntry kOffDiag[6] = {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};

}  // namespace

std::array<Rational, 8> mat3_to_adjoint_coords(const Mat3r& x) {
    if (mat3_trace(x) != Rational(0))
        throw std::invalid_argument("mat3_to_adjoint_coords: matrix must be traceless");
    std::array<Rational, 8> coords{};
    const auto& A = okubo_basis3();
    // Off-diagonal coefficients read off the matching matrix unit slot.
    for (int k = 0; k < 6; ++k) {
        const auto& e = kOffDiag[static_cast<size_t>(k)];
        // A^i_k has its unit at row (lower-1), column (upper-1)
        coords[static_cast<size_t>(k)] =
            x[static_cast<size_t>(e.lower - 1)][static_cast<size_t>(e.upper - 1)];
    }
    // Diagonal part: x_diag = c6 * A^1_1 + c7 * A^3_3 with c6 = m1 - m2,
    // c7 = m3 - m2 for diag(m1, m2, m3).
    coords[6] = x[0][0] - x[1][1];
    coords[7] = x[2][2] - x[1][1];
    // verify the expansion reproduces x exactly
    Mat3r rebuilt = mat3_add(mat3_scale(coords[6], A.at(1, 1)), mat3_scale(coords[7], A.at(3, 3)));
    for (int k = 0; k < 6; ++k) {
        const auto& e = kOffDiag[static_cast<size_t>(k)];
        rebuilt = mat3_add(rebuilt, mat3_scale(coords[static_cast<size_t>(k)], A.at(e.upper, e.lower)));
    }
    if (!mat3_eq(rebuilt, x)) throw std::logic_error("mat3_to_adjoint_coords: expansion failed");
    return coords;
}

Mat8r adjoint_image(const Mat3r& x) {
    const auto& A = okubo_basis3();
    Mat8r out{};
    auto basis_mat = [&](int k) -> Mat3r {
        if (k < 6) {
            const auto& e = kOffDiag[static_cast<size_t>(k)];
            return A.at(e.upper, e.lower);
        }
        return k == 6 ? A.at(1, 1) : A.at(3, 3);
    };
    for (int col = 0; col < 8; ++col) {
        Mat3r b = basis_mat(col);
        Mat3r comm = mat3_sub(mat3_mul(x, b), mat3_mul(b, x));
        auto coords = mat3_to_adjoint_coords(comm);
        for (int row = 0; row < 8; ++row)
            out[static_cast<size_t>(row)][static_cast<size_t>(col)] = coords[static_cast<size_t>(row)];
    }
    return out;
}

Eigen::MatrixXd charge_operator(double alpha, double beta, double gamma, int dimension) {
    const auto& A = okubo_basis3();
    if (dimension == 3) {
        Eigen::Matrix3d out = Eigen::Matrix3d::Identity() * gamma;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                out(i, j) += alpha * A.at(1, 1)[static_cast<size_t>(i)][static_cast<size_t>(j)].value() +
                             beta * A.at(3, 3)[static_cast<size_t>(i)][static_cast<size_t>(j)].value();
        return out;
    }
    if (dimension == 8) {
        Mat8r a11 = adjoint_image(A.at(1, 1));
        Mat8r a33 = adjoint_image(A.at(3, 3));
        Eigen::MatrixXd out = Eigen::MatrixXd::Identity(8, 8) * gamma;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                out(i, j) += alpha * a11[static_cast<size_t>(i)][static_cast<size_t>(j)].value() +
                             beta * a33[static_cast<size_t>(i)][static_cast<size_t>(j)].value();
        return out;
    }
    throw std::invalid_argument("charge_operator: dimension must be 3 or 8");
}

Mat3r hypercharge_operator() {
    return mat3_scale(Rational(-1), okubo_basis3().at(3, 3));
}

Eigen::Matrix3d unitary_field(double C, double Cprime) {
    Eigen::Matrix3d first, second;
    first << 1.0 / 3, 0, 0, 0, 1.0 / 3, 0, 0, 0, -2.0 / 3;
    second << 2.0 / 3, 0, 0, 0, -1.0 / 3, 0, 0, 0, -1.0 / 3;
    return C * first + Cprime * second;
}

Mat3r unitary_field_exact(const Rational& C, const Rational& Cprime) {
    Mat3r first{}, second{};
    first[0][0] = Rational(1, 3);
    first[1][1] = Rational(1, 3);
    first[2][2] = Rational(-2, 3);
    second[0][0] = Rational(2, 3);
    second[1][1] = Rational(-1, 3);
    second[2][2] = Rational(-1, 3);
    return mat3_add(mat3_scale(C, first), mat3_scale(Cprime, second));
}

std::array<int, 4> reduction_811() { return {3, 2, 2, 1}; }

}  // namespace su3
}  // namespace spinrep
