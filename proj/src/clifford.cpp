#include "spinrep/clifford.hpp"

#include <algorithm>
#include <functional>

namespace spinrep {

std::string GInt::str() const {
    if (im == 0) return std::to_string(re);
    if (re == 0) {
        if (im == 1) return "i";
        if (im == -1) return "-i";
        return std::to_string(im) + "i";
    }
    std::string s = std::to_string(re);
    s += (im > 0 ? "+" : "-");
    long long a = im > 0 ? im : -im;
    if (a != 1) s += std::to_string(a);
    s += "i";
    return s;
}

std::pair<bool, GInt> GMat::unit_scalar() const {
    GInt s = at(0, 0);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            if (r == c ? at(r, c) != s : !at(r, c).is_zero()) return {false, GInt(0)};
        }
    bool unit = (s == GInt(1)) || (s == GInt(-1)) || (s == GInt(0, 1)) || (s == GInt(0, -1));
    return {unit, s};
}

std::string to_string(DivisionRingKind k) {
    switch (k) {
        case DivisionRingKind::R: return "R";
        case DivisionRingKind::RplusR: return "R+R";
        case DivisionRingKind::C: return "C";
        case DivisionRingKind::H: return "H";
        case DivisionRingKind::HplusH: return "H+H";
    }
    return "?";
}

std::string to_string(ChargeClass c) {
    switch (c) {
        case ChargeClass::Charged: return "charged";
        case ChargeClass::Neutral: return "neutral";
        case ChargeClass::TrulyNeutral: return "truly-neutral";
    }
    return "?";
}

DivisionRingKind classify(const CliffordSignature& sig) {
    switch (sig.d_mod8()) {
        case 0:
        case 2: return DivisionRingKind::R;
        case 1: return DivisionRingKind::RplusR;
        case 3:
        case 7: return DivisionRingKind::C;
        case 4:
        case 6: return DivisionRingKind::H;
        case 5: return DivisionRingKind::HplusH;
    }
    throw std::logic_error("classify: unreachable");
}

ChargeClass charge_class(bool field_is_complex, DivisionRingKind ring) {
    if (field_is_complex) return ChargeClass::Charged;
    switch (ring) {
        case DivisionRingKind::H:
        case DivisionRingKind::HplusH: return ChargeClass::Neutral;
        case DivisionRingKind::R:
        case DivisionRingKind::RplusR: return ChargeClass::TrulyNeutral;
        case DivisionRingKind::C:
            throw std::invalid_argument("charge_class: real field with complex ring is unassigned");
    }
    throw std::logic_error("charge_class: unreachable");
}

int parity_square(const CliffordSignature& sig) {
    switch (sig.d_mod8()) {
        case 4: return +1;
        case 2:
        case 6: return -1;
        default:
            throw std::invalid_argument("parity_square: unassigned for p-q = " +
                                        std::to_string(sig.d_mod8()) + " (mod 8)");
    }
}

namespace {

// Pauli words over m tensor slots, packed two bits per slot
// (0 -> identity, 1..3 -> the three Pauli matrices).
int slot(unsigned word, int j) { return static_cast<int>((word >> (2 * j)) & 3u); }

bool words_anticommute(unsigned w1, unsigned w2, int m) {
    int odd = 0;
    for (int j = 0; j < m; ++j) {
        int a = slot(w1, j), b = slot(w2, j);
        if (a != 0 && b != 0 && a != b) odd ^= 1;
    }
    return odd == 1;
}

// Parity of the sigma_2 count; odd words are entrywise imaginary and
// antisymmetric under transposition.
bool word_q_odd(unsigned w, int m) {
    int c = 0;
    for (int j = 0; j < m; ++j)
        if (slot(w, j) == 2) c ^= 1;
    return c == 1;
}

GMat pauli(int which) {
    GMat s(2);
    switch (which) {
        case 0: return GMat::identity(2);
        case 1:
            s.at(0, 1) = GInt(1);
            s.at(1, 0) = GInt(1);
            return s;
        case 2:
            s.at(0, 1) = GInt(0, -1);
            s.at(1, 0) = GInt(0, 1);
            return s;
        case 3:
            s.at(0, 0) = GInt(1);
            s.at(1, 1) = GInt(-1);
            return s;
    }
    throw std::logic_error("pauli: bad index");
}

GMat word_matrix(unsigned word, int m, bool times_i) {
    GMat out = GMat::identity(1);
    for (int j = m - 1; j >= 0; --j) out = pauli(slot(word, j)).kron(out);
    return times_i ? out.scaled(GInt(0, 1)) : out;
}

// Finds ne even-parity and no odd-parity pairwise-anticommuting words,
// lexicographically first; empty optional when no such family exists.
std::optional<std::vector<unsigned>> find_words(int m, int ne, int no) {
    std::vector<unsigned> chosen;
    unsigned total = 1u << (2 * m);
    std::function<bool(unsigned, int, int)> dfs = [&](unsigned start, int needE, int needO) {
        if (needE == 0 && needO == 0) return true;
        for (unsigned w = start; w < total; ++w) {
            bool odd = word_q_odd(w, m);
            if (odd ? needO == 0 : needE == 0) continue;
            bool ok = true;
            for (unsigned c : chosen)
                if (!words_anticommute(w, c, m)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(w);
            if (dfs(w + 1, needE - (odd ? 0 : 1), needO - (odd ? 1 : 0))) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (m == 0) {
        if (ne == 0 && no == 0) return std::vector<unsigned>{};
        return std::nullopt;
    }
    if (dfs(1, ne, no)) return chosen;
    return std::nullopt;
}

struct CensusSplit {
    int e0, o0, e1, o1;  // even/odd-parity words hosting +1 and -1 generators
};

// Candidate censuses ordered by preference.  For a quaternionic ring the
// number of imaginary generators must be a = 2 (mod 4) with an even count of
// them squaring -1, which pins the conjugation product sign; for a real ring
// an all-real basis (a = 0) is preferred, with a = 0 (mod 4) fallbacks.
std::vector<CensusSplit> census_candidates(int p, int q, DivisionRingKind ring) {
    std::vector<CensusSplit> out;
    int n = p + q;
    auto push = [&](int a_target, bool e1_even_only) {
        for (int e1 = 0; e1 <= std::min(a_target, q); ++e1) {
            if (e1_even_only && e1 % 2 != 0) continue;
            int o0 = a_target - e1;
            if (o0 < 0 || o0 > p) continue;
            out.push_back({p - o0, o0, e1, q - e1});
        }
    };
    if (ring == DivisionRingKind::H) {
        for (int a = 2; a <= n; a += 4) push(a, true);
    } else {
        for (int a = 0; a <= n; a += 4) push(a, false);
    }
    // Last-resort sweep over every census so that a valid basis is always
    // produced even when no preferred census is realizable.
    for (int a = 0; a <= n; ++a) push(a, false);
    return out;
}

GammaBasis materialize(const CliffordSignature& sig, const std::vector<unsigned>& words,
                       const CensusSplit& cs, int m) {
    std::vector<unsigned> evens, odds;
    for (unsigned w : words) (word_q_odd(w, m) ? odds : evens).push_back(w);
    if (static_cast<int>(evens.size()) != cs.e0 + cs.e1 ||
        static_cast<int>(odds.size()) != cs.o0 + cs.o1)
        throw std::logic_error("materialize: census mismatch");

    GammaBasis basis;
    basis.sig = sig;
    auto add = [&](unsigned w, bool times_i) {
        basis.gamma.push_back(word_matrix(w, m, times_i));
        basis.squares.push_back(times_i ? -1 : +1);
        basis.imaginary.push_back(word_q_odd(w, m) != times_i);
    };
    for (int i = 0; i < cs.e0; ++i) add(evens[static_cast<size_t>(i)], false);
    for (int i = 0; i < cs.o0; ++i) add(odds[static_cast<size_t>(i)], false);
    for (int i = 0; i < cs.e1; ++i) add(evens[static_cast<size_t>(cs.e0 + i)], true);
    for (int i = 0; i < cs.o1; ++i) add(odds[static_cast<size_t>(cs.o0 + i)], true);
    return basis;
}

bool verify_basis(const GammaBasis& basis) {
    int n = static_cast<int>(basis.gamma.size());
    int dim = n == 0 ? 1 : basis.gamma[0].dim();
    GMat id = GMat::identity(dim);
    for (int i = 0; i < n; ++i) {
        GMat sq = basis.gamma[static_cast<size_t>(i)] * basis.gamma[static_cast<size_t>(i)];
        GMat expect = basis.squares[static_cast<size_t>(i)] > 0 ? id : -id;
        if (!(sq == expect)) return false;
        for (int j = i + 1; j < n; ++j)
            if (!basis.gamma[static_cast<size_t>(i)].anticommutes_with(
                    basis.gamma[static_cast<size_t>(j)]))
                return false;
    }
    return true;
}

// Pi must commute with real generators and anticommute with imaginary ones.
bool pi_intertwines(const GammaBasis& basis, const GMat& pi) {
    for (size_t i = 0; i < basis.gamma.size(); ++i) {
        const GMat& g = basis.gamma[i];
        GMat lhs = pi * g.conj();
        GMat rhs = g * pi;
        if (!(lhs == rhs)) return false;
    }
    return true;
}

GMat pi_product(const GammaBasis& basis, bool imaginary_ones) {
    int dim = basis.gamma.empty() ? 1 : basis.gamma[0].dim();
    GMat prod = GMat::identity(dim);
    for (size_t i = 0; i < basis.gamma.size(); ++i)
        if (basis.imaginary[i] == imaginary_ones) prod = prod * basis.gamma[i];
    return prod;
}

}  // namespace

GammaBasis gamma_basis(const CliffordSignature& sig, int cap) {
    int n = sig.n();
    if (n % 2 != 0) throw std::invalid_argument("gamma_basis: odd n has no full matrix basis here");
    if (n > cap) throw std::invalid_argument("gamma_basis: n exceeds cap " + std::to_string(cap));
    int m = n / 2;
    DivisionRingKind ring = classify(sig);

    for (const CensusSplit& cs : census_candidates(sig.p, sig.q, ring)) {
        auto words = find_words(m, cs.e0 + cs.e1, cs.o0 + cs.o1);
        if (!words) continue;
        GammaBasis basis = materialize(sig, *words, cs, m);
        if (!verify_basis(basis)) continue;
        if (ring == DivisionRingKind::H) {
            // Require the census-rule conjugation product to realize the
            // quaternionic double-conjugation sign.
            auto [a, b] = count_generator_kinds(basis);
            if (a % 2 != 0) continue;
            GMat pi = pi_product(basis, true);
            if (!pi_intertwines(basis, pi)) continue;
            auto [is_scalar, s] = (pi * pi.conj()).unit_scalar();
            if (!is_scalar || !(s == GInt(-1))) continue;
        }
        return basis;
    }
    throw std::runtime_error("gamma_basis: no basis found for " + sig.str());
}

std::pair<int, int> count_generator_kinds(const GammaBasis& basis) {
    int a = 0, b = 0;
    for (bool im : basis.imaginary) (im ? a : b) += 1;
    return {a, b};
}

PiResult pi_matrix(const GammaBasis& basis) {
    auto [a, b] = count_generator_kinds(basis);
    DivisionRingKind ring = classify(basis.sig);
    PiResult res;
    res.a = a;
    res.b = b;
    int dim = basis.gamma.empty() ? 1 : basis.gamma[0].dim();

    if (ring == DivisionRingKind::R) {
        res.pi = GMat::identity(dim);
        res.rule = 'r';
        res.sign_rule = +1;
        res.sign_product = +1;
        return res;
    }
    if (ring != DivisionRingKind::H)
        throw std::invalid_argument("pi_matrix: ring must be R or H, got " + to_string(ring));

    int used;
    if (a % 2 == 0) {
        res.pi = pi_product(basis, true);
        res.rule = 'a';
        used = a;
    } else if (b % 2 == 1) {
        res.pi = pi_product(basis, false);
        res.rule = 'b';
        used = b;
    } else {
        throw std::runtime_error("pi_matrix: neither census parity rule applies");
    }
    res.sign_rule = (used % 4 == 0 || used % 4 == 1) ? +1 : -1;

    auto [is_scalar, s] = (res.pi * res.pi.conj()).unit_scalar();
    if (!is_scalar || s.im != 0)
        throw std::runtime_error("pi_matrix: double conjugation is not a real unit scalar");
    res.sign_product = s.re > 0 ? +1 : -1;
    return res;
}

int double_conjugation_sign(const CliffordSignature& sig, int cap) {
    switch (sig.d_mod8()) {
        case 0:
        case 2: return +1;
        case 4:
        case 6: break;
        default:
            throw std::invalid_argument("double_conjugation_sign: unassigned for odd p-q");
    }
    if (sig.n() <= cap) return pi_matrix(gamma_basis(sig, cap)).sign_product;
    // Above the materialization cap the sign follows from the ring alone:
    // a quaternionic ring always carries the -1 double conjugation.
    return -1;
}

ConjugationMatrices conjugation_matrices(const GammaBasis& basis) {
    int n = static_cast<int>(basis.gamma.size());
    if (n % 2 != 0) throw std::invalid_argument("conjugation_matrices: even n required");
    int dim = basis.gamma.empty() ? 1 : basis.gamma[0].dim();

    GMat w = GMat::identity(dim);
    for (const auto& g : basis.gamma) w = w * g;
    for (const auto& g : basis.gamma)
        if (!((w * g) == -(g * w)))
            throw std::logic_error("conjugation_matrices: involution implementer failed");

    // Generators are symmetric or antisymmetric; the reversion implementer is
    // the ordered product of whichever family has the right parity.
    std::vector<bool> symmetric(static_cast<size_t>(n));
    int n_sym = 0;
    for (int i = 0; i < n; ++i) {
        symmetric[static_cast<size_t>(i)] =
            basis.gamma[static_cast<size_t>(i)].transpose() == basis.gamma[static_cast<size_t>(i)];
        if (symmetric[static_cast<size_t>(i)]) ++n_sym;
    }
    bool use_symmetric = (n_sym % 2 == 1);
    GMat e = GMat::identity(dim);
    for (int i = 0; i < n; ++i)
        if (symmetric[static_cast<size_t>(i)] == use_symmetric)
            e = e * basis.gamma[static_cast<size_t>(i)];
    for (const auto& g : basis.gamma)
        if (!((e * g.transpose()) == (g * e)))
            throw std::logic_error("conjugation_matrices: reversion implementer failed");

    GMat pi = pi_matrix(basis).pi;
    ConjugationMatrices out{w, e, e * w, pi, pi * w, pi * e, pi * (e * w)};
    return out;
}

std::string PhaseMonomial::str() const {
    if (p == 0 && t == 0 && c == 0) return "1";
    auto part = [](const char* sym, int e) -> std::string {
        if (e == 0) return "";
        std::string s = sym;
        if (e == 2) s += "²";
        else if (e > 2) s += "^" + std::to_string(e);
        return s;
    };
    return part("η_p", p) + part("η_t", t) + part("η_c", c);
}

CptTable cpt_table() {
    CptTable table;
    table.elements = {CptElement{"1", "1", {0, 0, 0}, {0, 0, 0}},
                      CptElement{"P", "W", {1, 0, 0}, {1, 0, 0}},
                      CptElement{"T", "E", {0, 1, 0}, {0, 1, 0}},
                      CptElement{"PT", "C", {1, 1, 0}, {1, 1, 0}},
                      CptElement{"C", "Π", {0, 0, 1}, {0, 0, 1}},
                      CptElement{"CP", "K", {1, 0, 1}, {1, 0, 1}},
                      CptElement{"CT", "S", {0, 1, 1}, {0, 1, 1}},
                      CptElement{"CPT", "F", {1, 1, 1}, {1, 1, 1}}};
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            const CptElement& er = table.elements[static_cast<size_t>(r)];
            const CptElement& ec = table.elements[static_cast<size_t>(c)];
            CptCell cell;
            cell.phase = er.phase * ec.phase;
            if (er.letter == "1")
                cell.word = ec.letter;
            else if (ec.letter == "1")
                cell.word = er.letter;
            else if (er.letter == ec.letter)
                cell.word = er.letter + "²";
            else
                cell.word = er.letter + ec.letter;
            for (int k = 0; k < 3; ++k)
                cell.reduced[static_cast<size_t>(k)] =
                    (er.gens[static_cast<size_t>(k)] + ec.gens[static_cast<size_t>(k)]) % 2;
            table.cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = cell;
        }
    return table;
}

bool cpt_table_is_elementary_abelian(const CptTable& table) {
    for (int r = 0; r < 8; ++r) {
        if (table.cells[static_cast<size_t>(r)][static_cast<size_t>(r)].reduced !=
            std::array<int, 3>{0, 0, 0})
            return false;
        std::array<bool, 8> seen{};
        for (int c = 0; c < 8; ++c) {
            const auto& cell = table.cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (cell.reduced != table.cells[static_cast<size_t>(c)][static_cast<size_t>(r)].reduced)
                return false;
            int idx = cell.reduced[0] * 4 + cell.reduced[1] * 2 + cell.reduced[2];
            if (seen[static_cast<size_t>(idx)]) return false;
            seen[static_cast<size_t>(idx)] = true;
        }
    }
    return true;
}

}  // namespace spinrep
