#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinrep/gaussian.hpp"

namespace spinrep {

struct CliffordSignature {
    int p = 0;
    int q = 0;

    CliffordSignature() = default;
    CliffordSignature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0) throw std::invalid_argument("CliffordSignature: negative count");
    }
    int n() const { return p + q; }
    int d_mod8() const { return ((p - q) % 8 + 8) % 8; }
    std::string str() const { return "Cl(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

enum class DivisionRingKind { R, RplusR, C, H, HplusH };

std::string to_string(DivisionRingKind k);

// Ring of the real algebra, fixed by (p-q) mod 8.
DivisionRingKind classify(const CliffordSignature& sig);

enum class ChargeClass { Charged, Neutral, TrulyNeutral };

std::string to_string(ChargeClass c);

// Complex base field -> charged; real field with a quaternionic ring ->
// neutral; real field with a real ring -> truly neutral.
ChargeClass charge_class(bool field_is_complex, DivisionRingKind ring);

// Square of the parity operator; assigned only for d mod 8 in {2,4,6}.
int parity_square(const CliffordSignature& sig);

struct GammaBasis {
    CliffordSignature sig;
    std::vector<GMat> gamma;
    std::vector<int> squares;        // +1 for i <= p, -1 after
    std::vector<bool> imaginary;     // entrywise-imaginary generators
};

// Builds a matrix basis of dimension 2^(n/2); requires even n <= cap.
GammaBasis gamma_basis(const CliffordSignature& sig, int cap = 12);

// (a, b): number of generators with imaginary entries / all-real entries.
std::pair<int, int> count_generator_kinds(const GammaBasis& basis);

struct PiResult {
    GMat pi;
    int a = 0;
    int b = 0;
    char rule = 'a';        // which product rule produced pi ('a', 'b', or 'r' for the real ring)
    int sign_rule = +1;     // sign predicted from the generator census
    int sign_product = +1;  // sign of pi * conj(pi), computed exactly
};

// Conjugation matrix for the algebra; for a real ring it is the identity,
// for a quaternionic ring the ordered product prescribed by the census.
PiResult pi_matrix(const GammaBasis& basis);

// Sign of the double conjugation: +1 for real rings, the exact matrix product
// sign for quaternionic rings.
int double_conjugation_sign(const CliffordSignature& sig, int cap = 12);

struct ConjugationMatrices {
    GMat w;  // grade involution
    GMat e;  // reversion
    GMat c;  // e * w
    GMat pi;
    GMat k;  // pi * w
    GMat s;  // pi * e
    GMat f;  // pi * c
};

ConjugationMatrices conjugation_matrices(const GammaBasis& basis);

// --- CPT table ---------------------------------------------------------

// Unit phase monomial eta_p^p * eta_t^t * eta_c^c.
struct PhaseMonomial {
    int p = 0;
    int t = 0;
    int c = 0;

    friend PhaseMonomial operator*(PhaseMonomial a, PhaseMonomial b) {
        return {a.p + b.p, a.t + b.t, a.c + b.c};
    }
    friend bool operator==(PhaseMonomial a, PhaseMonomial b) {
        return a.p == b.p && a.t == b.t && a.c == b.c;
    }
    std::string str() const;
};

struct CptElement {
    std::string name;       // 1, P, T, PT, C, CP, CT, CPT
    std::string letter;     // 1, W, E, C, Pi, K, S, F
    PhaseMonomial phase;
    // Expansion of the letter over the involution/reversion/conjugation
    // generators, as an (W, E, Pi) exponent triple mod 2.
    std::array<int, 3> gens;
};

struct CptCell {
    PhaseMonomial phase;
    std::string word;           // concatenated letters, e.g. "WE", "Pi^2"
    std::array<int, 3> reduced;  // product reduced mod squares/commutativity
};

struct CptTable {
    std::array<CptElement, 8> elements;
    std::array<std::array<CptCell, 8>, 8> cells;
};

CptTable cpt_table();

// True when, at unit phases, the reduced table is an abelian group whose
// every element squares to the identity.
bool cpt_table_is_elementary_abelian(const CptTable& table);

}  // namespace spinrep
