#include "spinrep/spin_lines.hpp"

#include <stdexcept>

namespace spinrep {

SpinLine line(HalfInt spin, int n, bool dual) {
    if (spin.twice < 0) throw std::invalid_argument("line: spin must be non-negative");
    if (n < 1) throw std::invalid_argument("line: need at least one entry");
    SpinLine out;
    out.spin = spin;
    out.dual = dual;
    out.entries.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        HalfInt big = HalfInt(spin.twice + i);
        HalfInt small = HalfInt(i);
        out.entries.push_back(dual ? RepLabel(small, big) : RepLabel(big, small));
    }
    return out;
}

std::vector<long long> degree_sequence(const SpinLine& line) {
    std::vector<long long> out;
    out.reserve(line.entries.size());
    for (const auto& rep : line.entries) out.push_back(degree(rep));
    return out;
}

TensorStructure tensor_structure(const RepLabel& rep) {
    TensorStructure t;
    t.k = rep.l.twice;
    t.r = rep.ldot.twice;
    t.complex_dim = 2 * (t.k + t.r);
    t.spinspace_log2 = t.k + t.r;
    return t;
}

std::vector<RepLabel> interlocking_neighbors(const RepLabel& rep) {
    std::vector<RepLabel> out;
    const int steps[4][2] = {{-1, -1}, {+1, -1}, {-1, +1}, {+1, +1}};
    for (const auto& s : steps) {
        long long tl = rep.l.twice + s[0];
        long long tld = rep.ldot.twice + s[1];
        if (tl < 0 || tld < 0) continue;
        out.push_back(RepLabel::from_twice(tl, tld));
    }
    return out;
}

std::vector<RepLabel> spin_multiplet(HalfInt s, int shift) {
    if (s.twice < 0) throw std::invalid_argument("spin_multiplet: spin must be non-negative");
    if (shift < 0) throw std::invalid_argument("spin_multiplet: shift must be non-negative");
    std::vector<RepLabel> out;
    long long count = s.twice + 1;  // 2s+1 members
    out.reserve(static_cast<size_t>(count));
    for (long long j = 0; j < count; ++j)
        out.push_back(RepLabel::from_twice(s.twice + shift - j, shift + j));
    return out;
}

}  // namespace spinrep
