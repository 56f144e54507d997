#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinrep {

// Gaussian integer a + b*i.
struct GInt {
    long long re = 0;
    long long im = 0;

    constexpr GInt() = default;
    constexpr GInt(long long r, long long i = 0) : re(r), im(i) {}

    friend constexpr GInt operator+(GInt a, GInt b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GInt operator-(GInt a, GInt b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr GInt operator*(GInt a, GInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    constexpr GInt operator-() const { return {-re, -im}; }
    constexpr GInt conj() const { return {re, -im}; }
    friend constexpr bool operator==(GInt a, GInt b) { return a.re == b.re && a.im == b.im; }
    friend constexpr bool operator!=(GInt a, GInt b) { return !(a == b); }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    std::string str() const;
};

// Dense square matrix over Gaussian integers; sized for spinor representations
// of small Clifford algebras (dimension at most 2^6).
class GMat {
  public:
    GMat() = default;
    explicit GMat(int n) : n_(n), v_(static_cast<size_t>(n) * n) {}

    static GMat identity(int n) {
        GMat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = GInt(1);
        return m;
    }

    int dim() const { return n_; }
    GInt& at(int r, int c) { return v_[static_cast<size_t>(r) * n_ + c]; }
    const GInt& at(int r, int c) const { return v_[static_cast<size_t>(r) * n_ + c]; }

    GMat operator*(const GMat& o) const {
        if (n_ != o.n_) throw std::logic_error("GMat: dimension mismatch");
        GMat out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                GInt a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < n_; ++j) out.at(i, j) = out.at(i, j) + a * o.at(k, j);
            }
        return out;
    }
    GMat operator+(const GMat& o) const {
        GMat out(n_);
        for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i] + o.v_[i];
        return out;
    }
    GMat operator-() const {
        GMat out(n_);
        for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = -v_[i];
        return out;
    }
    friend bool operator==(const GMat& a, const GMat& b) { return a.n_ == b.n_ && a.v_ == b.v_; }

    GMat conj() const {
        GMat out(n_);
        for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i].conj();
        return out;
    }
    GMat transpose() const {
        GMat out(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) out.at(c, r) = at(r, c);
        return out;
    }
    GMat scaled(GInt s) const {
        GMat out(n_);
        for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = s * v_[i];
        return out;
    }

    // Kronecker product.
    GMat kron(const GMat& o) const {
        GMat out(n_ * o.n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) {
                GInt a = at(r, c);
                if (a.is_zero()) continue;
                for (int r2 = 0; r2 < o.n_; ++r2)
                    for (int c2 = 0; c2 < o.n_; ++c2)
                        out.at(r * o.n_ + r2, c * o.n_ + c2) = a * o.at(r2, c2);
            }
        return out;
    }

    bool anticommutes_with(const GMat& o) const {
        GMat ab = *this * o;
        GMat ba = o * *this;
        return ab == -ba;
    }
    bool commutes_with(const GMat& o) const { return (*this * o) == (o * *this); }

    // Returns (true, s) when this equals s * identity with s in {+1,-1,+i,-i}.
    std::pair<bool, GInt> unit_scalar() const;

    bool has_imaginary_entry() const {
        for (const auto& e : v_)
            if (e.im != 0) return true;
        return false;
    }

  private:
    int n_ = 0;
    std::vector<GInt> v_;
};

}  // namespace spinrep
