#pragma once

#include "defq/hseries.hpp"
#include "defq/polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace defq {

/// Alternating k-vector field with polynomial components on R^d.
/// Components keyed by strictly increasing index tuples (0-based directions);
/// any unordered insertion is sign-normalized, repeated indices drop to zero.
class PolyVec {
public:
    using IdxKey = std::vector<uint8_t>;
    using Components = std::map<IdxKey, Poly>;

    PolyVec() : d_(0), k_(0) {}
    PolyVec(std::size_t d, unsigned k) : d_(d), k_(k) {}

    static PolyVec function(std::size_t d, const Poly& p) {
        PolyVec v(d, 0);
        v.add_component({}, p);
        return v;
    }
    /// Basis field c * d_{i1} ^ ... ^ d_{ik} (indices 0-based, any order).
    static PolyVec term(std::size_t d, const std::vector<int>& idxs, const Poly& c) {
        PolyVec v(d, static_cast<unsigned>(idxs.size()));
        v.add_component(idxs, c);
        return v;
    }

    std::size_t dim() const { return d_; }
    unsigned arity() const { return k_; }
    bool is_zero() const { return comp_.empty(); }
    const Components& components() const { return comp_; }

    /// Insert c * d_{idxs}; idxs may be unsorted (sign tracked), repeats -> 0.
    void add_component(const std::vector<int>& idxs, const Poly& c) {
        if (c.is_zero()) return;
        std::vector<int> v = idxs;
        int sign = 1;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
                if (v[j] > v[j + 1]) {
                    std::swap(v[j], v[j + 1]);
                    sign = -sign;
                }
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == v[i + 1]) return;
        for (int i : v)
            if (i < 0 || static_cast<std::size_t>(i) >= d_)
                throw std::invalid_argument("polyvector index out of range");
        IdxKey key(v.begin(), v.end());
        Poly q = sign > 0 ? c : -c;
        auto [it, fresh] = comp_.try_emplace(key, q);
        if (!fresh) {
            it->second = it->second + q;
            if (it->second.is_zero()) comp_.erase(it);
        }
    }

    /// Fully antisymmetric coefficient tensor at an arbitrary index tuple.
    Poly skew_coeff(const std::vector<int>& idxs) const {
        std::vector<int> v = idxs;
        int sign = 1;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
                if (v[j] > v[j + 1]) {
                    std::swap(v[j], v[j + 1]);
                    sign = -sign;
                }
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == v[i + 1]) return Poly(d_);
        auto it = comp_.find(IdxKey(v.begin(), v.end()));
        if (it == comp_.end()) return Poly(d_);
        return sign > 0 ? it->second : -it->second;
    }

    friend PolyVec operator+(const PolyVec& a, const PolyVec& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.d_ != b.d_ || a.k_ != b.k_)
            throw std::invalid_argument("polyvector dimension/arity mismatch");
        PolyVec r = a;
        for (const auto& [key, p] : b.comp_) {
            auto [it, fresh] = r.comp_.try_emplace(key, p);
            if (!fresh) {
                it->second = it->second + p;
                if (it->second.is_zero()) r.comp_.erase(it);
            }
        }
        return r;
    }
    friend PolyVec operator-(const PolyVec& a) { return a * Rat(-1); }
    friend PolyVec operator-(const PolyVec& a, const PolyVec& b) { return a + (-b); }
    friend PolyVec operator*(const PolyVec& a, const Rat& s) {
        PolyVec r(a.d_, a.k_);
        if (s == 0) return r;
        for (const auto& [key, p] : a.comp_) r.comp_[key] = p * s;
        return r;
    }
    friend PolyVec operator*(const Rat& s, const PolyVec& a) { return a * s; }

    /// Zero polyvectors compare equal regardless of arity.
    friend bool operator==(const PolyVec& a, const PolyVec& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.d_ == b.d_ && a.k_ == b.k_ && a.comp_ == b.comp_;
    }

private:
    std::size_t d_;
    unsigned k_;
    Components comp_;
};

PolyVec wedge(const PolyVec& a, const PolyVec& b);

/// Schouten-Nijenhuis bracket, D2 orientation:
///   [X,f] = X(f), H_g(f) = {g,f}, graded antisymmetry and Jacobi for
///   degrees m = arity - 1, Leibniz [a,b^c] = (-1)^{m_a k_c}[a,b]^c + b^[a,c].
PolyVec schouten(const PolyVec& a, const PolyVec& b);

/// Apply a vector field (or the function part of any polyvector pairing
/// trivially) to a function: schouten specialization used in tests.
Poly apply_vector(const PolyVec& X, const Poly& f);

using FormalBivector = HSeries<PolyVec>;

inline HSeries<PolyVec> series_schouten(const HSeries<PolyVec>& a, const HSeries<PolyVec>& b) {
    unsigned ka = a.zero_coeff().arity(), kb = b.zero_coeff().arity();
    unsigned kr = ka + kb >= 1 ? ka + kb - 1 : 0;
    return series_mul(a, b, PolyVec(a.zero_coeff().dim(), kr),
                      [](const PolyVec& x, const PolyVec& y) { return schouten(x, y); });
}

/// [gamma, gamma] order-by-order; gamma is formal Poisson iff zero.
inline HSeries<PolyVec> poisson_defect(const FormalBivector& gamma) {
    return series_schouten(gamma, gamma);
}

/// H_g = [gamma, g] order-by-order.
inline HSeries<PolyVec> hamiltonian(const FormalBivector& gamma, const HSeries<PolyVec>& g) {
    return series_schouten(gamma, g);
}

/// {f,g} = sum_{i<j} gamma^{ij} (d_i f d_j g - d_j f d_i g), order-by-order.
HSeries<Poly> poisson_bracket(const FormalBivector& gamma, const HSeries<Poly>& f,
                              const HSeries<Poly>& g);

/// gamma_Y = e^{ad_{hY}} gamma = sum_j (1/j!) ad_{hY}^j gamma, truncated.
FormalBivector gauge_act(const HSeries<PolyVec>& Y, const FormalBivector& gamma);

/// Lift a plain polyvector into a series with the value at order k.
inline HSeries<PolyVec> lift_series(const PolyVec& v, unsigned N, unsigned at_order = 0) {
    HSeries<PolyVec> s(N, PolyVec(v.dim(), v.arity()));
    if (at_order <= N) s[at_order] = v;
    return s;
}

inline HSeries<Poly> lift_poly_series(const Poly& p, unsigned N, unsigned at_order = 0) {
    HSeries<Poly> s(N, Poly(p.dim()));
    if (at_order <= N) s[at_order] = p;
    return s;
}

} // namespace defq
