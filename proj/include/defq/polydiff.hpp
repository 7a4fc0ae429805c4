#pragma once

#include "defq/hseries.hpp"
#include "defq/polynomial.hpp"
#include "defq/polyvec.hpp"

#include <map>
#include <vector>

namespace defq {

/// k-ary multidifferential operator with polynomial coefficients,
/// stored fully expanded: sum of coeff * (d^{a_1} ox ... ox d^{a_k}).
class PolyDiffOp {
public:
    using DKey = std::vector<Mono>;
    using Terms = std::map<DKey, Poly>;

    PolyDiffOp() : d_(0), k_(0) {}
    PolyDiffOp(std::size_t d, unsigned k) : d_(d), k_(k) {}

    /// The multiplication operator m : f ox g -> fg.
    static PolyDiffOp mult(std::size_t d) {
        PolyDiffOp o(d, 2);
        o.add_term({Mono(d), Mono(d)}, Poly::constant(d, Rat(1)));
        return o;
    }
    /// A function as a 0-ary operator.
    static PolyDiffOp function(std::size_t d, const Poly& p) {
        PolyDiffOp o(d, 0);
        o.add_term({}, p);
        return o;
    }

    std::size_t dim() const { return d_; }
    unsigned arity() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const DKey& key, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PolyDiffOp operator+(const PolyDiffOp& a, const PolyDiffOp& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.d_ != b.d_ || a.k_ != b.k_)
            throw std::invalid_argument("operator dimension/arity mismatch");
        PolyDiffOp r = a;
        for (const auto& [key, p] : b.terms_) r.add_term(key, p);
        return r;
    }
    friend PolyDiffOp operator-(const PolyDiffOp& a) { return a * Rat(-1); }
    friend PolyDiffOp operator-(const PolyDiffOp& a, const PolyDiffOp& b) { return a + (-b); }
    friend PolyDiffOp operator*(const PolyDiffOp& a, const Rat& s) {
        PolyDiffOp r(a.d_, a.k_);
        if (s == 0) return r;
        for (const auto& [key, p] : a.terms_) r.terms_[key] = p * s;
        return r;
    }
    friend PolyDiffOp operator*(const Rat& s, const PolyDiffOp& a) { return a * s; }

    /// Zero operators compare equal regardless of arity.
    friend bool operator==(const PolyDiffOp& a, const PolyDiffOp& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.d_ == b.d_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }

private:
    std::size_t d_;
    unsigned k_;
    Terms terms_;
};

/// Evaluate on k polynomial arguments.
Poly apply(const PolyDiffOp& D, const std::vector<Poly>& args);

/// Insertion of B into slot pos (0-based) of A.
PolyDiffOp insert(const PolyDiffOp& A, unsigned pos, const PolyDiffOp& B);

/// Gerstenhaber bracket [A,B] = AoB - (-1)^{(kA-1)(kB-1)} BoA where
/// AoB = sum_i (-1)^{i (kB-1)} A o_i B.
PolyDiffOp gerstenhaber(const PolyDiffOp& A, const PolyDiffOp& B);

/// Hochschild differential dD = [m, D]; d^2 = 0, derivations of m die.
PolyDiffOp hochschild(const PolyDiffOp& D);

/// Antisymmetrized inclusion of a k-vector field with 1/k! (D4);
/// identity on functions and vector fields.
PolyDiffOp hkr_inclusion(const PolyVec& xi);

/// Star product: series of bidifferential operators; coefficient 0 is m.
using StarProduct = HSeries<PolyDiffOp>;

inline HSeries<PolyDiffOp> series_gerstenhaber(const HSeries<PolyDiffOp>& a,
                                               const HSeries<PolyDiffOp>& b) {
    unsigned ka = a.zero_coeff().arity(), kb = b.zero_coeff().arity();
    unsigned kr = ka + kb >= 1 ? ka + kb - 1 : 0;
    return series_mul(a, b, PolyDiffOp(a.zero_coeff().dim(), kr),
                      [](const PolyDiffOp& x, const PolyDiffOp& y) { return gerstenhaber(x, y); });
}

/// (1/2)[s,s] as a series of 3-ary operators; zero iff s associative.
inline HSeries<PolyDiffOp> assoc_defect(const StarProduct& s) {
    return series_scale(series_gerstenhaber(s, s), Rat(1, 2));
}

/// Evaluate a star product (or any 2-ary operator series) on two
/// function series.
HSeries<Poly> star_apply(const StarProduct& s, const HSeries<Poly>& f, const HSeries<Poly>& g);

inline HSeries<PolyDiffOp> lift_op_series(const PolyDiffOp& o, unsigned N, unsigned at_order = 0) {
    HSeries<PolyDiffOp> s(N, PolyDiffOp(o.dim(), o.arity()));
    if (at_order <= N) s[at_order] = o;
    return s;
}

} // namespace defq
