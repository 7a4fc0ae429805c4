#pragma once

#include "defq/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace defq {

/// Exponent vector of a monomial on R^d.
struct Mono {
    std::vector<uint32_t> exp;

    Mono() = default;
    explicit Mono(std::size_t d) : exp(d, 0) {}
    explicit Mono(std::vector<uint32_t> e) : exp(std::move(e)) {}

    std::size_t dim() const { return exp.size(); }
    uint32_t degree() const { return std::accumulate(exp.begin(), exp.end(), 0u); }

    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded lexicographic order: by total degree, then lex on exponents.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.exp);
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
}

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical: no zero coefficients stored; all monomials share dimension d.
class Poly {
public:
    using Terms = std::map<Mono, Rat, GrlexLess>;

    Poly() : d_(0) {}
    explicit Poly(std::size_t d) : d_(d) {}

    static Poly constant(std::size_t d, const Rat& c) {
        Poly p(d);
        if (c != 0) p.terms_[Mono(d)] = c;
        return p;
    }
    /// x_i (0-based direction index) with optional coefficient.
    static Poly variable(std::size_t d, std::size_t i, const Rat& c = Rat(1)) {
        Poly p(d);
        if (i >= d) throw std::invalid_argument("variable index out of range");
        if (c != 0) {
            Mono m(d);
            m.exp[i] = 1;
            p.terms_[m] = c;
        }
        return p;
    }

    std::size_t dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (0 if absent).
    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(Mono(d_)); }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_dims(a, b);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check_dims(a, b);
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a.d_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_dims(a, b);
        Poly r(a.d_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        Poly r(a.d_);
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = c * s;
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    /// Exact partial derivative in direction i (0-based).
    Poly partial(std::size_t i) const {
        if (i >= d_) throw std::invalid_argument("partial: direction out of range");
        Poly r(d_);
        for (const auto& [m, c] : terms_) {
            if (m.exp[i] == 0) continue;
            Mono m2 = m;
            --m2.exp[i];
            r.add_term(m2, c * Rat(m.exp[i]));
        }
        return r;
    }

    /// Total degree; 0 for the zero polynomial.
    uint32_t degree() const {
        uint32_t deg = 0;
        for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
        return deg;
    }

private:
    static void check_dims(const Poly& a, const Poly& b) {
        if (a.d_ != b.d_) throw std::invalid_argument("polynomial dimension mismatch");
    }

    std::size_t d_;
    Terms terms_;
};

} // namespace defq
