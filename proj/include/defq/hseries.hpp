#pragma once

#include "defq/rational.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace defq {

/// Truncated formal power series in hbar over an arbitrary coefficient role T.
/// Arithmetic discards every term of order > N. T needs +, unary -, ==.
template <class T>
class HSeries {
public:
    HSeries(unsigned order, T zero) : zero_(zero), coeffs_(order + 1, zero) {}

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const T& operator[](unsigned k) const { return coeffs_.at(k); }
    T& operator[](unsigned k) { return coeffs_.at(k); }
    const T& zero_coeff() const { return zero_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!(c == zero_)) return false;
        return true;
    }
    /// Lowest nonzero hbar-order, or order()+1 when the series is zero.
    unsigned lowest_order() const {
        for (unsigned k = 0; k <= order(); ++k)
            if (!(coeffs_[k] == zero_)) return k;
        return order() + 1;
    }

    HSeries truncated(unsigned n) const {
        HSeries r(n, zero_);
        for (unsigned k = 0; k <= std::min(n, order()); ++k) r[k] = coeffs_[k];
        return r;
    }

    friend HSeries operator+(const HSeries& a, const HSeries& b) {
        check(a, b);
        HSeries r = a;
        for (unsigned k = 0; k <= r.order(); ++k) r[k] = r[k] + b[k];
        return r;
    }
    friend HSeries operator-(const HSeries& a, const HSeries& b) {
        check(a, b);
        HSeries r = a;
        for (unsigned k = 0; k <= r.order(); ++k) r[k] = r[k] + (-b[k]);
        return r;
    }
    friend bool operator==(const HSeries& a, const HSeries& b) {
        if (a.order() != b.order()) return false;
        for (unsigned k = 0; k <= a.order(); ++k)
            if (!(a[k] == b[k])) return false;
        return true;
    }

    /// Multiply by hbar^k (coefficient reindexing up; top terms fall off).
    HSeries shifted_up(unsigned k) const {
        HSeries r(order(), zero_);
        for (unsigned j = 0; j + k <= order(); ++j) r[j + k] = coeffs_[j];
        return r;
    }

    /// Divide by hbar: strict coefficient shift down.
    /// Throws std::domain_error if the constant term is nonzero (D8).
    HSeries divided_by_h() const {
        if (!(coeffs_[0] == zero_))
            throw std::domain_error("division by hbar: nonzero constant term");
        HSeries r(order(), zero_);
        for (unsigned j = 1; j <= order(); ++j) r[j - 1] = coeffs_[j];
        return r;
    }

private:
    static void check(const HSeries& a, const HSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("hbar series truncation-order mismatch");
    }

    T zero_;
    std::vector<T> coeffs_;
};

/// Cauchy product truncated at the common order, with a caller-supplied
/// bilinear product on coefficients.
template <class T, class U, class V, class Bilinear>
HSeries<V> series_mul(const HSeries<T>& a, const HSeries<U>& b, V zero, Bilinear prod) {
    if (a.order() != b.order())
        throw std::invalid_argument("hbar series truncation-order mismatch");
    HSeries<V> r(a.order(), zero);
    for (unsigned i = 0; i <= a.order(); ++i)
        for (unsigned j = 0; i + j <= a.order(); ++j) r[i + j] = r[i + j] + prod(a[i], b[j]);
    return r;
}

template <class T>
HSeries<T> series_scale(const HSeries<T>& a, const Rat& s) {
    HSeries<T> r = a;
    for (unsigned k = 0; k <= r.order(); ++k) r[k] = r[k] * s;
    return r;
}

/// Substitute the scalar series b (with b[0] = 0) into a: a(b(h)).
template <class T>
HSeries<T> series_compose_scalar(const HSeries<T>& a, const HSeries<Rat>& b, T one) {
    if (a.order() != b.order())
        throw std::invalid_argument("hbar series truncation-order mismatch");
    if (!(b[0] == Rat(0)))
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const unsigned N = a.order();
    HSeries<T> r(N, a.zero_coeff());
    HSeries<Rat> pw(N, Rat(0));
    pw[0] = Rat(1);
    for (unsigned k = 0; k <= N; ++k) {
        for (unsigned j = 0; j <= N; ++j)
            if (pw[j] != 0) r[j] = r[j] + a[k] * pw[j];
        if (k < N)
            pw = series_mul(pw, b, Rat(0), [](const Rat& x, const Rat& y) { return x * y; });
    }
    (void)one;
    return r;
}

} // namespace defq
