#include "defq/polyvec.hpp"

namespace defq {

namespace {

// left odd derivative d/dpsi_i : arity k -> k-1
PolyVec psi_diff(const PolyVec& v, std::size_t i) {
    PolyVec r(v.dim(), v.arity() ? v.arity() - 1 : 0);
    for (const auto& [key, p] : v.components()) {
        for (std::size_t pos = 0; pos < key.size(); ++pos) {
            if (key[pos] != i) continue;
            std::vector<int> rest;
            for (std::size_t q = 0; q < key.size(); ++q)
                if (q != pos) rest.push_back(key[q]);
            r.add_component(rest, (pos % 2 == 0) ? p : -p);
            break;
        }
    }
    return r;
}

PolyVec x_diff(const PolyVec& v, std::size_t i) {
    PolyVec r(v.dim(), v.arity());
    for (const auto& [key, p] : v.components()) {
        Poly dp = p.partial(i);
        if (!dp.is_zero()) r.add_component(std::vector<int>(key.begin(), key.end()), dp);
    }
    return r;
}

// odd Laplacian sum_i d_{x_i} d_{psi_i}
PolyVec bv_delta(const PolyVec& v) {
    PolyVec r(v.dim(), v.arity() ? v.arity() - 1 : 0);
    if (v.arity() == 0) return r;
    for (std::size_t i = 0; i < v.dim(); ++i) r = r + x_diff(psi_diff(v, i), i);
    return r;
}

PolyVec coerce(PolyVec v, unsigned k) {
    if (v.is_zero()) return PolyVec(v.dim(), k);
    return v;
}

} // namespace

PolyVec wedge(const PolyVec& a, const PolyVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    PolyVec r(a.dim(), a.arity() + b.arity());
    for (const auto& [ka, pa] : a.components())
        for (const auto& [kb, pb] : b.components()) {
            std::vector<int> idxs(ka.begin(), ka.end());
            idxs.insert(idxs.end(), kb.begin(), kb.end());
            r.add_component(idxs, pa * pb);
        }
    return r;
}

PolyVec schouten(const PolyVec& a, const PolyVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("schouten: dimension mismatch");
    const unsigned ka = a.arity(), kb = b.arity();
    const unsigned kt = ka + kb >= 1 ? ka + kb - 1 : 0;
    PolyVec t = coerce(bv_delta(wedge(a, b)), kt);
    t = t - coerce(wedge(bv_delta(a), b), kt);
    const Rat s_mid = (ka % 2 == 0) ? Rat(-1) : Rat(1);
    t = t + s_mid * coerce(wedge(a, bv_delta(b)), kt);
    const Rat s = ((kb * (ka + 1)) % 2 == 0) ? Rat(1) : Rat(-1);
    return s * t;
}

Poly apply_vector(const PolyVec& X, const Poly& f) {
    if (X.arity() != 1) throw std::invalid_argument("apply_vector: arity must be 1");
    Poly r(X.dim());
    for (const auto& [key, p] : X.components()) r = r + p * f.partial(key[0]);
    return r;
}

HSeries<Poly> poisson_bracket(const FormalBivector& gamma, const HSeries<Poly>& f,
                              const HSeries<Poly>& g) {
    const unsigned N = gamma.order();
    if (f.order() != N || g.order() != N)
        throw std::invalid_argument("poisson_bracket: truncation-order mismatch");
    const std::size_t d = gamma.zero_coeff().dim();
    HSeries<Poly> r(N, Poly(d));
    for (unsigned a = 0; a <= N; ++a)
        for (unsigned b = 0; a + b <= N; ++b)
            for (unsigned c = 0; a + b + c <= N; ++c) {
                const PolyVec& gv = gamma[a];
                if (gv.is_zero() || f[b].is_zero() || g[c].is_zero()) continue;
                Poly acc(d);
                for (const auto& [key, p] : gv.components()) {
                    const int i = key[0], j = key[1];
                    acc = acc + p * (f[b].partial(i) * g[c].partial(j) -
                                     f[b].partial(j) * g[c].partial(i));
                }
                r[a + b + c] = r[a + b + c] + acc;
            }
    return r;
}

FormalBivector gauge_act(const HSeries<PolyVec>& Y, const FormalBivector& gamma) {
    if (Y.zero_coeff().arity() != 1)
        throw std::invalid_argument("gauge_act: Y must be a vector-field series");
    const unsigned N = gamma.order();
    FormalBivector result = gamma;
    FormalBivector term = gamma;
    for (unsigned j = 1; j <= N; ++j) {
        term = series_scale(series_schouten(Y, term).shifted_up(1), Rat(1, j));
        if (term.is_zero()) break;
        result = result + term;
    }
    return result;
}

} // namespace defq
