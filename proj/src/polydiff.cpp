#include "defq/polydiff.hpp"

#include <algorithm>

namespace defq {

Poly apply(const PolyDiffOp& D, const std::vector<Poly>& args) {
    if (args.size() != D.arity()) throw std::invalid_argument("apply: arity mismatch");
    for (const auto& a : args)
        if (a.dim() != D.dim()) throw std::invalid_argument("apply: dimension mismatch");
    Poly res(D.dim());
    for (const auto& [key, c] : D.terms()) {
        Poly prod = c;
        for (std::size_t j = 0; j < key.size() && !prod.is_zero(); ++j) {
            Poly a = args[j];
            for (std::size_t i = 0; i < key[j].exp.size() && !a.is_zero(); ++i)
                for (uint32_t e = 0; e < key[j].exp[i]; ++e) a = a.partial(i);
            prod = prod * a;
        }
        res = res + prod;
    }
    return res;
}

PolyDiffOp insert(const PolyDiffOp& A, unsigned pos, const PolyDiffOp& B) {
    if (A.dim() != B.dim()) throw std::invalid_argument("insert: dimension mismatch");
    if (pos >= A.arity()) throw std::invalid_argument("insert: slot out of range");
    const std::size_t d = A.dim();
    PolyDiffOp out(d, A.arity() + B.arity() - 1);
    for (const auto& [KA, cA] : A.terms()) {
        const Mono& alpha = KA[pos];
        for (const auto& [KB, cB] : B.terms()) {
            // distribute alpha's derivatives over (cB, each slot of KB)
            struct State {
                Poly coef;
                std::vector<Mono> slots;
            };
            std::vector<State> states{{cB, KB}};
            for (std::size_t i = 0; i < alpha.exp.size(); ++i) {
                for (uint32_t e = 0; e < alpha.exp[i]; ++e) {
                    std::vector<State> next;
                    for (const auto& st : states) {
                        Poly dc = st.coef.partial(i);
                        if (!dc.is_zero()) next.push_back({dc, st.slots});
                        for (std::size_t l = 0; l < st.slots.size(); ++l) {
                            State s2 = st;
                            ++s2.slots[l].exp[i];
                            next.push_back(std::move(s2));
                        }
                    }
                    states = std::move(next);
                }
            }
            for (const auto& st : states) {
                Poly coef = cA * st.coef;
                if (coef.is_zero()) continue;
                PolyDiffOp::DKey K(KA.begin(), KA.begin() + pos);
                K.insert(K.end(), st.slots.begin(), st.slots.end());
                K.insert(K.end(), KA.begin() + pos + 1, KA.end());
                out.add_term(K, coef);
            }
        }
    }
    return out;
}

namespace {

PolyDiffOp circle(const PolyDiffOp& A, const PolyDiffOp& B) {
    const int mB = static_cast<int>(B.arity()) - 1;
    PolyDiffOp r(A.dim(), A.arity() + B.arity() >= 1 ? A.arity() + B.arity() - 1 : 0);
    for (unsigned i = 0; i < A.arity(); ++i) {
        Rat s = ((static_cast<long long>(i) * mB) % 2 == 0) ? Rat(1) : Rat(-1);
        r = r + s * insert(A, i, B);
    }
    return r;
}

} // namespace

PolyDiffOp gerstenhaber(const PolyDiffOp& A, const PolyDiffOp& B) {
    if (A.dim() != B.dim()) throw std::invalid_argument("gerstenhaber: dimension mismatch");
    const long long mA = static_cast<long long>(A.arity()) - 1;
    const long long mB = static_cast<long long>(B.arity()) - 1;
    const Rat s = ((mA * mB) % 2 == 0) ? Rat(-1) : Rat(1);
    return circle(A, B) + s * circle(B, A);
}

PolyDiffOp hochschild(const PolyDiffOp& D) {
    return gerstenhaber(PolyDiffOp::mult(D.dim()), D);
}

PolyDiffOp hkr_inclusion(const PolyVec& xi) {
    const std::size_t d = xi.dim();
    const unsigned k = xi.arity();
    PolyDiffOp out(d, k);
    if (k == 0) {
        for (const auto& [key, p] : xi.components()) out.add_term({}, p);
        return out;
    }
    // 1/k! sum over permutations of the skew components
    const Rat inv_fact = Rat(1) / factorial_rat(k);
    for (const auto& [key, p] : xi.components()) {
        std::vector<unsigned> idx(k);
        for (unsigned i = 0; i < k; ++i) idx[i] = i;
        do {
            int sign = 1;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = i + 1; j < k; ++j)
                    if (idx[i] > idx[j]) sign = -sign;
            PolyDiffOp::DKey K;
            K.reserve(k);
            for (unsigned s = 0; s < k; ++s) {
                Mono m(d);
                m.exp[key[idx[s]]] = 1;
                K.push_back(std::move(m));
            }
            out.add_term(K, p * (sign > 0 ? inv_fact : -inv_fact));
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

HSeries<Poly> star_apply(const StarProduct& s, const HSeries<Poly>& f, const HSeries<Poly>& g) {
    const unsigned N = s.order();
    if (f.order() != N || g.order() != N)
        throw std::invalid_argument("star_apply: truncation-order mismatch");
    const std::size_t d = s.zero_coeff().dim();
    HSeries<Poly> r(N, Poly(d));
    for (unsigned a = 0; a <= N; ++a)
        for (unsigned b = 0; a + b <= N; ++b)
            for (unsigned c = 0; a + b + c <= N; ++c) {
                if (s[a].is_zero() || f[b].is_zero() || g[c].is_zero()) continue;
                r[a + b + c] = r[a + b + c] + apply(s[a], {f[b], g[c]});
            }
    return r;
}

} // namespace defq
