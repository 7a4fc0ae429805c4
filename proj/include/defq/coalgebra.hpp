#pragma once

#include "defq/hseries.hpp"
#include "defq/rational.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace defq {

/// Scalars of the coalgebra layer: Q[h]/h^{r+1}.
using HScalar = HSeries<Rat>;

inline HScalar h_unit(unsigned r) {
    HScalar s(r, Rat(0));
    s[0] = Rat(1);
    return s;
}
inline HScalar h_monomial(unsigned r, unsigned order, const Rat& c = Rat(1)) {
    HScalar s(r, Rat(0));
    if (order <= r) s[order] = c;
    return s;
}
inline HScalar h_mul(const HScalar& a, const HScalar& b) {
    return series_mul(a, b, Rat(0), [](const Rat& x, const Rat& y) { return x * y; });
}

/// All set partitions of {0..n-1}; blocks sorted, ordered by least element.
std::vector<std::vector<std::vector<unsigned>>> set_partitions(unsigned n);

/// Graded symmetric coalgebra S^+(V) over Q[h]/h^{r+1}, for a basis type B
/// with strict weak order operator< and .parity() in {0,1}.
///
/// Words are canonically sorted; a word with a repeated odd element is zero.
template <class B>
class Coalgebra {
public:
    using Word = std::vector<B>;
    using Elem = std::map<Word, HScalar>;
    using TensorSquare = std::map<std::pair<Word, Word>, HScalar>;

    explicit Coalgebra(unsigned r) : r_(r) {}
    unsigned trunc_order() const { return r_; }

    Elem zero() const { return {}; }

    /// Canonical form of a word; returns sign 0 when a repeated odd
    /// element makes it vanish.
    static int sort_word(Word& w) {
        int sign = 1;
        for (std::size_t i = 1; i < w.size(); ++i) {
            std::size_t j = i;
            while (j > 0 && w[j] < w[j - 1]) {
                if (w[j].parity() && w[j - 1].parity()) sign = -sign;
                std::swap(w[j], w[j - 1]);
                --j;
            }
        }
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1] && w[i].parity()) return 0;
        return sign;
    }

    static int word_parity(const Word& w) {
        int p = 0;
        for (const auto& b : w) p ^= b.parity();
        return p;
    }

    /// Quillen sign: move the elements at positions I (ascending) to the
    /// front preserving relative order; count odd-odd crossings.
    static int unshuffle_sign(const Word& w, const std::vector<unsigned>& I) {
        int sign = 1;
        std::vector<bool> sel(w.size(), false);
        for (unsigned p : I) sel[p] = true;
        for (unsigned p : I) {
            if (!w[p].parity()) continue;
            for (unsigned q = 0; q < p; ++q)
                if (!sel[q] && w[q].parity()) sign = -sign;
        }
        return sign;
    }

    /// Koszul sign of rearranging word positions into the given order.
    static int perm_koszul_sign(const Word& w, std::vector<unsigned> order) {
        int sign = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = 0; j + 1 < order.size() - i; ++j)
                if (order[j] > order[j + 1]) {
                    if (w[order[j]].parity() && w[order[j + 1]].parity()) sign = -sign;
                    std::swap(order[j], order[j + 1]);
                }
        return sign;
    }

    void add_to(Elem& a, const Word& w, const HScalar& h) const {
        if (h.is_zero()) return;
        auto [it, fresh] = a.try_emplace(w, h);
        if (!fresh) {
            it->second = it->second + h;
            if (it->second.is_zero()) a.erase(it);
        }
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (const auto& [w, h] : b) add_to(r, w, h);
        return r;
    }

    Elem scale(const Elem& a, const HScalar& h) const {
        Elem r;
        for (const auto& [w, hh] : a) add_to(r, w, h_mul(hh, h));
        return r;
    }

    Elem word(std::vector<B> elems, const HScalar& h) const {
        int s = sort_word(elems);
        if (s == 0) return {};
        Elem r;
        add_to(r, elems, s > 0 ? h : series_scale(h, Rat(-1)));
        return r;
    }

    /// Graded product (concatenate and normalize).
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r;
        for (const auto& [w1, h1] : a)
            for (const auto& [w2, h2] : b) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                int s = sort_word(w);
                if (s == 0) continue;
                HScalar h = h_mul(h1, h2);
                if (s < 0) h = series_scale(h, Rat(-1));
                add_to(r, w, h);
            }
        return r;
    }

    /// Reduced coproduct: sum over proper ordered splits (I,J).
    TensorSquare coproduct(const Elem& a) const {
        TensorSquare r;
        for (const auto& [w, h] : a) {
            const unsigned n = static_cast<unsigned>(w.size());
            for (unsigned bits = 1; bits + 1 < (1u << n); ++bits) {
                std::vector<unsigned> I, J;
                for (unsigned i = 0; i < n; ++i)
                    ((bits >> i) & 1 ? I : J).push_back(i);
                int s = unshuffle_sign(w, I);
                Word wI, wJ;
                for (unsigned i : I) wI.push_back(w[i]);
                for (unsigned j : J) wJ.push_back(w[j]);
                HScalar hh = s > 0 ? h : series_scale(h, Rat(-1));
                auto key = std::make_pair(wI, wJ);
                auto [it, fresh] = r.try_emplace(key, hh);
                if (!fresh) {
                    it->second = it->second + hh;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
        }
        return r;
    }

    /// e^{.v} - 1 truncated. Requires every scalar of v to have hbar-order
    /// >= 1 (nilpotency); throws std::domain_error otherwise.
    Elem exp(const Elem& v) const {
        for (const auto& [w, h] : v)
            if (h[0] != 0) throw std::domain_error("exp: order-0 part present");
        Elem acc;
        Elem term;
        term[{}] = h_unit(r_);
        for (unsigned k = 1; k <= r_; ++k) {
            term = scale(mul(term, v), h_monomial(r_, 0, Rat(1, k)));
            if (term.empty()) break;
            acc = add(acc, term);
        }
        return acc;
    }

    /// log(1+g) for g with hbar-order >= 1 scalars.
    Elem log(const Elem& g) const {
        for (const auto& [w, h] : g)
            if (h[0] != 0) throw std::domain_error("log: order-0 part present");
        Elem acc;
        Elem term;
        term[{}] = h_unit(r_);
        for (unsigned k = 1; k <= r_; ++k) {
            term = mul(term, g);
            if (term.empty()) break;
            acc = add(acc, scale(term, h_monomial(r_, 0, Rat((k % 2) ? 1 : -1, k))));
        }
        return acc;
    }

    /// Length-1 part (the V-component).
    Elem proj_V(const Elem& a) const {
        Elem r;
        for (const auto& [w, h] : a)
            if (w.size() == 1) r[w] = h;
        return r;
    }

    /// Delta g = (I+tau)/2 (g ox g), checked exactly at truncation.
    /// The argument includes its unit part (empty word).
    bool is_super_grouplike(const Elem& g) const {
        TensorSquare lhs;
        for (const auto& [w, h] : g) {
            const unsigned n = static_cast<unsigned>(w.size());
            for (unsigned bits = 0; bits < (1u << n); ++bits) {
                std::vector<unsigned> I, J;
                for (unsigned i = 0; i < n; ++i)
                    ((bits >> i) & 1 ? I : J).push_back(i);
                int s = unshuffle_sign(w, I);
                Word wI, wJ;
                for (unsigned i : I) wI.push_back(w[i]);
                for (unsigned j : J) wJ.push_back(w[j]);
                HScalar hh = s > 0 ? h : series_scale(h, Rat(-1));
                auto key = std::make_pair(wI, wJ);
                auto [it, fresh] = lhs.try_emplace(key, hh);
                if (!fresh) {
                    it->second = it->second + hh;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
        }
        TensorSquare rhs;
        for (const auto& [w1, h1] : g)
            for (const auto& [w2, h2] : g) {
                HScalar h = h_mul(h1, h2);
                if (h.is_zero()) continue;
                HScalar half = series_scale(h, Rat(1, 2));
                auto put = [&rhs](const Word& a, const Word& b, const HScalar& v) {
                    auto key = std::make_pair(a, b);
                    auto [it, fresh] = rhs.try_emplace(key, v);
                    if (!fresh) {
                        it->second = it->second + v;
                        if (it->second.is_zero()) rhs.erase(it);
                    }
                };
                put(w1, w2, half);
                int s = word_parity(w1) * word_parity(w2);
                put(w2, w1, s ? series_scale(half, Rat(-1)) : half);
            }
        return lhs == rhs;
    }

    /// Taylor coefficients: per arity, a graded-symmetric multilinear map
    /// from canonical words to elements (usually V-combinations).
    using Taylor = std::map<unsigned, std::function<Elem(const Word&)>>;

    /// Q(x_1...x_n) = sum_{I != empty} eps(I,J) Q_{|I|}(x_I) . x_J
    Elem coderivation(const Taylor& taylor, const Elem& a) const {
        Elem out;
        for (const auto& [w, h] : a) {
            const unsigned n = static_cast<unsigned>(w.size());
            for (unsigned bits = 1; bits < (1u << n); ++bits) {
                std::vector<unsigned> I, J;
                for (unsigned i = 0; i < n; ++i)
                    ((bits >> i) & 1 ? I : J).push_back(i);
                auto it = taylor.find(static_cast<unsigned>(I.size()));
                if (it == taylor.end()) continue;
                int s = unshuffle_sign(w, I);
                Word wI;
                for (unsigned i : I) wI.push_back(w[i]);
                Elem val = it->second(wI);
                if (val.empty()) continue;
                Word wJ;
                for (unsigned j : J) wJ.push_back(w[j]);
                Elem rest;
                rest[wJ] = s > 0 ? h : series_scale(h, Rat(-1));
                out = add(out, mul(val, rest));
            }
        }
        return out;
    }

    /// Coalgebra-morphism extension of Taylor coefficients into a target
    /// coalgebra over basis B2.
    template <class B2>
    typename Coalgebra<B2>::Elem morphism(
        const std::map<unsigned, std::function<typename Coalgebra<B2>::Elem(const Word&)>>& taylor,
        const Elem& a, const Coalgebra<B2>& target) const {
        typename Coalgebra<B2>::Elem out;
        for (const auto& [w, h] : a) {
            const unsigned n = static_cast<unsigned>(w.size());
            for (const auto& partition : set_partitions(n)) {
                bool ok = true;
                for (const auto& blk : partition)
                    if (!taylor.count(static_cast<unsigned>(blk.size()))) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::vector<unsigned> order;
                for (const auto& blk : partition)
                    order.insert(order.end(), blk.begin(), blk.end());
                int s = perm_koszul_sign(w, order);
                typename Coalgebra<B2>::Elem prod;
                prod[{}] = s > 0 ? h : series_scale(h, Rat(-1));
                for (const auto& blk : partition) {
                    Word wB;
                    for (unsigned i : blk) wB.push_back(w[i]);
                    auto val = taylor.at(static_cast<unsigned>(blk.size()))(wB);
                    prod = target.mul(prod, val);
                    if (prod.empty()) break;
                }
                out = target.add(out, prod);
            }
        }
        return out;
    }

private:
    unsigned r_;
};

} // namespace defq
