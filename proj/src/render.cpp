#include "defq/render.hpp"

#include <sstream>

namespace defq {

namespace {

std::string render_mono(const Mono& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (m.exp[i] > 1) os << "^" << m.exp[i];
    }
    return first ? "" : os.str();
}

// one term "c*mono" without sign; caller handles the sign
std::string render_term(const Rat& c, const Mono& m) {
    const std::string ms = render_mono(m);
    const Rat ac = c < 0 ? Rat(-c) : c;
    if (ms.empty()) return to_string(ac);
    if (ac == 1) return ms;
    return to_string(ac) + "*" + ms;
}

template <class T>
std::string render_series(const HSeries<T>& s) {
    std::ostringstream os;
    bool first = true;
    for (unsigned k = 0; k <= s.order(); ++k) {
        if (k == 0) {
            os << render(s[0]);
            first = false;
            continue;
        }
        os << " + h^" << k << "*(" << render(s[k]) << ")";
    }
    (void)first;
    return os.str();
}

} // namespace

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex descending
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << render_term(c, m);
    }
    return os.str();
}

std::string render(const PolyVec& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : v.components()) {
        if (!first) os << " + ";
        first = false;
        std::string ps = render(p);
        if (key.empty()) {
            os << ps;
            continue;
        }
        const bool needs_parens = p.term_count() > 1 || ps.find('-') != std::string::npos;
        if (ps == "1") {
            // bare basis
        } else if (needs_parens) {
            os << "(" << ps << ")*";
        } else {
            os << ps << "*";
        }
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << "^";
            os << "d" << (key[i] + 1);
        }
    }
    return os.str();
}

std::string render(const PolyDiffOp& o) {
    if (o.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : o.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << render(p) << ")D(";
        for (std::size_t j = 0; j < key.size(); ++j) {
            if (j) os << "; ";
            const std::string ms = render_mono(key[j]);
            os << (ms.empty() ? "1" : ms);
        }
        os << ")";
    }
    return os.str();
}

std::string render(const HSeries<Poly>& s) { return render_series(s); }
std::string render(const HSeries<PolyVec>& s) { return render_series(s); }
std::string render(const HSeries<PolyDiffOp>& s) { return render_series(s); }

std::string render_pretty(const HSeries<Poly>& s) {
    std::ostringstream os;
    bool first = true;
    for (unsigned k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) continue;
        const Poly& p = s[k];
        std::string hpow = k == 0 ? "" : (k == 1 ? "h" : "h^" + std::to_string(k));
        if (k == 0) {
            os << render(p);
            first = false;
            continue;
        }
        std::string ps;
        bool neg = false;
        if (p.term_count() == 1) {
            const auto& [m, c] = *p.terms().begin();
            neg = c < 0;
            const std::string t = render_term(c, m);
            ps = (t == "1") ? hpow : t + "*" + hpow;
        } else {
            ps = "(" + render(p) + ")*" + hpow;
        }
        if (first) {
            os << (neg ? "-" : "") << ps;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << ps;
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace defq
