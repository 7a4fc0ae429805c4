#include "defq/graphs.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace defq {

int ground_count(const std::vector<unsigned>& arities) {
    int s = 0;
    for (unsigned k : arities) s += static_cast<int>(k);
    return 2 - 2 * static_cast<int>(arities.size()) + s;
}

std::vector<AdmissibleGraph> enumerate_graphs(const std::vector<unsigned>& arities) {
    const int mi = ground_count(arities);
    if (mi < 0) throw std::invalid_argument("enumerate_graphs: negative ground count");
    const unsigned n = static_cast<unsigned>(arities.size());
    const unsigned m = static_cast<unsigned>(mi);
    // per-vertex candidate target sets: sorted k-subsets of {0..n+m-1} \ {i}
    std::vector<std::vector<std::vector<unsigned>>> choices(n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<unsigned> cands;
        for (unsigned v = 0; v < n + m; ++v)
            if (v != i) cands.push_back(v);
        const unsigned k = arities[i];
        if (k > cands.size()) return {};
        std::vector<bool> sel(cands.size(), false);
        std::fill(sel.begin(), sel.begin() + k, true);
        do {
            std::vector<unsigned> t;
            for (std::size_t j = 0; j < cands.size(); ++j)
                if (sel[j]) t.push_back(cands[j]);
            choices[i].push_back(t);
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    std::vector<AdmissibleGraph> out;
    std::vector<unsigned> pick(n, 0);
    while (true) {
        AdmissibleGraph g;
        g.n = n;
        g.m = m;
        g.targets.resize(n);
        for (unsigned i = 0; i < n; ++i) g.targets[i] = choices[i][pick[i]];
        out.push_back(std::move(g));
        unsigned i = 0;
        for (; i < n; ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

namespace {

int perm_parity(std::vector<unsigned> p) {
    int sign = 1;
    for (unsigned i = 0; i < p.size(); ++i)
        while (p[i] != i) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    return sign;
}

// Relabel aerials by sigma (grounds fixed); returns graph + edge-form sign.
std::pair<AdmissibleGraph, int> relabel(const AdmissibleGraph& g,
                                        const std::vector<unsigned>& sigma) {
    auto map_v = [&](unsigned v) { return v < g.n ? sigma[v] : v; };
    AdmissibleGraph h;
    h.n = g.n;
    h.m = g.m;
    h.targets.resize(g.n);
    for (unsigned i = 0; i < g.n; ++i) {
        std::vector<unsigned> t;
        for (unsigned v : g.targets[i]) t.push_back(map_v(v));
        std::sort(t.begin(), t.end());
        h.targets[sigma[i]] = std::move(t);
    }
    auto old_edges = g.edges();
    auto new_edges = h.edges();
    std::vector<unsigned> perm;
    std::vector<bool> used(new_edges.size(), false);
    for (const auto& [i, t] : old_edges) {
        std::pair<unsigned, unsigned> target{sigma[i], map_v(t)};
        for (unsigned j = 0; j < new_edges.size(); ++j)
            if (!used[j] && new_edges[j] == target) {
                used[j] = true;
                perm.push_back(j);
                break;
            }
    }
    return {h, perm_parity(perm)};
}

} // namespace

CanonicalGraph canonicalize(const AdmissibleGraph& g) {
    const auto ar = g.arities();
    const unsigned n = g.n;
    // assign positions into the arity-sorted profile
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return ar[a] < ar[b]; });
    // slots in the sorted profile grouped by arity
    std::map<unsigned, std::vector<unsigned>> slots, members;
    for (unsigned pos = 0; pos < n; ++pos) slots[ar[order[pos]]].push_back(pos);
    for (unsigned i = 0; i < n; ++i) members[ar[i]].push_back(i);

    std::map<AdmissibleGraph, std::set<int>> seen;
    std::vector<std::pair<unsigned, std::vector<unsigned>>> groups(members.begin(), members.end());
    std::vector<std::vector<unsigned>> perms;
    for (auto& [k, mem] : groups) {
        (void)mem;
        perms.push_back(slots[k]);
        std::sort(perms.back().begin(), perms.back().end());
    }
    // iterate the product of per-group permutations
    std::function<void(unsigned, std::vector<unsigned>&)> rec = [&](unsigned gi,
                                                                    std::vector<unsigned>& sigma) {
        if (gi == groups.size()) {
            auto [h, s] = relabel(g, sigma);
            seen[h].insert(s);
            return;
        }
        std::vector<unsigned> p = perms[gi];
        std::sort(p.begin(), p.end());
        do {
            for (std::size_t j = 0; j < groups[gi].second.size(); ++j)
                sigma[groups[gi].second[j]] = p[j];
            rec(gi + 1, sigma);
        } while (std::next_permutation(p.begin(), p.end()));
    };
    std::vector<unsigned> sigma(n, 0);
    rec(0, sigma);

    CanonicalGraph res;
    res.graph = seen.begin()->first;
    bool zero = false;
    for (const auto& [h, signs] : seen)
        if (signs.size() == 2) zero = true;
    res.sign = zero ? 0 : *seen.begin()->second.begin();
    return res;
}

PolyDiffOp graph_operator(const AdmissibleGraph& g, const std::vector<PolyVec>& args) {
    if (args.size() != g.n) throw std::invalid_argument("graph_operator: arity mismatch");
    for (unsigned i = 0; i < g.n; ++i)
        if (args[i].arity() != g.targets[i].size())
            throw std::invalid_argument("graph_operator: vertex out-degree mismatch");
    const std::size_t d = args.empty() ? 0 : args[0].dim();
    for (const auto& a : args)
        if (a.dim() != d) throw std::invalid_argument("graph_operator: dimension mismatch");
    const auto E = g.edges();
    PolyDiffOp out(d, g.m);
    std::vector<unsigned> idx(E.size(), 0);
    while (true) {
        // coefficient product with incoming derivatives
        Poly coef = Poly::constant(d, Rat(1));
        bool ok = true;
        for (unsigned i = 0; i < g.n && ok; ++i) {
            std::vector<int> my_out;
            for (unsigned e = 0; e < E.size(); ++e)
                if (E[e].first == i) my_out.push_back(static_cast<int>(idx[e]));
            Poly p = args[i].skew_coeff(my_out);
            if (p.is_zero()) {
                ok = false;
                break;
            }
            for (unsigned e = 0; e < E.size(); ++e)
                if (E[e].second == i) {
                    p = p.partial(idx[e]);
                    if (p.is_zero()) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) break;
            coef = coef * p;
            if (coef.is_zero()) ok = false;
        }
        if (ok) {
            PolyDiffOp::DKey K;
            for (unsigned gv = g.n; gv < g.n + g.m; ++gv) {
                Mono mo(d);
                for (unsigned e = 0; e < E.size(); ++e)
                    if (E[e].second == gv) ++mo.exp[idx[e]];
                K.push_back(std::move(mo));
            }
            out.add_term(K, coef);
        }
        // next index assignment
        unsigned e = 0;
        for (; e < E.size(); ++e) {
            if (++idx[e] < d) break;
            idx[e] = 0;
        }
        if (e == E.size()) break;
    }
    return out;
}

std::string AdmissibleGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    nlohmann::json es = nlohmann::json::array();
    auto vname = [&](unsigned v) -> nlohmann::json {
        if (v < n) return v + 1;
        unsigned gi = v - n;
        if (gi == 0) return "L";
        if (gi == 1) return "R";
        return "G" + std::to_string(gi + 1);
    };
    for (const auto& [s, t] : edges()) es.push_back({vname(s), vname(t)});
    j["edges"] = es;
    return j.dump();
}

AdmissibleGraph AdmissibleGraph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AdmissibleGraph g;
    g.n = j.at("n").get<unsigned>();
    g.m = j.at("m").get<unsigned>();
    g.targets.assign(g.n, {});
    auto vid = [&](const nlohmann::json& v) -> unsigned {
        if (v.is_number_integer()) {
            unsigned a = v.get<unsigned>();
            if (a < 1 || a > g.n) throw std::invalid_argument("graph json: bad aerial vertex");
            return a - 1;
        }
        std::string s = v.get<std::string>();
        if (s == "L") return g.n;
        if (s == "R") return g.n + 1;
        if (s.size() >= 2 && s[0] == 'G') {
            unsigned gi = static_cast<unsigned>(std::stoul(s.substr(1)));
            if (gi < 3 || gi > g.m) throw std::invalid_argument("graph json: bad ground vertex");
            return g.n + gi - 1;
        }
        throw std::invalid_argument("graph json: bad vertex label '" + s + "'");
    };
    for (const auto& e : j.at("edges")) {
        unsigned s = vid(e.at(0)), t = vid(e.at(1));
        if (s >= g.n) throw std::invalid_argument("graph json: edge source must be aerial");
        if (t == s) throw std::invalid_argument("graph json: loop edge");
        g.targets[s].push_back(t);
    }
    for (auto& t : g.targets) {
        std::sort(t.begin(), t.end());
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] == t[i + 1]) throw std::invalid_argument("graph json: parallel edges");
    }
    return g;
}

} // namespace defq
