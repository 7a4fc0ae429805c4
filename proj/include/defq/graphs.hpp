#pragma once

#include "defq/polydiff.hpp"
#include "defq/polyvec.hpp"

#include <string>
#include <vector>

namespace defq {

/// Admissible graph: n aerial vertices (0-based 0..n-1) with ordered
/// out-edge target lists, m ground vertices (n..n+m-1). No loops, no
/// parallel edges; target lists kept sorted ascending (the canonical
/// edge order fixing the orientation).
struct AdmissibleGraph {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::vector<unsigned>> targets;   // targets[i] sorted, size = arity of vertex i

    std::vector<unsigned> arities() const {
        std::vector<unsigned> a(n);
        for (unsigned i = 0; i < n; ++i) a[i] = static_cast<unsigned>(targets[i].size());
        return a;
    }
    unsigned edge_count() const {
        unsigned e = 0;
        for (const auto& t : targets) e += static_cast<unsigned>(t.size());
        return e;
    }
    std::vector<std::pair<unsigned, unsigned>> edges() const {
        std::vector<std::pair<unsigned, unsigned>> es;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned t : targets[i]) es.emplace_back(i, t);
        return es;
    }

    friend auto operator<=>(const AdmissibleGraph&, const AdmissibleGraph&) = default;

    /// JSON exchange form {n, m, edges: [[src,tgt],...]} with aerial
    /// vertices 1..n and grounds "L","R","G3",... 1-based on the wire.
    std::string to_json() const;
    static AdmissibleGraph from_json(const std::string& text);
};

/// Number of ground vertices dictated by the degree bookkeeping,
/// m = 2 - 2n + sum(k_i); negative means the request is impossible.
int ground_count(const std::vector<unsigned>& arities);

/// Complete duplicate-free list of admissible graphs for the given
/// out-degree profile. Throws std::invalid_argument when the ground
/// count is negative.
std::vector<AdmissibleGraph> enumerate_graphs(const std::vector<unsigned>& arities);

/// Canonical representative over arity-preserving vertex relabelings
/// (profile sorted ascending by arity), with the orientation sign of the
/// edge-form permutation. sign = 0 when an odd automorphism forces the
/// weight to vanish.
struct CanonicalGraph {
    AdmissibleGraph graph;
    int sign = 1;
};
CanonicalGraph canonicalize(const AdmissibleGraph& g);

/// B_Gamma: place each argument's skew tensor at its vertex, let each edge
/// differentiate its target, sum over index assignments.
PolyDiffOp graph_operator(const AdmissibleGraph& g, const std::vector<PolyVec>& args);

} // namespace defq
