#pragma once

#include "defq/graphs.hpp"
#include "defq/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace defq {

/// Exact weight table keyed by canonical graphs, with provenance per entry.
class WeightTable {
public:
    struct Entry {
        Rat weight;
        std::string provenance;
    };

    /// Built-in table covering every admissible graph needed for U_n with
    /// n <= 2 over argument arities {0,1,2} (plus the n=2 trivector classes
    /// and the n=3 classes required by the order-2 theorem checkers).
    static const WeightTable& builtin();

    void set(const AdmissibleGraph& canonical_graph, const Rat& w, std::string provenance);

    /// Weight of an arbitrary labeled graph: orientation sign times the
    /// canonical entry. Missing entries return nullopt.
    std::optional<Rat> lookup(const AdmissibleGraph& g) const;
    std::optional<Entry> lookup_canonical(const AdmissibleGraph& canonical_graph) const;

    const std::map<AdmissibleGraph, Entry>& entries() const { return table_; }

    std::string to_json() const;
    static WeightTable from_json(const std::string& text);

private:
    std::map<AdmissibleGraph, Entry> table_;
};

} // namespace defq
