#include "defq/coalgebra.hpp"

namespace defq {

namespace {

void partitions_rec(const std::vector<unsigned>& elems,
                    std::vector<std::vector<unsigned>>& current,
                    std::vector<std::vector<std::vector<unsigned>>>& out) {
    if (elems.empty()) {
        out.push_back(current);
        return;
    }
    unsigned first = elems[0];
    std::vector<unsigned> rest(elems.begin() + 1, elems.end());
    const unsigned r = static_cast<unsigned>(rest.size());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<unsigned> block{first}, remaining;
        for (unsigned i = 0; i < r; ++i)
            ((mask >> i) & 1 ? block : remaining).push_back(rest[i]);
        current.push_back(block);
        partitions_rec(remaining, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::vector<unsigned>>> set_partitions(unsigned n) {
    std::vector<unsigned> elems(n);
    for (unsigned i = 0; i < n; ++i) elems[i] = i;
    std::vector<std::vector<std::vector<unsigned>>> out;
    std::vector<std::vector<unsigned>> current;
    partitions_rec(elems, current, out);
    return out;
}

} // namespace defq
