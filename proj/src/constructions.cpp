#include "armatch/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "armatch/prng.hpp"

namespace armatch {

SubHypergraph build_turan_extremal(const PartProfile& profile, int k) {
    if (k < 2 || k - 1 > profile.size_of(1)) throw std::invalid_argument("construction undefined");
    // Part 1 is most significant in the rank order, so the edges with
    // part-1 coordinate <= k-1 are exactly the ranks below (k-1)*stride(1).
    const std::uint64_t cutoff = static_cast<std::uint64_t>(k - 1) * profile.stride(1);
    EdgeSet members(profile.edge_count());
    for (std::uint32_t rank = 0; rank < cutoff; ++rank) members.set(rank);
    return SubHypergraph(profile, std::move(members));
}

EdgeColoring build_phi_r(const PartProfile& profile, int k) {
    if (k < 2 || k - 2 >= profile.size_of(1)) throw std::invalid_argument("construction undefined");
    const std::uint64_t rainbow_cutoff = static_cast<std::uint64_t>(k - 2) * profile.stride(1);
    const int shared = static_cast<int>(rainbow_cutoff) + 1; // extra color is last
    std::vector<int> colors(profile.edge_count());
    for (std::uint32_t rank = 0; rank < profile.edge_count(); ++rank)
        colors[rank] = rank < rainbow_cutoff ? static_cast<int>(rank) + 1 : shared;
    return EdgeColoring(SubHypergraph::complete(profile), std::move(colors));
}

QClassFamily qclass_family(const PartProfile& profile) {
    if (profile.size_of(1) != 2) throw std::invalid_argument("construction undefined");
    QClassFamily fam;
    fam.t = 1;
    while (fam.t < profile.part_count() && profile.size_of(fam.t + 1) == 2) ++fam.t;

    const std::uint32_t prefixes = std::uint32_t{1} << fam.t;
    const std::uint32_t all_ones = prefixes - 1;
    for (std::uint32_t code = 0; code < prefixes; ++code) {
        std::uint32_t comp = code ^ all_ones; // flip every size-2 coordinate
        if (code < comp) fam.classes.emplace_back(code, comp);
    }
    return fam;
}

EdgeColoring build_qclass_coloring(const PartProfile& profile) {
    const QClassFamily fam = qclass_family(profile);

    std::map<std::uint32_t, int> color_of_min_code;
    for (std::size_t i = 0; i < fam.classes.size(); ++i)
        color_of_min_code[fam.classes[i].first] = static_cast<int>(i) + 1;

    const std::uint32_t all_ones = (std::uint32_t{1} << fam.t) - 1;
    std::vector<int> colors(profile.edge_count());
    for (std::uint32_t rank = 0; rank < profile.edge_count(); ++rank) {
        std::uint32_t code = 0;
        for (int s = 1; s <= fam.t; ++s)
            code = (code << 1) | static_cast<std::uint32_t>(coord_of(profile, EdgeId{rank}, s) - 1);
        colors[rank] = color_of_min_code.at(std::min(code, code ^ all_ones));
    }
    return EdgeColoring(SubHypergraph::complete(profile), std::move(colors));
}

SubHypergraph representing_subhypergraph(const EdgeColoring& coloring, RepresentativeSelector selector,
                                         std::uint64_t seed) {
    EdgeSet picked(coloring.profile().edge_count());
    for (int c = 1; c <= coloring.color_count(); ++c) {
        const EdgeSet& cls = coloring.color_class(c);
        if (selector == RepresentativeSelector::min_rank) {
            picked.set(static_cast<std::uint32_t>(cls.next(0)));
        } else {
            const auto ranks = cls.to_vector();
            picked.set(ranks[rng_below(seed, static_cast<std::uint64_t>(c), 0, ranks.size())]);
        }
    }
    return SubHypergraph(coloring.profile(), std::move(picked));
}

} // namespace armatch
