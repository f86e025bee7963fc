#include "armatch/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "armatch/prng.hpp"

namespace armatch {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
    return a * b;
}

std::uint64_t factorial_sat(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

// Runs of equal part sizes, as 0-based [begin, end) index pairs.
std::vector<std::pair<int, int>> size_blocks(const PartProfile& profile) {
    std::vector<std::pair<int, int>> blocks;
    const int r = profile.part_count();
    int begin = 0;
    for (int s = 1; s <= r; ++s) {
        if (s == r || profile.size_of(s + 1) != profile.size_of(begin + 1)) {
            blocks.emplace_back(begin, s);
            begin = s;
        }
    }
    return blocks;
}

// All part permutations preserving sizes (product of permutations within
// each equal-size block), as 0-based image vectors.
std::vector<std::vector<int>> part_permutations(const PartProfile& profile) {
    const int r = profile.part_count();
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<int>> block_orders;
    for (auto [b, e] : size_blocks(profile)) {
        std::vector<int> ids(static_cast<std::size_t>(e - b));
        std::iota(ids.begin(), ids.end(), b);
        block_orders.push_back(std::move(ids));
    }
    // odometer over per-block permutations
    std::vector<std::vector<int>> current = block_orders;
    while (true) {
        std::vector<int> perm(static_cast<std::size_t>(r));
        for (std::size_t bi = 0; bi < block_orders.size(); ++bi)
            for (std::size_t j = 0; j < block_orders[bi].size(); ++j)
                perm[static_cast<std::size_t>(block_orders[bi][j])] = current[bi][j];
        perms.push_back(std::move(perm));
        std::size_t bi = 0;
        while (bi < current.size() && !std::next_permutation(current[bi].begin(), current[bi].end()))
            ++bi;
        if (bi == current.size()) break;
    }
    return perms;
}

// Visit every automorphism as a rank permutation (perm[old_rank] = new_rank).
template <typename Fn>
void for_each_rank_permutation(const PartProfile& profile, std::uint64_t group_cap, Fn&& fn) {
    if (automorphism_group_order(profile) > group_cap)
        throw std::runtime_error("canonicalization budget exceeded");

    const int r = profile.part_count();
    const std::uint64_t total = profile.edge_count();
    const auto coords = coord_table(profile);
    const auto part_perms = part_permutations(profile);

    std::vector<std::vector<int>> vperm(static_cast<std::size_t>(r)); // 0-based image per part
    std::vector<std::uint32_t> rank_perm(total);

    for (const auto& pperm : part_perms) {
        for (int s = 0; s < r; ++s) {
            vperm[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(profile.size_of(s + 1)));
            std::iota(vperm[static_cast<std::size_t>(s)].begin(), vperm[static_cast<std::size_t>(s)].end(), 0);
        }
        while (true) {
            for (std::uint32_t rank = 0; rank < total; ++rank) {
                const int* c = coords.data() + static_cast<std::size_t>(rank) * static_cast<std::size_t>(r);
                std::uint64_t image = 0;
                for (int s = 0; s < r; ++s)
                    image += static_cast<std::uint64_t>(vperm[static_cast<std::size_t>(s)][static_cast<std::size_t>(c[s] - 1)]) *
                             profile.stride(pperm[static_cast<std::size_t>(s)] + 1);
                rank_perm[rank] = static_cast<std::uint32_t>(image);
            }
            fn(rank_perm);
            int s = 0;
            while (s < r && !std::next_permutation(vperm[static_cast<std::size_t>(s)].begin(),
                                                   vperm[static_cast<std::size_t>(s)].end()))
                ++s;
            if (s == r) break;
        }
    }
}

void append_header(std::vector<std::uint8_t>& out, const PartProfile& profile) {
    out.push_back(static_cast<std::uint8_t>(profile.part_count()));
    for (int n : profile.sizes()) {
        out.push_back(static_cast<std::uint8_t>(n & 0xff));
        out.push_back(static_cast<std::uint8_t>((n >> 8) & 0xff));
    }
}

std::vector<std::uint8_t> pack_bits(const std::vector<std::uint32_t>& positions, std::uint64_t bit_size) {
    std::vector<std::uint8_t> bytes((bit_size + 7) / 8, 0);
    for (std::uint32_t p : positions) bytes[p >> 3] |= static_cast<std::uint8_t>(0x80u >> (p & 7));
    return bytes;
}

} // namespace

std::string CanonicalLabel::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

std::uint64_t automorphism_group_order(const PartProfile& profile) {
    std::uint64_t order = 1;
    for (int n : profile.sizes()) order = sat_mul(order, factorial_sat(n));
    for (auto [b, e] : size_blocks(profile)) order = sat_mul(order, factorial_sat(e - b));
    return order;
}

CanonicalLabel canonical_form(const SubHypergraph& sub, std::uint64_t group_cap) {
    const auto members = sub.members().to_vector();
    const std::uint64_t total = sub.profile().edge_count();

    CanonicalLabel best;
    std::vector<std::uint32_t> image(members.size());
    for_each_rank_permutation(sub.profile(), group_cap, [&](const std::vector<std::uint32_t>& perm) {
        for (std::size_t i = 0; i < members.size(); ++i) image[i] = perm[members[i]];
        std::vector<std::uint8_t> bytes;
        append_header(bytes, sub.profile());
        auto payload = pack_bits(image, total);
        bytes.insert(bytes.end(), payload.begin(), payload.end());
        if (best.bytes.empty() || bytes < best.bytes) best.bytes = std::move(bytes);
    });
    return best;
}

CanonicalLabel canonical_form(const EdgeColoring& coloring, std::uint64_t group_cap) {
    const PartProfile& profile = coloring.profile();
    const std::uint64_t total = profile.edge_count();
    const int q = coloring.color_count();

    std::vector<std::vector<std::uint32_t>> classes(static_cast<std::size_t>(q));
    for (int c = 1; c <= q; ++c) classes[static_cast<std::size_t>(c - 1)] = coloring.color_class(c).to_vector();

    CanonicalLabel best;
    for_each_rank_permutation(profile, group_cap, [&](const std::vector<std::uint32_t>& perm) {
        std::vector<std::vector<std::uint8_t>> payloads;
        payloads.reserve(static_cast<std::size_t>(q));
        std::vector<std::uint32_t> image;
        for (const auto& cls : classes) {
            image.resize(cls.size());
            for (std::size_t i = 0; i < cls.size(); ++i) image[i] = perm[cls[i]];
            payloads.push_back(pack_bits(image, total));
        }
        std::sort(payloads.begin(), payloads.end()); // color relabeling quotient
        std::vector<std::uint8_t> bytes;
        append_header(bytes, profile);
        bytes.push_back(static_cast<std::uint8_t>(q & 0xff));
        bytes.push_back(static_cast<std::uint8_t>((q >> 8) & 0xff));
        for (const auto& p : payloads) bytes.insert(bytes.end(), p.begin(), p.end());
        if (best.bytes.empty() || bytes < best.bytes) best.bytes = std::move(bytes);
    });
    return best;
}

SubHypergraph restrict_to_support(const SubHypergraph& sub) {
    if (sub.members().empty()) return SubHypergraph::empty(make_profile({1, 1}));

    const PartProfile& profile = sub.profile();
    const int r = profile.part_count();
    std::vector<std::map<int, int>> renumber(static_cast<std::size_t>(r)); // old coord -> new 1-based
    sub.members().for_each([&](std::uint32_t rank) {
        for (int s = 1; s <= r; ++s) renumber[static_cast<std::size_t>(s - 1)][coord_of(profile, EdgeId{rank}, s)] = 0;
    });
    std::vector<int> reduced_sizes(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) {
        int next = 1;
        for (auto& [coord, id] : renumber[static_cast<std::size_t>(s)]) id = next++;
        reduced_sizes[static_cast<std::size_t>(s)] = next - 1;
    }

    PartProfile reduced = make_profile(reduced_sizes);
    EdgeSet members(reduced.edge_count());
    sub.members().for_each([&](std::uint32_t rank) {
        Edge e;
        e.coords.resize(static_cast<std::size_t>(r));
        for (int s = 1; s <= r; ++s) {
            const int original_part = reduced.input_order()[static_cast<std::size_t>(s - 1)];
            e.coords[static_cast<std::size_t>(s - 1)] =
                renumber[static_cast<std::size_t>(original_part - 1)].at(coord_of(profile, EdgeId{rank}, original_part));
        }
        members.set(edge_rank(reduced, e).rank);
    });
    return SubHypergraph(std::move(reduced), std::move(members));
}

namespace {

std::vector<std::uint32_t> random_rank_permutation(const PartProfile& profile, std::uint64_t seed) {
    const int r = profile.part_count();

    std::vector<int> pperm(static_cast<std::size_t>(r));
    std::iota(pperm.begin(), pperm.end(), 0);
    for (auto [b, e] : size_blocks(profile))
        for (int i = e - 1; i > b; --i)
            std::swap(pperm[static_cast<std::size_t>(i)],
                      pperm[static_cast<std::size_t>(b + static_cast<int>(rng_below(seed, 1, static_cast<std::uint64_t>(i * 131 + b), static_cast<std::uint64_t>(i - b + 1))))]);

    std::vector<std::vector<int>> vperm(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) {
        auto& v = vperm[static_cast<std::size_t>(s)];
        v.resize(static_cast<std::size_t>(profile.size_of(s + 1)));
        std::iota(v.begin(), v.end(), 0);
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<std::size_t>(i)],
                      v[static_cast<std::size_t>(rng_below(seed, 2, static_cast<std::uint64_t>(s * 997 + i), static_cast<std::uint64_t>(i + 1)))]);
    }

    const auto coords = coord_table(profile);
    std::vector<std::uint32_t> perm(profile.edge_count());
    for (std::uint32_t rank = 0; rank < profile.edge_count(); ++rank) {
        const int* c = coords.data() + static_cast<std::size_t>(rank) * static_cast<std::size_t>(r);
        std::uint64_t image = 0;
        for (int s = 0; s < r; ++s)
            image += static_cast<std::uint64_t>(vperm[static_cast<std::size_t>(s)][static_cast<std::size_t>(c[s] - 1)]) *
                     profile.stride(pperm[static_cast<std::size_t>(s)] + 1);
        perm[rank] = static_cast<std::uint32_t>(image);
    }
    return perm;
}

} // namespace

SubHypergraph apply_random_automorphism(const SubHypergraph& sub, std::uint64_t seed) {
    const auto perm = random_rank_permutation(sub.profile(), seed);
    EdgeSet members(sub.profile().edge_count());
    sub.members().for_each([&](std::uint32_t rank) { members.set(perm[rank]); });
    return SubHypergraph(sub.profile(), std::move(members));
}

EdgeColoring apply_random_automorphism(const EdgeColoring& coloring, std::uint64_t seed) {
    const auto perm = random_rank_permutation(coloring.profile(), seed);
    const int q = coloring.color_count();

    std::vector<int> cperm(static_cast<std::size_t>(q) + 1);
    std::iota(cperm.begin(), cperm.end(), 0);
    for (int i = q; i > 1; --i)
        std::swap(cperm[static_cast<std::size_t>(i)],
                  cperm[static_cast<std::size_t>(1 + rng_below(seed, 3, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(i)))]);

    EdgeSet domain(coloring.profile().edge_count());
    std::vector<int> colors(coloring.profile().edge_count(), 0);
    coloring.domain().members().for_each([&](std::uint32_t rank) {
        domain.set(perm[rank]);
        colors[perm[rank]] = cperm[static_cast<std::size_t>(coloring.color_of(EdgeId{rank}))];
    });
    return EdgeColoring(SubHypergraph(coloring.profile(), std::move(domain)), std::move(colors));
}

} // namespace armatch
