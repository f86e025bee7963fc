#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "armatch/kernels.hpp"

namespace armatch {

// Part sizes n_1 <= ... <= n_r of a complete r-partite r-uniform host.
// Canonically sorted at construction; the sorting permutation from the
// caller's order is kept for reporting.
class PartProfile {
public:
    PartProfile() = default;
    explicit PartProfile(std::vector<int> sizes); // throws on r < 2 or n_i < 1

    int part_count() const { return static_cast<int>(sizes_.size()); }
    const std::vector<int>& sizes() const { return sizes_; }
    int size_of(int part) const { return sizes_[static_cast<std::size_t>(part - 1)]; } // part is 1-based
    // input_order[i] = 1-based position in the caller's list that became part i+1
    const std::vector<int>& input_order() const { return input_order_; }

    std::uint64_t edge_count() const { return edge_count_; }
    std::uint64_t stride(int part) const { return strides_[static_cast<std::size_t>(part - 1)]; }

    std::string to_string() const; // "2x2x3"

    bool operator==(const PartProfile& o) const { return sizes_ == o.sizes_; }

private:
    std::vector<int> sizes_;
    std::vector<int> input_order_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t edge_count_ = 0;
};

PartProfile make_profile(std::vector<int> sizes);
PartProfile parse_profile(const std::string& text); // "2x2x3"

struct Vertex {
    int part = 0;  // 1..r
    int index = 0; // 1..n_part
    bool operator==(const Vertex&) const = default;
};

// One vertex per part, by 1-based within-part index.
struct Edge {
    std::vector<int> coords;
    bool operator==(const Edge&) const = default;
};

struct EdgeId {
    std::uint32_t rank = 0;
    auto operator<=>(const EdgeId&) const = default;
};

EdgeId edge_rank(const PartProfile& profile, const Edge& edge);
Edge edge_unrank(const PartProfile& profile, EdgeId id);
// Within-part index of `id` in `part` without materializing the full edge.
int coord_of(const PartProfile& profile, EdgeId id, int part);
bool is_disjoint(const Edge& e, const Edge& f);

std::string edge_to_string(const Edge& e); // "(1,2,1)"
Edge edge_from_string(const std::string& text);

void check_vertex(const PartProfile& profile, Vertex v); // throws "invalid vertex"

// Dense bitset over edge ranks. Bulk operations go through the runtime-
// selected bit kernels.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::uint64_t bit_size);
    static EdgeSet full(std::uint64_t bit_size);

    std::uint64_t bit_size() const { return bits_; }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::uint64_t count() const;
    bool empty() const { return count() == 0; }

    EdgeSet& operator&=(const EdgeSet& o);
    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& and_not(const EdgeSet& o); // *this &= ~o
    EdgeSet& operator^=(const EdgeSet& o);

    std::uint64_t count_and(const EdgeSet& o) const; // |*this & o|
    bool intersects(const EdgeSet& o) const;
    bool is_subset_of(const EdgeSet& o) const;
    bool operator==(const EdgeSet& o) const { return bits_ == o.bits_ && words_ == o.words_; }

    // First member with rank >= from, or -1.
    std::int64_t next(std::uint32_t from = 0) const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::int64_t i = next(0); i >= 0; i = next(static_cast<std::uint32_t>(i) + 1))
            f(static_cast<std::uint32_t>(i));
    }

    std::vector<std::uint32_t> to_vector() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// A subset of the complete edge set over a profile. Immutable once built.
class SubHypergraph {
public:
    SubHypergraph() = default;
    SubHypergraph(PartProfile profile, EdgeSet members);
    static SubHypergraph complete(const PartProfile& profile);
    static SubHypergraph empty(const PartProfile& profile);
    static SubHypergraph of_ranks(const PartProfile& profile, const std::vector<std::uint32_t>& ranks);

    const PartProfile& profile() const { return profile_; }
    const EdgeSet& members() const { return members_; }
    std::uint64_t edge_count() const { return members_.count(); }
    bool contains(EdgeId id) const { return members_.test(id.rank); }

private:
    PartProfile profile_;
    EdgeSet members_;
};

std::uint64_t degree(const SubHypergraph& sub, Vertex v);
// 0 when u and v share a part (including u == v).
std::uint64_t codegree(const SubHypergraph& sub, Vertex u, Vertex v);
SubHypergraph remove_vertex(const SubHypergraph& sub, Vertex v);

// Total surjective map from a domain subhypergraph onto colors 1..q.
class EdgeColoring {
public:
    EdgeColoring() = default;
    // color_by_rank has one entry per rank of the complete host; 0 marks
    // ranks outside the domain. Validates totality and surjectivity.
    EdgeColoring(SubHypergraph domain, std::vector<int> color_by_rank);

    const SubHypergraph& domain() const { return domain_; }
    const PartProfile& profile() const { return domain_.profile(); }
    int color_count() const { return q_; }
    int color_of(EdgeId id) const { return color_by_rank_[id.rank]; }
    const EdgeSet& color_class(int color) const { return classes_[static_cast<std::size_t>(color)]; }
    const std::vector<int>& colors_by_rank() const { return color_by_rank_; }

private:
    SubHypergraph domain_;
    std::vector<int> color_by_rank_;
    std::vector<EdgeSet> classes_; // index 1..q
    int q_ = 0;
};

// Pairwise vertex-disjoint member edges, kept sorted by rank.
class Matching {
public:
    Matching() = default;
    Matching(PartProfile profile, std::vector<EdgeId> edges); // validates disjointness

    const PartProfile& profile() const { return profile_; }
    const std::vector<EdgeId>& edge_ids() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    std::vector<Edge> edges() const;

private:
    PartProfile profile_;
    std::vector<EdgeId> edges_;
};

// Flattened r coords per rank, 1-based; the solvers' lookup table.
std::vector<int> coord_table(const PartProfile& profile);

} // namespace armatch
