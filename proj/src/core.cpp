#include "armatch/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace armatch {

namespace {
const kern::Kernels& K() {
    static const kern::Kernels& k = kern::active_kernels();
    return k;
}
} // namespace

PartProfile::PartProfile(std::vector<int> sizes) {
    if (sizes.size() < 2) throw std::invalid_argument("arity too small");
    for (int n : sizes)
        if (n < 1) throw std::invalid_argument("invalid part size");

    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] < sizes[b]; });

    sizes_.reserve(sizes.size());
    input_order_.reserve(sizes.size());
    for (int pos : order) {
        sizes_.push_back(sizes[static_cast<std::size_t>(pos)]);
        input_order_.push_back(pos + 1);
    }

    strides_.assign(sizes_.size(), 1);
    for (int s = static_cast<int>(sizes_.size()) - 2; s >= 0; --s)
        strides_[static_cast<std::size_t>(s)] =
            strides_[static_cast<std::size_t>(s + 1)] * static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(s + 1)]);
    edge_count_ = strides_[0] * static_cast<std::uint64_t>(sizes_[0]);

    // edge ranks are 32-bit; anything near that is far past desk scale anyway
    std::uint64_t check = 1;
    for (int n : sizes_) {
        check *= static_cast<std::uint64_t>(n);
        if (check > (std::uint64_t{1} << 31)) throw std::invalid_argument("profile too large");
    }
}

std::string PartProfile::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(sizes_[i]);
    }
    return out;
}

PartProfile make_profile(std::vector<int> sizes) { return PartProfile(std::move(sizes)); }

PartProfile parse_profile(const std::string& text) {
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('x', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("invalid profile string: " + text);
        sizes.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return make_profile(std::move(sizes));
}

EdgeId edge_rank(const PartProfile& profile, const Edge& edge) {
    if (static_cast<int>(edge.coords.size()) != profile.part_count())
        throw std::invalid_argument("invalid edge");
    std::uint64_t rank = 0;
    for (int s = 1; s <= profile.part_count(); ++s) {
        int c = edge.coords[static_cast<std::size_t>(s - 1)];
        if (c < 1 || c > profile.size_of(s)) throw std::invalid_argument("invalid edge");
        rank += static_cast<std::uint64_t>(c - 1) * profile.stride(s);
    }
    return EdgeId{static_cast<std::uint32_t>(rank)};
}

Edge edge_unrank(const PartProfile& profile, EdgeId id) {
    if (id.rank >= profile.edge_count()) throw std::invalid_argument("invalid edge");
    Edge e;
    e.coords.resize(static_cast<std::size_t>(profile.part_count()));
    std::uint64_t rest = id.rank;
    for (int s = 1; s <= profile.part_count(); ++s) {
        e.coords[static_cast<std::size_t>(s - 1)] = static_cast<int>(rest / profile.stride(s)) + 1;
        rest %= profile.stride(s);
    }
    return e;
}

int coord_of(const PartProfile& profile, EdgeId id, int part) {
    return static_cast<int>((id.rank / profile.stride(part)) % static_cast<std::uint64_t>(profile.size_of(part))) + 1;
}

bool is_disjoint(const Edge& e, const Edge& f) {
    for (std::size_t s = 0; s < e.coords.size(); ++s)
        if (e.coords[s] == f.coords[s]) return false;
    return true;
}

std::string edge_to_string(const Edge& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e.coords[i]);
    }
    out += ')';
    return out;
}

Edge edge_from_string(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("invalid edge");
    Edge e;
    std::size_t pos = 1;
    while (pos < text.size() - 1 || e.coords.empty()) {
        std::size_t next = text.find(',', pos);
        std::size_t end = (next == std::string::npos || next > text.size() - 1) ? text.size() - 1 : next;
        std::string tok = text.substr(pos, end - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("invalid edge");
        e.coords.push_back(std::stoi(tok));
        if (next == std::string::npos || next >= text.size() - 1) break;
        pos = next + 1;
    }
    return e;
}

void check_vertex(const PartProfile& profile, Vertex v) {
    if (v.part < 1 || v.part > profile.part_count() || v.index < 1 || v.index > profile.size_of(v.part))
        throw std::invalid_argument("invalid vertex");
}

EdgeSet::EdgeSet(std::uint64_t bit_size) : bits_(bit_size), words_((bit_size + 63) / 64, 0) {}

EdgeSet EdgeSet::full(std::uint64_t bit_size) {
    EdgeSet s(bit_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (bit_size % 64) s.words_.back() = (std::uint64_t{1} << (bit_size % 64)) - 1;
    return s;
}

std::uint64_t EdgeSet::count() const { return K().popcount(words_.data(), words_.size()); }

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    K().bit_and(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    K().bit_or(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

EdgeSet& EdgeSet::and_not(const EdgeSet& o) {
    K().bit_andnot(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) {
    K().bit_xor(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

std::uint64_t EdgeSet::count_and(const EdgeSet& o) const {
    return K().popcount_and(words_.data(), o.words_.data(), words_.size());
}

bool EdgeSet::intersects(const EdgeSet& o) const {
    return K().intersects(words_.data(), o.words_.data(), words_.size());
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
    return K().is_subset(words_.data(), o.words_.data(), words_.size());
}

std::int64_t EdgeSet::next(std::uint32_t from) const {
    if (from >= bits_) return -1;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (cur) return static_cast<std::int64_t>((w << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
        if (++w >= words_.size()) return -1;
        cur = words_[w];
    }
}

std::vector<std::uint32_t> EdgeSet::to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
}

SubHypergraph::SubHypergraph(PartProfile profile, EdgeSet members)
    : profile_(std::move(profile)), members_(std::move(members)) {
    if (members_.bit_size() != profile_.edge_count())
        throw std::invalid_argument("member set size does not match profile");
}

SubHypergraph SubHypergraph::complete(const PartProfile& profile) {
    return SubHypergraph(profile, EdgeSet::full(profile.edge_count()));
}

SubHypergraph SubHypergraph::empty(const PartProfile& profile) {
    return SubHypergraph(profile, EdgeSet(profile.edge_count()));
}

SubHypergraph SubHypergraph::of_ranks(const PartProfile& profile, const std::vector<std::uint32_t>& ranks) {
    EdgeSet s(profile.edge_count());
    for (std::uint32_t r : ranks) {
        if (r >= profile.edge_count()) throw std::invalid_argument("invalid edge");
        s.set(r);
    }
    return SubHypergraph(profile, std::move(s));
}

std::uint64_t degree(const SubHypergraph& sub, Vertex v) {
    check_vertex(sub.profile(), v);
    std::uint64_t d = 0;
    sub.members().for_each([&](std::uint32_t r) {
        if (coord_of(sub.profile(), EdgeId{r}, v.part) == v.index) ++d;
    });
    return d;
}

std::uint64_t codegree(const SubHypergraph& sub, Vertex u, Vertex v) {
    check_vertex(sub.profile(), u);
    check_vertex(sub.profile(), v);
    if (u.part == v.part) return 0;
    std::uint64_t d = 0;
    sub.members().for_each([&](std::uint32_t r) {
        if (coord_of(sub.profile(), EdgeId{r}, u.part) == u.index &&
            coord_of(sub.profile(), EdgeId{r}, v.part) == v.index)
            ++d;
    });
    return d;
}

SubHypergraph remove_vertex(const SubHypergraph& sub, Vertex v) {
    check_vertex(sub.profile(), v);
    EdgeSet kept(sub.profile().edge_count());
    sub.members().for_each([&](std::uint32_t r) {
        if (coord_of(sub.profile(), EdgeId{r}, v.part) != v.index) kept.set(r);
    });
    return SubHypergraph(sub.profile(), std::move(kept));
}

EdgeColoring::EdgeColoring(SubHypergraph domain, std::vector<int> color_by_rank)
    : domain_(std::move(domain)), color_by_rank_(std::move(color_by_rank)) {
    if (color_by_rank_.size() != domain_.profile().edge_count())
        throw std::invalid_argument("color map size does not match profile");
    for (std::uint32_t r = 0; r < color_by_rank_.size(); ++r) {
        bool in_domain = domain_.contains(EdgeId{r});
        int c = color_by_rank_[r];
        if (in_domain && c < 1) throw std::invalid_argument("coloring not total on its domain");
        if (!in_domain && c != 0) throw std::invalid_argument("color assigned outside domain");
        q_ = std::max(q_, c);
    }
    classes_.assign(static_cast<std::size_t>(q_) + 1, EdgeSet(domain_.profile().edge_count()));
    for (std::uint32_t r = 0; r < color_by_rank_.size(); ++r)
        if (color_by_rank_[r] > 0) classes_[static_cast<std::size_t>(color_by_rank_[r])].set(r);
    for (int c = 1; c <= q_; ++c)
        if (classes_[static_cast<std::size_t>(c)].empty())
            throw std::invalid_argument("coloring not surjective onto 1..q");
}

Matching::Matching(PartProfile profile, std::vector<EdgeId> edges)
    : profile_(std::move(profile)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    std::vector<Edge> mat;
    mat.reserve(edges_.size());
    for (EdgeId id : edges_) mat.push_back(edge_unrank(profile_, id));
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = i + 1; j < mat.size(); ++j)
            if (!is_disjoint(mat[i], mat[j])) throw std::invalid_argument("edges are not pairwise disjoint");
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (EdgeId id : edges_) out.push_back(edge_unrank(profile_, id));
    return out;
}

std::vector<int> coord_table(const PartProfile& profile) {
    const int r = profile.part_count();
    std::vector<int> table(profile.edge_count() * static_cast<std::uint64_t>(r));
    for (std::uint32_t rank = 0; rank < profile.edge_count(); ++rank)
        for (int s = 1; s <= r; ++s)
            table[static_cast<std::size_t>(rank) * static_cast<std::size_t>(r) + static_cast<std::size_t>(s - 1)] =
                coord_of(profile, EdgeId{rank}, s);
    return table;
}

} // namespace armatch
