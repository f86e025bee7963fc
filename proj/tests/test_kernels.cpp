#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <vector>

#include "armatch/kernels.hpp"
#include "armatch/prng.hpp"

using namespace armatch;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, std::uint64_t stream) {
    std::vector<std::uint64_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = rng_u64(42, stream, i);
    return w;
}

} // namespace

TEST_CASE("scalar kernels match direct word arithmetic") {
    const auto& s = kern::scalar_kernels();
    const auto a = random_words(9, 1);
    const auto b = random_words(9, 2);

    std::uint64_t pc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) pc += std::popcount(a[i]);
    CHECK(s.popcount(a.data(), a.size()) == pc);

    std::vector<std::uint64_t> dst(a.size());
    s.bit_andnot(dst.data(), a.data(), b.data(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(dst[i] == (a[i] & ~b[i]));

    CHECK(s.is_subset(dst.data(), a.data(), a.size()));
    CHECK(s.intersects(a.data(), a.data(), a.size()));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const auto* v = kern::avx2_kernels();
    if (!v) return; // nothing to compare on this machine
    const auto& s = kern::scalar_kernels();

    // Sizes straddle the 4-word vector width to hit every tail length.
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                          std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{13},
                          std::size_t{64}, std::size_t{129}}) {
        const auto a = random_words(n, 10 + n);
        const auto b = random_words(n, 20 + n);

        std::vector<std::uint64_t> ds(n), dv(n);
        s.bit_and(ds.data(), a.data(), b.data(), n);
        v->bit_and(dv.data(), a.data(), b.data(), n);
        CHECK(ds == dv);

        s.bit_or(ds.data(), a.data(), b.data(), n);
        v->bit_or(dv.data(), a.data(), b.data(), n);
        CHECK(ds == dv);

        s.bit_andnot(ds.data(), a.data(), b.data(), n);
        v->bit_andnot(dv.data(), a.data(), b.data(), n);
        CHECK(ds == dv);

        s.bit_xor(ds.data(), a.data(), b.data(), n);
        v->bit_xor(dv.data(), a.data(), b.data(), n);
        CHECK(ds == dv);

        CHECK(s.popcount(a.data(), n) == v->popcount(a.data(), n));
        CHECK(s.popcount_and(a.data(), b.data(), n) == v->popcount_and(a.data(), b.data(), n));
        CHECK(s.intersects(a.data(), b.data(), n) == v->intersects(a.data(), b.data(), n));
        CHECK(s.is_subset(a.data(), b.data(), n) == v->is_subset(a.data(), b.data(), n));

        // subset/intersects edge cases that random data rarely hits
        auto sub = a;
        for (auto& w : sub) w &= b.empty() ? 0 : b[0];
        if (n > 0) {
            std::vector<std::uint64_t> zero(n, 0);
            CHECK(s.intersects(zero.data(), a.data(), n) == v->intersects(zero.data(), a.data(), n));
            CHECK(s.is_subset(zero.data(), a.data(), n) == v->is_subset(zero.data(), a.data(), n));
        }
    }
}

TEST_CASE("aliasing dst with an input is allowed") {
    const auto& k = kern::active_kernels();
    auto a = random_words(11, 30);
    const auto b = random_words(11, 31);
    auto expect = a;
    for (std::size_t i = 0; i < a.size(); ++i) expect[i] = a[i] & b[i];
    k.bit_and(a.data(), a.data(), b.data(), a.size());
    CHECK(a == expect);
}

TEST_CASE("active kernel is one of the registered variants") {
    const auto& k = kern::active_kernels();
    const bool is_scalar = &k == &kern::scalar_kernels();
    const bool is_avx2 = kern::avx2_kernels() && &k == kern::avx2_kernels();
    CHECK((is_scalar || is_avx2));
}
