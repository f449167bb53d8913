#include <doctest.h>

#include "cycov/lifts.hpp"

using namespace cycov;

namespace {

// Order of the lift by brute force: iterate the map on (puncture, sheet).
long brute_order(const IndexMap& m, long mu, long nu)
{
    const long d = m.source().d();
    const std::size_t n = m.phi().size();
    std::vector<std::size_t> p(n);
    std::vector<long> s(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (long j = 0; j < d; ++j) s[static_cast<std::size_t>(j)] = j;
    for (long t = 1; t <= 4 * d * static_cast<long>(n); ++t) {
        for (auto& x : p) x = m.phi()[x];
        for (auto& x : s) x = ((mu * x + nu) % d + d) % d;
        bool id = true;
        for (std::size_t i = 0; i < n; ++i) id = id && p[i] == i;
        for (long j = 0; j < d; ++j) id = id && s[static_cast<std::size_t>(j)] == j;
        if (id) return t;
    }
    return -1;
}

}  // namespace

TEST_SUITE("lifts")
{
    TEST_CASE("Octa-4 reflection")
    {
        const auto b = BranchingData::make(8, {1, 2, 5});
        const auto m = IndexMap::make(b, b, {2, 1, 0});
        CHECK(m.perm_order() == 2);
        CHECK(compatible_mus(m) == std::vector<long>{5});
        for (long nu = 0; nu < 8; ++nu) {
            const AffineLift l{5, nu, 8};
            const long expected = nu % 2 ? 8 : (nu == 2 || nu == 6 ? 4 : 2);
            const long got = lift_order(m, l);
            CHECK(got == (nu == 0 ? 2 : expected));
            CHECK(got == brute_order(m, 5, nu));
            const auto act = preimage_action(m, l);
            const bool swapped = act.map.at({1, 0}) == PointLabel{1, 1};
            CHECK(swapped == (nu % 2 == 1));
        }
    }

    TEST_CASE("Klein rotation")
    {
        const auto b = BranchingData::make(7, {1, 2, 4});
        const auto rot = IndexMap::make(b, b, {1, 2, 0});
        CHECK(compatible_mus(rot) == std::vector<long>{2});
        for (long nu = 0; nu < 7; ++nu) CHECK(lift_order(rot, {2, nu, 7}) == 3);
        const auto id = IndexMap::identity(b);
        for (long nu = 1; nu < 7; ++nu) CHECK(lift_order(id, {1, nu, 7}) == 7);
    }

    TEST_CASE("orders agree with iteration")
    {
        for (const auto& c : enumerate({3, 2, std::nullopt, Equivalence::Dihedral})) {
            for (const auto& phi : dihedral_maps(c.cover.n())) {
                const auto m = IndexMap::make(c.cover, c.cover, phi);
                for (const auto& e : enumerate_lifts(m)) CHECK(e.order == brute_order(m, e.lift.mu, e.lift.nu));
            }
        }
    }

    TEST_CASE("invalid maps and lifts")
    {
        const auto b = BranchingData::make(6, {1, 3, 5, 3});
        CHECK_THROWS_AS(IndexMap::make(b, b, {1, 0, 2, 3}), Error);
        CHECK_THROWS_AS(IndexMap::make(b, b, {0, 0, 1, 2}), Error);
        CHECK_THROWS_AS(affine_order({2, 0, 6}), Error);
        CHECK(affine_order({1, 0, 6}) == 1);
        CHECK(affine_order({1, 1, 6}) == 6);
        CHECK(affine_order({5, 0, 6}) == 2);
        const auto m = IndexMap::identity(BranchingData::make(8, {1, 2, 5}));
        CHECK_THROWS_AS(lift_order(m, {3, 0, 8}), Error);
    }

    TEST_CASE("maps between different covers")
    {
        const auto a = BranchingData::make(8, {1, 2, 5});
        const auto b = BranchingData::make(8, {5, 2, 1});
        const auto m = IndexMap::make(a, b, {0, 1, 2});
        CHECK_FALSE(m.is_endomorphism());
        CHECK(compatible_mus(m) == std::vector<long>{5});
        CHECK_THROWS_AS(preimage_action(m, {5, 0, 8}), Error);
    }

    TEST_CASE("label classes group equal actions")
    {
        const auto b = BranchingData::make(8, {1, 2, 5});
        const auto lifts = enumerate_lifts(IndexMap::make(b, b, {2, 1, 0}));
        REQUIRE(lifts.size() == 8);
        for (const auto& e : lifts) CHECK(e.label_class == static_cast<std::size_t>(e.lift.nu % 2));
    }
}
