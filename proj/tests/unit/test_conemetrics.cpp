#include <doctest.h>

#include <set>

#include "cycov/conemetrics.hpp"

using namespace cycov;

namespace {

// Every positive tuple with sum (n-2)d, fed to the oracle.
std::set<std::vector<long>> brute_admissible(const BranchingData& b)
{
    std::set<std::vector<long>> out;
    const long total = (static_cast<long>(b.n()) - 2) * b.d();
    std::vector<long> a(b.n());
    auto rec = [&](auto& self, std::size_t i, long left) -> void {
        if (i + 1 == a.size()) {
            if (left < 1) return;
            a[i] = left;
            if (is_admissible_oracle(b, a)) out.insert(a);
            return;
        }
        for (long x = 1; x <= left - static_cast<long>(a.size() - i - 1); ++x) {
            a[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace

TEST_SUITE("conemetrics")
{
    TEST_CASE("Octa-4 metrics and divisors")
    {
        const auto b = BranchingData::make(8, {1, 2, 5});
        const auto ms = all_admissible(b);
        REQUIRE(ms.size() == 3);
        CHECK(ms[0].a == std::vector<long>{1, 2, 5});
        CHECK(ms[1].a == std::vector<long>{2, 4, 2});
        CHECK(ms[2].a == std::vector<long>{5, 2, 1});
        CHECK(divisor_of(ms[0]).str(b) == "4*p3");
        CHECK(divisor_of(ms[1]).str(b) == "p1+p2,0+p2,1+p3");
        CHECK(divisor_of(ms[2]).str(b) == "4*p1");
        const auto cc = count_checks(b);
        CHECK(cc.count == 3);
        CHECK(cc.exactly_g);
    }

    TEST_CASE("generator agrees with the oracle")
    {
        for (const auto& c : enumerate({3, 2, std::nullopt, Equivalence::Dihedral})) {
            if (c.cover.n() > 5) continue;
            std::set<std::vector<long>> got;
            for (const auto& m : all_admissible(c.cover)) got.insert(m.a);
            CHECK_MESSAGE(got == brute_admissible(c.cover), c.cover.str());
        }
    }

    TEST_CASE("divisors are effective of degree 2g-2")
    {
        for (const auto& c : enumerate({4, 2, std::nullopt, Equivalence::Dihedral})) {
            for (const auto& m : all_admissible(c.cover)) {
                const auto D = divisor_of(m);
                CHECK(D.effective());
                CHECK(D.degree() == 2 * c.genus - 2);
            }
        }
    }

    TEST_CASE("non-admissible metrics are rejected")
    {
        const auto b = BranchingData::make(8, {1, 2, 5});
        CHECK_FALSE(is_admissible_oracle(b, {3, 3, 2}));
        CHECK(admissible_multiplier(b, {3, 3, 2}) == -1);
        CHECK_THROWS_AS(make_metric(b, {3, 3, 2}), Error);
        CHECK_FALSE(is_admissible_oracle(b, {1, 2}));
        CHECK(make_metric(b, {5, 2, 1}).mu == 5);
    }

    TEST_CASE("involution pairing on triples")
    {
        const auto b = BranchingData::make(7, {1, 2, 4});
        const auto ip = involution_pairing(b);
        CHECK(ip.genus == 3);
        CHECK(ip.zero_free_residues == 6);
        CHECK(ip.pairs.size() == 3);
        CHECK(ip.consistent);
        for (const auto& p : ip.pairs)
            for (std::size_t i = 0; i < 3; ++i) CHECK(p.admissible[i] + p.non_admissible[i] == 7);
        CHECK_THROWS_AS(involution_pairing(BranchingData::make(6, {1, 3, 5, 3})), Error);
    }

    TEST_CASE("degree-two relations for the sixfold Mucube")
    {
        const auto b = BranchingData::make(6, {1, 3, 5, 3});
        std::vector<Divisor> ds;
        for (const auto& m : all_admissible(b)) ds.push_back(divisor_of(m));
        REQUIRE(ds.size() == 3);
        const auto rel = monomial_relations(ds, 2);
        REQUIRE(rel.size() == 1);
        CHECK(monomial_str(rel[0].lhs) == "w1*w3");
        CHECK(monomial_str(rel[0].rhs) == "w2*w2");
        CHECK(rel[0].rank3_candidate);
        CHECK(rel[0].divisor == ds[0] + ds[2]);
        CHECK(rel[0].divisor == 2 * ds[1]);
        CHECK_THROWS_AS(monomial_relations(ds, 1), Error);
    }

    TEST_CASE("divisor arithmetic")
    {
        Divisor a, b;
        a.add({0, 0}, 2);
        b.add({0, 0}, -2);
        b.add({1, 1}, 1);
        const auto s = a + b;
        CHECK(s.entries().size() == 1);
        CHECK(s.at({1, 1}) == 1);
        CHECK(s.at({0, 0}) == 0);
        CHECK((3 * a).degree() == 6);
        CHECK_FALSE(b.effective());
    }
}
