#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "unispecht/errors.hpp"
#include "unispecht/theorems.hpp"

using namespace unispecht;
using test::ones;

namespace {

std::multiset<std::uint64_t> part_exponents(const Witness& w) {
    std::multiset<std::uint64_t> out;
    for (auto [part, exp] : w.picks)
        if (part >= 0)
            out.insert(exp);
    return out;
}

unsigned unit_count(const Witness& w) {
    unsigned count = 0;
    for (auto [part, exp] : w.picks)
        if (part < 0)
            ++count;
    return count;
}

} // namespace

TEST_CASE("witness recipes") {
    Witness w = witness_subset(9, 4, Partition{9});
    CHECK(part_exponents(w) == std::multiset<std::uint64_t>{1, 2, 7, 8});
    CHECK(unit_count(w) == 0);
    CHECK(witness_valid(w));

    w = witness_subset(9, 3, Partition{9});
    CHECK(part_exponents(w) == std::multiset<std::uint64_t>{1, 2, 6});
    CHECK(witness_valid(w));

    w = witness_subset(8, 3, Partition{4, 2, 1, 1});
    CHECK(unit_count(w) == 3);
    CHECK(part_exponents(w).empty());
    CHECK(witness_valid(w));
}

TEST_CASE("witness hypothesis violations") {
    CHECK_THROWS_AS(witness_subset(9, 5, Partition{9}), argument_error);
    CHECK_THROWS_AS(witness_subset(9, 1, Partition{9}), argument_error);
    CHECK_THROWS_AS(witness_subset(6, 2, Partition{6}), argument_error);
    CHECK_THROWS_AS(witness_subset(9, 3, Partition{8}), argument_error);
}

TEST_CASE("witness_valid rejects malformed selections") {
    Witness w;
    w.n = 9;
    w.k = 2;
    w.mu = Partition{9};
    w.picks = {{0, 1}, {0, 1}}; // repeated slot
    CHECK_FALSE(witness_valid(w));
    w.picks = {{0, 1}, {0, 2}}; // product is z^3 != 1
    CHECK_FALSE(witness_valid(w));
    w.picks = {{-1, 0}, {-1, 0}}; // only r-1 = 0 unit eigenvalues exist
    CHECK_FALSE(witness_valid(w));
    w.picks = {{0, 1}, {0, 8}};
    CHECK(witness_valid(w));
}

TEST_CASE("witnesses exist constructively across the whole hypothesis range") {
    for (unsigned n = 7; n <= 11; ++n)
        for (unsigned k = 2; k <= (n - 1) / 2; ++k)
            for (const Partition& mu : enumerate_partitions(n)) {
                Witness w = witness_subset(n, k, mu);
                CHECK(witness_valid(w));
                CHECK_FALSE(w.via_search);
            }
}

TEST_CASE("hook family suite") {
    for (const TheoremReport& r : verify_hook_family(10)) {
        INFO(r.name);
        CHECK(r.passed);
        CHECK_FALSE(r.counterexample.has_value());
    }
    CHECK_THROWS_AS(verify_hook_family(4), argument_error);
}

TEST_CASE("two-column family suite") {
    TheoremReport r = verify_two_column_family(10);
    CHECK(r.passed);
    CHECK_THROWS_AS(verify_two_column_family(4), argument_error);
}

TEST_CASE("minus-one rule suite") {
    CHECK(verify_minus_one_rule(12).passed);
}

TEST_CASE("single offender suite") {
    CHECK(verify_single_offender(9).passed);
}

TEST_CASE("eigenvalue-1 transfer between conjugate shapes") {
    for (unsigned n = 2; n <= 7; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (const Partition& mu : enumerate_partitions(n)) {
                if (class_parity(mu) == 1) {
                    CHECK(fixed_space_dim(lambda, mu) == fixed_space_dim(conjugate(lambda), mu));
                } else {
                    bool has_one = fixed_space_dim(lambda, mu) >= 1;
                    bool conj_has_minus_one =
                        minus_one_multiplicity(conjugate(lambda), mu) >= 1;
                    CHECK(has_one == conj_has_minus_one);
                }
            }
}

TEST_CASE("column hook picks up -1 with multiplicity r-1 on odd classes") {
    for (unsigned n = 3; n <= 8; ++n) {
        std::vector<unsigned> parts{2};
        parts.insert(parts.end(), n - 2, 1);
        Partition column_hook(parts);
        for (const Partition& mu : enumerate_partitions(n))
            if (class_parity(mu) == -1)
                CHECK(minus_one_multiplicity(column_hook, mu) >= mu.rows() - 1);
    }
}

TEST_CASE("the 768-dimensional staircase module of S_10") {
    UnisingularVerdict v = resolve_open_case();
    CHECK(v.lambda == Partition{4, 3, 2, 1});
    CHECK(v.dimension == 768);
    CHECK(fixed_space_dim(Partition{4, 3, 2, 1}, ones(10)) == 768);
    CHECK(v.unisingular);
    CHECK(v.offending.empty());
}
