#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "unispecht/errors.hpp"
#include "unispecht/partition.hpp"

using namespace unispecht;
using test::brute_ssyt_count;
using test::ones;

TEST_CASE("partition canonical form") {
    CHECK(Partition{3, 1, 2}.parts() == std::vector<unsigned>{3, 2, 1});
    CHECK(Partition{0, 2} == Partition{2});
    CHECK(Partition{4, 3, 1}.n() == 8);
    CHECK(Partition{4, 3, 1}.str() == "(4,3,1)");
    CHECK(Partition{}.empty());
}

TEST_CASE("enumerate_partitions order and counts") {
    std::vector<Partition> p4 = enumerate_partitions(4);
    CHECK(p4 == std::vector<Partition>{
                    {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(1) == std::vector<Partition>{{1}});
    CHECK(enumerate_partitions(10).size() == 42);
    CHECK_THROWS_AS(enumerate_partitions(0), argument_error);

    const std::uint64_t counts[] = {2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (unsigned n = 2; n <= 10; ++n)
        CHECK(enumerate_partitions(n).size() == counts[n - 2]);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{6, 6, 4, 1}) == Partition{4, 3, 3, 3, 2, 2});
    CHECK(conjugate(Partition{7}) == ones(7));
    CHECK(conjugate(Partition{4, 3, 2, 1}) == Partition{4, 3, 2, 1});
    for (unsigned n = 1; n <= 12; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("class parity, order, powers") {
    CHECK(class_parity(ones(9)) == 1);
    CHECK(class_parity(Partition{5, 3}) == 1);
    CHECK(class_parity(Partition{5, 2}) == -1); // (n-2,2) for odd n
    CHECK(class_parity(Partition{7, 2}) == -1);

    CHECK(class_order(Partition{5, 3}) == 15);
    CHECK(class_order(ones(6)) == 1);
    CHECK(class_order(Partition{5, 3, 2}) == 30);

    CHECK(power_cycle_type(Partition{6}, 2) == Partition{3, 3});
    CHECK(power_cycle_type(Partition{5, 3}, 3) == Partition{5, 1, 1, 1});
    CHECK(power_cycle_type(Partition{4}, 2) == Partition{2, 2});
    CHECK(power_cycle_type(Partition{5, 3}, 0) == ones(8));
    for (unsigned n = 1; n <= 12; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            CHECK(power_cycle_type(mu, class_order(mu)) == ones(n));
}

TEST_CASE("specht_dimension") {
    CHECK(specht_dimension(Partition{2, 2, 2}) == 5);
    CHECK(specht_dimension(Partition{4, 4}) == 14);
    CHECK(specht_dimension(Partition{4, 3, 2, 1}) == 768);
    CHECK(specht_dimension(Partition{9}) == 1);

    for (unsigned n = 1; n <= 12; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(specht_dimension(lambda) == specht_dimension(conjugate(lambda)));

    for (unsigned n = 1; n <= 10; ++n) {
        mpz_class sum = 0;
        for (const Partition& lambda : enumerate_partitions(n)) {
            mpz_class f = specht_dimension(lambda);
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    for (const Partition& lambda : enumerate_partitions(6))
        CHECK(dominance_leq(lambda, lambda));
    CHECK_THROWS_AS(dominance_leq(Partition{2, 2}, Partition{3, 2}), argument_error);
}

TEST_CASE("kostka values") {
    CHECK(kostka(Partition{6, 1}, Partition{6, 1}) == 1);
    CHECK(kostka(Partition{7}, Partition{6, 1}) == 1);
    CHECK(kostka(Partition{3, 1}, Partition{2, 1, 1}) == 2);
    for (const Partition& lambda : enumerate_partitions(7))
        CHECK(kostka(lambda, lambda) == 1);
    CHECK_THROWS_AS(kostka(Partition{3, 1}, Partition{3}), argument_error);
}

TEST_CASE("kostka equals brute-force SSYT enumeration") {
    for (unsigned n = 1; n <= 6; ++n)
        for (const Partition& shape : enumerate_partitions(n))
            for (const Partition& content : enumerate_partitions(n))
                CHECK(kostka(shape, content) == brute_ssyt_count(shape, content));
}

TEST_CASE("kostka vanishes against dominance") {
    for (unsigned n = 2; n <= 8; ++n)
        for (const Partition& shape : enumerate_partitions(n))
            for (const Partition& content : enumerate_partitions(n))
                if (!dominance_leq(content, shape))
                    CHECK(kostka(shape, content) == 0);
}

TEST_CASE("kostka-weighted dimensions add up to the tabloid count") {
    for (unsigned n = 2; n <= 8; ++n)
        for (const Partition& content : enumerate_partitions(n)) {
            mpz_class sum = 0;
            for (const Partition& shape : enumerate_partitions(n))
                sum += mpz_class(static_cast<unsigned long>(kostka(shape, content))) *
                       specht_dimension(shape);
            CHECK(sum == tabloid_count(content));
        }
}
