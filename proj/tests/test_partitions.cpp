#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmacdo/partitions.hpp"

using namespace qmacdo;

TEST_CASE("enumeration counts") {
    int expect[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int k = 0; k <= 7; ++k) {
        auto ps = partitions_of_weight(k);
        CHECK(static_cast<int>(ps.size()) == expect[k]);
        for (auto& p : ps) {
            CHECK(is_partition(p));
            CHECK(weight(p) == k);
        }
    }
    auto p4 = partitions_of_weight(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    int seen = 0;
    for_partitions_up_to(4, [&](const Partition&) {
        ++seen;
        return true;
    });
    CHECK(seen == 1 + 1 + 2 + 3 + 5);
}

TEST_CASE("conjugate and hooks") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(conjugate({4, 2, 1})) == Partition{4, 2, 1});
    CHECK(conjugate({}) == Partition{});
    // arm and leg of the corner box of (3,2)
    Partition lam{3, 2};
    CHECK(arm(lam, 1, 1) == 2);
    CHECK(leg(lam, 1, 1) == 1);
    CHECK(arm(lam, 2, 2) == 0);
    CHECK(leg(lam, 2, 2) == 0);
}

TEST_CASE("fat hook membership") {
    // (1,1): hooks only
    CHECK(fat_hook_contains(1, 1, {}));
    CHECK(fat_hook_contains(1, 1, {5}));
    CHECK(fat_hook_contains(1, 1, {3, 1, 1}));
    CHECK(!fat_hook_contains(1, 1, {2, 2}));
    CHECK(!fat_hook_contains(1, 1, {3, 2, 1}));
    // (2,1)
    CHECK(fat_hook_contains(2, 1, {2, 2}));
    CHECK(fat_hook_contains(2, 1, {4, 3, 1, 1}));
    CHECK(!fat_hook_contains(2, 1, {2, 2, 2}));
    // (0,m): at most m columns
    CHECK(fat_hook_contains(0, 2, {2, 2, 2}));
    CHECK(!fat_hook_contains(0, 2, {3}));
}

TEST_CASE("hook split") {
    Partition mu, nu;
    hook_split(2, 1, {4, 3, 1, 1}, mu, nu);
    CHECK(mu == Partition{4, 3});
    CHECK(nu == Partition{2});
    hook_split(1, 1, {3, 1, 1}, mu, nu);
    CHECK(mu == Partition{3});
    CHECK(nu == Partition{2});
    hook_split(1, 1, {2}, mu, nu);
    CHECK(mu == Partition{2});
    CHECK(nu == Partition{});
}

TEST_CASE("containment") {
    CHECK(contains({3, 2}, {2, 2}));
    CHECK(!contains({3, 2}, {1, 1, 1}));
    CHECK(contains({3, 2}, {}));
    auto subs = subpartitions({2, 1});
    CHECK(subs.size() == 5);  // (), (1), (2), (1,1), (2,1)
}

TEST_CASE("hook product scalars") {
    FieldCtx F = FieldCtx::symbolic();
    CHECK((b_lambda({}, F) - F.one()).is_zero());
    FieldElem b1 = b_lambda({1}, F);
    CHECK((b1 - (F.one() - F.t()) / (F.one() - F.q())).is_zero());
    // z_(2,1) = 2 * (1-q^2)(1-q)/((1-t^2)(1-t))
    FieldElem z = z_lambda({2, 1}, F);
    FieldElem want = F.integer(2) * (F.one() - F.qt(2, 0)) * (F.one() - F.q()) /
                     ((F.one() - F.qt(0, 2)) * (F.one() - F.t()));
    CHECK((z - want).is_zero());
}

TEST_CASE("text round trip") {
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(partition_to_string({2, 1}) == "2,1");
    CHECK(partition_to_string({}) == "");
}

TEST_CASE("grading order") {
    PartitionLess less;
    CHECK(less({2}, {1, 1, 1}));          // lower weight first
    CHECK(less({1, 1}, {2}));             // lex inside a weight
    CHECK(!less({2, 1}, {2, 1}));
}
