#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "primegraph/groupdata.hpp"

using namespace pg::groupdata;
namespace nt = pg::numtheory;

TEST_CASE("psl2_degrees: even and odd formulas") {
    CHECK(psl2_degrees(4).degrees == std::vector<u64>{1, 3, 4, 5});
    CHECK(psl2_degrees(5).degrees == std::vector<u64>{1, 3, 4, 5});  // PSL2(5) = PSL2(4)
    CHECK(psl2_degrees(29).degrees == std::vector<u64>{1, 15, 28, 29, 30});
    CHECK(psl2_degrees(9).degrees == std::vector<u64>{1, 5, 8, 9, 10});  // 2.A6 quotient A6
    CHECK(psl2_degrees(7).degrees == std::vector<u64>{1, 3, 6, 7, 8});
    CHECK(psl2_degrees(8).degrees == std::vector<u64>{1, 7, 8, 9});
    CHECK_THROWS_AS(psl2_degrees(3), std::invalid_argument);
    CHECK_THROWS_AS(psl2_degrees(6), std::invalid_argument);
}

TEST_CASE("psl2_degrees: structural properties over a range") {
    for (u64 q = 4; q <= 2000; ++q) {
        if (q == 5 || !nt::prime_power_decompose(q)) continue;
        auto d = psl2_degrees(q).degrees;
        CHECK(std::count(d.begin(), d.end(), q) == 1);
        CHECK(std::count(d.begin(), d.end(), q - 1) == 1);
        CHECK(std::count(d.begin(), d.end(), q + 1) == 1);
        if (q % 2 == 0)
            CHECK(d.size() == 4);
        else
            CHECK(d.size() == 5);
    }
}

TEST_CASE("named_degrees: bundled table") {
    CHECK(named_degrees("2.A6").degrees == std::vector<u64>{1, 4, 5, 8, 9, 10});
    CHECK(named_degrees("23^(1+2):11").degrees == std::vector<u64>{1, 11, 23});
    CHECK(named_degrees("A5").degrees == std::vector<u64>{1, 3, 4, 5});
    CHECK_THROWS_AS(named_degrees("no-such-group"), std::out_of_range);
    // all required ids are present
    for (const char* id : {"2.A6", "23^(1+2):11", "A5", "PSL2(8)", "PSL3(3)", "J1", "M11", "M23",
                           "A8", "PSL3(4)", "PSU3(4)"})
        CHECK(NamedGroupTable::bundled().find(id) != nullptr);
}

TEST_CASE("named table: paper-quoted entries are exactly the quoted sets") {
    const auto& table = NamedGroupTable::bundled();
    for (const auto& e : table.entries()) {
        if (e.source != Source::PaperQuoted) continue;
        bool known = (e.id == "2.A6" && e.degree_set.degrees == std::vector<u64>{1, 4, 5, 8, 9, 10}) ||
                     (e.id == "23^(1+2):11" && e.degree_set.degrees == std::vector<u64>{1, 11, 23});
        CHECK_MESSAGE(known, "unexpected paper-quoted entry: ", e.id);
    }
}

TEST_CASE("product_degrees") {
    auto k = make_degree_set({11, 23});
    CHECK(product_degrees(make_degree_set({}), k).degrees == std::vector<u64>{1, 11, 23});
    CHECK(product_degrees(make_degree_set({3, 4, 5}), k).degrees ==
          std::vector<u64>{1, 3, 4, 5, 11, 23, 33, 44, 55, 69, 92, 115});
    CHECK(product_degrees(make_degree_set({2}), make_degree_set({2})).degrees ==
          std::vector<u64>{1, 2, 4});
}

TEST_CASE("product_degrees: commutative, associative, unit") {
    auto a = psl2_degrees(8);
    auto b = named_degrees("23^(1+2):11");
    auto c = psl2_degrees(29);
    CHECK(product_degrees(a, b) == product_degrees(b, a));
    CHECK(product_degrees(product_degrees(a, b), c) == product_degrees(a, product_degrees(b, c)));
    CHECK(product_degrees(a, make_degree_set({})) == a);
}

TEST_CASE("suzuki_vertices") {
    auto v = suzuki_vertices(8);
    CHECK(v.vertices == std::vector<u64>{2, 5, 7, 13});
    CHECK(v.complete_on == std::vector<u64>{5, 7, 13});
    auto v32 = suzuki_vertices(32);
    CHECK(v32.vertices == std::vector<u64>{2, 5, 31, 41});  // 1025 = 5^2 * 41
    CHECK_THROWS_AS(suzuki_vertices(16), std::invalid_argument);  // even exponent
    CHECK_THROWS_AS(suzuki_vertices(2), std::invalid_argument);
    CHECK_THROWS_AS(suzuki_vertices(27), std::invalid_argument);  // not a 2-power
    for (unsigned e = 3; e <= 13; e += 2) CHECK(suzuki_vertices(u64{1} << e).vertices.front() == 2);
}

TEST_CASE("psl3_vertices") {
    auto lin3 = psl3_vertices(1, 3);
    CHECK(lin3.vertices == std::vector<u64>{2, 3, 13});
    CHECK(lin3.complete_on == std::vector<u64>{2, 13});
    auto uni3 = psl3_vertices(-1, 3);
    CHECK(uni3.vertices == std::vector<u64>{2, 3, 7});
    CHECK(uni3.complete_on == std::vector<u64>{2, 7});
    auto lin5 = psl3_vertices(1, 5);
    CHECK(lin5.vertices == std::vector<u64>{2, 3, 5, 31});
    CHECK(lin5.complete_on == std::vector<u64>{2, 3, 31});
    CHECK_THROWS_AS(psl3_vertices(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(psl3_vertices(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(psl3_vertices(0, 3), std::invalid_argument);
}

TEST_CASE("psl2_even_maximal_indices") {
    auto idx2 = psl2_even_maximal_indices(2);
    std::multiset<nt::u128> values;
    for (const auto& f : idx2) values.insert(f.value);
    CHECK(values == std::multiset<nt::u128>{10, 6, 5, 10});

    auto idx6 = psl2_even_maximal_indices(6);
    std::multiset<nt::u128> v6;
    for (const auto& f : idx6) v6.insert(f.value);
    CHECK(v6.count(2080) == 1);  // 2^5 * 65
    CHECK(v6.count(2016) == 1);  // 2^5 * 63
    CHECK(v6.count(65) == 1);
    CHECK(v6.size() == 5);  // plus entries for n = 2 (a=3) and n = 3 (a=2)

    for (unsigned f = 2; f <= 16; ++f) {
        bool found_odd = false;
        for (const auto& fac : psl2_even_maximal_indices(f))
            if (fac.value == (nt::u128{1} << f) + 1 && fac.factors.count(2) == 0) found_odd = true;
        CHECK(found_odd);  // 2^f + 1 always appears and is odd
    }
}

TEST_CASE("descriptors: normalization and partial flags") {
    CHECK(describe(make_psl2(5)) == "PSL2(4)");
    CHECK(is_partial(make_suzuki(8)));
    CHECK(is_partial(make_psl3(-1, 9)));
    CHECK(!is_partial(make_product(make_psl2(8), make_named("23^(1+2):11"))));
    CHECK_THROWS_AS(make_product(make_psl2(8), make_suzuki(8)), std::invalid_argument);
    CHECK_THROWS_AS(degrees_of(make_suzuki(8), NamedGroupTable::bundled()), std::invalid_argument);
}

TEST_CASE("make_degree_set validation") {
    CHECK(make_degree_set({}).degrees == std::vector<u64>{1});
    CHECK(make_degree_set({5, 3, 3, 1}).degrees == std::vector<u64>{1, 3, 5});
    CHECK_THROWS_AS(make_degree_set({0}), std::invalid_argument);
}
