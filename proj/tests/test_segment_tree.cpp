#include <doctest.h>

#include "test_common.hpp"

#include "qsp/segment_tree.hpp"

using namespace qsp;

TEST_CASE("reference matrix builds the expected tree") {
    const SegmentTree t(testing::sample_matrix());
    CHECK(t.depth() == 3);
    CHECK(t.leaf_count() == 8);
    CHECK(t.node_count() == 15);

    const double leaves[] = {4.84, 9.61, 9.00, 1.44, 0.09, 1.00, 0.25, 6.25};
    for (std::size_t z = 0; z < 8; ++z)
        CHECK(t.leaf(z) == doctest::Approx(leaves[z]).epsilon(1e-12));

    CHECK(t.node(2, 0) == doctest::Approx(14.45).epsilon(1e-12));
    CHECK(t.node(2, 1) == doctest::Approx(10.44).epsilon(1e-12));
    CHECK(t.node(2, 2) == doctest::Approx(1.09).epsilon(1e-12));
    CHECK(t.node(2, 3) == doctest::Approx(6.50).epsilon(1e-12));
    CHECK(t.node(1, 0) == doctest::Approx(24.89).epsilon(1e-12));
    CHECK(t.node(1, 1) == doctest::Approx(7.59).epsilon(1e-12));
    CHECK(t.root() == doctest::Approx(32.48).epsilon(1e-12));

    const bool signs[] = {false, false, true, false, false, false, false, true};
    for (std::size_t z = 0; z < 8; ++z) CHECK(t.leaf_sign(z) == signs[z]);
}

TEST_CASE("single nonzero entry gives a unit tree") {
    const Matrix m = pad_matrix({1, 0, 0, 0}, 2, 2);
    const SegmentTree t(m);
    CHECK(t.root() == 1.0);
    CHECK(t.leaf(0) == 1.0);
    CHECK(t.leaf(1) == 0.0);
}

TEST_CASE("root equals an independent double-loop sum of squares") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = testing::random_matrix(rng, 4, 4);
        double direct = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) direct += m(i, j) * m(i, j);
        const SegmentTree t(m);
        CHECK(t.root() == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("root accuracy holds at the largest supported size") {
    std::mt19937_64 rng(14);
    const auto data = testing::random_entries(rng, 1 << 16);
    double direct = 0.0;
    for (double v : data) direct += v * v;

    const SegmentTree t(pad_matrix(data, 256, 256));
    CHECK(t.node_count() == 2 * (1 << 16) - 1);
    CHECK(t.depth() == 16);
    CHECK(t.root() == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("every internal node is exactly the sum of its children") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        const SegmentTree t(testing::random_matrix(rng, 8, 8));
        for (std::size_t idx = 0; idx < t.leaf_count() - 1; ++idx)
            CHECK(t.node_flat(idx) == t.node_flat(2 * idx + 1) + t.node_flat(2 * idx + 2));
    }
}

TEST_CASE("update recomputes the root path") {
    SegmentTree t(testing::sample_matrix());
    t.update_entry(0, 0.0);

    // oracle: rebuild from the modified data
    auto data = testing::kSampleData;
    data[0] = 0.0;
    const SegmentTree rebuilt(pad_matrix(data, 2, 4));
    CHECK(t.root() == rebuilt.root());
    CHECK(t.root() == doctest::Approx(32.48 - 4.84).epsilon(1e-12));
    CHECK_FALSE(t.leaf_sign(0));
}

TEST_CASE("updating to the same value leaves the tree unchanged") {
    SegmentTree t(testing::sample_matrix());
    const auto nodes_before = t.nodes();
    t.update_entry(2, -3.0);
    CHECK(t.nodes() == nodes_before);
    CHECK(t.leaf_sign(2));
}

TEST_CASE("update matches a full rebuild bitwise") {
    std::mt19937_64 rng(13);
    auto data = testing::random_entries(rng, 64);
    SegmentTree t(pad_matrix(data, 8, 8));

    std::uniform_int_distribution<std::size_t> pick(0, 63);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t z = pick(rng);
        const double v = val(rng);
        data[z] = v;
        t.update_entry(z, v);

        const SegmentTree rebuilt(pad_matrix(data, 8, 8));
        REQUIRE(t.nodes() == rebuilt.nodes());
        REQUIRE(t.leaf_signs() == rebuilt.leaf_signs());
    }
}

TEST_CASE("update range and sign handling") {
    SegmentTree t(testing::sample_matrix());
    CHECK_THROWS_AS(t.update_entry(8, 1.0), OutOfRangeError);

    t.update_entry(0, -0.0);  // negative zero carries no sign
    CHECK_FALSE(t.leaf_sign(0));
    t.update_entry(0, -1.5);
    CHECK(t.leaf_sign(0));
    CHECK(t.leaf(0) == 2.25);
}
