#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "hnkit/newton.hpp"
#include "hnkit/parse.hpp"

using namespace hnkit;

namespace {

ExponentCloud cloud_of(int n, std::vector<std::vector<Int>> extra) {
    ExponentCloud c;
    c.nvars = n;
    c.points.emplace_back(n, Int(0));
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, 0);
        e[i] = 1;
        c.points.push_back(e);
    }
    for (auto& p : extra) c.points.push_back(std::move(p));
    std::sort(c.points.begin(), c.points.end());
    c.points.erase(std::unique(c.points.begin(), c.points.end()), c.points.end());
    return c;
}

}  // namespace

TEST_CASE("support_cloud fixed values") {
    auto pts_of = [](const ExponentCloud& c) {
        return std::set<std::vector<Int>>(c.points.begin(), c.points.end());
    };

    ExponentCloud c1 = support_cloud(parse_system("vars: 2\nx1 + x2 + 1"));
    CHECK(pts_of(c1) == std::set<std::vector<Int>>{{0, 0}, {1, 0}, {0, 1}});

    ExponentCloud c2 = support_cloud(parse_system("vars: 2\nx1*x2 - 1"));
    CHECK(pts_of(c2) == std::set<std::vector<Int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

    ExponentCloud c3 = support_cloud(parse_system("x1^6 - 1\nx1 - 6"));
    CHECK(pts_of(c3) == std::set<std::vector<Int>>{{0}, {1}, {6}});
}

TEST_CASE("normalized_volume fixed values") {
    CHECK(normalized_volume(cloud_of(2, {})) == 1);               // unit simplex
    CHECK(normalized_volume(cloud_of(2, {{1, 1}})) == 2);         // unit square
    CHECK(normalized_volume(cloud_of(1, {{6}})) == 6);            // segment [0,6]
    CHECK(normalized_volume(cloud_of(3, {})) == 1);
    CHECK(normalized_volume(cloud_of(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})) == 6);
}

TEST_CASE("normalized_volume matches the brute-force hull oracle") {
    for (int inst = 0; inst < 50; ++inst) {
        int n = 1 + (int)test::rand_int(0, 2);
        std::vector<std::vector<Int>> extra;
        int m = (int)test::rand_int(0, 10 - n - 1);
        for (int i = 0; i < m; ++i) {
            std::vector<Int> p(n);
            for (auto& v : p) v = test::rand_int(0, 6);
            extra.push_back(std::move(p));
        }
        ExponentCloud c = cloud_of(n, std::move(extra));
        CHECK(normalized_volume(c) == test::volume_oracle(c.points, n));
    }
}

TEST_CASE("normalized_volume never decreases when a point is added") {
    for (int inst = 0; inst < 300; ++inst) {
        int n = 1 + (int)test::rand_int(0, 2);
        std::vector<std::vector<Int>> extra;
        int m = (int)test::rand_int(0, 5);
        for (int i = 0; i < m; ++i) {
            std::vector<Int> p(n);
            for (auto& v : p) v = test::rand_int(0, 6);
            extra.push_back(std::move(p));
        }
        ExponentCloud before = cloud_of(n, extra);
        std::vector<Int> q(n);
        for (auto& v : q) v = test::rand_int(0, 6);
        extra.push_back(q);
        ExponentCloud after = cloud_of(n, extra);
        CHECK(normalized_volume(after) >= normalized_volume(before));
    }
}

TEST_CASE("volume is a positive integer on polynomial supports") {
    const char* samples[] = {
        "vars: 2\nx1^3*x2 + x2^2 - 4",
        "vars: 3\nx1*x2*x3 - 1\nx1^2 + x2^2 + x3^2 - 3",
        "x1^6 - 1\nx1 - 6",
    };
    for (const char* s : samples) {
        Int v = normalized_volume(support_cloud(parse_system(s)));
        CHECK(v >= 1);
    }
}

TEST_CASE("dimension cap rejects high dimensions without the estimate") {
    ExponentCloud c = cloud_of(7, {});
    CHECK_THROWS(normalized_volume(c));
    CHECK(normalized_volume(cloud_of(6, {})) == 1);
}
