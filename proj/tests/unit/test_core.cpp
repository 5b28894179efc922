#include <doctest.h>

#include <random>

#include "slotswarm/core.hpp"

using namespace slotswarm;

TEST_CASE("euclidean_distance matches hand-checked values") {
    CHECK(euclidean_distance({0, 0, 0}, {0, 0, 0}) == 0.0);
    CHECK(euclidean_distance({1, 0, 0}, {0, 0, 0}) == 1.0);
    // sqrt(1 + 4 + 4) = 3
    CHECK(euclidean_distance({1, 2, 2}, {0, 0, 0}) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("relative_velocity is componentwise subtraction") {
    CHECK(relative_velocity({1, 1, 1}, {1, 1, 1}) == Vec3{0, 0, 0});
    CHECK(relative_velocity({0.1, 0, 0}, {-0.1, 0, 0}) == Vec3{0.2, 0, 0});
    CHECK(relative_velocity({0, 0, 0}, {0, 0, 1}) == Vec3{0, 0, -1});
}

TEST_CASE("vector identities hold on random samples") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    auto random_vec = [&] { return Vec3{coord(rng), coord(rng), coord(rng)}; };

    for (int i = 0; i < 500; ++i) {
        const Vec3 a = random_vec(), b = random_vec(), c = random_vec();
        CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
        const Vec3 fwd = relative_velocity(a, b);
        const Vec3 rev = relative_velocity(b, a);
        CHECK(fwd.x == -rev.x);
        CHECK(fwd.y == -rev.y);
        CHECK(fwd.z == -rev.z);
        CHECK(euclidean_distance(a, c) <=
              euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
    }
}

TEST_CASE("protocol params validation names bad fields") {
    ProtocolParams ok;
    CHECK_NOTHROW(ok.validate());

    ProtocolParams p = ok;
    p.slot_len = 0.0;
    CHECK_THROWS_AS(p.validate(), config_error);
    p = ok;
    p.epsilon = -0.1;
    CHECK_THROWS_AS(p.validate(), config_error);
    p = ok;
    p.r_min = 0.0;
    CHECK_THROWS_AS(p.validate(), config_error);
    p = ok;
    p.c_const = 0.0;
    CHECK_THROWS_AS(p.validate(), config_error);
    p = ok;
    p.collision_dist = -1.0;
    CHECK_THROWS_AS(p.validate(), config_error);
}
