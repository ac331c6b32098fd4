#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cslam/geometry.hpp"
#include "oracles.hpp"

using namespace cslam;

TEST_CASE("wrap_angle maps into (-pi, pi]") {
  CHECK(wrap_angle(0.0) == doctest::Approx(0.0));
  CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-3.0 * kPi / 2.0) == doctest::Approx(kPi / 2.0));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> big(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double theta = big(rng);
    const double w = wrap_angle(theta);
    CHECK(w > -kPi);
    CHECK(w <= kPi);
    // congruent mod 2*pi
    CHECK(std::abs(std::remainder(theta - w, 2.0 * kPi)) < 1e-9);
  }
}

TEST_CASE("compose matches the homogeneous matrix product") {
  const Pose2 a(1.0, 0.0, kPi / 2.0);
  const Pose2 b(1.0, 0.0, 0.0);
  const Pose2 ab = compose(a, b);
  CHECK(ab.x == doctest::Approx(1.0));
  CHECK(ab.y == doctest::Approx(1.0));
  CHECK(ab.psi == doctest::Approx(kPi / 2.0));

  const Pose2 identity(0.0, 0.0, 0.0);
  const Pose2 t(0.3, -2.0, 1.1);
  CHECK(oracle::pose_close(compose(identity, t), t) < 1e-15);
  CHECK(oracle::pose_close(compose(t, inverse(t)), identity) < 1e-12);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Pose2 p = oracle::random_pose(rng);
    const Pose2 q = oracle::random_pose(rng);
    CHECK(oracle::pose_close(compose(p, q), oracle::mat_compose(p, q)) < 1e-10);
  }
}

TEST_CASE("inverse matches the matrix inverse") {
  const Pose2 inv = inverse(Pose2(1.0, 0.0, kPi / 2.0));
  CHECK(inv.x == doctest::Approx(0.0));
  CHECK(inv.y == doctest::Approx(1.0));
  CHECK(inv.psi == doctest::Approx(-kPi / 2.0));

  CHECK(oracle::pose_close(inverse(Pose2()), Pose2()) == 0.0);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const Pose2 p = oracle::random_pose(rng);
    CHECK(oracle::pose_close(inverse(p), oracle::mat_inverse_pose(p)) < 1e-10);
    CHECK(oracle::pose_close(inverse(inverse(p)), p) < 1e-12);
  }
}

TEST_CASE("between is the relative pose and composes back") {
  const Pose2 p(4.0, -1.0, 0.4);
  CHECK(oracle::pose_close(between(p, p), Pose2()) < 1e-12);
  CHECK(oracle::pose_close(between(Pose2(), Pose2(1.0, 2.0, 0.3)), Pose2(1.0, 2.0, 0.3)) <
        1e-15);

  const Pose2 rel = between(Pose2(1.0, 0.0, kPi / 2.0), Pose2(1.0, 1.0, kPi / 2.0));
  CHECK(rel.x == doctest::Approx(1.0));
  CHECK(rel.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rel.psi == doctest::Approx(0.0));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Pose2 a = oracle::random_pose(rng);
    const Pose2 b = oracle::random_pose(rng);
    CHECK(oracle::pose_close(between(a, b), oracle::mat_between(a, b)) < 1e-10);
    CHECK(oracle::pose_close(compose(a, between(a, b)), b) < 1e-10);
  }
}

TEST_CASE("apply_to_point is the rigid action") {
  CHECK(apply_to_point(Pose2(), Vec2{3.0, 4.0}).x == doctest::Approx(3.0));
  CHECK(apply_to_point(Pose2(), Vec2{3.0, 4.0}).y == doctest::Approx(4.0));

  const Vec2 half_turn = apply_to_point(Pose2(0.0, 0.0, kPi), Vec2{1.0, 0.0});
  CHECK(half_turn.x == doctest::Approx(-1.0));
  CHECK(half_turn.y == doctest::Approx(0.0));

  const Vec2 moved = apply_to_point(Pose2(1.0, 1.0, kPi / 2.0), Vec2{1.0, 0.0});
  CHECK(moved.x == doctest::Approx(1.0));
  CHECK(moved.y == doctest::Approx(2.0));

  // Rigid action preserves pairwise distances.
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Pose2 t = oracle::random_pose(rng);
    const Vec2 p{u(rng), u(rng)};
    const Vec2 q{u(rng), u(rng)};
    const double before = (p - q).norm();
    const double after = (apply_to_point(t, p) - apply_to_point(t, q)).norm();
    CHECK(std::abs(before - after) < 1e-12);
  }
}

TEST_CASE("group laws hold under composition") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Pose2 a = oracle::random_pose(rng);
    const Pose2 b = oracle::random_pose(rng);
    const Pose2 c = oracle::random_pose(rng);
    CHECK(oracle::pose_close(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-10);
    CHECK(oracle::pose_close(compose(a, Pose2()), a) < 1e-12);
    CHECK(oracle::pose_close(compose(Pose2(), a), a) < 1e-12);
    CHECK(oracle::pose_close(compose(a, inverse(a)), Pose2()) < 1e-10);
  }
}

TEST_CASE("pose/transform round trip is the identity") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const Pose2 p = oracle::random_pose(rng);
    CHECK(oracle::pose_close(to_pose(to_transform(p)), p) < 1e-12);
  }
}

TEST_CASE("returned headings are always normalized") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Pose2 a = oracle::random_pose(rng);
    const Pose2 b = oracle::random_pose(rng);
    for (const Pose2& r : {compose(a, b), inverse(a), between(a, b)}) {
      CHECK(r.psi > -kPi);
      CHECK(r.psi <= kPi);
    }
  }
}
