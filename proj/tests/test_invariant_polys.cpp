#include "test_util.hpp"

#include "sj/errors.hpp"
#include "sj/invariant_polys.hpp"

using namespace sjt;

namespace {

InvariantFamilyId id_of(InvariantFamily f, std::vector<int> idx, std::optional<CMat> S = std::nullopt) {
  return InvariantFamilyId{f, std::move(idx), std::move(S)};
}

}  // namespace

TEST_CASE("unitary action") {
  Rng rng(51);
  const auto t = random_tangent_pair(2, 2, rng);
  const auto same = k_action(CMat::identity(2), t);
  CHECK(max_abs_diff(same.omega, t.omega) == 0.0);
  CHECK(max_abs_diff(same.z, t.z) == 0.0);

  const double th = 0.7;
  const cplx e = std::polar(1.0, th);
  const auto t1 = random_tangent_pair(1, 2, rng);
  const auto r1 = k_action(CMat(1, 1, e), t1);
  CHECK(std::abs(r1.omega(0, 0) - e * e * t1.omega(0, 0)) < 1e-15);
  CHECK(max_abs_diff(r1.z, CMat(e * t1.z)) < 1e-15);

  for (int i = 0; i < 100; ++i) {
    const CMat a = rng.unitary(3), b = rng.unitary(3);
    const auto t3 = random_tangent_pair(3, 2, rng);
    const auto lhs = k_action(CMat(a * b), t3);
    const auto rhs = k_action(a, k_action(b, t3));
    CHECK(max_abs_diff(lhs.omega, rhs.omega) < 1e-12);
    CHECK(max_abs_diff(lhs.z, rhs.z) < 1e-12);
  }
  CHECK_THROWS_AS(k_action(CMat(2, 2, cplx(1.0)), t), Error);
}

TEST_CASE("invariant polynomial examples") {
  Rng rng(52);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = TangentPair::make(kI * CMat::identity(n), rng.complex_matrix(2, n));
    CHECK(eval_invariant(id_of(InvariantFamily::p, {1}), t) == doctest::Approx(static_cast<double>(n)));
  }
  CMat z(2, 3);
  z(1, 0) = 1.0;
  z(1, 1) = kI;
  const auto t = TangentPair::make(CMat(3, 3), z);
  CHECK(eval_invariant(id_of(InvariantFamily::psi1, {2}), t) == doctest::Approx(2.0));

  // r¹_{11} = Re tr(ω ω̄ ᵗz z̄) by explicit loops.
  const auto u = random_tangent_pair(2, 3, rng);
  cplx acc = 0.0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t k = 0; k < 3; ++k) acc += u.omega(a, b) * std::conj(u.omega(b, c)) * u.z(k, c) * std::conj(u.z(k, a));
  CHECK(eval_invariant(id_of(InvariantFamily::r1, {1, 1}), u) == doctest::Approx(acc.real()).epsilon(1e-14));
}

TEST_CASE("index validation") {
  const CMat S = CMat::identity(2);
  CHECK_THROWS_AS(validate_invariant_id(id_of(InvariantFamily::p, {0}), 2, 2), Error);
  CHECK_THROWS_AS(validate_invariant_id(id_of(InvariantFamily::psi2, {2, 2}), 2, 2), Error);
  CHECK_THROWS_AS(validate_invariant_id(id_of(InvariantFamily::q1, {1}), 2, 2), Error);  // S missing
  CHECK_THROWS_AS(validate_invariant_id(id_of(InvariantFamily::theta1, {1, 3, 1}, S), 2, 2), Error);
  CHECK_NOTHROW(validate_invariant_id(id_of(InvariantFamily::theta1, {1, 2, 2}, S), 2, 2));
  CHECK(family_from_name("theta2") == InvariantFamily::theta2);
  CHECK(family_name(InvariantFamily::m1) == "m1");
  CHECK_THROWS_AS(family_from_name("nope"), Error);
}

TEST_CASE("every family is invariant") {
  Rng rng(53);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {3, 2}}) {
    const auto t = random_tangent_pair(n, m, rng);
    const CMat S = rng.complex_matrix(m, m, 0.5);
    const auto ids = all_invariant_ids(n, m, S);
    CHECK(ids.size() > 10);
    for (const auto& id : ids) {
      Rng r(54);
      CHECK(invariance_defect(id, t, 100, r) < 1e-10);
    }
  }
  Rng r(55);
  CHECK(invariance_defect(id_of(InvariantFamily::p, {2}), random_tangent_pair(2, 1, rng), 0, r) == 0.0);
}

TEST_CASE("independence rank") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(independence_rank(n) == static_cast<int>(n));
}
