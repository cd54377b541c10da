#include <doctest.h>

#include <cmath>

#include "hcl/higgs.hpp"
#include "hcl/reps.hpp"

using namespace hcl;

namespace {
const cplx i1(0.0, 1.0);
}

TEST_CASE("center generator values and eigen-equation") {
  // su(2,1): solving p*lam + q*mu = 0, lam - mu = 1 gives Z = i diag(1/3, 1/3, -2/3).
  {
    const CenterElement z = center_generator(HermitianFamily::su(2, 1));
    CHECK(std::abs(z.Z(0, 0) - i1 / 3.0) <= 1e-15);
    CHECK(std::abs(z.Z(1, 1) - i1 / 3.0) <= 1e-15);
    CHECK(std::abs(z.Z(2, 2) + 2.0 * i1 / 3.0) <= 1e-15);
    CHECK(std::abs(trace(z.Z)) <= 1e-15);
  }

  Rng rng(3);
  for (const auto& f : {HermitianFamily::su(3, 2), HermitianFamily::sp(3),
                        HermitianFamily::so(5), HermitianFamily::sostar(4)}) {
    const CenterElement z = center_generator(f);
    CHECK(algebra_membership_residual(f, z.Z) <= 1e-12);
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix m = embed_tangent(random_tangent(f, rng));
      CHECK(norm_fro(commutator(z.Z, m) - i1 * m) <= 1e-12);
      const ComplexMatrix real_t = m + m.adjoint();
      CHECK(norm_fro(commutator(z.Z, commutator(z.Z, real_t)) + real_t) <= 1e-12);
    }
  }
}

TEST_CASE("toledo and energy densities on one-sided and balanced elements") {
  Rng rng(5);
  const HermitianFamily f = HermitianFamily::su(3, 2);
  const TangentParam plus = random_tangent(f, rng);
  const TangentParam minus = random_tangent(f, rng);
  const TangentParam zero{f, ComplexMatrix(3, 2)};

  const HiggsElement hol = make_higgs(plus, zero);
  const double npl = norm_fro(hol.phi_plus);
  CHECK(toledo_density(hol) == doctest::Approx(npl * npl).epsilon(1e-12));
  CHECK(energy_density(hol) == doctest::Approx(npl * npl).epsilon(1e-12));

  const HiggsElement anti = make_higgs(zero, minus);
  const double nmi = norm_fro(anti.phi_minus);
  CHECK(toledo_density(anti) == doctest::Approx(-nmi * nmi).epsilon(1e-12));

  // Both components unit norm: toledo cancels, energy adds.
  const HiggsElement balanced = make_higgs(plus, minus);
  const double np2 = std::pow(norm_fro(balanced.phi_plus), 2.0);
  const double nm2 = std::pow(norm_fro(balanced.phi_minus), 2.0);
  CHECK(std::abs(toledo_density(balanced) - (np2 - nm2)) <= 1e-12);
  CHECK(std::abs(energy_density(balanced) - (np2 + nm2)) <= 1e-12);
}

TEST_CASE("identity, inequality and cross terms over random fibers") {
  Rng rng(7);
  for (const auto& f : {HermitianFamily::su(3, 2), HermitianFamily::sp(3),
                        HermitianFamily::so(5), HermitianFamily::sostar(4)}) {
    const CenterElement z = center_generator(f);
    for (int t = 0; t < 500; ++t) {
      TangentParam plus = random_tangent(f, rng);
      TangentParam minus = random_tangent(f, rng);
      plus.payload *= cplx(0.2 + 2.0 * rng.uniform(), 0.0);
      minus.payload *= cplx(0.2 + 2.0 * rng.uniform(), 0.0);
      const HiggsElement h = make_higgs(plus, minus);

      const ComplexMatrix phi = h.phi_plus + h.phi_minus;
      const double np2 = std::pow(norm_fro(h.phi_plus), 2.0);
      const double nm2 = std::pow(norm_fro(h.phi_minus), 2.0);
      const double br = frobenius_inner(phi, commutator(phi, i1 * z.Z)).real();
      CHECK(std::abs(br - (np2 - nm2)) <= 1e-10 * std::max(1.0, np2 + nm2));

      const double e = energy_density(h);
      const double tau = toledo_density(h);
      CHECK(e >= std::abs(tau) - 1e-12);
      CHECK(std::abs((e - std::abs(tau)) - 2.0 * std::min(np2, nm2)) <=
            1e-10 * std::max(1.0, e));

      CHECK(std::abs(frobenius_inner(commutator(z.Z, h.phi_plus), i1 * h.phi_minus)) <=
            1e-12);
      CHECK(std::abs(frobenius_inner(commutator(z.Z, h.phi_minus), i1 * h.phi_plus)) <=
            1e-12);
    }
  }
}

TEST_CASE("equality holds exactly when one component vanishes") {
  Rng rng(11);
  const HermitianFamily f = HermitianFamily::sp(3);
  for (int t = 0; t < 50; ++t) {
    const TangentParam plus = random_tangent(f, rng);
    const TangentParam zero{f, ComplexMatrix(3, 3)};
    const HiggsElement h = make_higgs(plus, zero);
    CHECK(std::abs(energy_density(h) - std::abs(toledo_density(h))) <= 1e-12);

    TangentParam minus = random_tangent(f, rng);
    minus.payload *= cplx(0.5, 0.0);
    const HiggsElement g = make_higgs(plus, minus);
    CHECK(energy_density(g) - std::abs(toledo_density(g)) > 1e-3);
  }
}

TEST_CASE("invalid eigenspace data is rejected") {
  const HermitianFamily f = HermitianFamily::su(2, 1);
  Rng rng(13);
  HiggsElement h = make_higgs(random_tangent(f, rng), random_tangent(f, rng));
  // Corrupt phi_plus so it leaves the +i eigenspace of ad(Z).
  h.phi_plus(0, 0) += 1.0;
  CHECK_THROWS_WITH_AS(toledo_density(h), doctest::Contains("EigenspaceViolation"), Error);
}

TEST_CASE("milnor-wood bound arithmetic") {
  CHECK(milnor_wood_bound(0.0, 4, 3, 7.5) == 0.0);
  // k = -(n+1)/2 makes the normalization cancel: bound = rank * vol.
  const int n = 3;
  CHECK(milnor_wood_bound(-(n + 1) / 2.0, n, 5, 1.25) ==
        doctest::Approx(5.0 * 1.25).epsilon(1e-15));
  const double pi = 3.14159265358979323846;
  CHECK(milnor_wood_bound(-2.0, 1, 1, 2.0 * pi) == doctest::Approx(4.0 * pi).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(milnor_wood_bound(0.5, 2, 1, 1.0), doctest::Contains("BadSign"),
                       Error);
  CHECK_THROWS_WITH_AS(milnor_wood_bound(-1.0, 2, 1, 0.0), doctest::Contains("BadSign"),
                       Error);
}
