#include <doctest.h>

#include <cmath>

#include "hcl/lie_spaces.hpp"
#include "hcl/trace_bounds.hpp"

using namespace hcl;

namespace {
const cplx i1(0.0, 1.0);
}

TEST_CASE("embed_tangent block layouts") {
  // su(2,1), A = (1,0)^t: single entry in the upper-right block.
  {
    ComplexMatrix a(2, 1);
    a(0, 0) = 1.0;
    const ComplexMatrix m = embed_tangent({HermitianFamily::su(2, 1), a});
    REQUIRE(m.rows() == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(m(i, j) == ((i == 0 && j == 2) ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
  }
  // sp(4), A = I_2: [[A, iA],[iA, -A]].
  {
    const ComplexMatrix m =
        embed_tangent({HermitianFamily::sp(2), ComplexMatrix::identity(2)});
    REQUIRE(m.rows() == 4);
    CHECK(norm_fro(m.block(0, 0, 2, 2) - ComplexMatrix::identity(2)) == 0.0);
    CHECK(norm_fro(m.block(0, 2, 2, 2) - i1 * ComplexMatrix::identity(2)) == 0.0);
    CHECK(norm_fro(m.block(2, 0, 2, 2) - i1 * ComplexMatrix::identity(2)) == 0.0);
    CHECK(norm_fro(m.block(2, 2, 2, 2) + ComplexMatrix::identity(2)) == 0.0);
  }
  // so(3,2), v = e1: off-diagonal blocks (v, iv) and transpose.
  {
    ComplexMatrix v(3, 1);
    v(0, 0) = 1.0;
    const ComplexMatrix m = embed_tangent({HermitianFamily::so(3), v});
    REQUIRE(m.rows() == 5);
    CHECK(m(0, 3) == cplx(1.0, 0.0));
    CHECK(m(0, 4) == i1);
    CHECK(m(3, 0) == cplx(1.0, 0.0));
    CHECK(m(4, 0) == i1);
    CHECK(norm_fro(m.block(0, 0, 3, 3)) == 0.0);
    CHECK(norm_fro(m.block(3, 3, 2, 2)) == 0.0);
    CHECK(norm_fro(m - m.transpose()) == 0.0);
  }
}

TEST_CASE("sectional curvature hits the documented values") {
  // su: rank-1 payload saturates -2; A = I_2 in su(2,2) gives -2/q = -1.
  {
    ComplexMatrix e(4, 3);
    e(0, 0) = 1.0;
    CHECK(sectional_curvature({HermitianFamily::su(4, 3), e}) ==
          doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(sectional_curvature({HermitianFamily::su(2, 2), ComplexMatrix::identity(2)}) ==
          doctest::Approx(-1.0).epsilon(1e-12));
  }
  // so(p,2): isotropic vector gives -1, real vector -1/2.
  {
    ComplexMatrix iso(4, 1), re(4, 1);
    iso(0, 0) = 1.0 / std::sqrt(2.0);
    iso(1, 0) = i1 / std::sqrt(2.0);
    re(0, 0) = 1.0;
    CHECK(sectional_curvature({HermitianFamily::so(4), iso}) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sectional_curvature({HermitianFamily::so(4), re}) ==
          doctest::Approx(-0.5).epsilon(1e-12));
  }
  // sp(2n): A = I_n gives -2/n.
  for (const int n : {1, 3, 5})
    CHECK(sectional_curvature({HermitianFamily::sp(n), ComplexMatrix::identity(n)}) ==
          doctest::Approx(-2.0 / n).epsilon(1e-12));
  // so*(2n), n even, block J gives -1/(n/2).
  for (const int n : {4, 6}) {
    ComplexMatrix j(n, n);
    j.set_block(0, n / 2, ComplexMatrix::identity(n / 2));
    j.set_block(n / 2, 0, -ComplexMatrix::identity(n / 2));
    CHECK(sectional_curvature({HermitianFamily::sostar(n), j}) ==
          doctest::Approx(-1.0 / (n / 2)).epsilon(1e-12));
  }
}

TEST_CASE("curvature bound table") {
  const CurvatureBounds b1 = curvature_bounds(HermitianFamily::su(3, 2));
  CHECK(b1.lower == -2.0);
  CHECK(b1.upper == -1.0);
  const CurvatureBounds b2 = curvature_bounds(HermitianFamily::sostar(5));
  CHECK(b2.lower == -1.0);
  CHECK(b2.upper == -0.5);
  const CurvatureBounds b3 = curvature_bounds(HermitianFamily::so(7));
  CHECK(b3.lower == -1.0);
  CHECK(b3.upper == -0.5);
  CHECK(curvature_bounds(HermitianFamily::sp(4)).upper == -0.5);
}

TEST_CASE("commutator traces match the per-family closed forms") {
  Rng rng(17);
  const auto check_family = [&](const HermitianFamily& f) {
    const TangentParam t = random_tangent(f, rng);
    const ComplexMatrix m = embed_tangent(t);
    const ComplexMatrix c = commutator(m, m.adjoint());
    const double lhs = trace(c * c).real();
    const double mm = trace(m * m.adjoint()).real();
    double rhs = 0.0, mm_want = 0.0;
    if (f.kind == FamilyKind::so_p2) {
      double n2 = 0.0;
      cplx sq(0.0, 0.0);
      for (int i = 0; i < f.p; ++i) {
        n2 += std::norm(t.payload(i, 0));
        sq += t.payload(i, 0) * t.payload(i, 0);
      }
      rhs = 16.0 * n2 * n2 - 8.0 * std::norm(sq);
      mm_want = 4.0 * n2;
    } else {
      const ComplexMatrix g = t.payload.adjoint() * t.payload;
      const double t2 = trace(g * g).real();
      const double t1 = trace(g).real();
      const double scale = f.kind == FamilyKind::su_pq ? 2.0 : 32.0;
      rhs = scale * t2;
      mm_want = (f.kind == FamilyKind::su_pq ? 1.0 : 4.0) * t1;
    }
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(mm - mm_want) <= 1e-12);
  };
  for (int rep = 0; rep < 20; ++rep) {
    check_family(HermitianFamily::su(4, 2));
    check_family(HermitianFamily::sp(3));
    check_family(HermitianFamily::so(5));
    check_family(HermitianFamily::sostar(4));
    check_family(HermitianFamily::sostar(5));
  }
}

TEST_CASE("curvature is scale invariant and embed is linear") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const HermitianFamily fams[4] = {HermitianFamily::su(3, 2), HermitianFamily::sp(3),
                                     HermitianFamily::so(4), HermitianFamily::sostar(4)};
    const HermitianFamily& f = fams[rng.below(4)];
    const TangentParam a = random_tangent(f, rng);
    const TangentParam b = random_tangent(f, rng);
    const cplx lam(rng.gaussian(), rng.gaussian());
    if (std::abs(lam) > 1e-3) {
      CHECK(std::abs(sectional_curvature({f, lam * a.payload}) - sectional_curvature(a)) <=
            1e-12);
    }
    const cplx ca(rng.gaussian(), rng.gaussian());
    const cplx cb(rng.gaussian(), rng.gaussian());
    CHECK(norm_fro(embed_tangent({f, ca * a.payload + cb * b.payload}) -
                   ca * embed_tangent(a) - cb * embed_tangent(b)) <= 1e-12);
  }
}

TEST_CASE("sampled curvatures respect the bounds at all sizes up to 6") {
  Rng rng(29);
  std::vector<HermitianFamily> fams;
  for (int q = 1; q <= 6; ++q)
    for (int p = q; p <= 6; ++p) fams.push_back(HermitianFamily::su(p, q));
  for (int n = 1; n <= 6; ++n) fams.push_back(HermitianFamily::sp(n));
  for (int p = 2; p <= 6; ++p) fams.push_back(HermitianFamily::so(p));
  for (int n = 2; n <= 6; ++n) fams.push_back(HermitianFamily::sostar(n));
  for (const auto& f : fams) {
    const CurvatureBounds b = curvature_bounds(f);
    for (int s = 0; s < 400; ++s) {
      const double k = sectional_curvature(random_tangent(f, rng));
      CHECK(k >= b.lower - 1e-9);
      CHECK(k <= b.upper + 1e-9);
    }
  }
}

TEST_CASE("equality locus witnesses evaluate to the bounds") {
  Rng rng(31);
  for (const auto& f : {HermitianFamily::su(5, 2), HermitianFamily::sp(4),
                        HermitianFamily::so(6), HermitianFamily::sostar(4),
                        HermitianFamily::sostar(5)}) {
    const CurvatureBounds b = curvature_bounds(f);
    for (int t = 0; t < 10; ++t) {
      const TangentParam w = random_equality_locus_witness(f, rng);
      CHECK(std::abs(sectional_curvature(w) - b.upper) <= 1e-10);
    }
  }
}

TEST_CASE("su curvature equals -2 times the trace ratio") {
  Rng rng(37);
  const HermitianFamily f = HermitianFamily::su(5, 3);
  for (int t = 0; t < 200; ++t) {
    const TangentParam a = random_tangent(f, rng);
    CHECK(std::abs(sectional_curvature(a) + 2.0 * trace_ratio(a.payload)) <= 1e-12);
  }
}

TEST_CASE("extremizer attains the table bounds") {
  {
    const auto [t, v] = extremize_curvature(HermitianFamily::su(3, 2),
                                            ExtremizeMode::maximize, 15, 101);
    CHECK(std::abs(v - (-1.0)) <= 1e-6);
    CHECK(equality_locus_residual(t.family, t) <= 1e-4);
  }
  {
    const auto [t, v] =
        extremize_curvature(HermitianFamily::sp(3), ExtremizeMode::minimize, 15, 102);
    CHECK(std::abs(v - (-2.0)) <= 1e-6);
  }
  {
    const auto [t, v] =
        extremize_curvature(HermitianFamily::so(4), ExtremizeMode::maximize, 15, 103);
    CHECK(std::abs(v - (-0.5)) <= 1e-6);
  }
}

TEST_CASE("tangent validation errors") {
  CHECK_THROWS_WITH_AS(
      sectional_curvature({HermitianFamily::su(2, 1), ComplexMatrix(2, 1)}),
      doctest::Contains("ZeroTangent"), Error);
  ComplexMatrix notsym(2, 2);
  notsym(0, 1) = 1.0;
  CHECK_THROWS_WITH_AS(embed_tangent({HermitianFamily::sp(2), notsym}),
                       doctest::Contains("PayloadShape"), Error);
  CHECK_THROWS_WITH_AS(embed_tangent({HermitianFamily::su(3, 2), ComplexMatrix(2, 3)}),
                       doctest::Contains("PayloadShape"), Error);
  CHECK_THROWS_AS(HermitianFamily::su(2, 3), Error);
  CHECK_THROWS_AS(HermitianFamily::sostar(1), Error);
}
