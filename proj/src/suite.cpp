#include "hcl/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "hcl/higgs.hpp"
#include "hcl/levi.hpp"
#include "hcl/reps.hpp"
#include "hcl/rng.hpp"
#include "hcl/trace_bounds.hpp"
#include "hcl/youla.hpp"

namespace hcl {

namespace {

const cplx i1(0.0, 1.0);

// ---------------------------------------------------------------- curvature

LemmaReport check_curvature(const SuiteConfig& cfg, std::uint64_t seed) {
  LemmaReport rep;
  rep.check_name = "curvature";
  rep.paper_anchor = "holomorphic sectional curvature bounds, four classical families";
  rep.samples = cfg.samples;
  rep.seed = seed;
  Rng rng(seed);

  for (const auto& f : cfg.families) {
    const CurvatureBounds b = curvature_bounds(f);

    double excess = 0.0;
    for (long s = 0; s < cfg.samples; ++s) {
      const double k = sectional_curvature(random_tangent(f, rng));
      excess = std::max(excess, std::max(b.lower - k, k - b.upper));
    }
    rep.add(f.name() + " sampled bounds", excess, 1e-9);

    // Witnesses for both ends of the pinching.
    double wit = 0.0;
    {
      TangentParam lo{f, {}};
      TangentParam hi{f, {}};
      switch (f.kind) {
        case FamilyKind::su_pq: {
          ComplexMatrix e(f.p, f.q);
          e(0, 0) = 1.0;
          lo.payload = e;
          ComplexMatrix a(f.p, f.q);
          a.set_block(0, 0, ComplexMatrix::identity(f.q));
          hi.payload = a;
          break;
        }
        case FamilyKind::sp_2n: {
          ComplexMatrix e(f.p, f.p);
          e(0, 0) = 1.0;
          lo.payload = e;
          hi.payload = ComplexMatrix::identity(f.p);
          break;
        }
        case FamilyKind::so_p2: {
          ComplexMatrix iso(f.p, 1);
          iso(0, 0) = 1.0 / std::sqrt(2.0);
          iso(1, 0) = i1 / std::sqrt(2.0);
          lo.payload = iso;
          ComplexMatrix re(f.p, 1);
          re(0, 0) = 1.0;
          hi.payload = re;
          break;
        }
        case FamilyKind::sostar_2n: {
          ComplexMatrix blk(f.p, f.p);
          blk(0, 1) = 1.0;
          blk(1, 0) = -1.0;
          lo.payload = blk;
          const int m = f.p / 2;
          ComplexMatrix j(f.p, f.p);
          j.set_block(0, m, ComplexMatrix::identity(m));
          j.set_block(m, 0, -ComplexMatrix::identity(m));
          hi.payload = j;
          break;
        }
      }
      wit = std::max(std::abs(sectional_curvature(lo) - b.lower),
                     std::abs(sectional_curvature(hi) - b.upper));
    }
    rep.add(f.name() + " equality witnesses", wit, 1e-10);

    double invariance = 0.0;
    const long small = std::min<long>(cfg.samples, 200);
    for (long s = 0; s < small; ++s) {
      const TangentParam t = random_tangent(f, rng);
      const cplx lam(2.5 * rng.gaussian(), 2.5 * rng.gaussian());
      if (std::abs(lam) < 1e-3) continue;
      const TangentParam scaled{f, lam * t.payload};
      invariance = std::max(invariance,
                            std::abs(sectional_curvature(scaled) - sectional_curvature(t)));
    }
    rep.add(f.name() + " scale invariance", invariance, 1e-12);

    double lin = 0.0;
    for (long s = 0; s < small; ++s) {
      const TangentParam t1 = random_tangent(f, rng);
      const TangentParam t2 = random_tangent(f, rng);
      const cplx ca(rng.gaussian(), rng.gaussian());
      const cplx cb(rng.gaussian(), rng.gaussian());
      const ComplexMatrix lhs = embed_tangent({f, ca * t1.payload + cb * t2.payload});
      const ComplexMatrix rhs =
          ca * embed_tangent(t1) + cb * embed_tangent(t2);
      lin = std::max(lin, norm_fro(lhs - rhs));
    }
    rep.add(f.name() + " embed linearity", lin, 1e-12);

    if (f.kind == FamilyKind::su_pq) {
      double agree = 0.0;
      for (long s = 0; s < small; ++s) {
        const TangentParam t = random_tangent(f, rng);
        agree = std::max(agree, std::abs(sectional_curvature(t) +
                                         2.0 * trace_ratio(t.payload)));
      }
      rep.add(f.name() + " curvature = -2 * trace ratio", agree, 1e-12);
    }

    const auto [tmin, vmin] =
        extremize_curvature(f, ExtremizeMode::minimize, 12, Rng::subseed(seed, f.name() + ":min"));
    const auto [tmax, vmax] =
        extremize_curvature(f, ExtremizeMode::maximize, 12, Rng::subseed(seed, f.name() + ":max"));
    rep.add(f.name() + " extremizer reaches bounds",
            std::max(std::abs(vmin - b.lower), std::abs(vmax - b.upper)), 1e-6);
  }
  return rep;
}

// -------------------------------------------------------------------- trace

LemmaReport check_trace(const SuiteConfig& cfg, std::uint64_t seed) {
  LemmaReport rep;
  rep.check_name = "trace";
  rep.paper_anchor = "Lemma 5.2: trace-ratio bounds, flat families, pair orthonormalization";
  rep.samples = cfg.samples;
  rep.seed = seed;
  Rng rng(seed);

  double excess = 0.0;
  for (long s = 0; s < cfg.samples; ++s) {
    const int q = 1 + static_cast<int>(rng.below(6));
    const int p = q + static_cast<int>(rng.below(static_cast<std::uint64_t>(7 - q)));
    const double r = trace_ratio(random_gaussian(p, q, rng));
    excess = std::max(excess, std::max(1.0 / q - r, r - 1.0));
  }
  rep.add("p x q ratio within [1/q, 1]", excess, 1e-9);

  double oracle = 0.0;
  for (long s = 0; s < std::min<long>(cfg.samples, 500); ++s) {
    const int q = 1 + static_cast<int>(rng.below(5));
    const int p = q + static_cast<int>(rng.below(3));
    const ComplexMatrix a = random_gaussian(p, q, rng);
    const EigenResult eig = herm_eig(a.adjoint() * a, 1e-8);
    double s1 = 0.0, s2 = 0.0;
    for (const double lam : eig.values) {
      s1 += lam;
      s2 += lam * lam;
    }
    oracle = std::max(oracle, std::abs(trace_ratio(a) - s2 / (s1 * s1)));
  }
  rep.add("ratio equals eigenvalue sum oracle", oracle, 1e-10);

  double skew_excess = 0.0, pairing = 0.0;
  for (long s = 0; s < cfg.samples; ++s) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const HermitianFamily tmp = HermitianFamily::sostar(std::max(n, 2));
    ComplexMatrix a = project_payload(tmp, random_gaussian(n, n, rng));
    if (norm_fro(a) < 1e-8) continue;
    const double r = trace_ratio(a);
    const double lo = 1.0 / (2.0 * (n / 2));
    skew_excess = std::max(skew_excess, std::max(lo - r, r - 0.5));
    const std::vector<double> lam = paired_eigenvalues(a);
    double s1 = 0.0, s2 = 0.0;
    for (const double l : lam) {
      s1 += l;
      s2 += l * l;
    }
    pairing = std::max(pairing, std::abs(r - s2 / (s1 * s1)));
  }
  rep.add("skew ratio within [1/(2 floor(n/2)), 1/2]", skew_excess, 1e-9);
  rep.add("skew ratio via paired eigenvalues", pairing, 1e-8);

  double locus = 0.0;
  for (const auto& f : cfg.families)
    for (int s = 0; s < 25; ++s)
      locus = std::max(locus,
                       equality_locus_residual(f, random_equality_locus_witness(f, rng)));
  rep.add("locus witnesses have zero residual", locus, 1e-10);

  for (const auto& [p, q] : {std::pair{5, 2}, std::pair{7, 3}, std::pair{4, 4}}) {
    const FlatFamily fam = standard_flat_family(p, q);
    rep.add("standard flat family " + std::to_string(p) + "x" + std::to_string(q) +
                " combination identity",
            flat_family_residual(fam, 100, rng), 1e-10);
    const ComplexMatrix stacked = hstack(fam.members);
    const EigenResult eig = herm_eig(stacked.adjoint() * stacked, 1e-8);
    rep.add("standard flat family " + std::to_string(p) + "x" + std::to_string(q) +
                " stacked columns independent",
            std::abs(eig.values.front() - 1.0), 1e-10);
  }

  {
    const FlatFamily fam = standard_flat_family(5, 2);
    const ComplexMatrix b = (1.0 / std::sqrt(2.0)) * (fam.members[0] + fam.members[1]);
    const OrthoResult r = orthonormalize_pair(fam.members[0], b);
    const double lam_err = std::abs(r.lambda - (2.0 + std::sqrt(2.0)));
    const double mu_err = std::abs(r.mu - 2.0);
    const double b_err =
        norm_fro(r.modified - (1.0 / std::sqrt(2.0)) * fam.members[1]);
    rep.add("pair orthonormalization worked example",
            std::max({lam_err, mu_err, b_err, r.dependent ? 1.0 : 0.0}), 1e-10);
    const OrthoResult dep = orthonormalize_pair(fam.members[0], fam.members[0]);
    rep.add_flag("dependent pair detected", dep.dependent);
  }

  rep.add_flag("max flat dimension su(5,2) = 2",
               max_flat_dimension_search(HermitianFamily::su(5, 2), 6,
                                         Rng::subseed(seed, "flat:su")) == 2);
  rep.add_flag("max flat dimension so(6,2) = 1",
               max_flat_dimension_search(HermitianFamily::so(6), 6,
                                         Rng::subseed(seed, "flat:so")) == 1);
  rep.add_flag("max flat dimension so*(10) = 1",
               max_flat_dimension_search(HermitianFamily::sostar(5), 6,
                                         Rng::subseed(seed, "flat:sostar")) == 1);
  return rep;
}

// -------------------------------------------------------------------- youla

LemmaReport check_youla(const SuiteConfig& cfg, std::uint64_t seed) {
  LemmaReport rep;
  rep.check_name = "youla";
  rep.paper_anchor = "Youla decomposition of complex skew-symmetric matrices";
  rep.samples = cfg.samples;
  rep.seed = seed;
  Rng rng(seed);

  const long count = std::min<long>(cfg.samples, 2000);
  double unitarity = 0.0, reconstruction = 0.0, blocks = 0.0, pairing = 0.0;
  for (long s = 0; s < count; ++s) {
    const int n = 3 + static_cast<int>(rng.below(5));
    ComplexMatrix a = random_gaussian(n, n, rng);
    a = 0.5 * (a - a.transpose());
    const YoulaDecomposition yd = youla_decompose(a);
    unitarity = std::max(
        unitarity, norm_fro(yd.U.adjoint() * yd.U - ComplexMatrix::identity(n)));
    reconstruction = std::max(reconstruction, yd.residual / std::max(norm_fro(a), 1e-300));

    const EigenResult eig = herm_eig(a.adjoint() * a, 1e-8);
    const double lmax = std::max(eig.values.back(), 0.0);
    int rank = 0;
    for (const double lam : eig.values)
      if (lam > 1e-10 * std::max(lmax, 1.0)) ++rank;
    blocks = std::max(blocks, std::abs(static_cast<double>(yd.sigmas.size()) - rank / 2.0));

    const std::vector<double> paired = paired_eigenvalues(a);
    for (size_t j = 0; j < yd.sigmas.size(); ++j) {
      pairing = std::max(pairing, std::abs(paired[2 * j] - yd.sigmas[j] * yd.sigmas[j]) /
                                      std::max(lmax, 1.0));
    }
  }
  rep.add("unitarity of U", unitarity, 1e-10);
  rep.add("reconstruction residual / |A|", reconstruction, 1e-10);
  rep.add("block count = rank / 2", blocks, 0.25);
  rep.add("sigmas^2 match paired eigenvalues", pairing, 1e-8);

  double congruence = 0.0;
  for (long s = 0; s < std::min<long>(cfg.samples, 300); ++s) {
    const int n = 3 + static_cast<int>(rng.below(4));
    ComplexMatrix a = random_gaussian(n, n, rng);
    a = 0.5 * (a - a.transpose());
    const ComplexMatrix u = random_unitary(n, rng);
    const YoulaDecomposition y1 = youla_decompose(a);
    const YoulaDecomposition y2 = youla_decompose(u.transpose() * a * u);
    for (size_t j = 0; j < std::min(y1.sigmas.size(), y2.sigmas.size()); ++j)
      congruence = std::max(congruence, std::abs(y1.sigmas[j] - y2.sigmas[j]));
    congruence += std::abs(static_cast<double>(y1.sigmas.size()) -
                           static_cast<double>(y2.sigmas.size()));
  }
  rep.add("sigmas invariant under unitary congruence", congruence, 1e-9);
  return rep;
}

// --------------------------------------------------------------------- levi

LemmaReport check_levi(const SuiteConfig& cfg, std::uint64_t seed) {
  LemmaReport rep;
  rep.check_name = "levi";
  rep.paper_anchor =
      "Lemma 5.2(3): Levi form negative semi-definite with 5-dimensional kernel";
  rep.samples = cfg.samples;
  rep.seed = seed;
  Rng rng(seed);

  for (const int n : {5, 7}) {
    const LemmaReport sub = verify_negative_semidefinite_kernel(
        n, static_cast<int>(std::min<long>(cfg.samples, 1000)),
        Rng::subseed(seed, "levi:" + std::to_string(n)));
    for (const auto& d : sub.details) {
      rep.add("n=" + std::to_string(n) + " " + d.name, d.residual, d.tolerance, d.note);
    }
  }

  // Base-point entries of Q, frozen pattern.
  {
    const LeviForm lf = levi_form_at(5, skew_base_point(5));
    double err = 0.0;
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        double want = 0.0;
        if (j == k)
          want = (j == 0 || j == 7) ? -8.0 : ((j == 3 || j == 6 || j == 8 || j == 9) ? 0.0 : -16.0);
        else if ((j == 0 && k == 7) || (j == 7 && k == 0))
          want = 8.0;
        err = std::max(err, std::abs(lf.Q(j, k) - want));
      }
    rep.add("n=5 base-point entries match closed pattern", err, 1e-12);
  }

  double fd_worst = 0.0;
  for (int s = 0; s < 6; ++s) {
    const int n = (s % 2 == 0) ? 5 : 7;
    std::vector<cplx> coords(skew_coord_count(n));
    double nrm = 0.0;
    for (auto& c : coords) {
      c = rng.complex_gaussian();
      nrm += std::norm(c);
    }
    for (auto& c : coords) c *= 1.0 / std::sqrt(nrm);
    const SkewCoords sc(n, coords);
    fd_worst = std::max(fd_worst, norm_max(levi_form_at(n, sc).Q - levi_form_fd(n, sc)));
  }
  rep.add("closed form matches finite differences at random points", fd_worst, 1e-5);

  double boundary = 0.0;
  for (int s = 0; s < 50; ++s) {
    const HermitianFamily f = HermitianFamily::sostar(5);
    const ComplexMatrix a = random_equality_locus_witness(f, rng).payload;
    boundary = std::max(boundary, std::abs(big_F(5, a)));
    const ComplexMatrix b = project_payload(f, random_gaussian(5, 5, rng));
    const double gap = std::abs(trace_ratio(b) - 0.25);
    if (gap > 1e-3) {
      const double fb = big_F(5, b);
      if (fb >= 0.0) boundary = std::max(boundary, std::abs(fb) + 1.0);
    }
  }
  rep.add("F = 0 exactly on the quarter-ratio locus", boundary, 1e-10);

  double equiv = 0.0;
  for (int s = 0; s < 50; ++s) {
    const int n = (s % 2 == 0) ? 5 : 7;
    ComplexMatrix a = random_gaussian(n, n, rng);
    a = 0.5 * (a - a.transpose());
    const ComplexMatrix u = random_unitary(n, rng);
    equiv = std::max(equiv,
                     std::abs(big_F(n, u.transpose() * a * u) - big_F(n, a)) /
                         std::max(1.0, std::abs(big_F(n, a))));
  }
  rep.add("F invariant under unitary congruence", equiv, 1e-9);
  return rep;
}

// --------------------------------------------------------------------- reps

LemmaReport check_reps(const SuiteConfig& cfg, std::uint64_t seed) {
  LemmaReport rep;
  rep.check_name = "reps";
  rep.paper_anchor = "Table 1 and Table 2: canonical representations and centralizers";
  rep.samples = cfg.samples;
  rep.seed = seed;
  Rng rng(seed);

  for (const auto& f : cfg.families) {
    const int samples = static_cast<int>(std::min<long>(cfg.samples, 200));
    const LemmaReport sub =
        verify_canonical_rep(f, samples, Rng::subseed(seed, "rep:" + f.name()), 1e-8);
    for (const auto& d : sub.details)
      rep.add(f.name() + " " + d.name, d.residual, d.tolerance, d.note);

    if (f.kind != FamilyKind::sostar_2n) {
      double mult = 0.0;
      const bool sl2r = f.kind == FamilyKind::sp_2n;
      for (int s = 0; s < 1000; ++s) {
        Sl2Element x{0.5 * rng.gaussian(), cplx(0.5 * rng.gaussian(), 0.5 * rng.gaussian())};
        Sl2Element y{0.5 * rng.gaussian(), cplx(0.5 * rng.gaussian(), 0.5 * rng.gaussian())};
        const ComplexMatrix g1 = expm(sl2r ? x.sl2r() : x.su11());
        const ComplexMatrix g2 = expm(sl2r ? y.sl2r() : y.su11());
        const ComplexMatrix lhs = rho_tot(f, g1 * g2);
        const ComplexMatrix rhs = rho_tot(f, g1) * rho_tot(f, g2);
        mult = std::max(mult, norm_fro(lhs - rhs) / std::max(1.0, norm_fro(rhs)));
      }
      rep.add(f.name() + " rho_tot multiplicative", mult, 1e-9);
    }

    const CentralizerResult cz = centralizer(f);
    const int expected = expected_centralizer_dimension(f);
    if (expected >= 0) {
      std::string note = "computed " + std::to_string(cz.dimension);
      if (f.kind == FamilyKind::su_pq && f.p == f.q)
        note += "; displayed table group U(p) x Z/2 reads as dimension " +
                std::to_string(f.p * f.p) + ", determinant constraint forces " +
                std::to_string(expected);
      if (f.kind == FamilyKind::sostar_2n)
        note += "; table symbol Sp(n) means the rank-n/2 compact symplectic group "
                "inside U(n), dimension (n/2)(n+1)";
      rep.add(f.name() + " centralizer dimension",
              std::abs(cz.dimension - expected), 0.5, note);
    } else {
      rep.add_flag(f.name() + " centralizer dimension (no asserted value)", true,
                   "computed " + std::to_string(cz.dimension));
    }

    double comm = 0.0, expg = 0.0;
    const CanonicalRep cr = canonical_rep(f);
    for (const auto& w : cz.basis) {
      for (const auto& img : cr.f_star_images)
        comm = std::max(comm, norm_fro(commutator(w, img)));
      expg = std::max(expg, group_membership_residual(f, expm(w)));
    }
    rep.add(f.name() + " centralizer commutes with images", comm, 1e-10);
    rep.add(f.name() + " centralizer exponentiates into G", expg, 1e-9);

    if (f.kind == FamilyKind::sostar_2n && f.p % 2 == 0) {
      const std::vector<ComplexMatrix> factor2 = sostar_k_factor_basis(f.p, 2);
      double proj = 0.0;
      for (const auto& w : cz.basis) {
        double s = 0.0;
        for (const auto& b2 : factor2) {
          const double ip = frobenius_inner(w, b2).real();
          s += ip * ip;
        }
        proj = std::max(proj, std::sqrt(s));
      }
      rep.add(f.name() + " centralizer inside first k factor", proj, 1e-9);
    }

    if (f.kind == FamilyKind::sp_2n) {
      const LemmaReport ad = adjoint_transitivity_check(
          f, static_cast<int>(std::min<long>(cfg.samples, 100)),
          Rng::subseed(seed, "ad:" + f.name()));
      for (const auto& d : ad.details)
        rep.add(f.name() + " " + d.name, d.residual, d.tolerance, d.note);
    }
    if (f.kind == FamilyKind::sostar_2n && f.p % 2 == 0) {
      const LemmaReport ad =
          adjoint_transitivity_check(f, 6, Rng::subseed(seed, "ad:" + f.name()));
      for (const auto& d : ad.details)
        rep.add(f.name() + " " + d.name, d.residual, d.tolerance, d.note);
    }
  }
  return rep;
}

// -------------------------------------------------------------------- higgs

LemmaReport check_higgs(const SuiteConfig& cfg, std::uint64_t seed) {
  LemmaReport rep;
  rep.check_name = "higgs";
  rep.paper_anchor = "fiberwise Toledo and energy densities; Milnor-Wood arithmetic";
  rep.samples = cfg.samples;
  rep.seed = seed;
  Rng rng(seed);

  for (const auto& f : cfg.families) {
    const CenterElement z = center_generator(f);
    rep.add(f.name() + " Z lies in g", algebra_membership_residual(f, z.Z), 1e-12);

    double eigen_resid = 0.0, adsq = 0.0;
    for (int s = 0; s < 10; ++s) {
      const TangentParam t = random_tangent(f, rng);
      const ComplexMatrix m = embed_tangent(t);
      eigen_resid = std::max(eigen_resid, norm_fro(commutator(z.Z, m) - i1 * m));
      const ComplexMatrix mm = m + m.adjoint();
      adsq = std::max(adsq,
                      norm_fro(commutator(z.Z, commutator(z.Z, mm)) + mm));
    }
    rep.add(f.name() + " [Z, M] = iM on embedded tangents", eigen_resid, 1e-12);
    rep.add(f.name() + " ad(Z)^2 = -id on p", adsq, 1e-12);

    double identity = 0.0, inequality = 0.0, cross = 0.0, gap_oracle = 0.0;
    for (long s = 0; s < cfg.samples; ++s) {
      TangentParam plus = random_tangent(f, rng);
      TangentParam minus = random_tangent(f, rng);
      plus.payload *= cplx(0.3 + 2.0 * rng.uniform(), 0.0);
      minus.payload *= cplx(0.3 + 2.0 * rng.uniform(), 0.0);
      const HiggsElement h = make_higgs(plus, minus);

      const ComplexMatrix phi = h.phi_plus + h.phi_minus;
      const double np = norm_fro(h.phi_plus), nm = norm_fro(h.phi_minus);
      const double via_bracket = frobenius_inner(phi, commutator(phi, i1 * z.Z)).real();
      const double tol_scale = std::max(1.0, np * np + nm * nm);
      identity = std::max(
          identity, std::abs(via_bracket - (np * np - nm * nm)) / tol_scale);

      const double e = energy_density(h);
      const double t = toledo_density(h);
      inequality = std::max(inequality, std::abs(t) - e);
      const double gap = e - std::abs(t);
      const double mn = std::min(np, nm);
      gap_oracle = std::max(gap_oracle, std::abs(gap - 2.0 * mn * mn) / tol_scale);

      cross = std::max(cross,
                       std::abs(frobenius_inner(commutator(z.Z, h.phi_plus),
                                                i1 * h.phi_minus)));
      cross = std::max(cross,
                       std::abs(frobenius_inner(commutator(z.Z, h.phi_minus),
                                                i1 * h.phi_plus)));
    }
    rep.add(f.name() + " pairing identity", identity, 1e-10);
    rep.add(f.name() + " energy >= |toledo|", std::max(0.0, inequality), 1e-12);
    rep.add(f.name() + " gap equals twice the smaller component", gap_oracle, 1e-10);
    rep.add(f.name() + " cross pairings vanish", cross, 1e-12);

    // One-sided elements realize equality exactly.
    {
      const TangentParam plus = random_tangent(f, rng);
      TangentParam zero{f, ComplexMatrix(plus.payload.rows(), plus.payload.cols())};
      const HiggsElement hol = make_higgs(plus, zero);
      rep.add(f.name() + " one-sided equality",
              std::abs(energy_density(hol) - toledo_density(hol)), 1e-12);
      const HiggsElement anti = make_higgs(zero, plus);
      rep.add(f.name() + " one-sided equality (anti)",
              std::abs(energy_density(anti) + toledo_density(anti)), 1e-12);
    }
  }

  rep.add("bound vanishes at k = 0", std::abs(milnor_wood_bound(0.0, 3, 4, 2.5)), 0.0);
  rep.add("bound normalization r * V",
          std::abs(milnor_wood_bound(-2.0, 3, 5, 1.75) - 5.0 * 1.75), 1e-12);
  rep.add("plug-in arithmetic",
          std::abs(milnor_wood_bound(-2.0, 1, 1, 2.0 * 3.14159265358979323846) -
                   4.0 * 3.14159265358979323846),
          1e-12);
  return rep;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"curvature", "trace", "youla",
                                              "levi", "reps", "higgs"};
  return names;
}

SuiteConfig default_config() {
  SuiteConfig cfg;
  cfg.families = {HermitianFamily::su(3, 2), HermitianFamily::sp(3), HermitianFamily::so(5),
                  HermitianFamily::sostar(4)};
  return cfg;
}

HermitianFamily parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) fail(errc::config_parse, "family spec needs kind:sizes");
  const std::string kind = spec.substr(0, colon);
  std::vector<int> sizes;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      fail(errc::config_parse, "bad size in family spec: " + spec);
    }
  }
  try {
    if (kind == "su" && sizes.size() == 2) return HermitianFamily::su(sizes[0], sizes[1]);
    if (kind == "sp" && sizes.size() == 1) return HermitianFamily::sp(sizes[0]);
    if (kind == "so" && (sizes.size() == 1 || (sizes.size() == 2 && sizes[1] == 2)))
      return HermitianFamily::so(sizes[0]);
    if (kind == "sostar" && sizes.size() == 1) return HermitianFamily::sostar(sizes[0]);
  } catch (const Error& e) {
    fail(errc::config_parse, std::string("invalid family sizes: ") + e.what());
  }
  fail(errc::config_parse, "unrecognized family spec: " + spec);
}

namespace {

void apply_kv(SuiteConfig& cfg, const std::string& key, const std::string& value) {
  const auto split_list = [](const std::string& v, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, sep))
      if (!item.empty()) out.push_back(item);
    return out;
  };
  try {
    if (key == "families") {
      cfg.families.clear();
      for (const auto& spec : split_list(value, ' ')) cfg.families.push_back(parse_family(spec));
    } else if (key == "samples") {
      cfg.samples = std::stol(value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "tol") {
      cfg.tol = std::stod(value);
    } else if (key == "checks") {
      cfg.checks = split_list(value, ',');
    } else if (key == "out") {
      cfg.output_path = value;
    } else {
      fail(errc::config_parse, "unknown config key: " + key);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::config_parse, "bad value for " + key + ": " + value);
  }
}

}  // namespace

SuiteConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::config_parse, "cannot open config file: " + path);
  SuiteConfig cfg = default_config();
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(errc::config_parse, "expected key=value: " + line);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t");
      return s.substr(a, b - a + 1);
    };
    apply_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.samples < 1) fail(errc::config_parse, "samples must be >= 1");
  if (!(cfg.tol > 0.0)) fail(errc::config_parse, "tol must be positive");
  if (cfg.families.empty()) fail(errc::config_parse, "at least one family required");
  for (const auto& c : cfg.checks) {
    const auto& all = all_check_names();
    if (std::find(all.begin(), all.end(), c) == all.end())
      fail(errc::config_parse, "unknown check: " + c);
  }
}

std::vector<LemmaReport> run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  const auto enabled = [&](const std::string& name) {
    return cfg.checks.empty() ||
           std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
  };

  using CheckFn = LemmaReport (*)(const SuiteConfig&, std::uint64_t);
  const std::vector<std::pair<std::string, CheckFn>> table{
      {"curvature", &check_curvature}, {"trace", &check_trace}, {"youla", &check_youla},
      {"levi", &check_levi},           {"reps", &check_reps},   {"higgs", &check_higgs}};

  std::vector<std::pair<std::string, std::future<LemmaReport>>> futures;
  for (const auto& [name, fn] : table) {
    if (!enabled(name)) continue;
    futures.emplace_back(name, std::async(std::launch::async, fn, std::cref(cfg),
                                          Rng::subseed(cfg.seed, name)));
  }

  std::vector<LemmaReport> reports;
  for (auto& [name, fut] : futures) {
    try {
      reports.push_back(fut.get());
    } catch (const std::exception& e) {
      LemmaReport rep;
      rep.check_name = name;
      rep.paper_anchor = "(check aborted)";
      rep.seed = Rng::subseed(cfg.seed, name);
      rep.samples = cfg.samples;
      rep.add_flag("check ran to completion", false, e.what());
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

}  // namespace hcl
