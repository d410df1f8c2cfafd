#include "zakfiber/verify.hpp"

#include "zakfiber/errors.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace zakfiber::verify {

namespace {

using instances::FamilyInstance;
using instances::PairSpec;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    return seed ^ ((index + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Collects scale-normalized residuals against one tolerance.
struct Tally {
    long cases = 0;
    double worst = 0.0;
    bool ok = true;
    std::string first_fail;

    void check(double resid, double tol, const std::string& what) {
        ++cases;
        if (resid > worst) worst = resid;
        if (!(resid <= tol) && first_fail.empty()) {
            ok = false;
            first_fail = what + ": residual " + fmt(resid) + " > " + fmt(tol);
        }
        ok = ok && resid <= tol;
    }
    void require(bool cond, const std::string& what) {
        ++cases;
        if (!cond && first_fail.empty()) {
            ok = false;
            first_fail = what;
        }
        ok = ok && cond;
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CriterionResult seal(int id, std::string name, double budget, double time_budget,
                     const Tally& t, const Timer& timer) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.cases = t.cases;
    r.worst = t.worst;
    r.budget = budget;
    r.seconds = timer.seconds();
    r.time_budget = time_budget;
    r.passed = t.ok;
    r.detail = t.first_fail;
    if (time_budget > 0.0 && r.seconds > time_budget) {
        r.passed = false;
        if (r.detail.empty())
            r.detail = "time " + fmt(r.seconds) + "s over budget " + fmt(time_budget) + "s";
    }
    return r;
}

double opnorm(const Eigen::MatrixXcd& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

int svd_rank(const Eigen::JacobiSVD<Eigen::MatrixXcd>& svd) {
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double cut = std::max(1e-10 * s(0), 1e-14);
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}

GroupFunction delta(const GroupPtr& G, int x) {
    GroupFunction f{G, Eigen::VectorXcd::Zero(G->order())};
    f.values[x] = 1.0;
    return f;
}

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// ---------------------------------------------------------------- criterion 1

CriterionResult c1_zak(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto pairs = instances::zak_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto ctx = instances::context_of(pairs[i]);
        SplitMix64 rng(substream(seed, i));
        for (int k = 0; k < 100; ++k) {
            const GroupFunction f = instances::random_function(pairs[i].G, rng);
            const ZakArray Z = zak(ctx, f);
            const double nf = f.norm_sq();
            t.check(std::abs(Z.norm_sq() - nf) / std::max(1.0, nf), 1e-12,
                    pairs[i].name + " norm");
            const GroupFunction back = zak_inverse(Z);
            const double rt = std::sqrt((back.values - f.values).squaredNorm() *
                                        ctx->G->weight());
            t.check(rt / std::max(1.0, std::sqrt(nf)), 1e-12, pairs[i].name + " round-trip");
        }
    }
    return seal(1, "zak-unitarity-inversion", 1e-12, 30.0, t, timer);
}

// ---------------------------------------------------------------- criterion 2

CriterionResult c2_intertwine(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto pairs = instances::zak_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto ctx = instances::context_of(pairs[i]);
        SplitMix64 rng(substream(seed, i));
        for (int k = 0; k < 3; ++k) {
            const GroupFunction f = instances::random_function(pairs[i].G, rng);
            const ZakArray Z0 = zak(ctx, f);
            const double scale = std::max(1.0, Z0.values.cwiseAbs().maxCoeff());
            FiberArray F0;
            if (ctx->fiber_side) F0 = fiberize(ctx, f);

            // Translation covariance: the Zak rows pick up conj(chi_alpha(xi)).
            for (int j = 0; j < ctx->H.order(); ++j) {
                const int xi = ctx->H.members[static_cast<std::size_t>(j)];
                const GroupFunction Lf = translate(f, xi);
                const ZakArray Zt = zak(ctx, Lf);
                double worst = 0.0;
                for (int a = 0; a < ctx->dual_order(); ++a) {
                    const cxd factor = std::conj(ctx->Hd.chi(a, j));
                    worst = std::max(
                        worst, (Zt.values.row(a) - factor * Z0.values.row(a)).cwiseAbs().maxCoeff());
                }
                t.check(worst / scale, 1e-12, pairs[i].name + " zak translate");
                if (ctx->fiber_side) {
                    const FiberArray Ft = fiberize(ctx, Lf);
                    double fw = 0.0;
                    for (int a = 0; a < ctx->dual_order(); ++a) {
                        const cxd factor = std::conj(ctx->Hd.chi(a, j));
                        fw = std::max(fw, (Ft.values.row(a) - factor * F0.values.row(a))
                                              .cwiseAbs()
                                              .maxCoeff());
                    }
                    t.check(fw / std::max(1.0, F0.values.cwiseAbs().maxCoeff()), 1e-12,
                            pairs[i].name + " fiber translate");
                }
            }

            // Modulation covariance by annihilator characters: column factors.
            if (ctx->fiber_side) {
                for (int kk = 0; kk < ctx->Hstar.order(); ++kk) {
                    const int kappa = ctx->Hstar.members[static_cast<std::size_t>(kk)];
                    const GroupFunction Mf = modulate(ctx->Gd, f, kappa);
                    const ZakArray Zm = zak(ctx, Mf);
                    double worst = 0.0;
                    for (int c = 0; c < ctx->cosets(); ++c) {
                        const cxd factor =
                            ctx->Gd.chi(kappa, ctx->C.transversal[static_cast<std::size_t>(c)]);
                        worst = std::max(worst, (Zm.values.col(c) - factor * Z0.values.col(c))
                                                    .cwiseAbs()
                                                    .maxCoeff());
                    }
                    t.check(worst / scale, 1e-12, pairs[i].name + " zak modulate");
                }
            }
        }
    }
    return seal(2, "intertwining-identities", 1e-12, 30.0, t, timer);
}

// ---------------------------------------------------------------- criterion 3

CriterionResult c3_fiber_link(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto pairs = instances::zak_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!pairs[i].G->has_invariants()) continue;
        const auto ctx = instances::context_of(pairs[i]);
        SplitMix64 rng(substream(seed, i));
        for (int k = 0; k < 5; ++k) {
            const GroupFunction f = instances::random_function(pairs[i].G, rng);
            const FiberArray via_zak = zak_to_fiber(zak(ctx, f));
            const FiberArray direct = fiberize(ctx, f);
            const double scale = std::max(1.0, direct.values.cwiseAbs().maxCoeff());
            t.check((via_zak.values - direct.values).cwiseAbs().maxCoeff() / scale, 1e-10,
                    pairs[i].name + " bridge");
        }
    }
    return seal(3, "zak-fiberization-link", 1e-10, 20.0, t, timer);
}

// ---------------------------------------------------------------- criterion 4

CriterionResult c4_weil(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto pairs = instances::zak_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto ctx = instances::context_of(pairs[i]);
        SplitMix64 rng(substream(seed, i));
        const auto& G = pairs[i].G;
        for (int k = 0; k < 5; ++k) {
            std::vector<cxd> f(static_cast<std::size_t>(G->order()));
            double mass = 0.0;
            for (auto& v : f) {
                v = cxd(rng.symmetric(), rng.symmetric());
                mass += std::abs(v) * G->weight();
            }
            t.check(weil_check(G, ctx->H, ctx->C, f) / std::max(1.0, mass), 1e-12,
                    pairs[i].name + " weil");
        }
        for (int g = 0; g < G->order(); ++g) {
            const int xi = ctx->C.h_part[static_cast<std::size_t>(g)];
            const int c = ctx->C.coset_of[static_cast<std::size_t>(g)];
            t.require(G->op(xi, ctx->C.transversal[static_cast<std::size_t>(c)]) == g,
                      pairs[i].name + " factorization of element " + std::to_string(g));
        }
    }
    return seal(4, "weil-and-factorization", 1e-12, 0.0, t, timer);
}

// ---------------------------------------------------------------- criterion 5

CriterionResult c5_frames(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto matrix = instances::frame_matrix(seed);
    for (const auto& inst : matrix) {
        const FrameReport r = translate_frame_report(inst.ctx, inst.family);
        t.require(!r.degenerate, inst.name + " unexpectedly degenerate");
        t.check(rel_gap(r.A_direct, r.A_fiber), 1e-8, inst.name + " lower bound");
        t.check(rel_gap(r.B_direct, r.B_fiber), 1e-8, inst.name + " upper bound");
    }
    t.require(static_cast<long>(matrix.size()) >= 200, "frame matrix has >= 200 instances");
    return seal(5, "frame-bound-equivalence", 1e-8, 120.0, t, timer);
}

// ---------------------------------------------------------------- criterion 6

CriterionResult c6_riesz(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto matrix = instances::riesz_matrix(seed);
    long dependent = 0;
    for (const auto& inst : matrix) {
        const FrameReport r = riesz_check(inst.fam.ctx, inst.fam.family);
        const bool verdict_direct = r.is_riesz_sequence;
        const bool verdict_fiber = r.A_fiber > 1e-10 * r.B_fiber;
        t.require(verdict_direct == verdict_fiber, inst.fam.name + " verdict mismatch");
        if (inst.expect_dependent) {
            ++dependent;
            t.require(!verdict_direct, inst.fam.name + " dependent system accepted (direct)");
            t.require(!verdict_fiber, inst.fam.name + " dependent system accepted (fiber)");
        } else {
            t.check(rel_gap(r.A_direct, r.A_fiber), 1e-8, inst.fam.name + " lower bound");
            t.check(rel_gap(r.B_direct, r.B_fiber), 1e-8, inst.fam.name + " upper bound");
        }
    }
    t.require(dependent >= 20, "riesz matrix has >= 20 dependent systems");
    return seal(6, "riesz-equivalence", 1e-8, 0.0, t, timer);
}

// ---------------------------------------------------------------- criterion 7

CriterionResult c7_gabor(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto matrix = instances::gabor_matrix(seed);
    for (const auto& inst : matrix) {
        const GaborCheck gc = gabor_frame_check(inst.ctx, inst.family);
        t.require(!gc.report.degenerate, inst.name + " unexpectedly degenerate");
        t.check(rel_gap(gc.report.A_direct, gc.report.A_fiber), 1e-8,
                inst.name + " lower bound");
        t.check(rel_gap(gc.report.B_direct, gc.report.B_fiber), 1e-8,
                inst.name + " upper bound");
    }
    t.require(static_cast<long>(matrix.size()) >= 50, "gabor matrix has >= 50 instances");
    return seal(7, "gabor-equivalence", 1e-8, 0.0, t, timer);
}

// ---------------------------------------------------------------- criterion 8

Eigen::MatrixXcd fiber_projector(const PairCtxPtr& ctx, const RangeFunction& J) {
    const int n = ctx->G->order();
    Eigen::MatrixXcd P(n, n);
    for (int x = 0; x < n; ++x) P.col(x) = ti_projection(delta(ctx->G, x), J).values;
    return P;
}

CriterionResult c8_classify(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto pairs = instances::zak_pairs();
    long instances_seen = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        SplitMix64 rng(substream(seed, i));
        const auto ctx = instances::context_of(pairs[i]);
        const auto family = instances::random_family(pairs[i].G, 2, rng);
        std::vector<ZakArray> zaks;
        for (const auto& f : family) zaks.push_back(zak(ctx, f));
        const RangeFunction J = range_function(zaks);

        // Dimension identity: fiber dimensions vs the rank of the full
        // translate matrix, integer-exact.
        const Eigen::MatrixXcd U = translate_system_matrix(ctx, family);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(U, Eigen::ComputeThinU);
        const int rank = svd_rank(svd);
        t.require(rank == J.total_dim(),
                  pairs[i].name + " dimension identity " + std::to_string(rank) +
                      " != " + std::to_string(J.total_dim()));

        // Projector identity: the fiberwise projector against the direct
        // least-squares projector onto the span of all translates.
        const Eigen::MatrixXcd Q = svd.matrixU().leftCols(rank);
        const Eigen::MatrixXcd Pdirect = Q * Q.adjoint();
        const Eigen::MatrixXcd Pfiber = fiber_projector(ctx, J);
        t.check(opnorm(Pdirect - Pfiber), 1e-9, pairs[i].name + " projector gap");

        // Section independence: redo the fiber route over a randomized
        // transversal; the projector must not move.
        const auto ctx2 =
            instances::context_of(pairs[i], TransversalPolicy::random, rng.next());
        std::vector<ZakArray> zaks2;
        for (const auto& f : family) zaks2.push_back(zak(ctx2, f));
        const RangeFunction J2 = range_function(zaks2);
        const Eigen::MatrixXcd Pfiber2 = fiber_projector(ctx2, J2);
        t.check(opnorm(Pfiber - Pfiber2), 1e-9, pairs[i].name + " section dependence");
        ++instances_seen;

        // Critically sampled two-parameter version on the abelian pairs,
        // exercised on delta families whose supports are genuinely sparse.
        if (ctx->fiber_side) {
            const int n = ctx->G->order();
            const GroupFunction d0 = delta(ctx->G, static_cast<int>(rng.below(
                                                       static_cast<std::uint64_t>(n))));
            const GroupFunction d1 = delta(ctx->G, static_cast<int>(rng.below(
                                                       static_cast<std::uint64_t>(n))));
            std::vector<GroupFunction> deltas{d0, d1};
            std::vector<ZakArray> dz;
            for (const auto& f : deltas) dz.push_back(zak(ctx, f));
            const TMISupport E = tmi_support(dz);

            // Fiber route: zero the Zak entries off the support.
            Eigen::MatrixXcd Pmask(n, n);
            for (int x = 0; x < n; ++x) {
                ZakArray Zx = zak(ctx, delta(ctx->G, x));
                for (int a = 0; a < ctx->dual_order(); ++a)
                    for (int c = 0; c < ctx->cosets(); ++c)
                        if (!E.at(a, c)) Zx.values(a, c) = 0.0;
                Pmask.col(x) = zak_inverse(Zx).values;
            }

            // Direct route: least squares onto the span of all
            // translation-modulation orbit members.
            const int hs = ctx->H.order();
            const int ss = ctx->Hstar.order();
            Eigen::MatrixXcd UG(n, 2 * hs * ss);
            int col = 0;
            for (const auto& f : deltas)
                for (int kk = 0; kk < ss; ++kk) {
                    const GroupFunction mf =
                        modulate(ctx->Gd, f, ctx->Hstar.members[static_cast<std::size_t>(kk)]);
                    for (int j = 0; j < hs; ++j)
                        UG.col(col++) =
                            translate(mf, ctx->H.members[static_cast<std::size_t>(j)]).values;
                }
            Eigen::JacobiSVD<Eigen::MatrixXcd> gs(UG, Eigen::ComputeThinU);
            const int grank = svd_rank(gs);
            t.require(grank == E.count(), pairs[i].name + " two-parameter dimension " +
                                              std::to_string(grank) +
                                              " != " + std::to_string(E.count()));
            const Eigen::MatrixXcd Qg = gs.matrixU().leftCols(grank);
            t.check(opnorm(Qg * Qg.adjoint() - Pmask), 1e-9,
                    pairs[i].name + " two-parameter projector gap");
        }
    }
    t.require(instances_seen >= 50, "classification matrix has >= 50 instances");
    return seal(8, "invariant-space-classification", 1e-9, 0.0, t, timer);
}

// ---------------------------------------------------------------- criterion 9

Eigen::VectorXcd random_cvec(int d, SplitMix64& rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v[i] = cxd(instances::gaussian(rng), instances::gaussian(rng));
    return v;
}

/// Projector onto the cyclic space of psi: sum over characters of the
/// normalized spectral components.
Eigen::MatrixXcd cyclic_projector(const UnitaryRep& rep, const Eigen::VectorXcd& psi) {
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
    for (int a = 0; a < rep.order(); ++a) {
        const Eigen::VectorXcd u = rep.projection(a) * psi;
        const double n2 = u.squaredNorm();
        if (n2 > 1e-24) P += u * u.adjoint() / n2;
    }
    return P;
}

void check_one_rep(Tally& t, const std::string& name, const UnitaryRep& rep,
                   const std::vector<Eigen::VectorXcd>& vectors, SplitMix64& rng) {
    const int n = rep.order();
    const int d = rep.dim;
    const double wd = rep.dual.weight();
    const Eigen::VectorXcd phi = random_cvec(d, rng);
    const Eigen::VectorXcd psi = random_cvec(d, rng);
    const double scale = std::max(1.0, phi.norm() * psi.norm());

    // Defining identity: <phi, pi(x) psi> = sum_a br(a) conj(chi_a(x)) w_dual.
    const Eigen::VectorXcd br = bracket(rep, phi, psi);
    for (int x = 0; x < n; ++x) {
        const cxd lhs = (rep.matrix(x) * psi).dot(phi);
        cxd rhs = 0.0;
        for (int a = 0; a < n; ++a) rhs += br[a] * std::conj(rep.dual.chi(a, x)) * wd;
        t.check(std::abs(lhs - rhs) / scale, 1e-10, name + " defining identity");
    }

    // (i) positivity, (ii) Cauchy-Schwarz, (iii) orthogonality to a cyclic
    // space kills the bracket, (iv) translation covariance on both slots.
    const Eigen::VectorXcd bpp = bracket(rep, phi, phi);
    const Eigen::VectorXcd bqq = bracket(rep, psi, psi);
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
        worst = std::max(worst, std::abs(bpp[a].imag()));
        worst = std::max(worst, std::max(0.0, -bpp[a].real()));
    }
    t.check(worst / std::max(1.0, phi.squaredNorm()), 1e-10, name + " positivity");
    worst = 0.0;
    for (int a = 0; a < n; ++a) {
        const double slack =
            std::abs(br[a]) * std::abs(br[a]) - bpp[a].real() * bqq[a].real();
        worst = std::max(worst, slack);
    }
    t.check(worst / std::max(1.0, scale * scale), 1e-10, name + " cauchy-schwarz");

    const Eigen::VectorXcd perp = phi - cyclic_projector(rep, psi) * phi;
    const Eigen::VectorXcd bperp = bracket(rep, perp, psi);
    t.check(bperp.cwiseAbs().maxCoeff() / scale, 1e-10, name + " orthogonality kills bracket");

    for (int x = 0; x < n; ++x) {
        const Eigen::VectorXcd left = bracket(rep, rep.matrix(x) * phi, psi);
        const Eigen::VectorXcd right =
            bracket(rep, phi, rep.matrix(rep.group->inverse(x)) * psi);
        double w1 = 0.0, w2 = 0.0;
        for (int a = 0; a < n; ++a) {
            const cxd expect = rep.dual.chi(a, x) * br[a];
            w1 = std::max(w1, std::abs(left[a] - expect));
            w2 = std::max(w2, std::abs(right[a] - expect));
        }
        t.check(w1 / scale, 1e-10, name + " covariance (left slot)");
        t.check(w2 / scale, 1e-10, name + " covariance (right slot)");
    }

    // Hermitian symmetry of the bracket map.
    const Eigen::VectorXcd bqp = bracket(rep, psi, phi);
    worst = 0.0;
    for (int a = 0; a < n; ++a) worst = std::max(worst, std::abs(br[a] - std::conj(bqp[a])));
    t.check(worst / scale, 1e-10, name + " hermitian symmetry");

    // Isometry and intertwining of T.
    const GeneratorFamily gens = orthogonal_generators(rep);
    const Eigen::MatrixXcd Tphi = isometry_T(rep, gens, phi);
    t.check(std::abs(Tphi.squaredNorm() * wd - phi.squaredNorm()) /
                std::max(1.0, phi.squaredNorm()),
            1e-10, name + " isometry");
    for (int x = 0; x < n; ++x) {
        const Eigen::MatrixXcd Tx = isometry_T(rep, gens, rep.matrix(x) * phi);
        double w1 = 0.0;
        for (int a = 0; a < n; ++a)
            w1 = std::max(w1,
                          (Tx.row(a) - rep.dual.chi(a, x) * Tphi.row(a)).cwiseAbs().maxCoeff());
        t.check(w1 / std::max(1.0, phi.norm()), 1e-10, name + " T intertwining");
    }

    // Orbit frame / Riesz bounds: dense oracle vs character fibers.
    const FrameReport fr = rep_frame_check(rep, gens, vectors);
    t.require(!fr.degenerate, name + " unexpectedly degenerate");
    t.check(rel_gap(fr.A_direct, fr.A_fiber), 1e-8, name + " frame lower bound");
    t.check(rel_gap(fr.B_direct, fr.B_fiber), 1e-8, name + " frame upper bound");
    const FrameReport rr = rep_riesz_check(rep, gens, vectors);
    t.check(rel_gap(rr.A_direct, rr.A_fiber), 1e-8, name + " riesz lower bound");
    t.check(rel_gap(rr.B_direct, rr.B_fiber), 1e-8, name + " riesz upper bound");

    // Orthonormality criterion: the orbit of the family is orthonormal
    // exactly when the pairwise brackets are identically delta_{st}.
    double flat = 0.0;
    for (std::size_t s = 0; s < vectors.size(); ++s)
        for (std::size_t u = 0; u < vectors.size(); ++u) {
            const Eigen::VectorXcd b = bracket(rep, vectors[s], vectors[u]);
            const double target = (s == u) ? 1.0 : 0.0;
            for (int a = 0; a < n; ++a) flat = std::max(flat, std::abs(b[a] - target));
        }
    t.require((flat <= 1e-8) == fr.is_orthonormal,
              name + " orthonormality criterion disagrees with the Gram verdict (flatness " +
                  fmt(flat) + ")");

    // Concrete unitary equivalence with translations.
    const TranslationEmbedding emb = embed_as_translation(rep, gens);
    t.check(emb.intertwine_residual, 1e-9, name + " embedding intertwining");
    t.require(emb.image_translation_invariant, name + " embedded image not invariant");
}

CriterionResult c9_rep(std::uint64_t seed) {
    Timer timer;
    Tally t;
    const auto matrix = instances::rep_matrix(seed);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        SplitMix64 rng(substream(seed ^ 0xc9c9c9c9ULL, i));
        check_one_rep(t, matrix[i].name, matrix[i].rep, matrix[i].vectors, rng);
    }

    // Constructed positive instances for the orthonormality criterion: the
    // regular action on group elements has orthonormal orbits, both with a
    // single generator and with two generators on disjoint blocks.
    {
        SplitMix64 rng(substream(seed ^ 0xc9c9c9c9ULL, matrix.size()));
        GroupPtr Z4 = make_abelian({4}, 1.0, "reg4");
        Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(4, 4);
        for (int r = 0; r < 4; ++r) shift((r + 1) % 4, r) = 1.0;
        const UnitaryRep reg = make_rep_from_generators(Z4, {shift});
        Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(4);
        e0[0] = 1.0;
        check_one_rep(t, "regular-Z4", reg, {e0}, rng);
        const GeneratorFamily gens = orthogonal_generators(reg);
        t.require(rep_frame_check(reg, gens, {e0}).is_orthonormal,
                  "regular-Z4 orbit should be orthonormal");

        GroupPtr Z2 = make_abelian({2}, 1.0, "reg2x2");
        Eigen::MatrixXcd two = Eigen::MatrixXcd::Zero(4, 4);
        two(1, 0) = two(0, 1) = two(3, 2) = two(2, 3) = 1.0;
        const UnitaryRep reg2 = make_rep_from_generators(Z2, {two});
        Eigen::VectorXcd u0 = Eigen::VectorXcd::Zero(4), u1 = Eigen::VectorXcd::Zero(4);
        u0[0] = 1.0;
        u1[2] = 1.0;
        const GeneratorFamily gens2 = orthogonal_generators(reg2);
        const FrameReport on2 = rep_frame_check(reg2, gens2, {u0, u1});
        t.require(on2.is_orthonormal, "block-regular two-generator orbit should be orthonormal");
        Eigen::VectorXcd u2 = 2.0 * u1; // break normalization: criterion must flip
        t.require(!rep_frame_check(reg2, gens2, {u0, u2}).is_orthonormal,
                  "scaled orbit wrongly declared orthonormal");
    }
    return seal(9, "rep-bracket-suite", 1e-8, 120.0, t, timer);
}

// --------------------------------------------------------------- criterion 10

CriterionResult c10_micro() {
    Timer timer;
    Tally t;

    // Z4 with the index-2 subgroup {0, 2}, counting measure, delta at 0.
    {
        GroupPtr Z4 = make_abelian({4});
        const Subgroup H = subgroup_generate(Z4, {2}, 1.0);
        const auto ctx = make_pair_context(Z4, H);
        const GroupFunction f = delta(Z4, 0);

        const ZakArray Z = zak(ctx, f);
        Eigen::MatrixXcd zak_expected(2, 2);
        zak_expected << 1.0, 0.0, 1.0, 0.0;
        t.check((Z.values - zak_expected).cwiseAbs().maxCoeff(), 1e-12, "Z4 zak values");

        const FiberArray F = fiberize(ctx, f);
        t.check((F.values - Eigen::MatrixXcd::Ones(2, 2)).cwiseAbs().maxCoeff(), 1e-12,
                "Z4 fiberization values");

        const FrameReport fr = translate_frame_report(ctx, {f});
        t.check(std::abs(fr.A_direct - 1.0), 1e-12, "Z4 frame lower bound");
        t.check(std::abs(fr.B_direct - 1.0), 1e-12, "Z4 frame upper bound");
        t.check(std::abs(fr.A_fiber - 1.0), 1e-12, "Z4 fiber lower bound");
        t.check(std::abs(fr.B_fiber - 1.0), 1e-12, "Z4 fiber upper bound");
        t.require(fr.span_dim == 2, "Z4 span dimension should be 2");

        const FrameReport rz = riesz_check(ctx, {f});
        t.require(rz.is_riesz_sequence, "Z4 delta translates should be a Riesz sequence");
        t.check(std::abs(rz.A_direct - 1.0), 1e-12, "Z4 riesz lower bound");
        t.check(std::abs(rz.B_direct - 1.0), 1e-12, "Z4 riesz upper bound");

        const FrameReport dup = translate_frame_report(ctx, {f, f});
        t.check(std::abs(dup.A_direct - 2.0), 1e-12, "Z4 duplicated family lower bound");
        t.check(std::abs(dup.B_direct - 2.0), 1e-12, "Z4 duplicated family upper bound");
    }

    // Z2 with the full subgroup: one-window critically sampled system.
    {
        GroupPtr Z2 = make_abelian({2});
        const Subgroup H = subgroup_generate(Z2, {1}, 1.0);
        const auto ctx = make_pair_context(Z2, H);
        const GaborCheck gc = gabor_frame_check(ctx, {delta(Z2, 0)});
        t.check(std::abs(gc.report.A_direct - 1.0), 1e-12, "Z2 two-parameter lower bound");
        t.check(std::abs(gc.report.B_direct - 1.0), 1e-12, "Z2 two-parameter upper bound");
        t.check(std::abs(gc.report.A_fiber - 1.0), 1e-12, "Z2 fiber-side lower bound");
        t.check(std::abs(gc.report.B_fiber - 1.0), 1e-12, "Z2 fiber-side upper bound");
    }

    // The swap action of Z2 on C^2: the bracket table on the standard
    // basis, the isometry image of e1, and the orbit bounds of e1 + e2.
    {
        GroupPtr Z2 = make_abelian({2});
        Eigen::MatrixXcd swap(2, 2);
        swap << 0.0, 1.0, 1.0, 0.0;
        const UnitaryRep rep = make_rep_from_generators(Z2, {swap});
        Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(2), e2 = Eigen::VectorXcd::Zero(2);
        e1[0] = 1.0;
        e2[1] = 1.0;

        // Hand table: [e_s, e_t](alpha) = +1 except [e1,e2](1) = [e2,e1](1) = -1.
        const Eigen::VectorXcd b11 = bracket(rep, e1, e1);
        const Eigen::VectorXcd b12 = bracket(rep, e1, e2);
        const Eigen::VectorXcd b21 = bracket(rep, e2, e1);
        const Eigen::VectorXcd b22 = bracket(rep, e2, e2);
        double worst = 0.0;
        worst = std::max(worst, std::abs(b11[0] - 1.0));
        worst = std::max(worst, std::abs(b11[1] - 1.0));
        worst = std::max(worst, std::abs(b12[0] - 1.0));
        worst = std::max(worst, std::abs(b12[1] + 1.0));
        worst = std::max(worst, std::abs(b21[0] - 1.0));
        worst = std::max(worst, std::abs(b21[1] + 1.0));
        worst = std::max(worst, std::abs(b22[0] - 1.0));
        worst = std::max(worst, std::abs(b22[1] - 1.0));
        t.check(worst, 1e-12, "swap bracket table");

        const GeneratorFamily gens = orthogonal_generators(rep);
        t.require(gens.count() == 1, "swap action should be cyclic (one generator)");
        const Eigen::MatrixXcd T1 = isometry_T(rep, gens, e1);
        t.check(std::abs(T1(0, 0) - 1.0), 1e-12, "swap isometry row 0");
        t.check(std::abs(T1(1, 0) - 1.0), 1e-12, "swap isometry row 1");

        const FrameReport fr = rep_frame_check(rep, gens, {e1 + e2});
        t.check(std::abs(fr.A_direct - 4.0), 1e-12, "swap orbit lower bound");
        t.check(std::abs(fr.B_direct - 4.0), 1e-12, "swap orbit upper bound");
        t.check(std::abs(fr.A_fiber - 4.0), 1e-12, "swap orbit fiber lower bound");
        t.check(std::abs(fr.B_fiber - 4.0), 1e-12, "swap orbit fiber upper bound");
    }

    // Integer facts frozen by the oracle script: group law samples, the
    // annihilator of {0,2} in Z4, the conjugation multipliers of the
    // order-21 group, a dihedral word, and the Heisenberg order profile.
    {
        GroupPtr Z6 = make_abelian({6});
        t.require(Z6->op(4, 5) == 3, "Z6: 4 + 5 should be 3");

        GroupPtr Z4 = make_abelian({4});
        const Subgroup H = subgroup_generate(Z4, {2}, 1.0);
        const Annihilator st = annihilator(characters(Z4), H);
        t.require(st.members == std::vector<int>({0, 2}), "annihilator of {0,2} in Z4");

        GroupPtr D4 = make_dihedral(4);
        t.require(D4->op(D4->op(4, 1), 4) == 3, "D4: s r s should be r^-1");

        GroupPtr F21 = make_semidirect_axb(7, 3);
        std::vector<int> mult;
        for (int k = 0; k < 3; ++k) {
            // b^k a b^-k is a power of a; record the exponent.
            const int bk = F21->power(7, k);
            const int conj = F21->op(F21->op(bk, 1), F21->inverse(bk));
            t.require(conj < 7, "F21: conjugate of a should stay in <a>");
            mult.push_back(conj);
        }
        std::sort(mult.begin(), mult.end());
        t.require(mult == std::vector<int>({1, 2, 4}), "F21 conjugation multipliers");

        GroupPtr He = make_heisenberg(2);
        int ord1 = 0, ord2 = 0, ord4 = 0;
        for (int x = 0; x < He->order(); ++x) {
            const int o = He->element_order(x);
            if (o == 1) ++ord1;
            if (o == 2) ++ord2;
            if (o == 4) ++ord4;
        }
        t.require(ord1 == 1 && ord2 == 5 && ord4 == 2, "Heisenberg-2 order profile");
    }

    return seal(10, "micro-cases", 1e-12, 0.0, t, timer);
}

bool scope_selects(const std::string& scope, int id, const char* name) {
    if (scope.empty() || scope == "all") return true;
    std::size_t start = 0;
    while (start <= scope.size()) {
        std::size_t comma = scope.find(',', start);
        if (comma == std::string::npos) comma = scope.size();
        const std::string tok = scope.substr(start, comma - start);
        if (!tok.empty() && (tok == name || tok == std::to_string(id))) return true;
        start = comma + 1;
    }
    return false;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& scope, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    if (scope_selects(scope, 1, "zak")) out.push_back(c1_zak(seed));
    if (scope_selects(scope, 2, "intertwine")) out.push_back(c2_intertwine(seed));
    if (scope_selects(scope, 3, "fiber-link")) out.push_back(c3_fiber_link(seed));
    if (scope_selects(scope, 4, "weil")) out.push_back(c4_weil(seed));
    if (scope_selects(scope, 5, "frames")) out.push_back(c5_frames(seed));
    if (scope_selects(scope, 6, "riesz")) out.push_back(c6_riesz(seed));
    if (scope_selects(scope, 7, "gabor")) out.push_back(c7_gabor(seed));
    if (scope_selects(scope, 8, "classify")) out.push_back(c8_classify(seed));
    if (scope_selects(scope, 9, "rep")) out.push_back(c9_rep(seed));
    if (scope_selects(scope, 10, "micro")) out.push_back(c10_micro());
    if (out.empty()) throw zakfiber::SchemaError("scope selects no criteria: " + scope);
    return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& r : results) {
        char line[256];
        std::snprintf(line, sizeof(line),
                      "[%2d] %s  %-32s checks=%-7ld worst=%-9.3g tol=%-8.3g t=%.2fs", r.id,
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.worst, r.budget,
                      r.seconds);
        os << line << "\n";
        if (!r.passed && !r.detail.empty()) os << "     ^ " << r.detail << "\n";
        all = all && r.passed;
    }
    return all;
}

} // namespace zakfiber::verify
