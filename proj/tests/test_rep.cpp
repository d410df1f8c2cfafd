#include <doctest.h>

#include "zakfiber/instances.hpp"
#include "zakfiber/rep.hpp"

using namespace zakfiber;

namespace {
double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}
Eigen::VectorXcd gvec(int d, SplitMix64& rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i)
        v[i] = cxd(instances::gaussian(rng), instances::gaussian(rng));
    return v;
}
} // namespace

TEST_CASE("coordinate-swap action has the textbook bracket table") {
    auto G = make_abelian({2});
    Eigen::MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    const UnitaryRep rep = make_rep_from_generators(G, {swap});
    const Eigen::VectorXcd e1 = Eigen::VectorXcd::Unit(2, 0);
    const Eigen::VectorXcd e2 = Eigen::VectorXcd::Unit(2, 1);
    const Eigen::VectorXcd b11 = bracket(rep, e1, e1);
    const Eigen::VectorXcd b12 = bracket(rep, e1, e2);
    CHECK(std::abs(b11[0] - cxd(1, 0)) <= 1e-12);
    CHECK(std::abs(b11[1] - cxd(1, 0)) <= 1e-12);
    CHECK(std::abs(b12[0] - cxd(1, 0)) <= 1e-12);
    CHECK(std::abs(b12[1] - cxd(-1, 0)) <= 1e-12);
}

TEST_CASE("bracket expands the matrix coefficients of the action") {
    auto G = make_abelian({3, 2});
    SplitMix64 rng(103);
    const UnitaryRep rep = instances::random_rep(G, 5, rng);
    const Eigen::VectorXcd phi = gvec(5, rng);
    const Eigen::VectorXcd psi = gvec(5, rng);
    const Eigen::VectorXcd br = bracket(rep, phi, psi);
    const double wd = rep.dual.weight();
    for (int x = 0; x < G->order(); ++x) {
        cxd sum = 0;
        for (int a = 0; a < rep.order(); ++a)
            sum += br[a] * std::conj(rep.dual.chi(a, x)) * wd;
        const cxd direct = (rep.matrix(x) * psi).dot(phi); // <phi, pi(x) psi>
        CHECK(std::abs(sum - direct) <=
              1e-10 * std::max(1.0, phi.norm() * psi.norm()));
    }
}

TEST_CASE("bracket covariance under the action") {
    auto G = make_abelian({6});
    SplitMix64 rng(107);
    const UnitaryRep rep = instances::random_rep(G, 4, rng);
    const Eigen::VectorXcd phi = gvec(4, rng);
    const Eigen::VectorXcd psi = gvec(4, rng);
    const Eigen::VectorXcd base = bracket(rep, phi, psi);
    for (int x = 0; x < G->order(); ++x) {
        const Eigen::VectorXcd left = bracket(rep, rep.matrix(x) * phi, psi);
        const Eigen::VectorXcd right =
            bracket(rep, phi, rep.matrix(G->inverse(x)) * psi);
        for (int a = 0; a < rep.order(); ++a) {
            const cxd want = rep.dual.chi(a, x) * base[a];
            CHECK(std::abs(left[a] - want) <= 1e-10);
            CHECK(std::abs(right[a] - want) <= 1e-10);
        }
    }
}

TEST_CASE("orthogonal generators decompose the space into cyclic pieces") {
    auto G = make_abelian({4, 2});
    SplitMix64 rng(109);
    const UnitaryRep rep = instances::random_rep(G, 6, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    REQUIRE(gens.count() >= 1);

    // the joint orbit spans everything
    Eigen::MatrixXcd orbit(6, G->order() * gens.count());
    int col = 0;
    for (int i = 0; i < gens.count(); ++i)
        for (int x = 0; x < G->order(); ++x)
            orbit.col(col++) = rep.matrix(x) * gens.theta[static_cast<std::size_t>(i)];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(orbit);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-10 * svd.singularValues()[0]) ++rank;
    CHECK(rank == 6);

    // distinct cyclic pieces are orthogonal: cross brackets vanish
    for (int i = 0; i < gens.count(); ++i)
        for (int j = i + 1; j < gens.count(); ++j) {
            const Eigen::VectorXcd b = bracket(rep, gens.theta[static_cast<std::size_t>(i)],
                                               gens.theta[static_cast<std::size_t>(j)]);
            CHECK(b.cwiseAbs().maxCoeff() <= 1e-10);
        }
}

TEST_CASE("the fiberization isometry preserves norms and intertwines") {
    auto G = make_abelian({8});
    SplitMix64 rng(113);
    const UnitaryRep rep = instances::random_rep(G, 4, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    const double wd = rep.dual.weight();
    for (int t = 0; t < 5; ++t) {
        const Eigen::VectorXcd phi = gvec(4, rng);
        const Eigen::MatrixXcd T = isometry_T(rep, gens, phi);
        CHECK(std::abs(T.squaredNorm() * wd - phi.squaredNorm()) <=
              1e-10 * std::max(1.0, phi.squaredNorm()));
        for (int x = 0; x < G->order(); ++x) {
            const Eigen::MatrixXcd Tx = isometry_T(rep, gens, rep.matrix(x) * phi);
            for (int a = 0; a < rep.order(); ++a) {
                const Eigen::RowVectorXcd want = rep.dual.chi(a, x) * T.row(a);
                CHECK((Tx.row(a) - want).cwiseAbs().maxCoeff() <= 1e-10);
            }
        }
    }
}

TEST_CASE("projection-valued measure of an invariant subspace") {
    auto G = make_abelian({6});
    SplitMix64 rng(127);
    const UnitaryRep rep = instances::random_rep(G, 5, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    const std::vector<Eigen::VectorXcd> fam = {gvec(5, rng),
                                               gvec(5, rng)};
    const RangeFunction J = rep_range_function(rep, gens, fam);

    std::vector<int> full(static_cast<std::size_t>(rep.order()));
    for (int a = 0; a < rep.order(); ++a) full[static_cast<std::size_t>(a)] = a;
    const Eigen::MatrixXcd Pfull = pv_measure(rep, gens, J, full);

    // additivity over a disjoint split
    std::vector<int> lo(full.begin(), full.begin() + 3);
    std::vector<int> hi(full.begin() + 3, full.end());
    const Eigen::MatrixXcd Plo = pv_measure(rep, gens, J, lo);
    const Eigen::MatrixXcd Phi = pv_measure(rep, gens, J, hi);
    CHECK((Plo + Phi - Pfull).cwiseAbs().maxCoeff() <= 1e-10);

    // projections: idempotent, self-adjoint, dominated by P(full)
    for (const auto* P : {&Plo, &Phi, &Pfull}) {
        CHECK(((*P) * (*P) - (*P)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(((*P) - P->adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
    }

    // the action diagonalizes over the measure: pi(x) P({a}) = chi_a(x) P({a})
    for (int x = 0; x < G->order(); ++x) {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(5, 5);
        for (int a = 0; a < rep.order(); ++a) {
            const Eigen::MatrixXcd Pa = pv_measure(rep, gens, J, {a});
            sum += rep.dual.chi(a, x) * Pa;
        }
        // on the invariant subspace, pi(x) acts as the character sum
        CHECK((rep.matrix(x) * Pfull - sum).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("orbit frame and Riesz bounds agree across routes") {
    auto G = make_abelian({3, 3});
    SplitMix64 rng(131);
    const UnitaryRep rep = instances::random_rep(G, 6, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    const std::vector<Eigen::VectorXcd> fam = {gvec(6, rng)};
    const FrameReport fr = rep_frame_check(rep, gens, fam);
    REQUIRE_FALSE(fr.degenerate);
    CHECK(rel_gap(fr.A_direct, fr.A_fiber) <= 1e-8);
    CHECK(rel_gap(fr.B_direct, fr.B_fiber) <= 1e-8);
    const FrameReport rr = rep_riesz_check(rep, gens, fam);
    CHECK(rel_gap(rr.A_direct, rr.A_fiber) <= 1e-8);
    CHECK(rel_gap(rr.B_direct, rr.B_fiber) <= 1e-8);
}

TEST_CASE("orthonormality of an orbit is visible in the bracket") {
    // the regular action of Z4: the orbit of a point mass is the standard basis
    auto G = make_abelian({4});
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(4, 4);
    for (int r = 0; r < 4; ++r) shift((r + 1) % 4, r) = 1.0;
    const UnitaryRep rep = make_rep_from_generators(G, {shift});
    const GeneratorFamily gens = orthogonal_generators(rep);
    const Eigen::VectorXcd e0 = Eigen::VectorXcd::Unit(4, 0);
    const FrameReport r = rep_frame_check(rep, gens, {e0});
    CHECK(r.is_orthonormal);
    const Eigen::VectorXcd b = bracket(rep, e0, e0);
    for (int a = 0; a < 4; ++a) CHECK(std::abs(b[a] - cxd(1, 0)) <= 1e-12);
    // scaling destroys orthonormality but keeps the frame property
    const FrameReport r2 = rep_frame_check(rep, gens, {2.0 * e0});
    CHECK_FALSE(r2.is_orthonormal);
    CHECK(r2.is_frame_for_span);
}

TEST_CASE("spectral calculus of a finite abelian action is exact") {
    auto G = make_abelian({2, 4});
    SplitMix64 rng(149);
    const UnitaryRep rep = instances::random_rep(G, 6, rng);
    const int n = rep.order();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(6, 6);
    for (int a = 0; a < n; ++a) {
        const Eigen::MatrixXcd& Pa = rep.projection(a);
        sum += Pa;
        // projectors: idempotent, self-adjoint, mutually orthogonal
        CHECK((Pa * Pa - Pa).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((Pa - Pa.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
        for (int b = a + 1; b < n; ++b)
            CHECK((Pa * rep.projection(b)).cwiseAbs().maxCoeff() <= 1e-10);
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-10);
    // reconstruction: pi(x) = sum_a chi_a(x) P_a
    for (int x = 0; x < G->order(); ++x) {
        Eigen::MatrixXcd rec = Eigen::MatrixXcd::Zero(6, 6);
        for (int a = 0; a < n; ++a) rec += rep.dual.chi(a, x) * rep.projection(a);
        CHECK((rec - rep.matrix(x)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("swap action: half-sum projector from the spectral measure") {
    auto G = make_abelian({2});
    Eigen::MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    const UnitaryRep rep = make_rep_from_generators(G, {swap});
    const GeneratorFamily gens = orthogonal_generators(rep);
    const std::vector<Eigen::VectorXcd> full = {Eigen::VectorXcd::Unit(2, 0),
                                                Eigen::VectorXcd::Unit(2, 1)};
    const RangeFunction J = rep_range_function(rep, gens, full);
    const Eigen::MatrixXcd P0 = pv_measure(rep, gens, J, {0});
    const Eigen::MatrixXcd half = (Eigen::MatrixXcd::Identity(2, 2) + swap) / 2.0;
    CHECK((P0 - half).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("fiber dimensions count the supported generators") {
    auto G = make_abelian({6});
    SplitMix64 rng(151);
    const UnitaryRep rep = instances::random_rep(G, 5, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    const RangeFunction J0 = rep_range_function(rep, gens, gens.theta);
    for (int a = 0; a < rep.order(); ++a) {
        int expected = 0;
        for (int i = 0; i < gens.count(); ++i)
            if (gens.supported(i, a)) ++expected;
        CHECK(J0.dim[static_cast<std::size_t>(a)] == expected);
    }
}

TEST_CASE("trivial action embeds as a two-dimensional invariant space") {
    auto G = make_abelian({2});
    const UnitaryRep rep =
        make_rep_from_generators(G, {Eigen::MatrixXcd::Identity(2, 2)});
    const GeneratorFamily gens = orthogonal_generators(rep);
    REQUIRE(gens.count() == 2); // two cyclic pieces, ambient becomes Z2 x Z2
    const TranslationEmbedding emb = embed_as_translation(rep, gens);
    CHECK(emb.ctx->G->order() == 4);
    CHECK(emb.intertwine_residual <= 1e-9);
    CHECK(emb.image_translation_invariant);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(emb.isometry);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-10 * svd.singularValues()[0]) ++rank;
    CHECK(rank == 2);
}

TEST_CASE("translation embedding is faithful") {
    auto G = make_abelian({4});
    SplitMix64 rng(137);
    const UnitaryRep rep = instances::random_rep(G, 3, rng);
    const GeneratorFamily gens = orthogonal_generators(rep);
    const TranslationEmbedding emb = embed_as_translation(rep, gens);
    CHECK(emb.intertwine_residual <= 1e-9);
    CHECK(emb.image_translation_invariant);
    // the embedding preserves inner products
    const double w = emb.ctx->G->weight();
    const Eigen::MatrixXcd gram = emb.isometry.adjoint() * emb.isometry * w;
    CHECK((gram - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("broken generator relations are refused") {
    auto G = make_abelian({2, 2});
    Eigen::MatrixXcd swap(2, 2), phase(2, 2);
    swap << 0, 1, 1, 0;
    phase << 1, 0, 0, cxd(0, 1);
    // these two images do not commute, so they cannot represent Z2 x Z2
    CHECK_THROWS_AS(make_rep_from_generators(G, {swap, phase}), ContractError);
}
