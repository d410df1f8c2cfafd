#include <doctest.h>

#include "zakfiber/frames.hpp"
#include "zakfiber/instances.hpp"

using namespace zakfiber;

namespace {
GroupFunction delta(const GroupPtr& G, int g) {
    GroupFunction f{G, Eigen::VectorXcd::Zero(G->order())};
    f.values[g] = 1.0;
    return f;
}
double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}
} // namespace

TEST_CASE("point-mass translates form a Parseval frame for their span") {
    auto G = make_abelian({4});
    auto ctx = make_pair_context(G, subgroup_generate(G, {2}));
    const FrameReport r = translate_frame_report(ctx, {delta(G, 0)});
    CHECK(r.A_direct == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.B_direct == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.A_fiber == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.B_fiber == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.span_dim == 2);
    CHECK(r.is_frame_for_span);
    CHECK(r.is_parseval);
    CHECK(r.is_orthonormal);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("fiber bounds agree with dense bounds on a nonabelian pair") {
    auto G = make_dihedral(3);
    auto ctx = make_pair_context(G, subgroup_generate(G, {1}));
    SplitMix64 rng(67);
    for (int t = 0; t < 5; ++t) {
        const std::vector<GroupFunction> fam = {instances::random_function(G, rng),
                                                instances::random_function(G, rng)};
        const FrameReport r = translate_frame_report(ctx, fam);
        REQUIRE_FALSE(r.degenerate);
        CHECK(rel_gap(r.A_direct, r.A_fiber) <= 1e-8);
        CHECK(rel_gap(r.B_direct, r.B_fiber) <= 1e-8);
        CHECK(r.A_direct <= r.B_direct + 1e-12);
    }
}

TEST_CASE("per-fiber table is consistent with the summary") {
    auto G = make_abelian({6, 2});
    auto ctx = make_pair_context(G, subgroup_generate(G, {2}));
    SplitMix64 rng(71);
    const std::vector<GroupFunction> fam = {instances::random_function(G, rng)};
    const FrameReport r = translate_frame_report(ctx, fam);
    int dim_sum = 0;
    double lo = 1e300, hi = 0.0;
    for (const auto& row : r.per_fiber) {
        dim_sum += row.dim;
        if (row.dim > 0) {
            lo = std::min(lo, row.lower);
            hi = std::max(hi, row.upper);
            CHECK(row.lower <= row.upper + 1e-12);
        }
    }
    CHECK(dim_sum == r.span_dim);
    CHECK(lo == doctest::Approx(r.A_fiber).epsilon(1e-12));
    CHECK(hi == doctest::Approx(r.B_fiber).epsilon(1e-12));
}

TEST_CASE("Riesz analysis separates independent from dependent systems") {
    auto G = make_abelian({8});
    auto ctx = make_pair_context(G, subgroup_generate(G, {2}));
    SplitMix64 rng(73);
    const GroupFunction f = instances::random_function(G, rng);
    const GroupFunction g = instances::random_function(G, rng);

    const FrameReport indep = riesz_check(ctx, {f, g});
    CHECK(indep.is_riesz_sequence);
    CHECK(rel_gap(indep.A_direct, indep.A_fiber) <= 1e-8);
    CHECK(rel_gap(indep.B_direct, indep.B_fiber) <= 1e-8);

    const FrameReport dep = riesz_check(ctx, {f, f});
    CHECK_FALSE(dep.is_riesz_sequence);
    CHECK(dep.A_direct <= 1e-10 * std::max(1.0, dep.B_direct));

    // a translate of f is inside the system's own span
    const FrameReport dep2 = riesz_check(ctx, {f, translate(f, 2)});
    CHECK_FALSE(dep2.is_riesz_sequence);
}

TEST_CASE("Riesz analysis requires the counting measure on the subgroup") {
    auto G = make_abelian({8});
    Subgroup H = subgroup_generate(G, {2}, 0.5);
    auto ctx = make_pair_context(G, H);
    SplitMix64 rng(79);
    CHECK_THROWS_AS(riesz_check(ctx, {instances::random_function(G, rng)}), ContractError);
}

TEST_CASE("coefficient-space inequality holds with the certified bounds") {
    auto G = make_abelian({12});
    auto ctx = make_pair_context(G, subgroup_generate(G, {3}));
    SplitMix64 rng(83);
    const std::vector<GroupFunction> fam = {instances::random_function(G, rng),
                                            instances::random_function(G, rng)};
    std::vector<Eigen::VectorXcd> coeffs;
    for (std::size_t t = 0; t < fam.size(); ++t) {
        Eigen::VectorXcd c(ctx->dual_order());
        for (int a = 0; a < ctx->dual_order(); ++a)
            c[a] = cxd(rng.symmetric(), rng.symmetric());
        coeffs.push_back(c);
    }
    CHECK(mixed_riesz_property_check(ctx, fam, coeffs) <= 1e-9);
}

TEST_CASE("translation-modulation system at critical sampling") {
    auto G = make_abelian({6});
    auto ctx = make_pair_context(G, subgroup_generate(G, {3}));
    SplitMix64 rng(89);
    for (int t = 0; t < 5; ++t) {
        const std::vector<GroupFunction> fam = {instances::random_function(G, rng)};
        const GaborCheck gc = gabor_frame_check(ctx, fam);
        REQUIRE_FALSE(gc.report.degenerate);
        CHECK(rel_gap(gc.report.A_direct, gc.report.A_fiber) <= 1e-8);
        CHECK(rel_gap(gc.report.B_direct, gc.report.B_fiber) <= 1e-8);
        CHECK(gc.support.count() > 0);
    }
    // the full-subgroup point-mass system is an orthonormal basis
    auto G2 = make_abelian({2});
    auto ctx2 = make_pair_context(G2, subgroup_generate(G2, {1}));
    const GaborCheck basis = gabor_frame_check(ctx2, {delta(G2, 0)});
    CHECK(basis.report.A_direct == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(basis.report.B_direct == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("translation-modulation analysis needs the fiber side") {
    auto G = make_dihedral(3);
    auto ctx = make_pair_context(G, subgroup_generate(G, {1}));
    SplitMix64 rng(97);
    CHECK_THROWS_AS(gabor_frame_check(ctx, {instances::random_function(G, rng)}),
                    ContractError);
}

TEST_CASE("frame bounds do not depend on the coset section") {
    auto G = make_abelian({4});
    Subgroup H = subgroup_generate(G, {2});
    SplitMix64 rng(103);
    const std::vector<GroupFunction> fam = {instances::random_function(G, rng)};
    const FrameReport a =
        translate_frame_report(make_pair_context(G, H), fam);
    const FrameReport b = translate_frame_report(
        make_pair_context(G, H, TransversalPolicy::random, 7), fam);
    CHECK(a.A_direct == doctest::Approx(b.A_direct).epsilon(1e-12));
    CHECK(a.B_direct == doctest::Approx(b.B_direct).epsilon(1e-12));
    CHECK(a.A_fiber == doctest::Approx(b.A_fiber).epsilon(1e-12));
    CHECK(a.B_fiber == doctest::Approx(b.B_fiber).epsilon(1e-12));
    CHECK(a.span_dim == b.span_dim);
}

TEST_CASE("translate system matrix has the expected shape") {
    auto G = make_dihedral(4);
    auto ctx = make_pair_context(G, subgroup_generate(G, {1}));
    SplitMix64 rng(101);
    const std::vector<GroupFunction> fam = {instances::random_function(G, rng),
                                            instances::random_function(G, rng),
                                            instances::random_function(G, rng)};
    const Eigen::MatrixXcd U = translate_system_matrix(ctx, fam);
    CHECK(U.rows() == G->order());
    CHECK(U.cols() == static_cast<int>(fam.size()) * 4);
}
