#include <doctest.h>

#include "zakfiber/frames.hpp"
#include "zakfiber/instances.hpp"
#include "zakfiber/invariant.hpp"

using namespace zakfiber;

namespace {
GroupFunction delta(const GroupPtr& G, int g) {
    GroupFunction f{G, Eigen::VectorXcd::Zero(G->order())};
    f.values[g] = 1.0;
    return f;
}
} // namespace

TEST_CASE("range function of a translation-generated family") {
    auto G = make_abelian({4});
    Subgroup H = subgroup_generate(G, {2});
    auto ctx = make_pair_context(G, H);
    const std::vector<GroupFunction> fam = {delta(G, 0)};
    std::vector<ZakArray> zaks;
    for (const auto& f : fam) zaks.push_back(zak(ctx, f));
    RangeFunction J = range_function(zaks);
    CHECK(J.fiber_count == 2);
    CHECK(J.ambient_dim == 2);
    CHECK(J.dim == std::vector<int>{1, 1});
    CHECK(J.total_dim() == 2);

    // the dimension identity: sum of fiber dimensions == rank of the
    // full translate system
    const Eigen::MatrixXcd U = translate_system_matrix(ctx, fam);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(U);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-10 * svd.singularValues()[0]) ++rank;
    CHECK(rank == J.total_dim());
}

TEST_CASE("projection onto an invariant space") {
    auto G = make_dihedral(4);
    Subgroup H = subgroup_generate(G, {1});
    auto ctx = make_pair_context(G, H);
    SplitMix64 rng(53);
    // one generator: the invariant span is a proper subspace, so a generic
    // function must project strictly inside it
    const std::vector<GroupFunction> fam = {instances::random_function(G, rng)};
    std::vector<ZakArray> zaks;
    for (const auto& f : fam) zaks.push_back(zak(ctx, f));
    const RangeFunction J = range_function(zaks);

    // members and their subgroup translates are fixed points
    for (const auto& f : fam) {
        CHECK(ti_membership(f, J));
        for (int h : H.members) CHECK(ti_membership(translate(f, h), J));
    }

    // the projection is idempotent and orthogonal
    const GroupFunction g = instances::random_function(G, rng);
    const GroupFunction p = ti_projection(g, J);
    const GroupFunction pp = ti_projection(p, J);
    CHECK((pp.values - p.values).cwiseAbs().maxCoeff() <= 1e-10);
    GroupFunction resid{G, g.values - p.values};
    for (const auto& f : fam)
        for (int h : H.members)
            CHECK(std::abs(translate(f, h).inner(resid)) <= 1e-10);

    // generic functions are not members
    CHECK_FALSE(ti_membership(g, J));
}

TEST_CASE("projector does not depend on the coset section") {
    auto G = make_abelian({6, 2});
    Subgroup H = subgroup_generate(G, {2});
    SplitMix64 rng(59);
    auto c1 = make_pair_context(G, H);
    auto c2 = make_pair_context(G, H, TransversalPolicy::random, 99);
    const GroupFunction f = instances::random_function(G, rng);
    const GroupFunction g = instances::random_function(G, rng);
    const RangeFunction J1 = range_function({zak(c1, f)});
    const RangeFunction J2 = range_function({zak(c2, f)});
    const GroupFunction p1 = ti_projection(g, J1);
    const GroupFunction p2 = ti_projection(g, J2);
    CHECK((p1.values - p2.values).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("fiber-side range function matches the Zak-side one") {
    auto G = make_abelian({8});
    Subgroup H = subgroup_generate(G, {2});
    auto ctx = make_pair_context(G, H);
    REQUIRE(ctx->fiber_side);
    SplitMix64 rng(61);
    std::vector<ZakArray> zaks;
    std::vector<FiberArray> fibers;
    for (int t = 0; t < 2; ++t) {
        const GroupFunction f = instances::random_function(G, rng);
        zaks.push_back(zak(ctx, f));
        fibers.push_back(fiberize(ctx, f));
    }
    const RangeFunction J = range_function(zaks);
    const RangeFunction Jf = fiber_range_function(fibers);
    REQUIRE(J.fiber_count == Jf.fiber_count);
    CHECK(J.dim == Jf.dim);
}

TEST_CASE("translation-modulation support and membership") {
    auto G = make_abelian({6});
    Subgroup H = subgroup_generate(G, {2});
    auto ctx = make_pair_context(G, H);
    const GroupFunction f = delta(G, 1);
    const TMISupport E = tmi_support({zak(ctx, f)});
    // a point mass occupies one coset column across all rows
    CHECK(E.count() == ctx->dual_order());

    // translates and modulations stay inside the support
    for (int h : H.members) CHECK(tmi_membership(translate(f, h), E));
    for (int kappa = 0; kappa < ctx->Gd.order(); ++kappa)
        CHECK(tmi_membership(modulate(ctx->Gd, f, kappa), E));

    // a point mass in a different coset does not
    CHECK_FALSE(tmi_membership(delta(G, 0), E));
}
