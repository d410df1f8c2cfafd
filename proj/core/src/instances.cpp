#include "zakfiber/instances.hpp"

#include <cmath>
#include <numbers>

namespace zakfiber::instances {

namespace {

std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    // A distinct, well-mixed seed per instance so catalogs can be sliced
    // without replaying the whole stream.
    return seed ^ ((index + 1) * 0x9e3779b97f4a7c15ULL);
}

PairSpec abelian_pair(std::string name, const std::vector<int>& invariants, double wG,
                      const std::vector<std::vector<int>>& gen_coords, double wH) {
    PairSpec s;
    s.name = std::move(name);
    s.G = make_abelian(invariants, wG);
    for (const auto& t : gen_coords) s.h_gens.push_back(s.G->element_from_coords(t));
    s.h_weight = wH;
    return s;
}

PairSpec plain_pair(std::string name, GroupPtr G, std::vector<int> gens, double wH) {
    return PairSpec{std::move(name), std::move(G), std::move(gens), wH};
}

} // namespace

std::vector<PairSpec> zak_pairs() {
    std::vector<PairSpec> out;
    // Cyclic groups with divisor subgroups (plus full and trivial).
    out.push_back(abelian_pair("Z4/<2>", {4}, 1.0, {{2}}, 1.0));
    out.push_back(abelian_pair("Z4/full", {4}, 1.0, {{1}}, 1.0));
    out.push_back(abelian_pair("Z4/trivial", {4}, 1.0, {{0}}, 1.0));
    out.push_back(abelian_pair("Z6/<2>", {6}, 1.0, {{2}}, 1.0));
    out.push_back(abelian_pair("Z6/<3>", {6}, 1.0, {{3}}, 1.0));
    out.push_back(abelian_pair("Z6/full", {6}, 1.0, {{1}}, 1.0));
    out.push_back(abelian_pair("Z6/trivial", {6}, 1.0, {{0}}, 1.0));
    out.push_back(abelian_pair("Z8/<2>", {8}, 1.0, {{2}}, 1.0));
    out.push_back(abelian_pair("Z8/<4>", {8}, 1.0, {{4}}, 1.0));
    out.push_back(abelian_pair("Z9/<3>", {9}, 1.0, {{3}}, 1.0));
    out.push_back(abelian_pair("Z12/<2>", {12}, 1.0, {{2}}, 1.0));
    out.push_back(abelian_pair("Z12/<3>", {12}, 1.0, {{3}}, 1.0));
    out.push_back(abelian_pair("Z12/<4>", {12}, 1.0, {{4}}, 1.0));
    out.push_back(abelian_pair("Z12/<6>", {12}, 1.0, {{6}}, 1.0));
    // Products, diagonals, and a Klein subgroup.
    out.push_back(abelian_pair("Z2xZ2/<e0>", {2, 2}, 1.0, {{1, 0}}, 1.0));
    out.push_back(abelian_pair("Z2xZ2/diag", {2, 2}, 1.0, {{1, 1}}, 1.0));
    out.push_back(abelian_pair("Z4xZ2/<e0>", {4, 2}, 1.0, {{1, 0}}, 1.0));
    out.push_back(abelian_pair("Z4xZ2/klein", {4, 2}, 1.0, {{2, 0}, {0, 1}}, 1.0));
    out.push_back(abelian_pair("Z4xZ2/<e1>", {4, 2}, 1.0, {{0, 1}}, 1.0));
    out.push_back(abelian_pair("Z4xZ2/<(2,1)>", {4, 2}, 1.0, {{2, 1}}, 1.0));
    out.push_back(abelian_pair("Z2xZ4(w)/<e1>", {2, 4}, 0.5, {{0, 1}}, 2.0));
    out.push_back(abelian_pair("Z6xZ3/<(2,1)>", {6, 3}, 1.0, {{2, 1}}, 1.0));
    out.push_back(abelian_pair("Z6xZ3/<e0>", {6, 3}, 1.0, {{1, 0}}, 1.0));
    out.push_back(abelian_pair("Z5/full", {5}, 1.0, {{1}}, 1.0));
    out.push_back(abelian_pair("Z16/<4>", {16}, 1.0, {{4}}, 1.0));
    out.push_back(abelian_pair("Z3xZ3/<e0>", {3, 3}, 1.0, {{1, 0}}, 1.0));
    out.push_back(abelian_pair("Z3xZ3/diag", {3, 3}, 1.0, {{1, 1}}, 1.0));
    out.push_back(abelian_pair("Z24/<4>", {24}, 1.0, {{4}}, 1.0));
    out.push_back(abelian_pair("Z24/<8>", {24}, 1.0, {{8}}, 1.0));
    out.push_back(abelian_pair("Z4(w3)/<2>", {4}, 3.0, {{2}}, 0.25));
    out.push_back(abelian_pair("Z36/<6>", {36}, 1.0, {{6}}, 1.0));
    out.push_back(abelian_pair("Z2^3/klein", {2, 2, 2}, 1.0, {{1, 1, 0}, {0, 1, 1}}, 1.0));
    // Dihedral groups: rotations r = 1, reflections start at n.
    out.push_back(plain_pair("D3/rot", make_dihedral(3), {1}, 1.0));
    out.push_back(plain_pair("D3/<s>", make_dihedral(3), {3}, 1.0));
    out.push_back(plain_pair("D3/trivial", make_dihedral(3), {0}, 1.0));
    out.push_back(plain_pair("D4/rot", make_dihedral(4), {1}, 1.0));
    out.push_back(plain_pair("D4/center", make_dihedral(4), {2}, 1.0));
    out.push_back(plain_pair("D4/<s>", make_dihedral(4), {4}, 1.0));
    out.push_back(plain_pair("D5/rot", make_dihedral(5), {1}, 1.0));
    out.push_back(plain_pair("D5/<s>", make_dihedral(5), {5}, 1.0));
    out.push_back(plain_pair("D6/rot", make_dihedral(6), {1}, 1.0));
    out.push_back(plain_pair("D6/<r2>", make_dihedral(6), {2}, 1.0));
    out.push_back(plain_pair("D6/<r3>", make_dihedral(6), {3}, 1.0));
    out.push_back(plain_pair("D6/<s>", make_dihedral(6), {6}, 1.0));
    // Heisenberg groups: element x*p^2 + y*p + z; center = <z>, and the
    // maximal abelian subgroup <y, z> of order p^2.
    out.push_back(plain_pair("Heis2/center", make_heisenberg(2), {1}, 1.0));
    out.push_back(plain_pair("Heis2/<y,z>", make_heisenberg(2), {2, 1}, 1.0));
    out.push_back(plain_pair("Heis3/center", make_heisenberg(3), {1}, 1.0));
    out.push_back(plain_pair("Heis3/<y,z>", make_heisenberg(3), {3, 1}, 1.0));
    // Order 21 = Z7 : Z3, both factors; order 6 = Z3 : Z2.
    out.push_back(plain_pair("F21/Z7", make_semidirect_axb(7, 3), {1}, 1.0));
    out.push_back(plain_pair("F21/Z3", make_semidirect_axb(7, 3), {7}, 1.0));
    out.push_back(plain_pair("S3/Z3", make_semidirect_axb(3, 2), {1}, 1.0));
    out.push_back(plain_pair("D4(w2)/rot", make_dihedral(4, 2.0), {1}, 0.5));
    return out;
}

PairCtxPtr context_of(const PairSpec& spec, TransversalPolicy policy, std::uint64_t seed) {
    Subgroup H = subgroup_generate(spec.G, spec.h_gens, spec.h_weight);
    return make_pair_context(spec.G, H, policy, seed);
}

GroupFunction random_function(const GroupPtr& G, SplitMix64& rng) {
    GroupFunction f;
    f.group = G;
    f.values.resize(G->order());
    for (int i = 0; i < G->order(); ++i) {
        const double re = rng.symmetric();
        const double im = rng.symmetric();
        f.values[i] = cxd(re, im);
    }
    return f;
}

std::vector<GroupFunction> random_family(const GroupPtr& G, int count, SplitMix64& rng) {
    std::vector<GroupFunction> fam;
    fam.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) fam.push_back(random_function(G, rng));
    return fam;
}

std::vector<FamilyInstance> frame_matrix(std::uint64_t seed) {
    const auto pairs = zak_pairs();
    std::vector<FamilyInstance> out;
    out.reserve(pairs.size() * 4);
    std::uint64_t idx = 0;
    for (const auto& p : pairs) {
        for (int T = 1; T <= 4; ++T, ++idx) {
            SplitMix64 rng(substream(seed, idx));
            const bool randomized = (idx % 3 == 2);
            FamilyInstance inst;
            inst.name = p.name + "/T" + std::to_string(T) + (randomized ? "/rand-sec" : "");
            inst.ctx = context_of(p, randomized ? TransversalPolicy::random
                                                : TransversalPolicy::minimal,
                                  rng.next());
            inst.family = random_family(p.G, T, rng);
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::vector<RieszInstance> riesz_matrix(std::uint64_t seed) {
    // Unit-weight subgroups only (the Riesz check requires the counting
    // measure on H). Independent generic instances first, then the
    // deliberately dependent block.
    std::vector<PairSpec> pairs;
    pairs.push_back(abelian_pair("Z4/<2>", {4}, 1.0, {{2}}, 1.0));
    pairs.push_back(abelian_pair("Z8/<2>", {8}, 1.0, {{2}}, 1.0));
    pairs.push_back(abelian_pair("Z8/<4>", {8}, 1.0, {{4}}, 1.0));
    pairs.push_back(abelian_pair("Z12/<3>", {12}, 1.0, {{3}}, 1.0));
    pairs.push_back(abelian_pair("Z12/<4>", {12}, 1.0, {{4}}, 1.0));
    pairs.push_back(abelian_pair("Z4xZ2/<e1>", {4, 2}, 1.0, {{0, 1}}, 1.0));
    pairs.push_back(abelian_pair("Z4xZ2/<e0>", {4, 2}, 1.0, {{1, 0}}, 1.0));
    pairs.push_back(abelian_pair("Z16/<4>", {16}, 1.0, {{4}}, 1.0));
    pairs.push_back(abelian_pair("Z6xZ3/<(2,1)>", {6, 3}, 1.0, {{2, 1}}, 1.0));
    pairs.push_back(abelian_pair("Z24/<8>", {24}, 1.0, {{8}}, 1.0));
    pairs.push_back(abelian_pair("Z3xZ3/<e0>", {3, 3}, 2.0, {{1, 0}}, 1.0));
    pairs.push_back(plain_pair("D4/rot", make_dihedral(4), {1}, 1.0));
    pairs.push_back(plain_pair("D6/<r2>", make_dihedral(6), {2}, 1.0));
    pairs.push_back(plain_pair("F21/Z7", make_semidirect_axb(7, 3), {1}, 1.0));
    pairs.push_back(plain_pair("Heis2/<y,z>", make_heisenberg(2), {2, 1}, 1.0));
    pairs.push_back(plain_pair("Heis3/center", make_heisenberg(3), {1}, 1.0));

    std::vector<RieszInstance> out;
    std::uint64_t idx = 0;

    // Generic (independent with overwhelming margin): T with T*|H| <= |G|.
    for (const auto& p : pairs) {
        for (int T = 1; T <= 2; ++T, ++idx) {
            SplitMix64 rng(substream(seed, idx));
            auto ctx = context_of(p);
            if (T * ctx->H.order() > p.G->order()) continue;
            RieszInstance ri;
            ri.fam.name = p.name + "/indep-T" + std::to_string(T);
            ri.fam.ctx = ctx;
            ri.fam.family = random_family(p.G, T, rng);
            ri.expect_dependent = false;
            out.push_back(std::move(ri));
        }
    }

    // Dependent constructions. Cycle through the pair list for variety.
    auto ctx_at = [&pairs](std::size_t i) { return context_of(pairs[i % pairs.size()]); };
    std::size_t pi = 0;

    for (int k = 0; k < 6; ++k, ++pi, ++idx) { // duplicate member
        SplitMix64 rng(substream(seed, idx));
        auto ctx = ctx_at(pi);
        GroupFunction f = random_function(ctx->G, rng);
        out.push_back({{"dep-duplicate/" + pairs[pi % pairs.size()].name, ctx, {f, f}}, true});
    }
    for (int k = 0; k < 6; ++k, ++pi, ++idx) { // member = translate of another
        SplitMix64 rng(substream(seed, idx));
        auto ctx = ctx_at(pi);
        GroupFunction f = random_function(ctx->G, rng);
        const int xi = ctx->H.members[static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(ctx->H.order())))];
        out.push_back(
            {{"dep-translate/" + pairs[pi % pairs.size()].name, ctx, {f, translate(f, xi)}},
             true});
    }
    for (int k = 0; k < 5; ++k, ++pi, ++idx) { // member in the span of translates
        SplitMix64 rng(substream(seed, idx));
        auto ctx = ctx_at(pi);
        GroupFunction f1 = random_function(ctx->G, rng);
        GroupFunction f2 = random_function(ctx->G, rng);
        const int xi1 = ctx->H.members[static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(ctx->H.order())))];
        const int xi2 = ctx->H.members[static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(ctx->H.order())))];
        GroupFunction f3{ctx->G, cxd(rng.symmetric(), rng.symmetric()) *
                                         translate(f1, xi1).values +
                                     cxd(rng.symmetric(), rng.symmetric()) *
                                         translate(f2, xi2).values};
        out.push_back(
            {{"dep-combination/" + pairs[pi % pairs.size()].name, ctx, {f1, f2, f3}}, true});
    }
    for (int k = 0; k < 4; ++k, ++pi, ++idx) { // pigeonhole: T |H| > |G|
        SplitMix64 rng(substream(seed, idx));
        auto ctx = ctx_at(pi);
        const int T = ctx->cosets() + 1;
        out.push_back({{"dep-overload/" + pairs[pi % pairs.size()].name, ctx,
                        random_family(ctx->G, T, rng)},
                       true});
    }
    for (int k = 0; k < 3; ++k, ++pi, ++idx) { // zero member
        SplitMix64 rng(substream(seed, idx));
        auto ctx = ctx_at(pi);
        GroupFunction f = random_function(ctx->G, rng);
        GroupFunction z{ctx->G, Eigen::VectorXcd::Zero(ctx->G->order())};
        out.push_back({{"dep-zero/" + pairs[pi % pairs.size()].name, ctx, {f, z}}, true});
    }

    return out;
}

std::vector<FamilyInstance> gabor_matrix(std::uint64_t seed) {
    const auto pairs = zak_pairs();
    std::vector<FamilyInstance> out;
    std::uint64_t idx = 0;
    for (const auto& p : pairs) {
        if (!p.G->has_invariants()) continue; // fiber side required
        for (int T = 1; T <= 2; ++T, ++idx) {
            SplitMix64 rng(substream(seed, idx));
            FamilyInstance inst;
            inst.name = p.name + "/gabor-T" + std::to_string(T);
            inst.ctx = context_of(p);
            inst.family = random_family(p.G, T, rng);
            out.push_back(std::move(inst));
        }
    }
    return out;
}

double gaussian(SplitMix64& rng) {
    const double u1 = (static_cast<double>(rng.next() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXcd random_unitary(int d, SplitMix64& rng) {
    Eigen::MatrixXcd A(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) A(r, c) = cxd(gaussian(rng), gaussian(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

UnitaryRep random_rep(const GroupPtr& G, int d, SplitMix64& rng) {
    const DualGroup D = characters(G);
    const Eigen::MatrixXcd Q = random_unitary(d, rng);
    std::vector<int> slot(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) {
        slot[static_cast<std::size_t>(t)] =
            static_cast<int>(rng.below(static_cast<std::uint64_t>(G->order())));
    }
    std::vector<Eigen::MatrixXcd> images;
    images.reserve(static_cast<std::size_t>(G->tuple_rank()));
    for (int j = 0; j < G->tuple_rank(); ++j) {
        const int ej = G->basis_element(j);
        Eigen::VectorXcd diag(d);
        for (int t = 0; t < d; ++t) diag[t] = D.chi(slot[static_cast<std::size_t>(t)], ej);
        images.push_back(Q * diag.asDiagonal() * Q.adjoint());
    }
    return make_rep_from_generators(G, images);
}

std::vector<RepInstance> rep_matrix(std::uint64_t seed) {
    static const std::vector<std::vector<int>> kGroups = {
        {2},  {3},    {4},  {2, 2}, {5},  {6},    {7},      {8},  {2, 4},
        {9},  {3, 3}, {10}, {11},   {12}, {2, 6}, {2, 2, 2}, {13}, {14},
        {15}, {16},   {2, 8}, {4, 4}, {18}, {20},  {24},     {2, 12}};
    static const std::vector<int> kDims = {1, 2, 3, 4, 5, 6, 8, 10, 12, 16};

    std::vector<RepInstance> out;
    out.reserve(kGroups.size() * 4);
    std::uint64_t idx = 0;
    for (std::size_t gi = 0; gi < kGroups.size(); ++gi) {
        GroupPtr G = make_abelian(kGroups[gi], 1.0);
        for (int r = 0; r < 4; ++r, ++idx) {
            SplitMix64 rng(substream(seed, idx));
            const int d = kDims[(gi * 4 + static_cast<std::size_t>(r)) % kDims.size()];
            RepInstance inst;
            inst.name = G->label() + "/d" + std::to_string(d) + "/#" + std::to_string(r);
            inst.rep = random_rep(G, d, rng);
            const int m = 1 + static_cast<int>(idx % 3);
            for (int t = 0; t < m; ++t) {
                Eigen::VectorXcd v(d);
                for (int i = 0; i < d; ++i) v[i] = cxd(gaussian(rng), gaussian(rng));
                inst.vectors.push_back(std::move(v));
            }
            out.push_back(std::move(inst));
        }
    }
    return out;
}

} // namespace zakfiber::instances
