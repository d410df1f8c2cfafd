// Compares hand-checkable values against a frozen oracle file that was
// produced by an independent dense-linear-algebra script (committed next
// to it). Everything here must match to 1e-12.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>

#include "zakfiber/frames.hpp"
#include "zakfiber/harmonic.hpp"
#include "zakfiber/io.hpp"
#include "zakfiber/rep.hpp"
#include "zakfiber/zak.hpp"

using namespace zakfiber;
using nlohmann::json;

#ifndef ZAKFIBER_MICROCASE_FILE
#error "ZAKFIBER_MICROCASE_FILE must point at the frozen oracle JSON"
#endif

namespace {

const json& oracle() {
    static const json j = json::parse(io::read_text_file(ZAKFIBER_MICROCASE_FILE));
    return j;
}

cxd as_complex(const json& v) { return cxd(v.at(0).get<double>(), v.at(1).get<double>()); }

constexpr double kTol = 1e-12;

GroupFunction delta(const GroupPtr& G, int g) {
    GroupFunction f{G, Eigen::VectorXcd::Zero(G->order())};
    f.values[g] = 1.0;
    return f;
}

} // namespace

TEST_CASE("integer group facts") {
    CHECK(oracle().at("z6_add_4_5").get<int>() ==
          make_abelian({6})->op(4, 5));
    auto D4 = make_dihedral(4);
    CHECK(oracle().at("dihedral4_srs_index").get<int>() == D4->op(D4->op(4, 1), 4));

    auto F21 = make_semidirect_axb(7, 3);
    std::vector<int> mults;
    for (int k = 0; k < 3; ++k) {
        const int a = F21->power(7, k);
        mults.push_back(F21->op(F21->op(a, 1), F21->inverse(a)));
    }
    std::sort(mults.begin(), mults.end());
    CHECK(json(mults) == oracle().at("axb_7_3_multipliers"));

    auto H2 = make_heisenberg(2);
    std::vector<int> profile = {0, 0, 0};
    for (int x = 0; x < H2->order(); ++x) {
        const int o = H2->element_order(x);
        profile[static_cast<std::size_t>(o == 1 ? 0 : (o == 2 ? 1 : 2))]++;
    }
    CHECK(json(profile) == oracle().at("heisenberg2_order_profile"));
}

TEST_CASE("annihilator membership") {
    auto G = make_abelian({4});
    const Annihilator ann = annihilator(characters(G), subgroup_generate(G, {2}));
    CHECK(json(ann.members) == oracle().at("annihilator_z4_h02"));
}

TEST_CASE("small Fourier transforms") {
    auto G = make_abelian({2});
    const DualGroup D = characters(G);
    const Eigen::VectorXcd d0 = fourier(D, delta(G, 0).values);
    const json& ed = oracle().at("fourier_z2_delta0");
    for (int a = 0; a < 2; ++a) CHECK(std::abs(d0[a] - as_complex(ed.at(a))) <= kTol);

    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(2);
    const Eigen::VectorXcd oh = fourier(D, ones);
    const json& eo = oracle().at("fourier_z2_ones");
    for (int a = 0; a < 2; ++a) CHECK(std::abs(oh[a] - as_complex(eo.at(a))) <= kTol);
}

TEST_CASE("transform values of a point mass") {
    auto G = make_abelian({4});
    auto ctx = make_pair_context(G, subgroup_generate(G, {2}));
    const GroupFunction f = delta(G, 0);

    const ZakArray Z = zak(ctx, f);
    const json& ez = oracle().at("zak_z4_h02_delta0");
    REQUIRE(Z.values.rows() == 2);
    REQUIRE(Z.values.cols() == 2);
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c)
            CHECK(std::abs(Z.values(a, c) - as_complex(ez.at(a).at(c))) <= kTol);

    const FiberArray F = fiberize(ctx, f);
    const json& ef = oracle().at("fiber_z4_h02_delta0");
    REQUIRE(F.values.rows() == 2);
    REQUIRE(F.values.cols() == 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(std::abs(F.values(r, c) - as_complex(ef.at(r).at(c))) <= kTol);
}

TEST_CASE("frame and Riesz verdicts of the point-mass system") {
    auto G = make_abelian({4});
    auto ctx = make_pair_context(G, subgroup_generate(G, {2}));
    const GroupFunction f = delta(G, 0);

    const json& er = oracle().at("frame_z4_h02_delta0");
    const FrameReport fr = translate_frame_report(ctx, {f});
    CHECK(std::abs(fr.A_direct - er.at("A").get<double>()) <= kTol);
    CHECK(std::abs(fr.B_direct - er.at("B").get<double>()) <= kTol);
    CHECK(std::abs(fr.A_fiber - er.at("A").get<double>()) <= kTol);
    CHECK(std::abs(fr.B_fiber - er.at("B").get<double>()) <= kTol);
    CHECK(fr.span_dim == er.at("span_dim").get<int>());

    const json& rr = oracle().at("riesz_z4_h02_delta0");
    const FrameReport rz = riesz_check(ctx, {f});
    CHECK(std::abs(rz.A_direct - rr.at("A").get<double>()) <= kTol);
    CHECK(std::abs(rz.B_direct - rr.at("B").get<double>()) <= kTol);
    CHECK(rz.is_riesz_sequence == rr.at("riesz").get<bool>());

    auto G2 = make_abelian({2});
    auto ctx2 = make_pair_context(G2, subgroup_generate(G2, {1}));
    const json& eg = oracle().at("gabor_z2_full_delta0");
    const GaborCheck gc = gabor_frame_check(ctx2, {delta(G2, 0)});
    CHECK(std::abs(gc.report.A_direct - eg.at("A").get<double>()) <= kTol);
    CHECK(std::abs(gc.report.B_direct - eg.at("B").get<double>()) <= kTol);
}

TEST_CASE("coordinate-swap action oracle values") {
    auto G = make_abelian({2});
    Eigen::MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    const UnitaryRep rep = make_rep_from_generators(G, {swap});

    const json& eb = oracle().at("swap_bracket_basis");
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            const Eigen::VectorXcd b =
                bracket(rep, Eigen::VectorXcd::Unit(2, s), Eigen::VectorXcd::Unit(2, t));
            for (int a = 0; a < 2; ++a)
                CHECK(std::abs(b[a] - as_complex(eb.at(s).at(t).at(a))) <= kTol);
        }

    const GeneratorFamily gens = orthogonal_generators(rep);
    const Eigen::MatrixXcd T = isometry_T(rep, gens, Eigen::VectorXcd::Unit(2, 0));
    const json& ei = oracle().at("swap_isometry_e1");
    REQUIRE(T.rows() == 2);
    REQUIRE(T.cols() == 1);
    for (int a = 0; a < 2; ++a) CHECK(std::abs(T(a, 0) - as_complex(ei.at(a))) <= kTol);

    const json& es = oracle().at("swap_orbit_sum_bounds");
    Eigen::VectorXcd v(2);
    v << 1.0, 1.0; // e1 + e2
    const FrameReport r = rep_frame_check(rep, gens, {v});
    CHECK(std::abs(r.A_direct - es.at("A").get<double>()) <= kTol);
    CHECK(std::abs(r.B_direct - es.at("B").get<double>()) <= kTol);
    CHECK(std::abs(r.A_fiber - es.at("A").get<double>()) <= kTol);
    CHECK(std::abs(r.B_fiber - es.at("B").get<double>()) <= kTol);
}
