#include <doctest.h>

#include <complex>

#include "zakfiber/harmonic.hpp"
#include "zakfiber/rng.hpp"

using namespace zakfiber;

namespace {
GroupFunction random_fn(const GroupPtr& G, SplitMix64& rng) {
    GroupFunction f{G, Eigen::VectorXcd(G->order())};
    for (int i = 0; i < G->order(); ++i)
        f.values[i] = cxd(rng.symmetric(), rng.symmetric());
    return f;
}
} // namespace

TEST_CASE("character table is an orthogonal basis") {
    auto G = make_abelian({4, 3});
    DualGroup D = characters(G);
    CHECK(D.order() == 12);
    for (int a = 0; a < D.order(); ++a) {
        for (int b = 0; b < D.order(); ++b) {
            cxd s = 0;
            for (int x = 0; x < G->order(); ++x) s += D.chi(a, x) * std::conj(D.chi(b, x));
            CHECK(std::abs(s - cxd(a == b ? 12.0 : 0.0, 0.0)) <= 1e-10);
        }
    }
    // multiplicativity in both slots
    for (int a = 0; a < D.order(); ++a)
        for (int x = 0; x < G->order(); ++x)
            for (int y = 0; y < G->order(); ++y)
                CHECK(std::abs(D.chi(a, G->op(x, y)) - D.chi(a, x) * D.chi(a, y)) <= 1e-12);
}

TEST_CASE("dual group structure") {
    auto G = make_abelian({6});
    DualGroup D = characters(G);
    for (int a = 0; a < D.order(); ++a) {
        for (int b = 0; b < D.order(); ++b) {
            const int c = D.add(a, b);
            for (int x = 0; x < G->order(); ++x)
                CHECK(std::abs(D.chi(c, x) - D.chi(a, x) * D.chi(b, x)) <= 1e-12);
        }
        const int na = D.negate(a);
        for (int x = 0; x < G->order(); ++x)
            CHECK(std::abs(D.chi(na, x) - std::conj(D.chi(a, x))) <= 1e-12);
    }
}

TEST_CASE("characters of a nonabelian group are refused") {
    auto D3 = make_dihedral(3);
    CHECK_THROWS_AS(characters(D3), ContractError);
}

TEST_CASE("Fourier inversion and Parseval") {
    auto G = make_abelian({8}, 0.5); // non-unit Haar weight
    DualGroup D = characters(G);
    SplitMix64 rng(3);
    const GroupFunction f = random_fn(G, rng);
    const Eigen::VectorXcd fh = fourier(D, f.values);
    const Eigen::VectorXcd back = fourier_inverse(D, fh);
    CHECK((back - f.values).cwiseAbs().maxCoeff() <= 1e-12);

    const double lhs = f.norm_sq();
    const double rhs = fh.squaredNorm() * D.weight();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs));
    CHECK(parseval_check(D, fh) <= 1e-12);
}

TEST_CASE("translation and modulation") {
    auto G = make_abelian({12});
    DualGroup D = characters(G);
    SplitMix64 rng(5);
    const GroupFunction f = random_fn(G, rng);

    // L_z L_y = L_{zy}
    const GroupFunction lhs = translate(translate(f, 5), 9);
    const GroupFunction rhs = translate(f, G->op(9, 5));
    CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() <= 1e-15);

    // modulation by the trivial character is the identity
    const GroupFunction m0 = modulate(D, f, 0);
    CHECK((m0.values - f.values).cwiseAbs().maxCoeff() <= 1e-15);

    // modulation shifts the Fourier transform
    const int kappa = 7;
    const Eigen::VectorXcd mh = fourier(D, modulate(D, f, kappa).values);
    const Eigen::VectorXcd fh = fourier(D, f.values);
    for (int a = 0; a < D.order(); ++a) {
        const int shifted = D.add(a, D.negate(kappa));
        CHECK(std::abs(mh[a] - fh[shifted]) <= 1e-10);
    }
}

TEST_CASE("annihilator of a subgroup") {
    auto G = make_abelian({8});
    DualGroup D = characters(G);
    Subgroup H = subgroup_generate(G, {2});
    Annihilator ann = annihilator(D, H);
    CHECK(ann.members == std::vector<int>{0, 4});
    CHECK(ann.order() == 2);
    CHECK(ann.contains(4));
    CHECK_FALSE(ann.contains(1));
    // characters in the annihilator restrict to 1 on H
    for (int a : ann.members)
        for (int h : H.members) CHECK(std::abs(D.chi(a, h) - cxd(1, 0)) <= 1e-12);
    // duality of measures: w_{H^*} = |H| w_H / (|G| w_G)
    CHECK(ann.weight == doctest::Approx(4.0 / 8.0).epsilon(1e-12));
}
