#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "zakfiber/frames.hpp"
#include "zakfiber/instances.hpp"
#include "zakfiber/io.hpp"

using namespace zakfiber;

namespace {
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("zakfiber-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};
} // namespace

TEST_CASE("group specs round-trip for every kind") {
    CHECK(io::group_from_json(R"({"kind":"abelian","invariants":[4,2]})")->order() == 8);
    CHECK(io::group_from_json(R"({"kind":"dihedral","n":5})")->order() == 10);
    CHECK(io::group_from_json(R"({"kind":"axb","p":7,"q":3})")->order() == 21);
    CHECK(io::group_from_json(R"({"kind":"heisenberg","p":3})")->order() == 27);
    CHECK(io::group_from_json(
              R"({"kind":"table","mul":[[0,1],[1,0]]})")
              ->order() == 2);
    auto W = io::group_from_json(R"({"kind":"abelian","invariants":[6],"weight":0.25})");
    CHECK(W->weight() == doctest::Approx(0.25));
}

TEST_CASE("malformed input is reported as a schema error") {
    CHECK_THROWS_AS(io::group_from_json("{not json"), SchemaError);
    CHECK_THROWS_AS(io::group_from_json(R"({"kind":"nope"})"), SchemaError);
    CHECK_THROWS_AS(io::group_from_json(R"({"kind":"abelian"})"), SchemaError);
    CHECK_THROWS_AS(io::group_from_json(
                        R"({"schema":"other/9","kind":"abelian","invariants":[2]})"),
                    SchemaError);
    CHECK_THROWS_AS(
        io::group_from_json(R"({"kind":"abelian","invariants":[4],"weight":-1})"),
        SchemaError);
    // function value list must cover the group
    CHECK_THROWS_AS(io::function_from_json(
                        R"({"group":{"kind":"abelian","invariants":[4]},
                            "values":[[1,0],[0,0]]})",
                        "."),
                    SchemaError);
}

TEST_CASE("functions round-trip through JSON") {
    auto G = make_abelian({6});
    SplitMix64 rng(139);
    const GroupFunction f = instances::random_function(G, rng);
    const std::string text =
        io::function_to_json(f, R"({"kind":"abelian","invariants":[6]})");
    const GroupFunction back = io::function_from_json(text, ".");
    REQUIRE(back.group->order() == 6);
    CHECK((back.values - f.values).cwiseAbs().maxCoeff() == 0.0);

    // serialization is deterministic
    CHECK(io::function_to_json(f, R"({"kind":"abelian","invariants":[6]})") == text);
}

TEST_CASE("function files may reference the group by path") {
    TempDir tmp;
    io::write_text_file(tmp.file("group.json"),
                        R"({"kind":"abelian","invariants":[4]})");
    io::write_text_file(tmp.file("f.json"),
                        R"({"group":"group.json","values":[[1,0],[0,0],[0,0],[0,0]]})");
    const GroupFunction f = io::function_from_file(tmp.file("f.json"));
    CHECK(f.group->order() == 4);
    CHECK(std::abs(f.values[0] - cxd(1, 0)) == 0.0);
    CHECK_THROWS_AS(io::function_from_file(tmp.file("missing.json")), SchemaError);
}

TEST_CASE("representation files parse and validate") {
    const char* text = R"({
        "group": {"kind": "abelian", "invariants": [2]},
        "dim": 2,
        "generator_images": [[[[0,0],[1,0]],[[1,0],[0,0]]]]
    })";
    const UnitaryRep rep = io::rep_from_json(text, ".");
    CHECK(rep.dim == 2);
    CHECK(rep.order() == 2);
    CHECK(std::abs(rep.matrix(1)(0, 1) - cxd(1, 0)) == 0.0);

    // non-unitary images violate the contract
    const char* bad = R"({
        "group": {"kind": "abelian", "invariants": [2]},
        "dim": 2,
        "generator_images": [[[[2,0],[0,0]],[[0,0],[1,0]]]]
    })";
    CHECK_THROWS_AS(io::rep_from_json(bad, "."), ContractError);
}

TEST_CASE("reports serialize with stable fields") {
    auto G = make_abelian({4});
    auto ctx = make_pair_context(G, subgroup_generate(G, {2}));
    GroupFunction f{G, Eigen::VectorXcd::Zero(4)};
    f.values[0] = 1.0;
    const FrameReport r = translate_frame_report(ctx, {f});
    const std::string j = io::frame_report_to_json(r, "translate");
    CHECK(j.find("\"schema\": \"zakfiber/1\"") != std::string::npos);
    CHECK(j.find("\"A_direct\": 1") != std::string::npos);
    CHECK(j.find("\"per_fiber\"") != std::string::npos);
    const std::string csv = io::per_fiber_csv(r);
    CHECK(csv.rfind("fiber,dim,lower,upper\n", 0) == 0);

    const std::string zj = io::zak_to_json(zak(ctx, f));
    CHECK(zj.find("\"rows\": \"dual_H\"") != std::string::npos);
    CHECK(zj.find("\"row_count\": 2") != std::string::npos);
}
