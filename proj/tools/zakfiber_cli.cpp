// zakfiber: batch front end for the transform/frame/representation library.
//
// Subcommands: zak, frames, examples, rep, verify. All inputs and outputs
// are JSON ("schema": "zakfiber/1", complex numbers as [re, im]); identical
// requests with identical seeds produce byte-identical reports.
//
// Exit codes: 0 success, 2 malformed input, 3 mathematical-contract
// violation (nonabelian subgroup where characters are needed, non-unit
// weight in a Riesz request, broken representation relations, ...).

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "zakfiber/frames.hpp"
#include "zakfiber/instances.hpp"
#include "zakfiber/io.hpp"
#include "zakfiber/rep.hpp"
#include "zakfiber/verify.hpp"
#include "zakfiber/zak.hpp"

namespace zf = zakfiber;
namespace io = zakfiber::io;

namespace {

std::string load_spec_arg(const std::string& arg) {
    // Inline JSON (starts with '{') or a path to a JSON file.
    if (!arg.empty() && arg.front() == '{') return arg;
    return io::read_text_file(arg);
}

zf::GroupPtr parse_group_arg(const std::string& arg) {
    return zf::io::group_from_json(load_spec_arg(arg));
}

io::SubgroupSpec parse_subgroup_arg(const std::string& arg, double weight_flag) {
    // Either a comma-separated generator list ("2" / "2,5") or a path to
    // a subgroup JSON file {"generators": [...], "weight": w}.
    const bool listy = arg.find_first_not_of("0123456789, ") == std::string::npos;
    if (!listy) {
        io::SubgroupSpec spec = io::subgroup_from_json(io::read_text_file(arg));
        return spec;
    }
    io::SubgroupSpec spec;
    spec.weight = weight_flag;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of("0123456789 ") != std::string::npos || tok.empty()) {
            throw zf::SchemaError("bad subgroup generator list: " + arg);
        }
        spec.generators.push_back(std::stoi(tok));
    }
    if (spec.generators.empty()) throw zf::SchemaError("empty subgroup generator list");
    return spec;
}

struct TransversalChoice {
    zf::TransversalPolicy policy = zf::TransversalPolicy::minimal;
    std::uint64_t seed = 0;
};

TransversalChoice parse_transversal(const std::string& arg) {
    TransversalChoice tc;
    if (arg.empty() || arg == "minimal") return tc;
    if (arg.rfind("random:", 0) == 0) {
        tc.policy = zf::TransversalPolicy::random;
        const std::string tail = arg.substr(7);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
            throw zf::SchemaError("--transversal random:<seed> needs an integer seed");
        }
        tc.seed = std::stoull(tail);
        return tc;
    }
    throw zf::SchemaError("--transversal must be 'minimal' or 'random:<seed>'");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        io::write_text_file(out_path, text);
    }
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string json_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ------------------------------------------------------------------- zak

struct PairRequest {
    std::string group_arg;
    std::string subgroup_arg;
    double subgroup_weight = 1.0;
    std::string transversal = "minimal";
    std::vector<std::string> function_files;
    std::string out_path;
    std::string csv_path;
    std::string mode = "translate";

    zf::PairCtxPtr context(zf::GroupPtr* group_out = nullptr) const {
        zf::GroupPtr G = parse_group_arg(group_arg);
        const io::SubgroupSpec spec = parse_subgroup_arg(subgroup_arg, subgroup_weight);
        const zf::Subgroup H = zf::subgroup_generate(G, spec.generators, spec.weight);
        const TransversalChoice tc = parse_transversal(transversal);
        if (group_out) *group_out = G;
        return zf::make_pair_context(G, H, tc.policy, tc.seed);
    }

    std::vector<zf::GroupFunction> family(const zf::GroupPtr& G) const {
        std::vector<zf::GroupFunction> fam;
        for (const auto& path : function_files) {
            zf::GroupFunction f = io::function_from_file(path);
            if (f.group->order() != G->order()) {
                throw zf::SchemaError("function file " + path +
                                      " lives on a different group order");
            }
            f.group = G; // same table; keep one instance so contexts match
            fam.push_back(std::move(f));
        }
        return fam;
    }
};

int cmd_zak(const PairRequest& req) {
    zf::GroupPtr G;
    const auto ctx = req.context(&G);
    const auto fam = req.family(G);
    if (fam.size() != 1) throw zf::SchemaError("zak needs exactly one --function");
    const zf::GroupFunction& f = fam[0];

    const zf::ZakArray Z = zf::zak(ctx, f);
    const double nf = f.norm_sq();
    const double unit = std::abs(Z.norm_sq() - nf) / std::max(1.0, nf);
    const zf::GroupFunction back = zf::zak_inverse(Z);
    const double round =
        std::sqrt((back.values - f.values).squaredNorm() * G->weight()) /
        std::max(1.0, std::sqrt(nf));

    // Translation covariance residual, exhaustive over the subgroup.
    double cov = 0.0;
    const double scale = std::max(1.0, Z.values.cwiseAbs().maxCoeff());
    for (int j = 0; j < ctx->H.order(); ++j) {
        const zf::ZakArray Zt =
            zf::zak(ctx, zf::translate(f, ctx->H.members[static_cast<std::size_t>(j)]));
        for (int a = 0; a < ctx->dual_order(); ++a) {
            const zf::cxd factor = std::conj(ctx->Hd.chi(a, j));
            cov = std::max(cov, (Zt.values.row(a) - factor * Z.values.row(a))
                                        .cwiseAbs()
                                        .maxCoeff() /
                                    scale);
        }
    }

    std::string fiber_block = "null";
    std::string bridge = "null";
    if (ctx->fiber_side) {
        const zf::FiberArray F = zf::fiberize(ctx, f);
        const zf::FiberArray FZ = zf::zak_to_fiber(Z);
        bridge = json_number((F.values - FZ.values).cwiseAbs().maxCoeff() /
                             std::max(1.0, F.values.cwiseAbs().maxCoeff()));
        fiber_block = io::fiber_to_json(F);
        if (!fiber_block.empty() && fiber_block.back() == '\n') fiber_block.pop_back();
    }

    std::string zak_block = io::zak_to_json(Z);
    if (!zak_block.empty() && zak_block.back() == '\n') zak_block.pop_back();

    std::string out = "{\n  \"schema\": \"zakfiber/1\",\n  \"zak\": ";
    out += zak_block;
    out += ",\n  \"fiberization\": ";
    out += fiber_block;
    out += ",\n  \"residuals\": {\n    \"unitarity\": " + json_number(unit) +
           ",\n    \"round_trip\": " + json_number(round) +
           ",\n    \"translate_covariance\": " + json_number(cov) +
           ",\n    \"fiber_bridge\": " + bridge + "\n  }\n}\n";
    emit(out, req.out_path);
    return 0;
}

// ----------------------------------------------------------------- frames

int cmd_frames(const PairRequest& req) {
    zf::GroupPtr G;
    const auto ctx = req.context(&G);
    const auto fam = req.family(G);
    if (fam.empty()) throw zf::SchemaError("frames needs at least one --function");

    zf::FrameReport report;
    if (req.mode == "translate") {
        report = zf::translate_frame_report(ctx, fam);
    } else if (req.mode == "riesz") {
        report = zf::riesz_check(ctx, fam);
    } else if (req.mode == "gabor") {
        report = zf::gabor_frame_check(ctx, fam).report;
    } else {
        throw zf::SchemaError("--mode must be translate, riesz, or gabor");
    }
    emit(io::frame_report_to_json(report, req.mode), req.out_path);
    if (!req.csv_path.empty()) io::write_text_file(req.csv_path, io::per_fiber_csv(report));
    return 0;
}

// --------------------------------------------------------------- examples

struct ExampleRequest {
    std::string name;
    int N = 12, d = 3, n = 2, m = 1, p = 2, k = 4, j = 2, q = 3;
    int functions = 2;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
};

void write_function_files(const ExampleRequest& req, const zf::GroupPtr& G,
                          std::vector<std::string>& files) {
    zf::SplitMix64 rng(req.seed);
    for (int t = 0; t < req.functions; ++t) {
        const zf::GroupFunction f = zf::instances::random_function(G, rng);
        const std::string name = "f" + std::to_string(t) + ".json";
        io::write_text_file((std::filesystem::path(req.out_dir) / name).string(),
                            io::function_to_json(f, "group.json"));
        files.push_back(name);
    }
}

int cmd_examples(const ExampleRequest& req) {
    std::filesystem::create_directories(req.out_dir);
    std::string group_spec;
    std::vector<std::pair<std::string, io::SubgroupSpec>> subgroups;
    zf::GroupPtr G;

    auto abelian_spec = [](std::initializer_list<int> inv) {
        std::string s = "{\n  \"schema\": \"zakfiber/1\",\n  \"kind\": \"abelian\",\n  "
                        "\"invariants\": [";
        bool first = true;
        for (int v : inv) {
            if (!first) s += ", ";
            s += std::to_string(v);
            first = false;
        }
        s += "],\n  \"weight\": 1\n}\n";
        return s;
    };

    if (req.name == "line") {
        // The subgroup d Z_N of Z_N: translates step through a coarser line.
        if (req.N < 1 || req.d < 1 || req.N % req.d != 0)
            throw zf::SchemaError("examples line: need d | N");
        G = zf::make_abelian({req.N});
        group_spec = abelian_spec({req.N});
        subgroups.push_back({"subgroup.json", {{req.d}, 1.0}});
    } else if (req.name == "lattice" || req.name == "plane") {
        // m full (or d-spaced) coordinate factors inside Z_N^n.
        if (req.m < 1 || req.n < req.m) throw zf::SchemaError("examples: need 1 <= m <= n");
        const int step = (req.name == "lattice") ? req.d : 1;
        if (step < 1 || req.N % step != 0) throw zf::SchemaError("examples lattice: need d | N");
        std::vector<int> inv(static_cast<std::size_t>(req.n), req.N);
        G = zf::make_abelian(inv);
        std::string spec = "{\n  \"schema\": \"zakfiber/1\",\n  \"kind\": \"abelian\",\n  "
                           "\"invariants\": [";
        for (int i = 0; i < req.n; ++i) spec += (i ? ", " : "") + std::to_string(req.N);
        spec += "],\n  \"weight\": 1\n}\n";
        group_spec = spec;
        io::SubgroupSpec ss;
        for (int i = 0; i < req.m; ++i) {
            std::vector<int> coords(static_cast<std::size_t>(req.n), 0);
            coords[static_cast<std::size_t>(i)] = step;
            ss.generators.push_back(G->element_from_coords(coords));
        }
        subgroups.push_back({"subgroup.json", ss});
    } else if (req.name == "padic") {
        // p^j Z_{p^k} inside Z_{p^k}: the filtration step of a p-adic line.
        if (req.p < 2 || req.k < 1 || req.j < 0 || req.j > req.k)
            throw zf::SchemaError("examples padic: need p >= 2, 0 <= j <= k");
        int order = 1;
        for (int i = 0; i < req.k; ++i) order *= req.p;
        int gen = 1;
        for (int i = 0; i < req.j; ++i) gen *= req.p;
        G = zf::make_abelian({order});
        group_spec = abelian_spec({order});
        subgroups.push_back({"subgroup.json", {{gen % order}, 1.0}});
    } else if (req.name == "axb") {
        // The order-pq affine group with both canonical abelian subgroups.
        G = zf::make_semidirect_axb(req.p, req.q);
        group_spec = "{\n  \"schema\": \"zakfiber/1\",\n  \"kind\": \"axb\",\n  \"p\": " +
                     std::to_string(req.p) + ",\n  \"q\": " + std::to_string(req.q) +
                     ",\n  \"weight\": 1\n}\n";
        subgroups.push_back({"subgroup_normal.json", {{1}, 1.0}});
        subgroups.push_back({"subgroup_point.json", {{req.p}, 1.0}});
    } else {
        throw zf::SchemaError("unknown example name: " + req.name +
                              " (expected line, lattice, plane, padic, axb)");
    }

    io::write_text_file((std::filesystem::path(req.out_dir) / "group.json").string(),
                        group_spec);
    std::string sub_list;
    for (const auto& [fname, spec] : subgroups) {
        std::string s = "{\n  \"schema\": \"zakfiber/1\",\n  \"generators\": [";
        for (std::size_t i = 0; i < spec.generators.size(); ++i)
            s += (i ? ", " : "") + std::to_string(spec.generators[i]);
        s += "],\n  \"weight\": 1\n}\n";
        io::write_text_file((std::filesystem::path(req.out_dir) / fname).string(), s);
        if (!sub_list.empty()) sub_list += ", ";
        sub_list += "\"" + fname + "\"";
    }

    std::vector<std::string> files;
    write_function_files(req, G, files);

    std::string manifest = "{\n  \"schema\": \"zakfiber/1\",\n  \"name\": \"" + req.name +
                           "\",\n  \"group\": \"group.json\",\n  \"subgroups\": [" + sub_list +
                           "],\n  \"family\": [";
    for (std::size_t i = 0; i < files.size(); ++i)
        manifest += (i ? ", " : "") + ("\"" + files[i] + "\"");
    manifest += "]\n}\n";
    io::write_text_file((std::filesystem::path(req.out_dir) / "manifest.json").string(),
                        manifest);
    return 0;
}

// -------------------------------------------------------------------- rep

struct RepRequest {
    std::string rep_file;
    bool embed = false;
    std::string out_path;
};

int cmd_rep(const RepRequest& req) {
    const zf::UnitaryRep rep = io::rep_from_file(req.rep_file);
    const zf::GeneratorFamily gens = zf::orthogonal_generators(rep);
    std::vector<Eigen::VectorXcd> thetas = gens.theta;

    std::string out = "{\n  \"schema\": \"zakfiber/1\",\n  \"dim\": " +
                      std::to_string(rep.dim) +
                      ",\n  \"generators\": " + std::to_string(gens.count());

    // Bracket table over the standard basis: bracket_basis[s][t][alpha].
    out += ",\n  \"bracket_basis\": [";
    for (int s = 0; s < rep.dim; ++s) {
        out += s ? ", [" : "[";
        for (int u = 0; u < rep.dim; ++u) {
            const Eigen::VectorXcd b = zf::bracket(
                rep, Eigen::VectorXcd::Unit(rep.dim, s), Eigen::VectorXcd::Unit(rep.dim, u));
            out += u ? ", [" : "[";
            for (int a = 0; a < rep.order(); ++a) {
                out += a ? ", [" : "[";
                out += json_number(b[a].real()) + ", " + json_number(b[a].imag()) + "]";
            }
            out += "]";
        }
        out += "]";
    }
    out += "]";

    // Diagonal bracket of each generator over the dual (its power density).
    out += ",\n  \"generator_power\": [";
    for (int i = 0; i < gens.count(); ++i) {
        out += i ? ", [" : "[";
        const auto& pw = gens.power[static_cast<std::size_t>(i)];
        for (int a = 0; a < rep.order(); ++a) out += (a ? ", " : "") + json_number(pw[a]);
        out += "]";
    }
    out += "]";

    // Isometry residual of T on the standard basis.
    double iso = 0.0;
    for (int s = 0; s < rep.dim; ++s) {
        const Eigen::VectorXcd e = Eigen::VectorXcd::Unit(rep.dim, s);
        const Eigen::MatrixXcd Te = zf::isometry_T(rep, gens, e);
        iso = std::max(iso, std::abs(Te.squaredNorm() * rep.dual.weight() - 1.0));
    }
    out += ",\n  \"isometry_residual\": " + json_number(iso);

    const zf::FrameReport fr = zf::rep_frame_check(rep, gens, thetas);
    const zf::FrameReport rr = zf::rep_riesz_check(rep, gens, thetas);
    auto report_block = [](const zf::FrameReport& r) {
        std::string s = "{\"A_direct\": " + json_number(r.A_direct) +
                        ", \"B_direct\": " + json_number(r.B_direct) +
                        ", \"A_fiber\": " + json_number(r.A_fiber) +
                        ", \"B_fiber\": " + json_number(r.B_fiber) +
                        ", \"is_frame_for_span\": " + json_bool(r.is_frame_for_span) +
                        ", \"is_riesz_sequence\": " + json_bool(r.is_riesz_sequence) +
                        ", \"is_parseval\": " + json_bool(r.is_parseval) +
                        ", \"is_orthonormal\": " + json_bool(r.is_orthonormal) + "}";
        return s;
    };
    out += ",\n  \"frame\": " + report_block(fr);
    out += ",\n  \"riesz\": " + report_block(rr);

    if (req.embed) {
        const zf::TranslationEmbedding emb = zf::embed_as_translation(rep, gens);
        out += ",\n  \"embed\": {\"intertwine_residual\": " +
               json_number(emb.intertwine_residual) + ", \"image_translation_invariant\": " +
               json_bool(emb.image_translation_invariant) + "}";
    } else {
        out += ",\n  \"embed\": null";
    }
    out += "\n}\n";
    emit(out, req.out_path);
    return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const std::string& scope, std::uint64_t seed) {
    const auto results = zf::verify::run_acceptance(scope.empty() ? "all" : scope, seed);
    const bool ok = zf::verify::print_acceptance(results, std::cout);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Zak transform, fiberization, and frame analysis"};
    app.require_subcommand(1);

    PairRequest pair_req;
    ExampleRequest ex_req;
    RepRequest rep_req;
    std::string verify_scope = "all";
    std::uint64_t verify_seed = 1;

    auto add_pair_flags = [&pair_req](CLI::App* sub, bool with_mode) {
        sub->add_option("--group", pair_req.group_arg,
                        "group spec: inline JSON or a path to a group file")
            ->required();
        sub->add_option("--subgroup", pair_req.subgroup_arg,
                        "subgroup generators '2' / '2,5' or a subgroup JSON file")
            ->required();
        sub->add_option("--subgroup-weight", pair_req.subgroup_weight,
                        "weight of the subgroup measure (default 1)");
        sub->add_option("--transversal", pair_req.transversal,
                        "coset section: minimal (default) or random:<seed>");
        sub->add_option("--function", pair_req.function_files,
                        "function JSON file (repeatable)")
            ->required();
        sub->add_option("--out", pair_req.out_path, "output JSON path (default stdout)");
        if (with_mode) {
            sub->add_option("--mode", pair_req.mode, "translate (default) | riesz | gabor");
            sub->add_option("--csv", pair_req.csv_path, "also write per-fiber bounds as CSV");
        }
    };

    CLI::App* zak_cmd = app.add_subcommand("zak", "Zak/fiberization dump with residuals");
    add_pair_flags(zak_cmd, false);

    CLI::App* frames_cmd =
        app.add_subcommand("frames", "frame / Riesz / two-parameter bound reports");
    add_pair_flags(frames_cmd, true);

    CLI::App* ex_cmd = app.add_subcommand("examples", "generate worked instance files");
    ex_cmd->add_option("name", ex_req.name, "line | lattice | plane | padic | axb")
        ->required();
    ex_cmd->add_option("--N", ex_req.N, "cyclic order (line/lattice/plane)");
    ex_cmd->add_option("--d", ex_req.d, "subgroup step (line/lattice)");
    ex_cmd->add_option("--n", ex_req.n, "ambient rank (lattice/plane)");
    ex_cmd->add_option("--m", ex_req.m, "subgroup rank (lattice/plane)");
    ex_cmd->add_option("--p", ex_req.p, "prime (padic/axb)");
    ex_cmd->add_option("--k", ex_req.k, "exponent: group order p^k (padic)");
    ex_cmd->add_option("--j", ex_req.j, "subgroup level: generated by p^j (padic)");
    ex_cmd->add_option("--q", ex_req.q, "point-stabilizer order (axb)");
    ex_cmd->add_option("--functions", ex_req.functions, "sample functions to write");
    ex_cmd->add_option("--seed", ex_req.seed, "seed for the sample functions");
    ex_cmd->add_option("--out-dir", ex_req.out_dir, "output directory");

    CLI::App* rep_cmd = app.add_subcommand("rep", "representation bracket/frame report");
    rep_cmd->add_option("--rep", rep_req.rep_file, "representation JSON file")->required();
    rep_cmd->add_flag("--embed", rep_req.embed, "include the translation embedding check");
    rep_cmd->add_option("--out", rep_req.out_path, "output JSON path (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance matrix");
    verify_cmd->add_option("--scope", verify_scope,
                           "all (default) or comma list: zak,intertwine,fiber-link,weil,"
                           "frames,riesz,gabor,classify,rep,micro (ids work too)");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (zak_cmd->parsed()) return cmd_zak(pair_req);
        if (frames_cmd->parsed()) return cmd_frames(pair_req);
        if (ex_cmd->parsed()) return cmd_examples(ex_req);
        if (rep_cmd->parsed()) return cmd_rep(rep_req);
        if (verify_cmd->parsed()) return cmd_verify(verify_scope, verify_seed);
    } catch (const zf::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const zf::ContractError& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
