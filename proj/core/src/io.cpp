#include "zakfiber/io.hpp"

#include "zakfiber/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zakfiber::io {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SchemaError(msg); }

ojson parse(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail("malformed JSON");
    return j;
}

void check_schema(const ojson& j) {
    if (j.is_object() && j.contains("schema")) {
        if (!j["schema"].is_string() || j["schema"].get<std::string>() != kSchemaTag) {
            fail("unsupported schema tag (expected \"" + std::string(kSchemaTag) + "\")");
        }
    }
}

double get_weight(const ojson& j) {
    if (!j.contains("weight")) return 1.0;
    if (!j["weight"].is_number()) fail("\"weight\" must be a number");
    const double w = j["weight"].get<double>();
    if (!(w > 0.0)) fail("\"weight\" must be positive");
    return w;
}

long get_int(const ojson& j, const char* key) {
    if (!j.contains(key)) fail(std::string("missing \"") + key + "\"");
    if (!j[key].is_number_integer()) fail(std::string("\"") + key + "\" must be an integer");
    return j[key].get<long>();
}

cxd get_complex(const ojson& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(std::string(what) + ": complex values must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ojson dump_complex(const cxd& z) { return ojson::array({z.real(), z.imag()}); }

Eigen::VectorXcd get_vector(const ojson& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = get_complex(j[i], what);
    return v;
}

GroupPtr group_from_parsed(const ojson& j) {
    if (!j.is_object()) fail("group spec must be a JSON object");
    check_schema(j);
    if (!j.contains("kind") || !j["kind"].is_string()) fail("group spec needs a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    const double w = get_weight(j);
    if (kind == "abelian") {
        if (!j.contains("invariants") || !j["invariants"].is_array()) {
            fail("abelian spec needs \"invariants\": [n1, n2, ...]");
        }
        std::vector<int> inv;
        for (const auto& e : j["invariants"]) {
            if (!e.is_number_integer()) fail("\"invariants\" entries must be integers");
            inv.push_back(e.get<int>());
        }
        return make_abelian(inv, w);
    }
    if (kind == "dihedral") return make_dihedral(static_cast<int>(get_int(j, "n")), w);
    if (kind == "axb") {
        return make_semidirect_axb(static_cast<int>(get_int(j, "p")),
                                   static_cast<int>(get_int(j, "q")), w);
    }
    if (kind == "heisenberg") return make_heisenberg(static_cast<int>(get_int(j, "p")), w);
    if (kind == "table") {
        if (!j.contains("mul") || !j["mul"].is_array()) fail("table spec needs \"mul\": [[...]]");
        std::vector<std::vector<int>> mul;
        for (const auto& row : j["mul"]) {
            if (!row.is_array()) fail("\"mul\" rows must be arrays");
            std::vector<int> r;
            for (const auto& e : row) {
                if (!e.is_number_integer()) fail("\"mul\" entries must be integers");
                r.push_back(e.get<int>());
            }
            mul.push_back(std::move(r));
        }
        return make_from_table(mul, w);
    }
    fail("unknown group kind \"" + kind + "\"");
}

GroupPtr resolve_group_field(const ojson& j, const std::string& base_dir) {
    if (!j.contains("group")) fail("missing \"group\" field");
    const ojson& g = j["group"];
    if (g.is_object()) return group_from_parsed(g);
    if (g.is_string()) {
        std::filesystem::path p(g.get<std::string>());
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        return group_from_parsed(parse(read_text_file(p.string())));
    }
    fail("\"group\" must be a spec object or a path string");
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ojson values_matrix(const Eigen::MatrixXcd& M) {
    ojson rows = ojson::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        ojson row = ojson::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(dump_complex(M(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot write file: " + path);
    out << content;
    if (!out.good()) fail("short write: " + path);
}

GroupPtr group_from_json(const std::string& json_text) {
    return group_from_parsed(parse(json_text));
}

SubgroupSpec subgroup_from_json(const std::string& json_text) {
    const ojson j = parse(json_text);
    if (!j.is_object()) fail("subgroup spec must be a JSON object");
    check_schema(j);
    if (!j.contains("generators") || !j["generators"].is_array()) {
        fail("subgroup spec needs \"generators\": [elements]");
    }
    SubgroupSpec spec;
    for (const auto& e : j["generators"]) {
        if (!e.is_number_integer()) fail("\"generators\" entries must be integers");
        spec.generators.push_back(e.get<int>());
    }
    spec.weight = get_weight(j);
    return spec;
}

GroupFunction function_from_json(const std::string& json_text, const std::string& base_dir) {
    const ojson j = parse(json_text);
    if (!j.is_object()) fail("function file must be a JSON object");
    check_schema(j);
    GroupFunction f;
    f.group = resolve_group_field(j, base_dir);
    if (!j.contains("values")) fail("missing \"values\"");
    f.values = get_vector(j["values"], "\"values\"");
    if (f.values.size() != f.group->order()) {
        fail("\"values\" length " + std::to_string(f.values.size()) +
             " does not match group order " + std::to_string(f.group->order()));
    }
    return f;
}

GroupFunction function_from_file(const std::string& path) {
    return function_from_json(read_text_file(path),
                              std::filesystem::path(path).parent_path().string());
}

UnitaryRep rep_from_json(const std::string& json_text, const std::string& base_dir) {
    const ojson j = parse(json_text);
    if (!j.is_object()) fail("representation file must be a JSON object");
    check_schema(j);
    GroupPtr G = resolve_group_field(j, base_dir);
    const long dim = get_int(j, "dim");
    if (dim < 1) fail("\"dim\" must be >= 1");
    if (!j.contains("generator_images") || !j["generator_images"].is_array()) {
        fail("missing \"generator_images\" array");
    }
    std::vector<Eigen::MatrixXcd> images;
    for (const auto& m : j["generator_images"]) {
        if (!m.is_array() || m.size() != static_cast<std::size_t>(dim)) {
            fail("each generator image must be a dim x dim matrix (array of rows)");
        }
        Eigen::MatrixXcd M(dim, dim);
        for (long r = 0; r < dim; ++r) {
            const auto& row = m[static_cast<std::size_t>(r)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
                fail("matrix rows must have \"dim\" entries");
            }
            for (long c = 0; c < dim; ++c) {
                M(r, c) = get_complex(row[static_cast<std::size_t>(c)], "generator image");
            }
        }
        images.push_back(std::move(M));
    }
    return make_rep_from_generators(G, images);
}

UnitaryRep rep_from_file(const std::string& path) {
    return rep_from_json(read_text_file(path),
                         std::filesystem::path(path).parent_path().string());
}

std::string function_to_json(const GroupFunction& f, const std::string& group_ref) {
    ojson j;
    j["schema"] = kSchemaTag;
    if (!group_ref.empty() && group_ref.front() == '{') {
        j["group"] = parse(group_ref);
    } else {
        j["group"] = group_ref;
    }
    ojson vals = ojson::array();
    for (Eigen::Index i = 0; i < f.values.size(); ++i) vals.push_back(dump_complex(f.values[i]));
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

std::string zak_to_json(const ZakArray& Z) {
    ojson j;
    j["schema"] = kSchemaTag;
    j["rows"] = "dual_H";
    j["cols"] = "cosets";
    j["row_count"] = Z.values.rows();
    j["col_count"] = Z.values.cols();
    j["values"] = values_matrix(Z.values);
    return j.dump(2) + "\n";
}

std::string fiber_to_json(const FiberArray& F) {
    ojson j;
    j["schema"] = kSchemaTag;
    j["rows"] = "G_mod_Hstar";
    j["cols"] = "Hstar";
    j["row_count"] = F.values.rows();
    j["col_count"] = F.values.cols();
    j["values"] = values_matrix(F.values);
    return j.dump(2) + "\n";
}

std::string frame_report_to_json(const FrameReport& rep, const std::string& mode) {
    ojson j;
    j["schema"] = kSchemaTag;
    j["mode"] = mode;
    j["A_direct"] = rep.A_direct;
    j["B_direct"] = rep.B_direct;
    j["A_fiber"] = rep.A_fiber;
    j["B_fiber"] = rep.B_fiber;
    j["residual"] = rep.residual;
    j["span_dim"] = rep.span_dim;
    j["degenerate"] = rep.degenerate;
    j["is_frame_for_span"] = rep.is_frame_for_span;
    j["is_riesz_sequence"] = rep.is_riesz_sequence;
    j["is_parseval"] = rep.is_parseval;
    j["is_orthonormal"] = rep.is_orthonormal;
    ojson fibers = ojson::array();
    for (const auto& pf : rep.per_fiber) {
        ojson e;
        e["fiber"] = pf.fiber;
        e["dim"] = pf.dim;
        e["lower"] = pf.lower;
        e["upper"] = pf.upper;
        fibers.push_back(std::move(e));
    }
    j["per_fiber"] = std::move(fibers);
    return j.dump(2) + "\n";
}

std::string per_fiber_csv(const FrameReport& rep) {
    std::string out = "fiber,dim,lower,upper\n";
    for (const auto& pf : rep.per_fiber) {
        out += std::to_string(pf.fiber) + "," + std::to_string(pf.dim) + "," +
               format_double(pf.lower) + "," + format_double(pf.upper) + "\n";
    }
    return out;
}

std::string range_report_to_json(const RangeFunction& J) {
    ojson j;
    j["schema"] = kSchemaTag;
    j["fiber_count"] = J.fiber_count;
    j["ambient_dim"] = J.ambient_dim;
    ojson dims = ojson::array();
    for (int d : J.dim) dims.push_back(d);
    j["dims"] = std::move(dims);
    j["total_dim"] = J.total_dim();
    return j.dump(2) + "\n";
}

} // namespace zakfiber::io
