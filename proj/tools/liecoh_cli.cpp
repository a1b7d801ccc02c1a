// liecoh: exact Chevalley-Eilenberg cohomology, minimal A-infinity models,
// and the checks built on them, as one subcommand-style binary.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 input error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liecoh/bar_pbw.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/generation.hpp"
#include "liecoh/json_io.hpp"
#include "liecoh/symfun.hpp"

using namespace liecoh;

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_csv(const Table& table) {
    std::ostringstream out;
    for (size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << csv_escape(table.header[i]);
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
    }
    return out.str();
}

std::string render_table(const Table& table) {
    std::vector<size_t> width(table.header.size(), 0);
    for (size_t i = 0; i < table.header.size(); ++i)
        width[i] = table.header[i].size();
    for (const auto& row : table.rows)
        for (size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "  " : "");
            out << cells[i];
            out << std::string(width[i] - cells[i].size(), ' ');
        }
        out << "\n";
    };
    line(table.header);
    for (const auto& row : table.rows)
        line(row);
    return out.str();
}

struct RunConfig {
    std::string algebra_spec;
    std::string file_path;
    std::string format = "json";
    std::string out_path;
    int max_weight = 6;
    int arity = 0; // 0 = default max(6, 1 + nilpotency class)
    int max_degree = 6;
    int vars = 2;
};

StructureConstants load_algebra(const RunConfig& cfg) {
    if (cfg.algebra_spec.empty() == cfg.file_path.empty())
        throw input_error("exactly one of --algebra and --file is required");
    if (!cfg.file_path.empty()) {
        StructureConstants sc = load_structure_constants(cfg.file_path);
        require_valid(sc);
        return sc;
    }
    std::string name = cfg.algebra_spec;
    std::vector<int> params;
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string rest = name.substr(colon + 1);
        name = name.substr(0, colon);
        std::stringstream ss(rest);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            try {
                size_t pos = 0;
                params.push_back(std::stoi(piece, &pos));
                if (pos != piece.size())
                    throw std::invalid_argument(piece);
            } catch (const std::exception&) {
                throw input_error("bad algebra parameter '" + piece + "'");
            }
        }
    }
    return example(name, params);
}

Json input_echo(const RunConfig& cfg) {
    Json j;
    if (!cfg.algebra_spec.empty())
        j["algebra"] = cfg.algebra_spec;
    if (!cfg.file_path.empty())
        j["file"] = cfg.file_path;
    return j;
}

int default_arity(const StructureConstants& sc, int requested) {
    if (requested > 0)
        return requested;
    NilpotencyInfo info = is_nilpotent(sc);
    return std::max(6, info.nilpotent ? info.nil_class + 1 : 6);
}

Json rational_vec_json(const SparseVec& v) {
    Json j = Json::object();
    for (const auto& [i, c] : v.entries())
        j[std::to_string(i)] = to_string(c);
    return j;
}

void emit(const RunConfig& cfg, const Json& doc, const Table& table) {
    std::string payload;
    if (cfg.format == "json")
        payload = doc.dump(2) + "\n";
    else if (cfg.format == "csv")
        payload = render_csv(table);
    else if (cfg.format == "table")
        payload = render_table(table);
    else
        throw input_error("unknown format '" + cfg.format + "'");
    if (cfg.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out)
            throw input_error("cannot write output file '" + cfg.out_path + "'");
        out << payload;
    }
}

struct TransferredModel {
    CochainComplex cx;
    CohomologyData coh;
    TransferData td;
    MinimalAInfinity ma;
};

TransferredModel transfer_model(const StructureConstants& sc, int arity) {
    TransferredModel m{ce_complex(sc), {}, {}, {}};
    m.coh = cohomology(m.cx);
    m.td = retract_data(m.cx, m.coh);
    m.ma = transferred_operations(m.cx, m.td, arity);
    return m;
}

int cmd_cohomology(const RunConfig& cfg) {
    StructureConstants sc = load_algebra(cfg);
    CochainComplex cx = ce_complex(sc);
    CohomologyData coh = cohomology(cx);

    int chi = 0;
    for (size_t k = 0; k < coh.betti.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * coh.betti[k];
    bool nilpotent = is_nilpotent(sc).nilpotent;
    bool duality = true;
    for (int k = 0; k <= sc.dim; ++k)
        if (coh.betti[k] != coh.betti[sc.dim - k])
            duality = false;

    Json result;
    result["betti"] = coh.betti;
    if (cx.weighted()) {
        Json weights = Json::array();
        for (int k = 0; k <= sc.dim; ++k)
            weights.push_back(coh.representative_weights[k]);
        result["class_weights"] = weights;
    }
    Json reps = Json::array();
    for (int k = 0; k <= sc.dim; ++k) {
        Json per_degree = Json::array();
        for (const SparseVec& r : coh.representatives[k])
            per_degree.push_back(rational_vec_json(r));
        reps.push_back(per_degree);
    }
    result["representatives"] = reps;

    Json doc;
    doc["command"] = "cohomology";
    doc["input"] = input_echo(cfg);
    doc["result"] = result;
    doc["invariant_checks"] = {{"delta_squared_zero", true},
                               {"euler_characteristic_zero", chi == 0},
                               {"poincare_duality", nilpotent ? Json(duality) : Json(nullptr)}};

    Table table;
    table.header = {"degree", "betti", "class_weights"};
    for (int k = 0; k <= sc.dim; ++k) {
        std::string ws;
        if (cx.weighted())
            for (size_t i = 0; i < coh.representative_weights[k].size(); ++i)
                ws += (i ? " " : "") + std::to_string(coh.representative_weights[k][i]);
        table.rows.push_back({std::to_string(k), std::to_string(coh.betti[k]), ws});
    }
    emit(cfg, doc, table);
    return 0;
}

int cmd_minimal_model(const RunConfig& cfg) {
    StructureConstants sc = load_algebra(cfg);
    int arity = default_arity(sc, cfg.arity);
    TransferredModel m = transfer_model(sc, arity);

    Json classes = Json::array();
    for (int id = 0; id < m.ma.total_dim(); ++id) {
        Json c;
        c["id"] = id;
        c["degree"] = m.ma.class_degree[id];
        if (m.ma.weighted)
            c["weight"] = m.ma.class_weight[id];
        classes.push_back(std::move(c));
    }

    Table table;
    table.header = {"arity", "inputs", "output_class", "coefficient"};
    Json operations = Json::array();
    for (const auto& [k, ops] : m.ma.ops) {
        Json arity_block;
        arity_block["arity"] = k;
        Json entries = Json::array();
        for (const auto& [tuple, value] : ops) {
            Json e;
            e["inputs"] = tuple;
            e["output"] = rational_vec_json(value);
            entries.push_back(std::move(e));
            std::string inputs;
            for (size_t i = 0; i < tuple.size(); ++i)
                inputs += (i ? " " : "") + std::to_string(tuple[i]);
            for (const auto& [out_id, c] : value.entries())
                table.rows.push_back(
                    {std::to_string(k), inputs, std::to_string(out_id), to_string(c)});
        }
        arity_block["entries"] = std::move(entries);
        operations.push_back(std::move(arity_block));
    }

    Json result;
    result["arity_bound"] = arity;
    result["h_dims"] = m.td.h_dims;
    result["classes"] = classes;
    result["operations"] = operations;

    Json doc;
    doc["command"] = "minimal-model";
    doc["input"] = input_echo(cfg);
    doc["result"] = result;
    // transferred_operations already ran the checker; failures throw
    doc["invariant_checks"] = {{"stasheff_identities", "ok"},
                               {"degree_weight_bookkeeping", "ok"}};
    emit(cfg, doc, table);
    return 0;
}

Json expr_to_json(const GenerationExpr& e) {
    if (e.is_leaf())
        return Json(e.leaf_class);
    Json arr = Json::array();
    arr.push_back("m" + std::to_string(e.arity));
    for (const auto& child : e.children)
        arr.push_back(expr_to_json(child));
    return arr;
}

int cmd_check_one_generated(const RunConfig& cfg) {
    StructureConstants sc = load_algebra(cfg);
    int arity = default_arity(sc, cfg.arity);
    TransferredModel m = transfer_model(sc, arity);
    GenerationReport report = span_closure(m.ma);

    Json degrees = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["degree"] = row.degree;
        r["dim_h"] = row.dim_h;
        r["dim_generated"] = row.dim_generated;
        r["cokernel_dim"] = static_cast<int>(row.cokernel.size());
        degrees.push_back(std::move(r));
    }
    Json certificates = Json::array();
    for (const auto& cert : report.certificates) {
        Json c;
        c["degree"] = cert.degree;
        c["expr"] = expr_to_json(cert.expr);
        c["value"] = rational_vec_json(cert.value);
        certificates.push_back(std::move(c));
    }

    Json result;
    result["verdict"] = report.one_generated;
    result["certified_exact"] = report.certified_exact;
    result["arity_bound"] = report.arity_bound;
    if (!report.note.empty())
        result["note"] = report.note;
    result["degrees"] = degrees;
    result["certificates"] = certificates;
    if (m.ma.weighted) {
        Json wd = Json::object();
        for (const auto& [w, dims] : report.weight_dims)
            wd[std::to_string(w)] = {{"generated", dims.first}, {"dim_h", dims.second}};
        result["weight_dims"] = wd;

        BarFiltrationReport bar = bar_filtration_check(m.ma, cfg.max_weight);
        Json bar_json;
        bar_json["max_weight_checked"] = bar.max_weight_checked;
        bar_json["capped_by_arity"] = bar.capped_by_arity;
        bar_json["all_vanish"] = bar.all_vanish;
        Json rows = Json::array();
        for (const auto& row : bar.rows) {
            Json r;
            r["weight"] = row.weight;
            r["vanishes"] = row.vanishes;
            r["bar_dims"] = row.bar_dims;
            rows.push_back(std::move(r));
        }
        bar_json["rows"] = rows;
        result["bar_filtration"] = bar_json;
    }

    Json doc;
    doc["command"] = "check one-generated";
    doc["input"] = input_echo(cfg);
    doc["result"] = result;
    doc["invariant_checks"] = {{"stasheff_identities", "ok"},
                               {"certificates_sound", "by construction"}};

    Table table;
    table.header = {"degree", "dim_h", "dim_generated", "cokernel_dim"};
    for (const auto& row : report.rows)
        table.rows.push_back({std::to_string(row.degree), std::to_string(row.dim_h),
                              std::to_string(row.dim_generated),
                              std::to_string(row.cokernel.size())});
    emit(cfg, doc, table);
    return report.one_generated ? 0 : 1;
}

int cmd_check_pbw(const RunConfig& cfg) {
    StructureConstants sc = load_algebra(cfg);
    PBWReport report = pbw_check(sc, cfg.max_weight);

    Json rows = Json::array();
    Table table;
    table.header = {"weight", "h0", "sym", "h1", "h2", "higher_total", "ok"};
    for (const auto& row : report.rows) {
        Json r;
        r["weight"] = row.weight;
        r["h0"] = row.h0;
        r["sym"] = row.sym;
        r["higher"] = row.higher;
        r["ok"] = row.ok;
        rows.push_back(std::move(r));

        int h1 = row.higher.size() > 0 ? row.higher[0] : 0;
        int h2 = row.higher.size() > 1 ? row.higher[1] : 0;
        int total = 0;
        for (int h : row.higher)
            total += h;
        table.rows.push_back({std::to_string(row.weight), std::to_string(row.h0),
                              std::to_string(row.sym), std::to_string(h1), std::to_string(h2),
                              std::to_string(total), row.ok ? "true" : "false"});
    }

    Json doc;
    doc["command"] = "check pbw";
    doc["input"] = input_echo(cfg);
    doc["result"] = {{"max_weight", cfg.max_weight}, {"rows", rows}, {"verdict", report.verdict}};
    doc["invariant_checks"] = {{"bar_d_squared_zero", true}};
    emit(cfg, doc, table);
    return report.verdict ? 0 : 1;
}

int cmd_check_littlewood(const RunConfig& cfg) {
    if (cfg.vars < 1 || cfg.max_degree < 1)
        throw input_error("littlewood: need --vars >= 1 and --max-degree >= 1");
    LittlewoodResult r = littlewood_check(cfg.vars, cfg.max_degree);

    Json result;
    result["vars"] = cfg.vars;
    result["max_degree"] = cfg.max_degree;
    result["ok"] = r.ok;
    result["lhs"] = r.lhs.to_string();
    result["rhs"] = r.rhs.to_string();
    if (r.first_mismatch)
        result["first_mismatch"] = *r.first_mismatch;

    Json doc;
    doc["command"] = "check littlewood";
    doc["input"] = {{"vars", cfg.vars}, {"max_degree", cfg.max_degree}};
    doc["result"] = result;
    doc["invariant_checks"] = {{"self_conjugate_sign_integral", true}};

    Table table;
    table.header = {"vars", "max_degree", "ok", "lhs", "rhs"};
    table.rows.push_back({std::to_string(cfg.vars), std::to_string(cfg.max_degree),
                          r.ok ? "true" : "false", r.lhs.to_string(), r.rhs.to_string()});
    emit(cfg, doc, table);
    return r.ok ? 0 : 1;
}

int cmd_check_euler(const RunConfig& cfg) {
    StructureConstants sc = load_algebra(cfg);
    GradedEulerReport r = graded_euler(sc);

    Json doc;
    doc["command"] = "check euler";
    doc["input"] = input_echo(cfg);
    doc["result"] = {{"cohomology_side", r.cohomology_side.to_string({"t"})},
                     {"product_side", r.product_side.to_string({"t"})},
                     {"match", r.match}};
    doc["invariant_checks"] = {{"weight_homogeneous_representatives", true}};

    Table table;
    table.header = {"side", "series"};
    table.rows.push_back({"cohomology", r.cohomology_side.to_string({"t"})});
    table.rows.push_back({"product", r.product_side.to_string({"t"})});
    emit(cfg, doc, table);
    return r.match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"liecoh: exact cohomology and minimal A-infinity models of "
                 "finite-dimensional Lie algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* cmd, bool algebra_source) {
        if (algebra_source) {
            cmd->add_option("--algebra", cfg.algebra_spec,
                            "zoo algebra, e.g. heisenberg:3, free_nilpotent:2,3, sl2");
            cmd->add_option("--file", cfg.file_path, "structure constants JSON file");
        }
        cmd->add_option("--format", cfg.format, "json | csv | table")->default_str("json");
        cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    };

    CLI::App* coh = app.add_subcommand("cohomology", "Betti table of the CE complex");
    add_common(coh, true);

    CLI::App* mm = app.add_subcommand("minimal-model",
                                      "transferred minimal A-infinity operations");
    add_common(mm, true);
    mm->add_option("--arity", cfg.arity, "arity bound (default max(6, class+1))");

    CLI::App* check = app.add_subcommand("check", "machine-verified statements");
    check->require_subcommand(1);

    CLI::App* gen = check->add_subcommand("one-generated",
                                          "degree-1 generation of the minimal model");
    add_common(gen, true);
    gen->add_option("--arity", cfg.arity, "arity bound (default max(6, class+1))");
    gen->add_option("--max-weight", cfg.max_weight, "bar filtration cross-check bound");

    CLI::App* pbw = check->add_subcommand("pbw", "bar cohomology vs Sym dimensions");
    add_common(pbw, true);
    pbw->add_option("--max-weight", cfg.max_weight, "largest weight checked");

    CLI::App* lw = check->add_subcommand("littlewood", "truncated Littlewood identity");
    add_common(lw, false);
    lw->add_option("--vars", cfg.vars, "number of variables");
    lw->add_option("--max-degree", cfg.max_degree, "truncation degree");

    CLI::App* euler = check->add_subcommand("euler", "graded Euler characteristic");
    add_common(euler, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coh->parsed())
            return cmd_cohomology(cfg);
        if (mm->parsed())
            return cmd_minimal_model(cfg);
        if (gen->parsed())
            return cmd_check_one_generated(cfg);
        if (pbw->parsed())
            return cmd_check_pbw(cfg);
        if (lw->parsed())
            return cmd_check_littlewood(cfg);
        if (euler->parsed())
            return cmd_check_euler(cfg);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
