// planarcalc command-line front end. Talks to the library exclusively
// through the C interface in planarcalc.h; file parsing of its own inputs
// (coefficient lists) and report assembly use the vendored JSON header.
#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "planarcalc.h"

using nlohmann::json;

namespace {

struct cli_failure {
    pc_status status;
    std::string message;
};

[[noreturn]] void bail(pc_status st, const std::string& context) {
    throw cli_failure{st, context + ": " + pc_last_error()};
}

void check(pc_status st, const std::string& context) {
    if (st != PC_OK) bail(st, context);
}

std::string fnv_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_failure{PC_ERR_IO, "cannot open '" + path + "' for digest"};
    std::uint64_t h = 0xcbf29ce484222325ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json matrix_to_json(const pc_matrix* m) {
    int n = pc_matrix_dim(m);
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) {
            double re, im;
            check(pc_matrix_entry(m, i, j, &re, &im), "matrix entry");
            row.push_back(json::array({re, im}));
        }
        rows.push_back(row);
    }
    return json{{"n", n}, {"entries", rows}};
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw cli_failure{PC_ERR_IO, "cannot write '" + path + "'"};
    out << j.dump(2) << "\n";
}

struct report_builder {
    json report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit report_builder(const std::string& command) { report["command"] = command; }
    void input(const std::string& path) { report["inputs"][path] = fnv_digest(path); }
    void output(const std::string& key, const json& v) { report["outputs"][key] = v; }
    void finish() {
        report["wall_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << report.dump(2) << "\n";
    }
};

void embed_verify(report_builder& rb, const std::string& suite, unsigned long long seed) {
    char* rep = nullptr;
    pc_status st = pc_verify_run(suite.c_str(), seed, 0, 0, &rep);
    if (rep) {
        rb.report["verify"] = json::parse(rep);
        pc_string_free(rep);
    }
    if (st != PC_OK && st != PC_ERR_PRECONDITION) bail(st, "verify suite");
    if (st == PC_ERR_PRECONDITION)
        throw cli_failure{st, "invariant suite '" + suite + "' reported failures"};
}

// RAII for the C handles used below
template <typename T, void (*Free)(T*)>
struct handle {
    T* ptr = nullptr;
    ~handle() { Free(ptr); }
    T** slot() { return &ptr; }
    T* get() const { return ptr; }
};
using matrix_handle = handle<pc_matrix, pc_matrix_free>;
using domain_handle = handle<pc_domain, pc_domain_free>;
using solution_handle = handle<pc_solution, pc_solution_free>;
using trifield_handle = handle<pc_trifield, pc_trifield_free>;

int run(int argc, char** argv) {
    CLI::App app{"harmonic extension, matrix functional calculus, and triholomorphic fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    unsigned long long seed = 42;
    app.add_option("--seed", seed, "seed for sampled checks (default 42)");

    // ---- dirichlet ----
    auto* cmd_dirichlet = app.add_subcommand("dirichlet", "harmonic extension of boundary data");
    std::string domain_path, data_path, gen_name, out_csv, log_path;
    double tol = 1e-6;
    int nmax = 4096, samples = 1024;
    double grid_step = 0;
    cmd_dirichlet->add_option("--domain", domain_path, "domain JSON file")->required();
    cmd_dirichlet->add_option("--data", data_path, "boundary data JSON file");
    cmd_dirichlet->add_option("--gen", gen_name,
                              "generator: const, cos, sin, abs_z, re_z2, super_abs");
    cmd_dirichlet->add_option("--out", out_csv, "output grid CSV")->required();
    cmd_dirichlet->add_option("--log", log_path, "convergence log JSON path");
    cmd_dirichlet->add_option("--tol", tol, "overlap discrepancy tolerance (default 1e-6)");
    cmd_dirichlet->add_option("--nmax", nmax, "iteration cap (default 4096)");
    cmd_dirichlet->add_option("--samples", samples, "boundary samples per circle (default 1024)");
    cmd_dirichlet->add_option("--step", grid_step, "grid step (default: bounding box / 128)");
    bool no_lift = false;
    cmd_dirichlet->add_flag("--no-lift", no_lift,
                            "reject data that does not vanish at the seam corners");

    // ---- matrix commands ----
    std::string matrix_path, out_path, fn_name = "exp", coeffs_path;
    double radius = 0;
    long modes = 0;
    bool with_verify = false;
    auto add_matrix_cmd = [&](const char* name, const char* desc) {
        auto* c = app.add_subcommand(name, desc);
        c->add_option("--matrix", matrix_path, "matrix JSON file")->required();
        c->add_option("--out", out_path, "output JSON file");
        c->add_flag("--verify", with_verify, "run the module invariant suite into the report");
        return c;
    };
    auto* cmd_calculus = add_matrix_cmd("calculus", "holomorphic functional calculus");
    cmd_calculus->add_option("--fn", fn_name, "function: sqrt, exp, or poly");
    cmd_calculus->add_option("--coeffs", coeffs_path, "JSON array of polynomial coefficients");
    auto* cmd_sqrt = add_matrix_cmd("sqrt", "superpositive square root");
    auto* cmd_superabs = add_matrix_cmd("superabs", "superpositive absolute value");
    cmd_superabs->add_option("--radius", radius, "symbol circle radius (default ||x||)");
    cmd_superabs->add_option("--modes", modes, "symbol sample count (default 2^18)");
    auto* cmd_absval = add_matrix_cmd("absval", "ordinary absolute value by harmonic calculus");
    cmd_absval->add_option("--radius", radius, "symbol circle radius (default ||x||)");
    auto* cmd_realembed = add_matrix_cmd("realembed", "real block embedding");

    // ---- triholo ----
    auto* cmd_triholo = app.add_subcommand("triholo", "triholomorphic polynomial fields");
    cmd_triholo->require_subcommand(1);
    int degree = 2;
    std::string field_a, field_b, field_path, tri_out;
    auto* tri_basis = cmd_triholo->add_subcommand("basis", "nullspace basis of the constraint system");
    tri_basis->add_option("--degree", degree, "total degree bound (0..12)")->required();
    tri_basis->add_option("--out", tri_out, "output JSON file");
    auto* tri_check = cmd_triholo->add_subcommand("check", "constraint residuals of a field");
    tri_check->add_option("--field", field_path, "field JSON file")->required();
    auto* tri_product = cmd_triholo->add_subcommand("product", "product of two fields");
    tri_product->add_option("--a", field_a, "left factor JSON file")->required();
    tri_product->add_option("--b", field_b, "right factor JSON file")->required();
    tri_product->add_option("--out", tri_out, "output JSON file");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run module invariant suites");
    std::string only;
    int trials = 0, level = 0;
    cmd_verify->add_option("--only", only,
                           "run a single suite (geometry, disk, schwarz, calculus, harmonic, "
                           "realops / real-iso, triholo)");
    cmd_verify->add_option("--trials", trials, "isometry-check sample count (default 20)");
    cmd_verify->add_option("--level", level, "isometry-check amplification level (default 2)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_dirichlet->parsed()) {
        report_builder rb("dirichlet");
        rb.input(domain_path);
        if (!data_path.empty()) rb.input(data_path);
        if (data_path.empty() == gen_name.empty())
            throw cli_failure{PC_ERR_INVALID_INPUT, "give exactly one of --data or --gen"};
        domain_handle dom;
        check(pc_domain_load(domain_path.c_str(), dom.slot()), "load domain");
        solution_handle sol;
        check(pc_dirichlet_solve(dom.get(), data_path.empty() ? nullptr : data_path.c_str(),
                                 gen_name.empty() ? nullptr : gen_name.c_str(), tol, nmax,
                                 samples, no_lift ? 1 : 0, sol.slot()),
              "dirichlet solve");
        double x0, y0, x1, y1;
        check(pc_domain_bounds(dom.get(), &x0, &y0, &x1, &y1), "domain bounds");
        double step = grid_step > 0 ? grid_step : std::min(x1 - x0, y1 - y0) / 128.0;
        std::ofstream csv(out_csv);
        if (!csv) throw cli_failure{PC_ERR_IO, "cannot write '" + out_csv + "'"};
        csv << "x,y,value\n";
        csv.precision(12);
        long written = 0;
        for (double y = y0; y <= y1 + 1e-12; y += step)
            for (double x = x0; x <= x1 + 1e-12; x += step) {
                if (pc_domain_contains(dom.get(), x, y) != 1) continue;
                double re, im;
                if (pc_solution_eval(sol.get(), x, y, &re, &im) != PC_OK) continue;
                csv << x << "," << y << "," << re << "\n";
                ++written;
            }
        int iterations;
        double discrepancy, sup;
        check(pc_solution_stats(sol.get(), &iterations, &discrepancy, &sup), "solution stats");
        json conv{{"N", iterations}, {"overlap_discrepancy", discrepancy}, {"sup_norm", sup}};
        std::string lp = log_path.empty() ? out_csv + ".convergence.json" : log_path;
        write_json(lp, conv);
        rb.output("grid_csv", out_csv);
        rb.output("grid_points", written);
        rb.output("convergence", conv);
        rb.output("convergence_log", lp);
        rb.finish();
        return 0;
    }

    auto matrix_report = [&](const char* command,
                             const std::function<json(const pc_matrix*)>& body,
                             const std::string& verify_suite) {
        report_builder rb(command);
        rb.input(matrix_path);
        matrix_handle m;
        check(pc_matrix_load(matrix_path.c_str(), m.slot()), "load matrix");
        json out = body(m.get());
        if (!out_path.empty()) {
            write_json(out_path, out);
            rb.output("file", out_path);
        }
        rb.output("result", out);
        if (with_verify) embed_verify(rb, verify_suite, seed);
        rb.finish();
    };

    if (cmd_sqrt->parsed() || (cmd_calculus->parsed() && fn_name == "sqrt")) {
        matrix_report("sqrt", [&](const pc_matrix* m) {
            matrix_handle r;
            double eps, defect;
            int sp;
            check(pc_matrix_sqrt(m, r.slot(), &eps, &defect, &sp), "superpositive square root");
            json out = matrix_to_json(r.get());
            out["provenance"] = json{{"symbol", "sqrt(z + eps)"},
                                     {"epsilon", eps},
                                     {"defect", defect},
                                     {"root_superpositive", sp == 1}};
            return out;
        }, "calculus");
        return 0;
    }
    if (cmd_calculus->parsed()) {
        matrix_report("calculus", [&](const pc_matrix* m) {
            matrix_handle r;
            json prov{{"symbol", fn_name}};
            if (fn_name == "exp") {
                check(pc_matrix_exp(m, r.slot()), "exp calculus");
            } else if (fn_name == "poly") {
                if (coeffs_path.empty())
                    throw cli_failure{PC_ERR_INVALID_INPUT, "--fn poly needs --coeffs"};
                std::ifstream in(coeffs_path);
                if (!in) throw cli_failure{PC_ERR_IO, "cannot open '" + coeffs_path + "'"};
                json cj = json::parse(in, nullptr, false);
                if (cj.is_discarded() || !cj.is_array())
                    throw cli_failure{PC_ERR_SCHEMA, "coefficients must be a JSON array"};
                std::vector<double> re, im;
                for (const auto& v : cj) {
                    if (v.is_number()) {
                        re.push_back(v.get<double>());
                        im.push_back(0);
                    } else if (v.is_array() && v.size() == 2) {
                        re.push_back(v[0].get<double>());
                        im.push_back(v[1].get<double>());
                    } else {
                        throw cli_failure{PC_ERR_SCHEMA, "coefficient must be number or [re, im]"};
                    }
                }
                check(pc_matrix_poly(m, re.data(), im.data(), static_cast<int>(re.size()),
                                     r.slot()),
                      "polynomial calculus");
                prov["degree"] = re.size() - 1;
            } else {
                throw cli_failure{PC_ERR_INVALID_INPUT, "unknown --fn '" + fn_name + "'"};
            }
            json out = matrix_to_json(r.get());
            out["provenance"] = prov;
            return out;
        }, "calculus");
        return 0;
    }
    if (cmd_superabs->parsed()) {
        matrix_report("superabs", [&](const pc_matrix* m) {
            matrix_handle r;
            double rad_used, trunc;
            long modes_used;
            check(pc_matrix_superabs(m, radius, modes, r.slot(), &rad_used, &modes_used, &trunc),
                  "superpositive absolute value");
            json out = matrix_to_json(r.get());
            out["provenance"] = json{{"symbol", "super_abs"},
                                     {"radius", rad_used},
                                     {"modes", modes_used},
                                     {"truncation", trunc}};
            return out;
        }, "harmonic");
        return 0;
    }
    if (cmd_absval->parsed()) {
        matrix_report("absval", [&](const pc_matrix* m) {
            matrix_handle r;
            double rad_used;
            check(pc_matrix_absval(m, radius, r.slot(), &rad_used), "ordinary absolute value");
            json out = matrix_to_json(r.get());
            out["provenance"] =
                json{{"symbol", "abs_z"}, {"radius", rad_used}, {"modes", 64}, {"truncation", 0.0}};
            return out;
        }, "harmonic");
        return 0;
    }
    if (cmd_realembed->parsed()) {
        matrix_report("realembed", [&](const pc_matrix* m) {
            matrix_handle r;
            check(pc_matrix_real_embed(m, r.slot()), "real embedding");
            json out = matrix_to_json(r.get());
            out["provenance"] = json{{"symbol", "real_embed"}};
            return out;
        }, "realops");
        return 0;
    }

    if (tri_basis->parsed()) {
        report_builder rb("triholo basis");
        pc_trifield_list* list = nullptr;
        check(pc_triholo_basis(degree, &list), "basis computation");
        json fields = json::array();
        for (int i = 0; i < pc_trifield_list_size(list); ++i) {
            char* text = nullptr;
            check(pc_trifield_to_json(pc_trifield_list_get(list, i), &text), "field serialization");
            fields.push_back(json::parse(text));
            pc_string_free(text);
        }
        pc_trifield_list_free(list);
        json out{{"degree", degree}, {"dimension", fields.size()}, {"fields", fields}};
        if (!tri_out.empty()) {
            write_json(tri_out, out);
            rb.output("file", tri_out);
        }
        rb.output("degree", degree);
        rb.output("dimension", fields.size());
        if (tri_out.empty()) rb.output("basis", out);
        rb.finish();
        return 0;
    }
    if (tri_check->parsed()) {
        report_builder rb("triholo check");
        rb.input(field_path);
        trifield_handle t;
        check(pc_trifield_load(field_path.c_str(), t.slot()), "load field");
        double resid;
        int exact;
        check(pc_trifield_check(t.get(), &resid, &exact), "constraint check");
        rb.output("max_residual", resid);
        rb.output("exact_zero", exact == 1);
        rb.finish();
        return exact == 1 ? 0 : 2;
    }
    if (tri_product->parsed()) {
        report_builder rb("triholo product");
        rb.input(field_a);
        rb.input(field_b);
        trifield_handle a, b, p;
        check(pc_trifield_load(field_a.c_str(), a.slot()), "load left factor");
        check(pc_trifield_load(field_b.c_str(), b.slot()), "load right factor");
        check(pc_trifield_product(a.get(), b.get(), p.slot()), "field product");
        double resid;
        int exact;
        check(pc_trifield_check(p.get(), &resid, &exact), "product check");
        if (!tri_out.empty()) {
            check(pc_trifield_save(p.get(), tri_out.c_str()), "save product");
            rb.output("file", tri_out);
        }
        rb.output("check_exact_zero", exact == 1);
        rb.finish();
        return 0;
    }

    if (cmd_verify->parsed()) {
        report_builder rb("verify");
        char* rep = nullptr;
        pc_status st =
            pc_verify_run(only.empty() ? nullptr : only.c_str(), seed, trials, level, &rep);
        if (rep) {
            rb.report["verify"] = json::parse(rep);
            pc_string_free(rep);
        }
        if (st != PC_OK && st != PC_ERR_PRECONDITION) bail(st, "verify");
        rb.finish();
        return st == PC_OK ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cli_failure& e) {
        json err{{"error", e.message}, {"status", pc_status_name(e.status)}};
        std::cerr << err.dump(2) << "\n";
        return pc_status_exit_code(e.status);
    } catch (const std::exception& e) {
        json err{{"error", e.what()}, {"status", "internal"}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
