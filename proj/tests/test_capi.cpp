#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "planarcalc.h"

namespace {

struct temp_file {
    std::string path;
    explicit temp_file(const std::string& name, const std::string& content)
        : path("/tmp/planarcalc_capi_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~temp_file() { std::remove(path.c_str()); }
};

const char* kPaperMatrix = R"({"n": 2, "entries": [[[3, 0], [1, 0]], [[-1, 0], [1, 0]]]})";
const char* kTwoDisks = R"({"disks": [{"c": [0, 0], "r": 1}, {"c": [0.5, 0], "r": 1}]})";

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status taxonomy and exit codes") {
    CHECK(pc_status_exit_code(PC_OK) == 0);
    CHECK(pc_status_exit_code(PC_ERR_SCHEMA) == 1);
    CHECK(pc_status_exit_code(PC_ERR_IO) == 1);
    CHECK(pc_status_exit_code(PC_ERR_SEAM_CONDITION) == 2);
    CHECK(pc_status_exit_code(PC_ERR_CONVERGENCE_FAILURE) == 2);
    CHECK(std::string(pc_status_name(PC_ERR_SEAM_CONDITION)) == "seam-condition");
}

TEST_CASE("missing files surface as io errors with messages") {
    pc_matrix* m = nullptr;
    CHECK(pc_matrix_load("/nonexistent/m.json", &m) == PC_ERR_IO);
    CHECK(std::string(pc_last_error()).find("nonexistent") != std::string::npos);
    CHECK(m == nullptr);
}

TEST_CASE("square root of the worked matrix through the C surface") {
    temp_file f("paper.json", kPaperMatrix);
    pc_matrix* m = nullptr;
    REQUIRE(pc_matrix_load(f.path.c_str(), &m) == PC_OK);
    CHECK(pc_matrix_dim(m) == 2);

    int sp = 0;
    REQUIRE(pc_matrix_superpositive(m, &sp) == PC_OK);
    CHECK(sp == 1);

    pc_matrix* root = nullptr;
    double eps, defect;
    int rsp;
    REQUIRE(pc_matrix_sqrt(m, &root, &eps, &defect, &rsp) == PC_OK);
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    const double expect[2][2] = {{5 * s, s}, {-s, 3 * s}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double re, im;
            REQUIRE(pc_matrix_entry(root, i, j, &re, &im) == PC_OK);
            CHECK(std::abs(re - expect[i][j]) <= 1e-10);
            CHECK(std::abs(im) <= 1e-10);
        }
    CHECK(defect <= 1e-10);
    CHECK(rsp == 1);
    pc_matrix_free(root);

    double sr, norm;
    REQUIRE(pc_matrix_spectral_radius(m, &sr) == PC_OK);
    REQUIRE(pc_matrix_norm(m, &norm) == PC_OK);
    CHECK(std::abs(sr - 2.0) <= 1e-8);
    CHECK(norm > 2.0);
    pc_matrix_free(m);
}

TEST_CASE("polynomial calculus returns x for the identity coefficients") {
    temp_file f("paper2.json", kPaperMatrix);
    pc_matrix* m = nullptr;
    REQUIRE(pc_matrix_load(f.path.c_str(), &m) == PC_OK);
    const double cre[2] = {0, 1}, cim[2] = {0, 0};
    pc_matrix* r = nullptr;
    REQUIRE(pc_matrix_poly(m, cre, cim, 2, &r) == PC_OK);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double ar, ai, br, bi;
            pc_matrix_entry(m, i, j, &ar, &ai);
            pc_matrix_entry(r, i, j, &br, &bi);
            CHECK(std::abs(ar - br) <= 1e-11);
            CHECK(std::abs(ai - bi) <= 1e-11);
        }
    pc_matrix_free(r);
    pc_matrix_free(m);
}

TEST_CASE("non-superpositive input yields a precondition error") {
    double re[4] = {-1, 0, 0, -1};
    pc_matrix* m = nullptr;
    REQUIRE(pc_matrix_create(2, re, nullptr, &m) == PC_OK);
    pc_matrix* root = nullptr;
    CHECK(pc_matrix_sqrt(m, &root, nullptr, nullptr, nullptr) == PC_ERR_PRECONDITION);
    CHECK(root == nullptr);
    pc_matrix_free(m);
}

TEST_CASE("dirichlet solve on the two-disk union") {
    temp_file f("two.json", kTwoDisks);
    pc_domain* d = nullptr;
    REQUIRE(pc_domain_load(f.path.c_str(), &d) == PC_OK);
    CHECK(pc_domain_contains(d, 0.25, 0.0) == 1);
    CHECK(pc_domain_contains(d, 3.0, 0.0) == 0);

    pc_solution* sol = nullptr;
    REQUIRE(pc_dirichlet_solve(d, nullptr, "cos", 0, 512, 256, 0, &sol) == PC_OK);
    double re, im;
    REQUIRE(pc_solution_eval(sol, 0.25, 0.1, &re, &im) == PC_OK);
    CHECK(std::abs(re - 0.25) <= 1e-3);  // generator cos is the trace of Re z
    int iters;
    double disc, sup;
    REQUIRE(pc_solution_stats(sol, &iters, &disc, &sup) == PC_OK);
    CHECK(iters >= 1);
    pc_solution_free(sol);

    pc_solution* bad = nullptr;
    CHECK(pc_dirichlet_solve(d, nullptr, nullptr, 0, 0, 0, 0, &bad) == PC_ERR_INVALID_INPUT);
    pc_domain_free(d);
}

TEST_CASE("harmonic data reconstructs through the CLI-facing surface") {
    temp_file f("two2.json", kTwoDisks);
    pc_domain* d = nullptr;
    REQUIRE(pc_domain_load(f.path.c_str(), &d) == PC_OK);
    pc_solution* sol = nullptr;
    REQUIRE(pc_dirichlet_solve(d, nullptr, "re_z2", 0, 4096, 512, 0, &sol) == PC_OK);
    const double probes[][2] = {{0.25, 0.3}, {-0.4, -0.2}, {1.1, 0.1}, {0.2, -0.7}};
    for (const auto& p : probes) {
        double re, im;
        REQUIRE(pc_solution_eval(sol, p[0], p[1], &re, &im) == PC_OK);
        CHECK(std::abs(re - (p[0] * p[0] - p[1] * p[1])) <= 1e-3);
    }
    pc_solution_free(sol);

    // without the harmonic lift this data violates the seam condition
    pc_solution* rejected = nullptr;
    CHECK(pc_dirichlet_solve(d, nullptr, "re_z2", 0, 64, 256, 1, &rejected) ==
          PC_ERR_SEAM_CONDITION);
    CHECK(pc_status_exit_code(PC_ERR_SEAM_CONDITION) == 2);
    pc_domain_free(d);
}

TEST_CASE("triholomorphic basis and product through the C surface") {
    pc_trifield_list* list = nullptr;
    REQUIRE(pc_triholo_basis(1, &list) == PC_OK);
    CHECK(pc_trifield_list_size(list) == 6);

    const pc_trifield* a = pc_trifield_list_get(list, 0);
    REQUIRE(a != nullptr);
    pc_trifield* p = nullptr;
    REQUIRE(pc_trifield_product(a, a, &p) == PC_OK);
    double resid;
    int exact;
    REQUIRE(pc_trifield_check(p, &resid, &exact) == PC_OK);
    CHECK(exact == 1);
    int comp, comb;
    REQUIRE(pc_trifield_laplacian_flags(p, &comp, &comb) == PC_OK);
    CHECK(comp == 1);
    CHECK(comb == 1);

    char* text = nullptr;
    REQUIRE(pc_trifield_to_json(a, &text) == PC_OK);
    CHECK(std::string(text).find("\"f\"") != std::string::npos);
    pc_string_free(text);
    pc_trifield_free(p);
    pc_trifield_list_free(list);
}

TEST_CASE("verify run emits a report and an overall flag") {
    char* rep = nullptr;
    pc_status st = pc_verify_run("realops", 42, 0, 0, &rep);
    REQUIRE(rep != nullptr);
    CHECK(st == PC_OK);
    std::string s(rep);
    CHECK(s.find("\"suite\": \"realops\"") != std::string::npos);
    pc_string_free(rep);

    // the alias and explicit isometry parameters
    char* rep3 = nullptr;
    CHECK(pc_verify_run("real-iso", 42, 20, 2, &rep3) == PC_OK);
    pc_string_free(rep3);

    // a different seed changes samples, never verdicts
    char* rep4 = nullptr;
    CHECK(pc_verify_run("realops", 7, 0, 0, &rep4) == PC_OK);
    pc_string_free(rep4);

    char* rep2 = nullptr;
    CHECK(pc_verify_run("nonsense", 42, 0, 0, &rep2) == PC_ERR_INVALID_INPUT);
    CHECK(rep2 == nullptr);
}

}  // TEST_SUITE
