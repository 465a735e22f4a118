#include "planarcalc.h"

#include <cstring>
#include <string>

#include "../core/dirichlet.hpp"
#include "../core/error.hpp"
#include "../core/harmonic_calculus.hpp"
#include "../core/json_io.hpp"
#include "../core/real_ops.hpp"
#include "../core/rng.hpp"
#include "../core/triholo.hpp"
#include "../core/verify.hpp"

using namespace planarcalc;

struct pc_matrix {
    cmatrix m;
};
struct pc_domain {
    compact_set s;
};
struct pc_solution {
    harmonic_solution sol;
};
struct pc_trifield {
    trifield t;
};
struct pc_trifield_list {
    std::vector<pc_trifield> fields;
};

namespace {

thread_local std::string g_last_error;

pc_status to_status(errc c) {
    switch (c) {
        case errc::ok: return PC_OK;
        case errc::invalid_input: return PC_ERR_INVALID_INPUT;
        case errc::io: return PC_ERR_IO;
        case errc::schema: return PC_ERR_SCHEMA;
        case errc::domain: return PC_ERR_DOMAIN;
        case errc::degenerate_geometry: return PC_ERR_DEGENERATE_GEOMETRY;
        case errc::seam_condition: return PC_ERR_SEAM_CONDITION;
        case errc::invalid_decomposition: return PC_ERR_INVALID_DECOMPOSITION;
        case errc::near_singular: return PC_ERR_NEAR_SINGULAR;
        case errc::quadrature_failure: return PC_ERR_QUADRATURE_FAILURE;
        case errc::convergence_failure: return PC_ERR_CONVERGENCE_FAILURE;
        case errc::precondition: return PC_ERR_PRECONDITION;
        case errc::symbol_domain: return PC_ERR_SYMBOL_DOMAIN;
        case errc::truncation_failure: return PC_ERR_TRUNCATION_FAILURE;
        case errc::resolution: return PC_ERR_RESOLUTION;
        case errc::reflection_incompatible: return PC_ERR_REFLECTION_INCOMPATIBLE;
        case errc::internal: return PC_ERR_INTERNAL;
    }
    return PC_ERR_INTERNAL;
}

template <typename F>
pc_status guarded(F&& body) {
    try {
        body();
        return PC_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return PC_ERR_INTERNAL;
    }
}

pc_status require(bool cond, const char* msg) {
    if (cond) return PC_OK;
    g_last_error = msg;
    return PC_ERR_INVALID_INPUT;
}

}  // namespace

extern "C" {

const char* pc_last_error(void) { return g_last_error.c_str(); }

const char* pc_status_name(pc_status s) {
    switch (s) {
        case PC_OK: return "ok";
        case PC_ERR_INVALID_INPUT: return "invalid-input";
        case PC_ERR_IO: return "io";
        case PC_ERR_SCHEMA: return "schema";
        case PC_ERR_DOMAIN: return "domain";
        case PC_ERR_DEGENERATE_GEOMETRY: return "degenerate-geometry";
        case PC_ERR_SEAM_CONDITION: return "seam-condition";
        case PC_ERR_INVALID_DECOMPOSITION: return "invalid-decomposition";
        case PC_ERR_NEAR_SINGULAR: return "near-singular";
        case PC_ERR_QUADRATURE_FAILURE: return "quadrature-failure";
        case PC_ERR_CONVERGENCE_FAILURE: return "convergence-failure";
        case PC_ERR_PRECONDITION: return "precondition";
        case PC_ERR_SYMBOL_DOMAIN: return "symbol-domain";
        case PC_ERR_TRUNCATION_FAILURE: return "truncation-failure";
        case PC_ERR_RESOLUTION: return "resolution";
        case PC_ERR_REFLECTION_INCOMPATIBLE: return "reflection-incompatible";
        case PC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

int pc_status_exit_code(pc_status s) {
    if (s == PC_OK) return 0;
    if (s == PC_ERR_INVALID_INPUT || s == PC_ERR_IO || s == PC_ERR_SCHEMA) return 1;
    return 2;
}

/* ------------------------------------------------------------------ */

pc_status pc_matrix_load(const char* path, pc_matrix** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new pc_matrix{load_matrix(path)}; });
}

pc_status pc_matrix_create(int n, const double* re, const double* im, pc_matrix** out) {
    if (auto s = require(n > 0 && re && out, "null argument")) return s;
    return guarded([&] {
        cmatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = cplx(re[i * n + j], im ? im[i * n + j] : 0.0);
        check_finite(m);
        *out = new pc_matrix{std::move(m)};
    });
}

pc_status pc_matrix_save(const pc_matrix* m, const char* path) {
    if (auto s = require(m && path, "null argument")) return s;
    return guarded([&] { save_matrix(path, m->m); });
}

void pc_matrix_free(pc_matrix* m) { delete m; }

int pc_matrix_dim(const pc_matrix* m) { return m ? static_cast<int>(m->m.rows()) : 0; }

pc_status pc_matrix_entry(const pc_matrix* m, int i, int j, double* re, double* im) {
    if (auto s = require(m && re && im, "null argument")) return s;
    if (auto s = require(i >= 0 && j >= 0 && i < m->m.rows() && j < m->m.cols(),
                         "index out of range"))
        return s;
    *re = m->m(i, j).real();
    *im = m->m(i, j).imag();
    return PC_OK;
}

pc_status pc_matrix_spectrum(const pc_matrix* m, double* re, double* im) {
    if (auto s = require(m && re && im, "null argument")) return s;
    return guarded([&] {
        auto sp = spectrum(m->m);
        for (std::size_t i = 0; i < sp.points.size(); ++i) {
            re[i] = sp.points[i].real();
            im[i] = sp.points[i].imag();
        }
    });
}

pc_status pc_matrix_norm(const pc_matrix* m, double* out) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] { *out = operator_norm(m->m); });
}

pc_status pc_matrix_spectral_radius(const pc_matrix* m, double* out) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] { *out = spectral_radius(m->m); });
}

pc_status pc_matrix_star_normal(const pc_matrix* m, int* normal, double* defect) {
    if (auto s = require(m && normal && defect, "null argument")) return s;
    return guarded([&] {
        auto r = is_star_normal(m->m);
        *normal = r.normal ? 1 : 0;
        *defect = r.defect;
    });
}

pc_status pc_matrix_superpositive(const pc_matrix* m, int* flag) {
    if (auto s = require(m && flag, "null argument")) return s;
    return guarded([&] { *flag = superpositive_check(m->m) ? 1 : 0; });
}

pc_status pc_matrix_sqrt(const pc_matrix* m, pc_matrix** out, double* epsilon, double* defect,
                         int* root_superpositive) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] {
        auto rep = sqrt_superpositive(m->m);
        if (epsilon) *epsilon = rep.epsilon;
        if (defect) *defect = rep.defect;
        if (root_superpositive) *root_superpositive = rep.root_superpositive ? 1 : 0;
        *out = new pc_matrix{std::move(rep.root)};
    });
}

pc_status pc_matrix_exp(const pc_matrix* m, pc_matrix** out) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] {
        *out = new pc_matrix{holo_calc(m->m, [](cplx z) { return std::exp(z); })};
    });
}

pc_status pc_matrix_poly(const pc_matrix* m, const double* coef_re, const double* coef_im,
                         int ncoef, pc_matrix** out) {
    if (auto s = require(m && coef_re && ncoef > 0 && out, "null argument")) return s;
    return guarded([&] {
        std::vector<cplx> c(static_cast<std::size_t>(ncoef));
        for (int k = 0; k < ncoef; ++k) c[static_cast<std::size_t>(k)] = cplx(coef_re[k], coef_im ? coef_im[k] : 0.0);
        auto f = [&c](cplx z) {
            cplx s = 0;
            for (std::size_t k = c.size(); k-- > 0;) s = s * z + c[k];
            return s;
        };
        *out = new pc_matrix{holo_calc(m->m, f)};
    });
}

pc_status pc_matrix_superabs(const pc_matrix* m, double radius, long modes, pc_matrix** out,
                             double* radius_used, long* modes_used, double* truncation) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] {
        auto rep = superpositive_abs(m->m,
                                     radius > 0 ? std::optional<double>(radius) : std::nullopt,
                                     modes > 0 ? std::optional<std::size_t>(static_cast<std::size_t>(modes))
                                               : std::nullopt);
        if (radius_used) *radius_used = rep.radius;
        if (modes_used) *modes_used = static_cast<long>(rep.modes);
        if (truncation) *truncation = rep.truncation_bound;
        *out = new pc_matrix{std::move(rep.result)};
    });
}

pc_status pc_matrix_absval(const pc_matrix* m, double radius, pc_matrix** out,
                           double* radius_used) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] {
        auto rep = ordinary_abs(m->m, radius > 0 ? std::optional<double>(radius) : std::nullopt);
        if (radius_used) *radius_used = rep.radius;
        *out = new pc_matrix{std::move(rep.result)};
    });
}

pc_status pc_matrix_real_embed(const pc_matrix* m, pc_matrix** out) {
    if (auto s = require(m && out, "null argument")) return s;
    return guarded([&] { *out = new pc_matrix{real_embed(m->m).cast<cplx>()}; });
}

pc_status pc_isometry_defect(const pc_matrix* m, int level, int trials,
                             unsigned long long seed, double* defect) {
    if (auto s = require(m && defect && trials > 0, "null argument")) return s;
    return guarded([&] {
        rng gen(seed);
        *defect = isometry_check(m->m, level, trials, gen).max_defect;
    });
}

/* ------------------------------------------------------------------ */

pc_status pc_domain_load(const char* path, pc_domain** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new pc_domain{load_domain(path)}; });
}

void pc_domain_free(pc_domain* d) { delete d; }

int pc_domain_contains(const pc_domain* d, double x, double y) {
    if (!d) return -1;
    try {
        return d->s.contains(cplx(x, y)) ? 1 : 0;
    } catch (...) {
        return -1;
    }
}

pc_status pc_domain_bounds(const pc_domain* d, double* x0, double* y0, double* x1, double* y1) {
    if (auto s = require(d && x0 && y0 && x1 && y1, "null argument")) return s;
    auto [lo, hi] = d->s.bounding_box();
    *x0 = lo.real();
    *y0 = lo.imag();
    *x1 = hi.real();
    *y1 = hi.imag();
    return PC_OK;
}

pc_status pc_dirichlet_solve(const pc_domain* d, const char* data_path, const char* generator,
                             double tol, int n_max, int samples, int no_lift,
                             pc_solution** out) {
    if (auto s = require(d && out, "null argument")) return s;
    if (auto s = require((data_path != nullptr) != (generator != nullptr),
                         "give exactly one of a data file or a generator"))
        return s;
    return guarded([&] {
        solve_options opts;
        if (tol > 0) opts.tol = tol;
        if (n_max > 0) opts.n_max = n_max;
        if (samples > 0) opts.samples = samples;
        if (no_lift) opts.seam_lift = false;
        boundary_fn f;
        std::shared_ptr<boundary_samples> bd;
        if (data_path) {
            bd = std::make_shared<boundary_samples>(load_boundary_data(data_path));
            f = [bd](cplx z) { return bd->interpolate(std::arg(z - bd->circle().center)); };
        } else {
            std::string name = generator;
            f = [name](cplx z) { return generator_value(name, z); };
        }
        *out = new pc_solution{solve_dirichlet(d->s, f, opts)};
    });
}

pc_status pc_solution_eval(const pc_solution* s, double x, double y, double* re, double* im) {
    if (auto st = require(s && re && im, "null argument")) return st;
    return guarded([&] {
        cplx v = s->sol.evaluate(cplx(x, y));
        *re = v.real();
        *im = v.imag();
    });
}

pc_status pc_solution_stats(const pc_solution* s, int* iterations, double* overlap_discrepancy,
                            double* sup_norm) {
    if (auto st = require(s != nullptr, "null argument")) return st;
    if (iterations) *iterations = s->sol.iterations_used();
    if (overlap_discrepancy) *overlap_discrepancy = s->sol.overlap_discrepancy();
    if (sup_norm) *sup_norm = s->sol.sup_norm();
    return PC_OK;
}

void pc_solution_free(pc_solution* s) { delete s; }

/* ------------------------------------------------------------------ */

pc_status pc_trifield_load(const char* path, pc_trifield** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new pc_trifield{load_trifield(path)}; });
}

pc_status pc_trifield_save(const pc_trifield* t, const char* path) {
    if (auto s = require(t && path, "null argument")) return s;
    return guarded([&] { save_trifield(path, t->t); });
}

pc_status pc_trifield_to_json(const pc_trifield* t, char** out) {
    if (auto s = require(t && out, "null argument")) return s;
    return guarded([&] {
        std::string text = trifield_to_json(t->t).dump(2);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

void pc_trifield_free(pc_trifield* t) { delete t; }

pc_status pc_trifield_check(const pc_trifield* t, double* max_residual, int* exact_zero) {
    if (auto s = require(t != nullptr, "null argument")) return s;
    return guarded([&] {
        auto rep = triholo_check(t->t);
        if (max_residual) *max_residual = rep.max_residual;
        if (exact_zero) *exact_zero = rep.exact_zero ? 1 : 0;
    });
}

pc_status pc_trifield_product(const pc_trifield* a, const pc_trifield* b, pc_trifield** out) {
    if (auto s = require(a && b && out, "null argument")) return s;
    return guarded([&] { *out = new pc_trifield{triholo_product(a->t, b->t)}; });
}

pc_status pc_trifield_eval(const pc_trifield* t, double x, double y, double z, double* re,
                           double* im) {
    if (auto s = require(t && re && im, "null argument")) return s;
    return guarded([&] {
        auto v = complex_evaluate(t->t, x, y, z);
        *re = v.real();
        *im = v.imag();
    });
}

pc_status pc_trifield_laplacian_flags(const pc_trifield* t, int* componentwise,
                                      int* combination_zero) {
    if (auto s = require(t != nullptr, "null argument")) return s;
    return guarded([&] {
        auto rep = laplacian_report(t->t);
        if (componentwise) *componentwise = rep.componentwise_identity ? 1 : 0;
        if (combination_zero) *combination_zero = rep.complex_combination_zero ? 1 : 0;
    });
}

pc_status pc_triholo_basis(int degree, pc_trifield_list** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        auto basis = triholo_basis(degree);
        auto* list = new pc_trifield_list;
        for (auto& t : basis) list->fields.push_back(pc_trifield{std::move(t)});
        *out = list;
    });
}

int pc_trifield_list_size(const pc_trifield_list* l) {
    return l ? static_cast<int>(l->fields.size()) : 0;
}

const pc_trifield* pc_trifield_list_get(const pc_trifield_list* l, int i) {
    if (!l || i < 0 || i >= static_cast<int>(l->fields.size())) return nullptr;
    return &l->fields[static_cast<std::size_t>(i)];
}

void pc_trifield_list_free(pc_trifield_list* l) { delete l; }

/* ------------------------------------------------------------------ */

pc_status pc_verify_run(const char* only, unsigned long long seed, int trials, int level,
                        char** json_report) {
    if (auto s = require(json_report != nullptr, "null argument")) return s;
    *json_report = nullptr;
    std::string report;
    bool all_pass = true;
    pc_status st = guarded([&] {
        verify_options opts;
        if (trials > 0) opts.isometry_trials = trials;
        if (level > 0) opts.isometry_level = level;
        auto results = run_verify(only ? only : "", seed, opts);
        json suites = json::array();
        for (const auto& sr : results) {
            json checks = json::array();
            for (const auto& c : sr.checks) {
                checks.push_back(json{{"defect", c.defect}, {"name", c.name}, {"pass", c.pass}});
                if (!c.pass) all_pass = false;
            }
            suites.push_back(json{{"checks", checks}, {"pass", sr.all_pass()}, {"suite", sr.suite}});
        }
        json j{{"pass", all_pass}, {"seed", seed}, {"suites", suites}};
        report = j.dump(2);
    });
    if (st != PC_OK) return st;
    char* buf = new char[report.size() + 1];
    std::memcpy(buf, report.c_str(), report.size() + 1);
    *json_report = buf;
    if (!all_pass) {
        g_last_error = "one or more invariant checks failed";
        return PC_ERR_PRECONDITION;
    }
    return PC_OK;
}

void pc_string_free(char* s) { delete[] s; }

}  // extern "C"
