#ifndef PLANARCALC_ERROR_HPP
#define PLANARCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace planarcalc {

/** Error categories shared with the C API (keep in sync with pc_status in
 * include/planarcalc.h). Codes <= err_schema map to CLI exit code 1 (input
 * errors), the rest to exit code 2 (numerical / solver failures). */
enum class errc {
    ok = 0,
    invalid_input,
    io,
    schema,
    domain,
    degenerate_geometry,
    seam_condition,
    invalid_decomposition,
    near_singular,
    quadrature_failure,
    convergence_failure,
    precondition,
    symbol_domain,
    truncation_failure,
    resolution,
    reflection_incompatible,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }
    /** True for errors caused by bad inputs rather than numerical failure. */
    bool is_input_error() const {
        return code_ == errc::invalid_input || code_ == errc::io ||
               code_ == errc::schema;
    }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::invalid_input: return "invalid-input";
        case errc::io: return "io";
        case errc::schema: return "schema";
        case errc::domain: return "domain";
        case errc::degenerate_geometry: return "degenerate-geometry";
        case errc::seam_condition: return "seam-condition";
        case errc::invalid_decomposition: return "invalid-decomposition";
        case errc::near_singular: return "near-singular";
        case errc::quadrature_failure: return "quadrature-failure";
        case errc::convergence_failure: return "convergence-failure";
        case errc::precondition: return "precondition";
        case errc::symbol_domain: return "symbol-domain";
        case errc::truncation_failure: return "truncation-failure";
        case errc::resolution: return "resolution";
        case errc::reflection_incompatible: return "reflection-incompatible";
        case errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace planarcalc

#endif
