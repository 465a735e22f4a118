#ifndef PLANARCALC_JSON_IO_HPP
#define PLANARCALC_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "calculus.hpp"
#include "disk_harmonics.hpp"
#include "geometry.hpp"
#include "triholo.hpp"

namespace planarcalc {

using json = nlohmann::json;

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/** Matrix format: {"n": k, "entries": [[[re, im], ...], ...]}. */
cmatrix matrix_from_json(const json& j);
json matrix_to_json(const cmatrix& x);
cmatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const cmatrix& x);

/** Domain format: {"disks": [{"c": [re, im], "r": r}, ...],
 * "cuts": [{"p": [re, im], "dir": [dx, dy], "keep": "left"|"right"}, ...],
 * "fill": bool}; cuts and fill are optional. */
compact_set domain_from_json(const json& j);
json domain_to_json(const compact_set& s);
compact_set load_domain(const std::string& path);

/** Boundary data format: {"circle": {"c": [re, im], "r": r},
 * "samples": [[re, im], ...]}. */
boundary_samples boundary_data_from_json(const json& j);
json boundary_data_to_json(const boundary_samples& bd);
boundary_samples load_boundary_data(const std::string& path);

/** Field format: {"f": [[coef, ex, ey, ez], ...], "g": ..., "h": ...};
 * coefficients are JSON numbers or exact "p/q" strings. */
trifield trifield_from_json(const json& j);
json trifield_to_json(const trifield& t);
trifield load_trifield(const std::string& path);
void save_trifield(const std::string& path, const trifield& t);

rational rational_from_json(const json& v);
json rational_to_json(const rational& r);

/** FNV-1a digest of a file, for report provenance. */
std::string file_digest(const std::string& path);

}  // namespace planarcalc

#endif
