#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace planarcalc {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(errc::schema, "parse error in '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

namespace {

cplx complex_from_json(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(errc::schema, std::string(what) + " must be a [re, im] pair");
    return {v[0].get<double>(), v[1].get<double>()};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

cmatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        fail(errc::schema, "matrix file needs fields 'n' and 'entries'");
    long n = j["n"].get<long>();
    if (n <= 0 || n > 4096) fail(errc::schema, "matrix dimension out of range");
    const auto& e = j["entries"];
    if (!e.is_array() || static_cast<long>(e.size()) != n)
        fail(errc::schema, "'entries' must hold n rows");
    cmatrix x(n, n);
    for (long i = 0; i < n; ++i) {
        const auto& row = e[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != n)
            fail(errc::schema, "matrix row " + std::to_string(i) + " must hold n entries");
        for (long k = 0; k < n; ++k)
            x(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], "matrix entry");
    }
    check_finite(x);
    return x;
}

json matrix_to_json(const cmatrix& x) {
    json rows = json::array();
    for (long i = 0; i < x.rows(); ++i) {
        json row = json::array();
        for (long k = 0; k < x.cols(); ++k) row.push_back(complex_to_json(x(i, k)));
        rows.push_back(row);
    }
    return json{{"n", x.rows()}, {"entries", rows}};
}

cmatrix load_matrix(const std::string& path) { return matrix_from_json(load_json_file(path)); }

void save_matrix(const std::string& path, const cmatrix& x) {
    save_json_file(path, matrix_to_json(x));
}

compact_set domain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("disks"))
        fail(errc::schema, "domain file needs a 'disks' array");
    std::vector<disk> disks;
    for (const auto& d : j["disks"]) {
        if (!d.contains("c") || !d.contains("r"))
            fail(errc::schema, "each disk needs 'c' and 'r'");
        disks.push_back({complex_from_json(d["c"], "disk center"), d["r"].get<double>()});
    }
    compact_set s = compact_set::disk_union(disks);
    if (j.contains("cuts")) {
        for (const auto& c : j["cuts"]) {
            if (!c.contains("p") || !c.contains("dir"))
                fail(errc::schema, "each cut needs 'p' and 'dir'");
            std::string keep = c.value("keep", "left");
            if (keep != "left" && keep != "right")
                fail(errc::schema, "cut 'keep' must be 'left' or 'right'");
            s = s.cut({complex_from_json(c["p"], "cut point"),
                       complex_from_json(c["dir"], "cut direction"), keep == "left"});
        }
    }
    if (j.value("fill", false)) s = s.filled();
    return s;
}

json domain_to_json(const compact_set& s) {
    if (s.cells().size() != 1)
        fail(errc::invalid_input, "only single-cell domains have a file representation");
    json disks = json::array();
    for (const auto& d : s.cells()[0].disks)
        disks.push_back(json{{"c", complex_to_json(d.center)}, {"r", d.radius}});
    json cuts = json::array();
    for (const auto& h : s.cells()[0].cuts)
        cuts.push_back(json{{"p", complex_to_json(h.point)},
                            {"dir", complex_to_json(h.dir)},
                            {"keep", h.keep_left ? "left" : "right"}});
    return json{{"disks", disks}, {"cuts", cuts}, {"fill", s.is_filled()}};
}

compact_set load_domain(const std::string& path) { return domain_from_json(load_json_file(path)); }

boundary_samples boundary_data_from_json(const json& j) {
    if (!j.is_object() || !j.contains("circle") || !j.contains("samples"))
        fail(errc::schema, "boundary data file needs 'circle' and 'samples'");
    const auto& c = j["circle"];
    if (!c.contains("c") || !c.contains("r"))
        fail(errc::schema, "'circle' needs 'c' and 'r'");
    disk circle{complex_from_json(c["c"], "circle center"), c["r"].get<double>()};
    std::vector<cplx> samples;
    for (const auto& v : j["samples"]) samples.push_back(complex_from_json(v, "sample"));
    return boundary_samples(circle, std::move(samples));
}

json boundary_data_to_json(const boundary_samples& bd) {
    json samples = json::array();
    for (const auto& v : bd.values()) samples.push_back(complex_to_json(v));
    return json{{"circle", json{{"c", complex_to_json(bd.circle().center)}, {"r", bd.circle().radius}}},
                {"samples", samples}};
}

boundary_samples load_boundary_data(const std::string& path) {
    return boundary_data_from_json(load_json_file(path));
}

rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return rational(v.get<long long>());
    if (v.is_number_float()) {
        // decimal literals are converted exactly through their text form
        double d = v.get<double>();
        std::ostringstream ss;
        ss.precision(17);
        ss << d;
        std::string s = ss.str();
        auto dot = s.find('.');
        auto exp = s.find('e');
        if (exp != std::string::npos || dot == std::string::npos) {
            // fall back to the exact binary value
            int e2 = 0;
            double m = std::frexp(d, &e2);
            long long mant = static_cast<long long>(std::ldexp(m, 53));
            rational r(mant);
            e2 -= 53;
            const rational two(2);
            for (int i = 0; i < std::abs(e2); ++i) {
                if (e2 > 0)
                    r *= two;
                else
                    r /= two;
            }
            return r;
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        int frac = static_cast<int>(s.size() - dot - 1);
        rational r{boost::multiprecision::cpp_int(digits)};
        boost::multiprecision::cpp_int den(1);
        for (int i = 0; i < frac; ++i) den *= 10;
        return r / rational(den);
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return rational(boost::multiprecision::cpp_int(s));
            return rational(boost::multiprecision::cpp_int(s.substr(0, slash))) /
                   rational(boost::multiprecision::cpp_int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            fail(errc::schema, "bad rational literal '" + s + "'");
        }
    }
    fail(errc::schema, "coefficient must be a number or a 'p/q' string");
}

json rational_to_json(const rational& r) {
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(r), den = denominator(r);
    if (den == 1 && num >= cpp_int(-(1ll << 53)) && num <= cpp_int(1ll << 53))
        return json(num.convert_to<long long>());
    return json(num.str() + "/" + den.str());
}

trifield trifield_from_json(const json& j) {
    if (!j.is_object()) fail(errc::schema, "field file must be an object with 'f', 'g', 'h'");
    trifield t;
    for (auto [name, poly] : {std::pair{"f", &t.f}, {"g", &t.g}, {"h", &t.h}}) {
        if (!j.contains(name)) continue;  // missing component means zero
        for (const auto& term : j.at(name)) {
            if (!term.is_array() || term.size() != 4)
                fail(errc::schema, "each term must be [coef, ex, ey, ez]");
            monomial m{term[1].get<int>(), term[2].get<int>(), term[3].get<int>()};
            if (m.ex < 0 || m.ey < 0 || m.ez < 0 || m.degree() > 64)
                fail(errc::schema, "monomial exponents out of range");
            poly->add_term(m, rational_from_json(term[0]));
        }
    }
    return t;
}

json trifield_to_json(const trifield& t) {
    auto poly_to_json = [](const tripoly& p) {
        json terms = json::array();
        for (const auto& [m, c] : p.terms())
            terms.push_back(json::array({rational_to_json(c), m.ex, m.ey, m.ez}));
        return terms;
    };
    return json{{"f", poly_to_json(t.f)}, {"g", poly_to_json(t.g)}, {"h", poly_to_json(t.h)}};
}

trifield load_trifield(const std::string& path) {
    return trifield_from_json(load_json_file(path));
}

void save_trifield(const std::string& path, const trifield& t) {
    save_json_file(path, trifield_to_json(t));
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot open '" + path + "' for digest");
    std::uint64_t h = 0xcbf29ce484222325ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    std::ostringstream ss;
    ss << std::hex << h;
    return "fnv1a:" + ss.str();
}

}  // namespace planarcalc
