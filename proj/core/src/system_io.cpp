#include "torustransit/system_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "torustransit/errors.hpp"

namespace torustransit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InvalidInput("expected an integer or integer string");
}

ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Int(j.get<long>()));
    throw InvalidInput("expected a rational \"p/q\" string");
}

QVec qvec_from_json(const json& j) {
    QVec out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

ordered_json qvec_to_json(const QVec& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(format_rational(q));
    return arr;
}

}  // namespace

std::string system_to_json_text(const SkewProductSystem& sys) {
    ordered_json j;
    j["n"] = sys.dim();

    ordered_json base;
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < sys.base().dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t k = 0; k < sys.base().dim(); ++k) row.push_back(int_to_json(sys.base().matrix()(i, k)));
        rows.push_back(row);
    }
    base["matrix"] = rows;
    base["translation"] = qvec_to_json(sys.base().translation());
    j["base"] = base;

    ordered_json coupling = ordered_json::array();
    for (const auto& c : sys.coupling()) coupling.push_back(int_to_json(c));
    j["coupling"] = coupling;
    j["fiber_offset"] = format_rational(sys.fiber_offset());

    ordered_json fiber;
    fiber["breakpoints"] = qvec_to_json(sys.fiber().breakpoints());
    fiber["lift_values"] = qvec_to_json(sys.fiber().lift_values());
    j["fiber"] = fiber;
    return j.dump(2) + "\n";
}

SkewProductSystem system_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed system JSON: ") + e.what());
    }
    try {
        const size_t n = j.at("n").get<size_t>();
        if (n < 2) throw InvalidInput("system dimension must be at least 2");
        const auto& base = j.at("base");
        const auto& rows = base.at("matrix");
        const size_t m = rows.size();
        if (m != n - 1) throw InvalidInput("base matrix size must be n-1");
        IMat a(m, m);
        for (size_t i = 0; i < m; ++i) {
            if (rows[i].size() != m) throw InvalidInput("base matrix must be square");
            for (size_t k = 0; k < m; ++k) a(i, k) = int_from_json(rows[i][k]);
        }
        const QVec translation = qvec_from_json(base.at("translation"));

        IVec coupling;
        for (const auto& e : j.at("coupling")) coupling.push_back(int_from_json(e));
        const Rational offset = rational_from_json(j.at("fiber_offset"));

        PiecewiseLinearCircleMap fiber(qvec_from_json(j.at("fiber").at("breakpoints")),
                                       qvec_from_json(j.at("fiber").at("lift_values")));
        return SkewProductSystem(AffineBaseMap(std::move(a), translation), std::move(coupling),
                                 offset, std::move(fiber));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("system JSON missing fields: ") + e.what());
    }
}

SkewProductSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open system file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return system_from_json_text(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    out << text;
}

}  // namespace torustransit
