#include "model_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "deltaspin/spinspace.hpp"

namespace deltaspin {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("field '" + field + "' must be a two-element [re, im] array of numbers");
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParseError("field '" + field + "' has a non-finite entry");
    return z;
}

}  // namespace

Matrix ModelFile::h() const {
    if (spin_half) return build_spin_half_h(*spin_half);
    return *explicit_h;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file '" + path + "'");

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("model file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw ParseError("model file must be a JSON object");

    ModelFile file;

    if (!doc.contains("statistics") || !doc["statistics"].is_string())
        throw ParseError("field 'statistics' is required and must be \"bose\" or \"fermi\"");
    const std::string stats = doc["statistics"].get<std::string>();
    if (stats == "bose")
        file.statistics = Statistics::Bose;
    else if (stats == "fermi")
        file.statistics = Statistics::Fermi;
    else
        throw ParseError("field 'statistics' must be \"bose\" or \"fermi\", got \"" + stats + "\"");

    const bool has_params = doc.contains("spin_half_params");
    const bool has_h = doc.contains("h") || doc.contains("n");
    if (has_params == has_h)
        throw ParseError("exactly one of 'spin_half_params' and ('n', 'h') must be present");

    if (has_params) {
        const json& p = doc["spin_half_params"];
        if (!p.is_object()) throw ParseError("'spin_half_params' must be an object");
        SpinHalfParams sp;
        auto get = [&](const char* key) {
            if (!p.contains(key))
                throw ParseError(std::string("'spin_half_params' is missing parameter '") + key + "'");
            return parse_complex(p[key], std::string("spin_half_params.") + key);
        };
        sp.a = get("a");
        sp.b = get("b");
        sp.c = get("c");
        sp.d = get("d");
        sp.f = get("f");
        sp.g = get("g");
        sp.e1 = get("e1");
        sp.e2 = get("e2");
        sp.e3 = get("e3");
        sp.e4 = get("e4");
        file.spin_half = sp;
    } else {
        if (!doc.contains("n") || !doc["n"].is_number_integer())
            throw ParseError("explicit models need an integer field 'n' (spin components)");
        const int n = doc["n"].get<int>();
        if (n < 1) throw ParseError("field 'n' must be a positive integer");
        if (!doc.contains("h") || !doc["h"].is_array())
            throw ParseError("explicit models need 'h' as an array of rows");
        const json& rows = doc["h"];
        const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
        if (static_cast<Eigen::Index>(rows.size()) != d)
            throw ParseError("h must be n^2 x n^2 (= " + std::to_string(d) + " x " +
                             std::to_string(d) + " for n = " + std::to_string(n) + "); got " +
                             std::to_string(rows.size()) + " rows");
        Matrix h(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            const json& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
                throw ParseError("h row " + std::to_string(r) + " must have n^2 = " +
                                 std::to_string(d) + " entries");
            for (Eigen::Index c = 0; c < d; ++c)
                h(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                        "h[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
        file.explicit_n = n;
        file.explicit_h = std::move(h);
    }

    if (doc.contains("N")) {
        if (!doc["N"].is_number_integer() || doc["N"].get<int>() < 2)
            throw ParseError("field 'N' must be an integer >= 2");
        file.N = doc["N"].get<int>();
    }
    return file;
}

ManyBodyModel to_model(const ModelFile& file, int N) {
    return ManyBodyModel(N, file.n(), file.h(), file.statistics);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char byte;
    while (in.get(byte)) {
        hash ^= static_cast<unsigned char>(byte);
        hash *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << hash;
    return out.str();
}

}  // namespace deltaspin
