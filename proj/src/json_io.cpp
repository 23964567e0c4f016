#include "interlace/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace interlace {

namespace {

using nlohmann::json;

// 17 significant digits round-trips binary64 exactly.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fmt(v[i]);
    }
    s += "]";
    return s;
}

std::vector<double> real_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("matrix document: missing array \"") + key + "\"");
    std::vector<double> v;
    for (const auto& x : j[key]) {
        if (!x.is_number())
            throw std::invalid_argument(std::string("matrix document: non-numeric entry in \"") + key + "\"");
        v.push_back(x.get<double>());
    }
    return v;
}

} // namespace

std::string to_json(const SymmetricTridiagonal& T) {
    std::string s = "{\"kind\": \"symmetric_tridiagonal\", \"order\": " +
                    std::to_string(T.order());
    s += ", \"diag\": " + fmt(T.diag);
    s += ", \"offdiag\": " + fmt(T.offdiag);
    s += "}\n";
    return s;
}

std::string to_json(const GeneralTridiagonal& T) {
    std::string s = "{\"kind\": \"general_tridiagonal\", \"order\": " +
                    std::to_string(T.order());
    s += ", \"diag\": " + fmt(T.diag);
    s += ", \"superdiag\": " + fmt(T.superdiag);
    s += ", \"subdiag\": " + fmt(T.subdiag);
    s += "}\n";
    return s;
}

MatrixDocument matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("matrix document: missing \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    const auto order = j.value("order", std::size_t{0});
    if (kind == "symmetric_tridiagonal") {
        SymmetricTridiagonal T(real_array(j, "diag"), real_array(j, "offdiag"));
        if (order != T.order())
            throw std::invalid_argument("matrix document: order does not match diag length");
        return T;
    }
    if (kind == "general_tridiagonal") {
        GeneralTridiagonal T(real_array(j, "diag"), real_array(j, "superdiag"),
                             real_array(j, "subdiag"));
        if (order != T.order())
            throw std::invalid_argument("matrix document: order does not match diag length");
        return T;
    }
    throw std::invalid_argument("matrix document: unknown kind \"" + kind + "\"");
}

std::string to_json(const SpectrumPair& p) {
    return "{\"lambda\": " + fmt(p.lambda) + ", \"mu\": " + fmt(p.mu) + "}\n";
}

SpectrumPair spectra_from_json(const std::string& text) {
    json j = json::parse(text);
    return validate_interlacing(real_array(j, "lambda"), real_array(j, "mu"));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace interlace
