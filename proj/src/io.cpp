#include "symband/io.hpp"

#include <charconv>
#include <fstream>

namespace symband {

using nlohmann::json;

namespace {

std::string entry_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer() || v.is_number_unsigned() || v.is_number_float()) return v.dump();
    raise(ErrorKind::ParseError, where + ": entries must be strings or numbers");
}

std::vector<std::string> entry_list(const json& arr, const std::string& where) {
    if (!arr.is_array()) raise(ErrorKind::ParseError, where + " must be an array");
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(entry_text(v, where));
    return out;
}

int parse_offset(const std::string& key) {
    int o = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), o);
    if (ec != std::errc() || ptr != key.data() + key.size())
        raise(ErrorKind::ShapeError, "diagonal key '" + key + "' is not an integer offset");
    return o;
}

}  // namespace

SystemText system_text_from_json(const json& j) {
    if (!j.is_object()) raise(ErrorKind::ParseError, "system must be a JSON object");
    for (const char* key : {"n", "w", "diagonals", "rhs"})
        if (!j.contains(key)) raise(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    if (!j["n"].is_number_integer() || !j["w"].is_number_integer())
        raise(ErrorKind::ParseError, "'n' and 'w' must be integers");
    SystemText text;
    text.n = j["n"].get<long long>();
    text.w = j["w"].get<int>();
    check_size(text.n, text.w);
    if (!j["diagonals"].is_object()) raise(ErrorKind::ParseError, "'diagonals' must be an object");
    for (const auto& [key, arr] : j["diagonals"].items()) {
        const int o = parse_offset(key);
        if (o < -text.w || o > text.w)
            raise(ErrorKind::ShapeError, "diagonal offset " + key + " outside -w..w");
        if (text.diagonals.count(o)) raise(ErrorKind::ShapeError, "duplicate diagonal offset " + key);
        text.diagonals[o] = entry_list(arr, "diagonal " + key);
    }
    text.rhs = entry_list(j["rhs"], "rhs");
    return text;
}

json system_to_json(const ExactSystem& sys) {
    json diagonals = json::object();
    for (int o = -sys.w(); o <= sys.w(); ++o) {
        json arr = json::array();
        for (const auto& v : sys.diag(o).snapshot()) arr.push_back(to_string(v));
        diagonals[std::to_string(o)] = std::move(arr);
    }
    json rhs = json::array();
    for (const auto& v : sys.rhs().snapshot()) rhs.push_back(to_string(v));
    return json{{"n", sys.n()}, {"w", sys.w()}, {"diagonals", std::move(diagonals)}, {"rhs", std::move(rhs)}};
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

json solution_to_json(const SolveResult<Rational>& r) {
    json sol = json::array();
    for (const auto& v : r.solution) sol.push_back(to_string(v));
    return json{{"solution", std::move(sol)},
                {"det", to_string(r.det)},
                {"substituted_pivots", r.substituted_pivots},
                {"backend", to_string(r.backend)},
                {"storage", to_string(r.storage)}};
}

json solution_to_json(const SolveResult<double>& r) {
    json sol = json::array();
    for (double v : r.solution) sol.push_back(format_double(v));
    return json{{"solution", std::move(sol)},
                {"det", format_double(r.det)},
                {"substituted_pivots", r.substituted_pivots},
                {"backend", to_string(r.backend)},
                {"storage", to_string(r.storage)}};
}

json report_to_json(const ReductionReport& r) {
    return json{{"w_from", r.w_from},
                {"w_to", r.w_to},
                {"ops_counted", r.ops_counted},
                {"reference_ops", r.reference_ops},
                {"n", r.n}};
}

AnySystem read_system_file(const std::filesystem::path& path, Backend backend, StorageKind storage) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, "malformed JSON in '" + path.string() + "': " + e.what());
    }
    return build_system(system_text_from_json(j), backend, storage);
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

}  // namespace symband
