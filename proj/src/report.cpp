#include "spectre/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spectre/error.hpp"

namespace spectre {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_tag(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

namespace {

long long require_integer(const ordered_json& v, const std::string& where) {
    if (!v.is_number_integer())
        fail(errc::parse_error, where + ": expected an integer, got " + v.dump());
    return v.get<long long>();
}

}  // namespace

DiagramInput load_diagram(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::parse_error, "cannot read diagram file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    ordered_json doc;
    try {
        doc = ordered_json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("support"))
        fail(errc::parse_error, path + ": expected an object with \"vars\" and \"support\" fields");
    const long long vars = require_integer(doc["vars"], path + ": \"vars\"");
    if (!doc["support"].is_array())
        fail(errc::parse_error, path + ": \"support\" must be an array of integer vectors");
    std::vector<std::vector<long long>> points;
    for (std::size_t i = 0; i < doc["support"].size(); ++i) {
        const ordered_json& row = doc["support"][i];
        const std::string where = path + ": \"support\"[" + std::to_string(i) + "]";
        if (!row.is_array())
            fail(errc::parse_error, where + " must be an integer vector");
        std::vector<long long> pt;
        for (std::size_t j = 0; j < row.size(); ++j)
            pt.push_back(require_integer(row[j], where + "[" + std::to_string(j) + "]"));
        points.push_back(std::move(pt));
    }
    DiagramInput result{Support::make(static_cast<int>(vars), points), hash_tag(bytes)};
    return result;
}

std::string format_real(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

ordered_json make_report(const std::string& command, const std::string& input_hash) {
    ordered_json rep;
    rep["command"] = command;
    rep["input_hash"] = input_hash;
    rep["meta"] = ordered_json::object();
    rep["columns"] = ordered_json::array();
    rep["rows"] = ordered_json::array();
    return rep;
}

std::string render_json(const ordered_json& report) {
    return report.dump(2) + "\n";
}

namespace {

std::string cell_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ' ';
            out += cell_text(v[i]);
        }
        return out;
    }
    return v.dump();
}

}  // namespace

std::string render_csv(const ordered_json& report) {
    std::string out;
    out += "# command: " + report.at("command").get<std::string>() + "\n";
    out += "# input_hash: " + report.at("input_hash").get<std::string>() + "\n";
    for (const auto& [key, value] : report.at("meta").items())
        out += "# " + key + ": " + cell_text(value) + "\n";
    const ordered_json& cols = report.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i].get<std::string>();
    }
    out += '\n';
    for (const ordered_json& row : report.at("rows")) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

void emit_report(const ordered_json& report, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json")
        text = render_json(report);
    else if (format == "csv")
        text = render_csv(report);
    else
        fail(errc::parse_error, "unknown format: " + format + " (expected csv or json)");
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            fail(errc::parse_error, "cannot write output file: " + out_path);
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
}

}  // namespace spectre
