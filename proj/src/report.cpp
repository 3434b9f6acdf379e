#include "conf3/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace conf3::report {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "latex") return Format::Latex;
    if (name == "text") return Format::Text;
    throw std::invalid_argument("unknown format: " + name);
}

namespace {

long json_int(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("coefficient too large for JSON output");
    return v.get_si();
}

}  // namespace

nlohmann::ordered_json poly1_json(const Poly1& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [deg, c] : p.coeffs()) {
        arr.push_back({{"t", deg}, {"c", json_int(c)}});
    }
    return arr;
}

nlohmann::ordered_json poly2_json(const Poly2& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, c] : p.coeffs()) {
        arr.push_back({{"t", key.second}, {"s", key.first}, {"c", json_int(c)}});
    }
    return arr;
}

nlohmann::ordered_json checks_json(const std::vector<verify::Check>& checks) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item{{"name", c.name},
                                    {"anchor", c.anchor},
                                    {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) {
            item["expected"] = c.expected;
            item["computed"] = c.computed;
        }
        arr.push_back(std::move(item));
    }
    return arr;
}

std::string checks_text(const std::vector<verify::Check>& checks) {
    std::string out;
    size_t passed = 0;
    for (const auto& c : checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name + ": " + c.anchor + "\n";
        if (c.pass) {
            ++passed;
        } else {
            out += "       expected: " + c.expected + "\n";
            out += "       computed: " + c.computed + "\n";
        }
    }
    out += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    return out;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string checks_csv(const std::vector<verify::Check>& checks) {
    std::string out = "name,status,anchor,expected,computed\n";
    for (const auto& c : checks) {
        out += csv_escape(c.name) + ",";
        out += (c.pass ? "pass" : "fail");
        out += "," + csv_escape(c.anchor);
        out += "," + csv_escape(c.pass ? "" : c.expected);
        out += "," + csv_escape(c.pass ? "" : c.computed);
        out += "\n";
    }
    return out;
}

std::string latex_escape(const std::string& field) {
    std::string out;
    for (char ch : field) {
        switch (ch) {
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '$': out += "\\$"; break;
            case '#': out += "\\#"; break;
            case '_': out += "\\_"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string checks_latex(const std::vector<verify::Check>& checks) {
    std::string out = "\\begin{tabular}{llc}\n";
    out += "\\hline\ncheck & statement & status \\\\\n\\hline\n";
    for (const auto& c : checks) {
        out += latex_escape(c.name) + " & " + latex_escape(c.anchor) + " & ";
        out += (c.pass ? "pass" : "fail");
        out += " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path);
    }
}

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << content;
        std::cout.flush();
    } else {
        write_atomic(output_path, content);
    }
}

}  // namespace conf3::report
