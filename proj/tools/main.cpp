#include "conf3/closed_forms.hpp"
#include "conf3/cohomology.hpp"
#include "conf3/kriz_model.hpp"
#include "conf3/partitions.hpp"
#include "conf3/poly.hpp"
#include "conf3/presentations.hpp"
#include "conf3/report.hpp"
#include "conf3/symmetry.hpp"
#include "conf3/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace {

using conf3::Int;
using conf3::Irrep;
using conf3::KrizComplex;
using conf3::Poly1;
using conf3::Poly2;
using nlohmann::ordered_json;
namespace report = conf3::report;

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value too large for table output");
    return v.get_si();
}

std::string pad(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// One row per table cell column; first row is the header.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) {
            if (widths.size() <= i) widths.resize(i + 1, 0);
            widths[i] = std::max(widths[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]);
        }
        out += '\n';
    }
    return out;
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += report::csv_escape(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string latex_table(const std::vector<std::vector<std::string>>& rows,
                        const std::string& column_spec) {
    std::string out = "\\begin{tabular}{" + column_spec + "}\n\\hline\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t i = 0; i < rows[r].size(); ++i) {
            if (i) out += " & ";
            out += report::latex_escape(rows[r][i]);
        }
        out += " \\\\\n";
        if (r == 0) out += "\\hline\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
}

std::string render_table(report::Format format, const std::vector<std::vector<std::string>>& rows,
                         const std::string& latex_spec) {
    switch (format) {
        case report::Format::Csv: return csv_table(rows);
        case report::Format::Latex: return latex_table(rows, latex_spec);
        default: return text_table(rows);
    }
}

struct Component {
    std::string name;  // total, 3, 21, 111
    Poly2 computed;
    Poly2 closed;
    std::string anchor;
    bool match = false;
};

std::vector<Component> poincare_components(int m, const std::string& isotypic) {
    std::vector<Component> comps;
    KrizComplex cx(m);
    auto add = [&](const std::string& name, Poly2 computed, Poly2 closed,
                   const std::string& anchor) {
        const bool match = computed == closed;
        comps.push_back({name, std::move(computed), std::move(closed), anchor, match});
    };
    if (isotypic == "all" || isotypic == "total")
        add("total", conf3::poincare(cx), conf3::closed_forms::total_poincare(m),
            "total series equals the truncated-cube product plus one odd line");
    if (m >= 2 && (isotypic == "all" || isotypic == "3"))
        add("3", conf3::poincare_isotypic(cx, Irrep::Trivial),
            conf3::closed_forms::invariant_poincare(m),
            "invariant component matches the bounded-partition staircase");
    if (m >= 2 && (isotypic == "all" || isotypic == "21"))
        add("21", conf3::poincare_isotypic(cx, Irrep::Standard),
            conf3::closed_forms::standard_poincare(m),
            "standard component matches its four-block staircase, dimension-doubled");
    if (m >= 2 && (isotypic == "all" || isotypic == "111"))
        add("111", conf3::poincare_isotypic(cx, Irrep::Sign),
            conf3::closed_forms::sign_poincare(m),
            "sign component matches its two-block staircase");
    return comps;
}

int cmd_poincare(int m, const std::string& isotypic, report::Format format,
                 const std::string& output) {
    if (m < 2 && isotypic != "all" && isotypic != "total")
        throw std::invalid_argument("isotypic components need --m >= 2");
    const auto comps = poincare_components(m, isotypic);
    bool all_match = true;
    for (const auto& c : comps) all_match = all_match && c.match;

    std::string content;
    if (format == report::Format::Json) {
        ordered_json polys;
        ordered_json iso;
        for (const auto& c : comps) {
            if (c.name == "total")
                polys["total"] = report::poly2_json(c.computed);
            else
                iso[c.name] = report::poly2_json(c.computed);
        }
        if (!iso.is_null()) polys["isotypic"] = std::move(iso);
        ordered_json checks = ordered_json::array();
        for (const auto& c : comps)
            checks.push_back({{"name", c.name + " matches closed form"},
                              {"anchor", c.anchor},
                              {"status", c.match ? "pass" : "fail"}});
        const ordered_json doc{{"m", m}, {"polynomials", std::move(polys)},
                               {"checks", std::move(checks)}};
        content = doc.dump(2) + "\n";
    } else if (format == report::Format::Text) {
        content = "m = " + std::to_string(m) + "\n";
        for (const auto& c : comps) {
            content += "component " + c.name + "\n";
            content += "  computed " + c.computed.str() + "\n";
            content += "  closed   " + c.closed.str() + "\n";
            if (c.match) {
                content += "  status   pass\n";
            } else {
                content += "  diff     " + (c.computed - c.closed).str() + "\n";
                content += "  status   fail\n";
            }
        }
    } else {
        // Coefficient table over the union of (s, t) exponents per component.
        std::map<std::pair<int, int>, std::vector<Int>> grid;
        for (size_t i = 0; i < comps.size(); ++i)
            for (const auto& [key, c] : comps[i].computed.coeffs()) {
                auto& cells = grid[key];
                cells.resize(comps.size(), 0);
                cells[i] = c;
            }
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"s", "t"};
        for (const auto& c : comps) header.push_back(c.name);
        rows.push_back(std::move(header));
        for (const auto& [key, cells] : grid) {
            std::vector<std::string> row{std::to_string(key.first), std::to_string(key.second)};
            row.resize(2 + comps.size(), "0");
            for (size_t i = 0; i < cells.size(); ++i) row[2 + i] = cells[i].get_str();
            rows.push_back(std::move(row));
        }
        content = render_table(format, rows, "rr|" + std::string(comps.size(), 'l'));
    }
    report::emit(content, output);
    return all_match ? 0 : 1;
}

int parse_positive_int(const std::string& text, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be a positive integer, got '" + text + "'");
    }
    if (used != text.size() || value < 1)
        throw std::invalid_argument(what + " must be a positive integer, got '" + text + "'");
    return value;
}

std::pair<int, int> parse_m_range(const std::string& text) {
    const size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int m = parse_positive_int(text, "--m-range");
        return {m, m};
    }
    const int lo = parse_positive_int(text.substr(0, dots), "--m-range");
    const int hi = parse_positive_int(text.substr(dots + 2), "--m-range");
    if (hi < lo) throw std::invalid_argument("--m-range upper bound below lower bound");
    return {lo, hi};
}

int default_parallelism() {
    const char* env = std::getenv("CONF3_JOBS");
    if (env == nullptr || *env == '\0') return 1;
    return parse_positive_int(env, "CONF3_JOBS");
}

int cmd_verify(std::vector<std::string> suites, const std::string& m_range, int parallelism,
               report::Format format, const std::string& output) {
    if (suites.empty()) suites = {"all"};
    if (std::find(suites.begin(), suites.end(), "all") != suites.end())
        suites = conf3::verify::suite_names();
    const auto [m_lo, m_hi] = parse_m_range(m_range);
    const auto checks = conf3::verify::run_suites(suites, m_lo, m_hi, parallelism);

    std::string content;
    switch (format) {
        case report::Format::Json: {
            const ordered_json doc{{"suites", suites},
                                   {"m_lo", m_lo},
                                   {"m_hi", m_hi},
                                   {"checks", report::checks_json(checks)},
                                   {"all_pass", conf3::verify::all_pass(checks)}};
            content = doc.dump(2) + "\n";
            break;
        }
        case report::Format::Csv: content = report::checks_csv(checks); break;
        case report::Format::Latex: content = report::checks_latex(checks); break;
        case report::Format::Text: content = report::checks_text(checks); break;
    }
    report::emit(content, output);
    return conf3::verify::all_pass(checks) ? 0 : 1;
}

int cmd_partitions(int m, int k, report::Format format, const std::string& output) {
    if (k > 3 * m)
        throw std::invalid_argument("--k must be at most 3m (the multiplicity table range)");
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"k", "p3", "p3_bounded", "mu3", "mu21", "mu111"});
    ordered_json json_rows = ordered_json::array();
    for (int j = 0; j <= k; ++j) {
        const Int p = conf3::partitions::p3(j);
        const Int pb = conf3::partitions::p3_bounded(m, j);
        const auto mu = conf3::partitions::multiplicities(m, j);
        rows.push_back({std::to_string(j), p.get_str(), pb.get_str(), mu.mu3.get_str(),
                        mu.mu21.get_str(), mu.mu111.get_str()});
        json_rows.push_back({{"k", j},
                             {"p3", to_long(p)},
                             {"p3_bounded", to_long(pb)},
                             {"mu3", to_long(mu.mu3)},
                             {"mu21", to_long(mu.mu21)},
                             {"mu111", to_long(mu.mu111)}});
    }
    std::string content;
    if (format == report::Format::Json) {
        const ordered_json doc{{"m", m}, {"rows", std::move(json_rows)}};
        content = doc.dump(2) + "\n";
    } else {
        content = render_table(format, rows, "r|rr|rrr");
    }
    report::emit(content, output);
    return 0;
}

int cmd_betti(int m, report::Format format, const std::string& output) {
    KrizComplex cx(m);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"q", "k", "dim"});
    ordered_json json_rows = ordered_json::array();
    for (int q = 0; q <= 2; ++q) {
        std::vector<int> ks = cx.degrees(q);
        std::sort(ks.begin(), ks.end());
        for (int k : ks) {
            const int dim = conf3::betti(cx, q, k);
            if (dim == 0) continue;
            rows.push_back({std::to_string(q), std::to_string(k), std::to_string(dim)});
            json_rows.push_back({{"q", q}, {"k", k}, {"dim", dim}});
        }
    }
    std::string content;
    if (format == report::Format::Json) {
        const ordered_json doc{{"m", m}, {"betti", std::move(json_rows)}};
        content = doc.dump(2) + "\n";
    } else {
        content = render_table(format, rows, "rr|r");
    }
    report::emit(content, output);
    return 0;
}

int cmd_presentation(const std::string& which, int m, report::Format format,
                     const std::string& output) {
    const auto pres = conf3::presentations::presentation_by_name(which, m);
    const Poly1 expected = conf3::verify::presentation_target(which, m);
    const int through = 6 * m;
    const int window = 4;
    const Poly1 h = conf3::presentations::hilbert(pres, through + window);
    const bool match = conf3::presentations::verify_presentation(pres, expected, through, window);

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"degree", "computed", "expected"});
    ordered_json json_rows = ordered_json::array();
    for (int d = 0; d <= through; ++d) {
        const Int hc = h.coeff(d);
        const Int ec = expected.coeff(d);
        if (hc == 0 && ec == 0) continue;
        rows.push_back({std::to_string(d), hc.get_str(), ec.get_str()});
        json_rows.push_back({{"degree", d}, {"computed", to_long(hc)}, {"expected", to_long(ec)}});
    }

    std::string content;
    if (format == report::Format::Json) {
        ordered_json gens = ordered_json::array();
        for (const auto& g : pres.algebra.gens())
            gens.push_back({{"name", g.name}, {"degree", g.degree}, {"odd", g.odd}});
        ordered_json rels = ordered_json::array();
        for (const auto& rel : pres.relations) rels.push_back(pres.algebra.str(rel));
        const ordered_json doc{{"which", which},          {"m", m},
                               {"generators", std::move(gens)}, {"relations", std::move(rels)},
                               {"dimensions", std::move(json_rows)},
                               {"match", match},          {"through_degree", through}};
        content = doc.dump(2) + "\n";
    } else {
        content = "presentation " + which + ", m = " + std::to_string(m) + "\n";
        content += conf3::presentations::str(pres);
        content += "\n" + render_table(format == report::Format::Json ? report::Format::Text
                                                                      : format,
                                       rows, "r|rr");
        content += match ? "match through degree " + std::to_string(through) + "\n"
                         : "MISMATCH: hilbert " + h.str() + ", expected " + expected.str() + "\n";
    }
    report::emit(content, output);
    return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomology tables and verification for three-point configuration spaces"};
    app.require_subcommand(1);
    const std::vector<std::string> format_names{"json", "csv", "latex", "text"};

    int m = 0;
    std::string isotypic = "all";
    std::string output;
    std::vector<std::string> suites;
    std::string m_range = "2..4";
    int parallelism = 0;
    int k = 0;
    std::string which;
    std::map<const CLI::App*, std::string> formats;

    auto add_output = [&](CLI::App* sc, const std::string& default_format) {
        auto [it, unused] = formats.emplace(sc, default_format);
        sc->add_option("--format", it->second, "output format")
            ->check(CLI::IsMember(format_names))
            ->capture_default_str();
        sc->add_option("--output", output, "write to this path (atomically) instead of stdout");
    };

    CLI::App* sc_poincare =
        app.add_subcommand("poincare", "computed vs closed-form Poincare polynomials");
    sc_poincare->add_option("--m", m, "truncation order")->required()->check(CLI::Range(1, 64));
    sc_poincare->add_option("--isotypic", isotypic, "component: all, 3, 21 or 111")
        ->check(CLI::IsMember({"all", "total", "3", "21", "111"}))
        ->capture_default_str();

    CLI::App* sc_verify = app.add_subcommand("verify", "run verification suites");
    sc_verify->add_option("--suite", suites, "suite names, or 'all'");
    sc_verify->add_option("--m-range", m_range, "range A..B of truncation orders")
        ->capture_default_str();
    sc_verify->add_option("--parallelism", parallelism, "worker threads (default: CONF3_JOBS or 1)")
        ->check(CLI::Range(1, 4096));

    CLI::App* sc_partitions =
        app.add_subcommand("partitions", "partition counts and multiplicity table");
    sc_partitions->add_option("--m", m, "part bound")->required()->check(CLI::Range(1, 1000000));
    sc_partitions->add_option("--k", k, "table rows 0..k")->required()->check(CLI::Range(0, 3000000));

    CLI::App* sc_betti = app.add_subcommand("betti", "nonzero Betti numbers by bidegree");
    sc_betti->add_option("--m", m, "truncation order")->required()->check(CLI::Range(1, 64));

    CLI::App* sc_presentation =
        app.add_subcommand("presentation", "presented algebra vs its Hilbert table");
    sc_presentation
        ->add_option("--which", which, "ordered, unordered, cocycle or invariant-cocycle")
        ->required()
        ->check(CLI::IsMember({"ordered", "unordered", "cocycle", "invariant-cocycle"}));
    sc_presentation->add_option("--m", m, "truncation order")->required()->check(CLI::Range(2, 16));

    // Option defaults differ per subcommand, so bind them after construction.
    add_output(sc_poincare, "json");
    add_output(sc_verify, "text");
    add_output(sc_partitions, "text");
    add_output(sc_betti, "text");
    add_output(sc_presentation, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_poincare->parsed())
            return cmd_poincare(m, isotypic, report::parse_format(formats.at(sc_poincare)),
                                output);
        if (sc_verify->parsed()) {
            if (sc_verify->count("--parallelism") == 0) parallelism = default_parallelism();
            return cmd_verify(suites, m_range, parallelism,
                              report::parse_format(formats.at(sc_verify)), output);
        }
        if (sc_partitions->parsed())
            return cmd_partitions(m, k, report::parse_format(formats.at(sc_partitions)), output);
        if (sc_betti->parsed())
            return cmd_betti(m, report::parse_format(formats.at(sc_betti)), output);
        if (sc_presentation->parsed())
            return cmd_presentation(which, m, report::parse_format(formats.at(sc_presentation)),
                                    output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
