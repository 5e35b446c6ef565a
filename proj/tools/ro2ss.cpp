#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ro2ss/maps.hpp"
#include "ro2ss/parallel.hpp"
#include "ro2ss/report.hpp"

using namespace ro2ss;

namespace {

struct Range {
    std::int64_t lo = 0, hi = 0;
};

std::optional<Range> parse_range(const std::string& s) {
    auto colon = s.find(':', 1); // skip a leading '-'
    if (colon == std::string::npos) return std::nullopt;
    try {
        std::size_t eaten = 0;
        std::int64_t lo = std::stoll(s.substr(0, colon), &eaten);
        if (eaten != colon) return std::nullopt;
        std::string rest = s.substr(colon + 1);
        std::int64_t hi = std::stoll(rest, &eaten);
        if (eaten != rest.size()) return std::nullopt;
        if (lo > hi) return std::nullopt;
        return Range{lo, hi};
    } catch (...) {
        return std::nullopt;
    }
}

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

Range require_range(const std::string& value, const std::string& flag) {
    auto r = parse_range(value);
    if (!r) usage_error("flag " + flag + " expects LO:HI, got '" + value + "'");
    return *r;
}

std::string torsion_text(const FGGroup& g) {
    std::string t;
    for (auto k : g.torsion()) {
        if (!t.empty()) t += ",";
        t += std::to_string(std::int64_t(1) << k);
    }
    return t.empty() ? "-" : t;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) usage_error("cannot open output path '" + path + "'");
    return file;
}

// ---------------------------------------------------------------- homotopy

int cmd_homotopy(int n, const std::string& theory, Degree shift, Range jr, Range enr,
                 bool en_given, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    struct Row {
        std::int64_t j;
        FGGroup group;
    };
    std::vector<Row> rows;
    for (std::int64_t j = jr.lo; j <= jr.hi; ++j) {
        FGGroup g;
        for (std::int64_t en = enr.lo; en <= enr.hi; ++en)
            g = direct_sum(g, theory == "er" ? er_slot_group(n, shift, j, en)
                                             : e_slot_group(n, shift, j, en));
        rows.push_back({j, std::move(g)});
    }
    std::string head = "n=" + std::to_string(n) + " theory=" + theory + " shift=" +
                       shift_to_string(shift) + " range=" + std::to_string(jr.lo) + ":" +
                       std::to_string(jr.hi) + " en=" + std::to_string(enr.lo) + ":" +
                       std::to_string(enr.hi);
    std::string note;
    if (n >= 2 && !en_given)
        note = "en range defaulted; groups at height >= 2 are truncated to it";
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "homotopy";
        doc["n"] = n;
        doc["theory"] = theory;
        doc["shift"] = shift_to_string(shift);
        doc["en_range"] = {enr.lo, enr.hi};
        if (!note.empty()) doc["note"] = note;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["j"] = r.j;
            row["rank"] = r.group.rank();
            row["torsion"] = nlohmann::ordered_json::array();
            for (auto k : r.group.torsion()) row["torsion"].push_back(std::int64_t(1) << k);
            row["group"] = r.group.str();
            row["generators"] = r.group.labels;
            doc["rows"].push_back(std::move(row));
        }
        os << doc.dump(2) << "\n";
    } else if (format == "tsv") {
        os << "# ro2ss homotopy schema=v" << kSchemaVersion << " " << head << "\n";
        if (!note.empty()) os << "# " << note << "\n";
        os << "# j\trank\ttorsion\tgenerators\n";
        for (const auto& r : rows) {
            os << r.j << "\t" << r.group.rank() << "\t" << torsion_text(r.group) << "\t";
            for (std::size_t i = 0; i < r.group.labels.size(); ++i)
                os << (i ? "," : "") << r.group.labels[i];
            if (r.group.labels.empty()) os << "-";
            os << "\n";
        }
    } else {
        os << "# " << head << "\n";
        if (!note.empty()) os << "# " << note << "\n";
        std::string name = theory == "er" ? "ER" : "E";
        for (const auto& r : rows) {
            os << "pi_" << r.j << "(" << name << "(" << n << ")_" << shift_to_string(shift)
               << ") = " << r.group.str();
            if (!r.group.labels.empty()) {
                os << "  {";
                for (std::size_t i = 0; i < r.group.labels.size(); ++i)
                    os << (i ? ", " : "") << r.group.labels[i];
                os << "}";
            }
            os << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------- pages

struct PageRow {
    BlockKey key;
    std::size_t rank = 0, torsion = 0;
    std::vector<std::string> labels;
};

std::vector<PageRow> collect_rows(const PageBasis& pb, const Box& box) {
    std::vector<BlockKey> keys;
    for (const auto& [key, entries] : pb.blocks)
        if (box.contains(key)) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    std::vector<PageRow> rows;
    for (const auto& key : keys) {
        PageRow row;
        row.key = key;
        for (const auto& cls : pb.block(key)) {
            if (cls.mono.i == 0)
                ++row.rank;
            else
                ++row.torsion;
            std::string label = monomial_label(cls.mono, pb.n);
            if (cls.w == 1) label = label == "1" ? "2" : "2*" + label;
            row.labels.push_back(std::move(label));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string svg_chart(const PageBasis& pb, const Box& box, std::int64_t r) {
    // one panel per p-line: x = total degree, y = filtration
    const int cell = 26, margin = 40;
    std::int64_t xmin = box.m0 + box.p0, xmax = box.m1 + box.p1;
    std::int64_t ymax = box.i1;
    std::int64_t panel_w = (xmax - xmin + 2) * cell + margin;
    std::int64_t panel_h = (ymax + 2) * cell + margin;
    std::int64_t npanels = box.p1 - box.p0 + 1;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << panel_w << "\" height=\"" << panel_h * npanels << "\">\n";
    svg << "<defs><marker id=\"arr\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
           "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
    auto dd = differential_at(pb.n, r);
    for (std::int64_t p = box.p0; p <= box.p1; ++p) {
        std::int64_t top = (p - box.p0) * panel_h;
        svg << "<g>\n<text x=\"8\" y=\"" << top + 16 << "\" font-size=\"12\">p = " << p
            << ", page " << r << "</text>\n";
        auto px = [&](std::int64_t x) { return margin + (x - xmin + 1) * cell; };
        auto py = [&](std::int64_t y) { return top + margin + (ymax - y + 1) * cell; };
        // per (x, y): free and torsion class counts over the en-range; an
        // arrow is drawn only when the induced differential is nonzero, i.e.
        // the class sits on the page's s2-lattice and its target is alive
        std::map<std::pair<std::int64_t, std::int64_t>, std::pair<int, int>> dots;
        std::map<std::pair<std::int64_t, std::int64_t>, bool> arrows;
        for (const auto& [key, entries] : pb.blocks) {
            if (!box.contains(key) || key.p != p) continue;
            auto& d = dots[{key.m + key.p, key.i}];
            for (const auto& cls : entries) {
                (cls.mono.i == 0 ? d.first : d.second) += 1;
                if (!dd || cls.w != 0) continue;
                std::int64_t half = std::int64_t(1) << (dd->k - 1);
                if (((cls.mono.t % half) + half) % half != 0) continue;
                auto terms = apply_differential(pb.n, r, cls.mono);
                if (terms.empty()) continue;
                BlockShift sh = differential_shift(pb.n, *dd);
                auto tgt = pb.blocks.find(
                    BlockKey{key.m + sh.dm, key.p + sh.dp, key.en + sh.den, key.i + sh.di});
                if (tgt == pb.blocks.end()) continue;
                for (const auto& tc : tgt->second)
                    if (tc.mono == terms[0].second) {
                        arrows[{key.m + key.p, key.i}] = true;
                        break;
                    }
            }
        }
        for (const auto& [xy, cnt] : dots) {
            std::int64_t cx = px(xy.first), cy = py(xy.second);
            if (cnt.first > 0)
                svg << "<circle cx=\"" << cx - (cnt.second ? 4 : 0) << "\" cy=\"" << cy
                    << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
            if (cnt.second > 0)
                svg << "<circle cx=\"" << cx + (cnt.first ? 4 : 0) << "\" cy=\"" << cy
                    << "\" r=\"4\" fill=\"black\"/>\n";
            if (cnt.first + cnt.second > 1)
                svg << "<text x=\"" << cx + 7 << "\" y=\"" << cy - 6
                    << "\" font-size=\"9\">" << cnt.first + cnt.second << "</text>\n";
        }
        for (const auto& [xy, on] : arrows) {
            if (!on) continue;
            svg << "<line x1=\"" << px(xy.first) << "\" y1=\"" << py(xy.second) - 5
                << "\" x2=\"" << px(xy.first - 1) << "\" y2=\"" << py(xy.second + r) + 5
                << "\" stroke=\"black\" marker-end=\"url(#arr)\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

int cmd_pages(int n, std::int64_t r, Range mr, Range pr, Range enr, std::int64_t imax,
              const std::string& format, const std::string& out_path, int threads) {
    if (r < 2) usage_error("flag --page expects a page number >= 2");
    Box box{mr.lo, mr.hi, pr.lo, pr.hi, enr.lo, enr.hi, 0, imax};
    // compute one extra ring of blocks so the chart can decide whether each
    // class's differential target is alive
    Box compute = box;
    if (auto dd = differential_at(n, r)) compute = compute.expanded(differential_shift(n, *dd));
    // the engine widens further internally; reproduce the full window for the header
    Box widened = compute;
    for (int k = n; k >= 1; --k) {
        std::int64_t dr = (std::int64_t(1) << (k + 1)) - 1;
        if (dr < r) widened = widened.expanded(differential_shift(n, Differential{dr, k}));
    }
    PageBasis pb = page_at(n, r, compute, threads);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    std::string head =
        "n=" + std::to_string(n) + " page=" + std::to_string(r) + " m=" +
        std::to_string(mr.lo) + ":" + std::to_string(mr.hi) + " p=" + std::to_string(pr.lo) +
        ":" + std::to_string(pr.hi) + " en=" + std::to_string(enr.lo) + ":" +
        std::to_string(enr.hi) + " i=0:" + std::to_string(imax);
    std::string widen_note = "window widened for computation to m=" +
                             std::to_string(widened.m0) + ":" + std::to_string(widened.m1) +
                             " en=" + std::to_string(widened.en0) + ":" +
                             std::to_string(widened.en1) + " i=" +
                             std::to_string(widened.i0) + ":" + std::to_string(widened.i1);
    auto rows = collect_rows(pb, box);
    if (format == "svg") {
        os << "<!-- ro2ss pages schema=v" << kSchemaVersion << " " << head << " -->\n";
        os << "<!-- " << widen_note << " -->\n";
        os << svg_chart(pb, box, r);
    } else if (format == "tsv") {
        os << "# ro2ss pages schema=v" << kSchemaVersion << " " << head << "\n";
        os << "# " << widen_note << "\n";
        os << "# m\tp\ten\tfiltration\trank\ttorsion\tclasses\n";
        for (const auto& row : rows) {
            os << row.key.m << "\t" << row.key.p << "\t" << row.key.en << "\t" << row.key.i
               << "\t" << row.rank << "\t" << row.torsion << "\t";
            for (std::size_t i = 0; i < row.labels.size(); ++i)
                os << (i ? "," : "") << row.labels[i];
            os << "\n";
        }
    } else {
        os << "# " << head << "\n# " << widen_note << "\n";
        for (const auto& row : rows) {
            os << row.key.str() << "  rank " << row.rank << ", torsion " << row.torsion
               << "  {";
            for (std::size_t i = 0; i < row.labels.size(); ++i)
                os << (i ? ", " : "") << row.labels[i];
            os << "}\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(int n, const std::string& which, Range jr, Range pr, Range enr,
               std::int64_t imax, const std::string& sigma, const std::string& format,
               const std::string& out_path, int threads) {
    SigmaSign sign = SigmaSign::Minus;
    if (sigma == "+") sign = SigmaSign::Plus;
    else if (sigma != "-") usage_error("flag --sigma-sign expects '-' or '+'");

    CheckWindow w{jr.lo, jr.hi, {Degree{0, 0}, Degree{0, -1}, Degree{0, 1}}, enr.lo, enr.hi};
    std::vector<Report> reports;
    bool all = which == "all";
    if (all || which == "exactness") {
        reports.push_back(check_rotated_exactness(n, w, threads));
        reports.push_back(check_les_composites(n, w, sign, threads));
    }
    if (all || which == "duality") reports.push_back(check_order_duality(n, w, threads));
    if (all || which == "boundary")
        reports.push_back(check_boundary_formula(n, w, sign, threads));
    if (all || which == "main") reports.push_back(check_main_theorem(n, w, threads));
    if (all || which == "periodicity") reports.push_back(check_periodicity(n, w, threads));
    if (all || which == "einfty-match") {
        Box box{jr.lo, jr.hi, pr.lo, pr.hi, enr.lo, enr.hi, 0, imax};
        reports.push_back(check_einfinity_match(n, box, threads));
    }
    if (reports.empty())
        usage_error("check '" + which + "' is not one of exactness, duality, boundary, "
                    "main, periodicity, einfty-match, all");

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    bool pass = true;
    for (const auto& rep : reports) pass = pass && rep.pass;
    if (format == "json") {
        if (reports.size() == 1) {
            os << report_json(reports[0]);
        } else {
            nlohmann::ordered_json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["pass"] = pass;
            doc["reports"] = nlohmann::ordered_json::array();
            for (const auto& rep : reports)
                doc["reports"].push_back(nlohmann::ordered_json::parse(report_json(rep)));
            os << doc.dump(2) << "\n";
        }
    } else {
        for (const auto& rep : reports) os << report_text(rep);
        os << (pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the RO(Z/2)-graded homotopy of real Johnson-Wilson "
                 "theories and its Borel spectral sequence"};
    app.require_subcommand(1);

    int n = 1;
    std::string theory = "er", shift_text = "0", range_text, en_text, format, output;
    int threads = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", n, "theory height (1-4)")->required()->check(CLI::Range(1, 4));
        sub->add_option("--output", output, "output path (default stdout)");
        sub->add_option("--threads", threads, "worker threads (default RO2SS_THREADS)");
        sub->add_option("--format", format, "output format");
    };

    // homotopy
    auto* hom = app.add_subcommand("homotopy", "tabulate homotopy groups per degree");
    add_common(hom);
    hom->add_option("--theory", theory, "er or e")->check(CLI::IsMember({"er", "e"}));
    hom->add_option("--shift", shift_text, "spectrum shift V, syntax m+pa (e.g. 0-1a)");
    hom->add_option("--range", range_text, "degree range J0:J1")->required();
    hom->add_option("--en", en_text, "v_n-exponent range E0:E1");

    // pages
    auto* pag = app.add_subcommand("pages", "tabulate or chart a spectral-sequence page");
    std::int64_t page_r = 2;
    std::string m_text, p_text;
    std::int64_t imax = -1;
    add_common(pag);
    pag->add_option("--page", page_r, "page number r >= 2")->required();
    pag->add_option("--m", m_text, "m-range M0:M1")->required();
    pag->add_option("--p", p_text, "p-range P0:P1")->required();
    pag->add_option("--en", en_text, "v_n-exponent range E0:E1");
    pag->add_option("--filtration", imax, "max filtration (default 2^{n+1})");

    // verify
    auto* ver = app.add_subcommand("verify", "machine-verify the fibration story");
    std::string which = "all", sigma = "-";
    add_common(ver);
    ver->add_option("which", which,
                    "exactness | duality | boundary | main | periodicity | einfty-match | all");
    ver->add_option("--range", range_text, "degree range J0:J1")->required();
    ver->add_option("--en", en_text, "v_n-exponent range E0:E1");
    ver->add_option("--p", p_text, "p-range for einfty-match (default -8:8)");
    ver->add_option("--filtration", imax, "max filtration for einfty-match");
    ver->add_option("--sigma-sign", sigma, "involution sign convention (test hook)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (threads <= 0) threads = default_threads();

    try {
        if (hom->parsed()) {
            if (format.empty()) format = "text";
            Range jr = require_range(range_text, "--range");
            auto shift = parse_shift(shift_text);
            if (!shift)
                usage_error("flag --shift expects m+pa syntax, got '" + shift_text + "'");
            bool en_given = !en_text.empty();
            Range enr;
            if (en_given) {
                enr = require_range(en_text, "--en");
            } else {
                std::int64_t spread = std::max(std::abs(jr.lo), std::abs(jr.hi)) / 2 +
                                      (std::int64_t(1) << (n + 1));
                enr = Range{-spread, spread};
            }
            return cmd_homotopy(n, theory, *shift, jr, enr, en_given, format, output);
        }
        if (pag->parsed()) {
            if (format.empty()) format = "tsv";
            Range mr = require_range(m_text, "--m");
            Range prr = require_range(p_text, "--p");
            Range enr = en_text.empty() ? Range{-4, 4} : require_range(en_text, "--en");
            if (imax < 0) imax = std::int64_t(1) << (n + 1);
            return cmd_pages(n, page_r, mr, prr, enr, imax, format, output, threads);
        }
        if (format.empty()) format = "text";
        Range jr = require_range(range_text, "--range");
        Range prr = p_text.empty() ? Range{-8, 8} : require_range(p_text, "--p");
        Range enr = en_text.empty() ? Range{-8, 8} : require_range(en_text, "--en");
        if (imax < 0) imax = std::int64_t(1) << (n + 1);
        return cmd_verify(n, which, jr, prr, enr, imax, sigma, format, output, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
