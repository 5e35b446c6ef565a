#include "ro2ss/report.hpp"

#include <cstdlib>
#include <thread>

#include "json.hpp"
#include "ro2ss/parallel.hpp"

namespace ro2ss {

int default_threads() {
    if (const char* env = std::getenv("RO2SS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string shift_to_string(Degree v) {
    if (v.p == 0) return std::to_string(v.m);
    std::string ptext;
    if (v.p == 1) ptext = "a";
    else if (v.p == -1) ptext = "-a";
    else ptext = std::to_string(v.p) + "a";
    if (v.m == 0) return ptext;
    if (v.p > 0) ptext = "+" + ptext;
    return std::to_string(v.m) + ptext;
}

std::string report_text(const Report& rep) {
    std::string out = "check " + rep.check + "\n";
    for (const auto& b : rep.blocks) {
        out += (b.ok ? "ok   " : "FAIL ") + b.block;
        if (!b.witness.empty()) out += "  [" + b.witness + "]";
        out += "\n";
    }
    std::int64_t failed = 0;
    for (const auto& b : rep.blocks)
        if (!b.ok) ++failed;
    out += rep.check + ": " + (rep.pass ? "PASS" : "FAIL") + " (" +
           std::to_string(rep.checked - failed) + "/" + std::to_string(rep.checked) +
           " blocks)\n";
    return out;
}

std::string report_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["check"] = rep.check;
    j["pass"] = rep.pass;
    j["checked"] = rep.checked;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : rep.blocks) {
        nlohmann::ordered_json jb;
        jb["block"] = b.block;
        jb["status"] = b.ok ? "pass" : "fail";
        if (!b.witness.empty()) jb["witness"] = b.witness;
        j["blocks"].push_back(std::move(jb));
    }
    return j.dump(2) + "\n";
}

namespace {

std::optional<std::int64_t> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = s[0] == '+' || s[0] == '-' ? 1 : 0;
    if (pos == s.size()) return std::nullopt;
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return std::stoll(s);
}

} // namespace

std::optional<Degree> parse_shift(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t apos = s.find('a');
    if (apos == std::string::npos) {
        auto m = parse_int(s);
        if (!m) return std::nullopt;
        return Degree{*m, 0};
    }
    if (apos + 1 != s.size()) return std::nullopt;
    std::string body = s.substr(0, apos); // "2", "-", "0-1", "1+", ...
    // the alpha coefficient starts at the last interior sign, if any
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if (body[i] == '+' || body[i] == '-') { split = i; break; }
    std::string mtext = split == std::string::npos ? "" : body.substr(0, split);
    std::string ptext = split == std::string::npos ? body : body.substr(split);
    std::int64_t m = 0;
    if (!mtext.empty()) {
        auto mv = parse_int(mtext);
        if (!mv) return std::nullopt;
        m = *mv;
    }
    std::int64_t p = 0;
    if (ptext.empty() || ptext == "+") p = 1;
    else if (ptext == "-") p = -1;
    else {
        auto pv = parse_int(ptext);
        if (!pv) return std::nullopt;
        p = *pv;
    }
    return Degree{m, p};
}

} // namespace ro2ss
