#pragma once

// Serialization: JSON, Markdown and CSV renderings of series, tables,
// reports and counts, plus the output manifest.

#include "ffcount.hpp"
#include "linalg.hpp"
#include "m0n.hpp"
#include "spectral.hpp"
#include "stable.hpp"

#include <boost/uuid/detail/sha1.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace hyperstab {

using nlohmann::json;

// ---- series

inline json to_json(const Series& s)
{
    json terms = json::array();
    for (int t = 0; t <= s.truncation(); ++t) {
        if (s[t].is_zero()) continue;
        json coeffs = json::array();
        for (const auto& [e, c] : s[t].terms()) coeffs.push_back({{"e", e}, {"c", c.str()}});
        terms.push_back({{"t", t}, {"L_coeffs", coeffs}});
    }
    return {{"truncation", s.truncation()}, {"terms", terms}};
}

inline Series series_from_json(const json& j)
{
    Series s(j.at("truncation").get<int>());
    for (const auto& term : j.at("terms")) {
        const int t = term.at("t").get<int>();
        if (t < 0 || t > s.truncation()) throw UsageError("series_from_json: t-degree outside truncation");
        for (const auto& lc : term.at("L_coeffs")) s[t].add_term(lc.at("e").get<int>(), Int(lc.at("c").get<std::string>()));
    }
    return s;
}

// ---- stable table

inline std::string tate_sum(const std::map<int, Int>& row)
{
    if (row.empty()) return "0";
    std::string out;
    for (const auto& [w, m] : row) {
        if (!out.empty()) out += " + ";
        out += w == 0 ? "Q" : "Q(-" + std::to_string(w) + ")";
        if (m != 1) out += "^" + m.str();
    }
    return out;
}

inline std::string stable_range_note(int n)
{
    return "degree i is stable for g with i <= (g - " + std::to_string(n) +
           " + 2)/2; the boundary degree is included (inclusivity unverified)";
}

inline json to_json(const StableCohomologyTable& tab, int n)
{
    json rows = json::array();
    for (const auto& [i, row] : tab.rows) {
        json classes = json::array();
        for (const auto& [w, m] : row) classes.push_back({{"twist", w}, {"mult", m.str()}});
        rows.push_back({{"i", i}, {"classes", classes}});
    }
    return {{"surface_index_regime", n == 0 ? "n=0" : "n>0"},
            {"max_degree", tab.max_degree},
            {"rows", rows},
            {"stable_range_note", stable_range_note(n)}};
}

inline std::string to_markdown(const StableCohomologyTable& tab, int n)
{
    std::ostringstream o;
    o << "| i | H^i |\n|---|---|\n";
    for (const auto& [i, row] : tab.rows) o << "| " << i << " | " << tate_sum(row) << " |\n";
    o << "\n" << stable_range_note(n) << "\n";
    return o.str();
}

inline std::string to_csv(const StableCohomologyTable& tab)
{
    std::ostringstream o;
    o << "i,twist,multiplicity\n";
    for (const auto& [i, row] : tab.rows)
        for (const auto& [w, m] : row) o << i << ',' << w << ',' << m << '\n';
    return o.str();
}

// ---- E^1 columns

inline std::string types_field(const std::vector<ConfigurationType>& types)
{
    std::string s;
    for (const auto& t : types) s += (s.empty() ? "" : " ") + t.str();
    return s;
}

inline std::string to_csv(const std::vector<E1Column>& cols)
{
    std::ostringstream o;
    o << "L,row,twist,multiplicity,contributing_types\n";
    for (const auto& c : cols)
        for (const auto& e : c.entries)
            o << c.L << ',' << e.row << ',' << e.twist << ',' << e.multiplicity << ",\"" << types_field(e.types)
              << "\"\n";
    return o.str();
}

// Rows are degrees relative to 2v, columns the values of L; classes twisted by Q(-v).
inline std::string to_markdown(const std::vector<E1Column>& cols)
{
    std::map<int, std::map<int, std::map<int, Int>>> cells;  // -row -> L -> twist -> mult
    for (const auto& c : cols)
        for (const auto& e : c.entries) cells[-e.row][c.L][e.twist] += e.multiplicity;
    std::ostringstream o;
    o << "| row |";
    for (const auto& c : cols) o << " L=" << c.L << " |";
    o << "\n|---|";
    for (std::size_t i = 0; i < cols.size(); ++i) o << "---|";
    o << '\n';
    for (const auto& [nr, byL] : cells) {
        o << "| " << -nr << " |";
        for (const auto& c : cols) {
            auto it = byL.find(c.L);
            o << ' ' << (it == byL.end() ? "" : tate_sum(it->second)) << " |";
        }
        o << '\n';
    }
    return o.str();
}

// ---- M_{0,n}

inline std::string to_markdown(const EquivariantPoincare& ep)
{
    std::ostringstream o;
    o << "| i | dim | Schur expansion |\n|---|---|---|\n";
    for (int i = 0; i < static_cast<int>(ep.layers.size()); ++i) {
        const auto& ch = ep.layer(i);
        std::string s;
        for (const auto& [lam, m] : schur_expand(ch)) {
            if (m == 0) continue;
            if (!s.empty()) s += " + ";
            if (m != 1) s += m.str() + "*";
            s += "chi" + to_string(lam);
        }
        o << "| " << i << " | " << ch.at(Partition(static_cast<std::size_t>(ep.n), 1)) << " | " << s << " |\n";
    }
    return o.str();
}

// ---- ranks

inline json to_json(const RankReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"trial", f.trial}, {"kernel", f.kernel}});
    return {{"type", {r.type.k1, r.type.k2, r.type.h}},
            {"d", r.d},
            {"n", r.n},
            {"v", r.v},
            {"expected_rank", r.expected_kernel},
            {"trials", r.trials},
            {"failures", failures},
            {"seed", r.seed},
            {"field", r.field == FieldKind::Rational ? "Q" : "F_" + std::to_string(r.prime)}};
}

// ---- counts

struct CountRow {
    CountRecord rec;
    std::string method;
    std::string formula;  // empty when no closed form applies
    std::string match;    // "yes", "no" or "n/a"
};

inline std::string count_csv_header() { return "g,l,q,method,raw,group,stack,formula,match\n"; }

inline std::string to_csv_row(const CountRow& r)
{
    std::ostringstream o;
    o << r.rec.g << ',' << r.rec.l << ',' << r.rec.q << ',' << r.method << ',' << r.rec.raw << ',' << r.rec.group
      << ',' << to_string(r.rec.stack) << ",\"" << r.formula << "\"," << r.match << '\n';
    return o.str();
}

// ---- output files and manifest

inline std::string sha1_hex(const std::string& data)
{
    boost::uuids::detail::sha1 h;
    h.process_bytes(data.data(), data.size());
    boost::uuids::detail::sha1::digest_type d;
    h.get_digest(d);
    std::ostringstream o;
    for (unsigned x : d) o << std::hex << std::setw(8) << std::setfill('0') << x;
    return o.str();
}

// Collects output files, writes them under one directory and records a manifest
// of inputs, seeds and hashes. No timestamps, so identical runs are byte-identical.
class OutputSet {
public:
    explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {}

    void add(const std::string& name, const std::string& content) { files_.emplace_back(name, content); }
    void set_input(const std::string& key, json value) { inputs_[key] = std::move(value); }

    std::vector<std::filesystem::path> write(const std::string& command) const
    {
        std::filesystem::create_directories(dir_);
        std::vector<std::filesystem::path> written;
        json outputs = json::array();
        for (const auto& [name, content] : files_) {
            const auto p = dir_ / name;
            std::ofstream(p, std::ios::binary) << content;
            outputs.push_back({{"file", name}, {"sha1", sha1_hex(content)}, {"bytes", content.size()}});
            written.push_back(p);
        }
        const json manifest = {{"command", command},
                               {"inputs", inputs_},
                               {"versions", {{"hyperstab", "1.0.0"}, {"boost", BOOST_LIB_VERSION}}},
                               {"outputs", outputs}};
        const auto mp = dir_ / "manifest.json";
        std::ofstream(mp, std::ios::binary) << manifest.dump(2) << '\n';
        written.push_back(mp);
        return written;
    }

private:
    std::filesystem::path dir_;
    std::vector<std::pair<std::string, std::string>> files_;
    json inputs_ = json::object();
};

} // namespace hyperstab
