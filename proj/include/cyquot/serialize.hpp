#pragma once

#include <json.hpp>

#include "cyquot/classify.hpp"

namespace cyquot {

using json = nlohmann::ordered_json;

inline json to_json(const Kernel& k) {
    json arr = json::array();
    for (const auto& e : k.elements) arr.push_back({e[0], e[1], e[2]});
    return arr;
}

inline json to_json(const TorusPoint& p) {
    json arr = json::array();
    for (const auto& c : p.coords()) arr.push_back(c.str());
    return arr;
}

inline json to_json(const Cocycle& c) {
    json obj = json::object();
    auto gens = generators(c.gid);
    const char* names3[] = {"g"};
    const char* names9[] = {"h", "k"};
    const char* names27[] = {"g", "h", "k"};
    for (size_t i = 0; i < gens.size(); ++i) {
        const char* n = (c.gid == GroupId::Z3x2) ? names9[i]
                        : (c.gid == GroupId::Heis3) ? names27[i]
                                                    : names3[i];
        obj[n] = to_json(c.of(gens[i]));
    }
    return obj;
}

inline json to_json(const SemilinearMap& c) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(c.M.at(i, j).str());
        rows.push_back(row);
    }
    return json{{"matrix", rows}, {"antilinear", c.antilinear}};
}

inline json to_json(const NormalizerElement& n) {
    json obj = to_json(n.map);
    obj["phi"] = n.phi.table;
    return obj;
}

inline json to_json(const EmptinessCertificate& c) {
    return json{{"pair", c.pair},
                {"candidate_count", c.candidate_count},
                {"witnesses_checked", c.witnesses_checked},
                {"verdict", c.empty ? "empty" : "nonempty"},
                {"method", c.method}};
}

inline std::string singularity_str(const QuotientDescriptor& d) {
    return std::to_string(d.sing_count) + " x 1/" + std::to_string(d.sing_n) + "(" +
           std::to_string(d.sing_w[0]) + "," + std::to_string(d.sing_w[1]) + "," +
           std::to_string(d.sing_w[2]) + ")";
}

inline json to_json(const QuotientDescriptor& d) {
    return json{{"group", group_name(d.gid)},
                {"lattice", d.lattice_label},
                {"action", d.action},
                {"singularities", singularity_str(d)},
                {"pi1", d.pi1},
                {"uniformized", d.uniformized}};
}

inline json to_json(const ClassificationReport& r) {
    json rows = json::array();
    for (size_t i = 0; i < r.rows.size(); ++i) {
        json row = to_json(r.rows[i]);
        row["i"] = (int)(i + 1);
        rows.push_back(row);
    }
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"rows", {p.row_a, p.row_b}}, {"reason", p.reason}});
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    return json{{"rows", rows}, {"distinctions", pairs}, {"counts", counts}};
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline std::string render_md(const ClassificationReport& r) {
    std::string out = "| i | G | Lambda | action | singularities | pi_1 |\n";
    out += "|---|---|--------|--------|---------------|------|\n";
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const auto& d = r.rows[i];
        out += "| " + std::to_string(i + 1) + " | " + group_name(d.gid) + " | " +
               d.lattice_label + " | " + d.action + " | " + singularity_str(d) + " | " + d.pi1 +
               " |\n";
    }
    return out;
}

inline std::string render_csv(const ClassificationReport& r) {
    std::string out = "i,group,lattice,action,singularities,pi1\n";
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const auto& d = r.rows[i];
        out += std::to_string(i + 1) + "," + detail::csv_escape(group_name(d.gid)) + "," +
               detail::csv_escape(d.lattice_label) + "," + detail::csv_escape(d.action) + "," +
               detail::csv_escape(singularity_str(d)) + "," + detail::csv_escape(d.pi1) + "\n";
    }
    return out;
}

} // namespace cyquot
