#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cyquot/serialize.hpp"

using namespace cyquot;

namespace {

struct Options {
    std::string group;
    std::string kernel;
    std::string format = "md";
    std::string out;
    int jobs = 1;
    bool no_pin = false;
    bool orbits = false;
};

int emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << opt.out << "\n";
        return 1;
    }
    f << text;
    return 0;
}

// exit code 2 when a computed value deviates from its pinned expectation
int check_pins(const Options& opt, const std::vector<std::pair<std::string, i64>>& counts) {
    if (opt.no_pin) return 0;
    auto mismatches = validate_counts(counts);
    if (mismatches.empty()) return 0;
    for (const auto& m : mismatches) std::cerr << "count mismatch: " << m << "\n";
    return 2;
}

std::optional<GroupId> parse_group(const std::string& g) {
    if (g == "z3") return GroupId::Z3;
    if (g == "z7") return GroupId::Z7;
    if (g == "z3x2") return GroupId::Z3x2;
    if (g == "heis3") return GroupId::Heis3;
    return std::nullopt;
}

// K1..K4 name the Z3^2 kernels; L1, L2 are the two Heisenberg lattices
// (same underlying kernels as K3, K4)
std::optional<Kernel> parse_kernel(const std::string& k) {
    if (k == "K1") return kernel_K1();
    if (k == "K2") return kernel_K2();
    if (k == "K3" || k == "L1") return kernel_K3();
    if (k == "K4" || k == "L2") return kernel_K4();
    return std::nullopt;
}

std::string kernel_key(GroupId gid, const Kernel& k) {
    std::string name = (k == kernel_K1())   ? "K1"
                       : (k == kernel_K2()) ? "K2"
                       : (k == kernel_K3()) ? "K3"
                                            : "K4";
    if (gid == GroupId::Heis3) {
        if (name == "K3") name = "L1";
        if (name == "K4") name = "L2";
        return "heis3." + name;
    }
    return "z3x2." + name;
}

std::string table_md(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::string out = "|";
    for (const auto& h : header) out += " " + h + " |";
    out += "\n|";
    for (size_t i = 0; i < header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& r : rows) {
        out += "|";
        for (const auto& c : r) out += " " + c + " |";
        out += "\n";
    }
    return out;
}

std::string table_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + detail::csv_escape(r[i]);
        out += "\n";
    }
    return out;
}

int cmd_kernels(const Options& opt) {
    std::vector<std::pair<std::string, i64>> counts;
    json j;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;

    if (opt.orbits) {
        auto orbits = kernel_orbits_z32();
        counts.push_back({"kernels.z3x2.orbits", (i64)orbits.size()});
        header = {"orbit", "size", "representative", "members"};
        json arr = json::array();
        int i = 0;
        for (const auto& o : orbits) {
            ++i;
            std::string members;
            for (const auto& m : o.members) members += (members.empty() ? "" : " ") + m.str();
            rows.push_back({std::to_string(i), std::to_string(o.members.size()),
                            o.representative.str(), members});
            json jo = {{"size", o.members.size()}, {"representative", to_json(o.representative)}};
            json jm = json::array();
            for (const auto& m : o.members) jm.push_back(to_json(m));
            jo["members"] = jm;
            arr.push_back(jo);
        }
        j = json{{"orbits", arr}};
    } else {
        std::vector<Kernel> ks;
        if (opt.group == "heis3") {
            ks = kernel_list_heis();
            counts.push_back({"kernels.heis3.invariant", (i64)ks.size()});
        } else {
            ks = kernel_enumerate();
            if (opt.group.empty() || opt.group == "z3x2")
                counts.push_back({"kernels.total", (i64)ks.size()});
        }
        header = {"i", "order", "elements"};
        json arr = json::array();
        int i = 0;
        for (const auto& k : ks) {
            ++i;
            rows.push_back({std::to_string(i), std::to_string(k.size()), k.str()});
            arr.push_back({{"order", k.size()}, {"elements", to_json(k)}});
        }
        j = json{{"kernels", arr}};
    }

    std::string text;
    if (opt.format == "json")
        text = j.dump(2) + "\n";
    else if (opt.format == "csv")
        text = table_csv(header, rows);
    else
        text = table_md(header, rows);
    int rc = emit(opt, text);
    if (rc) return rc;
    return check_pins(opt, counts);
}

int run_cocycle_pipeline(const Options& opt, bool with_classes) {
    auto gid = parse_group(opt.group);
    if (!gid || (*gid != GroupId::Z3x2 && *gid != GroupId::Heis3)) {
        std::cerr << "this command needs --group z3x2 or --group heis3\n";
        return 1;
    }
    auto kernel = parse_kernel(opt.kernel);
    if (!kernel) {
        std::cerr << "this command needs --kernel {K1,K2,K3,K4,L1,L2}\n";
        return 1;
    }
    Lattice lat = lattice_from_kernel(*kernel);
    auto tuples = enumerate_good(*gid, *kernel, opt.jobs);
    auto cocycles = distinct_cocycles(tuples, lat);
    auto classes = cohomology_classes(cocycles, lat, *gid);

    std::string key = kernel_key(*gid, *kernel);
    std::vector<std::pair<std::string, i64>> counts = {
        {"tuples." + key, (i64)tuples.size()},
        {"cocycles." + key, (i64)cocycles.size()},
        {"classes." + key, (i64)classes.size()},
    };

    json j = {{"group", group_name(*gid)},
              {"kernel", to_json(*kernel)},
              {"tuples", tuples.size()},
              {"distinct_cocycles", cocycles.size()},
              {"classes", classes.size()}};
    std::vector<std::vector<std::string>> rows;
    if (with_classes) {
        json arr = json::array();
        int i = 0;
        for (const auto& cl : classes) {
            ++i;
            arr.push_back({{"size", cl.members.size()},
                           {"representative", to_json(cl.representative())}});
            rows.push_back({std::to_string(i), std::to_string(cl.members.size()),
                            to_json(cl.representative()).dump()});
        }
        j["class_list"] = arr;
    }

    std::string text;
    if (opt.format == "json")
        text = j.dump(2) + "\n";
    else {
        std::vector<std::vector<std::string>> summary = {
            {"tuples", std::to_string(tuples.size())},
            {"distinct cocycles", std::to_string(cocycles.size())},
            {"classes", std::to_string(classes.size())}};
        text = (opt.format == "csv") ? table_csv({"quantity", "value"}, summary)
                                     : table_md({"quantity", "value"}, summary);
        if (with_classes)
            text += (opt.format == "csv")
                        ? table_csv({"class", "size", "representative"}, rows)
                        : table_md({"class", "size", "representative"}, rows);
    }
    int rc = emit(opt, text);
    if (rc) return rc;
    return check_pins(opt, counts);
}

int cmd_normalizer(const Options& opt) {
    auto gid = parse_group(opt.group);
    if (!gid || (*gid != GroupId::Z3x2 && *gid != GroupId::Heis3)) {
        std::cerr << "this command needs --group z3x2 or --group heis3\n";
        return 1;
    }
    std::vector<std::pair<std::string, i64>> counts;
    json j;
    std::vector<std::vector<std::string>> rows;
    if (*gid == GroupId::Heis3) {
        Kernel k = opt.kernel.empty() ? kernel_K3() : *parse_kernel(opt.kernel);
        Lattice lat = lattice_from_kernel(k);
        auto nc = normalizer_heis(lat, Flavor::Complex);
        auto nr = normalizer_heis(lat, Flavor::Real);
        counts = {{"normalizer.heis3.complex", (i64)nc.size()},
                  {"normalizer.heis3.real", (i64)nr.size()}};
        j = {{"group", group_name(*gid)},
             {"complex_order", nc.size()},
             {"real_order", nr.size()}};
        rows = {{"complex", std::to_string(nc.size())}, {"real", std::to_string(nr.size())}};
    } else {
        auto ambient = normalizer_z32(kernel_K1(), Flavor::Complex);
        counts = {{"normalizer.z3x2.ambient", (i64)ambient.size()}};
        j = {{"group", group_name(*gid)}, {"ambient_order", ambient.size()}};
        rows = {{"ambient", std::to_string(ambient.size())}};
        if (!opt.kernel.empty()) {
            auto kernel = parse_kernel(opt.kernel);
            if (!kernel) {
                std::cerr << "unknown kernel\n";
                return 1;
            }
            auto filtered = normalizer_z32(*kernel, Flavor::Complex);
            j["kernel_preserving_order"] = filtered.size();
            rows.push_back({"kernel-preserving", std::to_string(filtered.size())});
        }
    }
    std::string text;
    if (opt.format == "json")
        text = j.dump(2) + "\n";
    else
        text = (opt.format == "csv") ? table_csv({"flavor", "order"}, rows)
                                     : table_md({"flavor", "order"}, rows);
    int rc = emit(opt, text);
    if (rc) return rc;
    return check_pins(opt, counts);
}

int cmd_classify(const Options& opt, bool full) {
    auto report = full_report(opt.jobs);
    std::string text;
    if (opt.format == "json") {
        json j = to_json(report);
        if (!full) j.erase("distinctions");
        text = j.dump(2) + "\n";
    } else if (opt.format == "csv") {
        text = render_csv(report);
    } else {
        text = render_md(report);
        if (full) {
            text += "\ndistinctions:\n";
            for (const auto& p : report.pairs)
                text += "- rows " + std::to_string(p.row_a) + "," + std::to_string(p.row_b) +
                        ": " + p.reason + "\n";
        }
    }
    int rc = emit(opt, text);
    if (rc) return rc;
    return check_pins(opt, report.counts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification pipeline for Gorenstein abelian threefold quotients"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("CYQUOT_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) opt.jobs = v;
    }

    auto add_common = [&](CLI::App* sub, bool with_group, bool with_kernel) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--out", opt.out, "write output to a file");
        sub->add_option("--jobs", opt.jobs, "worker thread count")->check(CLI::PositiveNumber);
        sub->add_flag("--no-pin", opt.no_pin, "do not enforce expected counts");
        if (with_group)
            sub->add_option("--group", opt.group, "group id")
                ->check(CLI::IsMember({"z3", "z7", "z3x2", "heis3"}));
        if (with_kernel)
            sub->add_option("--kernel", opt.kernel, "kernel / lattice id")
                ->check(CLI::IsMember({"K1", "K2", "K3", "K4", "L1", "L2"}));
    };

    auto* kernels = app.add_subcommand("kernels", "admissible kernels and their orbits");
    add_common(kernels, true, false);
    kernels->add_flag("--orbits", opt.orbits, "list orbits instead of kernels");

    auto* cocycles = app.add_subcommand("cocycles", "good tuples, cocycles and class counts");
    add_common(cocycles, true, true);
    auto* cohomology = app.add_subcommand("cohomology", "cohomology classes with representatives");
    add_common(cohomology, true, true);
    auto* normalizer = app.add_subcommand("normalizer", "normalizer group orders");
    add_common(normalizer, true, true);
    auto* classify = app.add_subcommand("classify", "the eight-row classification table");
    add_common(classify, false, false);
    auto* report = app.add_subcommand("report", "classification plus distinction certificates");
    add_common(report, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (kernels->parsed()) return cmd_kernels(opt);
        if (cocycles->parsed()) return run_cocycle_pipeline(opt, false);
        if (cohomology->parsed()) return run_cocycle_pipeline(opt, true);
        if (normalizer->parsed()) return cmd_normalizer(opt);
        if (classify->parsed()) return cmd_classify(opt, false);
        if (report->parsed()) return cmd_classify(opt, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
