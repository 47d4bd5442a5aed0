// Command-line front end: construct shellings, realize F-vectors, compress,
// and verify, in text or JSON. Exit codes: 0 success, 1 usage/validation
// error, 2 unrealizable input, 3 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shellkit/json_io.hpp"
#include "shellkit/shellkit.hpp"

namespace {

using namespace shellkit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnrealizable = 2;
constexpr int kExitVerifyFailed = 3;

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<std::string> parse_csv_strings(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON (starts with '[' or '{') or a file path holding JSON.
json json_or_file(const std::string& arg) {
    std::string text = arg;
    if (arg.empty() || (arg[0] != '[' && arg[0] != '{')) text = read_file(arg);
    return json::parse(text);
}

FVector parse_fvector(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{'))
        return io::fvector_from_json(json::parse(arg));
    FVector f;
    for (int v : parse_csv_ints(arg)) f.push_back(v);
    return f;
}

CapVector parse_caps(const std::string& arg) {
    if (!arg.empty() && arg[0] == '[') return io::caps_from_json(json::parse(arg));
    std::vector<std::optional<int>> caps;
    for (const std::string& item : parse_csv_strings(arg)) {
        if (item.empty()) continue;
        if (item == "inf" || item == "null" || item == "*")
            caps.push_back(std::nullopt);
        else
            caps.push_back(std::stoi(item));
    }
    return CapVector(std::move(caps));
}

bool color_enabled() {
    const char* v = std::getenv("SHELLKIT_COLOR");
    return v && *v && std::string(v) != "0";
}

struct LayoutArgs {
    int l = 0;
    std::string parts;
    std::string order;
    std::string assign;
    bool parts_set = false;

    VertexLayout build() const {
        auto ps = parse_csv_ints(parts);
        if (order.empty() && assign.empty()) return VertexLayout::canonical(l, ps);
        VertexLayout base = VertexLayout::canonical(l, ps);
        std::vector<int> part_of;
        if (!assign.empty()) {
            part_of = parse_csv_ints(assign);
        } else {
            for (Vertex v = 1; v <= base.n(); ++v) part_of.push_back(base.part_of(v));
        }
        std::vector<Vertex> ord =
            order.empty() ? base.order() : std::vector<Vertex>(parse_csv_ints(order));
        return VertexLayout(l, ps, part_of, ord);
    }
};

void add_layout_options(CLI::App* cmd, LayoutArgs& args) {
    cmd->add_option("--l", args.l, "number of free (simplex) vertices")->default_val(0);
    cmd->add_option("--parts", args.parts, "part sizes, e.g. 3,3 (empty for none)")->required();
    cmd->add_option("--order", args.order, "total order as a permutation of vertex ids");
    cmd->add_option("--assign", args.assign, "per-vertex part index (0 = free)");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

int compare_golden(const std::string& name, const std::string& got, const std::string& path) {
    std::string want = read_file(path);
    if (got == want) {
        std::cout << "[PASS] " << name << " matches " << path << "\n";
        return kExitOk;
    }
    std::cout << "[FAIL] " << name << " differs from " << path << "\n";
    std::istringstream a(got), b(want);
    std::string la, lb;
    int line = 0;
    while (true) {
        ++line;
        bool ga = static_cast<bool>(std::getline(a, la));
        bool gb = static_cast<bool>(std::getline(b, lb));
        if (!ga && !gb) break;
        if (la != lb || ga != gb) {
            std::cout << "  first difference at line " << line << ":\n    got:  "
                      << (ga ? la : "<eof>") << "\n    want: " << (gb ? lb : "<eof>") << "\n";
            break;
        }
    }
    return kExitVerifyFailed;
}

int run_paper_tables(const std::string& testdata) {
    int rc = kExitOk;
    auto l33 = VertexLayout::canonical(0, {3, 3});
    rc = std::max(rc, compare_golden("constructed table Lambda(0;3,3) d=4",
                                     render_table(build_shelling_sigma(l33, 4)),
                                     testdata + "/table_constructed_033_d4.txt"));
    rc = std::max(rc, compare_golden("naive table Lambda(0;3,3) d=4",
                                     render_table(naive_sigma(revlex_shelling(l33, 4))),
                                     testdata + "/table_naive_033_d4.txt"));
    auto l543 = VertexLayout::canonical(1, {5, 4, 3});
    Face tau = Face::of({1, 2, 4, 5, 6, 9, 11, 12});
    rc = std::max(rc, compare_golden("restriction worked example Lambda(1;5,4,3)",
                                     render_restriction(tau, restriction(l543, tau), l543),
                                     testdata + "/restriction_example.txt"));
    return rc;
}

int run_verify_input(const std::string& path, const std::string& format, const std::string& out) {
    json j = json::parse(read_file(path));
    VerificationReport rep;
    if (j.value("kind", "") == "realization" || j.contains("m")) {
        RealizationResult r = io::realization_from_json(j);
        rep = witness_check(r);
        rep.merge(verify_shelling(r.facets, r.source.d, &r.source.layout));
    } else {
        ShellingTable t = io::table_from_json(j);
        rep = verify_shelling(t);
        rep.merge(verify_restriction_identity(t));
        rep.merge(verify_degree_match(t));
        bool any_sigma = false;
        for (const auto& row : t.rows) any_sigma = any_sigma || row.sigma.has_value();
        if (any_sigma) {
            rep.merge(verify_order_property(t));
            rep.merge(verify_sigma_bijection(t));
        }
        rep.merge(verify_h_consistency(t));
        rep.merge(verify_recursive_r_agreement(t.layout, t.d));
    }
    write_output(out, format == "json" ? io::report_to_json(rep).dump(2) + "\n"
                                       : render_report(rep));
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shellings of skel_d(Lambda(l;p1,...,pm)) with the facet<->monomial bijection"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", output;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", output, "write to file instead of stdout");

    LayoutArgs shelling_layout;
    int shelling_d = 0;
    bool revlex = false, naive = false;
    std::string labels;
    auto* cmd_shelling = app.add_subcommand("shelling", "construct the shelling table");
    add_layout_options(cmd_shelling, shelling_layout);
    cmd_shelling->add_option("--d", shelling_d, "facet size")->required();
    cmd_shelling->add_flag("--revlex", revlex, "use the reverse-lex baseline order");
    cmd_shelling->add_flag("--naive-sigma", naive, "assign sigma by the naive per-weight rule");
    cmd_shelling->add_option("--labels", labels, "display labels per vertex id, comma separated");

    LayoutArgs realize_layout;
    int realize_d = 0;
    std::string f_arg, m_arg;
    auto* cmd_realize = app.add_subcommand("realize", "realize an F-vector as an h-vector");
    add_layout_options(cmd_realize, realize_layout);
    cmd_realize->add_option("--d", realize_d, "facet size")->required();
    cmd_realize->add_option("--F", f_arg, "F-vector, csv or JSON or file");
    cmd_realize->add_option("--M", m_arg, "multicomplex as JSON exponent arrays or file");

    std::string caps_arg, compress_f;
    auto* cmd_compress = app.add_subcommand("compress", "revlex compression of an F-vector");
    cmd_compress->add_option("--caps", caps_arg, "caps, e.g. 2,2 or inf,2,1")->required();
    cmd_compress->add_option("--F", compress_f, "F-vector, csv or JSON")->required();

    std::string verify_input, testdata = "testdata";
    int sweep_n = 0, random_orders = 3;
    std::uint64_t seed = 20081224;
    bool paper_tables = false;
    auto* cmd_verify = app.add_subcommand("verify", "run the brute-force oracle suite");
    cmd_verify->add_option("--input", verify_input, "table or realization JSON file");
    cmd_verify->add_option("--sweep", sweep_n, "exhaustive contract for all layouts with n <= N");
    cmd_verify->add_flag("--paper-tables", paper_tables, "check bundled golden files");
    cmd_verify->add_option("--testdata", testdata, "directory of golden files");
    cmd_verify->add_option("--seed", seed, "seed for the random-order sweeps");
    cmd_verify->add_option("--random-orders", random_orders, "random admissible orders per instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        RenderOptions opts;
        opts.color = color_enabled();
        std::vector<std::string> label_list;
        if (!labels.empty()) {
            label_list = parse_csv_strings(labels);
            opts.labels = &label_list;
        }

        if (cmd_shelling->parsed()) {
            VertexLayout layout = shelling_layout.build();
            ShellingTable t = revlex ? revlex_shelling(layout, shelling_d)
                                     : build_shelling_sigma(layout, shelling_d);
            if (naive) {
                if (!revlex) t = revlex_shelling(layout, shelling_d);
                t = naive_sigma(t);
            }
            write_output(output, format == "json" ? io::table_to_json(t).dump(2) + "\n"
                                                  : render_table(t, opts));
            return kExitOk;
        }

        if (cmd_realize->parsed()) {
            VertexLayout layout = realize_layout.build();
            RealizationResult r = [&] {
                if (!m_arg.empty()) {
                    auto members = io::monomials_from_json(json_or_file(m_arg));
                    return extract(layout, realize_d,
                                   Multicomplex::create(layout.caps(realize_d), members));
                }
                if (f_arg.empty())
                    throw std::invalid_argument("realize: provide --F or --M");
                return realize_h_vector(layout, realize_d, parse_fvector(f_arg));
            }();
            write_output(output, format == "json" ? io::realization_to_json(r).dump(2) + "\n"
                                                  : render_realization(r, opts));
            return kExitOk;
        }

        if (cmd_compress->parsed()) {
            CapVector caps = parse_caps(caps_arg);
            FVector f = parse_fvector(compress_f);
            if (auto bad = first_unrealizable_degree(f, caps)) {
                std::cerr << "unrealizable: divisor-closure fails at degree " << *bad << "\n";
                return kExitUnrealizable;
            }
            auto members = compress(f, caps);
            if (format == "json") {
                write_output(output, io::to_json(members).dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& m : members) text += (text.empty() ? "" : " ") + to_string(m);
                write_output(output, text + "\n");
            }
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            if (paper_tables) return run_paper_tables(testdata);
            if (!verify_input.empty()) return run_verify_input(verify_input, format, output);
            if (sweep_n > 0) {
                VerificationReport rep = verify_sweep(sweep_n, seed, random_orders);
                write_output(output, format == "json" ? io::report_to_json(rep).dump(2) + "\n"
                                                      : render_report(rep));
                return rep.all_pass() ? kExitOk : kExitVerifyFailed;
            }
            throw std::invalid_argument("verify: provide --input, --sweep or --paper-tables");
        }
    } catch (const UnrealizableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnrealizable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
