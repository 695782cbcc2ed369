// Command-line surface for the exact q-moment computations: evaluate
// family members and moments, emit coefficient tables, run the proven
// identity suite and the conjecture grid, and manage golden files.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "qmoments/conjectures.hpp"
#include "qmoments/json_io.hpp"
#include "qmoments/moments.hpp"
#include "qmoments/orthopoly.hpp"
#include "qmoments/render.hpp"
#include "qmoments/verify.hpp"

namespace fs = std::filesystem;
using namespace qmoments;

namespace {

struct RunConfig {
    std::string family;
    std::string moment_name;
    std::string table_name;
    int n = 0;
    int N = 5;
    int verify_N = 0;  // 0 keeps the per-group defaults
    int n_max = 6;
    int m_max = 2;
    std::string format = "text";
    std::string conj_format = "json";
    std::string out_path;
    int jobs = 1;
    std::string golden_dir;
    std::vector<std::string> only;
    std::string mutate;
    std::string json_path;
    std::string conjecture_id;
};

void write_output(const RunConfig& cfg, const std::string& body) {
    if (cfg.out_path.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
    out << body;
}

RatFunc eval_family_member(const std::string& name, int n) {
    if (name == "orth") {
        auto fam = orthogonal_family(moment_sequence("qcatalan_full"), n);
        return fam.generator(n);
    }
    return family(name).generator(n);
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    return quoted + "\"";
}

int cmd_eval(const RunConfig& cfg) {
    RatFunc value;
    Json meta;
    if (!cfg.family.empty()) {
        try {
            value = eval_family_member(cfg.family, cfg.n);
        } catch (const std::invalid_argument&) {
            std::ostringstream os;
            os << "unknown family '" << cfg.family << "'; valid names:";
            for (const auto& f : family_names()) os << " " << f;
            os << " orth";
            throw std::invalid_argument(os.str());
        }
        meta["object"] = "family_member";
        meta["name"] = cfg.family;
    } else {
        value = moment(moment_kind_from_name(cfg.moment_name), cfg.n);
        meta["object"] = "moment";
        meta["name"] = cfg.moment_name;
    }
    meta["n"] = cfg.n;
    meta["value"] = to_json(value);

    std::string body;
    if (cfg.format == "json") {
        body = meta.dump(2);
    } else if (cfg.format == "latex") {
        body = meta["object"] == "family_member" ? to_text_by_x(value, TextStyle::latex)
                                                 : to_text(value, TextStyle::latex);
    } else {
        body = meta["object"] == "family_member" ? to_text_by_x(value) : to_text(value);
    }
    write_output(cfg, body);
    return 0;
}

TriangularTable build_table(const std::string& name, int N) {
    if (name == "a_orth")
        return expand_in_family(orthogonal_family(moment_sequence("qcatalan_full"), N), N);
    if (name == "a_qfib") return expand_in_family(family("qfib"), N);
    if (name == "a_fibtq") return expand_in_family(family("fib_tq"), N);
    TableKind kind;
    if (name == "A") kind = TableKind::A;
    else if (name == "B") kind = TableKind::B;
    else if (name == "D") kind = TableKind::D;
    else if (name == "E") kind = TableKind::E;
    else
        throw std::invalid_argument("unknown table '" + name +
                                    "'; valid names: a_orth a_qfib a_fibtq A B D E");
    TriangularTable t(name, N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) t.set(n, k, table_ABDE(kind, n, k));
    return t;
}

std::string render_table(const TriangularTable& t, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        Json j;
        j["object"] = "table";
        j["name"] = t.name();
        j["N"] = t.limit();
        j["layout"] = "rows n = 0..N, columns k = 0..n";
        Json rows = Json::array();
        for (int n = 0; n <= t.limit(); ++n) {
            Json row = Json::array();
            for (int k = 0; k <= n; ++k) row.push_back(to_json(t.at(n, k)));
            rows.push_back(row);
        }
        j["rows"] = rows;
        return j.dump(2);
    }
    if (format == "csv") {
        for (int n = 0; n <= t.limit(); ++n) {
            for (int k = 0; k <= n; ++k) {
                if (k) os << ",";
                os << csv_quote(to_text(t.at(n, k)));
            }
            os << "\n";
        }
        return os.str();
    }
    if (format == "latex") {
        os << "\\begin{array}{" << std::string(t.limit() + 1, 'l') << "}\n";
        for (int n = 0; n <= t.limit(); ++n) {
            for (int k = 0; k <= n; ++k) {
                if (k) os << " & ";
                os << to_text(t.at(n, k), TextStyle::latex);
            }
            os << " \\\\\n";
        }
        os << "\\end{array}\n";
        return os.str();
    }
    for (int n = 0; n <= t.limit(); ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k) os << " | ";
            os << to_text(t.at(n, k));
        }
        os << "\n";
    }
    return os.str();
}

int cmd_table(const RunConfig& cfg) {
    TriangularTable t = build_table(cfg.table_name, cfg.N);
    write_output(cfg, render_table(t, cfg.format));
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyBounds bounds = VerifyBounds::defaults();
    if (cfg.verify_N > 0) bounds.set_all(cfg.verify_N);
    Mutation mutation = cfg.mutate.empty() ? Mutation::none : mutation_from_name(cfg.mutate);
    auto reports = run_identity_suite(bounds, cfg.only, cfg.jobs, mutation);

    bool all_pass = true;
    std::ostringstream os;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title;
        if (!r.range.empty()) os << "  (" << r.range << ")";
        os << "\n";
        if (!r.pass && r.counterexample) {
            os << "       counterexample at " << r.counterexample->where << "\n"
               << "       lhs  = " << r.counterexample->lhs << "\n"
               << "       rhs  = " << r.counterexample->rhs << "\n"
               << "       diff = " << r.counterexample->difference << "\n";
        }
        if (!r.pass && !r.note.empty()) os << "       " << r.note << "\n";
    }
    os << (all_pass ? "verify: all identities hold\n" : "verify: FAILURES present\n");
    write_output(cfg, os.str());

    if (!cfg.json_path.empty()) {
        Json j;
        j["object"] = "verify_report";
        j["pass"] = all_pass;
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        j["identities"] = list;
        std::ofstream jf(cfg.json_path, std::ios::binary);
        jf << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_conjecture(const RunConfig& cfg) {
    std::vector<ConjectureCase> cells;
    for (ConjectureId id : all_conjecture_ids()) {
        if (!cfg.conjecture_id.empty() && conjecture_id_name(id) != cfg.conjecture_id) continue;
        switch (id) {
            case ConjectureId::c3_45:
            case ConjectureId::c3_50:
            case ConjectureId::c3_51:
                for (int m = 1; m <= cfg.m_max; ++m)
                    for (int n = 1; n <= cfg.n_max; ++n) cells.push_back({id, n, m});
                break;
            case ConjectureId::gf_q1:
                for (int m = 1; m <= cfg.m_max && cfg.n_max >= 1; ++m)
                    cells.push_back({id, cfg.n_max, m});
                break;
            default:
                for (int n = 1; n <= cfg.n_max; ++n) cells.push_back({id, n, 1});
                break;
        }
    }
    if (!cfg.conjecture_id.empty() && cells.empty() && cfg.n_max >= 1)
        throw std::invalid_argument("unknown conjecture id '" + cfg.conjecture_id +
                                    "'; valid: 3.45 3.47 3.48 3.49 3.50 3.51 gf_q1");

    std::vector<VerificationReport> reports(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            reports[i] = check_conjecture(cells[i]);
        }
    };
    if (cfg.jobs <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> pool;
        for (int j = 0; j < cfg.jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    int failures = 0;
    for (const auto& r : reports)
        if (!r.pass) ++failures;

    Json j;
    j["object"] = "conjecture_report";
    j["interpretation"] =
        "table arguments written (x,t) are read as the (t,q) tables; conjecture outcomes are"
        " findings, never assertions";
    j["cells"] = Json::array();
    for (const auto& r : reports) j["cells"].push_back(to_json(r));
    j["findings"] = failures;

    if (cfg.conj_format == "text") {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.range << "\n";
            if (!r.pass && r.counterexample)
                os << "       difference: " << r.counterexample->difference << "\n";
        }
        os << "conjecture grid: " << reports.size() << " cells, " << failures
           << " findings (findings are reported, not build failures)\n";
        write_output(cfg, os.str());
    } else {
        write_output(cfg, j.dump(2));
    }
    if (!cfg.json_path.empty()) {
        std::ofstream jf(cfg.json_path, std::ios::binary);
        jf << j.dump(2) << "\n";
    }
    return 0;
}

// Golden manifest: id -> canonical JSON document.
std::vector<std::pair<std::string, std::string>> golden_manifest() {
    std::vector<std::pair<std::string, std::string>> files;
    auto add_family = [&files](const std::string& name, int upto) {
        Json j;
        j["object"] = "family";
        j["name"] = name;
        Json vals = Json::array();
        for (int n = 0; n <= upto; ++n) vals.push_back(to_json(eval_family_member(name, n)));
        j["values"] = vals;
        files.emplace_back("family_" + name + ".json", j.dump(2) + "\n");
    };
    add_family("qfib", 5);
    add_family("fib_tq", 6);
    add_family("lucas_tq", 6);
    add_family("R_tq", 3);
    add_family("S_tq", 3);
    add_family("orth", 5);
    for (const std::string name : {"a_qfib", "a_orth", "a_fibtq", "A", "B", "D", "E"}) {
        int N = (name == "a_qfib" || name == "a_orth") ? 5 : 6;
        TriangularTable t = build_table(name, N);
        files.emplace_back("table_" + name + ".json", render_table(t, "json") + "\n");
    }
    for (const auto& mname : moment_kind_names()) {
        Json j;
        j["object"] = "moment_sequence";
        j["name"] = mname;
        Json vals = Json::array();
        for (int n = 0; n <= 6; ++n) vals.push_back(to_json(moment(moment_kind_from_name(mname), n)));
        j["values"] = vals;
        files.emplace_back("moment_" + mname + ".json", j.dump(2) + "\n");
    }
    return files;
}

std::string golden_dir_or_die(const RunConfig& cfg) {
    if (!cfg.golden_dir.empty()) return cfg.golden_dir;
    const char* env = std::getenv("QMOMENTS_GOLDEN_DIR");
    if (env && *env) return env;
    throw std::invalid_argument("golden: no directory; pass --dir or set QMOMENTS_GOLDEN_DIR");
}

int cmd_golden_write(const RunConfig& cfg) {
    fs::path dir = golden_dir_or_die(cfg);
    fs::create_directories(dir);
    auto files = golden_manifest();
    for (const auto& [name, body] : files) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw std::runtime_error("golden: cannot write " + (dir / name).string());
        out << body;
    }
    std::cout << "golden: wrote " << files.size() << " files to " << dir.string() << "\n";
    return 0;
}

int cmd_golden_check(const RunConfig& cfg) {
    fs::path dir = golden_dir_or_die(cfg);
    auto files = golden_manifest();
    int bad = 0;
    for (const auto& [name, body] : files) {
        std::ifstream in(dir / name, std::ios::binary);
        if (!in) {
            std::cout << "[MISSING] " << name << "\n";
            ++bad;
            continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != body) {
            std::cout << "[DIFF] " << name << "\n";
            ++bad;
        } else {
            std::cout << "[OK] " << name << "\n";
        }
    }
    std::cout << "golden: " << (files.size() - bad) << "/" << files.size() << " files match\n";
    return bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-Fibonacci/q-Lucas moment tables, identities and conjecture checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&cfg](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "latex", "csv"}));
        cmd->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one family member or moment");
    auto* fam_opt = eval->add_option("--family", cfg.family, "family name (see --help-names)");
    auto* mom_opt = eval->add_option("--moment", cfg.moment_name, "moment name");
    eval->add_option("--n", cfg.n, "index")->required();
    fam_opt->excludes(mom_opt);
    add_format(eval);

    CLI::App* table = app.add_subcommand("table", "emit a triangular coefficient table");
    table->add_option("--name", cfg.table_name, "table name: a_orth a_qfib a_fibtq A B D E")
        ->required();
    table->add_option("--N", cfg.N, "largest row index");
    add_format(table);

    CLI::App* verify = app.add_subcommand("verify", "run the proven-identity suite");
    verify->add_option("--only", cfg.only, "restrict to the given identity ids");
    verify->add_option("--N", cfg.verify_N, "override all per-group bounds");
    verify->add_option("--jobs", cfg.jobs, "worker threads");
    verify->add_option("--json", cfg.json_path, "write the machine-readable report here");
    verify->add_option("--mutate", cfg.mutate,
                       "negative control: apply a documented deliberate defect")
        ->check(CLI::IsMember(mutation_names()));
    verify->add_option("--out", cfg.out_path, "write text output to a file");

    CLI::App* conj = app.add_subcommand("conjecture", "run the conjecture grid (findings only)");
    conj->add_option("--id", cfg.conjecture_id, "single conjecture id");
    conj->add_option("--n-max", cfg.n_max, "largest n");
    conj->add_option("--m-max", cfg.m_max, "largest m");
    conj->add_option("--jobs", cfg.jobs, "worker threads");
    conj->add_option("--format", cfg.conj_format, "json (grid report, default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    conj->add_option("--json", cfg.json_path, "also write the report to a file");
    conj->add_option("--out", cfg.out_path, "write stdout output to a file");

    CLI::App* golden = app.add_subcommand("golden", "write or check golden files");
    golden->require_subcommand(1);
    CLI::App* gw = golden->add_subcommand("write", "write the golden manifest");
    CLI::App* gc = golden->add_subcommand("check", "byte-compare the golden manifest");
    for (CLI::App* g : {gw, gc})
        g->add_option("--dir", cfg.golden_dir, "golden directory (or QMOMENTS_GOLDEN_DIR)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            if (cfg.family.empty() && cfg.moment_name.empty())
                throw std::invalid_argument("eval: pass --family or --moment");
            return cmd_eval(cfg);
        }
        if (table->parsed()) return cmd_table(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (conj->parsed()) return cmd_conjecture(cfg);
        if (golden->parsed()) return gw->parsed() ? cmd_golden_write(cfg) : cmd_golden_check(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
