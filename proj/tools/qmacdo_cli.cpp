#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmacdo/suites.hpp"

namespace {

qmacdo::QQ parse_rational(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw qmacdo::ConfigError("cannot parse rational: " + text);
    v.canonicalize();
    return v;
}

qmacdo::Partition parse_partition(const std::string& text) {
    qmacdo::Partition lam;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        if (!piece.empty()) lam.push_back(std::stoi(piece));
    return lam;
}

std::string mode_text(const qmacdo::SuiteConfig& cfg) {
    if (cfg.symbolic) return "symbolic";
    if (cfg.qt_given) return "eval q=" + qmacdo::QQ(cfg.q0).get_str() + " t=" + qmacdo::QQ(cfg.t0).get_str();
    return "eval seeded";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the deformed operator and kernel identities"};
    app.require_subcommand(0, 1);

    qmacdo::SuiteConfig cfg;
    std::string lam_text, q_text, t_text, out_path, report = "lines";

    app.add_option("--suite", cfg.suite, "suite name; may also be given as a subcommand");
    app.add_option("--n", cfg.n, "x-bank arity");
    app.add_option("--m", cfg.m, "y-bank arity");
    app.add_option("--N", cfg.N, "z-bank arity");
    app.add_option("--M", cfg.M, "w-bank arity");
    app.add_option("--K", cfg.K, "first hypergeometric rank");
    app.add_option("--L", cfg.L, "second hypergeometric rank");
    app.add_option("--rmax,--r", cfg.rmax, "operator order bound");
    app.add_option("--order", cfg.order, "series truncation order");
    app.add_option("--deg", cfg.deg, "degree / partition weight bound");
    app.add_option("--lam", lam_text, "target partition, comma separated");
    app.add_flag("--symbolic", cfg.symbolic, "keep q,t symbolic");
    app.add_option("--q", q_text, "rational value for q");
    app.add_option("--t", t_text, "rational value for t");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--out", out_path, "report path, default stdout");
    app.add_option("--report", report, "report format")->check(CLI::IsMember({"lines", "table"}));

    for (const std::string& name : qmacdo::suite_names())
        app.add_subcommand(name, qmacdo::suite_header(name))->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto* sub : app.get_subcommands()) cfg.suite = sub->get_name();
        if (cfg.suite.empty()) throw qmacdo::ConfigError("no suite selected");
        if (!lam_text.empty()) {
            cfg.lam = parse_partition(lam_text);
            cfg.lam_given = true;
        }
        if (!q_text.empty() || !t_text.empty()) {
            if (q_text.empty() || t_text.empty())
                throw qmacdo::ConfigError("q and t must be given together");
            cfg.q0 = parse_rational(q_text);
            cfg.t0 = parse_rational(t_text);
            cfg.qt_given = true;
        }
        qmacdo::validate(cfg);

        std::vector<qmacdo::CheckRecord> records = qmacdo::run_suite(cfg);

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw qmacdo::ConfigError("cannot open output path: " + out_path);
        }
        std::ostream& os = out_path.empty() ? std::cout : file;

        std::size_t failed = 0;
        for (const auto& r : records)
            if (!r.ok()) ++failed;

        if (report == "lines") {
            nlohmann::ordered_json head;
            head["suite"] = cfg.suite;
            head["checks"] = qmacdo::suite_header(cfg.suite);
            head["mode"] = mode_text(cfg);
            head["seed"] = cfg.seed;
            os << head.dump() << "\n";
            qmacdo::emit_lines(os, records);
            nlohmann::ordered_json tail;
            tail["summary"] = cfg.suite;
            tail["total"] = records.size();
            tail["failed"] = failed;
            os << tail.dump() << "\n";
        } else {
            os << cfg.suite << ": " << qmacdo::suite_header(cfg.suite) << "\n";
            os << "mode: " << mode_text(cfg) << ", seed " << cfg.seed << "\n\n";
            qmacdo::emit_table(os, records);
            os << "\ntotal " << records.size() << ", failed " << failed << "\n";
        }
        return failed == 0 ? 0 : 1;
    } catch (const qmacdo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
