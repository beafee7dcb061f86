#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "serrewt/cli.hpp"
#include "serrewt/errors.hpp"

#ifndef SERREWT_DEFAULT_DOCS
#define SERREWT_DEFAULT_DOCS "docs"
#endif

int main(int argc, char** argv) {
    CLI::App app{"serrewt: weight sets, shapes and local model tables for GL3"};
    std::string in_path, out_path, schemas;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool jsonl = false;
    app.add_option("--in", in_path, "job file (default: stdin)");
    app.add_option("--out", out_path, "report file (default: stdout)");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized checks; overrides the job's seed");
    app.add_option("--jobs", jobs, "worker threads for verify-tables")->check(CLI::Range(1u, 256u));
    app.add_option("--schemas", schemas, "directory holding the job schemas");
    app.add_flag("--jsonl", jsonl, "verify-tables: print one regression record per line instead of the report");
    CLI11_PARSE(app, argc, argv);

    if (schemas.empty()) {
        const char* env = std::getenv("SERREWT_DOCS");
        schemas = env ? env : SERREWT_DEFAULT_DOCS;
    }
    serrewt::RunOptions opt{schemas, jobs, bool(*seed_opt), seed};

    try {
        nlohmann::json job;
        try {
            if (in_path.empty()) job = nlohmann::json::parse(std::cin);
            else {
                std::ifstream in(in_path);
                if (!in) throw serrewt::SchemaError("cannot open " + in_path);
                job = nlohmann::json::parse(in);
            }
        } catch (const nlohmann::json::exception& e) {
            throw serrewt::SchemaError(std::string("job is not valid JSON: ") + e.what());
        }
        serrewt::Json report = serrewt::run_job(job, opt);

        std::ostringstream os;
        if (jsonl && report["command"] == "verify-tables") {
            for (auto& r : report["result"]["records"]) os << r.dump() << "\n";
        } else {
            os << report.dump(2) << "\n";
        }
        if (out_path.empty()) std::cout << os.str();
        else {
            std::ofstream out(out_path);
            if (!out) throw serrewt::SchemaError("cannot write " + out_path);
            out << os.str();
        }
        if (report["command"] == "verify-tables" && !report["result"]["all_true"].get<bool>()) {
            std::cerr << "verification failed\n";
            return 4;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return serrewt::exit_code_for(e);
    }
}
