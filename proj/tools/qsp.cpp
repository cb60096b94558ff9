// qsp: command line front end.
//
// Example:
//   qsp --context data/sl3.json --command coideal-conditions
//   qsp --context data/sl3.json --command verify --c 3,3 --degree 3
#include "qsp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qsp::InputError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw qsp::InputError(path + ": " + e.what());
    }
}

int emit(const nlohmann::json& j, const std::string& output) {
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out) {
        std::cerr << "qsp: cannot write " << output << "\n";
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coideal subalgebras of Drinfeld doubles: exact computations"};
    std::string context_file, command, relations_file, c_list, output;
    int degree = -1, threads = 1;
    app.add_option("--context", context_file, "context file (JSON)");
    app.add_option("--command", command, "command to run")->required()->check(CLI::IsMember(qsp::command_names()));
    app.add_option("--degree", degree, "degree bound, overrides D of the context");
    app.add_option("--relations", relations_file, "relations of a pre-Nichols presentation (JSON)");
    app.add_option("--c", c_list, "parameters: 'sym' or a comma separated list of literals in z");
    app.add_option("--output", output, "write the result here instead of stdout");
    app.add_option("--threads", threads, "worker threads for per-degree computations")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        qsp::JobSpec spec;
        spec.command = command;
        spec.threads = threads;
        if (command != "examples") {
            if (context_file.empty()) throw qsp::InputError("--context is required for " + command);
            nlohmann::json cj = read_json(context_file);
            spec.context = qsp::parse_context(cj);
            auto items = c_list.empty() ? qsp::context_parameter_list(cj) : qsp::split_list(c_list);
            if (items.empty()) items = {"sym"};
            spec.c = qsp::parse_parameters(items, spec.context.n, spec.context.N);
            if (!relations_file.empty()) spec.relations = qsp::parse_relations(read_json(relations_file), spec.context);
        }
        if (degree >= 0) spec.degree = degree;
        qsp::JobResult r = qsp::run_job(spec);
        int rc = emit(r.output, output);
        return rc ? rc : r.exit_code;
    } catch (const qsp::InputError& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", std::string("internal: ") + e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
