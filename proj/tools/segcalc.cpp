// segcalc: segment/multisegment calculus for inner forms of GL_n.
//
//   segcalc <command> <session-file> [--d INT] [--eta +1|-1] [--oracle PATH]
//           [--random N --seed S] [--sigma 2,1,...] [--pretty] [--json]

#include "segcalc/commands.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace segcalc;

    CLI::App app{"Segment and multisegment calculus for linear periods of GL_n(D)", "segcalc"};
    std::string command_name;
    std::string session_path;
    std::optional<int> d;
    std::string eta_text;
    std::string oracle_path;
    std::optional<std::size_t> random_count;
    std::uint64_t seed = 0;
    std::string sigma_text;
    bool pretty = false;
    bool as_json = false;

    app.add_option("command", command_name, "order | classify | mackey | verify | jl | cosets | epsilon")
        ->required()
        ->check(CLI::IsMember({"order", "classify", "mackey", "verify", "jl", "cosets", "epsilon"}));
    app.add_option("session", session_path, "Session file")->required();
    app.add_option("--d", d, "Degree d of the division algebra (overrides `set d=`)");
    app.add_option("--eta", eta_text, "Value of eta_{E/F}(-1), +1 or -1 (overrides `set eta=`)")
        ->check(CLI::IsMember({"+1", "1", "-1"}));
    app.add_option("--oracle", oracle_path, "Oracle table for base-case atoms");
    auto* random_opt = app.add_option("--random", random_count, "verify: number of random instances");
    app.add_option("--seed", seed, "verify: random seed")->needs(random_opt);
    app.add_option("--sigma", sigma_text, "epsilon: involution in one-line notation, e.g. 2,1");
    auto* pretty_flag = app.add_flag("--pretty", pretty, "Human-readable output");
    app.add_flag("--json", as_json, "JSON output (default)")->excludes(pretty_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::string text;
    try {
        text = read_file(session_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    SessionFile session;
    CommandOptions options;
    try {
        session = parse_session(text);
        if (!oracle_path.empty()) options.oracle = parse_oracle_table(read_file(oracle_path));
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        options.d = d;
        if (!eta_text.empty()) options.eta = Sign::from_int(std::stoi(eta_text));
        options.random_count = random_count;
        options.seed = seed;
        if (!sigma_text.empty()) options.sigma = parse_one_line(sigma_text);
        const Report report = run_command(*parse_command(command_name), session, options);
        std::cout << (pretty ? render_pretty(report) : render_json(report));
        return report.status;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    }
}
