// entrolab: lengths, entropy bounds, and regularity certificates for
// finite-length self-maps of presented local rings.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "entrolab/entrolab.hpp"

namespace {

struct CommonArgs {
    std::string input;
    bool json = false;
};

entrolab::JobSpec load_job(const CommonArgs& args) {
    std::ifstream in(args.input);
    if (!in)
        throw entrolab::structural_error("cannot open input file '" + args.input +
                                         "'");
    std::stringstream buf;
    buf << in.rdbuf();
    entrolab::JobSpec job = entrolab::parse_job_text(buf.str());
    job.json = args.json;
    return job;
}

int execute(const entrolab::JobSpec& job) {
    entrolab::RunResult r = entrolab::run(job);
    if (r.exit_code == 0) {
        if (job.json)
            std::cout << r.document.dump(2) << "\n";
        else
            std::cout << r.text << "\n";
    } else {
        std::cerr << r.text << "\n";
        if (job.json) std::cout << r.document.dump(2) << "\n";
    }
    return r.exit_code;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "job definition file")->required();
    cmd->add_flag("--json", args.json, "emit a JSON report on stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"length invariants, algebraic entropy, and regularity "
                 "certificates for self-maps of local rings"};
    app.require_subcommand(1);

    CommonArgs args;
    std::uint32_t n = 1, max_n = 3, max_N = 6, samples = 16, cap = 512;
    std::uint64_t seed = 0;
    std::string q;

    auto* c_check = app.add_subcommand(
        "check", "validate that the map is a well-defined local endomorphism");
    add_common(c_check, args);

    auto* c_contracting =
        app.add_subcommand("contracting", "decide the contracting property");
    add_common(c_contracting, args);

    auto* c_lambda = app.add_subcommand("lambda", "compute lambda(phi^n)");
    add_common(c_lambda, args);
    c_lambda->add_option("--n", n, "iterate to measure (default 1)");
    c_lambda->add_option("--cap", cap, "truncation degree cap (default 512)");

    auto* c_entropy = app.add_subcommand(
        "entropy", "lambda sequence and certified entropy upper bound");
    add_common(c_entropy, args);
    c_entropy->add_option("--max-n", max_n, "compute lambda(phi^n) for n <= max-n");
    c_entropy->add_option("--cap", cap, "truncation degree cap (default 512)");

    auto* c_kunz = app.add_subcommand(
        "kunz", "Kunz regularity test with certificate semantics");
    add_common(c_kunz, args);
    c_kunz->add_option("--max-n", max_n, "lambda sequence length (default 3)");
    c_kunz->add_option("--max-N", max_N,
                       "Hilbert-Samuel cross-check range (default 6)");
    c_kunz->add_option("--cap", cap, "truncation degree cap (default 512)");

    auto* c_hk = app.add_subcommand(
        "hk", "Hilbert-Kunz ratio sequence lambda(phi^n)/q^n");
    add_common(c_hk, args);
    c_hk->add_option("--max-n", max_n, "ratio sequence length (default 3)");
    c_hk->add_option("--q", q, "growth base as an exact rational (n, n/m, or decimal)");
    c_hk->add_option("--cap", cap, "truncation degree cap (default 512)");

    auto* c_nagata = app.add_subcommand(
        "nagata", "sampled Nagata flatness test on random m-primary ideals");
    add_common(c_nagata, args);
    c_nagata->add_option("--n", n, "iterate to test (default 1)");
    c_nagata->add_option("--samples", samples, "number of sampled ideals (default 16)");
    c_nagata->add_option("--seed", seed, "sampler seed (default 0)");
    c_nagata->add_option("--cap", cap, "truncation degree cap (default 512)");

    auto* c_phi = app.add_subcommand(
        "phi", "apply the induced functor to the cyclic module R/a");
    add_common(c_phi, args);
    c_phi->add_option("--n", n, "iterate to apply (default 1)");
    c_phi->add_option("--cap", cap, "truncation degree cap (default 512)");

    auto* c_hs = app.add_subcommand("hilbert-samuel", "compute l(R/m^N)");
    add_common(c_hs, args);
    c_hs->add_option("--n", n, "truncation exponent N (default 1)");

    auto* c_reg = app.add_subcommand(
        "regularity", "Hilbert-Samuel regularity oracle (semi-decision)");
    add_common(c_reg, args);
    c_reg->add_option("--max-N", max_N, "largest truncation compared (default 6)");

    CLI11_PARSE(app, argc, argv);

    try {
        entrolab::JobSpec job = load_job(args);
        job.command = app.get_subcommands().front()->get_name();
        job.n = n;
        job.max_n = max_n;
        job.max_N = max_N;
        job.samples = samples;
        job.seed = seed;
        job.truncation_cap = cap;
        if (!q.empty()) job.q = q;
        return execute(job);
    } catch (const entrolab::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const entrolab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
