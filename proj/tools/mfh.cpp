#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mfh/cli/run.hpp"

namespace {

std::vector<long long> parse_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad list entry '" + item + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor fiber homology of deleted monomial arrangements"};
    app.require_subcommand(1);
    mfh::RunConfig cfg;
    std::string mult, field;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        sub->add_flag("--quiet", cfg.quiet, "no progress on stderr");
    };
    auto arrangement = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime p")->required();
        sub->add_option("--mult", mult, "multiplicities a1,a2,... in hyperplane order");
    };

    auto* present = app.add_subcommand("present", "arrangement data and a group presentation");
    arrangement(present);
    present->add_option("--presentation", cfg.presentation, "deconed, prefix, alternate or cone");
    common(present);

    auto* alexander = app.add_subcommand("alexander", "Alexander matrix, optionally specialized at t(k)");
    arrangement(alexander);
    alexander->add_option("--presentation", cfg.presentation, "deconed, prefix, alternate or cone");
    alexander->add_option("--k", cfg.k, "specialize at t(k)");
    alexander->add_option("--field", field, "Q(zeta), F<q>, Z (k <= 2) or Z[G]");
    common(alexander);

    auto* depth = app.add_subcommand("depth", "depth of t(k) or of a character from a file");
    arrangement(depth);
    depth->add_option("--k", cfg.k, "divisor k > 1 of N");
    depth->add_option("--char-file", cfg.char_file, "JSON {p, order, exponents[, field]}");
    depth->add_option("--field", field, "Q(zeta) or F<q>");
    common(depth);

    auto* charvar = app.add_subcommand("charvar", "depth at a point of a characteristic-variety component");
    charvar->add_option("--p", cfg.p, "prime p")->required();
    charvar->add_option("--i", cfg.component, "component C_i, 0 for the torus T");
    charvar->add_option("--u", cfg.u_exp, "u = zeta_order^u");
    charvar->add_option("--order", cfg.u_order, "order of the root defining u");
    charvar->add_flag("--translate", cfg.translate, "multiply by (1,1,-1..-1,-1..-1,1..1)");
    charvar->add_option("--field", field, "Q(zeta) or F<q>");
    common(charvar);

    auto* milnor = app.add_subcommand("milnor", "H1 of the Milnor fiber, integral or over a field");
    arrangement(milnor);
    milnor->add_option("--field", field, "Q(zeta) or F<q>; integral when omitted");
    milnor->add_option("--threads", cfg.threads, "workers for independent depth evaluations");
    common(milnor);

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
    snf->add_option("file", cfg.input, "sparse or dense matrix")->required();
    common(snf);

    auto* verify = app.add_subcommand("verify", "replay the published checks for one p");
    verify->add_option("--p", cfg.p, "prime p")->required();
    verify->add_option("--max-p", cfg.max_p, "largest p accepted");
    verify->add_option("--threads", cfg.threads, "workers for independent depth evaluations");
    common(verify);

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!mult.empty()) cfg.mult = parse_list(mult);
    } catch (const std::exception& e) {
        std::cerr << "error: --mult: " << e.what() << "\n";
        return 2;
    }
    if (!field.empty()) cfg.field = field;

    const mfh::RunResult res = mfh::run(cfg, std::cerr);
    if (res.status == 2) return res.status;
    if (cfg.out.empty()) {
        std::cout << res.report;
    } else {
        std::ofstream out(cfg.out);
        if (!(out << res.report)) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
    }
    return res.status;
}
