#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mfh/exactnum/field.hpp"

namespace mfh {

struct RunConfig {
    /// present | alexander | depth | charvar | milnor | snf | verify
    std::string command;
    int p = 3;
    std::optional<std::vector<long long>> mult;
    /// deconed | prefix | alternate | cone
    std::string presentation = "deconed";
    std::optional<long long> k;
    std::string char_file;
    /// Q(zeta), Q, F<q>; alexander also takes Z (values +-1) and Z[G].
    std::optional<std::string> field;
    /// charvar: component index (0 for the torus T), u = zeta_order^u_exp.
    int component = 1;
    long long u_exp = 0;
    long long u_order = 0;
    bool translate = false;
    std::string input;
    /// text | structured
    std::string format = "text";
    std::string out;
    int max_p = 5;
    unsigned threads = 1;
    bool quiet = false;
};

struct RunResult {
    int status = 0;
    std::string report;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const RunConfig& cfg);

/// Field from a selector with a primitive root of unity of the given order:
/// "Q(zeta)" is Q(zeta_order), "Q" the rationals, "F<q>" the smallest
/// extension of F_q holding the root.
Field parse_field(const std::string& selector, long long root_order);

/// Status 0 iff every requested check passed and no error occurred; errors
/// give status 2 with a message on diag. Progress also goes to diag.
RunResult run(const RunConfig& cfg, std::ostream& diag);

}  // namespace mfh
