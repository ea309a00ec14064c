#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mfh/cli/run.hpp"
#include "mfh/exactla/int_matrix.hpp"
#include "mfh/exactla/smith.hpp"

using namespace mfh;
using json = nlohmann::json;

namespace {

const std::string kFixtures = std::string(MFH_SOURCE_DIR) + "/fixtures/";

RunResult go(RunConfig cfg) {
    cfg.quiet = true;
    std::ostringstream diag;
    return run(cfg, diag);
}

RunConfig make(const std::string& command, int p) {
    RunConfig c;
    c.command = command;
    c.p = p;
    return c;
}

std::string last_line(const std::string& s) {
    std::string t = s;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    return t.substr(t.rfind('\n') + 1);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream b;
    b << in.rdbuf();
    return b.str();
}

}  // namespace

TEST_CASE("verify p = 2") {
    RunResult r = go(make("verify", 2));
    CHECK(r.status == 0);
    CHECK(last_line(r.report) == "H1 = Z^7 + Z/2 + Z/2 : PASS");
    CHECK(r.report.find("FAIL") == std::string::npos);
}

TEST_CASE("verify p = 3 structured") {
    RunConfig c = make("verify", 3);
    c.format = "structured";
    RunResult r = go(c);
    CHECK(r.status == 0);
    json d = json::parse(r.report);
    CHECK(d["status"] == "pass");
    CHECK(d["integral"]["H1"]["free_rank"] == 10);
    bool saw_snf = false;
    for (const auto& chk : d["checks"]) {
        CHECK(chk["pass"] == true);
        if (chk["name"] == "SNF A(2)") {
            saw_snf = true;
            CHECK(chk["computed"] == "2 2 2 2 2 2 2 2 6");
        }
    }
    CHECK(saw_snf);
}

TEST_CASE("depth command") {
    RunConfig c = make("depth", 3);
    c.k = 2;
    c.field = "F3";
    CHECK(go(c).report == "1\n");
    c.field = "Q(zeta)";
    CHECK(go(c).report == "0\n");
    RunConfig f = make("depth", 3);
    f.char_file = kFixtures + "char_t2_p3.json";
    CHECK(go(f).report == "1\n");
}

TEST_CASE("snf command on the shipped fixture") {
    RunConfig c;
    c.command = "snf";
    c.input = kFixtures + "a2_p3.sparse";
    RunResult r = go(c);
    CHECK(r.status == 0);
    CHECK(r.report == "2 2 2 2 2 2 2 2 6\n");
}

TEST_CASE("fixtures match regenerated matrices") {
    struct Fx {
        int p;
        std::string presentation, field, file;
        long long k;
    };
    for (const Fx& fx : {Fx{3, "alternate", "Z", "a2_p3.sparse", 2}, Fx{5, "alternate", "Z", "a2_p5.sparse", 2},
                         Fx{2, "deconed", "Z[G]", "alexander_p2_groupring.sparse", 15},
                         Fx{3, "deconed", "Z[G]", "alexander_p3_groupring.sparse", 14}}) {
        RunConfig c = make("alexander", fx.p);
        c.presentation = fx.presentation;
        c.field = fx.field;
        c.k = fx.k;
        CHECK(go(c).report == slurp(kFixtures + fx.file));
    }
}

TEST_CASE("charvar and milnor commands") {
    RunConfig c = make("charvar", 2);
    c.component = 0;
    c.u_exp = 1;
    c.u_order = 3;
    CHECK(last_line(go(c).report) == "depth = 0");
    c.translate = true;
    CHECK(last_line(go(c).report) == "depth = 1");

    RunConfig m = make("milnor", 3);
    m.field = "F3";
    m.threads = 3;
    CHECK(go(m).report.find("dim H1 = 11\n") != std::string::npos);
    RunConfig i = make("milnor", 2);
    CHECK(go(i).report.rfind("H1 = Z^7 + Z/2 + Z/2\n", 0) == 0);
}

TEST_CASE("determinism") {
    for (const char* cmd : {"verify", "milnor", "present", "alexander"}) {
        RunConfig c = make(cmd, 3);
        c.format = "structured";
        const RunResult a = go(c);
        c.threads = 4;
        const RunResult b = go(c);
        CHECK(a.report == b.report);
        CHECK(!a.report.empty());
    }
}

TEST_CASE("invalid configurations") {
    std::vector<RunConfig> bad;
    bad.push_back(make("frobnicate", 3));
    bad.push_back(make("verify", 4));
    bad.push_back(make("verify", 7));
    RunConfig d = make("depth", 3);
    bad.push_back(d);
    d.k = 3;
    bad.push_back(d);
    d.k = 2;
    d.field = "F7";
    bad.push_back(d);
    d.field = "G5";
    bad.push_back(d);
    RunConfig m = make("milnor", 3);
    m.mult = std::vector<long long>{1, 2};
    bad.push_back(m);
    RunConfig a = make("alexander", 2);
    a.presentation = "alternate";
    bad.push_back(a);
    RunConfig s;
    s.command = "snf";
    s.input = kFixtures + "missing.sparse";
    bad.push_back(s);
    RunConfig f = make("present", 3);
    f.format = "xml";
    bad.push_back(f);
    for (const auto& c : bad) {
        RunConfig q = c;
        std::ostringstream diag;
        RunResult r = run(q, diag);
        CHECK(r.status == 2);
        CHECK(r.report.empty());
        CHECK(diag.str().rfind("error: ", 0) == 0);
    }
    RunConfig ok = make("verify", 7);
    ok.max_p = 7;
    CHECK_NOTHROW(validate(ok));
}

TEST_CASE("field selectors") {
    CHECK(parse_field("Q(zeta)", 14) == Field::cyclotomic(14));
    CHECK(parse_field("F3", 14).characteristic() == 3);
    CHECK(parse_field("Q", 2) == Field::rationals());
    CHECK_THROWS_AS(parse_field("Q", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("F2", 14), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("F9", 14), std::invalid_argument);
}
