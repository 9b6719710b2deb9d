#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qhex/cli.hpp"
#include "qhex/laurent.hpp"
#include "test_util.hpp"

using namespace qhex;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gf subcommand") {
    const CliRun dp = cli({"gf", "0", "1", "1", "0", "--method", "dp"});
    CHECK(dp.code == kExitOk);
    CHECK(first_line(dp.out) ==
          "{\"var\":\"q\",\"terms\":[{\"exp\":-2,\"num\":\"1\",\"den\":\"2\"},"
          "{\"exp\":0,\"num\":\"1\",\"den\":\"1\"},{\"exp\":2,\"num\":\"1\",\"den\":\"2\"}]}");

    const CliRun zero = cli({"gf", "0", "0", "0", "5"});
    CHECK(zero.code == kExitOk);
    CHECK(first_line(zero.out) == "{\"var\":\"q\",\"terms\":[]}");

    const CliRun row = cli({"gf", "1", "0", "3", "0"});
    CHECK(row.code == kExitOk);
    CHECK(laurent_from_json(first_line(row.out)) ==
          LP({{-3, 1, 4}, {-1, 1, 4}, {1, 1, 4}, {3, 1, 4}}));

    const CliRun closed = cli({"gf", "0", "1", "1", "0", "--method", "closed"});
    CHECK(closed.code == kExitOk);
    CHECK(closed.out.find("\"matches_dp\":true") != std::string::npos);

    CHECK(cli({"gf", "1", "2"}).code == kExitUsage);
    CHECK(cli({"gf", "0", "0", "0", "0", "--method", "fft"}).code == kExitUsage);
}

TEST_CASE("region subcommands agree and validate") {
    const CliRun all = cli({"family", "-m", "1", "-k", "1", "--dents", "0", "--all"});
    CHECK(all.code == kExitOk);
    CHECK(laurent_from_json(first_line(all.out)) == LP({{-1, 1, 2}, {1, 1, 2}}));

    const CliRun closed = cli({"closed", "-m", "2", "-k", "0", "--dents", "0,1"});
    const CliRun lgv = cli({"lgv", "-m", "2", "-k", "0", "--dents", "0,1"});
    const CliRun family = cli({"family", "-m", "2", "-k", "0", "--dents", "0,1"});
    CHECK(closed.code == kExitOk);
    CHECK(closed.out == lgv.out);
    CHECK(closed.out == family.out);
    CHECK(laurent_from_json(first_line(closed.out)) ==
          LP({{-3, 1, 4}, {-1, 1, 4}, {1, 1, 4}, {3, 1, 4}}));

    // a_m >= m: the family is infeasible and the GF vanishes
    const CliRun vanished = cli({"lgv", "-m", "2", "-k", "0", "--dents", "1,2"});
    CHECK(vanished.code == kExitOk);
    CHECK(first_line(vanished.out) == "{\"var\":\"q\",\"terms\":[]}");

    CHECK(cli({"lgv", "-m", "2", "-k", "0", "--dents", "1,0"}).code == kExitUsage);
    CHECK(cli({"lgv", "-m", "3", "-k", "0", "--dents", "0,1"}).code == kExitUsage);
    CHECK(cli({"closed", "-m", "2", "-k", "0", "--dents", "1,2"}).code == kExitUsage);
    CHECK(cli({"family", "-m", "2", "-k", "0", "--dents", "1,2", "--all"}).code == kExitUsage);
    CHECK(cli({"lgv", "-m", "2", "-k", "-1", "--dents", "0,1"}).code == kExitUsage);
}

TEST_CASE("JSON output round-trips bit-exactly through the parser") {
    for (auto args : {std::initializer_list<std::string>{"lgv", "-m", "3", "-k", "1", "--dents", "-3,-1,1"},
                      std::initializer_list<std::string>{"gf", "-2", "1", "1", "-1"}}) {
        const CliRun run = cli(args);
        REQUIRE(run.code == kExitOk);
        const std::string line = first_line(run.out);
        CHECK(to_canonical_json(laurent_from_json(line)) == line);
    }
}

TEST_CASE("verify subcommand reports and exits cleanly") {
    const CliRun ok = cli({"verify", "prop1", "--max-m", "2", "--max-k", "1"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("failed=0") != std::string::npos);
    CHECK(cli({"verify", "nonsense"}).code == kExitUsage);
}

TEST_CASE("render subcommand writes SVG") {
    const CliRun svg = cli({"render", "-m", "1", "-k", "1", "--dents", "0", "-o", "-"});
    CHECK(svg.code == kExitOk);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out.find(">1</text>") != std::string::npos);
    CHECK(cli({"render", "-m", "1", "-k", "1", "--dents", "0", "--family", "7"}).code == kExitUsage);
}

TEST_CASE("enumeration cap surfaces as the cap exit code") {
    setenv("QHEX_CAP", "10", 1);
    const CliRun capped = cli({"family", "-m", "2", "-k", "1", "--dents", "-1,0"});
    unsetenv("QHEX_CAP");
    CHECK(capped.code == kExitCap);
}
