// Exercises the CLI exit-code contract through real process invocations.
//   hfss_cli_exec <path-to-hfss> <config-dir>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int failures = 0;

void expect(bool ok, const std::string& label) {
    std::cout << (ok ? "ok" : "FAIL") << ": " << label << "\n";
    if (!ok) ++failures;
}

// wait-status -> exit code (tests run on POSIX)
int run(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: hfss_cli_exec <hfss binary> <config dir>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const fs::path configs = argv[2];
    const fs::path tmp = fs::temp_directory_path() / "hfss_cli_exec";
    fs::create_directories(tmp);
    const fs::path scratch = tmp / "out.txt";
    const fs::path errors = tmp / "err.txt";
    const std::string redirect =
        " > \"" + scratch.string() + "\" 2> \"" + errors.string() + "\"";

    const std::string case1 = "\"" + (configs / "case1.cfg").string() + "\"";
    const std::string case2 = "\"" + (configs / "case2.cfg").string() + "\"";

    expect(run(cli + " validate " + case1 + redirect) == 0, "validate case1.cfg exits 0");
    expect(run(cli + " validate " + case2 + redirect) == 0, "validate case2.cfg exits 0");

    // validate prints the normalized config
    run(cli + " validate " + case1 + redirect);
    const std::string normalized = slurp(scratch);
    expect(normalized.find("policy.type = cp") != std::string::npos,
           "validate echoes the normalized policy");
    expect(normalized.find("channel.h_cp = 0.5") != std::string::npos,
           "validate echoes the normalized channel");

    // missing config: exit 1, path in the message
    expect(run(cli + " run /no/such/file.cfg" + redirect) == 1, "missing config exits 1");
    expect(slurp(errors).find("/no/such/file.cfg") != std::string::npos,
           "missing-config message names the path");
    expect(run(cli + " validate /no/such/file.cfg" + redirect) == 1,
           "validate missing config exits 1");

    // invalid config contents: exit 1, message cites the key
    const fs::path bad = tmp / "bad.cfg";
    {
        std::ofstream out(bad);
        out << slurp(configs / "case1.cfg");
        out << "budget.type = power_penalty\nbudget.max_db = 3\n";
    }
    // (case1 already has a rate_loss budget; the duplicate key trips parsing)
    expect(run(cli + " validate \"" + bad.string() + "\"" + redirect) == 1,
           "conflicting config exits 1");

    const fs::path negative = tmp / "negative.cfg";
    {
        std::string text = slurp(configs / "case1.cfg");
        const auto pos = text.find("channel.sigma_p2 = 1");
        text.replace(pos, std::string("channel.sigma_p2 = 1").size(),
                     "channel.sigma_p2 = -1");
        std::ofstream out(negative);
        out << text;
    }
    expect(run(cli + " validate \"" + negative.string() + "\"" + redirect) == 1,
           "negative noise variance exits 1");
    expect(slurp(errors).find("channel.sigma_p2") != std::string::npos,
           "violation message cites the invariant key");
    expect(run(cli + " run \"" + negative.string() + "\"" + redirect) == 1,
           "run with invalid config exits 1");

    // tci with a rate-loss budget is a family mismatch
    const fs::path mismatch = tmp / "mismatch.cfg";
    {
        std::string text = slurp(configs / "case2.cfg");
        const auto type_pos = text.find("budget.type = power_penalty");
        text.replace(type_pos, std::string("budget.type = power_penalty").size(),
                     "budget.type = rate_loss");
        const auto value_pos = text.find("budget.max_db = 3");
        text.replace(value_pos, std::string("budget.max_db = 3").size(),
                     "budget.max_bits = 1");
        std::ofstream out(mismatch);
        out << text;
    }
    expect(run(cli + " validate \"" + mismatch.string() + "\"" + redirect) == 1,
           "budget/policy mismatch exits 1");
    expect(slurp(errors).find("budget.type") != std::string::npos,
           "mismatch message cites budget.type");

    // seed priority: flag > config > HFSS_SEED > fixed default
    const fs::path unseeded = tmp / "unseeded.cfg";
    {
        std::string text = slurp(configs / "case1.cfg");
        const auto pos = text.find("scenario.seed = 1\n");
        text.erase(pos, std::string("scenario.seed = 1\n").size());
        std::ofstream out(unseeded);
        out << text;
    }
    const std::string unseeded_arg = "\"" + unseeded.string() + "\"";
    run("HFSS_SEED=42 " + cli + " run " + unseeded_arg + redirect);
    expect(slurp(scratch).find("case1,42,learning") != std::string::npos,
           "HFSS_SEED fills in for a missing config seed");
    run("HFSS_SEED=42 " + cli + " run " + unseeded_arg + " --seed 5" + redirect);
    expect(slurp(scratch).find("case1,5,learning") != std::string::npos,
           "--seed beats HFSS_SEED");
    run("HFSS_SEED=42 " + cli + " run " + case1 + redirect);
    expect(slurp(scratch).find("case1,1,learning") != std::string::npos,
           "config seed beats HFSS_SEED");
    run(cli + " run " + unseeded_arg + redirect);
    expect(slurp(scratch).find("case1,12345,learning") != std::string::npos,
           "documented default seed applies when nothing else is set");
    expect(run("HFSS_SEED=not-a-number " + cli + " run " + unseeded_arg + redirect) == 1,
           "malformed HFSS_SEED exits 1");

    // run writes parseable CSV with the stable header
    const fs::path csv = tmp / "case1.csv";
    expect(run(cli + " run " + case1 + " --seed 4 --out \"" + csv.string() + "\"" + redirect) ==
               0,
           "run case1.cfg exits 0");
    const std::string csv_text = slurp(csv);
    expect(csv_text.rfind("scenario,seed,stage,p_c,gain_lo,gain_hi,gain_kind,confidence,"
                          "p_c_d,penalty_actual,penalty_predicted,penalty_unit,r_c,note",
                          0) == 0,
           "csv starts with the stable header");
    expect(csv_text.find("granularity") != std::string::npos, "csv carries estimates");

    // json output: one top-level object
    expect(run(cli + " run " + case1 + " --seed 4 --format json" + redirect) == 0,
           "run --format json exits 0");
    const std::string json_text = slurp(scratch);
    expect(!json_text.empty() && json_text[0] == '{' &&
               json_text.find("\"meta\"") != std::string::npos &&
               json_text.find("\"rows\"") != std::string::npos,
           "json output has meta and rows");
    expect(run(cli + " policies --policy wf --mu 4 --sweep 0:8:0.5 --format json" + redirect) ==
               0,
           "policies --format json exits 0");
    expect(slurp(scratch).find("\"p_p\"") != std::string::npos, "curve json has p_p fields");

    // policy curves: wf goes silent at (mu*h_p - sigma_p2)/h_cp = 6
    expect(run(cli + " policies --policy wf --mu 4 --sweep 0:8:0.5" + redirect) == 0,
           "policies wf exits 0");
    const std::string curve = slurp(scratch);
    expect(curve.find("\n5.5,0.25,") != std::string::npos, "wf still on just below the cliff");
    expect(curve.find("\n6,0,0\n") != std::string::npos, "wf silent from 6 on");

    // constant-power curve keeps p_p fixed
    expect(run(cli + " policies --policy cp --Q 100 --sweep 0:2:1" + redirect) == 0,
           "policies cp exits 0");
    const std::string cp_curve = slurp(scratch);
    expect(cp_curve.find("\n0,100,") != std::string::npos &&
               cp_curve.find("\n2,100,") != std::string::npos,
           "cp curve has constant power");

    // reversed sweep range: exit 1
    expect(run(cli + " policies --policy cp --sweep 5:1:1" + redirect) == 1,
           "reversed sweep exits 1");

    // unknown flag: usage error -> exit 1
    expect(run(cli + " run " + case1 + " --no-such-flag" + redirect) == 1,
           "unknown flag exits 1");

    if (failures) {
        std::cout << failures << " cli checks failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
