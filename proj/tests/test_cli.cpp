#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qslice/cli.hpp"

using namespace qslice;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qslice");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// One working invocation per command of the table.
const std::map<std::string, std::vector<std::string>>& samples() {
    static const std::map<std::string, std::vector<std::string>> s{
        {"quat mul", {"quat", "mul", "i", "j"}},
        {"quat inv", {"quat", "inv", "1+i"}},
        {"quat commutes", {"quat", "commutes", "i", "2i+1"}},
        {"quat same-sphere", {"quat", "same-sphere", "i", "j"}},
        {"quat member", {"quat", "member", "j,j", "--sphere-of", "i,i"}},
        {"format", {"format", "(q1 + i)^2"}},
        {"mul", {"mul", "(q1+i)", "(q1-i)"}},
        {"conj", {"conj", "q*(1+k) - 2j"}},
        {"symm", {"symm", "q - i"}},
        {"eval", {"eval", "q1*q2 + 1", "--at", "i,i"}},
        {"divide", {"divide", "q1^2*q2", "q1 - i"}},
        {"split", {"split", "q*(1+k) - 2*j"}},
        {"roots", {"roots", "(q-i)*(q-2j)"}},
        {"factor", {"factor", "q^2 + 1"}},
        {"quasiprime", {"quasiprime", "q1^2+1"}},
        {"radical", {"radical", "(q-i)*(q-i)"}},
        {"membership", {"membership", "q^3 + q", "q^2 + 1"}},
        {"reduce", {"reduce", "q1^2 + q2^2", "--by", "q1^2+1@1", "--by", "q2-i@2"}},
        {"simmcheck", {"simmcheck", "q1 - q2", "--at", "i,i"}},
        {"violation", {"violation", "q - i"}},
        {"verify-paper", {"verify-paper", "--only", "A1"}},
    };
    return s;
}

}  // namespace

TEST(Cli, MulExample) {
    const Result r = run({"mul", "(q1+i)", "(q1-i)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q1^2 + 1\n");
    EXPECT_EQ(r.err, "");
}

TEST(Cli, QuasiprimeExample) {
    const Result r = run({"quasiprime", "q1^2+1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "generator: q1^2 + 1\n"
              "proper: true\n"
              "quasi prime: true\n"
              "completely prime: false\n"
              "radical: true\n"
              "minimal generator: q1^2 + 1\n"
              "zero set: {isolated: [], spheres: [{re: 0, im2: 1}]}\n"
              "zero set irreducible: true\n"
              "factors: (q1 - i)*(q1 + i)\n");
}

TEST(Cli, QuasiprimeExitCodes) {
    EXPECT_EQ(run({"quasiprime", "(q-1)^2"}).code, cli::kExitNegative);
    EXPECT_EQ(run({"quasiprime", "(q-i)*(q-2j)"}).code, cli::kExitNegative);
    EXPECT_EQ(run({"quasiprime", "3"}).code, cli::kExitConditional);
    EXPECT_EQ(run({"quasiprime", "q - i", "--witness", "irreducible"}).code, cli::kExitOk);
    const Result cond = run({"quasiprime", "(q-i)*(q-j)", "--witness", "irreducible"});
    EXPECT_EQ(cond.code, cli::kExitConditional);
    EXPECT_EQ(cond.out, "quasi prime if H is irreducible\n");
    const Result symm = run({"quasiprime", "q^2 + 1", "--witness", "symm:q - i"});
    EXPECT_EQ(symm.code, cli::kExitOk);
    EXPECT_EQ(symm.out, "quasi prime\n");
    EXPECT_EQ(run({"quasiprime", "q^2 + 2", "--witness", "symm:q - i"}).code, cli::kExitDomain);
    EXPECT_EQ(run({"quasiprime", "q^2 + 1", "--witness", "maybe"}).code, cli::kExitUsage);
}

TEST(Cli, GoldenText) {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"quat", "mul", "i", "j"}, "k\n"},
        {{"quat", "inv", "1+i"}, "1/2 - 1/2 i\n"},
        {{"quat", "same-sphere", "i", "j"}, "true\n"},
        {{"quat", "commutes", "i", "j"}, "false\n"},
        {{"quat", "member", "i,-i", "--sphere-of", "i,i"}, "false\n"},
        {{"conj", "q*(1+k) - 2j"}, "q1*(1 - k) + 2 j\n"},
        {{"symm", "(q-i)*(q-2*j)"}, "q1^4 + q1^2*(5) + 4\n"},
        {{"symm", "--is-real", "q - i"}, "false\n"},
        {{"eval", "q-j", "--star-with", "q-i", "--at", "-2k"}, "-4 - 2 i + 2 j - k\n"},
        {{"divide", "q1^2*q2", "q1-i"}, "quotient: q1*q2 + q2*(i)\nremainder: -q2\n"},
        {{"split", "q*(1+k) - 2*j", "--at", "2+3i"},
         "F: z1*(1+0K)\nG: z1*(0+1K) + (-2+0K)\nvalue: 2 + 3 i - 5 j + 2 k\nconjugate identity: holds\n"},
        {{"roots", "(q-i)*(q-2j)"}, "{isolated: [i, 8/5 i + 6/5 j], spheres: []}\n"},
        {{"roots", "q^2 - 2*q + 5"}, "{isolated: [], spheres: [{re: 1, im2: 4}]}\n"},
        {{"roots", "q - i", "--partner", "i"}, "(-i)\n"},
        {{"roots", "q - i", "--sphere-of", "j"}, "true\n"},
        {{"factor", "q^2 + 1"}, "(q1 - i)*(q1 + i)\n"},
        {{"factor", "2*q - 2*i"}, "(q1 - i)*(2)\n"},
        {{"factor", "q - i", "--append", "2j"}, "q1^2 + q1*(3/5 i - 6/5 j) + (8/5 + 6/5 k)\n"},
        {{"radical", "(q-i)*(q-i)"}, "radical: false\nminimal generator: q1 - i\n"},
        {{"membership", "q^3 + q", "q^2 + 1"}, "true\n"},
        {{"reduce", "q1^2+q2^2", "--by", "q1^2+1@1", "--by", "q2-i@2"},
         "remainder: -2\nquotient 1: 1\nquotient 2: q2 + i\n"},
        {{"simmcheck", "q1 - q2", "--at", "i,2i"}, "false\n"},
        {{"violation", "(q-i)*(q-2j)", "--coeff-set", "0,1,-1,i,-i,j,-j,k,-k,2j,-2j"}, "P: q1 - i\nQ: q1 - 2 j\n"},
        {{"violation", "q^2 + 1", "--degree-bound", "2"}, "none\n"},
    };
    for (const auto& [args, expected] : cases) {
        const Result r = run(args);
        EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
        EXPECT_EQ(r.out, expected) << args[0];
    }
}

TEST(Cli, JsonOutput) {
    const Result r = run({"--json", "mul", "q1+i", "q1-i"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::Json::parse(r.out);
    EXPECT_EQ(j.dump(), R"({"nvars":1,"terms":[[[2],["1","0","0","0"]],[[0],["1","0","0","0"]]]})");
    EXPECT_EQ(json::poly_from(j), parse("q^2+1"));

    const auto roots = json::Json::parse(run({"roots", "--json", "(q-i)*(q-2j)"}).out);
    EXPECT_EQ(roots.dump(), R"({"isolated":[["0","1","0","0"],["0","8/5","6/5","0"]],"spheres":[]})");

    const auto report = json::Json::parse(run({"quasiprime", "q^2+1", "--json"}).out);
    EXPECT_TRUE(report.at("is_quasi_prime").get<bool>());
    EXPECT_FALSE(report.at("is_completely_prime").get<bool>());
    EXPECT_TRUE(report.at("is_radical").get<bool>());
}

TEST(Cli, NvarsFixesTheRing) {
    EXPECT_EQ(run({"--json", "format", "q1", "--nvars", "2"}).out.find("\"nvars\": 2") != std::string::npos, true);
    const Result r = run({"format", "q1 + q3", "--nvars", "2"});
    EXPECT_EQ(r.code, cli::kExitDomain);
    EXPECT_NE(r.err.find("VariableIndexTooLarge"), std::string::npos);
}

TEST(Cli, BuildFromConfig) {
    EXPECT_EQ(run({"factor", "--build", R"({"spheres":[{"re":"0","im2":"1"}]})"}).out, "q1^2 + 1\n");
    const std::string cfg = R"({"isolated":["i","2j"]})";
    const Result a = run({"factor", "--build", cfg});
    const Result b = run({"factor", "--build", cfg, "--order", "2,1"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(b.code, 0);
    // roots on distinct spheres fix the monic polynomial, whatever the order
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"factor", "--build", cfg, "--order", "1,1"}).code, cli::kExitDomain);
    EXPECT_EQ(run({"factor", "--build", R"({"isolated":["i","j"]})"}).code, cli::kExitDomain);
    EXPECT_EQ(run({"factor", "--build", "{not json"}).code, cli::kExitDomain);
    EXPECT_EQ(run({"factor", "q", "--build", cfg}).code, cli::kExitUsage);
}

TEST(Cli, UsageErrors) {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"conj"},
             {"conj", "q", "q"},
             {"divide", "q"},
             {"eval", "q"},
             {"quat"},
             {"quat", "mul", "i"},
             {"reduce", "q", "--by", "q-i"},
             {"reduce", "q", "--by", "q-i@0"},
             {"divide", "q", "q", "--var", "0"},
             {"simmcheck", "q"},
             {"verify-paper", "extra"},
             {"mul", "q", "--nvars", "two"},
         }) {
        const Result r = run(args);
        EXPECT_EQ(r.code, cli::kExitUsage) << (args.empty() ? "" : args[0]) << " " << r.err;
        EXPECT_EQ(r.out, "");
    }
}

TEST(Cli, DomainErrors) {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"mul", "q1 +"},
             {"roots", "q^2 - 2"},
             {"roots", "q1*q2"},
             {"divide", "q1", "q1*q2 + 1"},
             {"quat", "inv", "0"},
             {"eval", "q1 - q2", "--star-with", "q1", "--at", "i,j"},
             {"roots", "q - i", "--partner", "j"},
             {"split", "q", "--frame", "i,i"},
             {"split", "q", "--at", "j"},
             {"radical", "3"},
         }) {
        const Result r = run(args);
        EXPECT_EQ(r.code, cli::kExitDomain) << args[0] << " " << r.out;
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, HelpExitsCleanly) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify-paper"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    for (const auto& [name, args] : samples()) {
        const Result a = run(args), b = run(args);
        EXPECT_EQ(a.out, b.out) << name;
        EXPECT_EQ(a.code, b.code) << name;
    }
    const Result a = run({"verify-paper", "--seed", "5", "--only", "random", "--json"});
    const Result b = run({"verify-paper", "--seed", "5", "--only", "random", "--json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EveryOperationReachableFromExactlyOneCommand) {
    const std::vector<std::string> operations{
        "quat_mul", "quat_inv", "commutes", "same_sphere", "sphere_membership",
        "star_mul", "regular_conjugate", "symmetrization", "eval", "eval_star_at_commuting", "divide_monic",
        "is_real_coefficients",
        "split", "eval_split_pair", "check_conjugate_split",
        "append_zero", "build_from_zero_config", "roots_one_var", "vanishes_on_sphere", "conjugate_zero_partner",
        "factor_one_var", "quasi_prime_principal_one_var", "is_radical_principal_one_var", "quasi_prime_with_witness",
        "membership_principal_one_var", "reduce_by_divisors", "symmetrized_family", "sphere_in_symmetrized_variety",
        "find_quasi_prime_violation",
        "parse", "format",
        "verify_paper",
    };
    std::map<std::string, int> count;
    for (const auto& c : cli::command_table())
        for (const auto& op : c.operations) ++count[std::string(op)];
    for (const auto& op : operations) EXPECT_EQ(count[op], 1) << op;
    EXPECT_EQ(count.size(), operations.size());

    std::set<std::string> names;
    for (const auto& c : cli::command_table()) names.insert(std::string(c.name));
    for (const auto& [name, args] : samples()) EXPECT_TRUE(names.count(name)) << name;
    EXPECT_EQ(samples().size(), names.size());
    for (const auto& [name, args] : samples()) EXPECT_EQ(run(args).code, 0) << name << ": " << run(args).err;
}

TEST(Cli, VerifyPaperFiltering) {
    const Result all = run({"verify-paper"});
    EXPECT_EQ(all.code, 0) << all.out;
    EXPECT_EQ(all.out.find("FAIL"), std::string::npos);

    const Result red1 = run({"verify-paper", "--only", "red1"});
    EXPECT_EQ(red1.code, 0);
    std::istringstream lines(red1.out);
    std::vector<std::string> ids;
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("PASS ", 0) == 0) ids.push_back(line.substr(5, line.find(' ', 5) - 5));
    EXPECT_EQ(ids, (std::vector<std::string>{"A2", "A2", "A8"}));

    const Result two = run({"verify-paper", "--only", "sxs,A1"});
    EXPECT_NE(two.out.find("\n2/2 passed"), std::string::npos) << two.out;
    EXPECT_EQ(run({"verify-paper", "--only", "nothing"}).code, cli::kExitDomain);
}

TEST(Checklist, TransposedProductIsCaught) {
    VerifyOptions opt;
    opt.product = qslice::detail::transposed_star_mul;
    const VerifyReport r = verify_paper(opt);
    EXPECT_FALSE(r.all_passed());
    std::set<std::string> failed;
    for (const auto& it : r.items)
        if (!it.passed) failed.insert(it.id);
    // Every coefficient product in (q1+i)*(q1-i) commutes, so the product
    // identity cannot see the transposition; the red1 generator and the
    // evaluation formula do.
    EXPECT_TRUE(failed.count("A2"));
    EXPECT_TRUE(failed.count("A4"));
}
