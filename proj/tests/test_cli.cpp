#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Paths injected by the build: KMU_CLI_BINARY, KMU_FIXTURE_DIR.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KMU_CLI_BINARY) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(KMU_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("pfaffian: 2x2 fixture") {
    RunResult r = run_cli("pfaffian --input " + fixture("skew2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "pfaffian: a\n");
}

TEST_CASE("pfaffian: original Tom 5x5 lists the five generators") {
    RunResult r =
        run_cli("pfaffian --input " + fixture("skew5_original_tom.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pfaffian[1]: z2*z3 - z1*z4") != std::string::npos);
    CHECK(r.output.find("pfaffian[2]: x4*z3 - x3*z4") != std::string::npos);
    CHECK(r.output.find("pfaffian[5]: -x2*z1 + x1*z3") != std::string::npos);
}

TEST_CASE("det and wedge") {
    RunResult d = run_cli("det --input " + fixture("det3.json"));
    CHECK(d.exit_code == 0);
    CHECK(d.output == "det: -b*c + a*d\n");

    RunResult w = run_cli("wedge --input " + fixture("wedge1.json"));
    CHECK(w.exit_code == 0);
    CHECK(w.output == "wedge[1]: q2\nwedge[2]: -q1\n");
}

TEST_CASE("koszul: 4 symbols, d_4 as frozen") {
    RunResult r = run_cli("koszul --input " + fixture("koszul4.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d_1:\n[z1, z2, z3, z4]") != std::string::npos);
    CHECK(r.output.find("[-z4]\n[z3]\n[-z2]\n[z1]") != std::string::npos);
}

TEST_CASE("unproject: original Tom prints 9 generators with the g values") {
    RunResult r = run_cli("unproject --kind tom --input " +
                          fixture("original_tom.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[6] -x1*x3 + z1*T") != std::string::npos);
    CHECK(r.output.find("[7] -x1*x4 + z2*T") != std::string::npos);
    CHECK(r.output.find("[8] -x2*x3 + z3*T") != std::string::npos);
    CHECK(r.output.find("[9] -x2*x4 + z4*T") != std::string::npos);
    CHECK(r.output.find("[10]") == std::string::npos);
}

TEST_CASE("unproject: --show-work exposes Q and Pfaffians; --json parses") {
    RunResult r = run_cli("unproject --input " + fixture("original_tom.json") +
                          " --show-work");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Q:") != std::string::npos);
    CHECK(r.output.find("P[1]:") != std::string::npos);

    RunResult j = run_cli("unproject --input " + fixture("original_tom.json") +
                          " --json");
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("\"kind\": \"tom\"") != std::string::npos);

    RunResult t = run_cli("unproject --input " + fixture("original_tom.json") +
                          " --tname S");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("-x1*x3 + z1*S") != std::string::npos);
}

TEST_CASE("unproject: kind mismatch is an input error") {
    RunResult r = run_cli("unproject --kind jerry --input " +
                          fixture("original_tom.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("kind") != std::string::npos);
}

TEST_CASE("verify member: success and failure carry witnesses") {
    RunResult ok = run_cli("verify member --input " +
                           fixture("twisted_cubic_member.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "member[1]: in ideal\n");

    RunResult tom = run_cli("verify member --input " +
                            fixture("original_tom_member.json"));
    CHECK(tom.exit_code == 0);

    RunResult bad = run_cli("verify member --input " +
                            fixture("member_fail.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("NOT in ideal (normal form: y)") !=
          std::string::npos);
}

TEST_CASE("verify equal: del Pezzo pairs and the sign-flip flag") {
    RunResult x6 = run_cli("verify equal --input " +
                           fixture("delpezzo_x6_pair.json") +
                           " --allow-T-sign-flip --tname u");
    CHECK(x6.exit_code == 0);
    CHECK(x6.output.find("ideals are equal") != std::string::npos);

    RunResult x4_plain = run_cli("verify equal --input " +
                                 fixture("delpezzo_x4_pair.json"));
    CHECK(x4_plain.exit_code == 1);
    CHECK(x4_plain.output.find("ideals differ") != std::string::npos);

    RunResult x4_flip = run_cli("verify equal --input " +
                                fixture("delpezzo_x4_pair.json") +
                                " --allow-T-sign-flip --tname s");
    CHECK(x4_flip.exit_code == 0);
    CHECK(x4_flip.output.find("after s -> -s") != std::string::npos);
}

TEST_CASE("exit codes: input error and resource ceiling") {
    RunResult missing = run_cli("pfaffian --input /nonexistent.json");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("/nonexistent.json") != std::string::npos);

    RunResult noargs = run_cli("");
    CHECK(noargs.exit_code == 2);

    RunResult badflag = run_cli("pfaffian --input " + fixture("skew2.json") +
                                " --order zzz");
    CHECK(badflag.exit_code == 2);

    RunResult ceiling = run_cli("verify member --input " +
                                fixture("original_tom_member.json") +
                                " --max-pairs 1");
    CHECK(ceiling.exit_code == 3);
    CHECK(ceiling.output.find("resource ceiling") != std::string::npos);
}

TEST_CASE("determinism: byte-identical output across runs") {
    for (const std::string args :
         {"unproject --input " + fixture("original_tom.json") + " --show-work",
          "unproject --input " + fixture("original_jerry.json") + " --json",
          "koszul --input " + fixture("koszul4.json")}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("unproject: jerry and ci fixtures run end to end") {
    RunResult jerry = run_cli("unproject --kind jerry --input " +
                              fixture("original_jerry.json"));
    CHECK(jerry.exit_code == 0);
    CHECK(jerry.output.find("kind: jerry") != std::string::npos);
    CHECK(jerry.output.find("z4*T") != std::string::npos);

    RunResult ci = run_cli("unproject --kind ci --input " +
                           fixture("delpezzo_x3_x4_input.json") +
                           " --tname s");
    CHECK(ci.exit_code == 0);
    CHECK(ci.output.find("[2] y*w + w^2 + x*s") != std::string::npos);
    CHECK(ci.output.find("[3] x*z + z^2 + y*s") != std::string::npos);
}
