#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "mns/json_io.hpp"

using mns::Json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

std::string fx(const std::string& name) { return std::string(MNS_FIXTURE_DIR) + "/" + name; }

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MNS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json parse_out(const CliResult& r) { return Json::parse(r.out); }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("digits: scalar base two") {
    auto r = run_cli("digits " + fx("a2.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["name"] == "scalar-base-2");
    CHECK(j["n"] == 1);
    CHECK(j["digit_set"]["q"] == 2);
    CHECK(j["digit_set"]["digits"] == Json::array({Json::array({-1}), Json::array({0})}));
    CHECK(j["digit_set"]["convention"] == "canonical");
}

TEST_CASE("digits: convention flag changes the boundary choice") {
    auto lower = run_cli("digits " + fx("a_neg2.json") + " --convention f");
    REQUIRE(lower.code == 0);
    CHECK(parse_out(lower)["digit_set"]["digits"] ==
          Json::array({Json::array({0}), Json::array({1})}));

    auto upper = run_cli("digits " + fx("a_neg2.json") + " --convention u");
    REQUIRE(upper.code == 0);
    CHECK(parse_out(upper)["digit_set"]["digits"] ==
          Json::array({Json::array({-1}), Json::array({0})}));

    auto bad = run_cli("digits " + fx("a2.json") + " --convention z");
    CHECK(bad.code == 2);
}

TEST_CASE("digits: non-dilation handling") {
    auto refused = run_cli("digits " + fx("identity.json"));
    CHECK(refused.code == 3);

    auto allowed = run_cli("digits " + fx("identity.json") + " --allow-non-dilation");
    REQUIRE(allowed.code == 0);
    CHECK(parse_out(allowed)["digit_set"]["q"] == 1);

    auto spectral_fail = run_cli("digits " + fx("nondilation.json"));
    CHECK(spectral_fail.code == 3);
    auto spectral_ok = run_cli("digits " + fx("nondilation.json") + " --allow-non-dilation");
    CHECK(spectral_ok.code == 0);
}

TEST_CASE("digits: bad inputs exit 2") {
    CHECK(run_cli("digits /nonexistent/nope.json").code == 2);
    auto garbage = write_temp("mns_garbage.json", "{\"n\": ");
    CHECK(run_cli("digits " + garbage).code == 2);
    auto mismatch = write_temp("mns_mismatch.json", R"({"n": 2, "rows": [[1]]})");
    CHECK(run_cli("digits " + mismatch).code == 2);
    CHECK(run_cli("digits").code == 2);
    CHECK(run_cli("nosuchcommand").code == 2);
}

TEST_CASE("digits: --out writes a file") {
    const std::string path = "/tmp/mns_digits_out.json";
    std::remove(path.c_str());
    auto r = run_cli("digits " + fx("a2.json") + " --out " + path);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    Json j = Json::parse(in);
    CHECK(j["digit_set"]["q"] == 2);
}

TEST_CASE("pseudodigits: base 2 has the fixed point 1") {
    auto r = run_cli("pseudodigits " + fx("a2.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["pseudodigits"]["S"] == Json::array({Json::array({1})}));
    CHECK(j["pseudodigits"]["cycles"].size() == 1);
    CHECK(j["pseudodigits"]["cycles"][0]["length"] == 1);
    CHECK(!j["pseudodigits"].contains("search_points"));

    auto rs = run_cli("pseudodigits " + fx("a2.json") + " --include-search-points");
    REQUIRE(rs.code == 0);
    CHECK(parse_out(rs)["pseudodigits"].contains("search_points"));
}

TEST_CASE("pseudodigits: base -2 yields radix") {
    auto r = run_cli("pseudodigits " + fx("a_neg2.json"));
    REQUIRE(r.code == 0);
    CHECK(r.out.find("yields radix representation") != std::string::npos);
    const auto brace = r.out.rfind('}');
    Json j = Json::parse(r.out.substr(0, brace + 1));
    CHECK(j["pseudodigits"]["S"] == Json::array());
}

TEST_CASE("pseudodigits: twin dragon cycle") {
    auto r = run_cli("pseudodigits " + fx("twin_dragon.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["pseudodigits"]["S"] == Json::array({Json::array({0, 1})}));
}

TEST_CASE("represent: encode and decode round trip") {
    auto enc = run_cli("represent " + fx("twin_dragon.json") + " --vector 0,1");
    REQUIRE(enc.code == 0);
    Json j = parse_out(enc);
    CHECK(j["representation"]["kind"] == "pseudo");
    CHECK(j["representation"]["pseudodigit"] == Json::array({0, 1}));
    CHECK(j["vector"] == Json::array({0, 1}));

    // feed the whole encode output back through --decode
    auto full = write_temp("mns_rep_full.json", enc.out);
    auto dec = run_cli("represent " + fx("twin_dragon.json") + " --decode " + full);
    REQUIRE(dec.code == 0);
    CHECK(parse_out(dec)["vector"] == Json::array({0, 1}));

    // and the bare representation object too
    auto bare = write_temp("mns_rep_bare.json", j["representation"].dump());
    auto dec2 = run_cli("represent " + fx("twin_dragon.json") + " --decode " + bare);
    REQUIRE(dec2.code == 0);
    CHECK(parse_out(dec2)["vector"] == Json::array({0, 1}));
}

TEST_CASE("represent: radix encoding of 1 in base -2") {
    auto r = run_cli("represent " + fx("a_neg2.json") + " --vector 1");
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["representation"]["kind"] == "radix");
    CHECK(j["representation"]["digits"] ==
          Json::array({Json::array({-1}), Json::array({-1})}));
}

TEST_CASE("represent: argument validation") {
    // neither --vector nor --decode
    CHECK(run_cli("represent " + fx("a2.json")).code == 2);
    // both at once
    auto bare = write_temp("mns_rep_zero.json", R"({"kind": "radix", "digits": [[0]]})");
    CHECK(run_cli("represent " + fx("a2.json") + " --vector 1 --decode " + bare).code == 2);
    // wrong dimension
    CHECK(run_cli("represent " + fx("twin_dragon.json") + " --vector 1").code == 2);
    CHECK(run_cli("represent " + fx("a2.json") + " --vector 1,2").code == 2);
    // malformed vector
    CHECK(run_cli("represent " + fx("a2.json") + " --vector x").code == 2);
}

TEST_CASE("check: inconclusive with cycles for diag(2,2)") {
    auto r = run_cli("check " + fx("diag22.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["condition_report"]["verdict"] == "inconclusive");
    CHECK(j["condition_report"]["mu_gt_2"] == false);
    CHECK(j["cross_validation"]["yields_radix"] == false);
    CHECK(j["cross_validation"]["consistent"] == true);
}

TEST_CASE("check: guaranteed for 3 I") {
    auto r = run_cli("check " + fx("scalar3_2d.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["condition_report"]["verdict"] == "guaranteed_radix");
    CHECK(j["condition_report"]["mu_gt_2"] == true);
    CHECK(j["condition_report"]["mu_gt_2sqrtn"] == true);
    CHECK(j["cross_validation"]["yields_radix"] == true);
    CHECK(j["cross_validation"]["consistent"] == true);
}

TEST_CASE("check: non-dilation reports null cross-validation") {
    auto r = run_cli("check " + fx("nondilation.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["condition_report"]["is_dilation"] == false);
    CHECK(j["condition_report"]["verdict"] == "inconclusive");
    CHECK(j["cross_validation"].is_null());
}

TEST_CASE("power: known exponents") {
    auto r2 = run_cli("power " + fx("a2.json"));
    REQUIRE(r2.code == 0);
    CHECK(parse_out(r2)["power"]["beta"] == 2);

    auto rt = run_cli("power " + fx("twin_dragon.json"));
    REQUIRE(rt.code == 0);
    Json j = parse_out(rt);
    CHECK(j["power"]["beta"] == 3);
    CHECK(j["power"]["threshold"] == "mu_gt_2");

    auto rt2 = run_cli("power " + fx("twin_dragon.json") + " --threshold mu2sqrtn");
    REQUIRE(rt2.code == 0);
    Json j2 = parse_out(rt2);
    CHECK(j2["power"]["beta"] == 4);
    CHECK(j2["power"]["threshold"] == "mu_gt_2sqrtn");

    CHECK(run_cli("power " + fx("identity.json")).code == 3);
    CHECK(run_cli("power " + fx("twin_dragon.json") + " --beta-max 2").code == 4);
    CHECK(run_cli("power " + fx("a2.json") + " --threshold nope").code == 2);
}

TEST_CASE("atlas: base 2 exact CSV") {
    auto r = run_cli("atlas " + fx("a2.json") + " --n-max 1");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "x1,tag\n"
          "-3,radix\n"
          "-2,radix\n"
          "-1,radix\n"
          "0,radix\n"
          "1,pseudo\n"
          "1,pseudo\n"
          "2,pseudo\n");
}

TEST_CASE("atlas: twin dragon depth 6 row count") {
    auto r = run_cli("atlas " + fx("twin_dragon.json") + " --n-max 6");
    REQUIRE(r.code == 0);
    size_t rows = 0;
    for (char c : r.out) rows += (c == '\n');
    // header + 128 radix rows + 127 pseudo rows
    CHECK(rows == 256);
    CHECK(r.out.rfind("x1,x2,tag\n", 0) == 0);
}

TEST_CASE("lattice: real shear basis") {
    auto r = run_cli("lattice " + fx("agamma_3i.json") + " --basis " + fx("basis_shear.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["context"]["B"] == Json::array({Json::array({3, 0}), Json::array({0, 3})}));
    CHECK(j["condition_report"]["verdict"] == "guaranteed_radix");
    CHECK(j["pseudodigits"]["S"] == Json::array());
}

TEST_CASE("lattice: Gaussian integer twin dragon") {
    auto r = run_cli("lattice " + fx("agamma_gauss.json") + " --basis " + fx("basis_gauss.json"));
    REQUIRE(r.code == 0);
    Json j = parse_out(r);
    CHECK(j["context"]["B"] == Json::array({Json::array({1, 1}), Json::array({-1, 1})}));
    CHECK(j["digit_set"]["digits"] ==
          Json::array({Json::array({-1, 0}), Json::array({0, 0})}));
    CHECK(j["gamma_digits"] == Json::array({Json::array({"-1", "0"}), Json::array({"0", "0"})}));
    CHECK(j["pseudodigits"]["S"] == Json::array({Json::array({0, 1})}));
}

TEST_CASE("lattice: transport failure exits 3") {
    auto r = run_cli("lattice " + fx("agamma_shear2.json") + " --basis " +
                     fx("basis_stretch.json"));
    CHECK(r.code == 3);
}
