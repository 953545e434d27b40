#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "spinor/cli.hpp"
#include "spinor/fixtures.hpp"
#include "spinor/verdict_record.hpp"

using namespace spinor;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json out_json(const CliResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("decide for GL_n") {
    CliResult r = cli({"decide", "--group", "gl", "--n", "3", "--q", "7", "--theta1", "343",
                       "--theta-a1", "7"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["spinorial"] == true);
    CHECK(j[0]["m"] == "168");
    CHECK(j[0]["theta_1"] == "343");
    CHECK(j[0]["rule"] == "gl_q_3_mod_4");
}

TEST_CASE("decide for cyclic groups") {
    CliResult r = cli({"decide", "--group", "cyclic", "--n", "2", "--theta1", "1", "--theta-inv", "-1"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j[0]["spinorial"] == false);
    CHECK(j[0]["m"] == "1");

    // odd order: no involution value needed
    CliResult odd = cli({"decide", "--group", "cyclic", "--n", "3", "--theta1", "5"});
    CHECK(odd.code == 0);
    CHECK(out_json(odd)[0]["spinorial"] == true);

    CliResult missing = cli({"decide", "--group", "cyclic", "--n", "4", "--theta1", "4"});
    CHECK(missing.code == 2);
}

TEST_CASE("decide for GSp") {
    CliResult r = cli({"decide", "--group", "gsp", "--n", "2", "--q", "7", "--theta1", "8",
                       "--theta-a1", "0"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j[0]["spinorial"] == true);
    CHECK(j[0]["m"] == "4");
    CHECK(j[0]["rule"] == "gsp_q_3_mod_4");
}

TEST_CASE("decide refuses the open and exceptional GL cases") {
    CliResult r = cli({"decide", "--group", "gl", "--n", "3", "--q", "4", "--theta1", "2",
                       "--theta-a1", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("(3, 4)") != std::string::npos);
}

TEST_CASE("decide for elementary abelian 2-groups") {
    CliResult r = cli({"decide", "--group", "elem2", "--n", "2", "--theta1", "4", "--theta-inv",
                       "e1=0", "--theta-inv", "e2=0", "--theta-inv", "e1e2=0"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j[0]["spinorial"] == false);  // the regular representation, every m_e = 2
    CHECK(j[0]["parameters"]["failing_element"] == "e1");

    CliResult missing = cli({"decide", "--group", "elem2", "--n", "2", "--theta1", "4",
                             "--theta-inv", "e1=0"});
    CHECK(missing.code == 2);
}

TEST_CASE("decide for the finite exceptional groups") {
    CliResult r = cli({"decide", "--group", "gl2f3", "--theta1", "4", "--theta-inv", "a1=2",
                       "--theta-inv", "minus1=4"});
    REQUIRE(r.code == 0);
    CHECK(out_json(r)[0]["spinorial"] == false);

    CliResult a8 = cli({"decide", "--group", "gl4f2", "--theta1", "9", "--theta-inv",
                        "(12)(34)=1"});
    REQUIRE(a8.code == 0);
    CHECK(out_json(a8)[0]["spinorial"] == true);

    CliResult open_case = cli({"decide", "--group", "gl3f4", "--theta1", "2"});
    CHECK(open_case.code == 2);
}

TEST_CASE("usage errors name the problem") {
    CHECK(cli({"decide"}).code == 2);                        // --group required
    CHECK(cli({"decide", "--group", "nope", "--theta1", "1"}).code == 2);
    CHECK(cli({"bogus-subcommand"}).code == 2);
    CHECK(cli({}).code == 2);
    CliResult missing_n = cli({"decide", "--group", "gl", "--q", "5", "--theta1", "1",
                               "--theta-a1", "1"});
    CHECK(missing_n.code == 2);
    CHECK(missing_n.err.find("--n") != std::string::npos);
    CHECK(cli({"decide", "--group", "gl", "--n", "3", "--q", "5", "--theta1", "abc",
               "--theta-a1", "1"}).code == 2);
}

TEST_CASE("catalogue output for q = 7 matches the residue-7 picture") {
    CliResult r = cli({"catalogue", "--q", "7"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    bool steinberg_spinorial = false, quadratic_ps_spinorial = false;
    int cuspidal = 0, cuspidal_spinorial = 0;
    for (const auto& rec : j) {
        if (rec["family"] == "steinberg" && rec["parameters"]["chi"] == "0")
            steinberg_spinorial = rec["spinorial"];
        if (rec["family"] == "principal_series" && rec["parameters"]["chi1"] == "0")
            quadratic_ps_spinorial = rec["spinorial"];
        if (rec["family"] == "cuspidal") {
            ++cuspidal;
            if (rec["spinorial"]) ++cuspidal_spinorial;
        }
    }
    CHECK(steinberg_spinorial);
    CHECK(quadratic_ps_spinorial);
    CHECK(cuspidal == 3);
    CHECK(cuspidal == cuspidal_spinorial);
}

TEST_CASE("catalogue output for q = 3 marks only the trivial linear character") {
    json j = out_json(cli({"catalogue", "--q", "3"}));
    for (const auto& rec : j)
        if (rec["family"] == "linear")
            CHECK(rec["spinorial"] == (rec["parameters"]["chi"] == "0"));
}

TEST_CASE("catalogue output for q = 17: S(chi) spinorial exactly when chi is even") {
    json j = out_json(cli({"catalogue", "--q", "17"}));
    int seen = 0;
    for (const auto& rec : j) {
        if (rec["family"] != "s_linear") continue;
        ++seen;
        unsigned long chi = std::stoul(rec["parameters"]["chi"].get<std::string>());
        CHECK(rec["spinorial"] == (chi % 2 == 0));
    }
    CHECK(seen == 7);  // (17 - 3) / 2 inversion classes
}

TEST_CASE("catalogue validates q") {
    CHECK(cli({"catalogue", "--q", "4"}).code == 2);
    CHECK(cli({"catalogue", "--q", "15"}).code == 2);
    CHECK(cli({"catalogue", "--q", "1"}).code == 2);
}

TEST_CASE("identical flags produce byte-identical output") {
    std::vector<std::string> args = {"catalogue", "--q", "9", "--format", "json"};
    CliResult a = cli(args), b = cli(args);
    CHECK(a.out == b.out);
    json j = out_json(a);
    CHECK(j.size() > 0);
}

TEST_CASE("records round-trip through JSON") {
    VerdictRecord r;
    r.group = "gl";
    r.family = "input";
    r.parameters = {{"n", "3"}, {"q", "340282366920938463463374607431768211457"}};
    r.theta_1 = Int("123456789012345678901234567890");
    r.theta_inv = Int("-123456789012345678901234567890");
    r.m = Int("123456789012345678901234567890");
    r.rule = "gl_q_1_mod_4";
    r.spinorial = true;
    VerdictRecord back = record_from_json(record_to_json(r));
    CHECK(back.group == r.group);
    CHECK(back.family == r.family);
    CHECK(back.parameters == r.parameters);
    CHECK(back.theta_1 == r.theta_1);
    CHECK(back.theta_inv == r.theta_inv);
    CHECK(back.m == r.m);
    CHECK(back.rule == r.rule);
    CHECK(back.spinorial == r.spinorial);
}

TEST_CASE("csv and md formats") {
    CliResult csv = cli({"catalogue", "--q", "5", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.find(csv_header()) == 0);
    CliResult md = cli({"catalogue", "--q", "5", "--format", "md"});
    REQUIRE(md.code == 0);
    CHECK(md.out.find("| group |") == 0);
    CHECK(cli({"catalogue", "--q", "5", "--format", "xml"}).code == 2);
}

TEST_CASE("oracle subcommand on curated representations") {
    CliResult r = cli({"oracle", "--rep", "c4-regular"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j[0]["spinorial"] == false);
    CHECK(j[0]["parameters"]["oracle"] == "aspinorial");
    CHECK(j[0]["parameters"]["agreement"] == "true");
    CHECK(j[0]["m"] == "2");

    CliResult klein = cli({"oracle", "--rep", "klein-regular"});
    REQUIRE(klein.code == 0);
    json k = out_json(klein);
    CHECK(k[0]["parameters"]["oracle"] == "aspinorial");
    CHECK(k[0]["parameters"]["agreement"] == "true");

    CHECK(cli({"oracle", "--rep", "unknown-rep"}).code == 2);
    CHECK(cli({"oracle"}).code == 2);
}

TEST_CASE("oracle subcommand on generator files") {
    {
        std::ofstream f("/tmp/spinor_test_perm.json");
        f << R"({"kind": "perm", "degree": 2, "generators": [[1, 0]]})";
    }
    CliResult r = cli({"oracle", "--gens", "/tmp/spinor_test_perm.json"});
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j[0]["parameters"]["oracle"] == "aspinorial");  // one transposition, m = 1
    CHECK(j[0]["rule"] == "oracle");

    {
        std::ofstream f("/tmp/spinor_test_mat.json");
        f << R"({"kind": "matrix", "dim": 1, "generators": [[["-1"]]]})";
    }
    CliResult m = cli({"oracle", "--gens", "/tmp/spinor_test_mat.json"});
    REQUIRE(m.code == 0);
    CHECK(out_json(m)[0]["parameters"]["oracle"] == "aspinorial");

    CHECK(cli({"oracle", "--gens", "/tmp/does_not_exist.json"}).code == 2);
}

TEST_CASE("verify subcommand runs the catalogue suite") {
    std::ostringstream out, err;
    int code = run_cli({"verify", "--suite", "catalogue"}, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("catalogue-regression") != std::string::npos);
    CHECK(out.str().find("ok") != std::string::npos);

    CHECK(cli({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("the gl_n family suite reports exactly the two n-even Steinberg points") {
    CliResult r = cli({"verify", "--suite", "series"});
    CHECK(r.code == 1);
    CHECK(r.out.find("Steinberg n=4 q=5 not spinorial (m=7750)") != std::string::npos);
    CHECK(r.out.find("Steinberg n=4 q=7 not spinorial (m=58653)") != std::string::npos);
    // the other family checks stay green
    CHECK(r.out.find("series-principal-series") != std::string::npos);
    CHECK(r.out.find("series-principal-series: ") < r.out.find("ok"));
    std::size_t fails = 0, pos = 0;
    while ((pos = r.out.find("FAIL", pos)) != std::string::npos) {
        ++fails;
        ++pos;
    }
    CHECK(fails == 2);  // the steinberg line and the summary line
}

TEST_CASE("fixture files load for every residue case") {
    std::string dir = default_data_dir();
    for (unsigned r : {1u, 3u, 5u, 7u}) {
        CatalogueFixture fx = load_catalogue_fixture(dir, r);
        CHECK(fx.q_mod_8 == r);
        CHECK(fx.spinorial.size() == 9);
    }
    CHECK_THROWS_AS(load_catalogue_fixture(dir, 2), Error);
}
