#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "awb/io.hpp"

using namespace awb;
using namespace awb::fixtures;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(AWB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("parse/serialize round trip is bit-exact on the fixtures bundle") {
    for (const char* path : {AWB_FIXTURES_DIR "/core.awb.json", AWB_FIXTURES_DIR "/badfe.awb.json",
                             AWB_FIXTURES_DIR "/crossed.awb.json"}) {
        std::string text = slurp(path);
        io::Document<Q> doc = io::parse_document_text<Q>(text);
        std::string once = io::serialize_document(doc);
        io::Document<Q> doc2 = io::parse_document_text<Q>(once);
        REQUIRE(io::serialize_document(doc2) == once);
        REQUIRE(once == text);  // the shipped files are canonical
    }
    Fp::set_modulus(2);
    for (const char* path :
         {AWB_FIXTURES_DIR "/core_f2.awb.json", AWB_FIXTURES_DIR "/crossed_f2.awb.json"}) {
        std::string text = slurp(path);
        io::Document<Fp> doc = io::parse_document_text<Fp>(text);
        REQUIRE(io::serialize_document(doc) == text);
    }
}

TEST_CASE("parsed fixtures equal the programmatic ones") {
    io::Document<Q> doc = io::parse_document_text<Q>(slurp(AWB_FIXTURES_DIR "/core.awb.json"));
    REQUIRE(doc.algebras.at("Z1") == z1<Q>());
    REQUIRE(doc.algebras.at("IDEM") == idem<Q>());
    REQUIRE(doc.algebras.at("E2") == e2<Q>());
    REQUIRE(doc.algebras.at("TAUT4") == taut4<Q>());
    REQUIRE(doc.representations.at("REP1").act == rep1<Q>().act);
    REQUIRE(doc.representations.at("W2").act == w2<Q>().act);
    REQUIRE(verify_extension(doc.extensions.at("EXT1").ext).ok());
    io::Document<Q> cd = io::parse_document_text<Q>(slurp(AWB_FIXTURES_DIR "/crossed.awb.json"));
    REQUIRE(cd.crossed_extensions.at("XE2").ce.cm.act == xe2<Q>().cm.act);
    REQUIRE(cd.crossed_extensions.at("XE2B").ce.cm.a == xe2b<Q>().cm.a);
}

TEST_CASE("strict parsing diagnostics") {
    SECTION("syntax errors carry line and column") {
        try {
            io::parse_document_text<Q>("{\n  \"field\": \"Q\",\n  oops\n}");
            FAIL("expected a parse error");
        } catch (const io::parse_error& e) {
            REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SECTION("unknown keys are rejected with their path") {
        std::string text = R"({"field":"Q","algebras":{"A":{"dim":1,"product":[],"bracket":[],"extra":1}}})";
        REQUIRE_THROWS_WITH(io::parse_document_text<Q>(text),
                            Catch::Matchers::ContainsSubstring("extra"));
    }
    SECTION("out-of-range tensor indices name the entry") {
        std::string text = R"({"field":"Q","algebras":{"A":{"dim":1,"product":[[2,1,1,"1"]],"bracket":[]}}})";
        REQUIRE_THROWS_WITH(io::parse_document_text<Q>(text),
                            Catch::Matchers::ContainsSubstring("product[0]"));
    }
    SECTION("unresolved references") {
        std::string text =
            R"({"field":"Q","representations":{"R":{"algebra":"NOPE","dim":1,"left":[],"right":[],"blift":[],"bright":[]}}})";
        REQUIRE_THROWS_WITH(io::parse_document_text<Q>(text),
                            Catch::Matchers::ContainsSubstring("unresolved"));
    }
    SECTION("non-invertible field literals under F2") {
        Fp::set_modulus(2);
        std::string text =
            R"({"field":"Fp:2","algebras":{"A":{"dim":1,"product":[[1,1,1,"1/2"]],"bracket":[]}}})";
        REQUIRE_THROWS_WITH(io::parse_document_text<Fp>(text),
                            Catch::Matchers::ContainsSubstring("bad field literal"));
    }
    SECTION("decimal literals are rejected") {
        std::string text =
            R"({"field":"Q","algebras":{"A":{"dim":1,"product":[[1,1,1,"0.5"]],"bracket":[]}}})";
        REQUIRE_THROWS_AS(io::parse_document_text<Q>(text), io::parse_error);
    }
}

TEST_CASE("CLI exit codes match verdicts") {
    REQUIRE(run_cli("verify " AWB_FIXTURES_DIR "/core.awb.json") == 0);
    REQUIRE(run_cli("verify " AWB_FIXTURES_DIR "/badfe.awb.json") == 1);
    REQUIRE(run_cli("verify " AWB_FIXTURES_DIR "/nonexistent.awb.json") == 2);
    REQUIRE(run_cli("wells " AWB_FIXTURES_DIR "/core.awb.json --extension EXT1") == 0);
    REQUIRE(run_cli("extend-check " AWB_FIXTURES_DIR
                    "/core.awb.json --extension EXT1 --dm scale2 --da scale1") == 0);
    REQUIRE(run_cli("extend-check " AWB_FIXTURES_DIR
                    "/core.awb.json --extension EXT1 --dm scale1 --da scale1") == 1);
    REQUIRE(run_cli("crossed verify " AWB_FIXTURES_DIR "/crossed.awb.json --module CM_XE2") == 0);
    REQUIRE(run_cli("eight-term " AWB_FIXTURES_DIR
                    "/core.awb.json --algebra E2 --ideal ideal_m --representation TRIV_QUOT") ==
            0);
    REQUIRE(run_cli("baer " AWB_FIXTURES_DIR "/crossed_f2.awb.json --left XE2 --right XE2B") == 0);
    REQUIRE(run_cli("nonsense " AWB_FIXTURES_DIR "/core.awb.json") != 0);
    // field override: the rational core fixture parses fine over F2 (all
    // literals are integers)
    REQUIRE(run_cli("verify " AWB_FIXTURES_DIR "/core.awb.json --field Fp:2") == 0);
}
