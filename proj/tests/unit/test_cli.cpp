#include "kercok/io.hpp"

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace kercok;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(KERCOK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) { return std::string(KERCOK_SOURCE_DIR) + "/samples/" + name; }

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("kercok_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

bool has_float(const Json& j)
{
    if (j.is_number_float())
        return true;
    if (j.is_structured())
        for (const auto& v : j)
            if (has_float(v))
                return true;
    return false;
}

} // namespace

TEST_CASE("six-term on multiplication by 2 then 3", "[cli]")
{
    auto r = run("verify six-term " + sample("six_term_2_3.json"));
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["objects"]["cok f"] == "Z/2");
    CHECK(j["objects"]["cok gf"] == "Z/6");
    CHECK(j["objects"]["cok g"] == "Z/3");
    CHECK(j["objects"]["ker gf"] == "0");
    CHECK(j["schema"] == report_schema_id);
    CHECK(j["tool_version"] == tool_version);
    CHECK(j["generator_version"] == "kercok-gen/1");
    CHECK(j["task"]["f"] == "f");
}

TEST_CASE("input errors exit with 2", "[cli]")
{
    auto malformed = run("verify six-term " + temp_file("bad.json", "{\"ring\": \"INT\", "));
    CHECK(malformed.code == 2);
    CHECK(Json::parse(malformed.out)["verdict"] == "input_error");

    CHECK(run("verify six-term /nonexistent/file.json").code == 2);
    CHECK(run("verify no-such-op " + sample("six_term_2_3.json")).code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("verify triple-braid " + sample("six_term_2_3.json")).code == 2);

    // Z/2 -> Z by 1 is not well defined
    auto ill = run("verify six-term " + temp_file("ill.json", R"({"ring": "INT",
        "objects": {"T": {"torsion": ["2"]}, "Z": {"free": 1}},
        "morphisms": {"f": {"source": "T", "target": "Z", "matrix": [["1"]]},
                      "g": {"source": "Z", "target": "Z", "matrix": [["1"]]}},
        "task": {"op": "six-term", "f": "f", "g": "g"}})"));
    CHECK(ill.code == 2);
    CHECK(Json::parse(ill.out)["error"].get<std::string>().find("relations") != std::string::npos);

    auto dangling = run("verify six-term " + temp_file("dangling.json", R"({"ring": "INT",
        "objects": {"Z": {"free": 1}},
        "morphisms": {"f": {"source": "Z", "target": "Z", "matrix": [["1"]]}},
        "task": {"op": "six-term", "f": "f", "g": "missing"}})"));
    CHECK(dangling.code == 2);

    CHECK(run("verify hexagon " + sample("not_a_complex.json")).code == 2);
    CHECK(run("verify six-term " + sample("six_term_2_3.json") + " --ring 'FP(4)'").code == 2);
    // ker 0 = Z cannot be enumerated
    const auto zero_map = temp_file("zero.json", R"({"ring": "INT",
        "objects": {"Z": {"free": 1}},
        "morphisms": {"f": {"source": "Z", "target": "Z", "matrix": [["0"]]}},
        "task": {"op": "six-term", "f": "f", "g": "f"}})");
    CHECK(run("verify six-term " + zero_map + " --oracle on").code == 2);
    CHECK(run("verify six-term " + zero_map + " --oracle auto").code == 0);
    CHECK(run("verify six-term " + sample("six_term_2_3.json") + " --oracle on").code == 0);
}

TEST_CASE("a non-exact couple fails with a witness", "[cli]")
{
    auto r = run("verify couple " + temp_file("couple.json", R"({"ring": "INT",
        "objects": {"Z": {"free": 1}, "O": {"free": 0}},
        "morphisms": {"a": {"source": "Z", "target": "Z", "matrix": [["0"]]},
                      "b": {"source": "Z", "target": "Z", "matrix": [["2"]]},
                      "c": {"source": "Z", "target": "O", "matrix": []}},
        "task": {"op": "couple", "lo": 0, "D": ["Z"], "E": ["Z"],
                 "alpha": ["a"], "beta": ["b"], "gamma": ["c"]}})"));
    REQUIRE(r.code == 1);
    auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "fail");
    bool witnessed = false;
    for (const auto& e : j["couple"]["exactness"])
        witnessed = witnessed || e.contains("witness");
    CHECK(witnessed);
}

TEST_CASE("sample documents verify", "[cli]")
{
    CHECK(run("verify triple-braid " + sample("triple_2_3_5.json")).code == 0);
    CHECK(run("verify square-braid " + sample("square_int.json")).code == 0);
    CHECK(run("verify snake " + sample("snake_int.json")).code == 0);

    auto hex = run("verify hexagon " + sample("hexagon_f2.json") + " --oracle on");
    REQUIRE(hex.code == 0);

    auto quad = Json::parse(run("verify quadratic " + sample("quadratic_4_2.json")).out);
    CHECK(quad["objects"]["cok f"] == "Z/2");
    CHECK(quad["objects"]["ker e"] == "Z/2");

    auto idx = run("index " + sample("index_6.json"));
    REQUIRE(idx.code == 0);
    CHECK(Json::parse(idx.out)["index"]["f"] == "2");

    auto h = Json::parse(run("herbrand " + sample("herbrand_trivial_5.json")).out);
    CHECK(h["herbrand"]["h"] == "5");

    auto sp = run("spectral " + sample("bockstein_4_p2.json") + " --pages 2");
    REQUIRE(sp.code == 0);
    auto pages = Json::parse(sp.out)["pages"];
    REQUIRE(pages.size() == 3);
    CHECK(pages[0]["degrees"][0]["d_zero"] == true);
    CHECK(pages[1]["degrees"][0]["D"] == "Z/2");

    auto chain = run("harada-sai " + sample("harada_a2.json"));
    REQUIRE(chain.code == 0);
    CHECK(Json::parse(chain.out)["prefix_lengths"] == Json::array({1, 0}));
    CHECK(run("harada-sai --sweep").code == 0);
    CHECK(run("harada-sai --quiver A3 --field 2 --n 3 --cases 20 --seed 1").code == 0);
}

TEST_CASE("property-run is byte-identical across runs", "[cli]")
{
    auto a = run("property-run --suite all --cases 100 --seed 7");
    auto b = run("property-run --suite all --cases 100 --seed 7");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = Json::parse(a.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["suites"].size() >= 15);
    CHECK(run("property-run --suite all --cases 5 --seed 8").out != run("property-run --suite all --cases 5 --seed 7").out);
}

TEST_CASE("reports round-trip and contain no floats", "[cli]")
{
    const std::vector<std::string> commands = {"verify six-term " + sample("six_term_2_3.json"),
                                               "verify snake " + sample("snake_int.json"),
                                               "spectral " + sample("bockstein_4_p2.json") + " --pages 3 --timing",
                                               "property-run --suite six-term --cases 5 --seed 1 --ring RAT",
                                               "gen --kind ses-action --seed 4 --ring RAT"};
    for (const auto& args : commands) {
        INFO(args);
        auto r = run(args);
        auto j = Json::parse(r.out);
        CHECK(dump_canonical(j) == r.out);
        CHECK_FALSE(has_float(j));
    }
}

TEST_CASE("generated documents verify through the CLI", "[cli]")
{
    const std::pair<const char*, const char*> cases[] = {
        {"pair", "verify six-term"}, {"square", "verify square-braid"}, {"cubic", "verify hexagon"},
        {"fredholm", "index"},       {"action", "herbrand"},           {"complex", "spectral"}};
    for (const auto& [kind, command] : cases) {
        INFO(kind);
        auto g = run(std::string("gen --kind ") + kind + " --seed 12 --ring INT");
        REQUIRE(g.code == 0);
        const auto path = temp_file(std::string("gen_") + kind + ".json", g.out);
        CHECK(run(std::string(command) + " " + path).code == 0);
    }
    auto many = Json::parse(run("gen --kind pair --seed 3 --count 4").out);
    CHECK(many.size() == 4);
    CHECK(run("gen --kind complex --ring RAT").code == 2);
}

TEST_CASE("schema files parse and match the emitted ids", "[cli]")
{
    auto diagram = read_json_file(std::string(KERCOK_SOURCE_DIR) + "/schemas/diagram.schema.json");
    auto report = read_json_file(std::string(KERCOK_SOURCE_DIR) + "/schemas/report.schema.json");
    CHECK(diagram["$id"] == diagram_schema_id);
    CHECK(report["$id"] == report_schema_id);
    for (const auto& key : report["required"])
        CHECK(Json::parse(run("verify six-term " + sample("six_term_2_3.json")).out).contains(key.get<std::string>()));
}
