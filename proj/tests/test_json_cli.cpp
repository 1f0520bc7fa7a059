#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cotan/cli.hpp"
#include "cotan/json_io.hpp"

using namespace cotan;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string("/tmp/cotan_test_") + name;
        if (!content.empty()) {
            std::ofstream f(path, std::ios::binary);
            f << content;
        } else {
            std::remove(path.c_str());
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("json parsing accepts the documented schema") {
    auto c = complex_from_json_text(R"({"n": 4, "facets": [[0,1],[2]]})");
    REQUIRE(c.n() == 4);
    REQUIRE(c.is_face(VertexSet{0, 1}));
    REQUIRE(c.is_face(VertexSet{2}));
    REQUIRE_FALSE(c.is_face(VertexSet{3}));

    REQUIRE(complex_from_json_text(R"({"n": 3, "facets": []})").is_void());
    auto empty_only = complex_from_json_text(R"({"n": 3, "facets": [[]]})");
    REQUIRE_FALSE(empty_only.is_void());
    REQUIRE(empty_only.dimension() == -1);

    // Non-maximal entries are absorbed.
    auto absorbed = complex_from_json_text(R"({"n": 2, "facets": [[0],[0,1]]})");
    REQUIRE(absorbed.facets() == std::vector<VertexSet>{VertexSet{0, 1}});
}

TEST_CASE("json parsing rejects malformed input with reasons") {
    auto reject = [](const std::string& text, const std::string& needle) {
        try {
            complex_from_json_text(text);
            FAIL("expected rejection: " << text);
        } catch (const InputFormatError& e) {
            REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    reject("{", "parse error");
    reject("[1,2]", "must be an object");
    reject(R"({"facets": []})", "missing required key \"n\"");
    reject(R"({"n": 2})", "missing required key \"facets\"");
    reject(R"({"n": 2, "facets": [], "extra": 1})", "unknown key");
    reject(R"({"n": -1, "facets": []})", "between 0 and 63");
    reject(R"({"n": 100, "facets": []})", "between 0 and 63");
    reject(R"({"n": 2.5, "facets": []})", "integer");
    reject(R"({"n": 2, "facets": [0]})", "not an array");
    reject(R"({"n": 2, "facets": [[2]]})", "out of range");
    reject(R"({"n": 2, "facets": [[-1]]})", "out of range");
    reject(R"({"n": 2, "facets": [[0,0]]})", "repeated");
    reject(R"({"n": 2, "facets": [["a"]]})", "non-integer");
}

TEST_CASE("json round trip") {
    auto c = complex_from_json_text(R"({"n": 4, "facets": [[0,1],[1,2],[3]]})");
    auto j = complex_to_json(c);
    auto back = complex_from_json(j);
    REQUIRE(back.n() == c.n());
    REQUIRE(back.facets() == c.facets());
}

TEST_CASE("cli t2 reports vanishing and witnesses with exit codes") {
    TempFile pent("pentagon.json",
                  R"({"n":5,"facets":[[0,1],[1,2],[2,3],[3,4],[4,0]]})");
    auto ok = run_cli({"t2", pent.path});
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out == "# field=q\nVANISHES\n");

    TempFile c7("c7.json",
                R"({"n":7,"facets":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,0]]})");
    auto bad = run_cli({"t2", c7.path});
    REQUIRE(bad.code == 1);
    REQUIRE(bad.out == "# field=q\nA={} b={0,3} dimT2=1\n");

    auto gf2 = run_cli({"t2", c7.path, "--field", "gf2", "--witness"});
    REQUIRE(gf2.code == 1);
    REQUIRE(gf2.out.find("# field=gf2\n") == 0);
    REQUIRE(gf2.out.find("b={3,6}") != std::string::npos);

    auto json_mode = run_cli({"t2", c7.path, "--json"});
    REQUIRE(json_mode.code == 1);
    auto parsed = nlohmann::json::parse(json_mode.out);
    REQUIRE(parsed["vanishes"] == false);
    REQUIRE(parsed["witness"]["dimT2"] == 1);
}

TEST_CASE("cli t2 usage errors exit with code 2") {
    TempFile bad("bad.json", "not json");
    REQUIRE(run_cli({"t2", bad.path}).code == 2);
    REQUIRE(run_cli({"t2", "/nonexistent/x.json"}).code == 2);
    TempFile pent("p.json", R"({"n":1,"facets":[[0]]})");
    REQUIRE(run_cli({"t2", pent.path, "--field", "gf4"}).code == 2);
    REQUIRE(run_cli({"t2"}).code == 2);
    REQUIRE(run_cli({"no-such-command"}).code == 2);
    REQUIRE(run_cli({}).code == 2);
}

TEST_CASE("cli t2-graded zero-dimensional table") {
    TempFile pts("pts5.json", R"({"n":5,"facets":[[0],[1],[2],[3],[4]]})");
    auto res = run_cli({"t2-graded", pts.path});
    REQUIRE(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line))
        if (line.rfind("A=", 0) == 0) {
            ++rows;
            REQUIRE(line.find("dimT2=2") != std::string::npos);
            REQUIRE(line.find("A={} b={") == 0);
        }
    REQUIRE(rows == 10);
    REQUIRE(res.out.find("# rows=10") != std::string::npos);

    TempFile full("full.json", R"({"n":3,"facets":[[0,1,2]]})");
    auto empty = run_cli({"t2-graded", full.path});
    REQUIRE(empty.code == 0);
    REQUIRE(empty.out.find("# rows=0") != std::string::npos);
}

TEST_CASE("cli classification golden flow") {
    TempFile golden("golden.txt");
    auto first = run_cli({"classify-1d", "--max-n", "4", "--golden", golden.path});
    REQUIRE(first.code == 0);
    REQUIRE(first.out.find("10 classes\n") != std::string::npos);
    REQUIRE(first.out.find("golden written") != std::string::npos);

    auto second = run_cli({"classify-1d", "--max-n", "4", "--golden", golden.path});
    REQUIRE(second.code == 0);
    REQUIRE(second.out.find("golden match") != std::string::npos);

    {
        std::ofstream f(golden.path, std::ios::binary | std::ios::app);
        f << "n=9 edges=01 matroid=0\n";
    }
    auto third = run_cli({"classify-1d", "--max-n", "4", "--golden", golden.path});
    REQUIRE(third.code == 1);
    REQUIRE(third.err.find("golden mismatch") != std::string::npos);
    REQUIRE(third.err.find("line 11") != std::string::npos);

    REQUIRE(run_cli({"classify-1d", "--max-n", "9"}).code == 2);
}

TEST_CASE("cli uniform table small run") {
    auto res = run_cli({"uniform-table", "--max-n", "4"});
    REQUIRE(res.code == 0);
    REQUIRE(res.out.find("# field=q\n") == 0);
    REQUIRE(res.out.find("PASS 30 cases\n") != std::string::npos);
    REQUIRE(res.out.find("n=4 r=1 bsize=2 formula=1 computed=1 PASS") != std::string::npos);
    REQUIRE(res.out.find("n=4 r=2 bsize=2 formula=0 computed=0 PASS") != std::string::npos);
    REQUIRE(run_cli({"uniform-table", "--max-n", "0"}).code == 2);
}

TEST_CASE("cli corank2 verification small run") {
    auto res = run_cli({"corank2-verify", "--max-n", "4"});
    REQUIRE(res.code == 0);
    REQUIRE(res.out.find("PASS") != std::string::npos);
    REQUIRE(res.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli conjecture check over a database and by enumeration") {
    TempFile db("db.txt", "# n=4 r=2\n*****0\n******\n");
    auto res = run_cli({"conjecture-check", "--db", db.path});
    REQUIRE(res.code == 0);
    REQUIRE(res.out.find("AGREE 2 matroids, no counterexample\n") != std::string::npos);

    auto enu = run_cli({"conjecture-check", "--enumerate", "--max-n", "3"});
    REQUIRE(enu.code == 0);
    REQUIRE(enu.out.find("no counterexample") != std::string::npos);

    REQUIRE(run_cli({"conjecture-check"}).code == 2);
    REQUIRE(run_cli({"conjecture-check", "--db", db.path, "--enumerate"}).code == 2);
    REQUIRE(run_cli({"conjecture-check", "--enumerate", "--max-n", "7"}).code == 2);
    REQUIRE(run_cli({"conjecture-check", "--db", "/nonexistent"}).code == 2);

    TempFile baddb("baddb.txt", "# n=4 r=2\n***\n");
    auto bad = run_cli({"conjecture-check", "--db", baddb.path});
    REQUIRE(bad.code == 2);
    REQUIRE(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("cli join check is deterministic per seed") {
    auto a = run_cli({"join-check", "--pairs", "12", "--seed", "99"});
    auto b = run_cli({"join-check", "--pairs", "12", "--seed", "99"});
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out.find("PASS 12 pairs\n") != std::string::npos);
    auto c = run_cli({"join-check", "--pairs", "12", "--seed", "100"});
    REQUIRE(c.out != a.out);
}

TEST_CASE("cli output is byte-identical across job counts") {
    auto one = run_cli({"uniform-table", "--max-n", "5", "--jobs", "1"});
    auto four = run_cli({"uniform-table", "--max-n", "5", "--jobs", "4"});
    REQUIRE(one.out == four.out);
    REQUIRE(one.code == four.code);

    auto j1 = run_cli({"join-check", "--pairs", "8", "--jobs", "1"});
    auto j3 = run_cli({"join-check", "--pairs", "8", "--jobs", "3"});
    REQUIRE(j1.out == j3.out);
}

TEST_CASE("cli help exits zero") {
    REQUIRE(run_cli({"--help"}).code == 0);
    auto res = run_cli({"t2", "--help"});
    REQUIRE(res.code == 0);
}
