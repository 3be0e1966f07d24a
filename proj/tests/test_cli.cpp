#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = tripex::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected = 0) {
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    REQUIRE_MESSAGE(r.code == expected, r.err);
    return json::parse(r.out);
}

class Files {
public:
    Files() : dir_(fs::temp_directory_path() / ("tripex_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Files() { fs::remove_all(dir_); }
    Files(const Files&) = delete;
    Files& operator=(const Files&) = delete;

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("cli: expansion, sigma and the tree tools") {
    Files f;
    const auto k2 = f.write("k2.g", "2 1\n0 1\n");
    const auto p4 = f.write("p4.g", "4 3\n0 1\n1 2\n2 3\n");
    const auto p2 = f.write("p2.g", "3 2\n0 1\n1 2\n");
    const auto forest = f.write("forest.g", R"({"n": 4, "edges": [[0, 1], [2, 3]]})");

    const auto ex = run_json({"expand", "--graph", k2});
    CHECK(ex["triples"]["edges"].size() == 1);
    CHECK(ex["triples"]["n"] == 3);

    const auto human = run({"sigma", "--graph", p4});
    CHECK(human.code == 0);
    CHECK(human.out.starts_with("sigma=2\n"));
    CHECK(human.out.find("pair={") != std::string::npos);

    const auto sig = run_json({"sigma", "--graph", p4});
    CHECK(sig["sigma"] == 2);
    CHECK(sig["pair"]["weight"] == 2);
    CHECK(sig["pair"]["independent"] == json::array({0, 2}));

    const auto plus = f.write("p2plus.h", "5 2\n0 1 3\n1 2 4\n");
    CHECK(run_json({"sigma", "--triples", plus})["sigma"] == 1);
    const auto k4 = f.write("k4.h", "4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    CHECK(run_json({"sigma", "--triples", k4})["sigma"].is_null());

    const auto audit = run_json({"crosscut-audit", "--graph", p4});
    CHECK(audit["all_pass"] == true);
    CHECK(audit["checks"].size() == 4);

    CHECK(run_json({"lambda", "--graph", p4})["lambda"] == 1);
    const auto tree = run_json({"complete-tree", "--graph", forest});
    CHECK(tree["tree"]["edges"].size() == 3);
    CHECK(tree["sigma"] == 2);

    // Expand to a file and feed it back in.
    const auto out_path = f.write("out.h", "");
    CHECK(run({"expand", "--graph", p2, "--out", out_path}).code == 0);
    CHECK(run_json({"turan", "--n", "4", "--forbid", out_path})["value"] == 4);
}

TEST_CASE("cli: extraction commands") {
    Files f;
    const auto k5 = f.write("k5.h", R"({"n": 5, "edges": [[0,1,2],[0,1,3],[0,1,4],[0,2,3],[0,2,4],
        [0,3,4],[1,2,3],[1,2,4],[1,3,4],[2,3,4]]})");
    const auto full = run_json({"full-subgraph", "--triples", k5, "--d", "2"});
    CHECK(full["size"] == 10);
    CHECK(full["triples"]["edges"].size() == 10);

    const auto fam = f.write("fam.json", R"({"k": 2, "sets": [[0,1],[0,2],[0,3]]})");
    const auto sun = run_json({"sunflower", "--family", fam, "--s", "3"});
    CHECK(sun["found"] == true);
    CHECK(sun["core"] == json::array({0}));

    const auto aug = f.write("aug.json", R"({"pairs": [{"set": [0], "extra": 1}, {"set": [1], "extra": 2},
        {"set": [2], "extra": 0}]})");
    const auto trim = run_json({"trim-select", "--family", aug});
    CHECK(trim["selected"].size() == 1);
    CHECK(trim["required"] == 1);

    const auto g = f.write("k22.g", "4 4\n0 2\n0 3\n1 2\n1 3\n");
    const auto lists =
        f.write("lists.json", R"({"lists": [{"edge": [0,2], "list": [9]}, {"edge": [0,3], "list": [9]},
        {"edge": [1,2], "list": [9]}, {"edge": [1,3], "list": [9]}]})");
    const auto host = f.write("host.h", "10 4\n0 2 9\n0 3 9\n1 2 9\n1 3 9\n");
    const auto bic = run_json({"biclique", "--graph", g, "--lists", lists, "--triples", host, "--t", "2"});
    CHECK(bic["found"] == true);
    CHECK(bic["left"] == json::array({0, 1}));
    CHECK(bic["right"] == json::array({2, 3}));
}

TEST_CASE("cli: ramsey commands") {
    Files f;
    const auto col = f.write("col.json", R"({"xs": [0,1,2], "ys": [3,4,5], "colors": [[0,0,0],[1,1,1],[2,2,2]]})");
    CHECK(run_json({"classify", "--coloring", col})["labels"] == json::array({"X-canonical"}));
    const auto sub = run_json({"ramsey-subgrid", "--coloring", col, "--s", "2"});
    CHECK(sub["found"] == true);
    CHECK(sub["xs"] == json::array({0, 1}));

    const auto host = f.write("h.h", "6 4\n0 2 4\n0 3 4\n1 2 4\n1 3 4\n");
    const auto lists = run_json({"lists", "--triples", host, "--xs", "0,1", "--ys", "2,3"});
    CHECK(lists["lists"].size() == 4);
    CHECK(lists["lists"][0]["list"] == json::array({4}));

    const auto mc = run_json({"multicolor", "--triples", host, "--xs", "0,1", "--ys", "2,3", "--m", "1"});
    CHECK(mc["found"] == true);
    const auto structured =
        run_json({"multicolor", "--triples", host, "--xs", "0,1", "--ys", "2,3", "--m", "1", "--s", "2"});
    CHECK(structured["status"] == "found");
    CHECK(structured["labels"][0][0] == "monochromatic");
}

TEST_CASE("cli: search commands and exit codes") {
    Files f;
    const auto p2 = f.write("p2.g", "3 2\n0 1\n1 2\n");
    const auto p4 = f.write("p4.g", "4 3\n0 1\n1 2\n2 3\n");
    const auto fan = f.write("fan.h", "5 2\n0 1 2\n0 3 4\n");

    const auto hit = run_json({"contains", "--host", fan, "--graph", p2});
    CHECK(hit["found"] == true);
    CHECK(hit["certificate"]["kind"] == "expansion");
    const auto plus = f.write("plus.h", "5 2\n0 1 3\n1 2 4\n");
    CHECK(run_json({"contains", "--host", fan, "--forbid", plus})["found"] == true);

    CHECK(run_json({"construct", "--n", "6", "--c", "1"})["size"] == 10);
    CHECK(run_json({"construct", "--n", "7", "--star"})["size"] == 15);

    const auto exact = run_json({"turan", "--n", "5", "--graph", p2});
    CHECK(exact["exact"] == true);

    const auto cut = run_json({"--budget-nodes", "3", "turan", "--n", "6", "--graph", p4}, 3);
    CHECK(cut["exact"] == false);

    const auto t1 = run_json({"audit-theorem1", "--graph", p2, "--n", "4,5"});
    CHECK(t1["rows"].size() == 2);
    CHECK(t1["rows"][0]["exact"]["value"] == 4);

    const auto jump = run_json({"audit-jump", "--graph", p4, "--n", "6"});
    CHECK(jump["sigma"] == 2);
    CHECK(jump["pass"] == true);

    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"sigma", "--graph", "/nonexistent/file"}).code == 2);
    CHECK(run({"construct", "--n", "3", "--c", "5"}).code == 2);
    CHECK(run({"turan", "--n", "2", "--graph", p2}).code == 2);

    // Results do not depend on the worker count.
    const auto w1 = run_json({"--workers", "1", "turan", "--n", "6", "--graph", p2});
    const auto w3 = run_json({"--workers", "3", "turan", "--n", "6", "--graph", p2});
    CHECK(w1["value"] == w3["value"]);
    CHECK(w1["witness"] == w3["witness"]);
}

TEST_CASE("cli: environment variables mirror flags") {
    Files f;
    const auto p4 = f.write("p4.g", "4 3\n0 1\n1 2\n2 3\n");
    ::setenv("TRIPEX_JSON", "1", 1);
    const auto r = run({"lambda", "--graph", p4});
    ::unsetenv("TRIPEX_JSON");
    CHECK(json::parse(r.out)["lambda"] == 1);

    ::setenv("TRIPEX_BUDGET_NODES", "3", 1);
    const auto cut = run({"turan", "--n", "6", "--graph", p4});
    ::unsetenv("TRIPEX_BUDGET_NODES");
    CHECK(cut.code == 3);
}
