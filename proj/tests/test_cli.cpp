#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "schema_check.hpp"
#include "turan/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Workspace {
    fs::path root;
    int runs = 0;
    Workspace() {
        root = fs::temp_directory_path() / ("turan_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~Workspace() { fs::remove_all(root); }

    // runs the CLI with a fresh --out-dir; returns (exit code, out dir)
    std::pair<int, fs::path> run(std::vector<std::string> args) {
        const fs::path dir = root / ("run" + std::to_string(runs++));
        args.insert(args.begin(), {"--out-dir", dir.string()});
        const int code = turan::cli::dispatch(args);
        return {code, dir};
    }

    fs::path file(const std::string& name, const std::string& content) {
        const fs::path p = root / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

json read_json(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json schema_for(const std::string& name) {
    return schema::load(std::string(TURAN_SCHEMA_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("gen + homcheck round trip") {
    Workspace ws;
    const fs::path f5 = ws.root / "f5.hg";
    auto [gcode, gdir] =
        ws.run({"gen", "tent", "--lambda", "2,1", "-o", f5.string()});
    CHECK(gcode == 0);
    CHECK(schema::validate(read_json(gdir / "result.json"), schema_for("gen.schema.json")));
    CHECK(fs::exists(f5));

    const fs::path k4 = ws.file("k4.hg", "k 3 n 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    auto [hcode, hdir] = ws.run({"homcheck", f5.string(), k4.string()});
    CHECK(hcode == 0);  // the tent maps into K_4^{(3)}
    const json hres = read_json(hdir / "result.json");
    CHECK(schema::validate(hres, schema_for("homcheck.schema.json")));
    CHECK(hres.at("hom_exists") == true);

    const fs::path single = ws.file("single.hg", "k 3 n 3\n0 1 2\n");
    auto [scode, sdir] = ws.run({"homcheck", f5.string(), single.string()});
    CHECK(scode == 1);  // hom-free
    CHECK(read_json(sdir / "result.json").at("hom_exists") == false);
}

TEST_CASE("lagrangian value and byte-identical reruns") {
    Workspace ws;
    const fs::path single = ws.file("e3.hg", "k 3 n 3\n0 1 2\n");
    auto [c1, d1] = ws.run({"--seed", "7", "lagrangian", single.string()});
    auto [c2, d2] = ws.run({"--seed", "7", "lagrangian", single.string()});
    CHECK(c1 == 0);
    CHECK(c2 == 0);
    const json r = read_json(d1 / "result.json");
    CHECK(schema::validate(r, schema_for("lagrangian.schema.json")));
    CHECK(std::abs(r.at("value").get<double>() - 2.0 / 9.0) < 1e-6);
    CHECK(read_text(d1 / "result.json") == read_text(d2 / "result.json"));
    // manifest records the input digest
    const json manifest = read_json(d1 / "manifest.json");
    CHECK(schema::validate(manifest, schema_for("manifest.schema.json")));
    CHECK(manifest.at("inputs").size() == 1);
}

TEST_CASE("pspectral cross-checks the power iteration") {
    Workspace ws;
    const fs::path k3 = ws.file("k3.hg", "k 2 n 3\n0 1\n0 2\n1 2\n");
    auto [code, dir] = ws.run({"pspectral", k3.string(), "--p", "2"});
    CHECK(code == 0);
    const json r = read_json(dir / "result.json");
    CHECK(schema::validate(r, schema_for("pspectral.schema.json")));
    CHECK(std::abs(r.at("value").get<double>() - 2.0) < 1e-8);
    CHECK(std::abs(r.at("power_iteration").get<double>() - 2.0) < 1e-9);
}

TEST_CASE("entropy and ratio subcommands") {
    Workspace ws;
    const fs::path k43 = ws.file("k43.hg", "k 3 n 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    auto [ecode, edir] = ws.run({"entropy", k43.string(), "--p", "1"});
    CHECK(ecode == 0);
    const json er = read_json(edir / "result.json");
    CHECK(schema::validate(er, schema_for("entropy.schema.json")));
    CHECK(std::abs(er.at("value").get<double>() - 3.0 / 8.0) < 1e-4);

    auto [rcode, rdir] = ws.run({"ratio", k43.string()});
    CHECK(rcode == 0);
    const json rr = read_json(rdir / "result.json");
    CHECK(schema::validate(rr, schema_for("ratio.schema.json")));
    CHECK(std::abs(rr.at("x")[0].get<double>() - 0.5) < 1e-12);

    // explicit distribution file: point mass on one edge
    const fs::path dist = ws.file("d.json", R"({"edges":[[0,1,2]],"q":[1.0]})");
    auto [dcode, ddir] = ws.run({"ratio", k43.string(), "--dist", dist.string()});
    CHECK(dcode == 0);
    CHECK(std::abs(read_json(ddir / "result.json").at("x")[0].get<double>() - 1.0 / 3.0) <
          1e-12);
}

TEST_CASE("forest subcommands") {
    Workspace ws;
    auto [dcode, ddir] = ws.run({"forest", "derive", "--family", "thm81", "--k", "3",
                                 "--r", "4", "--i", "1"});
    CHECK(dcode == 0);
    const json dres = read_json(ddir / "result.json");
    CHECK(schema::validate(dres, schema_for("forest-derive.schema.json")));
    CHECK(dres.at("tight_on_complete") == true);

    auto [ccode, cdir] = ws.run({"forest", "certify", "--family", "lemma72", "--k", "3",
                                 "--i", "1", "--j", "1"});
    CHECK(ccode == 0);
    const json cres = read_json(cdir / "result.json");
    CHECK(schema::validate(cres, schema_for("forest-certify.schema.json")));
    CHECK(cres.at("a") == 1);

    const fs::path k43 = ws.file("g.hg", "k 3 n 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    auto [scode, sdir] = ws.run({"forest", "sample", "--family", "lemma72", "--k", "3",
                                 "--i", "1", "--j", "1", "--graph", k43.string()});
    CHECK(scode == 0);
    const json sres = read_json(sdir / "result.json");
    CHECK(schema::validate(sres, schema_for("forest-sample.schema.json")));
    CHECK(sres.at("marginals_ok") == true);
}

TEST_CASE("verify subcommand") {
    Workspace ws;
    const fs::path c5 = ws.file("c5.hg", "k 2 n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    auto [code, dir] = ws.run({"verify", "star-sidorenko", "--graph", c5.string(), "--i", "2"});
    CHECK(code == 0);
    const json r = read_json(dir / "result.json");
    CHECK(schema::validate(r, schema_for("verify.schema.json")));
    CHECK(r.at(0).at("pass") == true);

    // failed verification exits 1: a graph with a triangle violates r = 2
    const fs::path k4 = ws.file("k4g.hg", "k 2 n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto [fcode, fdir] = ws.run({"verify", "density-turan", "--graph", k4.string(), "--r", "2"});
    CHECK(fcode == 1);
    CHECK(read_json(fdir / "result.json").at(0).at("hypothesis_ok") == false);
}

TEST_CASE("construct subcommands") {
    Workspace ws;
    auto [gcode, gdir] = ws.run({"construct", "g1"});
    CHECK(gcode == 0);
    const json g1 = read_json(gdir / "result.json");
    CHECK(schema::validate(g1, schema_for("construct.schema.json")));
    CHECK(g1.at("isomorphism_classes") == 1);
    CHECK(std::abs(g1.at("x1").get<double>() - 1.0 / 3.0) < 1e-12);

    auto [dcode, ddir] = ws.run({"construct", "g1-density", "--m", "3"});
    CHECK(dcode == 0);
    const json den = read_json(ddir / "result.json");
    CHECK(schema::validate(den, schema_for("construct-density.schema.json")));
    CHECK(den.at("series").size() == 3);
    CHECK(den.at("series")[2].at("num") == "247");

    auto [icode, idir] = ws.run({"construct", "intersection", "--k", "4", "--alpha", "0.8"});
    CHECK(icode == 0);
    CHECK(schema::validate(read_json(idir / "result.json"), schema_for("construct.schema.json")));
}

TEST_CASE("report aggregates JSON into tables") {
    Workspace ws;
    const fs::path c5 = ws.file("c5.hg", "k 2 n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    auto [vcode, vdir] = ws.run({"verify", "star-sidorenko", "--graph", c5.string(), "--i", "2"});
    REQUIRE(vcode == 0);
    auto [rcode, rdir] =
        ws.run({"report", "--input", (vdir / "result.json").string(), "--format", "csv"});
    CHECK(rcode == 0);
    const json rep = read_json(rdir / "result.json");
    CHECK(schema::validate(rep, schema_for("report.schema.json")));
    CHECK(rep.at("rows") == 1);
    CHECK(rep.at("table").get<std::string>().find("claim") != std::string::npos);
}

TEST_CASE("verify all runs the acceptance sweep") {
    Workspace ws;
    auto [code, dir] = ws.run({"verify", "all", "--scale", "quick"});
    CHECK(code == 0);
    const json r = read_json(dir / "result.json");
    CHECK(schema::validate(r, schema_for("verify.schema.json")));
    CHECK(r.size() == 14);
}

TEST_CASE("usage and parse errors") {
    Workspace ws;
    CHECK(turan::cli::dispatch({"nonsense"}) == 2);
    const fs::path bad = ws.file("bad.hg", "k 3 n 4\n0 1 zzz\n");
    auto [code, dir] = ws.run({"lagrangian", bad.string()});
    CHECK(code == 2);
    const fs::path short_edge = ws.file("short.hg", "k 3 n 4\n0 1\n");
    CHECK(ws.run({"lagrangian", short_edge.string()}).first == 2);
    // internal guards exit 3: the subset universe cap
    CHECK(ws.run({"construct", "intersection", "--k", "12", "--alpha", "0.8"}).first == 3);
}
