#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kronlab/cache_file.hpp"
#include "kronlab/result_record.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path workspace() {
    static const fs::path dir = [] {
        std::mt19937_64 rng(std::random_device{}());
        fs::path p = fs::temp_directory_path() / ("kronlab_cli_" + std::to_string(rng()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = workspace() / ("out_" + std::to_string(counter++) + ".txt");
    const std::string command =
        std::string(KRONLAB_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(command.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

json read_json(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("kron command") {
    const auto ok = run_cli("kron \"[2,2]\" \"[2,2]\" \"[2,2]\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "g = 1\n");

    CHECK(run_cli("kron \"[2]\" \"[1,1]\" \"[1,1]\"").output == "g = 1\n");

    const auto arity = run_cli("kron \"[2]\" \"[1,1]\"");
    CHECK(arity.exit_code == 2);

    const auto junk = run_cli("kron \"[2]\" \"[1,1]\" \"[nope]\"");
    CHECK(junk.exit_code == 2);
    CHECK(junk.output.find("[nope]") != std::string::npos);  // names the offending argument

    CHECK(run_cli("kron \"[2]\" \"[2]\" \"[3]\"").exit_code == 2);  // size mismatch
}

TEST_CASE("scan command") {
    const fs::path out = workspace() / "scan.json";
    const auto r = run_cli("--json " + out.string() + " scan --d 2 --ell 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[1,1]") != std::string::npos);
    const json record = read_json(out);
    CHECK(record["command"] == "scan");
    CHECK(record["output"]["total"] == 2);
    CHECK(record["output"]["vanishing"] == json::array({"[1,1]"}));

    const auto empty = run_cli("scan --d 1 --ell 5");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("0 vanishing") != std::string::npos);

    CHECK(run_cli("scan --d 3 --ell 9999").exit_code == 3);  // budget refusal
    CHECK(run_cli("scan --d 2").exit_code == 2);             // missing required option
}

TEST_CASE("stretch command") {
    const fs::path out = workspace() / "stretch.json";
    const auto r = run_cli("--json " + out.string() + " stretch --lambda \"[1,1]\" --d 2");
    CHECK(r.exit_code == 0);
    const json record = read_json(out);
    CHECK(record["output"]["k_min"] == 2);
    CHECK(record["output"]["g"] == "1");

    CHECK(run_cli("stretch --lambda \"[2]\" --d 2").output.find("k_min = 1") != std::string::npos);
    CHECK(run_cli("stretch --lambda \"[1,1,1]\" --d 2").exit_code == 2);
    // NOT_FOUND is reported, not an error, when the cap is too small
    const auto capped = run_cli("stretch --lambda \"[1,1]\" --d 2 --cap 1");
    CHECK(capped.exit_code == 0);
    CHECK(capped.output.find("NOT_FOUND") != std::string::npos);
}

TEST_CASE("marginal-verify command") {
    const auto r = run_cli("marginal-verify --spectrum 0.4,0.3,0.2,0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("PASS", 0) == 0);

    CHECK(run_cli("marginal-verify --spectrum 1,0,0,0").exit_code == 0);
    CHECK(run_cli("marginal-verify --spectrum 0.5,0.6").exit_code == 2);
    CHECK(run_cli("marginal-verify --spectrum 0.5,0.3,0.2").exit_code == 2);  // length not square
}

TEST_CASE("swbound command") {
    const fs::path out = workspace() / "swbound.json";
    const auto r = run_cli("--json " + out.string() + " swbound --d 2 --k 8 --spectrum 1/2,1/2");
    CHECK(r.exit_code == 0);
    const json record = read_json(out);
    CHECK(record["output"]["all_hold"] == true);
    CHECK(record["output"]["weight_sums_exact"] == true);
    CHECK(run_cli("swbound --d 2 --k 8 --spectrum 1/3,1/3").exit_code == 2);  // not a distribution
}

TEST_CASE("kthreshold command") {
    const fs::path out = workspace() / "kthreshold.json";
    const auto r = run_cli("--json " + out.string() + " kthreshold --d 1 --eps 1");
    CHECK(r.exit_code == 0);
    const json record = read_json(out);
    CHECK(record["output"]["k_star"] == 7);
    CHECK(run_cli("kthreshold --d 2 --eps 0").exit_code == 2);
    CHECK(run_cli("kthreshold --d 2 --eps 5/2").exit_code == 2);
}

TEST_CASE("records replay to identical output") {
    const fs::path first = workspace() / "replay1.json";
    const fs::path second = workspace() / "replay2.json";
    const std::string args = "scan --d 2 --ell 3";
    REQUIRE(run_cli("--json " + first.string() + " " + args).exit_code == 0);
    REQUIRE(run_cli("--json " + second.string() + " " + args).exit_code == 0);
    const json a = read_json(first);
    const json b = read_json(second);
    CHECK(a["output"] == b["output"]);
    CHECK(a["input"] == b["input"]);
    CHECK(a["command"] == b["command"]);
    // the record round-trips losslessly through the typed representation
    const kronlab::ResultRecord record = kronlab::record_from_json(a);
    CHECK(kronlab::to_json(record) == a);
}

TEST_CASE("character cache: second run is byte-identical and cheaper") {
    const fs::path cache = workspace() / "chars.cache";
    const fs::path first = workspace() / "cache1.json";
    const fs::path second = workspace() / "cache2.json";
    const std::string args = "scan --d 2 --ell 3";

    REQUIRE(run_cli("--cache " + cache.string() + " --json " + first.string() + " " + args)
                .exit_code == 0);
    REQUIRE(fs::exists(cache));
    const auto size_after_first = fs::file_size(cache);

    REQUIRE(run_cli("--cache " + cache.string() + " --json " + second.string() + " " + args)
                .exit_code == 0);
    CHECK(fs::file_size(cache) == size_after_first);  // nothing new to append

    const json a = read_json(first);
    const json b = read_json(second);
    CHECK(a["output"].dump() == b["output"].dump());  // byte-identical payload
    CHECK(b["character_evaluations"].get<std::uint64_t>() <
          a["character_evaluations"].get<std::uint64_t>());
    CHECK(b["character_evaluations"].get<std::uint64_t>() == 0);

    // the cache file starts with the versioned header
    std::ifstream in(cache);
    std::string header;
    std::getline(in, header);
    CHECK(header == std::string(kronlab::kCacheHeader));

    // the environment variable is honored the same way as the flag
    const fs::path third = workspace() / "cache3.json";
    const std::string env_cmd = "KRONLAB_CACHE=" + cache.string() + " " +
                                std::string(KRONLAB_CLI_PATH) + " --json " + third.string() + " " +
                                args + " > /dev/null 2>&1";
    REQUIRE(std::system(env_cmd.c_str()) == 0);
    CHECK(read_json(third)["character_evaluations"].get<std::uint64_t>() == 0);
}

TEST_CASE("cache file round-trips through a fresh table") {
    kronlab::CharacterTable source;
    const kronlab::Partition lam({3, 2, 1});
    for (const auto& mu : kronlab::enumerate_partitions(6, 6)) kronlab::character(lam, mu, source);

    const fs::path path = workspace() / "roundtrip.cache";
    const std::size_t written = kronlab::append_character_cache(path.string(), source);
    CHECK(written == source.size());
    CHECK(kronlab::append_character_cache(path.string(), source) == 0);  // nothing left to write

    kronlab::CharacterTable reloaded;
    CHECK(kronlab::load_character_cache(path.string(), reloaded) == written);
    for (const auto& mu : kronlab::enumerate_partitions(6, 6)) {
        kronlab::CharacterTable fresh;
        CHECK(kronlab::character(lam, mu, reloaded) == kronlab::character(lam, mu, fresh));
    }
    CHECK(reloaded.computations() == 0);  // every query answered from the loaded records
}

TEST_CASE("cache file rejects corruption with the line number") {
    using kronlab::contract_error;
    const fs::path bad = workspace() / "bad.cache";

    std::ofstream(bad.string()) << "kronlab-cache v2\nn 0000000000 0000000000\n";
    CHECK_THROWS_WITH(kronlab::load_character_cache(bad.string(), kronlab::global_character_table()),
                      Catch::Matchers::ContainsSubstring("line 1"));

    std::ofstream(bad.string()) << std::string(kronlab::kCacheHeader) +
                                       "\nn 0000000000 0000000006\n[2,1] [1,1,1] oops\n";
    CHECK_THROWS_WITH(kronlab::load_character_cache(bad.string(), kronlab::global_character_table()),
                      Catch::Matchers::ContainsSubstring("line 3"));

    std::ofstream(bad.string()) << std::string(kronlab::kCacheHeader) +
                                       "\nn 0000000000 0000000006\n[2,1] [1,1] 0\n";
    CHECK_THROWS_WITH(kronlab::load_character_cache(bad.string(), kronlab::global_character_table()),
                      Catch::Matchers::ContainsSubstring("line 3"));

    CHECK_THROWS_AS(kronlab::load_character_cache((workspace() / "missing.cache").string(),
                                                  kronlab::global_character_table()),
                    contract_error);
}
