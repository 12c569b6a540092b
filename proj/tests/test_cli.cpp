#include <cstdio>
#include <doctest.h>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"

using nlohmann::json;
using testsupport::cli_path;
using testsupport::rel_diff;
using testsupport::run_cli;

namespace {

std::vector<json> parse_jsonl(const std::string& out) {
    std::vector<json> records;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(json::parse(line));
    }
    return records;
}

#define REQUIRE_CLI()                                       \
    if (cli_path() == nullptr) {                            \
        MESSAGE("SPHSUM_CLI not set; skipping CLI checks"); \
        return;                                             \
    }

}  // namespace

TEST_CASE("bounds command") {
    REQUIRE_CLI();
    const auto res = run_cli("bounds --n 5 --N 16 --s 0.2");
    REQUIRE(res.exit_code == 0);
    const auto records = parse_jsonl(res.out);
    REQUIRE(records.size() == 1);
    const json& r = records.front();
    CHECK(r["m"] == 3);
    CHECK(rel_diff(r["ulb"].get<double>(), 345.4941208) < 5e-6);
    CHECK(rel_diff(r["ulb"].get<double>(), r["uub"].get<double>()) < 1e-9);
    CHECK(rel_diff(r["ulb_pipeline"].get<double>(), r["uub_pipeline"].get<double>()) < 1e-9);
    CHECK(r["uub_in_range"] == true);

    const auto simplex = run_cli("bounds --n 3 --N 4");
    REQUIRE(simplex.exit_code == 0);
    const auto simplex_rows = parse_jsonl(simplex.out);
    CHECK(rel_diff(simplex_rows.front()["ulb"].get<double>(), 19.59592) < 1e-6);

    CHECK(run_cli("bounds --n 3 --N 100").exit_code == 2);
    CHECK(run_cli("bounds --n 5 --N 16 --s 0.05").exit_code == 2);  // below the design point
    CHECK(run_cli("bounds").exit_code == 2);                        // missing arguments
}

TEST_CASE("bounds range policy and diagnostics") {
    REQUIRE_CLI();
    // s beyond the published interval: refused unless forced.
    CHECK(run_cli("bounds --n 5 --N 16 --s 0.5").exit_code == 2);
    const auto forced = run_cli("bounds --n 5 --N 16 --s 0.5 --force-range");
    REQUIRE(forced.exit_code == 0);
    const auto forced_rows = parse_jsonl(forced.out);
    CHECK(forced_rows.front()["uub_in_range"] == false);

    const auto diag = run_cli("bounds --n 3 --N 6 --s 0 --diagnostics");
    REQUIRE(diag.exit_code == 0);
    const auto diag_rows = parse_jsonl(diag.out);
    const json& r = diag_rows.front();
    // Corrected and printed degree-2 forms disagree by design.
    CHECK(rel_diff(r["uub"].get<double>(), r["uub_pipeline"].get<double>()) < 1e-9);
    CHECK(rel_diff(r["uub_printed"].get<double>(), r["uub"].get<double>()) > 0.1);
}

TEST_CASE("family commands") {
    REQUIRE_CLI();
    const auto decaen = run_cli("family decaen --r 4");
    REQUIRE(decaen.exit_code == 0);
    const auto decaen_rows = parse_jsonl(decaen.out);
    const json& d = decaen_rows.front();
    CHECK(rel_diff(d["tau"].get<double>(), 6.071317e9) < 5e-6);
    CHECK(d["n"] == 383);
    CHECK(d["N"] == 65536);

    const auto kerdock = run_cli("family kerdock --m 2");
    REQUIRE(kerdock.exit_code == 0);
    const auto kerdock_rows = parse_jsonl(kerdock.out);
    const json& k = kerdock_rows.front();
    CHECK(k["n"] == 16);
    CHECK(k["N"] == 256);
    CHECK(k["in_segment"] == false);
    CHECK(k["tau"].get<double>() <= k["ulb"].get<double>());
    CHECK(k["tau"].get<double>() >= k["uub"].get<double>());

    const auto petersen = run_cli("family srg --v 10 --k 3 --a 0 --c 1");
    REQUIRE(petersen.exit_code == 0);
    const auto petersen_rows = parse_jsonl(petersen.out);
    CHECK(petersen_rows.front()["n"] == 5);
    CHECK(petersen_rows.front()["bounds_consistent"] == true);

    // A line system beyond the relative bound cannot exist; the sum escapes
    // the enclosure and the record says so.
    const auto fake = run_cli("family equiangular --M 28 --s 0.2 --n 10");
    REQUIRE(fake.exit_code == 0);
    const auto fake_rows = parse_jsonl(fake.out);
    CHECK(fake_rows.front()["bounds_consistent"] == false);

    CHECK(run_cli("family srg --v 10 --k 3 --a 0 --c 2").exit_code == 2);
    CHECK(run_cli("family dualbch --r 4 --printed").exit_code == 3);
    CHECK(run_cli("family dualbch --r 5 --printed").exit_code == 0);
    CHECK(run_cli("family quadric --m 2 --q 6").exit_code == 2);
}

TEST_CASE("binary file ingestion") {
    REQUIRE_CLI();
    const std::string path = "/tmp/sphsum_cli_code.txt";
    {
        std::ofstream out(path);
        out << "# tetrahedron in the 2-cube metric\n0011\n0101\n0110\n1001\n";
    }
    const auto res = run_cli("family binary-file --path " + path);
    REQUIRE(res.exit_code == 0);
    const auto rows_out = parse_jsonl(res.out);
    const json& r = rows_out.front();
    CHECK(r["length"] == 4);
    CHECK(r["N"] == 4);
    CHECK(r["binary_discrepancy"].is_number());
    CHECK(r["tau"].is_number());

    {
        std::ofstream out(path);
        out << "0011\n0011\n";
    }
    CHECK(run_cli("family binary-file --path " + path).exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("table reproduction") {
    REQUIRE_CLI();
    for (const std::string which : {"decaen", "sidelnikov"}) {
        const auto res = run_cli("table " + which + " --compare");
        REQUIRE(res.exit_code == 0);
        const auto rows = parse_jsonl(res.out);
        CHECK(rows.size() == 5);
        for (const auto& row : rows) {
            CHECK(row["ulb_status"] == "PASS");
            CHECK(row["tau_status"] == "PASS");
            CHECK(row["uub_status"] == "PASS");
        }
    }

    const auto single = run_cli("table sidelnikov --rmax 1");
    REQUIRE(single.exit_code == 0);
    const auto rows = parse_jsonl(single.out);
    REQUIRE(rows.size() == 1);
    const double ulb = rows.front()["ulb"].get<double>();
    CHECK(rel_diff(ulb, rows.front()["tau"].get<double>()) < 1e-9);
    CHECK(rel_diff(ulb, rows.front()["uub"].get<double>()) < 1e-9);

    CHECK(run_cli("table decaen --rmax 9").exit_code == 2);
    CHECK(run_cli("table decaen --rmax 9 --extend").exit_code == 0);
}

TEST_CASE("discrepancy command") {
    REQUIRE_CLI();
    const auto res = run_cli("discrepancy --n 3 --N 6 --tau 45.9411255");
    REQUIRE(res.exit_code == 0);
    const auto rows = parse_jsonl(res.out);
    const json& r = rows.front();
    CHECK(r["c_n"].get<double>() == doctest::Approx(4.0));
    CHECK(r["discrepancy"].get<double>() == doctest::Approx(0.0142977).epsilon(1e-4));
    CHECK(r["nonnegative"] == true);
}

TEST_CASE("output formats and determinism") {
    REQUIRE_CLI();
    const auto a = run_cli("table decaen --compare");
    const auto b = run_cli("table decaen --compare");
    CHECK(a.out == b.out);  // byte-identical

    const auto v1 = run_cli("verify --level full --seed 42");
    const auto v2 = run_cli("verify --level full --seed 42");
    REQUIRE(v1.exit_code == 0);
    CHECK(v1.out == v2.out);  // byte-identical full runs with a fixed seed

    const auto csv = run_cli("table sidelnikov --rmax 2 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("command,table,r,n,N,s,ulb,tau,uub", 0) == 0);

    const auto text = run_cli("bounds --n 3 --N 4 --format text");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("ulb=") != std::string::npos);

    CHECK(run_cli("bounds --n 3 --N 4 --format yaml").exit_code == 2);
}

TEST_CASE("verify command exit codes") {
    REQUIRE_CLI();
    const auto ok = run_cli("verify --level quick");
    CHECK(ok.exit_code == 0);
    for (const auto& rec : parse_jsonl(ok.out)) CHECK(rec["status"] == "PASS");

    const auto fault = run_cli("verify --level quick --fault-inject lambda");
    CHECK(fault.exit_code == 4);
    bool named = false;
    for (const auto& rec : parse_jsonl(fault.out))
        if (rec["check"] == "binary-identity" && rec["status"] == "FAIL") named = true;
    CHECK(named);
}
