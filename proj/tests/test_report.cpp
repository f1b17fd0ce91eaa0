#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "ggk/report.hpp"

using namespace ggk;

namespace {

std::string table_text(const CurveParams& c, const BoundTable& t, Format fmt) {
    std::ostringstream out;
    write_table(out, c, t, fmt);
    return out.str();
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("format names") {
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("md") == Format::Markdown);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_format("CSV"), std::invalid_argument);
}

TEST_CASE("params object") {
    std::ostringstream out;
    write_params(out, new_curve(2, 3));
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["genus"] == 10);
    CHECK(j["n_places"] == 225);
    CHECK(j["n"] == 223);
    CHECK(j["w_deg"] == 224);
    CHECK(j["m_dual"] == 242);
    CHECK(j["m_dual_printed"] == 251);
    CHECK(out.str().rfind("{\"q\":2,\"e\":3,", 0) == 0);
}

TEST_CASE("csv and json tables carry the same records") {
    const auto c = new_curve(2, 1);
    const auto t = build_table(c);
    const auto csv = table_text(c, t, Format::Csv);
    const auto json = nlohmann::json::parse(table_text(c, t, Format::Json));

    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "a,b,deg,dim_code,dual_dim,goppa,order_bound");
    std::size_t i = 0;
    Int prev_deg = 0;
    while (std::getline(lines, line)) {
        REQUIRE(i < json.size());
        const auto& rec = json[i++];
        std::ostringstream expect;
        expect << rec["a"] << ',' << rec["b"] << ',' << rec["deg"] << ',' << rec["dim_code"] << ','
               << rec["dual_dim"] << ',' << rec["goppa"] << ',' << rec["order_bound"];
        CHECK(line == expect.str());
        CHECK(rec["dual_dim"].get<Int>() == c.n - rec["dim_code"].get<Int>());
        CHECK(rec["goppa"].get<Int>() == rec["deg"].get<Int>() - 2 * c.genus + 2);
        CHECK(rec["deg"].get<Int>() >= prev_deg);
        prev_deg = rec["deg"].get<Int>();
    }
    CHECK(i == json.size());
    const auto cells = static_cast<std::size_t>((t.delta() + 1) * (t.delta() + 2) / 2);
    CHECK(i == cells);
}

TEST_CASE("reports are deterministic") {
    const auto c = new_curve(2, 3);
    const auto a = table_text(c, build_table(c), Format::Markdown);
    const auto b = table_text(c, build_table(c), Format::Markdown);
    CHECK(a == b);
    CHECK(a.rfind("| a | b | deg |", 0) == 0);
}

TEST_CASE("best rows descend in k") {
    const auto c = new_curve(2, 3);
    const auto rows = best_rows(c, build_table(c));
    REQUIRE(rows.size() >= 2);
    CHECK(rows.front().k == 222);
    CHECK(rows.back().k == 1);
    std::ostringstream out;
    write_best(out, rows, Format::Csv);
    CHECK(out.str().rfind("n,k,a1,a2,d_2P,d_1P\n223,222,0,0,2,2\n", 0) == 0);
}

TEST_CASE("verify divisors") {
    const auto small = verify_divisors(new_curve(2, 1), {});
    CHECK(small.size() == 169);
    const auto c = new_curve(2, 3);
    VerifyOptions opts;
    opts.samples = 50;
    const auto sampled = verify_divisors(c, opts);
    CHECK(sampled.size() == 50);
    for (const auto& d : sampled) CHECK(d.degree() <= default_delta(c));
    CHECK(sampled == verify_divisors(c, opts));
}

TEST_CASE("verify passes on the smallest curve") {
    const auto report = run_verify(new_curve(2, 1));
    CHECK(report.ok());
    std::ostringstream out;
    write_verify(out, new_curve(2, 1), report);
    CHECK(out.str().find("ALL CHECKS PASSED") != std::string::npos);
}

}
