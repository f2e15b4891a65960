#include "fsop/report.hpp"
#include "fsop/tables.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace fsop;

TEST_SUITE("cli") {

TEST_CASE("fixed six-decimal formatting") {
    CHECK(format_real(0.0763184487L) == "0.076318");
    CHECK(format_real(-0.0000001L) == "0.000000");
    CHECK(format_real(-1.5L) == "-1.500000");
    CHECK(format_real(NAN) == "nan");
    CHECK(std::stold(format_real(0.1L, true)) == 0.1L);
    CHECK(format_general(1.25e-9L) == "1.25e-09");
}

TEST_CASE("delimited output quotes only when needed") {
    Report r;
    r.name = "t";
    r.add_column("a");
    r.add_column("note", false);
    r.add_row({"1.000000", "x, y"});
    std::ostringstream csv, tsv;
    write_report(csv, r, Format::csv);
    write_report(tsv, r, Format::tsv);
    CHECK(csv.str() == "a,note\n1.000000,\"x, y\"\n");
    CHECK(tsv.str() == "a\tnote\n1.000000\tx, y\n");
    CHECK_THROWS_AS(r.add_row({"1"}), ConfigError);
    CHECK_THROWS_AS(format_from_string("xml"), ConfigError);
}

TEST_CASE("JSON table parses back to the printed values") {
    const auto rows = compute_zero_table(testing::table(), 0, zero_table_M1(1));
    Report r;
    r.name = "table1";
    for (const char* c : kZeroTableColumns) r.add_column(c);
    r.add_column("marker", false);
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (Real v : row.eta) cells.push_back(format_real(v));
        cells.push_back("");
        r.add_row(cells);
    }
    std::ostringstream first, second;
    write_report(first, r, Format::json);
    write_report(second, r, Format::json);
    CHECK(first.str() == second.str());

    const auto j = nlohmann::json::parse(first.str());
    CHECK(j["name"] == "table1");
    REQUIRE(j["rows"].size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int k = 0; k < 5; ++k) {
            const double parsed = j["rows"][i][k].get<double>();
            CHECK(parsed == std::stod(r.rows[i][k]));
            CHECK(format_real(parsed) == r.rows[i][k]);
        }
}

}
