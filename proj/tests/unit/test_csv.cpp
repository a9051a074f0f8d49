#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "dephase/csv.hpp"
#include "dephase/errors.hpp"

using namespace dephase;

TEST_SUITE("csv") {
TEST_CASE("doubles round-trip") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double x : {1.0 / 3.0, 6.02214076e23, -2.5e-310, 4.0 / 3.0})
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
}

TEST_CASE("escaping") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("table layout") {
    CsvTable t({"k", "label", "value"});
    t.add_comment("note");
    t.add_row({std::int64_t{-3}, std::string("x,y"), 0.5});
    t.add_row({std::uint64_t{7}, std::string("z"), std::nan("")});
    std::ostringstream os;
    t.write(os);
    CHECK(os.str() == "# note\nk,label,value\n-3,\"x,y\",0.5\n7,z,nan\n");
    CHECK(t.rows() == 2);
    CHECK_THROWS_AS(t.add_row({1.0}), ContractViolation);
    CHECK_THROWS_AS(CsvTable({}), ContractViolation);
}
}
