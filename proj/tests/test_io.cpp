#include <cstdio>
#include <sstream>

#include <doctest.h>

#include "zml/io.hpp"

using namespace zml;

TEST_CASE("fmt17 round-trips doubles") {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, 6.0221407599999999e23, -0.0, 2.5}) {
        std::string s = fmt17(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(fmt17(cplx(1.5, -2.0)) == fmt17(1.5) + fmt17(-2.0) + "i");
}

TEST_CASE("config_hash is stable and input-sensitive") {
    auto h = io::config_hash("rmt --N 10 --orders 1,1");
    CHECK(h == io::config_hash("rmt --N 10 --orders 1,1"));
    CHECK(h != io::config_hash("rmt --N 10 --orders 1,2"));
    CHECK(io::config_hash("") != 0);
}

TEST_CASE("Table csv and json") {
    io::Table t;
    t.columns = {"a", "b"};
    t.rows = {{"1", "x,y"}, {fmt17(0.1), "z"}};

    std::ostringstream csv;
    t.write_csv(csv);
    CHECK(csv.str().substr(0, 4) == "a,b\n");
    CHECK(csv.str().find("\"x,y\"") != std::string::npos);  // comma quoted

    std::ostringstream js;
    t.write(js, "json");
    CHECK(js.str().find("\"a\"") != std::string::npos);
    CHECK(js.str().find("0.1") != std::string::npos);
    CHECK_THROWS(t.write(js, "yaml"));
}

TEST_CASE("ResultCache persists across instances") {
    std::string path = "cache_test_tmp.jsonl";
    std::remove(path.c_str());
    {
        io::ResultCache c(path);
        CHECK(!c.lookup("k1"));
        c.store("k1", "{\"v\":1}");
        CHECK(c.lookup("k1") == std::string("{\"v\":1}"));
    }
    {
        io::ResultCache c(path);
        CHECK(c.lookup("k1") == std::string("{\"v\":1}"));
        CHECK(!c.lookup("k2"));
    }
    std::remove(path.c_str());
}
