/*
 * Copyright 2026 The skewcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using skewcodes::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({"mds-search", "--q", "6", "--n", "3"}).code == 2);
    CHECK(run({"mds-search", "--q", "7", "--n", "9"}).code == 2);
    CHECK(run({"enumerate", "--q", "8", "--theta", "1", "--f", "X^4+("}).code == 2);
    CHECK(run({"mds-search", "--q", "7", "--n", "6", "--format", "xml"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mds-search") != std::string::npos);
}

TEST_CASE("mds-search json") {
    const Run r = run({"mds-search", "--q", "7", "--n", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["codes"].size() == 5);
    for (const auto& c : j["codes"]) CHECK(c["mds"] == true);
    CHECK(j["codes"][0]["g_text"] == "X^5 + 2*X^4 + 3*X^3 + 4*X^2 + 5*X + 6");
}

TEST_CASE("enumerate counts") {
    Run r = run({"enumerate", "--q", "8", "--theta", "1", "--f", "X^4+X^3+wX^2+1", "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["distinct"] == 4);
    CHECK(j["listing_count"] == 28);
    CHECK(j["all_mds"] == true);
    r = run({"enumerate", "--q", "8", "--f", "X^4+X^3+wX^2+1", "--format", "json"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["listing_count"] == 2);
}

TEST_CASE("budget exit code") {
    CHECK(run({"enumerate", "--q", "8", "--theta", "1", "--f", "X^4+X^3+wX^2+1", "--budget", "10"}).code == 3);
}

TEST_CASE("decompose precondition") {
    const Run r = run({"decompose", "--q", "8", "--theta", "1", "--f", "X^4+X^3+wX^2+1"});
    CHECK(r.code == 4);
    CHECK(r.err.find("invariant") != std::string::npos);
    CHECK(run({"decompose", "--q", "3", "--f", "X^2-1"}).code == 0);
}

TEST_CASE("bound verdicts") {
    Run r = run({"bound", "--q", "7", "--f", "X^6-1", "--g", "(X-5)(X-3)", "--beta", "5", "--l", "1", "--c", "4",
                 "--delta", "3", "--distance"});
    CHECK(r.code == 0);
    CHECK(r.out.find("N_3") != std::string::npos);
    r = run({"bound", "--q", "7", "--f", "X^6-1", "--g", "(X-1)(X-3)", "--beta", "3", "--c", "1", "--delta", "3",
             "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["verified"] == true);
}

TEST_CASE("dual and minpoly") {
    Run r = run({"dual", "--q", "3", "--f", "X^2-1", "--g", "X+2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["dual_matrix"].size() == 1);
    r = run({"minpoly", "--q", "4", "--theta", "1", "--M", "I2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["minimal_polynomial_text"].is_string());
}

TEST_CASE("job config round trip") {
    skewcodes::cli::JobConfig c;
    c.command = "bound";
    c.p = 7;
    c.s = 1;
    c.modulus = std::vector<std::uint32_t>{4, 1};
    c.theta_t = 0;
    c.params = {{"f", "X^6-1"}, {"delta", "3"}};
    c.jobs = 3;
    c.budget = 99;
    const auto back = skewcodes::cli::config_from_json(skewcodes::cli::to_json(c));
    CHECK(skewcodes::cli::to_json(back) == skewcodes::cli::to_json(c));
    CHECK(back.params.at("delta") == "3");
}

}
