/*
   Copyright 2026 hqmaps contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hqmaps/json_io.hpp"
#include "hqmaps/unitary.hpp"

using namespace hqmaps;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HQMAPS_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli: invariant verifies and is byte-deterministic") {
    RunResult a = run_cli("invariant --gamma-pq 6 5");
    RunResult b = run_cli("invariant --gamma-pq 6 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    Json j = Json::parse(a.output);
    CHECK(j["verification"]["all"] == true);
    CHECK(j["group"]["order"] == 6);
    // the diagonal moment form carries the expected coefficients
    CHECK(j.contains("moment"));
}

TEST_CASE("cli: dihedral invariant passes all property checks") {
    RunResult r = run_cli("invariant --dihedral 5");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["verification"]["constant_term_zero"] == true);
    CHECK(j["verification"]["degree_equals_order"] == true);
    CHECK(j["verification"]["sphere_normalized"] == true);
    CHECK(j["verification"]["invariant_under_group"] == true);
}

TEST_CASE("cli: signature fixtures") {
    Json a = Json::parse(run_cli("signature --gamma-pq 6 5").output);
    CHECK(a["target"] == "Q(4,1)");
    Json b = Json::parse(run_cli("signature --swap-cyclic 3").output);
    CHECK(b["target"] == "Q(4,2)");
    Json c = Json::parse(run_cli("signature --scalar 6 --dim 2").output);
    CHECK(c["target"] == "Q(7,0)");
}

TEST_CASE("cli: signature sweep emits the ratio table") {
    RunResult r = run_cli("signature --family gamma-p-pm1 --sweep 3..8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("p,order,n_plus,n_minus,n_zero,ratio,ratio_num,ratio_den\n",
                         0) == 0);
    CHECK(r.output.find("4,4,3,1,0,0.7500000000,3,4") != std::string::npos);
    CHECK(r.output.find("7,7,4,1,0,0.8000000000,4,5") != std::string::npos);
}

TEST_CASE("cli: fpq prints the expected polynomial") {
    RunResult r = run_cli("fpq 7 6");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["text"] == "x^7 + y^7 + 7*x^3*y^3 - 14*x^2*y^2 + 7*x*y");
}

TEST_CASE("cli: primality verdicts and witness") {
    Json composite = Json::parse(run_cli("primetest 6 5").output);
    CHECK(composite["is_prime"] == false);
    CHECK(composite["witness"]["coefficient"] == "-9");
    Json prime = Json::parse(run_cli("primetest 31 2").output);
    CHECK(prime["is_prime"] == true);
}

TEST_CASE("cli: quadmap verifies") {
    RunResult r = run_cli("quadmap 1");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["source"] == "Q(2,3)");
    CHECK(j["target"] == "Q(8,3)");
    CHECK(j["N"] == 8);
    CHECK(j["verified"] == true);
}

TEST_CASE("cli: bad parameters exit with code 4") {
    CHECK(run_cli("fpq 6 9").exit_code == 4);
    CHECK(run_cli("signature --gamma-pq 3 3").exit_code == 4);
}

TEST_CASE("cli: generators file is accepted") {
    UnitaryGroup g = make_gamma_pq(4, 3);
    // write only the generator, not the whole group
    Json file;
    file["dim"] = 2;
    Json elems = Json::array();
    CycNum w = CycNum::root_of_unity(4, 1);
    elems.push_back(matrix_to_json(UnitaryMatrix::diagonal({w, w.pow(3)})));
    file["elements"] = elems;
    std::string path = "cli_test_generators.json";
    {
        std::ofstream out(path);
        out << file.dump();
    }
    RunResult r = run_cli("signature --generators-file " + path);
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["group"]["order"] == 4);
    CHECK(j["target"] == "Q(3,1)");
}

TEST_CASE("cli: sweeps emit CSV with stable headers") {
    RunResult fpq = run_cli("sweep fpq --p 3..6 --q 2");
    CHECK(fpq.exit_code == 0);
    CHECK(fpq.output.rfind("p,q,coefficients,s_p,s_p_root,prime\n", 0) == 0);
    CHECK(fpq.output.find("composite") != std::string::npos);
    CHECK(fpq.output.find("prime") != std::string::npos);

    RunResult golden = run_cli("sweep golden --p 3..6");
    CHECK(golden.exit_code == 0);
    CHECK(golden.output.rfind("p,s_p,s_p_root,golden_gap\n", 0) == 0);
    CHECK(golden.output.find("3,5,") != std::string::npos);

    RunResult gap = run_cli("sweep gap --at 20 --point 1,1 --point 2,1");
    CHECK(gap.exit_code == 0);
    CHECK(gap.output.rfind("x,y,f_root,limit_target,gap\n", 0) == 0);
}
