#include "doctest.h"
#include "contexts.hpp"

#include "qsp/cli.hpp"

using namespace qsp;
using namespace testctx;
using nlohmann::json;

namespace {

json sl3_file(int N, bool flip, int D) {
    json f = R"({"n": 2, "q": [["z^2", "z^-1"], ["z^-1", "z^2"]]})"_json;
    f["N"] = N;
    f["D"] = D;
    f["tau"] = flip ? json::array({2, 1}) : json::array({1, 2});
    return f;
}

JobSpec job(const json& ctx, const std::string& cmd) {
    JobSpec s;
    s.context = parse_context(ctx);
    s.command = cmd;
    s.c = symbolic_c(s.context.n);
    return s;
}

}  // namespace

TEST_CASE("context files") {
    Context c = parse_context(sl3_file(5, true, 3));
    Context expect = sl3(5, true, 3);
    CHECK(c.n == 2);
    CHECK(c.N == 5);
    CHECK(c.D == 3);
    CHECK(c.tau == expect.tau);
    CHECK(c.q == expect.q);

    // integer entries, default bound, inferred rank
    json plain = R"({"N": 2, "q": [[-1]], "tau": [1]})"_json;
    Context r = parse_context(plain);
    CHECK(r.n == 1);
    CHECK(r.q[0][0] == CycNum(-1L));
    CHECK(r.D == 6);

    // input errors
    CHECK_THROWS_AS(parse_context(R"({"N": 5, "q": [["z", "1"], ["2", "z"]], "tau": [1, 2]})"_json), InputError);
    CHECK_THROWS_AS(parse_context(R"({"N": 5, "q": [["z"]], "tau": [2]})"_json), InputError);
    CHECK_THROWS_AS(parse_context(R"({"N": 5, "q": [["z^"]], "tau": [1]})"_json), InputError);
    CHECK_THROWS_AS(parse_context(R"({"n": 2, "N": 5, "q": [["z"]], "tau": [1]})"_json), InputError);
    CHECK_THROWS_AS(parse_context(R"({"N": 5, "tau": [1]})"_json), InputError);
    CHECK_THROWS_AS(parse_context(R"({"N": 5, "q": [["z"]], "tau": [1], "D": -1})"_json), InputError);
}

TEST_CASE("parameter lists") {
    auto c = parse_parameters({"sym"}, 2, 5);
    CHECK(c == symbolic_c(2));
    auto d = parse_parameters({"1", "-z^2"}, 2, 5);
    CHECK(d[0] == Scalar(1L));
    CHECK(d[1] == Scalar(-make_root(5, 2)));
    auto m = parse_parameters({"sym", "3"}, 2, 5);
    CHECK(m[0] == Scalar::var(0, 2));
    CHECK(m[1] == Scalar(3L));
    CHECK_FALSE(is_numeric(m));
    CHECK(is_numeric(d));
    CHECK_THROWS_AS(parse_parameters({"1"}, 2, 5), InputError);
    CHECK(split_list("1, z ,-z^2") == std::vector<std::string>{"1", "z", "-z^2"});
}

TEST_CASE("relation files") {
    Context c = sl3(5, true, 3);
    json f = R"({"relations": [{"name": "comm", "terms": [{"word": [1, 2], "coef": "1"}, {"word": [2, 1], "coef": "-z^-1"}]}]})"_json;
    auto rels = parse_relations(f, c);
    REQUIRE(rels.size() == 1);
    FreeElement expect = FreeElement::word({0, 1}, Side::F) - FreeElement::word({1, 0}, Side::F) * Scalar(make_root(5, -1));
    CHECK(rels[0] == expect);
    // a bare array and integer coefficients
    json g = R"([{"terms": [{"word": [1, 1], "coef": 2}]}])"_json;
    CHECK(parse_relations(g, c)[0] == FreeElement::word({0, 0}, Side::F) * Scalar(2L));
    // round trip through the output format
    json back = json::array();
    back.push_back(json::object({{"terms", terms_json(expect)}}));
    CHECK(parse_relations(back, c)[0] == expect);

    json bad_letter = R"({"relations": [{"terms": [{"word": [3], "coef": "1"}]}]})"_json;
    CHECK_THROWS_AS(parse_relations(bad_letter, c), InputError);
    json inhom = R"({"relations": [{"terms": [{"word": [1], "coef": "1"}, {"word": [1, 2], "coef": "1"}]}]})"_json;
    CHECK_THROWS_AS(parse_relations(inhom, c), InputError);
}

TEST_CASE("cyclotomic output parses back") {
    for (int N : {5, 8, 12, 24})
        for (long k = -3; k < 4; ++k) {
            CycNum x = make_root(N, k) + CycNum(mpq_class(2, 3)) * make_root(N, 2 * k + 1);
            CHECK(parse_cyc(x.str(), N) == x);
        }
}

TEST_CASE("coideal-conditions") {
    // sl3 with flip: no constraints
    JobResult r = run_job(job(sl3_file(5, true, 3), "coideal-conditions"));
    CHECK(r.exit_code == 0);
    CHECK(r.output["constraints"].empty());
    CHECK(r.output["relations"].size() == 2);
    CHECK(r.output["condition_holds"] == true);

    // disconnected vertices swapped by tau: c2 - c1
    json a1a1_file = R"({"N": 5, "q": [["z^2", "1"], ["1", "z^2"]], "tau": [2, 1], "D": 3})"_json;
    JobResult s = run_job(job(a1a1_file, "coideal-conditions"));
    REQUIRE(s.output["constraints"].size() == 1);
    auto& con = s.output["constraints"][0];
    CHECK(con["degree"] == R"([1, 1])"_json);
    Scalar c2c1 = Scalar::var(1, 2) - Scalar::var(0, 2);
    CHECK(con["value"] == c2c1.str());
    CHECK(con["monomials"] == scalar_json(c2c1));
    CHECK(s.exit_code == 0);

    // numeric parameters violating the condition: mismatch
    JobSpec bad = job(a1a1_file, "coideal-conditions");
    bad.c = numeric_c({1, 2});
    CHECK(run_job(bad).exit_code == 1);
    bad.c = numeric_c({2, 2});
    CHECK(run_job(bad).exit_code == 0);
}

TEST_CASE("basis, pairing and theta commands") {
    JobResult b = run_job(job(sl3_file(5, true, 3), "nichols-basis"));
    CHECK(b.exit_code == 0);
    auto& degs = b.output["degrees"];
    int total = 0;
    for (auto& d : degs) {
        CHECK(d["rank"] == d["basis"].size());
        CHECK(d["words"].size() == d["rank"].get<size_t>() + d["kernel"].size());
        total += d["rank"].get<int>();
    }
    // PBW monomials x1^a x12^b x2^c of height a + 2b + c <= 3 (all exponents below 5): 2 + 4 + 6
    CHECK(total == 12);
    CHECK(b.output["generators"].size() == 2);

    JobSpec p = job(sl3_file(5, true, 3), "pairing");
    p.degree = 2;
    JobResult pr = run_job(p);
    for (auto& d : pr.output["degrees"]) {
        CHECK(d["degree"].size() == 2);
        CHECK(d["gram"].size() == d["words"].size());
    }
    // <F1F2, E1E2> = 1 and <F1F2, E2E1> = q12 in canonical order
    json d11;
    for (auto& d : pr.output["degrees"])
        if (d["degree"] == R"([1, 1])"_json) d11 = d;
    REQUIRE(d11.is_object());
    CHECK(d11["words"] == R"([[1, 2], [2, 1]])"_json);
    CHECK(d11["gram"][0][0] == "1");
    CHECK(d11["gram"][0][1] == make_root(5, -1).str());

    JobResult t = run_job(job(sl3_file(5, true, 2), "theta"));
    auto& comps = t.output["components"];
    REQUIRE(comps.size() == 6);
    CHECK(comps[0]["degree"] == R"([0, 0])"_json);
    CHECK(comps[0]["coef"] == R"([["1"]])"_json);
}

TEST_CASE("coideal-relations") {
    JobResult r = run_job(job(sl3_file(7, true, 3), "coideal-relations"));
    CHECK(r.exit_code == 0);
    REQUIRE(r.output["relations"].size() == 2);
    for (auto& g : r.output["relations"]) CHECK(g["verified"] == true);
}

TEST_CASE("kmatrix and verify") {
    JobSpec k = job(sl3_file(5, true, 2), "kmatrix");
    CHECK_THROWS_AS(run_job(k), InputError);   // symbolic parameters
    k.c = numeric_c({3, 3});
    JobResult kr = run_job(k);
    CHECK(kr.exit_code == 0);
    int height_one = 0;
    for (auto& comp : kr.output["components"])
        if (comp["degree"][0].get<int>() + comp["degree"][1].get<int>() == 1) {
            CHECK(comp["coef"] == R"([["-1"]])"_json);
            ++height_one;
        }
    CHECK(height_one == 2);

    JobSpec v = k;
    v.command = "verify";
    JobResult vr = run_job(v);
    CHECK(vr.exit_code == 0);
    CHECK(vr.output["pass"] == true);
    CHECK(vr.output["results"].size() > 10);

    // parameters violating condition (c) cannot be used
    json a1a1_file = R"({"N": 5, "q": [["z^2", "1"], ["1", "z^2"]], "tau": [2, 1], "D": 2})"_json;
    JobSpec w = job(a1a1_file, "verify");
    w.c = numeric_c({1, 2});
    CHECK_THROWS_AS(run_job(w), InputError);
}

TEST_CASE("serialization is deterministic across threads") {
    JobSpec a = job(sl3_file(5, true, 4), "nichols-basis");
    JobSpec b = a;
    b.threads = 3;
    CHECK(run_job(a).output.dump() == run_job(b).output.dump());
    JobSpec u = job(sl3_file(5, true, 3), "unknown");
    CHECK_THROWS_AS(run_job(u), InputError);
}
