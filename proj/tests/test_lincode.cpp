#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "netcomp/json_io.hpp"
#include "netcomp/lincode.hpp"
#include "support/paper_data.hpp"

using namespace netcomp;
namespace td = netcomp::testdata;

namespace {

NetworkProblem relay_chain() {
    NetworkProblem p;
    p.alphabet = 2;
    p.nodes = {1, 2, 3};
    p.messages = {{1, 1}};
    p.edges = {{1, 1, 2}, {2, 2, 3}};
    p.sinks = {{3, {LinearDemand{{1}}}}};
    return p;
}

LocalKernelSet all_same_locals(const NetworkProblem& p, std::uint32_t coeff) {
    LocalKernelSet kernels;
    for (const auto& e : p.edges)
        kernels.locals[e.id] = Column(in_set_of_edge(p, e.id).size(), coeff);
    return kernels;
}

LocalKernelSet random_locals(const NetworkProblem& p, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, p.alphabet - 1);
    LocalKernelSet kernels;
    for (const auto& e : p.edges) {
        Column c(in_set_of_edge(p, e.id).size());
        for (auto& v : c) v = dist(rng);
        kernels.locals[e.id] = std::move(c);
    }
    return kernels;
}

} // namespace

TEST_CASE("globals_from_locals relays and zeroes") {
    const NetworkProblem chain = relay_chain();
    const LinearNetworkCode relay = globals_from_locals(chain, all_same_locals(chain, 1));
    CHECK(relay.link_globals.at(1) == Column{1});
    CHECK(relay.link_globals.at(2) == Column{1});

    const LinearNetworkCode zero = globals_from_locals(chain, all_same_locals(chain, 0));
    CHECK(zero.link_globals.at(1) == Column{0});
    CHECK(zero.link_globals.at(2) == Column{0});

    LocalKernelSet incomplete;
    CHECK_THROWS_AS(globals_from_locals(chain, incomplete), std::invalid_argument);
}

TEST_CASE("globals_from_locals runs the induction on the max-network shape") {
    // all-ones linear kernels over GF(2) on the eleven-source topology
    const NetworkProblem p = td::table1_problem(2);
    const LinearNetworkCode c = globals_from_locals(p, all_same_locals(p, 1));
    Column expected(11, 0);
    for (int k : {1, 2, 4, 5, 8}) expected[k - 1] = 1;
    CHECK(c.link_globals.at(10) == expected);
    // e12 = e10 + e11 + unit(10); the shared X2 and X5 terms cancel mod 2
    Column e12(11, 0);
    for (int k : {1, 4, 8, 9, 10}) e12[k - 1] = 1;
    CHECK(c.link_globals.at(12) == e12);
}

TEST_CASE("the GF(2) paper code verifies") {
    const NetworkProblem p = td::fig1_problem(2);
    REQUIRE(validate(p).empty());
    const LinearNetworkCode c = td::eq5_code();
    const VerifyReport report = verify_code(p, c);
    CAPTURE(report.items.size());
    CHECK(report.pass);
}

TEST_CASE("the GF(3) paper code needs the doubled decoders") {
    const NetworkProblem p = td::fig1_problem(3);
    LinearNetworkCode c = td::eq6_code();

    SECTION("plain column sums miss the demand") {
        for (int t = 1; t <= 4; ++t) c.decoders[t] = {1, 1, 1};
        const VerifyReport report = verify_code(p, c);
        CHECK_FALSE(report.pass);
        REQUIRE_FALSE(report.items.empty());
        CHECK(report.items.front().condition == "decoder");
        CHECK(report.items.front().where == "t1");
        CHECK(report.items.size() == 4); // every sink misdecodes the same way
    }

    SECTION("the (2,2,2) decoders pass") { CHECK(verify_code(p, c).pass); }
}

TEST_CASE("verify_code itemizes structural problems") {
    const NetworkProblem p = td::fig1_problem(2);
    LinearNetworkCode c = td::eq5_code();

    SECTION("missing global") {
        c.link_globals.erase(7);
        const VerifyReport report = verify_code(p, c);
        CHECK_FALSE(report.pass);
        CHECK(report.items.front().condition == "global");
        CHECK(report.items.front().where == "e7");
    }

    SECTION("span violation") {
        c.link_globals[5] = {1, 1, 0, 0}; // not a multiple of e1's global
        const VerifyReport report = verify_code(p, c);
        CHECK_FALSE(report.pass);
        CHECK(std::any_of(report.items.begin(), report.items.end(),
                          [](const CodeViolation& v) {
                              return v.condition == "span" && v.where == "e5";
                          }));
    }

    SECTION("stored demand-edge global must match the demand") {
        c.hat_globals[1] = {1, 1, 1, 0};
        const VerifyReport report = verify_code(p, c);
        CHECK_FALSE(report.pass);
        CHECK(report.items.front().condition == "hat-global");
    }

    SECTION("missing decoder") {
        c.decoders.erase(2);
        const VerifyReport report = verify_code(p, c);
        CHECK_FALSE(report.pass);
        CHECK(std::any_of(report.items.begin(), report.items.end(),
                          [](const CodeViolation& v) {
                              return v.condition == "decoder" && v.where == "t2";
                          }));
    }
}

TEST_CASE("solve_decoders recovers the doubled decoders at every sink") {
    const NetworkProblem p = td::fig1_problem(3);
    LinearNetworkCode c = td::eq6_code();
    c.decoders.clear();
    const auto decoders = solve_decoders(p, c);
    REQUIRE(decoders.has_value());
    for (int t = 1; t <= 4; ++t) CHECK(decoders->at(t) == Column{2, 2, 2});
    c.decoders = *decoders;
    CHECK(verify_code(p, c).pass);
}

TEST_CASE("solve_decoders trivial and unsatisfiable cases") {
    // the sink sees its demand directly on one edge
    const NetworkProblem chain = relay_chain();
    const LinearNetworkCode relay =
        globals_from_locals(chain, all_same_locals(chain, 1));
    const auto d = solve_decoders(chain, relay);
    REQUIRE(d.has_value());
    CHECK(d->at(1) == Column{1});

    // no X1 component ever reaches the sink
    const NetworkProblem dead = td::unsolvable_problem();
    LinearNetworkCode c{PrimeField(2), 2, {}, {}, {}};
    c.link_globals[1] = {0, 1};
    CHECK_FALSE(solve_decoders(dead, c).has_value());
}

TEST_CASE("locals_from_globals round trips the globals") {
    const NetworkProblem p = td::fig1_problem(3);
    const LinearNetworkCode c = td::eq6_code();
    const LocalsResult result = locals_from_globals(p, c);
    REQUIRE(result.kernels.has_value());
    const LinearNetworkCode back = globals_from_locals(p, *result.kernels);
    CHECK(back.link_globals == c.link_globals);

    // relay edge copying its single input gets coefficient (1)
    const NetworkProblem chain = relay_chain();
    const LinearNetworkCode relay =
        globals_from_locals(chain, all_same_locals(chain, 1));
    const LocalsResult chain_locals = locals_from_globals(chain, relay);
    REQUIRE(chain_locals.kernels.has_value());
    CHECK(chain_locals.kernels->locals.at(2) == Column{1});

    // an all-zero global is expressible with all-zero coefficients
    const LinearNetworkCode zero =
        globals_from_locals(chain, all_same_locals(chain, 0));
    const LocalsResult zero_locals = locals_from_globals(chain, zero);
    REQUIRE(zero_locals.kernels.has_value());
    CHECK(zero_locals.kernels->locals.at(1) == Column{0});
}

TEST_CASE("locals_from_globals reports span violations per edge") {
    const NetworkProblem p = td::fig1_problem(2);
    LinearNetworkCode c = td::eq5_code();
    c.link_globals[5] = {0, 1, 0, 0};
    c.link_globals[7] = {1, 0, 0, 0};
    const LocalsResult result = locals_from_globals(p, c);
    CHECK_FALSE(result.kernels.has_value());
    CHECK(result.failed_edges == std::vector<int>{5, 7});
}

TEST_CASE("globals -> locals -> globals is a fixed point on random kernels") {
    std::mt19937 rng(41);
    for (const auto& base :
         {td::fig1_problem(2), td::fig1_problem(3), td::butterfly_sum_problem(2),
          td::table1_problem(2)}) {
        NetworkProblem p = base;
        if (!demand_column(p, 1)) p.sinks[0].demands = {LinearDemand{Column(p.message_count(), 1)}};
        for (int trial = 0; trial < 20; ++trial) {
            const LinearNetworkCode c = globals_from_locals(p, random_locals(p, rng));
            const LocalsResult locals = locals_from_globals(p, c);
            REQUIRE(locals.kernels.has_value());
            const LinearNetworkCode again = globals_from_locals(p, *locals.kernels);
            CHECK(again.link_globals == c.link_globals);
        }
    }
}

TEST_CASE("decoder solving makes random expanded codes verify") {
    std::mt19937 rng(43);
    int solved = 0;
    for (const auto& base : {td::fig1_problem(2), td::fig1_problem(3),
                             td::butterfly_sum_problem(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            LinearNetworkCode c = globals_from_locals(base, random_locals(base, rng));
            const auto decoders = solve_decoders(base, c);
            if (!decoders) continue;
            ++solved;
            c.decoders = *decoders;
            CHECK(verify_code(base, c).pass);
        }
    }
    CHECK(solved > 0); // the sampler does hit decodable codes
}

TEST_CASE("source-edge globals juxtapose to the identity") {
    const NetworkProblem p = td::fig1_problem(2);
    const LinearNetworkCode c = td::eq5_code();
    std::vector<EdgeRef> tilde;
    for (int k = 1; k <= 4; ++k) tilde.push_back(EdgeRef::source(k));
    CHECK(globals_matrix(p, c, tilde) == FieldMatrix::identity(PrimeField(2), 4));
}

TEST_CASE("scaling a demand and its decoder together preserves the outcome") {
    NetworkProblem p = td::fig1_problem(3);
    LinearNetworkCode c = td::eq6_code();
    PrimeField f3(3);
    for (std::uint32_t scalar : {1u, 2u}) {
        NetworkProblem scaled = p;
        LinearNetworkCode sc = c;
        scaled.sinks[0].demands = {
            LinearDemand{scale_column(f3, scalar, *demand_column(p, 1))}};
        sc.decoders[1] = scale_column(f3, scalar, c.decoders.at(1));
        CHECK(verify_code(scaled, sc).pass == verify_code(p, c).pass);

        // and a broken decoder stays broken under scaling
        LinearNetworkCode bad = c;
        bad.decoders[1] = {1, 1, 1};
        LinearNetworkCode bad_scaled = bad;
        bad_scaled.decoders[1] = scale_column(f3, scalar, bad.decoders.at(1));
        CHECK(verify_code(scaled, bad_scaled).pass == verify_code(p, bad).pass);
    }
}

TEST_CASE("code json round trips") {
    const LinearNetworkCode c = td::eq6_code();
    const LinearNetworkCode back = code_from_json(code_to_json(c));
    CHECK(back.field == c.field);
    CHECK(back.message_count == c.message_count);
    CHECK(back.link_globals == c.link_globals);
    CHECK(back.decoders == c.decoders);

    const LinearNetworkCode fixture =
        load_code(td::fixture("eq5_code.json"));
    CHECK(fixture.link_globals == td::eq5_code().link_globals);
    CHECK(fixture.decoders == td::eq5_code().decoders);
    CHECK(fixture.hat_globals.at(1) == Column{1, 0, 1, 0});

    CHECK_THROWS_AS(code_from_json(json::parse(R"({"q":2,"K":2,"globals":
        {"e1":[1,0,1]}})")),
                    ParseError);
    CHECK_THROWS_AS(code_from_json(json::parse(R"({"q":2,"K":2,"globals":
        {"x1":[1,0]}})")),
                    ParseError);
}
