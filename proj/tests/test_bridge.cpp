#include <catch2/catch_amalgamated.hpp>

#include "netcomp/bridge.hpp"
#include "netcomp/json_io.hpp"
#include "support/paper_data.hpp"

using namespace netcomp;
namespace td = netcomp::testdata;

namespace {

/// 5-row embedding of a 4x24 representation: zero padding row plus one
/// extra column so the padded row stays in the row space.
FieldMatrix embed_with_dummy_row(const FieldMatrix& m) {
    FieldMatrix out(m.field(), m.rows() + 1, m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    out.set(m.rows(), m.cols(), 1);
    return out;
}

} // namespace

TEST_CASE("the paper's map makes fig1 matroidal for both matrices") {
    const NetworkMatroidMap f = td::eq9_map();
    CHECK(check_matroidal(td::fig1_problem(2),
                          RankOracle::vector_matroid(td::eq5_matrix()), f)
              .pass);
    CHECK(check_matroidal(td::fig1_problem(3),
                          RankOracle::vector_matroid(td::eq6_matrix()), f)
              .pass);
}

TEST_CASE("M1 fails when two messages collide") {
    NetworkMatroidMap f = td::eq9_map();
    f.messages[2] = f.messages[1];
    const auto report = check_matroidal(
        td::fig1_problem(2), RankOracle::vector_matroid(td::eq5_matrix()), f);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.items.empty());
    CHECK(report.items.front().condition == "M1");
}

TEST_CASE("M2 fails when messages land on dependent columns") {
    // columns 1, 5, 6, 9 of the GF(2) matrix: column 5 equals column 1
    NetworkMatroidMap f = td::eq9_map();
    f.messages = {{1, 1}, {2, 5}, {3, 6}, {4, 9}};
    const auto report = check_matroidal(
        td::fig1_problem(2), RankOracle::vector_matroid(td::eq5_matrix()), f);
    CHECK_FALSE(report.pass);
    CHECK(std::any_of(report.items.begin(), report.items.end(),
                      [](const MatroidalItem& v) { return v.condition == "M2"; }));
}

TEST_CASE("M3 failures name the node") {
    FieldMatrix m = td::eq5_matrix();
    m.set(1, 8, 1); // e5's column leaves span{F_e1}
    NetworkMatroidMap f = td::eq9_map();
    const auto report =
        check_matroidal(td::fig1_problem(2), RankOracle::vector_matroid(m), f);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.items.empty());
    CHECK(report.items.front().condition == "M3");
    CHECK(report.items.front().where == "node 3");
}

TEST_CASE("maps must be total and in range") {
    NetworkMatroidMap f = td::eq9_map();
    f.edges.erase(7);
    CHECK_THROWS_AS(check_matroidal(td::fig1_problem(2),
                                    RankOracle::vector_matroid(td::eq5_matrix()),
                                    f),
                    std::invalid_argument);
    f = td::eq9_map();
    f.demands[4] = 25;
    CHECK_THROWS_AS(check_matroidal(td::fig1_problem(2),
                                    RankOracle::vector_matroid(td::eq5_matrix()),
                                    f),
                    std::out_of_range);
}

TEST_CASE("representation constraints hold at the mapped columns") {
    CHECK(check_representation_constraints(td::eq5_matrix(), td::fig1_problem(2),
                                           td::eq9_map())
              .ok);
    CHECK(check_representation_constraints(td::eq6_matrix(), td::fig1_problem(3),
                                           td::eq9_map())
              .ok);
}

TEST_CASE("constraints fail when demands are permuted across sinks") {
    NetworkProblem p = td::fig1_problem(2);
    std::swap(p.sinks[0].demands, p.sinks[1].demands);
    const auto verdict =
        check_representation_constraints(td::eq5_matrix(), p, td::eq9_map());
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.items.front().condition == "C2");
}

TEST_CASE("constraints see through dummy rows and reject dirty padding") {
    const FieldMatrix five = embed_with_dummy_row(td::eq5_matrix());
    const NetworkProblem p = td::fig1_problem(2);
    CHECK(check_representation_constraints(five, p, td::eq9_map()).ok);

    FieldMatrix dirty = five;
    dirty.set(4, 20, 1); // nonzero padding under the t1 demand column
    const auto verdict = check_representation_constraints(dirty, p, td::eq9_map());
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.items.front().condition == "C2");

    FieldMatrix dirty_c1 = five;
    dirty_c1.set(4, 1, 1); // nonzero padding under the X2 unit column
    const auto v1 = check_representation_constraints(dirty_c1, p, td::eq9_map());
    CHECK_FALSE(v1.ok);
    CHECK(v1.items.front().condition == "C1");
}

TEST_CASE("constraint preconditions throw on dimension problems") {
    const NetworkProblem p = td::fig1_problem(2);
    const FieldMatrix narrow(PrimeField(2), 2, 24);
    CHECK_THROWS_AS(check_representation_constraints(narrow, p, td::eq9_map()),
                    std::invalid_argument);
    const FieldMatrix wrong_field = td::eq6_matrix();
    CHECK_THROWS_AS(check_representation_constraints(wrong_field, p, td::eq9_map()),
                    std::invalid_argument);
}

TEST_CASE("matroid_from_code reproduces the printed matrix column-for-column") {
    const auto result = matroid_from_code(td::fig1_problem(2), td::eq5_code());
    REQUIRE(result.matrix.has_value());
    CHECK(*result.matrix == td::eq5_matrix());
    CHECK(result.map.messages == td::eq9_map().messages);
    CHECK(result.map.edges == td::eq9_map().edges);
    CHECK(result.map.demands == td::eq9_map().demands);

    // the loaded fixture file agrees with the frozen matrix
    const FieldMatrix fixture_matrix =
        matroid_from_json(load_json_file(td::fixture("eq5_matroid.json"))).matrix();
    CHECK(fixture_matrix == *result.matrix);

    CHECK(check_matroidal(td::fig1_problem(2),
                          RankOracle::vector_matroid(*result.matrix), result.map)
              .pass);
    CHECK(check_representation_constraints(*result.matrix, td::fig1_problem(2),
                                           result.map)
              .ok);
}

TEST_CASE("matroid_from_code on a single relay gives the U_{1,3} pattern") {
    NetworkProblem p;
    p.alphabet = 2;
    p.nodes = {1, 2};
    p.messages = {{1, 1}};
    p.edges = {{1, 1, 2}};
    p.sinks = {{2, {LinearDemand{{1}}}}};
    LinearNetworkCode c{PrimeField(2), 1, {{1, {1}}}, {}, {}};
    const auto result = matroid_from_code(p, c);
    REQUIRE(result.matrix.has_value());
    CHECK(*result.matrix == FieldMatrix::from_rows(PrimeField(2), {{1, 1, 1}}));
    const RankOracle oracle = RankOracle::vector_matroid(*result.matrix);
    for (SubsetMask a = 1; a < 8; ++a)
        CHECK(oracle.rank(a) == RankOracle::uniform(3, 1).rank(a));
}

TEST_CASE("matroid_from_code rejects broken codes with a report") {
    LinearNetworkCode bad = td::eq5_code();
    bad.link_globals[5] = {1, 1, 0, 0};
    const auto result = matroid_from_code(td::fig1_problem(2), bad);
    CHECK_FALSE(result.matrix.has_value());
    CHECK_FALSE(result.code_report.pass);
}

TEST_CASE("matroid_from_code solves missing decoders itself") {
    LinearNetworkCode c = td::eq6_code();
    c.decoders.clear();
    const auto result = matroid_from_code(td::fig1_problem(3), c);
    REQUIRE(result.matrix.has_value());
    CHECK(*result.matrix == td::eq6_matrix());
}

TEST_CASE("code_from_representation recovers the GF(3) code and decoders") {
    const auto result = code_from_representation(td::eq6_matrix(),
                                                 td::fig1_problem(3), td::eq9_map());
    REQUIRE(result.ok());
    for (int t = 1; t <= 4; ++t)
        CHECK(result.code->decoders.at(t) == Column{2, 2, 2});
    CHECK(verify_code(td::fig1_problem(3), *result.code).pass);
}

TEST_CASE("round trip A: extract then synthesize preserves link globals") {
    struct Case {
        NetworkProblem p;
        LinearNetworkCode c;
    };
    const std::vector<Case> cases = {
        {td::fig1_problem(2), td::eq5_code()},
        {td::fig1_problem(3), td::eq6_code()},
        {td::butterfly_sum_problem(2), td::butterfly_sum_code()},
    };
    for (const auto& [p, c] : cases) {
        const auto extracted = matroid_from_code(p, c);
        REQUIRE(extracted.matrix.has_value());
        const auto synth =
            code_from_representation(*extracted.matrix, p, extracted.map);
        REQUIRE(synth.ok());
        CHECK(synth.code->link_globals == c.link_globals);
        CHECK(verify_code(p, *synth.code).pass);
    }
}

TEST_CASE("round trip B: the synthesized code's matroid matches the source") {
    const FieldMatrix m = embed_with_dummy_row(td::eq5_matrix());
    const NetworkProblem p = td::fig1_problem(2);
    const NetworkMatroidMap f = td::eq9_map();
    const auto synth = code_from_representation(m, p, f);
    REQUIRE(synth.ok());
    const auto extracted = matroid_from_code(p, *synth.code);
    REQUIRE(extracted.matrix.has_value());

    // correspondence: column of m under f vs column of the extracted matrix
    std::vector<std::size_t> m_cols, x_cols;
    for (int k = 1; k <= 4; ++k) {
        m_cols.push_back(f.messages.at(k));
        x_cols.push_back(extracted.map.messages.at(k));
    }
    for (int i = 1; i <= 16; ++i) {
        m_cols.push_back(f.edges.at(i));
        x_cols.push_back(extracted.map.edges.at(i));
    }
    for (int t = 1; t <= 4; ++t) {
        m_cols.push_back(f.demands.at(t));
        x_cols.push_back(extracted.map.demands.at(t));
    }
    const std::size_t n = m_cols.size();
    // exhaustive rank comparison over all subsets of size <= 5
    std::vector<std::size_t> pick;
    auto compare = [&](auto&& self, std::size_t start) -> void {
        std::vector<std::size_t> a, b;
        for (std::size_t i : pick) {
            a.push_back(m_cols[i]);
            b.push_back(x_cols[i]);
        }
        CHECK(rank(column_submatrix(m, a)) ==
              rank(column_submatrix(*extracted.matrix, b)));
        if (pick.size() == 5) return;
        for (std::size_t i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    compare(compare, 0);
}

TEST_CASE("dummy-row synthesis strips back to the 4-row code") {
    const FieldMatrix five = embed_with_dummy_row(td::eq5_matrix());
    const auto synth =
        code_from_representation(five, td::fig1_problem(2), td::eq9_map());
    REQUIRE(synth.ok());
    CHECK(synth.code->link_globals == td::eq5_code().link_globals);
    CHECK(verify_code(td::fig1_problem(2), *synth.code).pass);
}

TEST_CASE("synthesis refuses when a precondition fails") {
    FieldMatrix m = td::eq5_matrix();
    m.set(0, 20, 0); // break the t1 demand column
    const auto synth = code_from_representation(m, td::fig1_problem(2), td::eq9_map());
    CHECK_FALSE(synth.ok());
    CHECK_FALSE(synth.constraints.ok);
}

TEST_CASE("unit-vector demands may share the message's ground element") {
    // expand the classic butterfly: both sinks want both messages
    NetworkProblem p = td::butterfly_sum_problem(2);
    p.sinks = {{5,
                {LinearDemand{{1, 0}}, LinearDemand{{0, 1}}}},
               {6, {LinearDemand{{1, 0}}, LinearDemand{{0, 1}}}}};
    p = normalize_multi_demand(p);
    REQUIRE(validate(p).empty());

    LinearNetworkCode c = td::butterfly_sum_code();
    c.decoders.clear();
    const auto decoders = solve_decoders(p, c);
    REQUIRE(decoders.has_value());
    c.decoders = *decoders;
    REQUIRE(verify_code(p, c).pass);

    const auto extracted = matroid_from_code(p, c);
    REQUIRE(extracted.matrix.has_value());

    // Remark-2 style map: demand edges reuse the message elements
    NetworkMatroidMap f;
    f.messages = extracted.map.messages;
    f.edges = extracted.map.edges;
    f = complete_map_defaults(p, f);
    REQUIRE(f.demands.size() == p.sink_count());
    CHECK(f.demands.at(1) == f.messages.at(1));
    CHECK(f.demands.at(2) == f.messages.at(2));

    const RankOracle oracle = RankOracle::vector_matroid(*extracted.matrix);
    CHECK(check_matroidal(p, oracle, f).pass);
    CHECK(check_representation_constraints(*extracted.matrix, p, f).ok);
    const auto synth = code_from_representation(*extracted.matrix, p, f);
    REQUIRE(synth.ok());
    CHECK(verify_code(p, *synth.code).pass);
}

TEST_CASE("map json round trip with defaults") {
    const NetworkMatroidMap f = td::eq9_map();
    const NetworkMatroidMap back = map_from_json(map_to_json(f));
    CHECK(back.messages == f.messages);
    CHECK(back.edges == f.edges);
    CHECK(back.demands == f.demands);

    const NetworkMatroidMap fixture =
        map_from_json(load_json_file(td::fixture("eq9_map.json")));
    CHECK(fixture.messages == f.messages);
    CHECK(fixture.edges == f.edges);
    CHECK(fixture.demands == f.demands);
}
