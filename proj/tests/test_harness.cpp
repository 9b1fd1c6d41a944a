#include "fixtures.hpp"
#include "oracles.hpp"

#include "forkfree/harness.hpp"
#include "forkfree/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace forkfree;

TEST_CASE("enumeration counts")
{
    const long expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n)
        CHECK(static_cast<long>(enumerate(n).size()) == expected[n]);
    CHECK_THROWS_AS(enumerate(kEnumerationLimit + 1), InputError);
    CHECK_THROWS_AS(enumerate(-1), InputError);
}

TEST_CASE("enumeration is independent of the worker count")
{
    CHECK(enumerate(6, 1) == enumerate(6, 3));
}

TEST_CASE("enumerated tiers are pairwise non-isomorphic")
{
    for (int n = 1; n <= 5; ++n) {
        const auto tier = enumerate(n);
        for (std::size_t i = 0; i < tier.size(); ++i)
            for (std::size_t j = i + 1; j < tier.size(); ++j)
                REQUIRE_FALSE(oracle::isomorphic(tier[i], tier[j]));
    }
}

TEST_CASE("catalog ranges")
{
    GraphCatalog catalog;
    CHECK(catalog.range(1, 4).size() == 1 + 2 + 4 + 11);
    CHECK(&catalog.tier(4) == &catalog.tier(4));
    CHECK(catalog.range(3, 2).empty());
}

TEST_CASE("graph6 ingestion")
{
    std::istringstream three("Dhc\n# note\n\nC~\n@\n");
    CHECK(ingest_graph6(three).size() == 3);

    std::istringstream empty("");
    CHECK(ingest_graph6(empty).empty());

    std::istringstream bad("Dhc\nD!!\nC~\n");
    try {
        ingest_graph6(bad);
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    const Graph c5 = fixtures::cycle(5);
    std::istringstream dup("Dhc\n" + to_graph6(relabel(c5, {0, 2, 4, 1, 3})) + "\n");
    CHECK(ingest_graph6(dup, true).size() == 1);

    CHECK_THROWS_AS(ingest_graph6_file("/nonexistent/file.g6"), InputError);
    const auto path = std::filesystem::temp_directory_path() / "forkfree_ingest.g6";
    std::ofstream(path) << "Dhc\n";
    CHECK(ingest_graph6_file(path.string()).size() == 1);
    std::filesystem::remove(path);
}

TEST_CASE("class lookup")
{
    CHECK(class_by_name("fork-free").contains(fixtures::cycle(5)));
    CHECK_FALSE(class_by_name("claw-free").contains(fixtures::claw()));
    CHECK_FALSE(class_by_name("fork-odd-parachute-free").contains(fixtures::parachute(5)));
    CHECK_FALSE(class_by_name("fork-odd-balloon-free").contains(fixtures::balloon(5)));
    CHECK(class_by_name("fork-odd-parachute-free").contains(fixtures::balloon(5)));
    CHECK_FALSE(class_by_name("3p1-free").contains(fixtures::edgeless(3)));
    CHECK(class_by_name("all").contains(fixtures::grotzsch()));
    CHECK_THROWS_AS(class_by_name("nope"), InputError);
    CHECK(class_names().size() == 8);
}

TEST_CASE("class members per order")
{
    const ClassSpec claw_free = class_by_name("claw-free");
    const int expected[] = {0, 1, 2, 4, 10, 26, 85};
    for (int n = 1; n <= 6; ++n) {
        int members = 0;
        for (const Graph& g : enumerate(n)) {
            const bool member = claw_free.contains(g);
            REQUIRE(member == !oracle::contains_induced(g, fixtures::claw()));
            members += member;
        }
        CHECK(members == expected[n]);
    }
}

TEST_CASE("main theorem on small streams")
{
    const VerificationReport perfect = verify_main_theorem({fixtures::path(4), fixtures::complete(5)});
    CHECK(perfect.verdict == Verdict::Pass);
    CHECK(perfect.vacuous);
    CHECK(perfect.totals.hypothesis == 0);
    CHECK(perfect.totals.scanned == 2);

    const VerificationReport c5 = verify_main_theorem({fixtures::cycle(5)});
    CHECK(c5.verdict == Verdict::Pass);
    CHECK(c5.totals.members == 1);
    CHECK(c5.totals.hypothesis == 0);

    const VerificationReport none = verify_main_theorem({});
    CHECK(none.verdict == Verdict::Pass);
    CHECK(none.totals.scanned == 0);

    const VerificationReport k44 = verify_main_theorem({fixtures::complete_bipartite(4, 4)});
    CHECK(k44.totals.members == 1);
    CHECK(k44.notes.at("no-simplicial-vertex") == "1");
}

TEST_CASE("planted violation")
{
    VerifyOptions options;
    options.class_override = class_by_name("all");
    const std::vector<Graph> stream = {fixtures::cycle(5), fixtures::grotzsch()};

    const VerificationReport honest = verify_main_theorem(stream, options);
    CHECK(honest.verdict == Verdict::Pass);
    CHECK(honest.totals.hypothesis == 1);
    CHECK(honest.per_n.at(11).hypothesis == 1);

    options.simplicial_k = 2;
    const VerificationReport broken = verify_main_theorem(stream, options);
    CHECK(broken.verdict == Verdict::Fail);
    REQUIRE(broken.violations.size() == 1);
    CHECK(broken.violations[0].graph6 == to_graph6(fixtures::grotzsch()));
    CHECK(revalidate("trisimplicial", broken.violations[0], options));
    options.simplicial_k = 3;
    CHECK_FALSE(revalidate("trisimplicial", broken.violations[0], options));
    CHECK_FALSE(revalidate("trisimplicial", broken.violations[0]));  // outside the class
}

TEST_CASE("chi bound reports")
{
    const VerificationReport r = verify_chi_bound({fixtures::cycle(5), fixtures::complete(5), fixtures::fork()});
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.totals.scanned == 3);
    CHECK(r.totals.members == 2);
    CHECK(r.notes.at("chi-tight") == "1");
    CHECK(r.notes.at("chi-tight.example") == "Dhc");
}

TEST_CASE("other theorems on small streams")
{
    const std::vector<Graph> stream = {fixtures::cycle(5), fixtures::balloon(5), fixtures::parachute(5),
                                       fixtures::wheel(5), fixtures::antihole(7)};
    CHECK(verify_balloon_theorem(stream).verdict == Verdict::Pass);
    CHECK(verify_balloon_theorem(stream).totals.members == 4);
    CHECK(verify_omega3_theorem(stream).verdict == Verdict::Pass);
    CHECK(verify_claw_corollary(stream).verdict == Verdict::Pass);
    const VerificationReport holes = verify_hole_attachment(stream);
    CHECK(holes.verdict == Verdict::Pass);
    CHECK(holes.totals.hypothesis == 4);
    CHECK(hunt_counterexamples(stream).verdict == Verdict::Pass);
    CHECK_THROWS_AS(verify("nope", stream), InputError);
    CHECK(theorem_names().size() == 6);
}

TEST_CASE("hunt over a fork-free graph without a division")
{
    // Grotzsch contains a fork, so the hunt filters it out.
    const VerificationReport r = hunt_counterexamples({fixtures::grotzsch()});
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.totals.members == 0);
}

TEST_CASE("reports are deterministic")
{
    const auto stream = enumerate(6);
    VerifyOptions one;
    VerifyOptions four;
    four.workers = 4;
    for (const auto& id : theorem_names()) {
        CAPTURE(id);
        const auto a = to_json(verify(id, stream, one), false);
        const auto b = to_json(verify(id, stream, four), false);
        CHECK(a == b);
    }
}

TEST_CASE("chi binding table")
{
    const auto rows = chi_binding_table({fixtures::complete(3), fixtures::complete(4), fixtures::cycle(5)},
                                        class_by_name("all"));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].omega == 2);
    CHECK(rows[0].max_chi == 3);
    CHECK(rows[1].omega == 3);
    CHECK(rows[1].max_chi == 3);
    CHECK(rows[2].max_chi == 4);
    CHECK(chi_binding_table({}, class_by_name("3p1-free")).empty());
    CHECK(chi_binding_table({fixtures::edgeless(3)}, class_by_name("3p1-free")).empty());
    CHECK(binding_table_csv(rows).starts_with("omega,max_chi,count,example_graph6\n2,3,1,Dhc\n"));
}

TEST_CASE("parallel_for visits every index once")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
    parallel_for(0, 4, [&](std::size_t) { FAIL("no work expected"); });
}
