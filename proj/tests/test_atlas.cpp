#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace k3bv;
using nlohmann::ordered_json;

namespace {

std::string corrupt(const std::function<void(ordered_json &)> &f) {
    auto j = ordered_json::parse(embedded_json());
    f(j);
    return j.dump();
}

ordered_json &record(ordered_json &j, int id) {
    for (auto &r : j["records"])
        if (r["id"] == id) return r;
    throw std::logic_error("no record");
}

}  // namespace

TEST_CASE("embedded dataset") {
    const Dataset &d = th::data();
    CHECK(d.records.size() == 95);
    int delsarte = 0;
    for (auto &r : d.records)
        if (r.equation && r.equation->delsarte()) ++delsarte;
    CHECK(delsarte == 86);
    CHECK(d.mirror_pairs.size() == 57);
    CHECK(d.alternatives.size() == 36);
    CHECK(d.table(1).size() == 29);
    CHECK(d.table(2).size() == 11);
    CHECK(d.table(3).size() == 8);
    CHECK_THROWS(d.by_id(96));
}

TEST_CASE("records round-trip byte-identically") {
    auto j = ordered_json::parse(embedded_json());
    const Dataset &d = th::data();
    for (size_t k = 0; k < d.records.size(); ++k) CHECK(record_to_json(d.records[k]) == j["records"][k].dump());
    for (size_t k = 0; k < d.alternatives.size(); ++k)
        CHECK(record_to_json(d.alternatives[k]) == j["alternatives"][k].dump());
    // the shipped file itself is the serializer's output
    std::string raw = embedded_json();
    while (!raw.empty() && raw.back() == '\n') raw.pop_back();
    CHECK(dataset_to_json(d) == raw);
    Dataset e = ingest_string(dataset_to_json(d));
    CHECK(dataset_to_json(e) == dataset_to_json(d));
}

TEST_CASE("ingest rejects bad data") {
    CHECK_THROWS(ingest_string(""));
    CHECK_THROWS(ingest_string("{"));

    auto s = corrupt([](ordered_json &j) { record(j, 6)["degree"] = 11; });
    try {
        ingest_string(s);
        FAIL("accepted a degree mismatch");
    } catch (const DatasetError &e) {
        REQUIRE(e.problems.size() >= 1);
        CHECK(e.problems[0].find("#6") != std::string::npos);
    }

    auto t = corrupt([](ordered_json &j) { record(j, 7)["id"] = 6; });
    CHECK_THROWS_AS(ingest_string(t), DatasetError);

    auto u = corrupt([](ordered_json &j) { record(j, 8)["monomials"][0]["coef"] = 0; });
    CHECK_THROWS_AS(ingest_string(u), DatasetError);
}

TEST_CASE("ATLAS_DATASET overrides the embedded copy") {
    auto s = corrupt([](ordered_json &j) { j["version"] = "override-test"; });
    std::string path = "atlas_override_test.json";
    std::ofstream(path) << s;
    setenv("ATLAS_DATASET", path.c_str(), 1);
    Dataset d = load_dataset();
    unsetenv("ATLAS_DATASET");
    CHECK(d.version == "override-test");
    std::remove(path.c_str());
}

TEST_CASE("reproduce_table") {
    const Dataset &d = th::data();
    auto t1 = reproduce_table(d, 1);
    CHECK(t1.rows.size() == 29);
    // header: id,borcea_id,weight,equation,r,a,...
    auto find = [](const TableDoc &t, const std::string &id) -> const std::vector<std::string> * {
        for (auto &r : t.rows)
            if (r[0] == id) return &r;
        return nullptr;
    };
    auto *r42 = find(t1, "42");
    REQUIRE(r42);
    CHECK((*r42)[4] == "3");
    CHECK((*r42)[5] == "1");
    auto *r14 = find(t1, "14");
    REQUIRE(r14);
    CHECK((*r14)[4] == "10");
    CHECK((*r14)[5] == "0");

    auto t8 = reproduce_table(d, 8);
    bool found = false;
    for (auto &r : t8.rows)
        if (r[0] == "2" && r[3] == "w" && r[4] == "18" && r[5] == "4") found = true;
    CHECK(found);

    for (int k : {2, 3, 7}) CHECK(reproduce_table(d, k).diffs.empty());
    // the only table 1 mismatch is the non-quasi-smooth #75
    REQUIRE(t1.diffs.size() == 1);
    CHECK(t1.diffs[0].find("#75") != std::string::npos);

    // byte stable
    for (int k = 0; k <= 10; ++k) {
        CHECK(to_csv(reproduce_table(d, k)) == to_csv(reproduce_table(d, k)));
        CHECK(to_json(reproduce_table(d, k)) == to_json(reproduce_table(d, k)));
    }
    auto j = ordered_json::parse(to_json(t1));
    CHECK(j["rows"].size() == 29);
}

TEST_CASE("mirror tables: printed columns pair to 20") {
    for (auto &m : th::data().mirror_pairs)
        for (auto &p : m.partners) CHECK_MESSAGE(m.printed_r + p.printed_r == 20, "#" << m.id);
}

TEST_CASE("verify_all with one corrupted record") {
    VerifyReport base = verify_all(th::data());
    Dataset bad = th::data();
    for (auto &r : bad.records)
        if (r.id == 6) r.expected_r = 8, r.expected_a = 4;
    VerifyReport rep = verify_all(bad);
    CHECK(rep.failures() == base.failures() + 1);
    int named = 0;
    for (size_t k = 0; k < rep.checks.size(); ++k)
        if (!rep.checks[k].pass && (k >= base.checks.size() || base.checks[k].pass)) {
            ++named;
            CHECK(rep.checks[k].name.find("#6") != std::string::npos);
        }
    CHECK(named == 1);
}

TEST_CASE("compute_invariants") {
    auto t = compute_invariants(th::data().by_id(8));
    CHECK(t.r == 4);
    CHECK(t.a == 4);
    CHECK_THROWS(compute_invariants(th::data().by_id(15)));
}
