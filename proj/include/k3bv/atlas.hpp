#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3bv/nikulin.hpp"
#include "k3bv/wps.hpp"

namespace k3bv {

struct MirrorPartner {
    int id = 0;
    std::optional<int> borcea_id;
    int printed_r = 0;  // the printed 20-r column
    Weight weight;
    std::string erratum;
};

struct MirrorRow {
    int id = 0;
    int table = 0;
    Weight weight;
    int printed_r = 0;
    std::vector<MirrorPartner> partners;
    std::vector<std::string> errata;
};

struct Dataset {
    std::string version;
    std::vector<K3Record> records;       // one per weight, ids 1..95
    std::vector<K3Record> alternatives;  // other involutions, source table 8
    std::vector<MirrorRow> mirror_pairs;

    const K3Record &by_id(int id) const;
    std::vector<const K3Record *> table(int k) const;
};

struct DatasetError : std::runtime_error {
    std::vector<std::string> problems;
    explicit DatasetError(std::vector<std::string> p);
};

Dataset ingest_string(const std::string &json);
Dataset ingest_file(const std::string &path);
// ATLAS_DATASET if set, otherwise the embedded copy
Dataset load_dataset();
const char *embedded_json();

std::string record_to_json(const K3Record &r);
std::string dataset_to_json(const Dataset &d);

struct TableDoc {
    int table = 0;
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> diffs;  // mismatches between computed and printed cells
};

TableDoc reproduce_table(const Dataset &d, int k);
std::string to_csv(const TableDoc &t);
std::string to_json(const TableDoc &t);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;
    size_t failures() const;
};

VerifyReport verify_all(const Dataset &d);

// computed (r, a) for a record with an involution; throws on failure
NikulinInvariants compute_invariants(const K3Record &r);

}  // namespace k3bv
