#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycyclic/gray.hpp"
#include "polycyclic/lincode.hpp"
#include "polycyclic/polycode.hpp"
#include "polycyclic/quantum.hpp"

namespace polycyclic {

inline const std::vector<std::string> kCorpusFlags = {"lcd", "mds", "amds", "quasicyclic", "dualcontaining"};

struct CorpusExpect {
    std::array<std::size_t, 3> params{};
    std::vector<std::string> flags;
    std::optional<std::array<std::size_t, 3>> quantum;
    bool operator==(const CorpusExpect&) const = default;
};

struct CorpusRecord {
    std::string id;
    unsigned q = 0, p = 0, m = 0;
    std::optional<std::vector<Elem>> modulus;
    std::size_t l = 0, n = 0;
    std::vector<std::vector<Elem>> a;
    std::vector<std::vector<Elem>> g;
    std::vector<std::vector<Elem>> M;
    CorpusExpect expect;
    bool long_running = false;

    bool operator==(const CorpusRecord&) const = default;
};

struct Corpus {
    std::string name;
    std::vector<CorpusRecord> records;
};

/// Parses a record object; throws SchemaError or ParseError.
CorpusRecord parse_record(const std::string& json_text);
std::string record_to_json(const CorpusRecord& r);
/// Accepts either {"name", "records"} or a single record object.
Corpus parse_corpus(const std::string& json_text);
std::string corpus_to_json(const Corpus& c);
Corpus load_corpus(const std::string& path);

/// Field, code and Gray map described by a record.
struct Instance {
    Field field;
    PolycyclicCode code;
    GraySpec gray;
};
Instance instantiate(const CorpusRecord& r);

/// Computed truth value of each corpus flag for a code and its Gray image.
/// mds/amds are only present when d is exact.
std::map<std::string, bool> compute_flags(const Instance& inst, const LinearCode& image, const Distance& d);

struct RecordReport {
    std::string id;
    bool skipped = false;
    bool pass = false;
    std::array<std::size_t, 3> params{};
    bool d_exact = false;
    std::vector<std::string> flags;
    std::optional<QuantumParams> quantum;
    std::vector<std::string> mismatches;
};

/// Recomputes every expectation of the record.
RecordReport verify_record(const CorpusRecord& r, std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace polycyclic
