#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hhcert/qpoly.hpp"

namespace hhcert {

struct Item {
    std::string id;
    Verdict verdict = Verdict::Undetermined;
    std::string detail;
};

// Suite result. Items are sorted by id before emission so identical inputs
// produce byte-identical JSON; wall-clock time is kept out of the default
// serialization for the same reason.
struct Report {
    std::string suite;
    std::vector<Item> items;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, digest)
    long timing_ms = -1;

    void add(std::string id, Verdict v, std::string detail = "");
    void merge(Report other);
    void finalize();  // sort items by id
    long count(Verdict v) const;
    bool all_verified() const { return count(Verdict::Verified) == static_cast<long>(items.size()); }
    // 0 iff no refuted items.
    int exit_code() const { return count(Verdict::Refuted) > 0 ? 2 : 0; }

    std::string to_text() const;
    std::string to_json(bool with_timing = false) const;
};

std::string fnv1a_hex(const std::string& bytes);

}  // namespace hhcert
