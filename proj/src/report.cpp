#include "hhcert/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hhcert {

void Report::add(std::string id, Verdict v, std::string detail) {
    items.push_back({std::move(id), v, std::move(detail)});
}

void Report::merge(Report other) {
    for (auto& it : other.items) items.push_back(std::move(it));
    for (auto& in : other.inputs) inputs.push_back(std::move(in));
}

void Report::finalize() {
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.id < b.id; });
    std::stable_sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
}

long Report::count(Verdict v) const {
    return static_cast<long>(
        std::count_if(items.begin(), items.end(), [&](const Item& i) { return i.verdict == v; }));
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    size_t width = 0;
    for (const Item& i : items) width = std::max(width, i.id.size());
    for (const Item& i : items) {
        os << "  " << i.id << std::string(width - i.id.size() + 2, ' ') << to_string(i.verdict);
        if (!i.detail.empty()) os << "  [" << i.detail << "]";
        os << "\n";
    }
    os << "summary: " << count(Verdict::Verified) << " verified, " << count(Verdict::Refuted)
       << " refuted, " << count(Verdict::Undetermined) << " undetermined";
    if (timing_ms >= 0) os << "  (" << timing_ms << " ms)";
    os << "\n";
    return os.str();
}

std::string Report::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["items"] = nlohmann::ordered_json::array();
    for (const Item& i : items) {
        nlohmann::ordered_json it;
        it["id"] = i.id;
        it["verdict"] = to_string(i.verdict);
        if (!i.detail.empty()) it["detail"] = i.detail;
        j["items"].push_back(it);
    }
    j["counts"] = {{"verified", count(Verdict::Verified)},
                   {"refuted", count(Verdict::Refuted)},
                   {"undetermined", count(Verdict::Undetermined)}};
    if (!inputs.empty()) {
        j["inputs"] = nlohmann::ordered_json::array();
        for (const auto& [path, digest] : inputs)
            j["inputs"].push_back({{"path", path}, {"digest", digest}});
    }
    if (with_timing && timing_ms >= 0) j["timing_ms"] = timing_ms;
    return j.dump(2);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace hhcert
