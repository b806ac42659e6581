#include "fusion/certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

namespace fusion {

namespace {

std::vector<std::tuple<long, long, Rational>> triples(const SparseOperator& a) {
    std::vector<std::tuple<long, long, Rational>> out;
    for (Eigen::Index c = 0; c < a.outerSize(); ++c)
        for (SparseOperator::InnerIterator it(a, c); it; ++it)
            if (!it.value().is_zero()) out.emplace_back(it.row(), it.col(), it.value());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    return out;
}

}  // namespace

nlohmann::json to_json(const Entry& e) {
    nlohmann::json j;
    j["name"] = e.name;
    j["ref"] = e.ref;
    j["pass"] = e.pass;
    if (e.fatal) j["fatal"] = true;
    if (!e.witness.empty()) j["witness"] = e.witness;
    if (e.samples) j["samples"] = *e.samples;
    if (e.seed) j["seed"] = *e.seed;
    if (e.runtime_ms) j["runtime_ms"] = *e.runtime_ms;
    return j;
}

nlohmann::json certificate(const nlohmann::json& config, std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
    nlohmann::json j;
    j["version"] = certificate_version;
    j["config"] = config;
    j["pass"] = all_pass(entries);
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) j["entries"].push_back(to_json(e));
    return j;
}

std::string dump_certificate(const nlohmann::json& cert) { return cert.dump(2) + "\n"; }

std::string operator_hash(const SparseOperator& a) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
    };
    mix(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ";");
    for (const auto& [r, c, v] : triples(a)) mix(std::to_string(r) + "," + std::to_string(c) + "," + v.str() + ";");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json operator_json(const SparseOperator& a) {
    nlohmann::json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    j["hash"] = operator_hash(a);
    j["entries"] = nlohmann::json::array();
    for (const auto& [r, c, v] : triples(a)) j["entries"].push_back({r, c, v.str()});
    return j;
}

}  // namespace fusion
