#include "slicecert/certificate.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace slicecert {

bool Certificate::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Certificate::add(std::string name, std::string kind, bool pass, std::string witness,
                      std::optional<std::uint64_t> s) {
    checks.push_back({std::move(name), std::move(kind), pass, std::move(witness), s});
}

std::string Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "cert/v1";
    j["case"] = case_label;
    j["paper_ref"] = paper_ref;
    j["pass"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["kind"] = c.kind;
        if (c.seed) cj["seed"] = *c.seed;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        cj["pass"] = c.pass;
        j["checks"].push_back(cj);
    }
    j["convention_hash"] = convention_hash;
    if (!assumptions.empty()) j["assumptions"] = assumptions;
    j["seed"] = seed;
    j["samples"] = samples;
    j["runtime_ms"] = runtime_ms;
    return j.dump(1);
}

void Certificate::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    out << to_json() << "\n";
}

std::string Certificate::summary_line() const {
    std::ostringstream os;
    unsigned ok = 0;
    for (const auto& c : checks) ok += c.pass ? 1 : 0;
    os << (passed() ? "PASS" : "FAIL") << "  " << case_label << "  (" << ok << "/"
       << checks.size() << " checks, " << runtime_ms << " ms)";
    return os.str();
}

}  // namespace slicecert
