#pragma once

// Uniform result records: every check in the suite produces one
// VerificationReport, serialized one record per line so long sweeps can
// stream and report files stay diffable.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace oslo::report {

enum class Verdict { green, red, inconclusive, refused };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::green: return "green";
        case Verdict::red: return "red";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::refused: return "refused";
    }
    return "?";
}

inline Verdict verdict_from_string(std::string_view s) {
    if (s == "green") return Verdict::green;
    if (s == "red") return Verdict::red;
    if (s == "inconclusive") return Verdict::inconclusive;
    if (s == "refused") return Verdict::refused;
    throw std::invalid_argument("unknown verdict: " + std::string(s));
}

struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;  // insertion order preserved
    Verdict verdict = Verdict::green;
    std::vector<std::string> witnesses;  // counterexamples, certificates, or the violated guard
    std::int64_t elapsed_us = 0;
    std::optional<std::uint64_t> seed;

    VerificationReport& param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    VerificationReport& witness(std::string w) {
        witnesses.push_back(std::move(w));
        return *this;
    }

    /// red records need at least one witness; refused records carry the guard.
    void validate() const {
        if (claim.empty()) throw std::logic_error("report without claim id");
        if (verdict == Verdict::red && witnesses.empty())
            throw std::logic_error("red verdict without witness: " + claim);
        if (verdict == Verdict::refused && witnesses.empty())
            throw std::logic_error("refused verdict without guard: " + claim);
    }

    bool operator==(const VerificationReport&) const = default;
};

inline VerificationReport make_report(std::string claim, Verdict verdict) {
    VerificationReport r;
    r.claim = std::move(claim);
    r.verdict = verdict;
    return r;
}

inline void emit(const VerificationReport& r, std::ostream& sink) {
    r.validate();
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["verdict"] = std::string(to_string(r.verdict));
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["witnesses"] = r.witnesses;
    j["elapsed_us"] = r.elapsed_us;
    if (r.seed) j["seed"] = *r.seed;
    sink << j.dump() << '\n';
    if (!sink) throw std::runtime_error("report sink write failed");
}

inline VerificationReport parse_line(std::string_view line) {
    auto j = nlohmann::ordered_json::parse(line);
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& [k, v] : j.at("params").items())
        r.params.emplace_back(k, v.get<std::string>());
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

/// Human-readable one-liner.
inline std::string format_text(const VerificationReport& r) {
    std::ostringstream os;
    os << '[';
    std::string v(to_string(r.verdict));
    for (char& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    os << v << "] " << r.claim;
    for (const auto& [k, val] : r.params) os << ' ' << k << '=' << val;
    if (!r.witnesses.empty()) {
        os << " witnesses:";
        for (const auto& w : r.witnesses) os << ' ' << w;
    }
    if (r.elapsed_us > 0) os << " (" << r.elapsed_us << " us)";
    return os.str();
}

struct Summary {
    int green = 0;
    int red = 0;
    int inconclusive = 0;
    int refused = 0;
    std::int64_t total_elapsed_us = 0;
    std::vector<std::string> duplicate_claims;  // sorted, deduplicated
    std::optional<double> worst_residual;       // max over params keyed *residual*

    int total() const { return green + red + inconclusive + refused; }
    bool operator==(const Summary&) const = default;
};

/// Order-independent: counts, sums, and maxima only.
inline Summary aggregate(std::span<const VerificationReport> reports) {
    Summary s;
    std::map<std::string, int> seen;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::green: ++s.green; break;
            case Verdict::red: ++s.red; break;
            case Verdict::inconclusive: ++s.inconclusive; break;
            case Verdict::refused: ++s.refused; break;
        }
        s.total_elapsed_us += r.elapsed_us;
        ++seen[r.claim];
        for (const auto& [k, v] : r.params) {
            if (k.size() >= 8 && k.substr(k.size() - 8) == "residual") {
                try {
                    double d = std::stod(v);
                    if (!s.worst_residual || d > *s.worst_residual) s.worst_residual = d;
                } catch (const std::exception&) {
                    // non-numeric residual parameter; ignore
                }
            }
        }
    }
    for (const auto& [claim, count] : seen)
        if (count > 1) s.duplicate_claims.push_back(claim);
    return s;
}

/// 0 all green (refusals allowed alongside), 1 any red, 2 any inconclusive
/// without red, 3 refused-only or nothing ran.
inline int exit_code(const Summary& s) {
    if (s.red > 0) return 1;
    if (s.inconclusive > 0) return 2;
    if (s.green > 0) return 0;
    return 3;
}

}  // namespace oslo::report
