#ifndef BALANCE_CERTIFICATE_IO_HPP
#define BALANCE_CERTIFICATE_IO_HPP

#include <string>

#include <json.hpp>

#include "balance/balance.hpp"
#include "balance/graph.hpp"

// Certificate interchange format ("balance-cert/1"): a single JSON object
//   { "schema": "balance-cert/1", "kind": "simply_balanced", "I": [...] }
//   { "schema": "balance-cert/1", "kind": "two_part", "W": [...], "X": [...] }
// with sorted vertex arrays.

namespace balance {

inline constexpr const char* kCertificateSchema = "balance-cert/1";

inline nlohmann::json certificate_to_json(const BalanceCertificate& cert) {
    nlohmann::json j;
    j["schema"] = kCertificateSchema;
    if (cert.kind == BalanceCertificate::Kind::simply_balanced) {
        j["kind"] = "simply_balanced";
        j["I"] = cert.I.to_vector();
    } else {
        j["kind"] = "two_part";
        j["W"] = cert.W.to_vector();
        j["X"] = cert.X.to_vector();
    }
    return j;
}

inline BalanceCertificate certificate_from_json(const nlohmann::json& j, int n) {
    if (!j.is_object()) throw parse_error("certificate: not a JSON object");
    if (j.contains("schema") && j.at("schema") != kCertificateSchema)
        throw parse_error("certificate: unknown schema");
    auto read_set = [&](const char* key) {
        if (!j.contains(key)) throw parse_error(std::string("certificate: missing key ") + key);
        VertexSet s(n);
        for (const auto& entry : j.at(key)) {
            if (!entry.is_number_integer()) throw parse_error("certificate: vertex entries must be integers");
            long long v = entry.get<long long>();
            if (v < 0 || v >= n) throw parse_error("certificate: vertex out of range");
            s.add((int)v);
        }
        return s;
    };
    std::string kind = j.value("kind", "");
    if (kind == "simply_balanced") return BalanceCertificate::simply(read_set("I"));
    if (kind == "two_part") return BalanceCertificate::two_part(read_set("W"), read_set("X"));
    throw parse_error("certificate: unknown kind");
}

inline std::string certificate_to_string(const BalanceCertificate& cert) {
    return certificate_to_json(cert).dump();
}

inline BalanceCertificate certificate_from_string(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("certificate: invalid JSON: ") + e.what());
    }
    return certificate_from_json(j, n);
}

} // namespace balance

#endif
