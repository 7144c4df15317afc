#include "nilrev/certificate_io.hpp"

#include <json.hpp>

#include "nilrev/errors.hpp"
#include "nilrev/oracle.hpp"
#include "nilrev/text_format.hpp"

namespace nilrev {

using nlohmann::json;

std::string certificate_to_json(const CertificateDocument& doc) {
    const ReversalCertificate& c = doc.cert;
    json j;
    j["schema_version"] = "1";
    j["ring"] = ring_name(c.ring);
    j["n"] = c.n;
    j["group"] = group_tag_name(c.group_tag);
    j["level"] = level_name(c.level);
    j["input"] = matrix_to_text(c.input);
    j["g"] = matrix_to_text(c.g.matrix());
    j["involution"] = c.involution;
    j["produced_by"] = produced_by_name(c.produced_by);
    j["verified"] = doc.verified;
    if (doc.seed) j["seed"] = *doc.seed;
    return j.dump(2) + "\n";
}

CertificateDocument certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedCertificateError(std::string("not valid JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<std::string>() != "1")
            throw MalformedCertificateError("unsupported schema_version");
        const Ring ring = ring_from_name(j.at("ring").get<std::string>());
        const int n = j.at("n").get<int>();
        if (n < 1) throw MalformedCertificateError("n must be positive");
        const GroupTag tag = group_tag_from_name(j.at("group").get<std::string>());
        const CertLevel level = level_from_name(j.at("level").get<std::string>());
        const Matrix input = parse_matrix_text(j.at("input").get<std::string>(), ring);
        const Matrix gm = parse_matrix_text(j.at("g").get<std::string>(), ring);
        if (input.rows() != n || input.cols() != n || gm.rows() != n || gm.cols() != n)
            throw MalformedCertificateError("matrix shape disagrees with n");
        const bool involution = j.at("involution").get<bool>();
        const ProducedBy produced = produced_by_from_name(j.at("produced_by").get<std::string>());
        const bool verified = j.at("verified").get<bool>();
        std::optional<std::uint64_t> seed;
        if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
        ReversalCertificate cert{ring, n, tag, level, input, SignedUnipotent(gm), involution, produced};
        return {cert, verified, seed};
    } catch (const MalformedCertificateError&) {
        throw;
    } catch (const json::exception& e) {
        throw MalformedCertificateError(std::string("schema violation: ") + e.what());
    } catch (const Error& e) {
        throw MalformedCertificateError(std::string("schema violation: ") + e.what());
    }
}

bool documents_equal(const CertificateDocument& a, const CertificateDocument& b) {
    const ReversalCertificate& x = a.cert;
    const ReversalCertificate& y = b.cert;
    return x.ring == y.ring && x.n == y.n && x.group_tag == y.group_tag && x.level == y.level &&
           x.input == y.input && x.g == y.g && x.involution == y.involution &&
           x.produced_by == y.produced_by && a.verified == b.verified && a.seed == b.seed;
}

}  // namespace nilrev
