#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilrev/reverser.hpp"

namespace nilrev {

// On-disk form of a certificate: schema_version "1", diffable and
// re-checkable by third parties.
struct CertificateDocument {
    ReversalCertificate cert;
    bool verified;  // check_certificate result at emission time
    std::optional<std::uint64_t> seed;
};

std::string certificate_to_json(const CertificateDocument& doc);

// Throws MalformedCertificateError on schema violations and malformed
// JSON; matrix bodies inside the document parse with the text grammar.
CertificateDocument certificate_from_json(const std::string& text);

bool documents_equal(const CertificateDocument& a, const CertificateDocument& b);

}  // namespace nilrev
