#pragma once

#include <string>

namespace nilrev {

// Target group for a reverser: U_n (all-plus diagonal) or U_n^{+-1}.
enum class GroupTag { Unipotent, SignedUnipotent };

// What a certificate asserts: g X g^{-1} = -X or g u g^{-1} = u^{-1}.
enum class CertLevel { Algebra, Group };

const char* group_tag_name(GroupTag t);
GroupTag group_tag_from_name(const std::string& name);

const char* level_name(CertLevel l);
CertLevel level_from_name(const std::string& name);

}  // namespace nilrev
