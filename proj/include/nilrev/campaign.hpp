#pragma once

#include <cstdint>
#include <string>

#include "nilrev/scalar.hpp"

namespace nilrev {

// thm14: random star elements must all get induction reversers.
// thm11: random nonzero elements must all refuse unipotent reversers,
//        with a paired-block record built for each.
// cor12: exp of random nonzero elements must refuse unipotent reversers
//        at the group level.
// search: sample U_n^{+-1} for candidates with no signed reverser.
enum class CampaignMode { Thm14, Thm11, Cor12, Search };

const char* campaign_mode_name(CampaignMode m);
CampaignMode campaign_mode_from_name(const std::string& name);

struct CampaignOptions {
    CampaignMode mode = CampaignMode::Thm14;
    Ring ring = Ring::Rat;
    int n_max = 6;
    long trials = 100;
    std::uint64_t seed = 0;
    int dim_limit = 8;
};

struct CampaignResult {
    std::string report;  // byte-identical for identical options
    long trials = 0;
    long failures = 0;
};

CampaignResult run_campaign(const CampaignOptions& o);

}  // namespace nilrev
