#include "nilrev/campaign.hpp"

#include <sstream>
#include <string>

#include "nilrev/errors.hpp"
#include "nilrev/expmap.hpp"
#include "nilrev/jordan.hpp"
#include "nilrev/oracle.hpp"
#include "nilrev/random_gen.hpp"
#include "nilrev/reverser.hpp"
#include "nilrev/text_format.hpp"

namespace nilrev {

namespace {

const char* kModeNames[] = {"thm14", "thm11", "cor12", "search"};

int trial_dim(const CampaignOptions& o, long t) {
    if (o.n_max <= 2) return 2;
    return 2 + static_cast<int>(t % (o.n_max - 1));
}

}  // namespace

const char* campaign_mode_name(CampaignMode m) { return kModeNames[static_cast<int>(m)]; }

CampaignMode campaign_mode_from_name(const std::string& name) {
    for (int i = 0; i < 4; ++i)
        if (name == kModeNames[i]) return static_cast<CampaignMode>(i);
    throw Error("unknown campaign mode: " + name);
}

CampaignResult run_campaign(const CampaignOptions& o) {
    std::ostringstream out;
    out << "campaign mode=" << campaign_mode_name(o.mode) << " ring=" << ring_name(o.ring)
        << " n-max=" << o.n_max << " trials=" << o.trials << " seed=" << o.seed << "\n";
    CampaignResult result;

    if (o.mode == CampaignMode::Search) {
        OracleOptions opts;
        opts.dim_limit = o.dim_limit;
        const SearchReport rep = nonreal_search(o.ring, o.n_max, o.trials, o.seed, opts);
        out << "sampled " << (rep.feasible + rep.infeasible) << " elements: " << rep.feasible
            << " reversible, " << rep.infeasible << " candidates\n";
        for (const std::string& c : rep.nonreal_candidates) out << "candidate: " << c << "\n";
        result.trials = rep.feasible + rep.infeasible;
        result.failures = 0;
        out << "result: " << result.trials << "/" << result.trials << " ok\n";
        result.report = out.str();
        return result;
    }

    for (long t = 0; t < o.trials; ++t) {
        const int n = trial_dim(o, t);
        Rng rng(mix_seed(o.seed, static_cast<std::uint64_t>(t)));
        ++result.trials;
        std::string failure;
        try {
            switch (o.mode) {
                case CampaignMode::Thm14: {
                    const NilpotentUpper x = random_nilpotent(o.ring, n, rng, {.star = true});
                    const ReversalCertificate cert = reverse_star(x);
                    if (!check_certificate(cert)) failure = "certificate failed re-check";
                    else if (cert.g.all_plus_diagonal() && !x.matrix().is_zero())
                        failure = "all-plus reverser of a nonzero element";
                    break;
                }
                case CampaignMode::Thm11: {
                    const NilpotentUpper x =
                        random_nilpotent(o.ring, n, rng, {.star = t % 2 == 0, .nonzero = true});
                    NoUnipotentOptions opts;
                    opts.oracle_dim_limit = o.dim_limit;
                    const NoUnipotentReverserRecord rec = no_unipotent_reverser_certificate(x, opts);
                    if (!rec.oracle_checked) failure = "oracle cross-check skipped";
                    break;
                }
                case CampaignMode::Cor12: {
                    const NilpotentUpper x = random_nilpotent(o.ring, n, rng, {.nonzero = true});
                    OracleOptions opts;
                    opts.dim_limit = o.dim_limit;
                    const FeasibilityResult r =
                        group_reverser_feasible(exp_nilpotent(x), GroupTag::Unipotent, opts);
                    if (r.status != Feasibility::Infeasible)
                        failure = "unipotent group reverser found: " +
                                  matrix_to_text(r.g->matrix());
                    break;
                }
                case CampaignMode::Search:
                    break;
            }
        } catch (const Error& e) {
            failure = std::string("error: ") + e.what();
        }
        if (!failure.empty()) {
            ++result.failures;
            out << "trial " << t << " n=" << n << " FAIL " << failure << "\n";
        }
    }
    out << "result: " << (result.trials - result.failures) << "/" << result.trials << " ok\n";
    result.report = out.str();
    return result;
}

}  // namespace nilrev
