#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nilrev/campaign.hpp"
#include "nilrev/certificate_io.hpp"
#include "nilrev/errors.hpp"
#include "nilrev/expmap.hpp"
#include "nilrev/jordan.hpp"
#include "nilrev/oracle.hpp"
#include "nilrev/reverser.hpp"
#include "nilrev/text_format.hpp"

namespace {

using namespace nilrev;

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kInfeasible = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Accepts either the header form (ring= and n= tokens) or a bare body
// decoded with the --ring flag.
Matrix load_matrix(const std::string& path, const std::string& ring_flag) {
    const std::string text = read_input(path);
    if (text.find("ring=") != std::string::npos) return parse_matrix_file(text).m;
    return parse_matrix_text(text, ring_from_name(ring_flag));
}

int oracle_dim_limit() {
    if (const char* env = std::getenv("NILREV_DIM_LIMIT")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw ParseError(std::string("NILREV_DIM_LIMIT is not a number: ") + env);
        }
    }
    return OracleOptions{}.dim_limit;
}

void print_certificate(const ReversalCertificate& cert, bool as_json) {
    CertificateDocument doc{cert, check_certificate(cert), std::nullopt};
    if (as_json) {
        std::cout << certificate_to_json(doc);
        return;
    }
    std::cout << "ring: " << ring_name(cert.ring) << "\n"
              << "n: " << cert.n << "\n"
              << "group: " << group_tag_name(cert.group_tag) << "\n"
              << "level: " << level_name(cert.level) << "\n"
              << "input: " << matrix_to_text(cert.input) << "\n"
              << "g: " << matrix_to_text(cert.g.matrix()) << "\n"
              << "involution: " << (cert.involution ? "true" : "false") << "\n"
              << "produced_by: " << produced_by_name(cert.produced_by) << "\n"
              << "verified: " << (doc.verified ? "true" : "false") << "\n";
}

int cmd_reverse(const std::string& input, const std::string& ring_flag, const std::string& group,
                const std::string& method, bool as_json) {
    const Matrix m = load_matrix(input, ring_flag);
    const NilpotentUpper x{m};
    if (method == "induction") {
        print_certificate(reverse_star(x), as_json);
        return kOk;
    }
    if (method == "parity") {
        const auto out = diagonal_parity_reverser(x);
        if (const auto* cycle = std::get_if<OddCycle>(&out)) {
            std::cout << "infeasible: no diagonal reverser; odd constraint cycle";
            for (const auto& [i, j] : cycle->edges) std::cout << " (" << i << "," << j << ")";
            std::cout << "\n";
            return kInfeasible;
        }
        print_certificate(std::get<ReversalCertificate>(out), as_json);
        return kOk;
    }
    if (method == "oracle") {
        OracleOptions opts;
        opts.dim_limit = oracle_dim_limit();
        const FeasibilityResult r = reverser_feasible(x, group_tag_from_name(group), opts);
        if (r.status == Feasibility::Infeasible) {
            std::cout << "infeasible: no " << group << " reverser exists (" << r.patterns_tried
                      << " sign patterns eliminated)\n";
            return kInfeasible;
        }
        ReversalCertificate cert{m.ring(), m.rows(),        group_tag_from_name(group),
                                 CertLevel::Algebra, m, *r.g,
                                 is_involution(*r.g), ProducedBy::Oracle};
        print_certificate(cert, as_json);
        return kOk;
    }
    throw ParseError("unknown method '" + method + "'");
}

int cmd_check(const std::string& input) {
    const CertificateDocument doc = certificate_from_json(read_input(input));
    if (check_certificate(doc.cert)) {
        std::cout << "valid\n";
        return kOk;
    }
    std::cout << "INVALID: the recorded identity does not hold\n";
    return kInfeasible;
}

int cmd_exp(const std::string& input, const std::string& ring_flag) {
    const Matrix m = load_matrix(input, ring_flag);
    std::cout << matrix_to_text(exp_nilpotent(NilpotentUpper{m}).matrix()) << "\n";
    return kOk;
}

int cmd_log(const std::string& input, const std::string& ring_flag) {
    const Matrix m = load_matrix(input, ring_flag);
    std::cout << matrix_to_text(log_unipotent(SignedUnipotent{m}).matrix()) << "\n";
    return kOk;
}

int cmd_jordan(const std::string& input, const std::string& ring_flag) {
    const Matrix m = load_matrix(input, ring_flag);
    const JordanData data = jordan_structure(NilpotentUpper{m});
    std::cout << "partition: " << data.partition.bracket() << "\n";
    std::cout << "tops:";
    for (const JordanChain& c : data.chains) {
        if (c.standard_index > 0)
            std::cout << " e" << c.standard_index;
        else
            std::cout << " " << matrix_to_text(c.top);
    }
    std::cout << "\nbasis:";
    for (const std::string& label : data.basis_labels) std::cout << " (" << label << ")";
    std::cout << "\n";
    bool named = false;
    int pos = 0;
    for (const JordanChain& c : data.chains) {
        ++pos;
        if (c.standard_index == 0) {
            std::cout << "v" << pos << ": " << matrix_to_text(c.top) << "\n";
            named = true;
        }
    }
    if (named) std::cout << "beta: " << matrix_to_text(data.beta) << "\n";
    return kOk;
}

int cmd_oracle(const std::string& input, const std::string& ring_flag, const std::string& group,
               std::string level, bool as_json) {
    const Matrix m = load_matrix(input, ring_flag);
    OracleOptions opts;
    opts.dim_limit = oracle_dim_limit();
    if (level == "auto") level = m.is_strictly_upper() ? "algebra" : "group";
    const GroupTag tag = group_tag_from_name(group);
    const FeasibilityResult r = level == "algebra"
                                    ? reverser_feasible(NilpotentUpper{m}, tag, opts)
                                    : group_reverser_feasible(SignedUnipotent{m}, tag, opts);
    if (r.status == Feasibility::Infeasible) {
        std::cout << "infeasible after " << r.patterns_tried << " sign patterns\n";
        return kInfeasible;
    }
    std::cout << "feasible after " << r.patterns_tried << " sign patterns\n";
    ReversalCertificate cert{m.ring(),  m.rows(), tag,  r.level,
                             m,          *r.g,     is_involution(*r.g), ProducedBy::Oracle};
    print_certificate(cert, as_json);
    return kOk;
}

int cmd_search(const std::string& ring_flag, int n, long trials, std::uint64_t seed) {
    OracleOptions opts;
    opts.dim_limit = oracle_dim_limit();
    const SearchReport rep = nonreal_search(ring_from_name(ring_flag), n, trials, seed, opts);
    std::cout << "search ring=" << ring_name(rep.ring) << " n=" << rep.n
              << " budget=" << rep.budget << " seed=" << rep.seed << "\n"
              << "reversible: " << rep.feasible << "\n"
              << "candidates: " << rep.infeasible << "\n";
    for (const std::string& c : rep.nonreal_candidates) std::cout << "candidate: " << c << "\n";
    return kOk;
}

int cmd_campaign(const std::string& ring_flag, const std::string& mode, int n_max, long trials,
                 std::uint64_t seed) {
    CampaignOptions opts;
    opts.mode = campaign_mode_from_name(mode);
    opts.ring = ring_from_name(ring_flag);
    opts.n_max = n_max;
    opts.trials = trials;
    opts.seed = seed;
    opts.dim_limit = oracle_dim_limit();
    const CampaignResult result = run_campaign(opts);
    std::cout << result.report;
    return result.failures == 0 ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reversers for strictly upper triangular matrices"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string ring = "rat";
    std::string group = "signed_unipotent";
    std::string method = "induction";
    std::string level = "auto";
    std::string mode = "thm14";
    bool as_json = false;
    bool plain = false;
    int n = 3;
    int n_max = 6;
    long trials = 100;
    std::uint64_t seed = 0;

    auto add_io = [&](CLI::App* cmd, bool with_ring = true) {
        cmd->add_option("input", input, "matrix file, or - for stdin");
        if (with_ring) cmd->add_option("--ring", ring, "rat|gauss|quat (bare bodies only)");
    };

    CLI::App* reverse = app.add_subcommand("reverse", "construct g with g X g^-1 = -X");
    add_io(reverse);
    reverse->add_option("--group", group, "unipotent|signed_unipotent (oracle method)");
    reverse->add_option("--method", method, "induction|parity|oracle");
    reverse->add_flag("--json", as_json, "emit the certificate as JSON");
    reverse->add_flag("--plain", plain, "emit plain text (default)");

    CLI::App* check = app.add_subcommand("check", "re-verify a certificate document");
    check->add_option("input", input, "certificate JSON file, or - for stdin");

    CLI::App* exp_cmd = app.add_subcommand("exp", "exponentiate a strictly upper matrix");
    add_io(exp_cmd);
    CLI::App* log_cmd = app.add_subcommand("log", "logarithm of an all-plus unipotent matrix");
    add_io(log_cmd);
    CLI::App* jordan_cmd = app.add_subcommand("jordan", "partition and chain basis");
    add_io(jordan_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "decide reverser existence exhaustively");
    add_io(oracle_cmd);
    oracle_cmd->add_option("--group", group, "unipotent|signed_unipotent");
    oracle_cmd->add_option("--level", level, "algebra|group|auto");
    oracle_cmd->add_flag("--json", as_json, "emit any certificate as JSON");
    oracle_cmd->add_flag("--plain", plain, "emit plain text (default)");

    CLI::App* search_cmd = app.add_subcommand("search", "sample for non-real elements");
    search_cmd->add_option("--ring", ring, "rat|gauss|quat");
    search_cmd->add_option("--n", n, "matrix dimension");
    search_cmd->add_option("--trials", trials, "sample budget");
    search_cmd->add_option("--seed", seed, "random seed");

    CLI::App* campaign_cmd = app.add_subcommand("campaign", "randomized property campaign");
    campaign_cmd->add_option("--ring", ring, "rat|gauss|quat");
    campaign_cmd->add_option("--mode", mode, "thm11|thm14|cor12|search");
    campaign_cmd->add_option("--n-max", n_max, "largest dimension");
    campaign_cmd->add_option("--trials", trials, "trial count");
    campaign_cmd->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reverse->parsed()) return cmd_reverse(input, ring, group, method, as_json);
        if (check->parsed()) return cmd_check(input);
        if (exp_cmd->parsed()) return cmd_exp(input, ring);
        if (log_cmd->parsed()) return cmd_log(input, ring);
        if (jordan_cmd->parsed()) return cmd_jordan(input, ring);
        if (oracle_cmd->parsed()) return cmd_oracle(input, ring, group, level, as_json);
        if (search_cmd->parsed()) return cmd_search(ring, n, trials, seed);
        if (campaign_cmd->parsed()) return cmd_campaign(ring, mode, n_max, trials, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << "\n";
        return kParseError;
    } catch (const MalformedCertificateError& e) {
        std::cerr << "malformed certificate: " << e.what() << "\n";
        return kParseError;
    } catch (const DimensionTooLargeError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const NotStarError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const NotUnipotentError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const NotApplicableError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const ZeroInputError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const DimensionMismatchError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const RingMismatchError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
