// degreal: realizability checks, multiplicity optimization, balanced
// partition enumeration, and witness construction for degree sequences.
//
// Exit codes: 0 = holds / value computed, 1 = fails / infeasible,
// 2 = usage or parse error, 3 = partition budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "degreal/checks.hpp"
#include "degreal/construct.hpp"
#include "degreal/families.hpp"
#include "degreal/optimize.hpp"
#include "degreal/oracle.hpp"
#include "degreal/partitions.hpp"
#include "degreal/sequence.hpp"

using namespace degreal;

namespace {

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2, kBudget = 3 };

struct GlobalOptions {
    std::string format = "text";
    bool use_oracle = false;
    int jobs = 1;
};

bool json_output(const GlobalOptions& g) { return g.format == "json"; }

void print_verdict_json(const CheckVerdict& v) {
    nlohmann::ordered_json out;
    out["holds"] = v.holds;
    if (v.failing_index)
        out["failing_index"] = *v.failing_index;
    else
        out["failing_index"] = nullptr;
    out["value"] = nullptr;
    std::cout << out.dump() << "\n";
}

void print_verdict_text(const CheckVerdict& v) {
    if (v.holds) {
        std::cout << "holds";
        if (v.slack) std::cout << " (min slack " << *v.slack << ")";
        std::cout << "\n";
    } else if (v.reason == VerdictReason::odd_volume) {
        std::cout << "fails (odd volume)\n";
    } else if (v.failing_index) {
        std::cout << "fails at l=" << *v.failing_index;
        if (v.slack) std::cout << " (slack " << *v.slack << ")";
        std::cout << "\n";
    } else {
        std::cout << "fails\n";
    }
}

int report_verdict(const GlobalOptions& g, const CheckVerdict& v) {
    if (json_output(g))
        print_verdict_json(v);
    else
        print_verdict_text(v);
    return v.holds ? kHolds : kFails;
}

void print_value_json(const std::optional<i64>& value, const std::string& status,
                      const std::optional<PartitionPair>& witness) {
    nlohmann::ordered_json out;
    out["holds"] = nullptr;
    out["failing_index"] = nullptr;
    if (value)
        out["value"] = *value;
    else
        out["value"] = nullptr;
    out["status"] = status;
    if (witness) out["witness"] = witness->to_string();
    std::cout << out.dump() << "\n";
}

int report_optimal(const GlobalOptions& g, const OptimalValue& opt) {
    if (opt.budget_exceeded()) {
        if (json_output(g))
            print_value_json(std::nullopt, "budget-exceeded", std::nullopt);
        else
            std::cout << "budget exceeded\n";
        return kBudget;
    }
    if (opt.infeasible()) {
        if (json_output(g))
            print_value_json(std::nullopt, "infeasible", std::nullopt);
        else
            std::cout << "infeasible\n";
        return kFails;
    }
    if (json_output(g)) {
        print_value_json(opt.value, "ok", opt.witness);
    } else {
        std::cout << opt.value << "\n";
        if (opt.witness) std::cout << "witness: " << opt.witness->to_string() << "\n";
    }
    return kHolds;
}

struct CheckArgs {
    std::string kind;
    std::string seq_text;
    std::string partition_text;
    i64 r = 0;
    i64 t = -1;
};

DegreeSequence need_sequence(const std::string& text, const char* who) {
    if (text.empty()) fail(errc::parse, std::string(who) + " requires --seq");
    return DegreeSequence::parse(text);
}

PartitionPair need_partition(const CheckArgs& args) {
    if (args.partition_text.empty())
        fail(errc::parse, "check " + args.kind + " requires --partition \"a | b\"");
    PartitionPair p = PartitionPair::parse(args.partition_text);
    if (!args.seq_text.empty() && p.merged() != DegreeSequence::parse(args.seq_text))
        fail(errc::parse, "--partition does not split the given --seq");
    return p;
}

int run_check(const GlobalOptions& g, const CheckArgs& args) {
    const oracle::Limits limits{};
    if (args.kind == "graphic") {
        const DegreeSequence d = need_sequence(args.seq_text, "check graphic");
        if (g.use_oracle) {
            CheckVerdict v;
            v.holds = oracle::exists_multigraph(d, 1, limits);
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, is_graphic(d));
    }
    if (args.kind == "multigraph") {
        const DegreeSequence d = need_sequence(args.seq_text, "check multigraph");
        if (g.use_oracle) {
            CheckVerdict v;
            v.holds = oracle::exists_multigraph(d, d.max_degree(), limits);
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, can_multigraph(d));
    }
    if (args.kind == "rmax") {
        const DegreeSequence d = need_sequence(args.seq_text, "check rmax");
        if (args.r < 1) fail(errc::parse, "check rmax requires --r N (N >= 1)");
        if (g.use_oracle) {
            CheckVerdict v;
            v.holds = oracle::exists_multigraph(d, args.r, limits);
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, is_r_max_graphic(d, args.r));
    }
    if (args.kind == "ttot") {
        const DegreeSequence d = need_sequence(args.seq_text, "check ttot");
        if (args.t < 0) fail(errc::parse, "check ttot requires --t N (N >= 0)");
        if (g.use_oracle) {
            const OptimalValue best = oracle::oracle_tot_mult(d, limits);
            CheckVerdict v;
            v.holds = best.feasible() && best.value <= args.t;
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, is_t_tot_graphic(d, args.t));
    }

    CheckArgs pair_args = args;
    const PartitionPair p = need_partition(pair_args);
    if (args.kind == "bigraphic") {
        if (g.use_oracle) {
            CheckVerdict v;
            v.holds = oracle::pair_bigraphic(p, limits);
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, is_bigraphic_pair(p));
    }
    if (args.kind == "rmax-bi") {
        if (args.r < 1) fail(errc::parse, "check rmax-bi requires --r N (N >= 1)");
        if (g.use_oracle) {
            CheckVerdict v;
            v.holds = oracle::pair_min_max_mult(p, limits) <= args.r;
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, is_r_max_bigraphic_pair(p, args.r));
    }
    if (args.kind == "ttot-bi") {
        if (args.t < 0) fail(errc::parse, "check ttot-bi requires --t N (N >= 0)");
        if (g.use_oracle) {
            CheckVerdict v;
            v.holds = oracle::pair_min_tot_mult(p, limits) <= args.t;
            v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
            return report_verdict(g, v);
        }
        return report_verdict(g, is_t_tot_bigraphic_pair(p, args.t));
    }
    fail(errc::parse, "unknown check kind '" + args.kind + "'");
}

struct OptArgs {
    std::string measure;
    std::string seq_text;
    std::string partition_text;
    bool bipartite = false;
    std::optional<i64> budget;
};

int run_opt(const GlobalOptions& g, const OptArgs& args) {
    const bool want_max = args.measure == "maxmult";
    if (!want_max && args.measure != "totmult")
        fail(errc::parse, "opt requires a measure of maxmult or totmult");

    if (!args.partition_text.empty()) {
        const PartitionPair p = PartitionPair::parse(args.partition_text);
        if (!args.seq_text.empty() && p.merged() != DegreeSequence::parse(args.seq_text))
            fail(errc::parse, "--partition does not split the given --seq");
        if (g.use_oracle) {
            const i64 v = want_max ? oracle::pair_min_max_mult(p) : oracle::pair_min_tot_mult(p);
            return report_optimal(g, OptimalValue::of(v));
        }
        return report_optimal(g, want_max ? max_mult_bi_pair(p) : tot_mult_bi_pair(p));
    }

    const DegreeSequence d = need_sequence(args.seq_text, "opt");
    if (args.bipartite) {
        if (g.use_oracle)
            return report_optimal(g, want_max ? oracle::oracle_max_mult_bi(d)
                                              : oracle::oracle_tot_mult_bi(d));
        OptimizeOptions opts;
        opts.partition_budget = args.budget;
        opts.jobs = g.jobs;
        return report_optimal(g, want_max ? max_mult_bi(d, opts) : tot_mult_bi(d, opts));
    }
    if (g.use_oracle)
        return report_optimal(g, want_max ? oracle::oracle_max_mult(d) : oracle::oracle_tot_mult(d));
    return report_optimal(g, want_max ? max_mult(d) : tot_mult(d));
}

struct RealizeArgs {
    std::string seq_text;
    std::string partition_text;
    std::string minimize = "totmult";
    std::string out_file;
    bool bipartite = false;
    bool verify = false;
};

int run_realize(const RealizeArgs& args) {
    const bool want_max = args.minimize == "maxmult";
    if (!want_max && args.minimize != "totmult")
        fail(errc::parse, "realize requires --minimize maxmult or totmult");

    std::string payload;
    bool verified = true;

    if (args.bipartite || !args.partition_text.empty()) {
        std::optional<PartitionPair> p;
        if (!args.partition_text.empty()) {
            p = PartitionPair::parse(args.partition_text);
            if (!args.seq_text.empty() && p->merged() != DegreeSequence::parse(args.seq_text))
                fail(errc::parse, "--partition does not split the given --seq");
        } else {
            const DegreeSequence d = need_sequence(args.seq_text, "realize --bipartite");
            const OptimalValue opt = want_max ? max_mult_bi(d) : tot_mult_bi(d);
            if (!opt.feasible()) fail(errc::infeasible, "sequence has no balanced partition");
            p = opt.witness;
        }
        BipartiteMultigraph h = want_max ? realize_max_mult_bi(*p, max_mult_bi_pair(*p).value)
                                         : realize_tot_mult_bi(*p);
        if (args.verify) {
            RealizationClaim claim;
            claim.pair = *p;
            if (want_max)
                claim.max_mult_at_most = max_mult_bi_pair(*p).value;
            else
                claim.tot_mult_exact = tot_mult_bi_pair(*p).value;
            verified = verify_realization(h, claim);
        }
        payload = h.to_json();
    } else {
        const DegreeSequence d = need_sequence(args.seq_text, "realize");
        Multigraph h = want_max ? realize_max_mult(d, max_mult(d).feasible() ? max_mult(d).value : 0)
                                : realize_tot_mult(d);
        if (args.verify) {
            RealizationClaim claim;
            claim.degrees = d;
            if (want_max)
                claim.max_mult_at_most = max_mult(d).value;
            else
                claim.tot_mult_exact = tot_mult(d).value;
            verified = verify_realization(h, claim);
        }
        payload = h.to_json();
    }

    if (!args.out_file.empty()) {
        std::ofstream out(args.out_file);
        if (!out) fail(errc::parse, "cannot open output file '" + args.out_file + "'");
        out << payload;
    } else {
        std::cout << payload;
    }
    if (args.verify) {
        std::cerr << (verified ? "verified" : "verification FAILED") << "\n";
        if (!verified) return kFails;
    }
    return kHolds;
}

struct PartitionsArgs {
    std::string seq_text;
    bool count_only = false;
    bool stats = false;
    std::optional<i64> limit;
};

int run_partitions(const PartitionsArgs& args) {
    const DegreeSequence d = need_sequence(args.seq_text, "partitions");
    if (args.count_only) {
        std::cout << count_balanced_partitions(d) << "\n";
        return kHolds;
    }
    const PartitionList list = list_balanced_partitions(d, args.limit);
    for (const PartitionPair& p : list.partitions) std::cout << p.to_string() << "\n";
    if (list.truncated) std::cout << "# truncated at " << list.partitions.size() << "\n";
    if (args.stats) std::cout << "dp_invocations: " << list.stats.dp_invocations << "\n";
    return kHolds;
}

void print_fixture(const FamilyFixture& fixture) {
    std::cout << "sequence: " << fixture.sequence.to_string() << "\n";
    if (fixture.pair) std::cout << "partition: " << fixture.pair->to_string() << "\n";
    for (const auto& [key, value] : fixture.expected)
        std::cout << key << ": " << value << "\n";
    if (fixture.degenerate) std::cout << "degenerate: true\n";
}

int run_family(const std::string& which, i64 n, i64 r, i64 k, const std::string& seq_text) {
    if (which == "gap-general") {
        print_fixture(gap_general(n));
    } else if (which == "gap-bipartite") {
        print_fixture(gap_bipartite(n));
    } else if (which == "tight-rmax") {
        print_fixture(tight_rmax(r, k));
    } else if (which == "tight-ttot") {
        print_fixture(tight_ttot(k));
    } else if (which == "partition-prime") {
        std::vector<i64> a;
        for (i64 v : DegreeSequence::parse(seq_text).degrees()) a.push_back(v);
        std::cout << "sequence: " << partition_prime_instance(a).to_string() << "\n";
    } else {
        fail(errc::parse, "unknown family '" + which + "'");
    }
    return kHolds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence realizability toolkit"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--oracle", global.use_oracle, "Answer via size-guarded brute force");
    app.add_option("--jobs", global.jobs, "Worker threads for whole-sequence optimization");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Evaluate a realizability predicate");
    check->add_option("kind", check_args.kind,
                      "graphic|multigraph|rmax|ttot|bigraphic|rmax-bi|ttot-bi")
        ->required();
    check->add_option("--seq", check_args.seq_text, "Degree sequence, e.g. \"8^2 4^3\"");
    check->add_option("--partition", check_args.partition_text, "Partition \"a | b\"");
    check->add_option("--r", check_args.r, "Multiplicity cap for rmax checks");
    check->add_option("--t", check_args.t, "Excess budget for ttot checks");

    OptArgs opt_args;
    auto* opt = app.add_subcommand("opt", "Compute an optimal multiplicity value");
    opt->add_option("measure", opt_args.measure, "maxmult|totmult")->required();
    opt->add_option("--seq", opt_args.seq_text, "Degree sequence");
    opt->add_option("--partition", opt_args.partition_text, "Fixed partition \"a | b\"");
    opt->add_flag("--bipartite", opt_args.bipartite, "Optimize over all balanced partitions");
    i64 budget = -1;
    opt->add_option("--budget", budget, "Partition evaluation budget");

    RealizeArgs realize_args;
    auto* realize = app.add_subcommand("realize", "Construct a witness multigraph (JSON)");
    realize->add_option("--seq", realize_args.seq_text, "Degree sequence");
    realize->add_option("--partition", realize_args.partition_text, "Fixed partition \"a | b\"");
    realize->add_option("--minimize", realize_args.minimize, "maxmult|totmult");
    realize->add_option("--out", realize_args.out_file, "Write the graph JSON here");
    realize->add_flag("--bipartite", realize_args.bipartite, "Bipartite realization");
    realize->add_flag("--verify", realize_args.verify, "Re-verify the construction");

    PartitionsArgs partitions_args;
    auto* partitions = app.add_subcommand("partitions", "Enumerate balanced partitions");
    partitions->add_option("--seq", partitions_args.seq_text, "Degree sequence");
    partitions->add_flag("--count", partitions_args.count_only, "Print only the count");
    partitions->add_flag("--stats", partitions_args.stats, "Append DP invocation stats");
    i64 limit = -1;
    partitions->add_option("--limit", limit, "Stop after this many partitions");

    std::string family_kind;
    i64 family_n = 0, family_r = 1, family_k = 2;
    std::string family_seq;
    auto* family = app.add_subcommand("family", "Generate a named fixture");
    family->add_option("kind", family_kind,
                       "gap-general|gap-bipartite|tight-rmax|tight-ttot|partition-prime")
        ->required();
    family->add_option("--n", family_n, "Size parameter");
    family->add_option("--r", family_r, "Multiplicity parameter");
    family->add_option("--k", family_k, "Block parameter");
    family->add_option("--seq", family_seq, "Base sequence for partition-prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kHolds : kUsage;
    }

    try {
        if (*check) return run_check(global, check_args);
        if (*opt) {
            if (budget >= 0) opt_args.budget = budget;
            return run_opt(global, opt_args);
        }
        if (*realize) return run_realize(realize_args);
        if (*partitions) {
            if (limit >= 0) partitions_args.limit = limit;
            return run_partitions(partitions_args);
        }
        if (*family) return run_family(family_kind, family_n, family_r, family_k, family_seq);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::parse:
            case errc::invalid_argument:
            case errc::overflow:
                return kUsage;
            case errc::not_graphic:
            case errc::not_bigraphic:
            case errc::infeasible:
            case errc::infeasible_at_r:
                return kFails;
            case errc::validation_failed:
                return kFails;
        }
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
