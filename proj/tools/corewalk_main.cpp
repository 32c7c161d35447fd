// corewalk: sample near-uniform random graphs with a prescribed core-value
// sequence, plus the null-model analyses built on top of them.

#include "corewalk/analysis.hpp"
#include "corewalk/chain.hpp"
#include "corewalk/config_model.hpp"
#include "corewalk/io.hpp"
#include "corewalk/realization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace corewalk;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUnrealizable = 3;

struct UnrealizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u64 resolve_seed(const std::optional<u64>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("COREWALK_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

CoreSequence load_sequence(const std::string& path) {
    bool reordered = false;
    auto c = io::read_core_sequence(path, &reordered);
    if (reordered)
        std::cerr << "warning: " << path << " was not non-increasing; sorted on load\n";
    return c;
}

void require_realizable(const CoreSequence& c) {
    std::string why = realizability_violation(c);
    if (!why.empty()) throw UnrealizableError("unrealizable core sequence: " + why);
}

std::string join(const std::vector<int>& v, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_cores(const std::string& graph_file, const std::string& per_node_file) {
    auto data = io::read_edge_list(graph_file);
    auto d = core_decomposition(data.graph);
    std::cout << join(d.sequence().values) << '\n';
    if (!per_node_file.empty()) {
        std::ofstream out(per_node_file);
        if (!out) throw std::runtime_error("cannot write " + per_node_file);
        for (NodeId v = 0; v < data.graph.num_nodes(); ++v)
            out << data.labels[v] << '\t' << d.core_of[v] << '\n';
    }
    return 0;
}

int cmd_realize(const std::string& seq_file, const std::string& out_file) {
    auto c = load_sequence(seq_file);
    require_realizable(c);
    Graph g = realize(c);
    io::write_edge_list(out_file, g, io::default_labels(g.num_nodes()));
    return 0;
}

struct SampleArgs {
    std::string graph_file, seq_file, out_dir;
    std::string model = "kcore";
    u64 steps = 0, samples = 50, sample_every = 0;
    std::optional<u64> seed;
    int jobs = 1;
};

int cmd_sample(const SampleArgs& args) {
    ChainConfig cfg;
    cfg.steps = args.steps;
    cfg.num_samples = args.samples;
    cfg.sample_every = args.sample_every;
    cfg.seed = resolve_seed(args.seed);
    cfg.jobs = args.jobs;

    Graph input;
    std::vector<std::string> labels;
    if (!args.graph_file.empty()) {
        auto data = io::read_edge_list(args.graph_file);
        input = std::move(data.graph);
        labels = std::move(data.labels);
    } else {
        auto c = load_sequence(args.seq_file);
        require_realizable(c);
        input = realize(c);
        labels = io::default_labels(input.num_nodes());
    }
    CoreSequence target = CoreSequence::from_unsorted(core_values(input));
    require_realizable(target);

    u64 steps_used = cfg.steps != 0
                         ? cfg.steps
                         : 100 * static_cast<u64>(std::max<std::size_t>(input.num_edges(), 1));
    SampleReport report;
    std::vector<Graph> samples;
    if (args.model == "config") {
        samples = config_sample(input, cfg, &report);
    } else {
        samples = sample(input, cfg, &report);
    }
    io::write_sample_batch(args.out_dir, args.model == "config" ? "configuration" : "kcore",
                           samples, labels, target, cfg, steps_used, report);
    return 0;
}

struct AnalyzeArgs {
    std::string graph_file, attrs_file, report_file, csv_prefix;
    std::vector<std::string> null_dirs;
    double epsilon = 4.0;
};

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

struct SampleStats {
    std::size_t edges;
    std::uint64_t triangles;
    SubgraphCensus census;
    std::vector<int> degrees;                  // sorted non-increasing
    std::vector<std::uint64_t> triangle_degs;  // sorted non-increasing
    std::vector<double> assort;                // per attribute column
};

int cmd_analyze(const AnalyzeArgs& args) {
    auto data = io::read_edge_list(args.graph_file);
    const Graph& g = data.graph;

    std::optional<AttributeTable> attrs;
    if (!args.attrs_file.empty())
        attrs = io::read_attributes(args.attrs_file, data.index, g.num_nodes());

    auto data_census = four_node_census(g);
    auto data_tri = data_census[Pattern::Triangle];
    auto data_degrees = sorted_degree_sequence(g);
    auto data_tri_degs = triangle_degrees(g);
    std::sort(data_tri_degs.begin(), data_tri_degs.end(), std::greater<std::uint64_t>());

    ordered_json report;
    report["schema"] = 1;
    report["graph"] = args.graph_file;
    report["epsilon"] = args.epsilon;
    report["data"] = {{"nodes", g.num_nodes()},
                      {"edges", g.num_edges()},
                      {"core_sequence", core_decomposition(g).sequence().values},
                      {"triangles", data_tri}};
    ordered_json census_j = ordered_json::object();
    for (int p = 0; p < kNumPatterns; ++p)
        census_j[pattern_name(static_cast<Pattern>(p))] = data_census.counts[p];
    report["data"]["census"] = census_j;

    std::vector<double> data_assort;
    if (attrs) {
        ordered_json aj = ordered_json::object();
        for (std::size_t c = 0; c < attrs->columns.size(); ++c) {
            data_assort.push_back(assortativity(g, *attrs, static_cast<int>(c)));
            aj[attrs->columns[c]] = data_assort.back();
        }
        report["data"]["assortativity"] = aj;
    }

    std::string prefix = args.csv_prefix;
    if (prefix.empty()) {
        prefix = args.report_file;
        if (prefix.size() > 5 && prefix.substr(prefix.size() - 5) == ".json")
            prefix = prefix.substr(0, prefix.size() - 5);
    }
    std::ofstream tri_csv(prefix + "_triangles.csv");
    std::ofstream edge_csv(prefix + "_edges.csv");
    std::ofstream deg_csv(prefix + "_degrees.csv");
    std::ofstream tdeg_csv(prefix + "_triangle_degrees.csv");
    std::ofstream srp_csv(prefix + "_srp.csv");
    std::ofstream assort_csv(prefix + "_assortativity.csv");
    if (!tri_csv || !edge_csv || !deg_csv || !tdeg_csv || !srp_csv || !assort_csv)
        throw std::runtime_error("cannot write CSV files with prefix " + prefix);

    tri_csv << "null,sample,triangles\n";
    edge_csv << "null,sample,edges\n";
    deg_csv << "null,sample,degrees\n";
    tdeg_csv << "null,sample,triangle_degrees\n";
    srp_csv << "null,pattern,delta,srp\n";
    assort_csv << "null,attribute,r_data,null_mean,null_sd,z\n";

    tri_csv << "data,-1," << data_tri << '\n';
    edge_csv << "data,-1," << g.num_edges() << '\n';
    deg_csv << "data,-1," << join(data_degrees) << '\n';
    tdeg_csv << "data,-1," << join_u64(data_tri_degs) << '\n';

    report["nulls"] = ordered_json::array();
    for (const auto& dir : args.null_dirs) {
        auto batch = io::read_sample_batch(dir);
        std::string null_name = fs::path(dir).filename().string();
        if (null_name.empty()) null_name = dir;

        std::vector<SampleStats> stats;
        stats.reserve(batch.sample_files.size());
        for (const auto& file : batch.sample_files) {
            Graph s = io::read_edge_list_as(file, data.index, g.num_nodes());
            SampleStats st;
            st.edges = s.num_edges();
            st.census = four_node_census(s);
            st.triangles = st.census[Pattern::Triangle];
            st.degrees = sorted_degree_sequence(s);
            st.triangle_degs = triangle_degrees(s);
            std::sort(st.triangle_degs.begin(), st.triangle_degs.end(),
                      std::greater<std::uint64_t>());
            if (attrs)
                for (std::size_t c = 0; c < attrs->columns.size(); ++c)
                    st.assort.push_back(assortativity(s, *attrs, static_cast<int>(c)));
            stats.push_back(std::move(st));
        }
        if (stats.empty()) throw std::runtime_error("no sample files in " + dir);

        std::vector<SubgraphCensus> censuses;
        std::vector<double> tri_counts, edge_counts;
        for (std::size_t i = 0; i < stats.size(); ++i) {
            censuses.push_back(stats[i].census);
            tri_counts.push_back(static_cast<double>(stats[i].triangles));
            edge_counts.push_back(static_cast<double>(stats[i].edges));
            tri_csv << null_name << ',' << i << ',' << stats[i].triangles << '\n';
            edge_csv << null_name << ',' << i << ',' << stats[i].edges << '\n';
            deg_csv << null_name << ',' << i << ',' << join(stats[i].degrees) << '\n';
            tdeg_csv << null_name << ',' << i << ',' << join_u64(stats[i].triangle_degs) << '\n';
        }

        auto profile = srp(data_census, censuses, args.epsilon);
        for (int p = 0; p < kNumPatterns; ++p)
            srp_csv << null_name << ',' << pattern_name(static_cast<Pattern>(p)) << ','
                    << profile.delta[p] << ',' << profile.srp[p] << '\n';

        ordered_json nj;
        nj["dir"] = dir;
        nj["name"] = null_name;
        nj["model"] = batch.manifest.value("model", std::string("unknown"));
        nj["num_samples"] = stats.size();
        nj["edge_counts"] = edge_counts;
        nj["triangle_counts"] = tri_counts;

        ordered_json census_means = ordered_json::object();
        for (int p = 0; p < kNumPatterns; ++p) {
            double mean = 0;
            for (const auto& cns : censuses) mean += static_cast<double>(cns.counts[p]);
            census_means[pattern_name(static_cast<Pattern>(p))] = mean / static_cast<double>(censuses.size());
        }
        nj["census_mean"] = census_means;

        ordered_json srp_j = ordered_json::object(), delta_j = ordered_json::object();
        for (int p = 0; p < kNumPatterns; ++p) {
            srp_j[pattern_name(static_cast<Pattern>(p))] = profile.srp[p];
            delta_j[pattern_name(static_cast<Pattern>(p))] = profile.delta[p];
        }
        nj["srp"] = srp_j;
        nj["delta"] = delta_j;

        auto z_or_null = [](std::optional<double> z) {
            return z ? ordered_json(*z) : ordered_json(nullptr);
        };
        nj["z_scores"] = {{"triangles", z_or_null(z_score(static_cast<double>(data_tri), tri_counts))},
                          {"edges", z_or_null(z_score(static_cast<double>(g.num_edges()), edge_counts))}};

        if (attrs) {
            ordered_json aj = ordered_json::object();
            for (std::size_t c = 0; c < attrs->columns.size(); ++c) {
                std::vector<double> vals;
                for (const auto& st : stats) vals.push_back(st.assort[c]);
                double mean = 0;
                for (double v : vals) mean += v;
                mean /= static_cast<double>(vals.size());
                double ss = 0;
                for (double v : vals) ss += (v - mean) * (v - mean);
                double sd = std::sqrt(ss / static_cast<double>(vals.size() - 1));
                auto z = z_score(data_assort[c], vals);
                aj[attrs->columns[c]] = {{"real", data_assort[c]},
                                         {"null_mean", mean},
                                         {"null_sd", sd},
                                         {"z", z_or_null(z)}};
                assort_csv << null_name << ',' << attrs->columns[c] << ',' << data_assort[c] << ','
                           << mean << ',' << sd << ',';
                if (z) assort_csv << *z;
                else assort_csv << "undefined";
                assort_csv << '\n';
            }
            nj["assortativity"] = aj;
        }
        report["nulls"].push_back(std::move(nj));
    }

    std::ofstream out(args.report_file);
    if (!out) throw std::runtime_error("cannot write " + args.report_file);
    out << report.dump(2) << '\n';
    return 0;
}

int cmd_enumerate(const std::string& seq_file, bool list) {
    auto c = load_sequence(seq_file);
    require_realizable(c);
    auto space = enumerate_core_space(c);
    std::cout << space.size() << '\n';
    if (list) {
        for (const auto& g : space) {
            std::string line;
            for (const auto& [u, v] : g.edges()) {
                if (!line.empty()) line += ' ';
                line += std::to_string(u) + "-" + std::to_string(v);
            }
            std::cout << (line.empty() ? "(empty)" : line) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corewalk: random graphs with a prescribed k-core sequence"};
    app.require_subcommand(1);

    std::string graph_file, seq_file, out_file, per_node;
    auto* cores = app.add_subcommand("cores", "Print the core-value sequence of a graph");
    cores->add_option("graph", graph_file, "edge-list file")->required();
    cores->add_option("--per-node", per_node, "write per-node cores as TSV");

    std::string r_seq, r_out;
    auto* realize_cmd = app.add_subcommand("realize", "Construct a graph with the given core sequence");
    realize_cmd->add_option("sequence", r_seq, "core-sequence file")->required();
    realize_cmd->add_option("out", r_out, "output edge-list file")->required();

    SampleArgs s_args;
    std::optional<u64> seed_flag;
    auto* sample_cmd = app.add_subcommand("sample", "Sample random graphs from a null model");
    auto* sg = sample_cmd->add_option("--graph", s_args.graph_file, "input edge-list file");
    auto* ss = sample_cmd->add_option("--seq", s_args.seq_file, "input core-sequence file");
    sg->excludes(ss);
    sample_cmd->add_option("--model", s_args.model, "kcore or config")
        ->check(CLI::IsMember({"kcore", "config"}));
    sample_cmd->add_option("--steps", s_args.steps, "chain steps per sample (default 100*m)");
    sample_cmd->add_option("--samples", s_args.samples, "number of samples (default 50)");
    sample_cmd->add_option("--sample-every", s_args.sample_every,
                           "thin one long run instead of independent runs");
    sample_cmd->add_option("--seed", seed_flag, "RNG seed (default $COREWALK_SEED or 1)");
    sample_cmd->add_option("--out-dir", s_args.out_dir, "output batch directory")->required();
    sample_cmd->add_option("--jobs", s_args.jobs, "parallel runs");

    AnalyzeArgs a_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Compare a graph against null-model batches");
    analyze_cmd->add_option("--graph", a_args.graph_file, "data edge-list file")->required();
    analyze_cmd->add_option("--null-dir", a_args.null_dirs, "sample batch directory (repeatable)")
        ->required();
    analyze_cmd->add_option("--attrs", a_args.attrs_file, "node attribute TSV");
    analyze_cmd->add_option("--report", a_args.report_file, "output JSON report")->required();
    analyze_cmd->add_option("--csv-prefix", a_args.csv_prefix,
                            "prefix for CSV emissions (default: report path without .json)");
    analyze_cmd->add_option("--epsilon", a_args.epsilon, "SRP denominator epsilon (default 4)");

    std::string e_seq;
    bool e_list = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "Count all graphs with a core sequence (n <= 7)");
    enum_cmd->add_option("--seq", e_seq, "core-sequence file")->required();
    enum_cmd->add_flag("--list", e_list, "print every graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (cores->parsed()) return cmd_cores(graph_file, per_node);
        if (realize_cmd->parsed()) return cmd_realize(r_seq, r_out);
        if (sample_cmd->parsed()) {
            if (s_args.graph_file.empty() && s_args.seq_file.empty())
                throw std::runtime_error("sample: need --graph or --seq");
            s_args.seed = seed_flag;
            return cmd_sample(s_args);
        }
        if (analyze_cmd->parsed()) return cmd_analyze(a_args);
        if (enum_cmd->parsed()) return cmd_enumerate(e_seq, e_list);
    } catch (const UnrealizableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnrealizable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
