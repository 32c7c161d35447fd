#include "corewalk/io.hpp"

#include "corewalk/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace corewalk::io {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& path, int line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

// Shared walk over edge-list lines; node resolution differs between the
// open-universe and fixed-universe readers.
template <class Resolve>
void scan_edge_list(const std::string& path, Resolve&& resolve,
                    std::vector<Edge>& edges_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() > 2) parse_error(path, lineno, "expected at most two labels per line");
        NodeId u = resolve(toks[0], lineno);
        if (toks.size() == 1) continue;  // isolated-node declaration
        NodeId v = resolve(toks[1], lineno);
        if (u == v) parse_error(path, lineno, "self-loop on '" + toks[0] + "'");
        edges_out.emplace_back(u, v);
    }
}

}  // namespace

EdgeListData read_edge_list(const std::string& path) {
    EdgeListData data;
    std::vector<Edge> edges;
    auto resolve = [&](const std::string& label, int) {
        auto it = data.index.find(label);
        if (it != data.index.end()) return it->second;
        NodeId id = static_cast<NodeId>(data.labels.size());
        data.labels.push_back(label);
        data.index.emplace(label, id);
        return id;
    };
    scan_edge_list(path, resolve, edges);
    data.graph = build_graph(static_cast<NodeId>(data.labels.size()), edges);
    return data;
}

Graph read_edge_list_as(const std::string& path,
                        const std::unordered_map<std::string, NodeId>& index, NodeId n) {
    std::vector<Edge> edges;
    auto resolve = [&](const std::string& label, int lineno) {
        auto it = index.find(label);
        if (it == index.end()) parse_error(path, lineno, "unknown node label '" + label + "'");
        return it->second;
    };
    scan_edge_list(path, resolve, edges);
    return build_graph(n, edges);
}

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& labels) {
    if (static_cast<NodeId>(labels.size()) != g.num_nodes())
        throw std::invalid_argument("write_edge_list: label count != node count");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& [u, v] : g.edges()) out << labels[u] << '\t' << labels[v] << '\n';
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) == 0) out << labels[v] << '\n';
}

CoreSequence read_core_sequence(const std::string& path, bool* reordered) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<int> values;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            values.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": bad core value '" + tok + "'");
        }
    }
    bool sorted = std::is_sorted(values.begin(), values.end(), std::greater<int>());
    if (reordered) *reordered = !sorted;
    return CoreSequence::from_unsorted(std::move(values));
}

AttributeTable read_attributes(const std::string& path,
                               const std::unordered_map<std::string, NodeId>& index, NodeId n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header line");
    ++lineno;
    auto header = tokenize(line);
    if (header.size() < 2) throw std::runtime_error(path + ": header needs node column plus attributes");

    AttributeTable t;
    t.columns.assign(header.begin() + 1, header.end());
    t.values.assign(t.columns.size(), std::vector<int>(n, -1));
    t.category_names.resize(t.columns.size());
    std::vector<std::unordered_map<std::string, int>> cat_index(t.columns.size());

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != header.size())
            parse_error(path, lineno, "expected " + std::to_string(header.size()) + " columns");
        auto it = index.find(toks[0]);
        if (it == index.end()) parse_error(path, lineno, "unknown node label '" + toks[0] + "'");
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            const std::string& v = toks[c + 1];
            auto [cit, fresh] = cat_index[c].emplace(v, static_cast<int>(t.category_names[c].size()));
            if (fresh) t.category_names[c].push_back(v);
            t.values[c][it->second] = cit->second;
        }
    }
    return t;
}

std::vector<std::string> default_labels(NodeId n) {
    std::vector<std::string> labels(n);
    for (NodeId i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

namespace {

ordered_json stats_json(const ChainStats& s) {
    ordered_json acc = ordered_json::object();
    for (int k = 0; k < kNumMoveKinds; ++k)
        acc[move_kind_name(static_cast<MoveKind>(k))] = s.accepted[k];
    return ordered_json{{"accepted", acc},
                        {"accepted_total", s.accepted_total()},
                        {"rejected", s.rejected},
                        {"self_loops", s.self_loops}};
}

}  // namespace

void write_sample_batch(const std::string& dir, const std::string& model,
                        const std::vector<Graph>& samples,
                        const std::vector<std::string>& labels, const CoreSequence& target,
                        const ChainConfig& cfg, u64 steps_used, const SampleReport& report) {
    fs::create_directories(dir);

    char name[32];
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::snprintf(name, sizeof(name), "sample_%03zu.tsv", i);
        write_edge_list((fs::path(dir) / name).string(), samples[i], labels);
    }

    ordered_json m;
    m["schema"] = 1;
    m["model"] = model;
    m["target"] = target.values;
    m["nodes"] = target.size();
    m["num_samples"] = samples.size();
    m["seed"] = cfg.seed;
    m["steps"] = steps_used;
    m["sample_every"] = cfg.sample_every;
    m["labels"] = labels;

    if (model != "configuration") {
        ordered_json runs = ordered_json::array();
        ChainStats total;
        for (const auto& r : report.runs) {
            ordered_json jr;
            jr["run"] = r.run;
            jr["steps"] = r.steps;
            jr["delta_hat_init"] = u128_to_string(r.delta_hat_init);
            jr["delta_hat_final"] = u128_to_string(r.delta_hat_final);
            jr["doubling_steps"] = r.doubling_steps;
            runs.push_back(std::move(jr));
            for (int k = 0; k < kNumMoveKinds; ++k) total.accepted[k] += r.stats.accepted[k];
            total.rejected += r.stats.rejected;
            total.self_loops += r.stats.self_loops;
        }
        m["delta_hat"] = runs;
        m["statistics"] = stats_json(total);
    } else {
        u64 applied = 0, loops = 0;
        for (const auto& r : report.runs) {
            applied += r.stats.accepted[0];
            loops += r.stats.self_loops;
        }
        m["statistics"] = ordered_json{{"swaps_applied", applied}, {"self_loops", loops}};
    }

    std::ofstream out(fs::path(dir) / "manifest.json");
    if (!out) throw std::runtime_error("cannot write manifest in " + dir);
    out << m.dump(2) << '\n';
}

SampleBatch read_sample_batch(const std::string& dir) {
    SampleBatch batch;
    fs::path p(dir);
    std::ifstream in(p / "manifest.json");
    if (!in) throw std::runtime_error("no manifest.json in " + dir);
    in >> batch.manifest;

    for (const auto& entry : fs::directory_iterator(p)) {
        auto name = entry.path().filename().string();
        if (name.rfind("sample_", 0) == 0 && name.size() > 4 &&
            name.substr(name.size() - 4) == ".tsv")
            batch.sample_files.push_back(entry.path().string());
    }
    std::sort(batch.sample_files.begin(), batch.sample_files.end());
    return batch;
}

}  // namespace corewalk::io
