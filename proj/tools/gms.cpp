// gms: command-line front end.
//
//   gms sample-amo --input G --steps S --samples M --seed X
//   gms diagnose   --input G
//   gms ratio      --nmax N --precision P
//   gms mec        --input D
//   gms hjy        --n N --steps S --seed X
//
// Exit codes: 0 success, 2 invalid input, 3 state cap exceeded.
// GMS_STATE_CAP overrides the state-space cap.

#include "gms/amo.hpp"
#include "gms/edge_flip.hpp"
#include "gms/errors.hpp"
#include "gms/essential.hpp"
#include "gms/graph_io.hpp"
#include "gms/hjy.hpp"
#include "gms/poset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr std::size_t kMaxRatioN = 300;

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::uint64_t seed = 1;
    std::size_t steps = 1000;
    std::size_t samples = 100;
    std::size_t nmax = 20;
    std::size_t precision = 15;
    std::string format = "json";
    std::string out;
    std::size_t n = 3;
    std::size_t state_cap = gms::kDefaultStateCap;
    std::size_t matrix_cap = gms::kDefaultMatrixCap;
};

json config_json(const RunConfig& c) {
    return json{{"subcommand", c.subcommand}, {"input", c.input},         {"seed", c.seed},
                {"steps", c.steps},           {"samples", c.samples},     {"nmax", c.nmax},
                {"precision", c.precision},   {"format", c.format},       {"n", c.n},
                {"state_cap", c.state_cap},   {"matrix_cap", c.matrix_cap}};
}

class InvalidInput : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& c) {
    if (c.input.empty()) {
        throw InvalidInput("--input is required");
    }
    if (c.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(c.input);
    if (!in) {
        throw InvalidInput("cannot read " + c.input);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string arc_list(const std::vector<gms::Arc>& arcs) {
    std::string s;
    for (const auto& a : arcs) {
        if (!s.empty()) {
            s += ';';
        }
        s += std::to_string(a.from) + ">" + std::to_string(a.to);
    }
    return s;
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return q + "\"";
}

// Flat key,value rows for records without a natural table shape.
void write_record(std::ostream& out, const RunConfig& c, const json& body) {
    if (c.format == "json") {
        json doc{{"config", config_json(c)}};
        for (const auto& [k, v] : body.items()) {
            doc[k] = v;
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "# config " << config_json(c).dump() << '\n' << "key,value\n";
    for (const auto& [k, v] : body.items()) {
        if (v.is_array()) {
            for (const auto& item : v) {
                out << csv_cell(k) << ',' << csv_cell(item) << '\n';
            }
        } else {
            out << csv_cell(k) << ',' << csv_cell(v) << '\n';
        }
    }
}

gms::UndirectedGraph chordal_input(const RunConfig& c) {
    const gms::UndirectedGraph g = gms::parse_undirected(read_input(c));
    if (const auto cycle = gms::find_chordless_cycle(g)) {
        std::string s;
        for (auto v : *cycle) {
            s += (s.empty() ? "" : " ") + std::to_string(v);
        }
        throw InvalidInput("graph is not chordal; chordless cycle: " + s);
    }
    return g;
}

int cmd_sample_amo(const RunConfig& c, std::ostream& out) {
    const auto g = std::make_shared<const gms::UndirectedGraph>(chordal_input(c));
    if (c.samples > c.state_cap) {
        throw gms::CapExceeded("sample-amo: requested samples", c.state_cap);
    }
    gms::Rng rng(c.seed);
    std::vector<gms::Amo> drawn;
    drawn.reserve(c.samples);
    for (std::size_t i = 0; i < c.samples; ++i) {
        drawn.push_back(gms::sample(g, c.steps, rng));
    }

    json summary{{"n_vertices", g->num_vertices()}, {"n_edges", g->num_edges()}, {"samples", c.samples}};
    summary["amo_count"] = gms::count_amos(*g).str();
    // Exact comparison with the uniform law when the space is small enough.
    if (gms::is_connected(*g) && gms::count_amos(*g) <= c.state_cap) {
        const auto hs = gms::build_orientation_space(g, c.state_cap);
        std::vector<std::size_t> hist(hs.size(), 0);
        for (const auto& a : drawn) {
            ++hist[hs.index_of(a)];
        }
        double tv = 0;
        for (std::size_t h : hist) {
            tv += std::abs(static_cast<double>(h) / static_cast<double>(c.samples) - 1.0 / static_cast<double>(hs.size()));
        }
        summary["tv_from_uniform"] = c.samples ? tv / 2 : 1.0;
        summary["distinct_states"] = std::count_if(hist.begin(), hist.end(), [](std::size_t h) { return h > 0; });
    } else {
        summary["tv_from_uniform"] = nullptr;
    }

    if (c.format == "json") {
        json rows = json::array();
        for (const auto& a : drawn) {
            rows.push_back({{"source", gms::unique_source(a)}, {"pdag", gms::format_pdag(a.to_pdag())}});
        }
        write_record(out, c, {{"summary", summary}, {"samples", rows}});
    } else {
        out << "# config " << config_json(c).dump() << '\n' << "# summary " << summary.dump() << '\n';
        out << "sample,source,arcs\n";
        for (std::size_t i = 0; i < drawn.size(); ++i) {
            out << i << ',' << gms::unique_source(drawn[i]) << ',' << arc_list(drawn[i].arcs()) << '\n';
        }
    }
    return 0;
}

int cmd_diagnose(const RunConfig& c, std::ostream& out) {
    const auto g = std::make_shared<const gms::UndirectedGraph>(chordal_input(c));
    if (!gms::is_connected(*g)) {
        throw InvalidInput("diagnose needs a connected graph");
    }
    const gms::OrientationSpace hs = gms::build_orientation_space(g, c.state_cap);
    if (hs.size() > c.matrix_cap) {
        throw gms::CapExceeded("diagnose: " + std::to_string(hs.size()) + " states is too many for an exact spectrum",
                               c.matrix_cap);
    }
    const auto m = gms::transition_matrix(hs, c.matrix_cap);
    const double gap = gms::spectral_gap(m);
    const auto ds = gms::decomposition_stats(*g, hs.tree());

    json body;
    body["n_states"] = hs.size();
    body["n_edges"] = g->num_edges();
    body["n_cliques"] = ds.num_cliques;
    body["float_digits"] = 17;
    body["spectral_gap"] = gap;
    body["o_g"] = gms::to_decimal(ds.o_g, c.precision);
    body["theta"] = ds.theta;
    body["tree_diameter"] = ds.diameter;
    body["t_max"] = ds.t_max;
    if (ds.num_cliques >= 2) {
        const double bound = gms::madras_randall_bound(ds);
        body["madras_randall_bound"] = bound;
        body["bound_below_gap"] = bound <= gap;
    } else {
        body["madras_randall_bound"] = nullptr;
        body["bound_below_gap"] = nullptr;
    }
    if (const auto b = gms::worst_face_bottleneck(hs)) {
        body["worst_face_bottleneck"] = {{"phi", b->phi.str()},
                                         {"phi_decimal", gms::to_decimal(b->phi, c.precision)},
                                         {"subset_size", b->subset_size},
                                         {"boundary_edges", b->boundary_edges},
                                         {"tmix_lower", b->tmix_lower}};
    } else {
        body["worst_face_bottleneck"] = nullptr;
    }
    const auto tmix = gms::exact_mixing_time(m);
    body["tmix_quarter"] = tmix ? json(*tmix) : json(nullptr);
    write_record(out, c, body);
    return 0;
}

int cmd_ratio(const RunConfig& c, std::ostream& out) {
    if (c.nmax == 0 || c.nmax > kMaxRatioN) {
        throw InvalidInput("--nmax must be in 1.." + std::to_string(kMaxRatioN));
    }
    const auto rows = gms::ratio_table(c.nmax);
    auto adjusted = [&](const gms::CountRow& r) {
        return r.adjusted ? gms::to_decimal(*r.adjusted, c.precision) : std::string();
    };
    if (c.format == "json") {
        json table = json::array();
        for (const auto& r : rows) {
            table.push_back({{"n", r.n},
                             {"a_n", r.essential.str()},
                             {"a_prime_n", r.all.str()},
                             {"ratio", gms::to_decimal(r.ratio, c.precision)},
                             {"adjusted_ratio", r.adjusted ? json(adjusted(r)) : json(nullptr)}});
        }
        write_record(out, c, {{"rows", table}});
    } else {
        out << "# config " << config_json(c).dump() << '\n' << "n,a_n,a_prime_n,ratio,adjusted_ratio\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.essential.str() << ',' << r.all.str() << ','
                << gms::to_decimal(r.ratio, c.precision) << ',' << adjusted(r) << '\n';
        }
    }
    return 0;
}

int cmd_mec(const RunConfig& c, std::ostream& out) {
    const gms::Dag d = gms::parse_dag(read_input(c));
    const gms::EssentialGraph eg = gms::essential_graph_of_dag(d);
    const gms::BigInt size = gms::class_size(eg);
    json body;
    body["essential_graph"] = gms::format_pdag(eg.pdag());
    body["class_size"] = size.str();
    if (size <= c.state_cap) {
        json members = json::array();
        for (const auto& m : gms::class_members(eg, c.state_cap)) {
            members.push_back(gms::format_dag(m));
        }
        body["members"] = members;
    } else {
        body["members"] = nullptr;
    }
    write_record(out, c, body);
    return 0;
}

std::string hex64(std::uint64_t h) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

int cmd_hjy(const RunConfig& c, std::ostream& out) {
    if (c.n == 0) {
        throw InvalidInput("--n must be at least 1");
    }
    gms::HjyRng rng(c.seed);
    gms::EssentialGraph state = gms::empty_essential_graph(c.n);
    const bool csv = c.format == "csv";
    if (csv) {
        out << "# config " << config_json(c).dump() << '\n' << "step,move,accepted,state_hash\n";
        out << "0,,," << hex64(gms::state_hash(state)) << '\n';
    } else {
        out << json{{"config", config_json(c)}}.dump() << '\n';
        out << json{{"step", 0}, {"move", nullptr}, {"accepted", nullptr}, {"state_hash", hex64(gms::state_hash(state))}}
                   .dump()
            << '\n';
    }
    for (std::size_t i = 1; i <= c.steps; ++i) {
        const auto rec = gms::step(state, rng);
        const std::string move = rec.move ? gms::format_move(*rec.move) : std::string();
        if (csv) {
            out << i << ',' << move << ',' << (rec.accepted ? "true" : "false") << ','
                << hex64(gms::state_hash(state)) << '\n';
        } else {
            out << json{{"step", i},
                        {"move", rec.move ? json(move) : json(nullptr)},
                        {"accepted", rec.accepted},
                        {"state_hash", hex64(gms::state_hash(state))}}
                       .dump()
                << '\n';
        }
    }
    json final_state{{"final_state", gms::format_pdag(state.pdag())}};
    if (c.n <= 4) {
        const auto m = gms::exact_transition_matrix(c.n, c.state_cap);
        final_state["verdict"] = {{"n_states", m.size()},
                                  {"n_states_bruteforce", gms::essential_graphs_bruteforce(c.n).size()},
                                  {"symmetric", m.is_symmetric()},
                                  {"stochastic", m.is_stochastic()},
                                  {"uniform_stationary", m.uniform_is_stationary()},
                                  {"min_holding", m.min_holding().str()}};
    }
    if (csv) {
        out << "# " << final_state.dump() << '\n';
    } else {
        out << final_state.dump() << '\n';
    }
    return 0;
}

std::size_t cap_from_env() {
    const char* raw = std::getenv("GMS_STATE_CAP");
    if (raw == nullptr || *raw == '\0') {
        return gms::kDefaultStateCap;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size() || v == 0) {
            throw std::invalid_argument(raw);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("GMS_STATE_CAP must be a positive integer, got '") + raw + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Markov equivalence classes: AMO sampling, spectra, DAG ratios, essential graphs"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "Output path (stdout when omitted)");
    };
    auto* sample_cmd = app.add_subcommand("sample-amo", "Sample orientations with the edge-flip chain");
    sample_cmd->add_option("--input", cfg.input, "Undirected chordal graph file")->required();
    sample_cmd->add_option("--steps", cfg.steps, "Chain steps per sample")->capture_default_str();
    sample_cmd->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();
    add_common(sample_cmd);

    auto* diag_cmd = app.add_subcommand("diagnose", "Exact spectrum and decomposition bounds");
    diag_cmd->add_option("--input", cfg.input, "Undirected connected chordal graph file")->required();
    diag_cmd->add_option("--precision", cfg.precision, "Decimal digits for exact values")->capture_default_str();
    add_common(diag_cmd);

    auto* ratio_cmd = app.add_subcommand("ratio", "DAG to singleton-class ratio table");
    ratio_cmd->add_option("--nmax", cfg.nmax, "Largest n (at most 300)")->capture_default_str();
    ratio_cmd->add_option("--precision", cfg.precision, "Decimal digits")->capture_default_str();
    add_common(ratio_cmd);

    auto* mec_cmd = app.add_subcommand("mec", "Essential graph and class of a DAG");
    mec_cmd->add_option("--input", cfg.input, "DAG file")->required();
    add_common(mec_cmd);

    auto* hjy_cmd = app.add_subcommand("hjy", "Run the chain on essential graphs");
    hjy_cmd->add_option("--n", cfg.n, "Number of vertices")->capture_default_str();
    hjy_cmd->add_option("--steps", cfg.steps, "Steps")->capture_default_str();
    add_common(hjy_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.state_cap = cap_from_env();
        cfg.matrix_cap = std::min(cfg.state_cap, gms::kDefaultMatrixCap);
        if (std::getenv("GMS_STATE_CAP") != nullptr) {
            cfg.matrix_cap = cfg.state_cap;
        }

        std::ostringstream buffer;
        int code = 0;
        if (cfg.subcommand == "sample-amo") {
            code = cmd_sample_amo(cfg, buffer);
        } else if (cfg.subcommand == "diagnose") {
            code = cmd_diagnose(cfg, buffer);
        } else if (cfg.subcommand == "ratio") {
            code = cmd_ratio(cfg, buffer);
        } else if (cfg.subcommand == "mec") {
            code = cmd_mec(cfg, buffer);
        } else {
            code = cmd_hjy(cfg, buffer);
        }
        if (cfg.out.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) {
                throw InvalidInput("cannot write " + cfg.out);
            }
            file << buffer.str();
        }
        return code;
    } catch (const gms::CapExceeded& e) {
        std::cerr << "gms: " << e.what() << '\n';
        if (cfg.subcommand == "diagnose") {
            std::cerr << "gms: the exact spectrum is out of reach here; sample-amo still works\n";
        }
        return kExitCap;
    } catch (const gms::ParseError& e) {
        std::cerr << "gms: " << cfg.input << ": " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InvalidInput& e) {
        std::cerr << "gms: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gms: " << e.what() << '\n';
        return kExitInvalid;
    }
}
