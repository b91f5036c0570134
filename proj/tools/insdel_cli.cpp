// Batch experiment driver: construct and verify synchronization strings,
// build codecs, run corrupt/decode trials, evaluate rate bounds, and emit
// machine-readable reports. Every run replays byte-identically from
// (config, seed); the only non-reproducible output is the timestamp header,
// which --no-timestamp suppresses.

#include <atomic>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "insdel/insdel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace insdel;

namespace {

struct GlobalOptions {
    bool quiet = false;
    bool no_timestamp = false;
    std::string out_dir;
};

std::string timestamp_now() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

fs::path resolve_out(const GlobalOptions& g, const std::string& path) {
    fs::path p(path);
    if (p.is_absolute()) return p;
    std::string base = g.out_dir;
    if (base.empty())
        if (const char* env = std::getenv("INSDEL_OUT_DIR")) base = env;
    if (base.empty()) return p;
    return fs::path(base) / p;
}

void write_text(const GlobalOptions& g, const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    fs::path p = resolve_out(g, path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + p.string());
    os << content;
}

void write_json(const GlobalOptions& g, const std::string& path, json j) {
    if (!g.no_timestamp) j["generated_at"] = timestamp_now();
    write_text(g, path, j.dump(2) + "\n");
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

InsdelCodecConfig load_codec_config(const GlobalOptions& g, const std::string& path) {
    std::ifstream is(resolve_out(g, path));
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    json j;
    is >> j;
    return codec_config_from_json(j);
}

void print_codec_ledger(const GlobalOptions& g, const InsdelCodecConfig& cfg,
                        const InsdelCodec& codec) {
    if (g.quiet) return;
    std::cout << "codec parameters:\n"
              << "  outer: RS over GF(" << cfg.field_size << "), n=" << cfg.n << ", k=" << cfg.k
              << ", rate=" << codec.outer.rate().str() << "\n"
              << "  channel contract: delta=" << cfg.delta.str() << ", gamma=" << cfg.gamma.str()
              << ", epsilon=" << cfg.epsilon.str() << "\n"
              << "  decoder: K=" << codec.params.K
              << ", epsilon'=" << codec.params.epsilon_prime.str() << ", l=" << codec.l
              << ", alpha=" << codec.alpha.str() << ", L_cap=" << codec.list_output_cap << "\n"
              << "  index alphabet: " << codec.sync.s.q()
              << ", combined alphabet: " << codec.combined_alphabet().size << "\n"
              << "  composed rate: " << format_value(composed_rate(codec)) << "\n";
}

std::string pattern_strategy_apply(const std::string& strategy, const SymbolString& sent,
                                   const ChannelBudget& budget, std::uint64_t seed,
                                   CorruptionPattern& out) {
    if (strategy == "random") {
        out = random_pattern(budget, sent.alphabet(), seed);
    } else if (strategy == "delete-least-frequent") {
        out = adversary_delete_least_frequent(sent, budget.delta);
    } else if (strategy == "insert-erasure") {
        out = adversary_insert_erasure(sent, budget.gamma);
    } else {
        throw std::invalid_argument("unknown strategy: " + strategy);
    }
    return strategy;
}

// ---- subcommand runners ----------------------------------------------------

struct SyncArgs {
    int n = 0;
    std::string epsilon;
    int alphabet = 0;
    std::uint64_t seed = 1;
    int max_attempts = 200;
    std::string out = "-";
};

int run_sync(const GlobalOptions& g, const SyncArgs& a) {
    SyncConstructionConfig cfg;
    cfg.n = a.n;
    cfg.epsilon = Rational::parse(a.epsilon);
    if (a.alphabet > 0) cfg.alphabet_size = a.alphabet;
    cfg.seed = a.seed;
    cfg.max_attempts = a.max_attempts;
    SyncString s = construct_sync(cfg);
    std::ostringstream os;
    save_sync(os, s);
    write_text(g, a.out, os.str());
    if (!g.quiet)
        std::cout << "constructed certified " << cfg.epsilon.str() << "-synchronization string, n="
                  << a.n << ", q=" << s.s.q() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string in;
    std::string epsilon; // optional override
    bool substrings = false;
};

int run_verify(const GlobalOptions& g, const VerifyArgs& a) {
    std::ifstream is(resolve_out(g, a.in));
    if (!is) throw std::runtime_error("cannot open sync file: " + a.in);
    SyncString s = load_sync(is);
    Rational eps = a.epsilon.empty() ? s.epsilon : Rational::parse(a.epsilon);
    SyncVerifyResult res = verify_sync(s.s, eps);
    if (!res.ok) {
        std::cout << "FAIL: violation at (i,j,k)=(" << res.violation->i << ","
                  << res.violation->j << "," << res.violation->k << ") for epsilon=" << eps.str()
                  << "\n";
        return 1;
    }
    if (a.substrings && !check_substrings_self_matching(s.s, eps)) {
        std::cout << "FAIL: substring self-matching check failed at epsilon=" << eps.str() << "\n";
        return 1;
    }
    if (!g.quiet)
        std::cout << "OK: certified " << eps.str() << "-synchronization string of length "
                  << s.s.size() << "\n";
    return 0;
}

struct EncodeArgs {
    std::string config;
    std::string message;   // space/comma separated field elements
    long long ordinal = -1;
    std::string out = "-";
};

int run_encode(const GlobalOptions& g, const EncodeArgs& a) {
    InsdelCodecConfig cfg = load_codec_config(g, a.config);
    InsdelCodec codec = make_insdel_codec(cfg);
    std::vector<int> msg;
    if (a.ordinal >= 0) {
        msg = codec.outer.message_from_ordinal(a.ordinal);
    } else {
        std::string cleaned = a.message;
        for (char& c : cleaned)
            if (c == ',') c = ' ';
        std::stringstream ss(cleaned);
        int v;
        while (ss >> v) msg.push_back(v);
    }
    SymbolString sent = insdel_encode(codec, msg);
    std::ostringstream os;
    save_product_stream(os, sent, codec.payload_alphabet().size, codec.index_alphabet().size);
    write_text(g, a.out, os.str());
    print_codec_ledger(g, cfg, codec);
    return 0;
}

struct CorruptArgs {
    std::string in;
    std::string strategy = "random";
    std::string delta = "0";
    std::string gamma = "0";
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string pattern_out;
    int index_q = 0; // needed to re-serialize the stream
};

int run_corrupt(const GlobalOptions& g, const CorruptArgs& a) {
    std::ifstream is(resolve_out(g, a.in));
    if (!is) throw std::runtime_error("cannot open stream file: " + a.in);
    int payload_q = 0, index_q = 0;
    std::size_t len = 0;
    {
        std::ifstream header(resolve_out(g, a.in));
        header >> payload_q >> index_q >> len;
    }
    SymbolString sent = load_product_stream(is);
    ChannelBudget budget(Rational::parse(a.delta), Rational::parse(a.gamma),
                         static_cast<int>(sent.size()));
    CorruptionPattern pattern;
    pattern_strategy_apply(a.strategy, sent, budget, a.seed, pattern);
    SymbolString received = apply_pattern(sent, pattern);
    std::ostringstream os;
    save_product_stream(os, received, payload_q, index_q);
    write_text(g, a.out, os.str());
    if (!a.pattern_out.empty()) write_json(g, a.pattern_out, pattern_to_json(pattern));
    if (!g.quiet)
        std::cout << "applied " << a.strategy << ": " << pattern.deletion_count()
                  << " deletions, " << pattern.insertion_count() << " insertions, |received|="
                  << received.size() << "\n";
    return 0;
}

struct DecodeArgs {
    std::string sync_file;
    std::string in;
    int K = 0;
    std::string epsilon, gamma; // alternative to explicit K
    std::string out = "-";
};

int run_decode(const GlobalOptions& g, const DecodeArgs& a) {
    std::ifstream sync_is(resolve_out(g, a.sync_file));
    if (!sync_is) throw std::runtime_error("cannot open sync file: " + a.sync_file);
    SyncString sync = load_sync(sync_is);
    std::ifstream is(resolve_out(g, a.in));
    if (!is) throw std::runtime_error("cannot open stream file: " + a.in);
    int payload_q = 0, index_q = 0;
    std::size_t len = 0;
    {
        std::ifstream header(resolve_out(g, a.in));
        header >> payload_q >> index_q >> len;
    }
    SymbolString received = load_product_stream(is);
    if (index_q != sync.s.q())
        throw std::invalid_argument("decode: stream index alphabet does not match sync file");
    int K = a.K;
    if (K <= 0) {
        if (a.epsilon.empty())
            throw std::invalid_argument("decode: need -K or --epsilon/--gamma");
        K = choose_params(Rational::parse(a.epsilon),
                          a.gamma.empty() ? Rational(0) : Rational::parse(a.gamma))
                .K;
    }
    IndexedString tracks =
        product_decode(received, Alphabet(payload_q), Alphabet(index_q));
    CandidateLists lists = global_list_decode(sync.s, tracks.index, tracks.payload, K);
    json j = lists_to_json(lists);
    j["K"] = K;
    write_json(g, a.out, std::move(j));
    if (!g.quiet)
        std::cout << "decoded " << received.size() << " received symbols into " << lists.n
                  << " lists (max " << lists.max_list_size() << ", total " << lists.total_refs()
                  << ")\n";
    return 0;
}

struct PipelineArgs {
    std::string config;
    std::string strategy = "random";
    long long trials = 10;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string channel_delta, channel_gamma; // optional harsher/softer channel
    std::string out = "-";
};

int run_pipeline(const GlobalOptions& g, const PipelineArgs& a) {
    InsdelCodecConfig cfg = load_codec_config(g, a.config);
    InsdelCodec codec = make_insdel_codec(cfg);
    print_codec_ledger(g, cfg, codec);

    const Rational channel_delta =
        a.channel_delta.empty() ? cfg.delta : Rational::parse(a.channel_delta);
    const Rational channel_gamma =
        a.channel_gamma.empty() ? cfg.gamma : Rational::parse(a.channel_gamma);
    ChannelBudget contract(cfg.delta, cfg.gamma, cfg.n);
    ChannelBudget channel(channel_delta, channel_gamma, cfg.n);

    struct Row {
        long long trial;
        int del, ins;
        HitStats stats;
        long long decoded;
        bool contains_truth;
        bool within_budget;
    };
    std::vector<Row> rows(static_cast<std::size_t>(a.trials));
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            const long long t = next.fetch_add(1);
            if (t >= a.trials) return;
            const std::uint64_t trial_seed = derive_seed(a.seed, static_cast<std::uint64_t>(t));
            Rng rng(trial_seed);
            const long long ordinal =
                static_cast<long long>(rng.below(static_cast<std::uint64_t>(
                    codec.outer.message_count())));
            std::vector<int> msg = codec.outer.message_from_ordinal(ordinal);
            SymbolString sent = insdel_encode(codec, msg);
            CorruptionPattern pattern;
            pattern_strategy_apply(a.strategy, sent, channel, derive_seed(trial_seed, 1), pattern);
            SymbolString received = apply_pattern(sent, pattern);
            std::vector<std::vector<int>> decoded = insdel_list_decode(codec, received);
            IndexedString sent_tracks =
                product_decode(sent, codec.payload_alphabet(), codec.index_alphabet());
            IndexedString recv_tracks =
                product_decode(received, codec.payload_alphabet(), codec.index_alphabet());
            CandidateLists lists = global_list_decode(codec.sync.s, recv_tracks.index,
                                                      recv_tracks.payload, codec.params.K);
            HitStats st = hit_statistics(lists, pattern, sent_tracks);
            bool contains = false;
            for (const auto& m : decoded)
                if (m == msg) contains = true;
            rows[static_cast<std::size_t>(t)] =
                Row{t,
                    pattern.deletion_count(),
                    pattern.insertion_count(),
                    st,
                    static_cast<long long>(decoded.size()),
                    contains,
                    pattern.deletion_count() <= contract.max_deletions() &&
                        pattern.insertion_count() <= contract.max_insertions()};
        }
    };
    const int jobs = std::max(1, a.jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    json report;
    report["config"] = codec_config_to_json(cfg);
    report["strategy"] = a.strategy;
    report["seed"] = a.seed;
    report["channel"] = {{"delta", channel_delta.str()}, {"gamma", channel_gamma.str()}};
    json jrows = json::array();
    long long contain_count = 0;
    for (const Row& r : rows) {
        contain_count += r.contains_truth;
        jrows.push_back({{"trial", r.trial},
                         {"strategy", a.strategy},
                         {"del", r.del},
                         {"ins", r.ins},
                         {"hit_count", r.stats.exact_hits},
                         {"value_hit_count", r.stats.value_hits},
                         {"max_list", r.stats.max_list},
                         {"avg_list", r.stats.avg_list},
                         {"decoded_list_size", r.decoded},
                         {"contains_truth", r.contains_truth},
                         {"within_budget", r.within_budget}});
    }
    report["rows"] = std::move(jrows);
    report["summary"] = {{"trials", a.trials}, {"contains_truth", contain_count}};
    write_json(g, a.out, std::move(report));
    if (!g.quiet)
        std::cout << "pipeline: " << contain_count << "/" << a.trials
                  << " trials contained the transmitted message\n";
    return 0;
}

struct BoundsArgs {
    std::string qs = "2,4,8,16";
    std::string deltas;
    std::string gammas;
    std::string ls;
    std::string epsilon;
    std::string out = "-";
};

int run_bounds(const GlobalOptions& g, const BoundsArgs& a) {
    std::vector<int> qs = parse_int_list(a.qs);
    std::vector<Rational> deltas =
        a.deltas.empty() ? std::vector<Rational>{} : parse_rational_list(a.deltas);
    std::vector<Rational> gammas =
        a.gammas.empty() ? std::vector<Rational>{} : parse_rational_list(a.gammas);
    std::vector<int> ls = a.ls.empty() ? std::vector<int>{} : parse_int_list(a.ls);
    std::optional<Rational> eps;
    if (!a.epsilon.empty()) eps = Rational::parse(a.epsilon);

    std::vector<RateReportRow> rows = evaluate_rate_grid(qs, deltas, gammas, ls, eps);
    std::ostringstream os;
    if (!g.no_timestamp) os << "# generated_at=" << timestamp_now() << "\n";
    os << "q,delta,gamma,l,bound_name,value,provenance\n";
    for (const RateReportRow& r : rows) {
        if (r.q) os << *r.q;
        os << ',';
        if (r.delta) os << r.delta->str();
        os << ',';
        if (r.gamma) os << r.gamma->str();
        os << ',';
        if (r.l) os << *r.l;
        os << ',' << r.bound_name << ',';
        if (r.value) os << format_value(*r.value);
        os << ',' << r.provenance << "\n";
    }
    write_text(g, a.out, os.str());
    if (!g.quiet) std::cout << "evaluated " << rows.size() << " grid rows\n";
    return 0;
}

struct McArgs {
    int q = 2;
    int n = 8;
    std::string rate = "1/10";
    std::string mode = "deletions";
    std::string amount = "1/2";
    long long trials = 1000;
    std::uint64_t seed = 1;
    std::string out = "-";
};

int run_mc(const GlobalOptions& g, const McArgs& a) {
    McConfig cfg;
    cfg.q = a.q;
    cfg.n = a.n;
    cfg.rate = Rational::parse(a.rate);
    if (a.mode == "deletions")
        cfg.mode = McConfig::Mode::deletions;
    else if (a.mode == "insertions")
        cfg.mode = McConfig::Mode::insertions;
    else
        throw std::invalid_argument("mc: mode must be deletions or insertions");
    cfg.amount = Rational::parse(a.amount);
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    McSummary s = mc_random_code_list_profile(cfg);
    json j{{"q", a.q},
           {"n", a.n},
           {"rate", cfg.rate.str()},
           {"mode", a.mode},
           {"amount", cfg.amount.str()},
           {"trials", s.trials},
           {"seed", s.seed},
           {"codewords", s.codewords},
           {"received_len", s.received_len},
           {"mean", s.mean},
           {"stddev", s.stddev},
           {"ci95", s.ci95},
           {"max_count", s.max_count}};
    write_json(g, a.out, std::move(j));
    if (!g.quiet)
        std::cout << "mc: mean confusable codewords " << format_value(s.mean) << " +- "
                  << format_value(s.ci95) << " over " << s.trials << " trials\n";
    return 0;
}

struct ConfuseArgs {
    int n = 4;
    int q = 2;
    std::string delta = "1/4";
    std::string gamma = "1/4";
    int k = 0; // 0: boundary default
    std::string out = "-";
};

int run_confuse(const GlobalOptions& g, const ConfuseArgs& a) {
    const Rational delta = Rational::parse(a.delta);
    const Rational gamma = Rational::parse(a.gamma);
    int k = a.k;
    if (k <= 0) {
        const Rational boundary = Rational(a.n) * (Rational(1) - delta - gamma);
        k = static_cast<int>(boundary.ceil()) + 1;
    }
    if (k < 1 || k > a.n) throw std::invalid_argument("confuse: k out of range");
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        count *= a.q;
        if (count > (1LL << 22)) throw std::invalid_argument("confuse: q^k too large");
    }
    std::vector<SymbolString> codebook;
    codebook.reserve(static_cast<std::size_t>(count));
    for (long long ord = 0; ord < count; ++ord) {
        std::vector<Symbol> syms(a.n, 1);
        long long v = ord;
        for (int pos = k - 1; pos >= 0; --pos) { // lexicographic: leading symbol most significant
            syms[pos] = static_cast<Symbol>(v % a.q) + 1;
            v /= a.q;
        }
        codebook.emplace_back(Alphabet(a.q), std::move(syms));
    }
    std::optional<ConfusableTriple> triple = find_confusable_pair(codebook, delta, gamma);
    json j{{"n", a.n}, {"q", a.q}, {"delta", delta.str()}, {"gamma", gamma.str()}, {"k", k}};
    if (!triple) {
        j["found"] = false;
        write_json(g, a.out, std::move(j));
        if (!g.quiet) std::cout << "no confusable pair found\n";
        return 1;
    }
    const int max_del = static_cast<int>(delta.floor_times(a.n));
    const int max_ins = static_cast<int>(gamma.floor_times(a.n));
    j["found"] = true;
    j["x"] = triple->x.symbols();
    j["y"] = triple->y.symbols();
    j["z"] = triple->z.symbols();
    j["budget"] = {{"deletions", max_del}, {"insertions", max_ins}};
    j["verified"] = reachable_within(triple->x, triple->z, max_del, max_ins) &&
                    reachable_within(triple->y, triple->z, max_del, max_ins);
    write_json(g, a.out, std::move(j));
    if (!g.quiet)
        std::cout << "confusable pair found; z reachable from both within ("
                  << max_del << " del, " << max_ins << " ins)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"insdel: list-decodable insertion/deletion codes over synchronization strings"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted after the subcommand too

    GlobalOptions g;
    app.add_flag("--quiet", g.quiet, "suppress human-readable summaries");
    app.add_flag("--no-timestamp", g.no_timestamp, "omit timestamp headers from outputs");
    app.add_option("--out-dir", g.out_dir,
                   "base directory for relative output paths (default: $INSDEL_OUT_DIR)");

    SyncArgs sync_args;
    auto* sync_cmd = app.add_subcommand("sync", "construct a certified synchronization string");
    sync_cmd->add_option("-n", sync_args.n, "length")->required();
    sync_cmd->add_option("-e,--epsilon", sync_args.epsilon, "epsilon (rational or decimal)")
        ->required();
    sync_cmd->add_option("-q,--alphabet", sync_args.alphabet, "alphabet size (default eps^-2)");
    sync_cmd->add_option("--seed", sync_args.seed, "rng seed");
    sync_cmd->add_option("--max-attempts", sync_args.max_attempts, "sampling attempts");
    sync_cmd->add_option("-o,--out", sync_args.out, "output file ('-' = stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "re-verify a synchronization string file");
    verify_cmd->add_option("-i,--in", verify_args.in, "sync file")->required();
    verify_cmd->add_option("-e,--epsilon", verify_args.epsilon, "override epsilon");
    verify_cmd->add_flag("--substrings", verify_args.substrings,
                         "also check the substring self-matching property");

    EncodeArgs encode_args;
    auto* encode_cmd = app.add_subcommand("encode", "encode a message with a composed codec");
    encode_cmd->add_option("-c,--config", encode_args.config, "codec config JSON")->required();
    encode_cmd->add_option("-m,--message", encode_args.message, "field elements, e.g. \"1 2 3\"");
    encode_cmd->add_option("--ordinal", encode_args.ordinal, "message by ordinal");
    encode_cmd->add_option("-o,--out", encode_args.out, "output stream file");

    CorruptArgs corrupt_args;
    auto* corrupt_cmd = app.add_subcommand("corrupt", "run a channel strategy over a stream");
    corrupt_cmd->add_option("-i,--in", corrupt_args.in, "input stream file")->required();
    corrupt_cmd
        ->add_option("-s,--strategy", corrupt_args.strategy,
                     "random | delete-least-frequent | insert-erasure")
        ->required();
    corrupt_cmd->add_option("--delta", corrupt_args.delta, "deletion fraction");
    corrupt_cmd->add_option("--gamma", corrupt_args.gamma, "insertion fraction");
    corrupt_cmd->add_option("--seed", corrupt_args.seed, "rng seed");
    corrupt_cmd->add_option("-o,--out", corrupt_args.out, "received stream file");
    corrupt_cmd->add_option("--pattern-out", corrupt_args.pattern_out,
                            "also save the corruption pattern JSON");

    DecodeArgs decode_args;
    auto* decode_cmd =
        app.add_subcommand("decode", "index-level list decode of a received stream");
    decode_cmd->add_option("--sync", decode_args.sync_file, "sync string file")->required();
    decode_cmd->add_option("-i,--in", decode_args.in, "received stream file")->required();
    decode_cmd->add_option("-K", decode_args.K, "number of peeling rounds");
    decode_cmd->add_option("-e,--epsilon", decode_args.epsilon, "derive K from epsilon/gamma");
    decode_cmd->add_option("-g,--gamma", decode_args.gamma, "gamma for K derivation");
    decode_cmd->add_option("-o,--out", decode_args.out, "candidate lists JSON");

    PipelineArgs pipeline_args;
    auto* pipeline_cmd =
        app.add_subcommand("pipeline", "encode -> corrupt -> decode trial batches");
    pipeline_cmd->add_option("-c,--config", pipeline_args.config, "codec config JSON")->required();
    pipeline_cmd->add_option("-s,--strategy", pipeline_args.strategy,
                             "random | delete-least-frequent | insert-erasure");
    pipeline_cmd->add_option("-t,--trials", pipeline_args.trials, "trial count");
    pipeline_cmd->add_option("--seed", pipeline_args.seed, "rng seed");
    pipeline_cmd->add_option("-j,--jobs", pipeline_args.jobs, "worker threads");
    pipeline_cmd->add_option("--channel-delta", pipeline_args.channel_delta,
                             "override channel delta (contract check uses config delta)");
    pipeline_cmd->add_option("--channel-gamma", pipeline_args.channel_gamma,
                             "override channel gamma");
    pipeline_cmd->add_option("-o,--out", pipeline_args.out, "report JSON");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate rate bounds over a grid");
    bounds_cmd->add_option("--q", bounds_args.qs, "alphabet sizes, comma separated");
    bounds_cmd->add_option("--delta", bounds_args.deltas, "deletion fractions");
    bounds_cmd->add_option("--gamma", bounds_args.gammas, "insertion fractions");
    bounds_cmd->add_option("--l", bounds_args.ls, "list sizes");
    bounds_cmd->add_option("-e,--epsilon", bounds_args.epsilon,
                           "epsilon for the alphabet lower bound");
    bounds_cmd->add_option("-o,--out", bounds_args.out, "CSV output");

    McArgs mc_args;
    auto* mc_cmd = app.add_subcommand("mc", "random-code list-size Monte Carlo profile");
    mc_cmd->add_option("--q", mc_args.q, "alphabet size");
    mc_cmd->add_option("-n", mc_args.n, "block length");
    mc_cmd->add_option("-r,--rate", mc_args.rate, "code rate");
    mc_cmd->add_option("--mode", mc_args.mode, "deletions | insertions");
    mc_cmd->add_option("--amount", mc_args.amount, "delta or gamma");
    mc_cmd->add_option("-t,--trials", mc_args.trials, "trial count");
    mc_cmd->add_option("--seed", mc_args.seed, "rng seed");
    mc_cmd->add_option("-o,--out", mc_args.out, "JSON output");

    ConfuseArgs confuse_args;
    auto* confuse_cmd =
        app.add_subcommand("confuse", "exhibit a confusable codeword pair by pigeonhole");
    confuse_cmd->add_option("-n", confuse_args.n, "block length");
    confuse_cmd->add_option("--q", confuse_args.q, "alphabet size");
    confuse_cmd->add_option("--delta", confuse_args.delta, "deletion fraction");
    confuse_cmd->add_option("--gamma", confuse_args.gamma, "insertion fraction");
    confuse_cmd->add_option("-k", confuse_args.k, "message length (default: boundary)");
    confuse_cmd->add_option("-o,--out", confuse_args.out, "JSON output");

    try {
        app.parse(argc, argv);
        if (sync_cmd->parsed()) return run_sync(g, sync_args);
        if (verify_cmd->parsed()) return run_verify(g, verify_args);
        if (encode_cmd->parsed()) return run_encode(g, encode_args);
        if (corrupt_cmd->parsed()) return run_corrupt(g, corrupt_args);
        if (decode_cmd->parsed()) return run_decode(g, decode_args);
        if (pipeline_cmd->parsed()) return run_pipeline(g, pipeline_args);
        if (bounds_cmd->parsed()) return run_bounds(g, bounds_args);
        if (mc_cmd->parsed()) return run_mc(g, mc_args);
        if (confuse_cmd->parsed()) return run_confuse(g, confuse_args);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
