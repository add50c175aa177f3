// Command-line front end: counting, reporting, querying and distinct-factor
// analysis of antipower fragments in words.

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "antipower/counting.hpp"
#include "antipower/distinct.hpp"
#include "antipower/oracle.hpp"
#include "antipower/queries.hpp"
#include "antipower/word.hpp"

namespace {

using namespace antipower;

struct IoOptions {
    std::string input;    // empty = stdin
    std::string alphabet = "bytes";
    std::string format = "tsv";
};

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    return std::move(buf).str();
}

Word load_word(const IoOptions& io) {
    std::string raw = slurp(io.input);
    Word w;
    if (io.alphabet == "bytes") {
        if (!raw.empty() && raw.back() == '\n') raw.pop_back();
        w.reserve(raw.size());
        for (unsigned char c : raw) w.push_back(static_cast<Symbol>(c));
    } else if (io.alphabet == "decimal") {
        std::istringstream in(raw);
        long long v;
        while (in >> v) {
            if (v < 0 || v > INT32_MAX) throw std::runtime_error("symbol out of range");
            w.push_back(static_cast<Symbol>(v));
        }
        if (!in.eof()) throw std::runtime_error("malformed decimal input");
    } else {
        throw std::runtime_error("unknown alphabet mode: " + io.alphabet);
    }
    if (w.empty()) throw std::runtime_error("empty input word");
    return w;
}

int threads_from_env() {
    const char* env = std::getenv("ANTIPOWER_THREADS");
    if (!env || !*env) return 1;
    int v = std::atoi(env);
    return v < 0 ? 1 : v;
}

void print_count(const CountResult& res, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        for (auto [d, cnt] : res.per_d)
            out << "{\"d\":" << d << ",\"count\":" << cnt << "}\n";
        out << "{\"total\":" << res.total << "}\n";
    } else {
        for (auto [d, cnt] : res.per_d) out << d << '\t' << cnt << '\n';
        out << "total\t" << res.total << '\n';
    }
    std::cout << out.str();
}

void print_fragments(const std::vector<Fragment>& frags, const std::string& format) {
    std::ostringstream out;
    for (const Fragment& f : frags) {
        if (format == "json")
            out << "{\"start\":" << f.start << ",\"length\":" << f.length << "}\n";
        else
            out << f.start << '\t' << f.length << '\n';
    }
    std::cout << out.str();
}

CountResult oracle_count(const Word& w, int k) {
    CountResult res;
    const Index n = static_cast<Index>(w.size());
    if (n < k) return res;
    std::vector<Count> per_d(static_cast<std::size_t>(n / k) + 1, 0);
    for (const Fragment& f : oracle::brute_antipowers(w, k, n))
        ++per_d[f.length / k];
    for (Index d = 1; d <= n / k; ++d) {
        res.per_d.emplace_back(d, per_d[d]);
        res.total += per_d[d];
    }
    return res;
}

int run_count(const IoOptions& io, int k, const std::string& algo) {
    Word w = load_word(io);
    CountResult res;
    if (algo == "fast")
        res = count_antipowers(w, k, threads_from_env());
    else if (algo == "simple")
        res = count_antipowers_simple(w, k);
    else if (algo == "oracle")
        res = oracle_count(w, k);
    else
        throw std::runtime_error("unknown algorithm: " + algo);
    print_count(res, io.format);
    return 0;
}

int run_report(const IoOptions& io, int k, Index d, const std::string& algo) {
    Word w = load_word(io);
    std::vector<Fragment> frags;
    if (algo == "fast") {
        frags = report_antipowers(w, k, d, threads_from_env());
    } else if (algo == "oracle") {
        frags = oracle::brute_antipowers(w, k, static_cast<Index>(w.size()));
        if (d > 0)
            std::erase_if(frags, [&](const Fragment& f) { return f.length != static_cast<Count>(k) * d; });
    } else {
        throw std::runtime_error("unknown algorithm: " + algo);
    }
    print_fragments(frags, io.format);
    return 0;
}

int run_query(const IoOptions& io, Index r, const std::string& queries_path) {
    Word w = load_word(io);
    QueryStructure qs(w, r);
    std::istringstream in(slurp(queries_path));
    std::string line;
    std::ostringstream out;
    bool failed = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long i, j, k;
        if (!(ls >> i >> j >> k)) {
            std::cerr << "query line " << lineno << ": malformed triple\n";
            failed = true;
            continue;
        }
        try {
            out << (qs.query(static_cast<Index>(i), static_cast<Index>(j),
                             static_cast<int>(k))
                        ? "1\n"
                        : "0\n");
        } catch (const std::exception& e) {
            std::cerr << "query line " << lineno << ": " << e.what() << '\n';
            failed = true;
        }
    }
    std::cout << out.str();
    return failed ? 1 : 0;
}

int run_distinct(const IoOptions& io, int k, const std::string& algo) {
    Word w = load_word(io);
    Count res;
    if (algo == "fast")
        res = count_distinct_antipowers(w, k);
    else if (algo == "oracle")
        res = oracle::brute_distinct(w, k, static_cast<Index>(w.size()));
    else
        throw std::runtime_error("unknown algorithm: " + algo);
    if (io.format == "json")
        std::cout << "{\"distinct\":" << res << "}\n";
    else
        std::cout << res << '\n';
    return 0;
}

int run_oracle(const IoOptions& io, const std::string& op, int k) {
    Word w = load_word(io);
    const Index n = static_cast<Index>(w.size());
    if (op == "count") {
        print_count(oracle_count(w, k), io.format);
    } else if (op == "report") {
        print_fragments(oracle::brute_antipowers(w, k, n), io.format);
    } else if (op == "distinct") {
        std::cout << oracle::brute_distinct(w, k, n) << '\n';
    } else if (op == "weakpow") {
        std::ostringstream out;
        for (const auto& [key, positions] : oracle::brute_weakpow_classified(w, k, n)) {
            auto [i, j, d] = key;
            out << i << '\t' << j << '\t' << d << '\t';
            for (std::size_t t = 0; t < positions.size(); ++t)
                out << (t ? "," : "") << positions[t];
            out << '\n';
        }
        std::cout << out.str();
    } else {
        throw std::runtime_error("unknown oracle op: " + op);
    }
    return 0;
}

int run_bench(int k, const std::string& sizes, const std::string& algos,
              std::uint64_t seed, int sigma) {
    std::cout << "n,k,algo,seconds\n";
    std::istringstream ns(sizes);
    std::string tok;
    while (std::getline(ns, tok, ',')) {
        Index n = static_cast<Index>(std::stoll(tok));
        std::mt19937_64 rng(seed);
        Word w(n);
        std::uniform_int_distribution<Symbol> dist('a', 'a' + sigma - 1);
        for (Symbol& c : w) c = dist(rng);
        std::istringstream as(algos);
        std::string algo;
        while (std::getline(as, algo, ',')) {
            auto t0 = std::chrono::steady_clock::now();
            CountResult res = algo == "simple" ? count_antipowers_simple(w, k)
                                               : count_antipowers(w, k, threads_from_env());
            auto t1 = std::chrono::steady_clock::now();
            double secs = std::chrono::duration<double>(t1 - t0).count();
            std::cout << n << ',' << k << ',' << algo << ',' << secs << '\n';
            (void)res;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"antipower fragment counting, reporting, queries and distinct factors"};
    app.require_subcommand(1);

    IoOptions io;
    int k = 2;
    Index d = 0, r = 1;
    std::string algo = "fast", op = "count", queries_path, sizes = "100000",
                algos = "fast";
    std::uint64_t seed = 1;
    int sigma = 4;

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--input,-i", io.input, "input file (default: stdin)");
        cmd->add_option("--alphabet", io.alphabet, "bytes|decimal")
            ->check(CLI::IsMember({"bytes", "decimal"}));
        if (with_format)
            cmd->add_option("--format", io.format, "tsv|json")
                ->check(CLI::IsMember({"tsv", "json"}));
    };

    CLI::App* count = app.add_subcommand("count", "count antipower fragments per base");
    count->add_option("--k", k, "block count")->required()->check(CLI::Range(2, 1 << 30));
    count->add_option("--algo", algo, "fast|simple|oracle")
        ->check(CLI::IsMember({"fast", "simple", "oracle"}));
    add_io(count);

    CLI::App* report = app.add_subcommand("report", "list antipower fragments");
    report->add_option("--k", k, "block count")->required()->check(CLI::Range(2, 1 << 30));
    report->add_option("--d", d, "restrict to one base");
    report->add_option("--algo", algo, "fast|oracle")
        ->check(CLI::IsMember({"fast", "oracle"}));
    add_io(report);

    CLI::App* query = app.add_subcommand("query", "answer antipower queries (i j k per line)");
    query->add_option("--r", r, "trade-off parameter")->required();
    query->add_option("--queries", queries_path, "triple file (default: stdin)");
    add_io(query, false);

    CLI::App* distinct = app.add_subcommand("distinct", "count distinct antipower factors");
    distinct->add_option("--k", k, "block count")->required()->check(CLI::Range(2, 1 << 30));
    distinct->add_option("--algo", algo, "fast|oracle")
        ->check(CLI::IsMember({"fast", "oracle"}));
    add_io(distinct);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force fixture minting");
    oracle_cmd->add_option("--op", op, "count|report|distinct|weakpow")
        ->check(CLI::IsMember({"count", "report", "distinct", "weakpow"}));
    oracle_cmd->add_option("--k", k, "block count")->required()->check(CLI::Range(2, 1 << 30));
    add_io(oracle_cmd);

    CLI::App* bench = app.add_subcommand("bench", "time the counters on random words");
    bench->add_option("--k", k, "block count")->required()->check(CLI::Range(2, 1 << 30));
    bench->add_option("--n", sizes, "comma-separated word lengths");
    bench->add_option("--algo", algos, "comma-separated algorithms (fast,simple)");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--sigma", sigma, "alphabet size")->check(CLI::Range(1, 255));

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return run_count(io, k, algo);
        if (report->parsed()) return run_report(io, k, d, algo);
        if (query->parsed()) return run_query(io, r, queries_path);
        if (distinct->parsed()) return run_distinct(io, k, algo);
        if (oracle_cmd->parsed()) return run_oracle(io, op, k);
        if (bench->parsed()) return run_bench(k, sizes, algos, seed, sigma);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
