#pragma once

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cotan/cotangent.hpp"
#include "cotan/graphs1d.hpp"
#include "cotan/json_io.hpp"
#include "cotan/matroids.hpp"

namespace cotan::cli {

// Exit codes shared by every subcommand: 0 when the run succeeds and any
// checked claim holds, 1 when a witness or mismatch is found, 2 on usage or
// input errors.
inline constexpr int exit_ok = 0;
inline constexpr int exit_witness = 1;
inline constexpr int exit_usage = 2;

inline int default_jobs() {
    if (const char* env = std::getenv("COTAN_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on up to `jobs` worker threads and returns
// the results in index order, so output built from them is byte-identical
// regardless of the job count.
template <class Fn>
auto ordered_parallel(int jobs, std::size_t count, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> results(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            results[i] = fn(i);
        }
    };
    int n_threads = std::min<int>(jobs, static_cast<int>(count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

inline std::string read_input_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFormatError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json set_to_json(VertexSet s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

struct T2Options {
    std::string input;
    std::string field = "q";
    bool all_witnesses = false;
    bool json_out = false;
};

inline int run_t2(const T2Options& opt, std::ostream& out, std::ostream& err) {
    SimplicialComplex delta = SimplicialComplex::void_complex(0);
    FieldChoice field = FieldChoice::rationals();
    try {
        field = FieldChoice::parse(opt.field);
        delta = complex_from_json_text(read_input_text(opt.input));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    auto witness = find_t2_witness(delta, field);
    if (opt.json_out) {
        nlohmann::json j;
        j["field"] = field.label();
        j["vanishes"] = !witness.has_value();
        if (witness) {
            if (opt.all_witnesses) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& c : graded_report(delta, field).nonzero) {
                    if (c.dims.t2 == 0) continue;
                    nlohmann::json row;
                    row["a"] = set_to_json(c.a_support);
                    row["b"] = set_to_json(c.b);
                    row["dimT1"] = c.dims.t1;
                    row["dimT2"] = c.dims.t2;
                    rows.push_back(std::move(row));
                }
                j["witnesses"] = std::move(rows);
            } else {
                nlohmann::json w;
                w["a"] = set_to_json(witness->a_support);
                w["b"] = set_to_json(witness->b);
                w["dimT2"] = witness->dims.t2;
                j["witness"] = std::move(w);
            }
        }
        out << j.dump() << "\n";
        return witness ? exit_witness : exit_ok;
    }

    out << "# field=" << field.label() << "\n";
    if (!witness) {
        out << "VANISHES\n";
        return exit_ok;
    }
    if (opt.all_witnesses) {
        for (const auto& c : graded_report(delta, field).nonzero) {
            if (c.dims.t2 == 0) continue;
            out << "A=" << c.a_support.to_string() << " b=" << c.b.to_string()
                << " dimT2=" << c.dims.t2 << "\n";
        }
    } else {
        out << "A=" << witness->a_support.to_string() << " b=" << witness->b.to_string()
            << " dimT2=" << witness->dims.t2 << "\n";
    }
    return exit_witness;
}

struct GradedOptions {
    std::string input;
    std::string field = "q";
    bool json_out = false;
};

// Rows are the classes with a nonzero second module; first-module dimensions
// are shown alongside for the listed rows.
inline int run_t2_graded(const GradedOptions& opt, std::ostream& out, std::ostream& err) {
    SimplicialComplex delta = SimplicialComplex::void_complex(0);
    FieldChoice field = FieldChoice::rationals();
    try {
        field = FieldChoice::parse(opt.field);
        delta = complex_from_json_text(read_input_text(opt.input));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    auto report = graded_report(delta, field);
    std::size_t rows = 0;
    if (opt.json_out) {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& c : report.nonzero) {
            if (c.dims.t2 == 0) continue;
            ++rows;
            nlohmann::json row;
            row["a"] = set_to_json(c.a_support);
            row["b"] = set_to_json(c.b);
            row["dimT1"] = c.dims.t1;
            row["dimT2"] = c.dims.t2;
            jrows.push_back(std::move(row));
        }
        nlohmann::json j;
        j["field"] = field.label();
        j["rows"] = std::move(jrows);
        j["classes_scanned"] = report.classes_scanned;
        out << j.dump() << "\n";
        return exit_ok;
    }

    out << "# field=" << field.label() << "\n";
    for (const auto& c : report.nonzero) {
        if (c.dims.t2 == 0) continue;
        ++rows;
        out << "A=" << c.a_support.to_string() << " b=" << c.b.to_string()
            << " dimT1=" << c.dims.t1 << " dimT2=" << c.dims.t2 << "\n";
    }
    out << "# rows=" << rows << " classes_scanned=" << report.classes_scanned << "\n";
    return exit_ok;
}

struct ClassifyOptions {
    int max_n = 8;
    std::string golden;
};

inline int run_classify_1d(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
    ClassificationResult result;
    try {
        result = classify_1d(opt.max_n);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    auto lines = classification_lines(result);

    out << "# max_n=" << opt.max_n << "\n";
    for (const auto& line : lines) out << line << "\n";
    out << lines.size() << " classes\n";

    if (!opt.golden.empty()) {
        std::string fresh;
        for (const auto& line : lines) fresh += line + "\n";
        std::ifstream in(opt.golden, std::ios::binary);
        if (!in) {
            std::ofstream o(opt.golden, std::ios::binary);
            if (!o) {
                err << "error: cannot write golden file: " << opt.golden << "\n";
                return exit_usage;
            }
            o << fresh;
            out << "golden written: " << opt.golden << "\n";
            return exit_ok;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        if (ss.str() == fresh) {
            out << "golden match: " << opt.golden << "\n";
            return exit_ok;
        }
        err << "golden mismatch: " << opt.golden << "\n";
        std::istringstream got(fresh), want(ss.str());
        std::string g, w;
        for (std::size_t ln = 1;; ++ln) {
            bool hg = static_cast<bool>(std::getline(got, g));
            bool hw = static_cast<bool>(std::getline(want, w));
            if (!hg && !hw) break;
            if (hg != hw || g != w) {
                err << "  first difference at line " << ln << ":\n";
                err << "    computed: " << (hg ? g : std::string("<missing>")) << "\n";
                err << "    golden:   " << (hw ? w : std::string("<missing>")) << "\n";
                break;
            }
        }
        return exit_witness;
    }
    return exit_ok;
}

struct UniformTableOptions {
    int max_n = 8;
    std::string field = "q";
    int jobs = 0;
};

inline int run_uniform_table(const UniformTableOptions& opt, std::ostream& out, std::ostream& err) {
    FieldChoice field = FieldChoice::rationals();
    try {
        field = FieldChoice::parse(opt.field);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (opt.max_n < 1 || opt.max_n > 9) {
        err << "error: --max-n must be between 1 and 9 (the table grows exponentially)\n";
        return exit_usage;
    }

    struct Case {
        int n, r, bsize;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= opt.max_n; ++n)
        for (int r = 1; r <= n; ++r)
            for (int bsize = 1; bsize <= n; ++bsize) cases.push_back({n, r, bsize});

    int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
    auto rows = ordered_parallel(jobs, cases.size(), [&](std::size_t i) {
        auto [n, r, bsize] = cases[i];
        const auto delta = uniform(n, r).complex();
        VertexSet b;
        for (int v = 0; v < bsize; ++v) b = b.with(v);
        long long predicted = uniform_t2_formula(n, r, bsize);
        long long computed = t_dims_negative(delta, b, field).t2;
        std::ostringstream row;
        row << "n=" << n << " r=" << r << " bsize=" << bsize << " formula=" << predicted
            << " computed=" << computed << (predicted == computed ? " PASS" : " FAIL");
        return std::pair<std::string, bool>(row.str(), predicted == computed);
    });

    out << "# field=" << field.label() << "\n";
    std::size_t failures = 0;
    for (const auto& [line, ok] : rows) {
        out << line << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        out << "PASS " << rows.size() << " cases\n";
        return exit_ok;
    }
    out << "FAIL " << failures << " of " << rows.size() << " cases\n";
    return exit_witness;
}

struct Corank2Options {
    int max_n = 7;
    std::string field = "q";
    int jobs = 0;
};

// All matroids of corank at most 2 on up to max_n elements: the free matroid,
// the corank-1 family (duals of rank-1 matroids, one per count of non-loop
// elements), and the duals of rank-2 partition matroids.
inline int run_corank2_verify(const Corank2Options& opt, std::ostream& out, std::ostream& err) {
    FieldChoice field = FieldChoice::rationals();
    try {
        field = FieldChoice::parse(opt.field);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (opt.max_n < 1 || opt.max_n > 9) {
        err << "error: --max-n must be between 1 and 9\n";
        return exit_usage;
    }

    std::vector<Matroid> matroids;
    for (int n = 1; n <= opt.max_n; ++n) {
        matroids.push_back(uniform(n, n));
        for (int k = 1; k <= n; ++k) {
            std::vector<VertexSet> bases;
            for (int s = 0; s < k; ++s) bases.push_back(VertexSet::full(n).without(s));
            matroids.push_back(Matroid::from_bases(n, bases));
        }
        if (n >= 2)
            for (const auto& m : corank2_enumerate(n)) matroids.push_back(m);
    }

    int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
    auto rows = ordered_parallel(jobs, matroids.size(), [&](std::size_t i) {
        const Matroid& m = matroids[i];
        bool ok = t2_vanishes(m.complex(), field);
        std::ostringstream row;
        row << "n=" << m.n() << " rank=" << m.rank() << " corank=" << m.corank()
            << " bases=" << m.bases().size() << (ok ? " T2=0 PASS" : " T2!=0 FAIL");
        return std::pair<std::string, bool>(row.str(), ok);
    });

    out << "# field=" << field.label() << "\n";
    std::size_t failures = 0;
    for (const auto& [line, ok] : rows) {
        out << line << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        out << "PASS " << rows.size() << " matroids\n";
        return exit_ok;
    }
    out << "FAIL " << failures << " of " << rows.size() << " matroids\n";
    return exit_witness;
}

struct ConjectureOptions {
    std::string db;
    bool enumerate = false;
    int max_n = 5;
    std::string field = "q";
    int jobs = 0;
};

inline std::string revlex_line(const Matroid& m) {
    auto order = revlex_subsets(m.n(), m.rank());
    std::string s(order.size(), '0');
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (VertexSet b : m.bases())
            if (b == order[i]) {
                s[i] = '*';
                break;
            }
    }
    return s;
}

inline int run_conjecture_check(const ConjectureOptions& opt, std::ostream& out,
                                std::ostream& err) {
    FieldChoice field = FieldChoice::rationals();
    try {
        field = FieldChoice::parse(opt.field);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (opt.enumerate == !opt.db.empty()) {
        err << "error: exactly one of --db <path> or --enumerate is required\n";
        return exit_usage;
    }

    std::vector<Matroid> matroids;
    if (opt.enumerate) {
        if (opt.max_n < 1 || opt.max_n > 6) {
            err << "error: --enumerate supports --max-n up to 6; the brute-force space "
                   "is 2^C(n,r) basis families per rank, infeasible beyond 6 elements. "
                   "Use --db for larger ground sets.\n";
            return exit_usage;
        }
        for (int n = 1; n <= opt.max_n; ++n)
            for (const auto& m : enumerate_all_matroids(n)) matroids.push_back(m);
    } else {
        std::ifstream in(opt.db, std::ios::binary);
        if (!in) {
            err << "error: cannot open database: " << opt.db << "\n";
            return exit_usage;
        }
        try {
            for_each_db_matroid(in, [&](int, const Matroid& m) { matroids.push_back(m); });
        } catch (const std::exception& e) {
            err << "error: " << opt.db << ": " << e.what() << "\n";
            return exit_usage;
        }
    }

    int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
    struct Row {
        std::string line;
        bool agree = true;
        bool counterexample = false;
        std::string repro;
    };
    auto rows = ordered_parallel(jobs, matroids.size(), [&](std::size_t i) {
        const Matroid& m = matroids[i];
        auto verdict = conjecture_check(m, field);
        Row row;
        std::ostringstream line;
        line << "[" << i << "] n=" << m.n() << " r=" << m.rank() << " bases=" << m.bases().size()
             << " t2_zero=" << (verdict.t2_zero ? 1 : 0)
             << " join_of_corank_le2=" << (verdict.join_of_corank_le2 ? 1 : 0) << " "
             << (verdict.agree() ? "AGREE" : "DISAGREE");
        row.line = line.str();
        row.agree = verdict.agree();
        row.counterexample = verdict.counterexample();
        if (!verdict.agree()) {
            std::ostringstream repro;
            repro << "  reproduction: n=" << m.n() << " r=" << m.rank() << " revlex="
                  << revlex_line(m);
            if (verdict.counterexample()) {
                repro << "\n  T2 vanishes but the matroid is not a join of corank<=2 matroids";
            } else {
                auto w = find_t2_witness(m.complex(), field);
                repro << "\n  T2 witness:";
                if (w)
                    repro << " A=" << w->a_support.to_string() << " b=" << w->b.to_string()
                          << " dimT2=" << w->dims.t2;
            }
            row.repro = repro.str();
        }
        return row;
    });

    out << "# field=" << field.label() << "\n";
    std::size_t disagreements = 0, counterexamples = 0;
    for (const auto& row : rows) {
        out << row.line << "\n";
        if (!row.agree) {
            ++disagreements;
            if (row.counterexample) {
                ++counterexamples;
                out << "COUNTEREXAMPLE CANDIDATE:\n";
            } else {
                out << "UNEXPECTED DISAGREEMENT (vanishing theorem side):\n";
            }
            out << row.repro << "\n";
        }
    }
    if (disagreements == 0) {
        out << "AGREE " << rows.size() << " matroids, no counterexample\n";
        return exit_ok;
    }
    out << "DISAGREE " << disagreements << " of " << rows.size() << " matroids ("
        << counterexamples << " counterexample candidates)\n";
    return exit_witness;
}

struct JoinCheckOptions {
    int pairs = 100;
    int max_n = 4;
    std::uint64_t seed = 20260822;
    std::string field = "q";
    int jobs = 0;
};

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_count(1, 3);
    int count = pick_count(rng);
    std::uniform_int_distribution<std::uint64_t> pick_mask(1, (1ull << n) - 1);
    std::vector<VertexSet> facets;
    facets.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) facets.push_back(VertexSet(pick_mask(rng)));
    return SimplicialComplex::from_facets(n, facets);
}

inline int run_join_check(const JoinCheckOptions& opt, std::ostream& out, std::ostream& err) {
    FieldChoice field = FieldChoice::rationals();
    try {
        field = FieldChoice::parse(opt.field);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (opt.pairs < 1 || opt.max_n < 1 || opt.max_n > 5) {
        err << "error: --pairs must be >= 1 and --max-n between 1 and 5\n";
        return exit_usage;
    }

    // Pairs are drawn up front so the sample is independent of the job count.
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<SimplicialComplex, SimplicialComplex>> sample;
    sample.reserve(static_cast<std::size_t>(opt.pairs));
    for (int i = 0; i < opt.pairs; ++i) {
        auto left = random_complex(rng, opt.max_n);
        auto right = random_complex(rng, opt.max_n);
        sample.emplace_back(std::move(left), std::move(right));
    }

    int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
    auto rows = ordered_parallel(jobs, sample.size(), [&](std::size_t i) {
        const auto& [left, right] = sample[i];
        auto check = check_join_t2(left, right, field);
        bool left_v = t2_vanishes(left, field);
        bool right_v = t2_vanishes(right, field);
        bool join_v = t2_vanishes(left.join(right), field);
        bool biconditional = join_v == (left_v && right_v);
        bool ok = check.consistent && biconditional;
        std::ostringstream row;
        row << "pair " << i << ": left_n=" << left.n() << " right_n=" << right.n()
            << " classes=" << check.classes_checked << (ok ? " OK" : " FAIL");
        if (!check.consistent) row << "\n  class mismatch: " << check.first_mismatch;
        if (!biconditional)
            row << "\n  vanishing biconditional fails: join=" << (join_v ? 0 : 1)
                << " left=" << (left_v ? 0 : 1) << " right=" << (right_v ? 0 : 1);
        return std::pair<std::string, bool>(row.str(), ok);
    });

    out << "# field=" << field.label() << " seed=" << opt.seed << " pairs=" << opt.pairs << "\n";
    std::size_t failures = 0;
    for (const auto& [line, ok] : rows) {
        out << line << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        out << "PASS " << rows.size() << " pairs\n";
        return exit_ok;
    }
    out << "FAIL " << failures << " of " << rows.size() << " pairs\n";
    return exit_witness;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multigraded cotangent cohomology of Stanley-Reisner rings"};
    app.require_subcommand(1);

    T2Options t2_opt;
    auto* t2_cmd = app.add_subcommand(
        "t2", "Decide whether the second cotangent cohomology of a complex vanishes");
    t2_cmd->add_option("input", t2_opt.input, "JSON complex file, or - for stdin")->required();
    t2_cmd->add_option("--field", t2_opt.field, "coefficient field: q or gf<p>");
    t2_cmd->add_flag("--witness", t2_opt.all_witnesses, "list every nonvanishing class");
    t2_cmd->add_flag("--json", t2_opt.json_out, "emit JSON instead of plain text");

    GradedOptions graded_opt;
    auto* graded_cmd =
        app.add_subcommand("t2-graded", "Table of all classes with a nonzero second module");
    graded_cmd->add_option("input", graded_opt.input, "JSON complex file, or - for stdin")
        ->required();
    graded_cmd->add_option("--field", graded_opt.field, "coefficient field: q or gf<p>");
    graded_cmd->add_flag("--json", graded_opt.json_out, "emit JSON instead of plain text");

    ClassifyOptions classify_opt;
    auto* classify_cmd = app.add_subcommand(
        "classify-1d", "List unobstructed one-dimensional complexes up to isomorphism");
    classify_cmd->add_option("--max-n", classify_opt.max_n, "largest ground set size (<= 8)");
    classify_cmd->add_option("--golden", classify_opt.golden,
                             "golden file: compare if present, write if absent");

    UniformTableOptions uniform_opt;
    auto* uniform_cmd = app.add_subcommand(
        "uniform-table", "Second-module dimensions of uniform matroids against the closed formula");
    uniform_cmd->add_option("--max-n", uniform_opt.max_n, "largest ground set size (<= 9)");
    uniform_cmd->add_option("--field", uniform_opt.field, "coefficient field: q or gf<p>");
    uniform_cmd->add_option("--jobs", uniform_opt.jobs, "worker threads (default: all cores)");

    Corank2Options corank_opt;
    auto* corank_cmd = app.add_subcommand(
        "corank2-verify", "Check vanishing for every matroid of corank at most 2");
    corank_cmd->add_option("--max-n", corank_opt.max_n, "largest ground set size (<= 9)");
    corank_cmd->add_option("--field", corank_opt.field, "coefficient field: q or gf<p>");
    corank_cmd->add_option("--jobs", corank_opt.jobs, "worker threads (default: all cores)");

    ConjectureOptions conj_opt;
    auto* conj_cmd = app.add_subcommand(
        "conjecture-check", "Compare vanishing with the join-of-corank<=2 characterization");
    conj_cmd->add_option("--db", conj_opt.db, "matroid database file (revlex basis encoding)");
    conj_cmd->add_flag("--enumerate", conj_opt.enumerate, "enumerate all matroids instead");
    conj_cmd->add_option("--max-n", conj_opt.max_n, "largest ground set for --enumerate (<= 6)");
    conj_cmd->add_option("--field", conj_opt.field, "coefficient field: q or gf<p>");
    conj_cmd->add_option("--jobs", conj_opt.jobs, "worker threads (default: all cores)");

    JoinCheckOptions join_opt;
    auto* join_cmd = app.add_subcommand(
        "join-check", "Random pairs: graded join formula and the vanishing biconditional");
    join_cmd->add_option("--pairs", join_opt.pairs, "number of random pairs");
    join_cmd->add_option("--max-n", join_opt.max_n, "largest ground set per factor (<= 5)");
    join_cmd->add_option("--seed", join_opt.seed, "random seed");
    join_cmd->add_option("--field", join_opt.field, "coefficient field: q or gf<p>");
    join_cmd->add_option("--jobs", join_opt.jobs, "worker threads (default: all cores)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cotan");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        if (t2_cmd->parsed()) return run_t2(t2_opt, out, err);
        if (graded_cmd->parsed()) return run_t2_graded(graded_opt, out, err);
        if (classify_cmd->parsed()) return run_classify_1d(classify_opt, out, err);
        if (uniform_cmd->parsed()) return run_uniform_table(uniform_opt, out, err);
        if (corank_cmd->parsed()) return run_corank2_verify(corank_opt, out, err);
        if (conj_cmd->parsed()) return run_conjecture_check(conj_opt, out, err);
        if (join_cmd->parsed()) return run_join_check(join_opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << "error: no subcommand selected\n";
    return exit_usage;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace cotan::cli
