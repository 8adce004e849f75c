/* Command-line front end: enumerate defect-two blocks, analyze one block,
 * verify a constructed basic order, or sweep a range of symmetric groups.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
 * invariant violation. */

#include "defect2/json_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

using namespace defect2;

namespace {

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

long parse_prime(long p)
{
    if (!is_odd_prime(p))
        throw usage_error("p must be an odd prime");
    return p;
}

partition parse_core_flag(const std::string& s)
{
    partition core;
    try {
        core = parse_partition(s);
    } catch (const std::exception& e) {
        throw usage_error(std::string("invalid core: ") + e.what());
    }
    return core;
}

void write_or_print(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw usage_error("cannot open output file " + path);
    out << text;
}

mutation_kind parse_mutation(const std::string& name)
{
    if (name == "exp+1" || name == "exp1")
        return mutation_kind::exponent_bump;
    if (name == "drop")
        return mutation_kind::drop_generator;
    if (name == "scale-p" || name == "scale")
        return mutation_kind::scale_p;
    throw usage_error("unknown mutation " + name + " (expected exp+1, drop or scale-p)");
}

block_descriptor resolve_block(long p, const std::string& core_flag, bool core_given, long n,
                               bool principal)
{
    parse_prime(p);
    if (principal) {
        if (n < 0)
            throw usage_error("--principal requires --n");
        partition core = p_core_weight(partition{n}, p).first;
        block_descriptor b = block_from_core(p, core);
        if (b.n != n)
            throw usage_error("the principal block of Sym_" + std::to_string(n) +
                              " at p=" + std::to_string(p) + " does not have defect two");
        return b;
    }
    if (!core_given)
        throw usage_error("a block must be selected with --core (\"\" for the empty core) "
                          "or with --n --principal");
    partition core = parse_core_flag(core_flag);
    try {
        return block_from_core(p, core);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

struct sweep_row {
    std::string text;
    json as_json;
    bool pass = false;
};

sweep_row run_one_block(const block_descriptor& b)
{
    sweep_row row;
    std::vector<std::string> failed;
    try {
        block_analysis an = analyze_block(b);
        check_report quiver_rep = validate_quiver(an.quiver, an.tables.matrix, an.tables.layers);
        for (const auto& c : quiver_rep.checks)
            if (!c.pass)
                failed.push_back("quiver:" + c.id);
        for (const auto& c : structural_checks(an).checks)
            if (!c.pass)
                failed.push_back(c.id);
        long vnf = valuation(factorial(b.n), b.p);
        for (const partition& lam : b.parts)
            if (valuation(specht_dimension(lam), b.p) != vnf - 2)
                failed.push_back("dimension-valuation:" + lam.str());
        check_report rep = verify_suite(an);
        for (const auto& c : rep.checks)
            if (!c.pass)
                failed.push_back(c.id);
        row.pass = failed.empty();
    } catch (const std::exception& e) {
        failed.push_back(std::string("exception: ") + e.what());
        row.pass = false;
    }

    std::ostringstream os;
    os << "core=[" << b.core.str() << "] n=" << b.n << " partitions=" << b.parts.size()
       << " regulars=" << b.regulars.size() << " pass=" << (row.pass ? "yes" : "NO");
    for (const auto& f : failed)
        os << " " << f;
    row.text = os.str();
    row.as_json["core"] = json_of_partition(b.core);
    row.as_json["n"] = b.n;
    row.as_json["partitions"] = b.parts.size();
    row.as_json["regulars"] = b.regulars.size();
    row.as_json["pass"] = row.pass;
    row.as_json["failed"] = failed;
    return row;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"defect-two blocks of symmetric groups at odd primes: decomposition "
                 "matrices, Ext-quivers, exponent matrices, basic orders and their "
                 "verification"};
    app.require_subcommand(1);

    long p = 0, n = -1, max_n = -1, jobs = 1, mutate_idx = -1;
    bool as_json = false, principal = false;
    std::string core_flag, out_path, dot_path, md_path, checks_flag, mutation_flag = "exp+1";

    auto* cmd_blocks = app.add_subcommand("blocks", "list defect-two blocks of Sym_n");
    cmd_blocks->add_option("--p", p, "odd prime")->required();
    cmd_blocks->add_option("--n", n, "symmetric group degree")->required();
    cmd_blocks->add_flag("--json", as_json, "emit JSON");

    auto* cmd_analyze = app.add_subcommand("analyze", "full analysis of one block");
    cmd_analyze->add_option("--p", p, "odd prime")->required();
    cmd_analyze->add_option("--core", core_flag, "p-core as comma-separated parts");
    cmd_analyze->add_option("--n", n, "degree, used with --principal");
    cmd_analyze->add_flag("--principal", principal, "select the block of the trivial label");
    cmd_analyze->add_option("--out", out_path, "write the JSON report to a file");
    cmd_analyze->add_option("--dot", dot_path, "write the Ext-quiver in DOT format");
    cmd_analyze->add_option("--md", md_path, "write human-readable tables");

    auto* cmd_verify = app.add_subcommand("verify", "run the lattice verification suite");
    cmd_verify->add_option("--p", p, "odd prime")->required();
    cmd_verify->add_option("--core", core_flag, "p-core as comma-separated parts");
    cmd_verify->add_option("--n", n, "degree, used with --principal");
    cmd_verify->add_flag("--principal", principal, "select the block of the trivial label");
    cmd_verify->add_option("--checks", checks_flag, "comma-separated check ids");
    cmd_verify->add_option("--mutate-generator", mutate_idx,
                           "test hook: corrupt the generator with this index");
    cmd_verify->add_option("--mutation", mutation_flag, "exp+1, drop or scale-p");

    auto* cmd_sweep = app.add_subcommand("sweep", "analyze and verify every block in range");
    cmd_sweep->add_option("--p", p, "odd prime")->required();
    cmd_sweep->add_option("--max-n", max_n, "largest degree to sweep")->required();
    cmd_sweep->add_option("--jobs", jobs, "number of worker threads");
    cmd_sweep->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_blocks) {
            parse_prime(p);
            auto blocks = enumerate_defect_two_blocks(p, n);
            if (as_json) {
                json j = json::array();
                for (const auto& b : blocks)
                    j.push_back(json_of_block(b));
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& b : blocks)
                    std::cout << "core [" << b.core.str() << "] n=" << b.n
                              << " partitions=" << b.parts.size()
                              << " regulars=" << b.regulars.size() << "\n";
            }
            return 0;
        }

        if (*cmd_analyze) {
            block_descriptor b =
                resolve_block(p, core_flag, cmd_analyze->count("--core") > 0, n, principal);
            block_analysis an = analyze_block(b);
            write_or_print(out_path, json_of_analysis(an).dump(2));
            if (!dot_path.empty())
                write_or_print(dot_path, emit_dot(an.quiver));
            if (!md_path.empty())
                write_or_print(md_path, render_markdown(an));
            return 0;
        }

        if (*cmd_verify) {
            block_descriptor b =
                resolve_block(p, core_flag, cmd_verify->count("--core") > 0, n, principal);
            block_analysis an = analyze_block(b);
            std::set<std::string> filter;
            if (!checks_flag.empty()) {
                std::istringstream is(checks_flag);
                std::string tok;
                while (std::getline(is, tok, ','))
                    if (!tok.empty())
                        filter.insert(tok);
            }
            mutation_kind kind = mutation_kind::none;
            std::size_t idx = 0;
            if (mutate_idx >= 0) {
                kind = parse_mutation(mutation_flag);
                idx = static_cast<std::size_t>(mutate_idx);
            }
            check_report rep = verify_suite(an, kind, idx, filter);
            std::cout << json_of_report(b, rep).dump(2) << "\n";
            return rep.all_pass() ? 0 : 1;
        }

        if (*cmd_sweep) {
            parse_prime(p);
            std::vector<block_descriptor> blocks;
            for (long nn = 2 * p; nn <= max_n; ++nn)
                for (auto& b : enumerate_defect_two_blocks(p, nn))
                    blocks.push_back(std::move(b));
            std::vector<sweep_row> rows(blocks.size());
            std::atomic<std::size_t> next{0};
            long workers = std::max(1L, std::min<long>(jobs, static_cast<long>(blocks.size())));
            std::vector<std::thread> pool;
            for (long w = 0; w < workers; ++w)
                pool.emplace_back([&]() {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= blocks.size())
                            return;
                        rows[i] = run_one_block(blocks[i]);
                    }
                });
            for (auto& t : pool)
                t.join();
            bool all_pass = true;
            if (as_json) {
                json j = json::array();
                for (const auto& r : rows) {
                    j.push_back(r.as_json);
                    all_pass = all_pass && r.pass;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : rows) {
                    std::cout << r.text << "\n";
                    all_pass = all_pass && r.pass;
                }
            }
            return all_pass ? 0 : 1;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
