// ech: exact ECH capacities, embedding obstructions, partitions, and the
// combinatorial T^3 chain complex, from the command line.
#include <ech/capacities.hpp>
#include <ech/cz.hpp>
#include <ech/embeddings.hpp>
#include <ech/partitions.hpp>
#include <ech/serialization.hpp>
#include <ech/t3.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ech::Json;
using ech::Rational;
using ech::Theta;

struct Output {
    std::string format = "json";
    std::string out_path;
    int threads = 1;

    // One row of CSV and one JSON value per result; the config echo leads
    // both formats. Thread count is execution detail, not configuration, so
    // it is not echoed and outputs are byte-identical across thread counts.
    void emit(const Json& config, const Json& results,
              const std::vector<std::string>& csv_header,
              const std::vector<std::vector<std::string>>& csv_rows) const {
        std::ostringstream body;
        if (format == "csv") {
            body << "# config: " << config.dump() << "\n";
            for (std::size_t i = 0; i < csv_header.size(); ++i)
                body << (i ? "," : "") << csv_header[i];
            body << "\n";
            for (const auto& row : csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    body << (i ? "," : "") << row[i];
                body << "\n";
            }
        } else {
            Json doc{{"config", config}, {"results", results}};
            body << doc.dump(2) << "\n";
        }
        if (out_path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot open output file " + out_path);
            out << body.str();
        }
    }
};

std::vector<Rational> parse_grid(const Rational& from, const Rational& to,
                                 const Rational& step) {
    if (!step.is_positive()) throw std::invalid_argument("step must be positive");
    std::vector<Rational> grid;
    for (Rational a = from; a <= to; a += step) grid.push_back(a);
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ECH capacities of four-dimensional toric domains"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", out.threads, "worker threads for the optimizers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");

    // --- cap -----------------------------------------------------------
    auto* cap = app.add_subcommand("cap", "capacity sequences");
    cap->require_subcommand(1);
    std::string cap_a = "1", cap_b = "1", cap_omega, cap_emit;
    std::vector<std::string> cap_parts;
    std::int64_t cap_count = 10;

    auto* cap_ell = cap->add_subcommand("ellipsoid", "c_k(E(a,b))");
    cap_ell->add_option("--a", cap_a, "first axis")->required();
    cap_ell->add_option("--b", cap_b, "second axis")->required();
    cap_ell->add_option("--count", cap_count, "number of capacities")->required();

    auto* cap_poly = cap->add_subcommand("polydisk", "c_k(P(a,b))");
    cap_poly->add_option("--a", cap_a, "first factor area")->required();
    cap_poly->add_option("--b", cap_b, "second factor area")->required();
    cap_poly->add_option("--count", cap_count, "number of capacities")->required();

    auto* cap_tor = cap->add_subcommand("toric", "c_k(X_Omega) for a convex region");
    cap_tor->add_option("--omega", cap_omega, "region JSON file")->required();
    cap_tor->add_option("--count", cap_count, "number of capacities")->required();
    cap_tor->add_option("--emit", cap_emit, "also emit minimizing witnesses")
        ->check(CLI::IsMember({"witness"}));

    auto* cap_uni = cap->add_subcommand("union", "c_k of a disjoint union");
    cap_uni->add_option("--parts", cap_parts, "domain JSON files")->required();
    cap_uni->add_option("--count", cap_count, "number of capacities")->required();

    // --- embed ----------------------------------------------------------
    auto* embed = app.add_subcommand("embed", "embedding obstruction test");
    std::string embed_src, embed_tgt;
    std::int64_t embed_kmax = 100;
    embed->add_option("--source", embed_src, "source domain, e.g. E(1,2) or @file")
        ->required();
    embed->add_option("--target", embed_tgt, "target domain")->required();
    embed->add_option("--kmax", embed_kmax, "largest index compared");

    // --- staircase -------------------------------------------------------
    auto* stair = app.add_subcommand("staircase", "lower bounds on f(a)");
    std::string stair_from = "1", stair_to = "1", stair_step = "1";
    std::int64_t stair_kmax = 1000;
    stair->add_option("--from", stair_from, "grid start")->required();
    stair->add_option("--to", stair_to, "grid end")->required();
    stair->add_option("--step", stair_step, "grid step");
    stair->add_option("--kmax", stair_kmax, "truncation index");

    // --- partitions ------------------------------------------------------
    auto* parts_cmd = app.add_subcommand("partitions", "positive/negative partitions");
    std::string theta_text = "0+";
    std::int64_t part_m = 1;
    parts_cmd->add_option("--theta", theta_text, "angle, e.g. 3/5+")->required();
    parts_cmd->add_option("--m", part_m, "total multiplicity")->required();

    // --- workhorse -------------------------------------------------------
    auto* work = app.add_subcommand("workhorse", "lattice inequality check");
    std::string work_parts;
    bool work_all = false;
    work->add_option("--theta", theta_text, "angle, e.g. 3/5+")->required();
    work->add_option("--m", part_m, "total multiplicity")->required();
    work->add_flag("--all", work_all, "scan all partitions of m");
    work->add_option("--parts", work_parts, "single partition, e.g. 5,2,1");

    // --- grading ---------------------------------------------------------
    auto* grading_cmd = app.add_subcommand("grading", "generator gradings");
    auto* grading_ell = grading_cmd->add_subcommand("ellipsoid", "ellipsoid generator grading");
    std::string ratio_text = "2-";
    std::int64_t gr_m1 = 0, gr_m2 = 0;
    grading_ell->add_option("--ratio", ratio_text, "axis ratio b/a with side, e.g. 2-")
        ->required();
    grading_ell->add_option("--m1", gr_m1, "multiplicity of the first orbit")->required();
    grading_ell->add_option("--m2", gr_m2, "multiplicity of the second orbit")->required();

    // --- t3 ---------------------------------------------------------------
    auto* t3cmd = app.add_subcommand("t3", "combinatorial T^3 chain complex");
    t3cmd->require_subcommand(1);
    std::int64_t t3_count = 4, t3_degree = 0;
    std::string t3_cutoff = "6", t3_cutoffs = "4,6,8", t3_gen_file;
    auto* t3_spec = t3cmd->add_subcommand("spectrum", "c_k(T^3)");
    t3_spec->add_option("--count", t3_count, "number of spectrum values")->required();
    auto* t3_d2 = t3cmd->add_subcommand("d2check", "verify delta^2 = 0 up to a cutoff");
    t3_d2->add_option("--cutoff", t3_cutoff, "Euclidean length cutoff")->required();
    auto* t3_hom = t3cmd->add_subcommand("homology", "truncated homology rank");
    t3_hom->add_option("--degree", t3_degree, "homological degree")->required();
    t3_hom->add_option("--cutoffs", t3_cutoffs, "increasing cutoffs, e.g. 4,6,8");
    auto* t3_diff = t3cmd->add_subcommand("diff", "differential of one generator");
    t3_diff->add_option("--gen", t3_gen_file, "generator JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (cap_ell->parsed() || cap_poly->parsed()) {
            bool is_ell = cap_ell->parsed();
            Rational a = Rational::parse(cap_a), b = Rational::parse(cap_b);
            auto domain = is_ell ? ech::ToricDomain::ellipsoid(a, b)
                                 : ech::ToricDomain::polydisk(a, b);
            auto seq = ech::capacity_sequence(domain, cap_count, out.threads);
            Json results = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (std::int64_t k = 0; k < cap_count; ++k) {
                results.push_back(Json{{"k", k}, {"c", seq.values[k].str()}});
                rows.push_back({std::to_string(k), ech::decimal12(seq.values[k]),
                                seq.values[k].str()});
            }
            Json config{{"command", is_ell ? "cap ellipsoid" : "cap polydisk"},
                        {"a", a.str()},
                        {"b", b.str()},
                        {"count", cap_count}};
            out.emit(config, results, {"k", "c", "c_exact"}, rows);
        } else if (cap_tor->parsed()) {
            std::ifstream in(cap_omega);
            if (!in) throw std::invalid_argument("cannot open " + cap_omega);
            auto omega = ech::rational_polygon_from_json(Json::parse(in));
            bool witness = cap_emit == "witness";
            Json results = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (std::int64_t k = 0; k < cap_count; ++k) {
                auto c = ech::cap_toric(omega, k, std::nullopt, out.threads);
                Json row{{"k", k}, {"c", c.value.str()}};
                if (witness) row["witness"] = ech::to_json(c.witness);
                results.push_back(std::move(row));
                rows.push_back({std::to_string(k), ech::decimal12(c.value),
                                c.value.str()});
            }
            Json config{{"command", "cap toric"},
                        {"omega", cap_omega},
                        {"count", cap_count},
                        {"emit", cap_emit}};
            out.emit(config, results, {"k", "c", "c_exact"}, rows);
        } else if (cap_uni->parsed()) {
            std::vector<ech::ToricDomain> domains;
            for (const auto& path : cap_parts)
                domains.push_back(ech::parse_domain_spec("@" + path));
            auto domain = ech::ToricDomain::disjoint_union(std::move(domains));
            auto seq = ech::capacity_sequence(domain, cap_count, out.threads);
            Json results = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (std::int64_t k = 0; k < cap_count; ++k) {
                results.push_back(Json{{"k", k}, {"c", seq.values[k].str()}});
                rows.push_back({std::to_string(k), ech::decimal12(seq.values[k]),
                                seq.values[k].str()});
            }
            Json config{{"command", "cap union"},
                        {"parts", cap_parts},
                        {"count", cap_count}};
            out.emit(config, results, {"k", "c", "c_exact"}, rows);
        } else if (embed->parsed()) {
            auto src = ech::parse_domain_spec(embed_src);
            auto tgt = ech::parse_domain_spec(embed_tgt);
            auto report = ech::check_embedding(src, tgt, embed_kmax, out.threads);
            Json result{{"source", embed_src},
                        {"target", embed_tgt},
                        {"k_max", embed_kmax},
                        {"sharpness", report.sharpness}};
            std::vector<std::string> row{embed_src, embed_tgt};
            if (report.obstructed) {
                result["verdict"] = "obstructed";
                result["k"] = report.k;
                result["c_source"] = report.c_source.str();
                result["c_target"] = report.c_target.str();
                row.push_back("obstructed at k=" + std::to_string(report.k));
            } else {
                result["verdict"] = "no_obstruction_up_to_k_max";
                row.push_back("no obstruction");
            }
            Json config{{"command", "embed"},
                        {"source", embed_src},
                        {"target", embed_tgt},
                        {"kmax", embed_kmax}};
            out.emit(config, Json::array({result}), {"source", "target", "verdict"},
                     {row});
        } else if (stair->parsed()) {
            auto grid = parse_grid(Rational::parse(stair_from),
                                   Rational::parse(stair_to),
                                   Rational::parse(stair_step));
            auto samples = ech::staircase_scan(grid, stair_kmax, out.threads);
            Json results = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& s : samples) {
                results.push_back(Json{{"a", s.a.str()},
                                       {"value", s.value.str()},
                                       {"argmax_k", s.argmax_k},
                                       {"note", "lower bound at truncation K"}});
                rows.push_back({ech::decimal12(s.a), s.a.str(),
                                ech::decimal12(s.value), s.value.str(),
                                std::to_string(s.argmax_k)});
            }
            Json config{{"command", "staircase"},
                        {"from", stair_from},
                        {"to", stair_to},
                        {"step", stair_step},
                        {"kmax", stair_kmax}};
            out.emit(config, results, {"a", "a_exact", "value", "value_exact", "argmax_k"},
                     rows);
        } else if (parts_cmd->parsed()) {
            Theta theta = Theta::parse(theta_text);
            auto pos = ech::positive_partition(theta, part_m);
            auto neg = ech::negative_partition(theta, part_m);
            Json result{{"theta", theta.str()},
                        {"m", part_m},
                        {"positive", pos.parts()},
                        {"negative", neg.parts()}};
            Json config{{"command", "partitions"}, {"theta", theta_text}, {"m", part_m}};
            out.emit(config, Json::array({result}),
                     {"theta", "m", "positive", "negative"},
                     {{theta.str(), std::to_string(part_m), pos.str(), neg.str()}});
        } else if (work->parsed()) {
            Theta theta = Theta::parse(theta_text);
            std::vector<ech::Partition> targets;
            if (work_all) {
                targets = ech::all_partitions(part_m);
            } else if (!work_parts.empty()) {
                std::vector<std::int64_t> ps;
                std::stringstream ss(work_parts);
                for (std::string tok; std::getline(ss, tok, ',');)
                    ps.push_back(std::stoll(tok));
                targets.emplace_back(std::move(ps));
            } else {
                throw std::invalid_argument("workhorse: pass --all or --parts");
            }
            Json results = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& p : targets) {
                auto r = ech::workhorse_check(theta, p);
                results.push_back(Json{{"parts", p.parts()},
                                       {"lhs", r.lhs.str()},
                                       {"rhs", r.rhs.str()},
                                       {"holds", r.holds},
                                       {"equality", r.equality}});
                rows.push_back({p.str(), r.lhs.str(), r.rhs.str(),
                                r.holds ? "true" : "false",
                                r.equality ? "true" : "false"});
            }
            Json config{{"command", "workhorse"},
                        {"theta", theta_text},
                        {"m", part_m},
                        {"all", work_all},
                        {"parts", work_parts}};
            out.emit(config, results, {"parts", "lhs", "rhs", "holds", "equality"}, rows);
        } else if (grading_ell->parsed()) {
            Theta ratio = Theta::parse(ratio_text);
            ech::Int value = ech::ellipsoid_grading(ratio, gr_m1, gr_m2);
            Json result{{"ratio", ratio.str()},
                        {"m1", gr_m1},
                        {"m2", gr_m2},
                        {"grading", value.str()}};
            Json config{{"command", "grading ellipsoid"},
                        {"ratio", ratio_text},
                        {"m1", gr_m1},
                        {"m2", gr_m2}};
            out.emit(config, Json::array({result}), {"ratio", "m1", "m2", "grading"},
                     {{ratio.str(), std::to_string(gr_m1), std::to_string(gr_m2),
                       value.str()}});
        } else if (t3_spec->parsed()) {
            Json results = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (std::int64_t k = 0; k < t3_count; ++k) {
                auto r = ech::t3::t3_spectrum(k, out.threads);
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.12g", r.value.to_double());
                results.push_back(Json{{"k", k},
                                       {"length", buf},
                                       {"length_exact", r.value.str()},
                                       {"witness", ech::to_json(r.witness)}});
                rows.push_back({std::to_string(k), buf, r.value.str()});
            }
            Json config{{"command", "t3 spectrum"}, {"count", t3_count}};
            out.emit(config, results, {"k", "length", "length_exact"}, rows);
        } else if (t3_d2->parsed()) {
            Rational cutoff = Rational::parse(t3_cutoff);
            bool ok = ech::t3::delta_squared_check(cutoff);
            Json config{{"command", "t3 d2check"}, {"cutoff", t3_cutoff}};
            out.emit(config,
                     Json::array({Json{{"cutoff", cutoff.str()}, {"ok", ok}}}),
                     {"cutoff", "ok"}, {{cutoff.str(), ok ? "true" : "false"}});
        } else if (t3_hom->parsed()) {
            std::vector<Rational> cutoffs;
            std::stringstream ss(t3_cutoffs);
            for (std::string tok; std::getline(ss, tok, ',');)
                cutoffs.push_back(Rational::parse(tok));
            auto r = ech::t3::homology_rank(t3_degree, cutoffs);
            Json ranks = Json::array();
            for (auto v : r.by_cutoff) ranks.push_back(v);
            Json result{{"degree", t3_degree},
                        {"ranks_by_cutoff", ranks},
                        {"rank", r.rank},
                        {"stabilized", r.stabilized}};
            Json config{{"command", "t3 homology"},
                        {"degree", t3_degree},
                        {"cutoffs", t3_cutoffs}};
            out.emit(config, Json::array({result}), {"degree", "rank", "stabilized"},
                     {{std::to_string(t3_degree), std::to_string(r.rank),
                       r.stabilized ? "true" : "false"}});
        } else if (t3_diff->parsed()) {
            std::ifstream in(t3_gen_file);
            if (!in) throw std::invalid_argument("cannot open " + t3_gen_file);
            auto gen = ech::generator_from_json(Json::parse(in));
            auto d = ech::t3::differential(gen);
            Json terms = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& t : d.terms()) {
                terms.push_back(ech::to_json(t));
                rows.push_back({t.str()});
            }
            Json result{{"input", ech::to_json(gen)},
                        {"grading", ech::t3::grading(gen)},
                        {"terms", terms}};
            Json config{{"command", "t3 diff"}, {"gen", t3_gen_file}};
            out.emit(config, Json::array({result}), {"term"}, rows);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
