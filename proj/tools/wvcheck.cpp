// wvcheck: batch driver for the rank-one wonderful variety toolkit.
//
//   wvcheck catalog   [--family F --n N]
//   wvcheck decompose --family F [--n N] --lambda a,b,... [--variety f.json] [--json]
//   wvcheck verify    [--family F --n N | --variety f.json | --config cfg.json]
//                     [--lambda ... --mu ...] [--max-coeff K] [--with-oracle]
//                     [--jobs J] [--out report.json]
//   wvcheck oracle    --model {Pn|P1xP1|Qn} --d a[,b] --dprime a[,b] [--json]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wv/catalog.hpp"
#include "wv/json_io.hpp"
#include "wv/models.hpp"
#include "wv/multiply.hpp"
#include "wv/sections.hpp"
#include "wv/sweep.hpp"
#include "wv/wonderful.hpp"

namespace {

std::vector<std::int64_t> parse_ints(const std::string& csv, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + " '" + csv + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

wv::Weight parse_weight(const std::string& csv) { return wv::Weight(parse_ints(csv, "weight")); }

wv::Degree parse_degree(const std::string& csv) {
    const auto v = parse_ints(csv, "degree");
    if (v.size() > 2) throw std::invalid_argument("degree takes at most two components");
    wv::Degree d;
    d.a = v[0];
    if (v.size() == 2) d.b = v[1];
    return d;
}

wv::GradedModel parse_model(const std::string& name) {
    if (name == "P1xP1" || name == "p1xp1") return wv::GradedModel::p1xp1();
    if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'p'))
        return wv::GradedModel::projective_space(std::stoi(name.substr(1)));
    if (name.size() >= 2 && (name[0] == 'Q' || name[0] == 'q'))
        return wv::GradedModel::quadric(std::stoi(name.substr(1)));
    throw wv::lookup_error("unknown model '" + name + "' (expected Pn, P1xP1 or Qn)");
}

wv::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return wv::Json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_entry(const wv::CatalogEntry& e) {
    std::cout << e.label << ": group " << e.group.name();
    if (e.gamma) std::cout << ", gamma " << e.gamma->str();
    std::cout << ", pic {";
    for (std::size_t k = 0; k < e.pic_generators.size(); ++k)
        std::cout << (k ? " " : "") << e.pic_generators[k].str();
    std::cout << "}, Picard rank " << e.picard_rank << ", treatment " << to_string(e.treatment)
              << "\n";
}

struct VarietySelection {
    std::string family;
    int n = 0;
    std::vector<std::string> variety_files;
    std::string config_file;
};

// Variety descriptors from --family/--n, --variety files and --config.
std::vector<wv::Json> collect_varieties(const VarietySelection& sel) {
    std::vector<wv::Json> out;
    if (!sel.family.empty()) {
        wv::Json j{{"family", sel.family}};
        if (sel.n > 0) j["n"] = sel.n;
        out.push_back(j);
    }
    for (const auto& f : sel.variety_files) out.push_back(read_json_file(f));
    return out;
}

int cmd_catalog(const std::string& family, int n) {
    if (family.empty()) {
        print_entry(wv::get_entry(wv::Family::case_9b, n > 0 ? n : 2));
        print_entry(wv::get_entry(wv::Family::case_9c, n > 0 ? n : 2));
        print_entry(wv::get_entry(wv::Family::case_15));
        print_entry(wv::get_entry(wv::Family::p1xp1));
        std::cout << "flag: user data (group + pic generators), treatment borel-weil\n";
        return 0;
    }
    const wv::Family f = wv::family_from_string(family);
    print_entry(wv::get_entry(f, n));
    return 0;
}

int cmd_decompose(const VarietySelection& sel, const std::string& lambda_csv, bool as_json) {
    const auto descs = collect_varieties(sel);
    if (descs.size() != 1)
        throw std::invalid_argument("decompose needs exactly one variety (--family or --variety)");
    const wv::WonderfulVariety x = wv::variety_from_json(descs[0]);
    const wv::Weight lambda = parse_weight(lambda_csv);
    const auto dec = wv::decompose(x, lambda);
    if (as_json) {
        std::cout << wv::decomposition_to_json(dec).dump(2) << "\n";
        return 0;
    }
    std::cout << "Gamma(" << x.label() << ", L_" << lambda.str() << "):\n";
    for (const auto& s : dec.summands)
        std::cout << "  m = " << s.m << "  head " << s.head.str() << "  dim " << s.dim.str()
                  << "\n";
    std::cout << "  total dim " << dec.total_dim.str() << " in " << dec.summands.size()
              << " irreducible summand(s)\n";
    return 0;
}

int cmd_verify(const VarietySelection& sel, const std::string& lambda_csv,
               const std::string& mu_csv, std::int64_t max_coeff, bool with_oracle, int jobs,
               const std::string& out_path) {
    // Single-pair mode.
    if (!lambda_csv.empty() || !mu_csv.empty()) {
        if (lambda_csv.empty() || mu_csv.empty())
            throw std::invalid_argument("single-pair verify needs both --lambda and --mu");
        const auto descs = collect_varieties(sel);
        if (descs.size() != 1)
            throw std::invalid_argument("single-pair verify needs exactly one variety");
        const wv::WonderfulVariety x = wv::variety_from_json(descs[0]);
        const auto cert =
            wv::check_surjectivity(x, parse_weight(lambda_csv), parse_weight(mu_csv));
        wv::Json j = wv::certificate_to_json(cert);
        j["variety"] = wv::variety_to_json(x);
        std::cout << j.dump(2) << "\n";
        if (!out_path.empty()) write_text_file(out_path, j.dump(2) + "\n");
        return cert.verdict == wv::Verdict::failed ? 1 : 0;
    }

    wv::SweepConfig cfg;
    if (!sel.config_file.empty()) cfg = wv::sweep_config_from_json(read_json_file(sel.config_file));
    for (auto& d : collect_varieties(sel)) cfg.varieties.push_back(std::move(d));
    if (max_coeff >= 0) cfg.max_coeff = max_coeff;
    cfg.with_oracle = cfg.with_oracle || with_oracle;
    if (jobs > 0) cfg.jobs = jobs;
    wv::validate(cfg);

    const auto report = wv::run_sweep(cfg);
    const wv::Json j = wv::report_to_json(report);
    if (!out_path.empty()) write_text_file(out_path, j.dump(2) + "\n");

    std::cout << "varieties: " << report.summary.varieties << "\n"
              << "pairs:     " << report.summary.pairs << "\n";
    for (const auto& [verdict, count] : report.summary.by_verdict)
        std::cout << "  " << verdict << ": " << count << "\n";
    std::cout << (report.summary.failed == 0 ? "OK: no failed verdicts"
                                             : "FAILURE: failed verdicts present")
              << "\n";
    return report.summary.failed == 0 ? 0 : 1;
}

int cmd_oracle(const std::string& model_name, const std::string& d_csv, const std::string& dp_csv,
               bool as_json, const std::string& out_path) {
    const wv::GradedModel model = parse_model(model_name);
    const wv::Degree d = parse_degree(d_csv), dp = parse_degree(dp_csv);
    const auto res = wv::oracle_surjective(model, d, dp);
    const wv::Json j = wv::oracle_to_json(model, d, dp, res);
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << model.name() << ": rank " << res.rank << " of " << res.rows << " x "
                  << res.cols << " multiplication matrix -> "
                  << (res.surjective ? "surjective" : "NOT surjective") << "\n";
    if (!out_path.empty()) write_text_file(out_path, j.dump(2) + "\n");
    return res.surjective ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surjectivity checks for multiplication of sections on rank-one wonderful "
                 "varieties"};
    app.require_subcommand(1);

    VarietySelection sel;
    std::string lambda_csv, mu_csv, out_path, model_name, d_csv, dp_csv;
    std::int64_t max_coeff = -1;
    int jobs = 0;
    bool with_oracle = false, as_json = false;

    auto* catalog = app.add_subcommand("catalog", "list the built-in families");
    catalog->add_option("--family", sel.family, "family id (9B, 9C, 15, P1xP1)");
    catalog->add_option("--n", sel.n, "rank parameter for 9B/9C");

    auto* decompose = app.add_subcommand("decompose", "section-space decomposition");
    decompose->add_option("--family", sel.family, "family id");
    decompose->add_option("--n", sel.n, "rank parameter for 9B/9C");
    decompose->add_option("--variety", sel.variety_files, "variety descriptor file (JSON)");
    decompose->add_option("--lambda", lambda_csv, "weight, comma-separated fundamental coords")
        ->required();
    decompose->add_flag("--json", as_json, "print JSON");

    auto* verify = app.add_subcommand("verify", "surjectivity certificates (sweep or one pair)");
    verify->add_option("--family", sel.family, "family id");
    verify->add_option("--n", sel.n, "rank parameter for 9B/9C");
    verify->add_option("--variety", sel.variety_files, "variety descriptor file (JSON)");
    verify->add_option("--config", sel.config_file, "sweep config file (JSON)");
    verify->add_option("--lambda", lambda_csv, "single-pair mode: first weight");
    verify->add_option("--mu", mu_csv, "single-pair mode: second weight");
    verify->add_option("--max-coeff", max_coeff, "coordinate cap for the pic+ sweep");
    verify->add_flag("--with-oracle", with_oracle, "attach graded-model cross-checks");
    verify->add_option("--jobs", jobs, "worker count");
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* oracle = app.add_subcommand("oracle", "graded-model multiplication oracle");
    oracle->add_option("--model", model_name, "Pn, P1xP1 or Qn")->required();
    oracle->add_option("--d", d_csv, "first degree (a or a,b)")->required();
    oracle->add_option("--dprime", dp_csv, "second degree (a or a,b)")->required();
    oracle->add_flag("--json", as_json, "print JSON");
    oracle->add_option("--out", out_path, "write the JSON result here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog->parsed()) return cmd_catalog(sel.family, sel.n);
        if (decompose->parsed()) return cmd_decompose(sel, lambda_csv, as_json);
        if (verify->parsed())
            return cmd_verify(sel, lambda_csv, mu_csv, max_coeff, with_oracle, jobs, out_path);
        if (oracle->parsed()) return cmd_oracle(model_name, d_csv, dp_csv, as_json, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
