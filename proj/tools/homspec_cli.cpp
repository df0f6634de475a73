#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "homspec/reports.hpp"

namespace {

using namespace homspec;

void emit(const Json& report, const std::string& output_path) {
    std::string text = report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw invalid_input_error("cannot open output file " + output_path);
        out << text;
    }
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw invalid_input_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

Composition parse_composition(const std::vector<int>& parts, int max_n) {
    Composition a(parts);
    if (a.n() > max_n)
        throw invalid_input_error("n = " + std::to_string(a.n()) + " exceeds the CLI limit of " +
                                  std::to_string(max_n));
    return a;
}

int run_decompose(const std::vector<int>& comp, const std::string& chain, const std::vector<int>& lambda,
                  const std::string& output) {
    Composition a = parse_composition(comp, 7);
    std::optional<std::string> chain_opt;
    if (!chain.empty()) chain_opt = chain;
    std::optional<Partition> lambda_opt;
    if (!lambda.empty()) lambda_opt = Partition(lambda);
    emit(decompose_report(a, chain_opt, lambda_opt), output);
    return 0;
}

int run_election(const std::string& input, int n, const std::string& output) {
    if (n < 4) throw invalid_input_error("elections need at least 4 candidates");
    std::ifstream in(input);
    if (!in) throw invalid_input_error("cannot open " + input);
    std::vector<BallotRow> ballots = parse_ballots_csv(in);
    OmegaIndex space{Composition({n - 2, 1, 1})};
    emit(election_report_json(election_report(ballots, space)), output);
    return 0;
}

int run_spectrum(const std::vector<int>& shape, const std::vector<std::string>& pair_names,
                 const std::string& output) {
    if (shape.size() < 2 || shape.size() > 3) throw invalid_input_error("shape needs two or three parts");
    Triple t{shape[0], shape[1], shape.size() == 3 ? shape[2] : 0};
    parse_composition(triple_composition(t).parts, 7);
    PairSet pairs;
    if (pair_names.empty()) {
        int blocks = triple_composition(t).length();
        for (int i = 1; i <= blocks; ++i)
            for (int j = i + 1; j <= blocks; ++j) pairs.emplace(i, j);
    }
    for (const auto& name : pair_names) {
        if (name.size() != 2 || name[0] < '1' || name[1] < '1')
            throw invalid_input_error("pairs look like 12,13,23");
        pairs.emplace(name[0] - '0', name[1] - '0');
    }
    emit(spectrum_report(t, pairs), output);
    return 0;
}

int run_crest(const std::string& spec_path, const std::string& output) {
    emit(crest_report(load_json(spec_path)), output);
    return 0;
}

int run_wreath(const std::string& variant, const std::vector<std::string>& labels,
               const std::vector<long>& mults, const std::vector<long>& dims, const std::string& rows_path,
               long ambient, const std::string& verify_path, const std::string& output) {
    Json out;
    out["schema"] = 1;
    out["command"] = "wreath";
    out["variant"] = variant;
    MultiplicityTable table;
    if (variant == "c2") {
        if (mults.empty() || mults.size() != dims.size())
            throw invalid_input_error("--mults and --dims must list one value per block of L(Y)");
        std::vector<C2Input> rows;
        for (size_t i = 0; i < mults.size(); ++i) {
            std::string label = i < labels.size() ? labels[i] : "sigma_" + std::to_string(i);
            rows.push_back(C2Input{label, Int(mults[i]), Int(dims[i])});
        }
        Int y_size = 0;
        for (const auto& r : rows) y_size += r.mult * r.dim;
        table = expo_multiplicities(ExpoVariant::c2, rows, {}, y_size * y_size);
    } else if (variant == "free" || variant == "general") {
        if (rows_path.empty() || ambient <= 0)
            throw invalid_input_error("--rows and --ambient are required for this variant");
        Json jr = load_json(rows_path);
        std::vector<InducedRowInput> rows;
        for (const auto& r : jr)
            rows.push_back(InducedRowInput{r["sigma"].get<std::string>(), Int(r["dim_sigma"].get<long>()),
                                           r["index"].get<long>(), r["eta"].get<std::string>(),
                                           Int(r["dim_eta"].get<long>()), Int(r["mult"].get<long>())});
        table = expo_multiplicities(
            variant == "free" ? ExpoVariant::multiplicity_free : ExpoVariant::general, {}, rows, Int(ambient));
    } else {
        throw invalid_input_error("variant must be c2, free or general");
    }
    out["table"] = multiplicity_table_json(table);

    if (!verify_path.empty()) {
        Json actions = load_json(verify_path);
        ParsedAction f = parse_action_json(actions.at("f"));
        ParsedAction g = parse_action_json(actions.at("g"));
        std::optional<ParsedAction> z;
        if (actions.contains("z")) z = parse_action_json(actions["z"]);
        FiniteAction expo = exponentiation_action(f.action, g.action, z ? &z->action : nullptr);
        long orbit_count = static_cast<long>(suborbits(expo).count());
        Json v;
        v["stabilizer_orbits"] = orbit_count;
        v["sum_multiplicity_sq"] = int_json(table.sum_mult_sq());
        v["match"] = Int(orbit_count) == table.sum_mult_sq();
        out["verification"] = std::move(v);
        require_contract(Int(orbit_count) == table.sum_mult_sq(),
                         "stabilizer orbit count disagrees with the multiplicity table");
    }
    emit(out, output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homspec: exact spectral decompositions of symmetric-group permutation modules"};
    app.require_subcommand(1);

    std::string output;
    auto add_output_option = [&output](CLI::App* cmd) {
        cmd->add_option("-o,--output", output, "write the JSON report to a file instead of stdout");
    };

    auto* decompose = app.add_subcommand("decompose", "isotypic decomposition of M^a with Wielandt audit");
    std::vector<int> comp;
    std::string chain;
    std::vector<int> lambda;
    decompose->add_option("--composition", comp, "block sizes a_1,a_2,...")->required()->delimiter(',');
    decompose->add_option("--chain", chain, "five-block chain report: gz or sym")
        ->check(CLI::IsMember({"gz", "sym"}));
    decompose->add_option("--lambda", lambda, "restrict the table to one partition")->delimiter(',');

    auto* election = app.add_subcommand("election", "two spectral decompositions of ballot data");
    std::string input;
    int n_candidates = 0;
    election->add_option("--input", input, "CSV file with header president,director,count")->required();
    election->add_option("--n", n_candidates, "number of candidates")->required();

    auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of urn moves between blocks");
    std::vector<int> shape;
    std::vector<std::string> pair_names;
    spectrum->add_option("--shape", shape, "block sizes a,b,c")->required()->delimiter(',');
    spectrum->add_option("--pairs", pair_names, "allowed swaps among 12,13,23 (default: all)")->delimiter(',');

    auto* crest = app.add_subcommand("crest", "crested-product orbit and ideal analysis");
    std::string spec_path;
    crest->add_option("--spec", spec_path, "JSON description of the outer/inner actions")->required();

    auto* wreath = app.add_subcommand("wreath", "multiplicity tables for wreath actions");
    std::string variant, rows_path, verify_path;
    std::vector<std::string> labels;
    std::vector<long> mults, dims;
    long ambient = 0;
    wreath->add_option("--variant", variant, "c2, free or general")->required();
    wreath->add_option("--labels", labels, "block labels for the c2 variant")->delimiter(',');
    wreath->add_option("--mults", mults, "multiplicities m_sigma in L(Y)")->delimiter(',');
    wreath->add_option("--dims", dims, "dimensions dim V_sigma")->delimiter(',');
    wreath->add_option("--rows", rows_path, "JSON rows for the free/general variants");
    wreath->add_option("--ambient", ambient, "|Y|^|X| |Z| for the dimension audit");
    wreath->add_option("--verify", verify_path, "JSON actions {f,g[,z]} for a brute-force Wielandt check");

    for (CLI::App* cmd : {decompose, election, spectrum, crest, wreath}) add_output_option(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decompose->parsed()) return run_decompose(comp, chain, lambda, output);
        if (election->parsed()) return run_election(input, n_candidates, output);
        if (spectrum->parsed()) return run_spectrum(shape, pair_names, output);
        if (crest->parsed()) return run_crest(spec_path, output);
        if (wreath->parsed())
            return run_wreath(variant, labels, mults, dims, rows_path, ambient, verify_path, output);
    } catch (const homspec::invalid_input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const homspec::resource_cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const homspec::contract_violation_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
