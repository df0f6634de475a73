#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homspec/actions.hpp"
#include "homspec/invariant.hpp"
#include "homspec/m211.hpp"
#include "homspec/mabc.hpp"
#include "homspec/transport.hpp"

namespace homspec {

using Json = nlohmann::ordered_json;

inline Json rat_json(const Rat& q) {
    Json j;
    j["exact"] = rat_string(q);
    j["decimal"] = rat_decimal6(q);
    return j;
}

inline Json int_json(const Int& v) { return Json(v.get_str()); }

// ---------------------------------------------------------------------------
// decompose

inline Json decompose_report(const Composition& a, const std::optional<std::string>& chain,
                             const std::optional<Partition>& only_lambda) {
    OmegaIndex space(a);
    Json out;
    out["schema"] = 1;
    out["command"] = "decompose";
    out["composition"] = a.parts;
    out["n"] = a.n();
    out["space_size"] = space.size();

    long orbit_count = wielandt_count(space.stabilizer_generators(), space);
    Int sum_sq = 0;
    Json table = Json::array();
    for (const auto& lambda : partitions_of(a.n())) {
        Int mult = multiplicity(lambda, a);
        sum_sq += mult * mult;
        if (mult == 0) continue;
        if (only_lambda && !(lambda == *only_lambda)) continue;
        Int dim = hook_dimension(lambda);
        Json row;
        row["lambda"] = lambda.parts;
        row["multiplicity"] = int_json(mult);
        row["dimension"] = int_json(dim);
        row["projector_rank"] = int_json(mult * dim);
        table.push_back(std::move(row));
    }
    out["isotypic"] = std::move(table);
    Json audit;
    audit["orbit_count"] = orbit_count;
    audit["sum_multiplicity_sq"] = int_json(sum_sq);
    audit["match"] = Int(orbit_count) == sum_sq;
    out["wielandt"] = std::move(audit);
    require_contract(Int(orbit_count) == sum_sq, "Wielandt audit failed");

    if (chain) {
        require_input(*chain == "gz" || *chain == "sym", "chain must be gz or sym");
        std::string label = *chain == "sym" ? "sym-antisym" : "last-coordinate";
        const auto& names = *chain == "sym" ? m211::chain_A_labels() : m211::chain_B_labels();
        auto projs = chain_projectors(space, label);
        Json blocks = Json::array();
        for (size_t p = 0; p < projs.size(); ++p) {
            Json b;
            b["name"] = names[p].first;
            b["rank"] = rank(projs[p]);
            blocks.push_back(std::move(b));
        }
        Json ch;
        ch["label"] = label;
        ch["blocks"] = std::move(blocks);
        out["chain"] = std::move(ch);
    }
    return out;
}

// ---------------------------------------------------------------------------
// election

struct CsvError {
    int line;
    std::string message;
};

// CSV with header president,director,count; returns rows or throws an
// invalid_input_error whose message lists every malformed line.
inline std::vector<BallotRow> parse_ballots_csv(std::istream& in) {
    std::vector<BallotRow> rows;
    std::vector<CsvError> errors;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { errors.push_back(CsvError{lineno, msg}); };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "president,director,count") fail("header must be president,director,count");
            continue;
        }
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c)) {
            fail("expected three comma-separated fields");
            continue;
        }
        try {
            size_t pa, pb, pc;
            int president = std::stoi(a, &pa);
            int director = std::stoi(b, &pb);
            long count = std::stol(c, &pc);
            if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument("trailing");
            if (president == director) {
                fail("president and director must differ");
                continue;
            }
            if (count < 0) {
                fail("count must be nonnegative");
                continue;
            }
            rows.push_back(BallotRow{president, director, count});
        } catch (const std::exception&) {
            fail("fields must be integers");
        }
    }
    if (lineno == 0) errors.push_back(CsvError{0, "empty input"});
    if (!errors.empty()) {
        std::string msg = "malformed ballot file:";
        for (const auto& e : errors) msg += "\n  line " + std::to_string(e.line) + ": " + e.message;
        throw invalid_input_error(msg);
    }
    return rows;
}

inline Json election_report_json(const ElectionReport& rep) {
    Json out;
    out["schema"] = 1;
    out["command"] = "election";
    out["candidates"] = rep.candidates;
    out["total_votes"] = rep.total_votes;
    out["input_norm_sq"] = rat_json(rep.chain_a.input_norm_sq);
    Json chains = Json::array();
    const std::vector<std::vector<TopEntry>>* tops[2] = {&rep.top_a, &rep.top_b};
    const DecompositionReport* reps[2] = {&rep.chain_a, &rep.chain_b};
    for (int c = 0; c < 2; ++c) {
        Json chain;
        chain["chain"] = reps[c]->chain_label;
        Json comps = Json::array();
        for (size_t i = 0; i < reps[c]->components.size(); ++i) {
            const auto& comp = reps[c]->components[i];
            Json jc;
            jc["name"] = comp.name;
            jc["interpretation"] = comp.interpretation;
            jc["dimension"] = comp.dimension;
            jc["energy"] = rat_json(comp.energy);
            Json top = Json::array();
            for (const auto& t : (*tops[c])[i]) {
                Json jt;
                jt["president"] = t.president;
                jt["director"] = t.director;
                jt["value"] = rat_json(t.value);
                top.push_back(std::move(jt));
            }
            jc["top"] = std::move(top);
            comps.push_back(std::move(jc));
        }
        chain["components"] = std::move(comps);
        chains.push_back(std::move(chain));
    }
    out["chains"] = std::move(chains);
    return out;
}

// ---------------------------------------------------------------------------
// spectrum

inline Json spectrum_report(const Triple& shape, const PairSet& pairs) {
    OmegaIndex space(triple_composition(shape));
    Json out;
    out["schema"] = 1;
    out["command"] = "spectrum";
    out["shape"] = std::vector<int>(shape.begin(), shape.end());
    Json jp = Json::array();
    for (auto [i, j] : pairs) jp.push_back(std::to_string(i) + std::to_string(j));
    out["pairs"] = std::move(jp);
    out["space_size"] = space.size();

    auto spectrum = urn_spectrum(shape, pairs, space);
    Json rows = Json::array();
    long total = 0;
    for (auto [ev, mult] : spectrum) {
        Json r;
        r["eigenvalue"] = ev;
        r["multiplicity"] = mult;
        rows.push_back(std::move(r));
        total += mult;
    }
    out["spectrum"] = std::move(rows);
    Json audit;
    audit["multiplicity_sum"] = total;
    audit["match"] = total == space.size();
    out["dimension_audit"] = std::move(audit);

    if (pairs == PairSet{{1, 2}}) {
        MabcDecomposition dec = mabc_decomposition(shape, space);
        Json blocks = Json::array();
        for (const auto& b : dec.blocks) {
            Json jb;
            jb["k"] = b.k;
            jb["eigenvalue"] = b.eigenvalue;
            jb["dimension"] = b.dimension;
            Json contr = Json::array();
            for (const auto& lambda : b.contributors) contr.push_back(lambda.parts);
            jb["components"] = std::move(contr);
            blocks.push_back(std::move(jb));
        }
        out["gt_blocks"] = std::move(blocks);
    }
    return out;
}

// ---------------------------------------------------------------------------
// crest / wreath

inline Permutation permutation_from_json(const Json& j, int degree) {
    require_input(j.is_array() && static_cast<int>(j.size()) == degree, "generator image list has wrong length");
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>());
    return Permutation(std::move(img));
}

struct ParsedAction {
    FiniteAction action;
    std::optional<InvariantPartition> partition;
    std::vector<Permutation> normal_generators;
};

inline ParsedAction parse_action_json(const Json& j) {
    require_input(j.contains("degree") && j.contains("generators") && j.contains("base_point"),
                  "action needs degree, generators, base_point");
    int degree = j["degree"].get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : j["generators"]) gens.push_back(permutation_from_json(g, degree));
    FiniteAction action(degree, gens, j["base_point"].get<int>());
    ParsedAction parsed{std::move(action), std::nullopt, {}};
    if (j.contains("partition")) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : j["partition"]) blocks.push_back(b.get<std::vector<int>>());
        parsed.partition = InvariantPartition::from_blocks(std::move(blocks), parsed.action);
    }
    if (j.contains("normal_generators"))
        for (const auto& g : j["normal_generators"])
            parsed.normal_generators.push_back(permutation_from_json(g, degree));
    return parsed;
}

inline std::vector<MultiplicityRow> parse_mult_rows(const Json& j) {
    std::vector<MultiplicityRow> rows;
    for (const auto& r : j)
        rows.push_back(MultiplicityRow{r["label"].get<std::string>(), Int(r["mult"].get<long>()),
                                       Int(r["dim"].get<long>())});
    return rows;
}

inline Json classes_json(const std::vector<std::vector<int>>& classes) {
    Json out = Json::array();
    for (const auto& c : classes) out.push_back(c);
    return out;
}

inline Json multiplicity_table_json(const MultiplicityTable& table) {
    Json rows = Json::array();
    for (const auto& r : table.rows) {
        Json jr;
        jr["label"] = r.label;
        jr["multiplicity"] = int_json(r.mult);
        jr["dimension"] = int_json(r.dim);
        rows.push_back(std::move(jr));
    }
    Json out;
    out["rows"] = std::move(rows);
    out["sum_multiplicity_sq"] = int_json(table.sum_mult_sq());
    out["sum_mult_dim"] = int_json(table.sum_mult_dim());
    return out;
}

// The inner action's suborbit/ideal analysis runs against any supplied
// invariant partition; the crested-orbit part needs the outer action and the
// normal generators, whose orbit partition is then the crest's Q.
inline Json crest_report(const Json& spec_json) {
    require_input(spec_json.contains("inner"), "crest spec needs an inner action");
    ParsedAction inner = parse_action_json(spec_json["inner"]);

    Json out;
    out["schema"] = 1;
    out["command"] = "crest";

    std::optional<InvariantPartition> q = inner.partition;
    if (!q && spec_json["inner"].contains("normal_generators")) {
        auto blocks = point_orbits(inner.normal_generators, inner.action.degree());
        q = InvariantPartition::from_blocks(std::move(blocks), inner.action);
    }
    require_input(q.has_value(), "inner action needs a partition or normal_generators");

    SuborbitDecomposition ydec = suborbits(inner.action);
    Json ysub = Json::array();
    for (const auto& orbit : ydec.orbits) ysub.push_back(orbit);
    out["inner_suborbits"] = std::move(ysub);
    out["sim_classes"] = classes_json(sim_classes(ydec, *q));
    out["approx_classes"] = classes_json(approx_classes(ydec, *q));
    out["b0_central"] = b0_is_central(ydec, *q);

    Json ideals;
    for (auto side : {IdealSide::right, IdealSide::left}) {
        IdealCheckResult res = ideal_check(ydec, *q, side);
        Json jr;
        jr["holds"] = res.ok;
        jr["classes"] = classes_json(res.classes);
        Json w = Json::array();
        for (const auto& v : res.witnesses) w.push_back(rat_json(v));
        jr["witnesses"] = std::move(w);
        if (!res.ok) jr["failure"] = res.failure;
        ideals[side == IdealSide::right ? "right" : "left"] = std::move(jr);
    }
    out["ideal_partitions"] = std::move(ideals);

    if (!spec_json.contains("outer")) return out;

    ParsedAction outer = parse_action_json(spec_json["outer"]);
    require_input(outer.partition.has_value(), "outer action needs its invariant partition");
    CrestedSpec spec{outer.action, *outer.partition, inner.action, inner.normal_generators};
    InvariantPartition crest_q = crested_q_partition(spec);
    if (inner.partition)
        require_input(inner.partition->blocks == crest_q.blocks,
                      "inner partition must be the orbit partition of N");

    CrestedOrbits orbits = crested_orbits(spec);
    Json jorbits = Json::array();
    for (const auto& orbit : orbits.orbits) {
        Json jo = Json::array();
        for (auto [x, y] : orbit) jo.push_back(std::vector<int>{x, y});
        jorbits.push_back(std::move(jo));
    }
    out["crested_orbits"] = std::move(jorbits);
    auto brute = crested_orbits_brute(spec);
    std::vector<std::vector<std::pair<int, int>>> closed_sorted = orbits.orbits;
    std::sort(closed_sorted.begin(), closed_sorted.end());
    bool match = closed_sorted == brute;
    Json counts;
    counts["outer_suborbits"] = orbits.outer_suborbits.size();
    counts["outer_in_a0"] = orbits.i0.size();
    counts["inner_suborbits"] = orbits.inner_suborbits.size();
    counts["sim_classes"] = orbits.sim.size();
    counts["orbits"] = orbits.orbits.size();
    counts["brute_force_match"] = match;
    out["counts"] = std::move(counts);
    require_contract(match, "closed-form crested orbits disagree with brute force");

    if (spec_json.contains("multiplicities")) {
        const Json& m = spec_json["multiplicities"];
        CompositionTableInput input{
            parse_mult_rows(m["x"]),
            parse_mult_rows(m["y_in"]),
            parse_mult_rows(m["y_out"]),
            parse_mult_rows(m["a0"]),
            static_cast<long>(orbits.outer_suborbits.size()),
            static_cast<long>(orbits.i0.size()),
            static_cast<long>(orbits.inner_suborbits.size()),
            static_cast<long>(orbits.sim.size()),
            spec.outer.degree(),
            spec.inner.degree(),
            static_cast<long>(
                spec.outer_blocks.blocks[spec.outer_blocks.block_of[spec.outer.base_point()]].size())};
        out["multiplicity_table"] = multiplicity_table_json(composition_multiplicity_table(input));
    }
    return out;
}

}  // namespace homspec
