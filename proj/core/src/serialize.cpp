#include "fhseq/serialize.hpp"

#include <chrono>
#include <ctime>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace fhseq {

namespace {

using nlohmann::json;

// Exact fractions serialize as {"num": ..., "den": ...}; components are JSON
// integers when they fit in 64 bits and decimal strings otherwise.
json int128_to_json(Int128 v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string_int128(v);
}

json rational_to_json(const Rational& r) {
    return json{{"num", int128_to_json(r.num())}, {"den", int128_to_json(r.den())}};
}

json params_to_json(const Params& prm) {
    return json{{"p", prm.p}, {"q", prm.q}, {"e", prm.e},  {"d", prm.d}, {"f1", prm.f1},
                {"f2", prm.f2}, {"L", prm.L}, {"g", prm.g}, {"x", prm.x}};
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string sequence_set_to_json(const FHSequenceSet& set, bool with_timestamp) {
    json doc = params_to_json(set.params);
    doc["sequences"] = set.sequences;
    if (with_timestamp) doc["generated_at"] = utc_timestamp();
    return doc.dump(2) + "\n";
}

FHSequenceSet sequence_set_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("p") || !doc.contains("q") || !doc.contains("g") ||
        !doc.contains("sequences"))
        throw std::invalid_argument("sequence set JSON: missing p/q/g/sequences");

    Params prm = build_params(doc.at("p").get<std::int64_t>(), doc.at("q").get<std::int64_t>(),
                              doc.at("g").get<std::int64_t>());
    // The derived fields are redundant provenance; when present they must agree.
    const std::pair<const char*, std::int64_t> derived[] = {
        {"e", prm.e}, {"d", prm.d}, {"f1", prm.f1}, {"f2", prm.f2}, {"L", prm.L}, {"x", prm.x}};
    for (const auto& [key, value] : derived)
        if (doc.contains(key) && doc.at(key).get<std::int64_t>() != value)
            throw std::invalid_argument(std::string("sequence set JSON: field '") + key +
                                        "' is inconsistent with p, q, g");

    FHSequenceSet set;
    set.params = prm;
    const auto& rows = doc.at("sequences");
    if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != prm.e)
        throw std::invalid_argument("sequence set JSON: expected e sequences");
    set.sequences.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<std::int64_t>(row.size()) != prm.L)
            throw std::invalid_argument("sequence set JSON: sequence length must be L");
        std::vector<std::int32_t> seq;
        seq.reserve(row.size());
        for (const auto& sym : row) {
            std::int64_t v = sym.get<std::int64_t>();
            if (v < 0 || v >= prm.e)
                throw std::invalid_argument("sequence set JSON: symbol outside [0, e)");
            seq.push_back(static_cast<std::int32_t>(v));
        }
        set.sequences.push_back(std::move(seq));
    }
    return set;
}

void sequence_set_to_csv(const FHSequenceSet& set, std::ostream& out) {
    for (const auto& seq : set.sequences) {
        for (std::size_t t = 0; t < seq.size(); ++t) {
            if (t > 0) out << ',';
            out << seq[t];
        }
        out << '\n';
    }
}

std::string sequence_set_to_digits(const FHSequenceSet& set) {
    if (set.params.e > 10)
        throw std::invalid_argument("digit format requires e <= 10");
    std::string out;
    out.reserve(set.sequences.size() * (set.sequences.empty() ? 0 : set.sequences[0].size() + 1));
    for (const auto& seq : set.sequences) {
        for (std::int32_t sym : seq) out.push_back(static_cast<char>('0' + sym));
        out.push_back('\n');
    }
    return out;
}

void profile_to_csv(const CorrelationProfile& profile, std::ostream& out) {
    out << "kind,seq_k,seq_l,tau,value\n";
    const std::int64_t m = profile.params.e;
    for (std::int64_t k = 0; k < m; ++k) {
        const auto& row = profile.auto_rows[static_cast<std::size_t>(k)];
        for (std::size_t tau = 0; tau < row.size(); ++tau)
            out << "auto," << k << ',' << k << ',' << tau << ',' << row[tau] << '\n';
    }
    for (std::int64_t k = 0; k < m; ++k)
        for (std::int64_t l = 0; l < m; ++l) {
            if (k == l) continue;
            const auto& row = profile.cross(k, l);
            for (std::size_t tau = 0; tau < row.size(); ++tau)
                out << "cross," << k << ',' << l << ',' << tau << ',' << row[tau] << '\n';
        }
}

std::string profile_to_json(const CorrelationProfile& profile) {
    json doc;
    doc["params"] = params_to_json(profile.params);
    doc["auto"] = profile.auto_rows;
    json cross = json::array();
    const std::int64_t m = profile.params.e;
    for (std::int64_t k = 0; k < m; ++k)
        for (std::int64_t l = 0; l < m; ++l) {
            if (k == l) continue;
            cross.push_back(json{{"k", k}, {"l", l}, {"values", profile.cross(k, l)}});
        }
    doc["cross"] = std::move(cross);
    doc["max_auto_sidelobe"] = profile.max_auto_sidelobe;
    doc["max_cross"] = profile.max_cross;
    doc["total_auto"] = profile.total_auto;
    doc["total_cross"] = profile.total_cross;
    doc["average_auto"] = rational_to_json(profile.average_auto);
    doc["average_cross"] = rational_to_json(profile.average_cross);
    return doc.dump(2) + "\n";
}

std::string lemma_report_to_json(const LemmaReport& report) {
    json arr = json::array();
    for (const auto& check : report.checks) {
        json entry{{"lemma", check.lemma},
                   {"cases_checked", check.cases_checked},
                   {"passed", check.passed}};
        if (check.first_counterexample) {
            const auto& cx = *check.first_counterexample;
            entry["first_counterexample"] =
                json{{"w", cx.w}, {"i", cx.i}, {"expected", cx.expected}, {"actual", cx.actual}};
        }
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

std::string verification_report_to_json(const VerificationReport& report) {
    json doc;
    doc["params"] = params_to_json(report.params);
    doc["total_checks"] = report.total_checks;
    json mismatches = json::array();
    for (const auto& mm : report.mismatches)
        mismatches.push_back(json{{"k", mm.k},
                                  {"l", mm.l},
                                  {"w", mm.shift},
                                  {"case_tag", mm.case_tag},
                                  {"predicted", mm.predicted},
                                  {"actual", mm.actual}});
    doc["mismatches"] = std::move(mismatches);
    doc["case_histogram"] = report.case_histogram;
    doc["passed"] = report.passed();
    return doc.dump(2) + "\n";
}

std::string average_check_to_json(const AverageCheck& check) {
    json doc;
    doc["predicted_auto"] = rational_to_json(check.predicted_auto);
    doc["predicted_cross"] = rational_to_json(check.predicted_cross);
    doc["measured_auto"] = rational_to_json(check.measured_auto);
    doc["measured_cross"] = rational_to_json(check.measured_cross);
    doc["averages_match"] = check.averages_match;
    doc["bound"] = json{{"lhs", rational_to_json(check.bound.lhs)},
                        {"rhs", rational_to_json(check.bound.rhs)},
                        {"met_with_equality", check.bound.met_with_equality}};
    doc["passed"] = check.passed();
    return doc.dump(2) + "\n";
}

namespace {

json lempel_greenberger_to_json(const std::vector<LempelGreenbergerCheck>& entries) {
    json arr = json::array();
    for (const auto& entry : entries)
        arr.push_back(json{{"sequence", entry.sequence},
                           {"bound", entry.bound},
                           {"achieved", entry.achieved},
                           {"optimal", entry.optimal}});
    return arr;
}

json peng_fan_to_json(const PengFanCheck& check) {
    json pareto = json::array();
    for (const auto& [ha, hc] : check.pareto_minimal_pairs)
        pareto.push_back(json{{"max_auto", ha}, {"max_cross", hc}});
    return json{{"lhs", check.lhs},
                {"rhs", check.rhs},
                {"satisfied", check.satisfied},
                {"minimal_pair", check.minimal_pair},
                {"pareto_minimal_pairs", std::move(pareto)},
                {"floor_lm_over_v", check.floor_lm_over_v}};
}

json average_bound_to_json(const AverageBoundCheck& check) {
    return json{{"lhs", rational_to_json(check.lhs)},
                {"rhs", rational_to_json(check.rhs)},
                {"met_with_equality", check.met_with_equality}};
}

}  // namespace

std::string bounds_report_to_json(const BoundsReport& report, const Params& params) {
    json doc;
    doc["params"] = params_to_json(params);
    doc["lempel_greenberger"] = lempel_greenberger_to_json(report.lempel_greenberger);
    doc["peng_fan"] = peng_fan_to_json(report.peng_fan);
    doc["average_bound"] = average_bound_to_json(report.average_bound);
    return doc.dump(2) + "\n";
}

std::string optimality_report_to_json(const OptimalityReport& report, const Params& params) {
    json doc;
    doc["params"] = params_to_json(params);
    doc["lempel_greenberger"] = lempel_greenberger_to_json(report.lempel_greenberger);
    doc["all_sequences_lg_optimal"] = report.all_sequences_lg_optimal;
    doc["peng_fan"] = peng_fan_to_json(report.peng_fan);
    doc["average_bound"] = average_bound_to_json(report.average_bound);
    doc["average_optimal"] = report.average_optimal;
    return doc.dump(2) + "\n";
}

std::string cyclotomy_to_json(const CyclotomicTables& tables) {
    const std::int64_t e = tables.params.e;
    json doc;
    doc["params"] = params_to_json(tables.params);
    doc["classes"] = tables.classes;
    doc["multiples_of_p"] = tables.p_multiples;
    doc["multiples_of_q"] = tables.q_multiples;
    doc["zero"] = tables.zero;
    json matrix = json::array();
    for (std::int64_t i = 0; i < e; ++i) {
        json row = json::array();
        for (std::int64_t j = 0; j < e; ++j) row.push_back(cyclotomic_number(tables, i, j));
        matrix.push_back(std::move(row));
    }
    doc["cyclotomic_numbers"] = std::move(matrix);
    doc["minus_one_class"] = cell_of(tables, tables.params.L - 1).index;
    return doc.dump(2) + "\n";
}

void cyclotomy_to_csv(const CyclotomicTables& tables, std::ostream& out) {
    const std::int64_t e = tables.params.e;
    out << "i,j,value\n";
    for (std::int64_t i = 0; i < e; ++i)
        for (std::int64_t j = 0; j < e; ++j)
            out << i << ',' << j << ',' << cyclotomic_number(tables, i, j) << '\n';
}

}  // namespace fhseq
