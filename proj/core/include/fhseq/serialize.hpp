#pragma once

#include <iosfwd>
#include <string>

#include "fhseq/construction.hpp"
#include "fhseq/correlation.hpp"
#include "fhseq/cyclotomy.hpp"
#include "fhseq/theory.hpp"

namespace fhseq {

/// JSON document {p, q, e, g, x, sequences: [[...]]}. When with_timestamp is
/// set an ISO-8601 "generated_at" field is added (off by default so repeated
/// runs are byte-identical).
std::string sequence_set_to_json(const FHSequenceSet& set, bool with_timestamp = false);

/// Inverse of sequence_set_to_json: validates the parameter block and every
/// symbol, and rebuilds the full Params from (p, q, g).
FHSequenceSet sequence_set_from_json(const std::string& text);

/// One row per sequence, comma-separated symbols, LF line endings.
void sequence_set_to_csv(const FHSequenceSet& set, std::ostream& out);

/// One line of concatenated digits per sequence. Only defined for e <= 10;
/// throws std::invalid_argument beyond that.
std::string sequence_set_to_digits(const FHSequenceSet& set);

/// CSV with header kind,seq_k,seq_l,tau,value covering all auto and cross rows.
void profile_to_csv(const CorrelationProfile& profile, std::ostream& out);

std::string profile_to_json(const CorrelationProfile& profile);

std::string lemma_report_to_json(const LemmaReport& report);

std::string verification_report_to_json(const VerificationReport& report);

std::string average_check_to_json(const AverageCheck& check);

std::string bounds_report_to_json(const BoundsReport& report, const Params& params);

std::string optimality_report_to_json(const OptimalityReport& report, const Params& params);

/// Class memberships, P/Q/R and the full e x e cyclotomic-number matrix.
std::string cyclotomy_to_json(const CyclotomicTables& tables);

void cyclotomy_to_csv(const CyclotomicTables& tables, std::ostream& out);

}  // namespace fhseq
