#pragma once

#include <string>
#include <vector>

#include "cckit/config.hpp"

namespace cckit {

// Raw parsed CCF document, before axiom validation.
//
// Grammar (bit-exact): optional comment lines starting with '#' may precede
// line 1 only; line 1 is "ccf 1"; line 2 is "<n> <rank>"; the next n lines
// hold n space-separated decimals each. Single spaces, LF line endings, no
// trailing whitespace.
struct CcfDocument {
    int version = 1;
    int n = 0;
    int rank = 0;
    std::vector<int> matrix;
};

CcfDocument parse_ccf_document(const std::string& text);

// Parse + validate. Throws ParseError with position on lexical errors and
// ValidationError on axiom violations; the header rank must match.
CoherentConfiguration parse_ccf(const std::string& text);

std::string write_ccf(const CoherentConfiguration& x);

enum class CatalogFormat { ccf_multi, matrix_list };

struct IngestIssue {
    int block = 0;
    std::string message;
};

struct IngestResult {
    std::vector<CoherentConfiguration> configs;
    std::vector<IngestIssue> issues; // skipped blocks (non-strict mode)
};

// Blocks separated by blank lines. ccf-multi blocks are CCF documents;
// matrix-list blocks are a line "n" followed by n rows of n indices with
// free whitespace. strict: the first invalid block throws (message carries
// the block index); otherwise invalid blocks are skipped and reported.
IngestResult ingest_catalog(const std::string& text, CatalogFormat format, bool strict);

} // namespace cckit
