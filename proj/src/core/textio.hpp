#pragma once

// Plain-text record formats for matroids, seeds and count tables. All output
// is canonical and byte-stable so corpora can be diffed.

#include <string>
#include <string_view>

#include "enumerate.hpp"

namespace pavemat {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A parsed matroid record before any validation: the declared rank and the
/// raw basis family. Validation (exchange oracle) is a separate step so the
/// verify command can report witnesses instead of failing to load.
struct MatroidRecord {
    GroundSet ground;
    int r;
    SetFamily bases;
};

// matroid n=<n> r=<r> / bases: / one set literal per line; with_derived adds
// hyperplanes: and circuits: sections.
std::string format_matroid(const Matroid& m, bool with_derived);
MatroidRecord parse_matroid_record(std::string_view text);

/// Validated matroid from a record; rejects a declared rank that does not
/// match the basis cardinality, then runs the exchange oracle.
Matroid matroid_from_record(const MatroidRecord& record);

// seed n=<n> r=<r> / H': / one set literal per line
std::string format_seed(const PavingSeed& seed);
PavingSeed parse_seed(std::string_view text);

struct VerifyResult {
    bool is_matroid = false;
    std::string report;
};

/// Full structure report for a parsed record: exchange verdict with witness,
/// rank, both simplicity conventions, paving by both criteria, sparse-paving
/// by all three criteria, hyperplanes and the N-partition sizes.
VerifyResult verify_record(const MatroidRecord& record);

std::string class_name(MatroidClass cls);
std::string mode_name(CountMode mode);

/// Aligned plain-text columns: n r class mode count.
std::string format_count_table(const std::vector<CountRecord>& records);

/// Both sides of the counting inequality plus a PASS/FAIL verdict line.
std::string format_bound_check(const BoundCheck& check);

}  // namespace pavemat
