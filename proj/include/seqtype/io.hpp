#pragma once

#include <string>

#include "seqtype/construct.hpp"
#include "seqtype/continuous.hpp"
#include "seqtype/explore.hpp"
#include "seqtype/flats.hpp"
#include "seqtype/points.hpp"
#include "seqtype/rimatrix.hpp"

namespace seqtype {

// All serializers emit canonical JSON: fixed key order, compact separators,
// rationals as "p/q" strings (q omitted when 1). Identical values always
// produce byte-identical text.

std::string point_sequence_to_json(const PointSequence& seq);
PointSequence point_sequence_from_json(const std::string& text);

std::string line_sequence_to_json(const std::vector<OrientedLine>& lines, int d,
                                  bool oriented = true);
struct LineFile {
    int d = 0;
    bool oriented = true;
    std::vector<OrientedLine> lines;
};
LineFile line_sequence_from_json(const std::string& text);

std::string flat_sequence_to_json(const std::vector<Flat>& flats, int d, int k);
struct FlatFile {
    int d = 0;
    int k = 0;
    std::vector<Flat> flats;
};
FlatFile flat_sequence_from_json(const std::string& text);

// Entries above the compaction threshold that are within 2^64 of a power of
// two are written as {"pow2": e, "plus": "r"}; everything else as a decimal
// string.
std::string ri_matrix_to_json(const RIMatrix& M);
RIMatrix ri_matrix_from_json(const std::string& text);

std::string census_to_json(const Census& c);

std::string verify_report_to_json(const RiVerifyReport& rep);

std::string construct_manifest_to_json(const UniversalLineSequence& seq);

std::string radon_to_json(const RadonPartition& p, bool interlacing);

std::string dominance_report_to_json(const DominanceReport& rep);

std::string family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace seqtype
