#pragma once

#include "seqtype/lines.hpp"
#include "seqtype/rimatrix.hpp"

namespace seqtype {

enum class StackedFamily { Ascending, Descending };

// Recipe for one two-sided stacked permutation of [d-1]: write the values
// one by one, appending each at the left or right end of the current
// sequence. Ascending starts at 1 and inserts 2..d-1; descending starts at
// d-1 and inserts d-2..1. ends[k] is the choice for the (k+1)-th inserted
// value.
struct StackedSpec {
    int d = 0;                    // >= 3
    StackedFamily family = StackedFamily::Ascending;
    std::vector<bool> right;      // size d-2, true = right end
};

Perm stacked_permutation(const StackedSpec& spec);
bool is_two_sided_stacked(const Perm& sigma);
std::vector<Perm> enumerate_stacked(int d);

// "asc:RRL" / "desc:LR"; d is the letter count plus 2.
StackedSpec stacked_spec_parse(const std::string& s);
std::string stacked_spec_str(const StackedSpec& spec);

enum class ConstructMode { ExactRi, Tuned };
std::string construct_mode_str(ConstructMode m);
ConstructMode construct_mode_parse(const std::string& s);

// A sequence of oriented lines realizing a stacked permutation, together
// with everything needed to audit it. verified = true means sequence_type
// equals stacked_permutation(spec), established by exact recomputation over
// every (d-1)-tuple.
struct UniversalLineSequence {
    int d = 0;
    int n = 0;
    std::vector<OrientedLine> lines;
    StackedSpec spec;
    RIMatrix matrix;               // 2d x n(d+1)
    std::vector<int> delta;        // d signs, +-1
    std::vector<BigInt> gammas;    // n positive scale factors
    ConstructMode mode = ConstructMode::Tuned;
    bool verified = false;
    Perm type;                     // the verified type
    int margin = 0;                // tuned-mode exponent margin in force
    bool mirrored = false;         // descending specs build the ascending
                                   // mirror and reverse the line order
};

struct ConstructOptions {
    ConstructMode mode = ConstructMode::Tuned;
    std::int64_t max_entry_bits = 10'000'000;   // exact-ri guardrail budget
    int margin = 8;                             // tuned template margin
    int retries = 8;                            // tuned margin doublings
};

UniversalLineSequence build_universal_lines(int d, int n, const StackedSpec& spec,
                                            const ConstructOptions& opts = {});

// Exact dominance audit of the construction's term ladder: for the chosen
// tuple and each position i, the terms T_j = [b_i]_j [(v_i)_{-j}]_i with the
// peak at j = d+1-i.
struct DominancePosition {
    int position = 0;              // i, 1-based
    int peak = 0;                  // d+1-i
    std::vector<BigInt> terms;     // T_1..T_d
    bool strict = false;           // max over j != peak of T_j < T_peak
    bool within_epsilon = false;   // T_j < eps T_peak for all j != peak
};

struct DominanceReport {
    std::vector<DominancePosition> positions;
    bool strict_pass = false;
    bool epsilon_pass = false;
    Rational epsilon;
};

// tuple: 1-based increasing line indices, size d-1
DominanceReport dominance_report(const UniversalLineSequence& seq,
                                 const std::vector<int>& tuple);

// Type of the reversed line sequence, predicted combinatorially from the
// type of the original homogeneous sequence.
Perm reversed_sequence_type(const Perm& sigma, int d);

} // namespace seqtype
