#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "seqtype/flats.hpp"
#include "seqtype/lines.hpp"
#include "seqtype/points.hpp"

namespace seqtype {

// Deterministic splittable stream: all randomness in the artifact flows from
// a single 64-bit seed, and trial k of a run always sees the same values
// regardless of how trials are partitioned across workers.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : state_(seed) {}
    SeedStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    // uniform in [-bound, bound]
    long next_coord(long bound);

private:
    std::uint64_t state_;
};

OrientedLine random_line(SeedStream& rng, int d, long bound);
Vector random_point(SeedStream& rng, int d, long bound);
Flat random_flat(SeedStream& rng, int d, int k, long bound);

enum class ObjectClass { Points, OrientedLines, UnorientedLines, Flats };
std::string object_class_str(ObjectClass c);
ObjectClass object_class_parse(const std::string& s);

// Exhaustive depth-first search for an index-increasing homogeneous
// subsequence of length n (first one in lexicographic order), with per-tuple
// type memoization. Absent iff none exists. Requires every tuple of the
// input to be in general position.
std::optional<std::vector<int>> find_homogeneous(const std::vector<OrientedLine>& lines,
                                                 int d, int n);

// All homogeneous index lists of length n, lexicographic order.
std::vector<std::vector<int>> all_homogeneous(const std::vector<OrientedLine>& lines,
                                              int d, int n);

// d=5 watch list: permutations of [4] whose universality is unsettled; a
// census flags any homogeneous subsequence typed by one of them (or a
// reverse), as noteworthy data, never as an assertion of absence.
bool on_watchlist(const Perm& sigma);

struct Census {
    std::string object_class;
    int d = 0;
    int k = 0;       // flats only
    int N = 0;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    long bound = 0;
    std::map<std::string, std::uint64_t> histogram;   // type string -> count
    std::uint64_t failures = 0;       // general-position rejections
    std::uint64_t found = 0;          // homogeneous subsequences recorded
    std::uint64_t watchlist_hits = 0; // d=5 oriented-line watch list
    std::vector<std::string> watchlist_types;
};

struct CensusParams {
    ObjectClass object_class = ObjectClass::OrientedLines;
    int d = 3;
    int k = 1;
    int N = 8;
    int n = 3;
    int trials = 100;
    std::uint64_t seed = 1;
    long bound = 10;
    int jobs = 1;
};

// For each trial: draw N random objects (resampling the whole trial on a
// general-position rejection), enumerate every homogeneous subsequence of
// length n, and record their types. Deterministic given the seed and
// independent of the job count.
Census census(const CensusParams& params);

} // namespace seqtype
