#include "seqtype/explore.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "seqtype/combinatorics.hpp"

namespace seqtype {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

SeedStream::SeedStream(std::uint64_t seed, std::uint64_t stream) {
    // mix the stream index through one round so that per-trial streams are
    // decorrelated from each other and from the base seed
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    state_ = s;
}

std::uint64_t SeedStream::next() { return splitmix64(state_); }

long SeedStream::next_coord(long bound) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<long>(next() % span) - bound;
}

Vector random_point(SeedStream& rng, int d, long bound) {
    Vector p(d);
    for (int i = 0; i < d; ++i) p[i] = Rational(rng.next_coord(bound));
    return p;
}

OrientedLine random_line(SeedStream& rng, int d, long bound) {
    OrientedLine l;
    l.d = d;
    l.a = random_point(rng, d, bound);
    do {
        l.v = random_point(rng, d, bound);
    } while (l.v.is_zero());
    return l;
}

Flat random_flat(SeedStream& rng, int d, int k, long bound) {
    Flat f;
    f.d = d;
    f.k = k;
    f.a = random_point(rng, d, bound);
    while (true) {
        f.basis.clear();
        for (int i = 0; i < k; ++i) f.basis.push_back(random_point(rng, d, bound));
        if (!u_of_basis(f.basis).is_zero()) break;
    }
    return f;
}

bool on_watchlist(const Perm& sigma) {
    static const std::vector<Perm> watch = {
        {2, 1, 4, 3}, {2, 4, 1, 3}, {1, 3, 2, 4}, {4, 1, 3, 2}, {1, 4, 2, 3}};
    if (sigma.size() != 4) return false;
    Perm rev = reversed(sigma);
    for (const auto& w : watch)
        if (sigma == w || rev == w) return true;
    return false;
}

std::string object_class_str(ObjectClass c) {
    switch (c) {
    case ObjectClass::Points: return "points";
    case ObjectClass::OrientedLines: return "oriented-lines";
    case ObjectClass::UnorientedLines: return "unoriented-lines";
    case ObjectClass::Flats: return "flats";
    }
    return "?";
}

ObjectClass object_class_parse(const std::string& s) {
    if (s == "points") return ObjectClass::Points;
    if (s == "oriented-lines") return ObjectClass::OrientedLines;
    if (s == "unoriented-lines") return ObjectClass::UnorientedLines;
    if (s == "flats") return ObjectClass::Flats;
    throw io_error("unknown object class: '" + s + "'");
}

namespace {

// Exhaustive DFS over index-increasing extensions with per-tuple type
// memoization; the common type of the branch lives on the stack.
class HomogeneousEnumerator {
public:
    HomogeneousEnumerator(int N, int arity,
                          std::function<std::string(const std::vector<int>&)> type_of)
        : N_(N), arity_(arity), type_of_(std::move(type_of)) {}

    void run(int target_len, const std::function<bool(const std::vector<int>&)>& visit) {
        stop_ = false;
        target_ = target_len;
        visit_ = &visit;
        std::vector<int> partial;
        extend(partial, 0, std::nullopt);
    }

private:
    void extend(std::vector<int>& partial, int from, std::optional<std::string> common) {
        if (stop_) return;
        if (static_cast<int>(partial.size()) == target_) {
            if ((*visit_)(partial)) stop_ = true;
            return;
        }
        int remaining = target_ - static_cast<int>(partial.size());
        for (int next = from; next <= N_ - remaining && !stop_; ++next) {
            partial.push_back(next);
            std::optional<std::string> branch = common;
            if (check(partial, branch)) extend(partial, next + 1, branch);
            partial.pop_back();
        }
    }

    bool check(const std::vector<int>& partial, std::optional<std::string>& common) {
        const int len = static_cast<int>(partial.size());
        if (len < arity_) return true;
        bool ok = true;
        for_each_combination(len - 1, arity_ - 1, [&](const std::vector<int>& pick) {
            if (!ok) return;
            std::vector<int> tuple;
            tuple.reserve(arity_);
            for (int p : pick) tuple.push_back(partial[p]);
            tuple.push_back(partial.back());
            const std::string& t = memo_type(tuple);
            if (!common) common = t;
            else if (*common != t) ok = false;
        });
        return ok;
    }

    const std::string& memo_type(const std::vector<int>& tuple) {
        auto it = memo_.find(tuple);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(tuple, type_of_(tuple)).first->second;
    }

    int N_, arity_, target_ = 0;
    bool stop_ = false;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
    std::function<std::string(const std::vector<int>&)> type_of_;
    std::map<std::vector<int>, std::string> memo_;
};

std::string line_tuple_type_str(const std::vector<OrientedLine>& lines,
                                const std::vector<int>& tuple) {
    std::vector<OrientedLine> t;
    t.reserve(tuple.size());
    for (int i : tuple) t.push_back(lines[i]);
    return perm_str(tuple_type(t));
}

} // namespace

std::optional<std::vector<int>> find_homogeneous(const std::vector<OrientedLine>& lines,
                                                 int d, int n) {
    const int N = static_cast<int>(lines.size());
    if (n < d - 1) throw invalid_argument_error("need n >= d-1");
    // reject inputs with degenerate tuples up front
    for_each_combination(N, d - 1, [&](const std::vector<int>& idx) {
        std::vector<OrientedLine> t;
        for (int i : idx) t.push_back(lines[i]);
        if (!line_general_position(t)) {
            std::string where;
            for (int i : idx) where += std::to_string(i + 1) + " ";
            throw general_position_error("tuple ( " + where + ") violates general position");
        }
    });
    HomogeneousEnumerator search(
        N, d - 1, [&](const std::vector<int>& t) { return line_tuple_type_str(lines, t); });
    std::optional<std::vector<int>> result;
    search.run(n, [&](const std::vector<int>& idx) {
        std::vector<int> one_based(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) one_based[i] = idx[i] + 1;
        result = one_based;
        return true;
    });
    return result;
}

std::vector<std::vector<int>> all_homogeneous(const std::vector<OrientedLine>& lines,
                                              int d, int n) {
    const int N = static_cast<int>(lines.size());
    HomogeneousEnumerator search(
        N, d - 1, [&](const std::vector<int>& t) { return line_tuple_type_str(lines, t); });
    std::vector<std::vector<int>> out;
    search.run(n, [&](const std::vector<int>& idx) {
        out.push_back(idx);
        return false;
    });
    return out;
}

namespace {

struct TrialResult {
    std::map<std::string, std::uint64_t> histogram;
    std::uint64_t failures = 0;
    std::uint64_t found = 0;
    std::uint64_t watchlist_hits = 0;
    std::vector<std::string> watchlist_types;
};

TrialResult run_trial(const CensusParams& p, std::uint64_t trial) {
    TrialResult res;
    SeedStream rng(p.seed, trial);
    const int max_rejects = 1000;

    for (int attempt = 0; attempt < max_rejects; ++attempt) {
        try {
            if (p.object_class == ObjectClass::Points) {
                PointSequence seq;
                seq.d = p.d;
                for (int i = 0; i < p.N; ++i) seq.points.push_back(random_point(rng, p.d, p.bound));
                // general position of all (d+1)-tuples is implied by
                // orientation_sign succeeding on each of them
                HomogeneousEnumerator search(p.N, p.d + 1, [&](const std::vector<int>& t) {
                    std::vector<Vector> pts;
                    for (int i : t) pts.push_back(seq.points[i]);
                    return std::string(orientation_sign(pts) > 0 ? "+1" : "-1");
                });
                search.run(p.n, [&](const std::vector<int>& idx) {
                    std::vector<Vector> pts;
                    for (int i : idx) pts.push_back(seq.points[i]);
                    PointSequence sub{p.d, pts};
                    auto sign = homogeneous_sign(sub);
                    if (sign) {
                        ++res.histogram[*sign > 0 ? "+1" : "-1"];
                        ++res.found;
                    }
                    return false;
                });
            } else if (p.object_class == ObjectClass::OrientedLines) {
                std::vector<OrientedLine> lines;
                for (int i = 0; i < p.N; ++i) lines.push_back(random_line(rng, p.d, p.bound));
                HomogeneousEnumerator search(p.N, p.d - 1, [&](const std::vector<int>& t) {
                    return line_tuple_type_str(lines, t);
                });
                search.run(p.n, [&](const std::vector<int>& idx) {
                    std::vector<OrientedLine> sub;
                    for (int i : idx) sub.push_back(lines[i]);
                    auto sigma = sequence_type(sub, p.d);
                    if (sigma) {
                        ++res.histogram[perm_str(*sigma)];
                        ++res.found;
                        if (p.d == 5 && on_watchlist(*sigma)) {
                            ++res.watchlist_hits;
                            res.watchlist_types.push_back(perm_str(*sigma));
                        }
                    }
                    return false;
                });
            } else if (p.object_class == ObjectClass::UnorientedLines) {
                std::vector<OrientedLine> lines;
                for (int i = 0; i < p.N; ++i) lines.push_back(random_line(rng, p.d, p.bound));
                HomogeneousEnumerator search(p.N, p.d, [&](const std::vector<int>& t) {
                    std::vector<OrientedLine> sub;
                    for (int i : t) sub.push_back(lines[i]);
                    UnorientedTypeProfile prof = unoriented_tuple_type(sub);
                    std::string s;
                    for (const auto& pair : prof.pairs) s += perm_str(pair) + "|";
                    return s;
                });
                search.run(p.n, [&](const std::vector<int>& idx) {
                    std::vector<OrientedLine> sub;
                    for (int i : idx) sub.push_back(lines[i]);
                    auto prof = unoriented_sequence_profile(sub, p.d);
                    if (prof) {
                        auto pair = reduce_profile(*prof);
                        ++res.histogram[pair ? perm_str(*pair) : std::string("mixed-profile")];
                        ++res.found;
                    }
                    return false;
                });
            } else {
                const int r = (p.d - 1) / p.k;
                std::vector<Flat> flats;
                for (int i = 0; i < p.N; ++i) flats.push_back(random_flat(rng, p.d, p.k, p.bound));
                HomogeneousEnumerator search(p.N, r, [&](const std::vector<int>& t) {
                    std::vector<Flat> sub;
                    for (int i : t) sub.push_back(flats[i]);
                    return perm_str(flats_tuple_type(sub));
                });
                search.run(p.n, [&](const std::vector<int>& idx) {
                    std::vector<Flat> sub;
                    for (int i : idx) sub.push_back(flats[i]);
                    auto pi = flats_sequence_type(sub, r);
                    if (pi) {
                        ++res.histogram[perm_str(*pi)];
                        ++res.found;
                    }
                    return false;
                });
            }
            return res;
        } catch (const general_position_error&) {
            ++res.failures;
            res.histogram.clear();
            res.found = 0;
            res.watchlist_hits = 0;
            res.watchlist_types.clear();
        }
    }
    throw verification_error("trial rejected too many degenerate samples");
}

} // namespace

Census census(const CensusParams& p) {
    if (p.trials < 1 || p.N < 1 || p.bound < 1)
        throw invalid_argument_error("census needs positive trials, N and bound");
    if (p.object_class == ObjectClass::Flats && (p.k < 1 || (p.d - 1) % p.k != 0))
        throw invalid_argument_error("flats census needs d = rk+1");
    int arity = 0;
    switch (p.object_class) {
    case ObjectClass::Points: arity = p.d + 1; break;
    case ObjectClass::OrientedLines: arity = p.d - 1; break;
    case ObjectClass::UnorientedLines: arity = p.d; break;
    case ObjectClass::Flats: arity = (p.d - 1) / p.k; break;
    }
    if (p.n < arity || p.N < p.n)
        throw invalid_argument_error("census needs N >= n >= tuple arity");

    std::vector<TrialResult> results(p.trials);
    int jobs = std::max(1, p.jobs);
    if (jobs == 1) {
        for (int t = 0; t < p.trials; ++t) results[t] = run_trial(p, t);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                try {
                    for (int t = w; t < p.trials; t += jobs) results[t] = run_trial(p, t);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : workers) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    Census c;
    c.object_class = object_class_str(p.object_class);
    c.d = p.d;
    c.k = p.object_class == ObjectClass::Flats ? p.k : 0;
    c.N = p.N;
    c.n = p.n;
    c.trials = p.trials;
    c.seed = p.seed;
    c.bound = p.bound;
    for (const auto& r : results) {
        for (const auto& [type, count] : r.histogram) c.histogram[type] += count;
        c.failures += r.failures;
        c.found += r.found;
        c.watchlist_hits += r.watchlist_hits;
        for (const auto& t : r.watchlist_types) c.watchlist_types.push_back(t);
    }
    std::sort(c.watchlist_types.begin(), c.watchlist_types.end());
    c.watchlist_types.erase(std::unique(c.watchlist_types.begin(), c.watchlist_types.end()),
                            c.watchlist_types.end());
    return c;
}

} // namespace seqtype
