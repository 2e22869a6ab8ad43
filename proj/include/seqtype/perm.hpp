#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqtype/errors.hpp"

namespace seqtype {

// A permutation of [k] stored as its value sequence (1-based values).
using Perm = std::vector<int>;

inline Perm identity_perm(int k) {
    Perm p(k);
    for (int i = 0; i < k; ++i) p[i] = i + 1;
    return p;
}

inline Perm reversed(Perm p) {
    return Perm(p.rbegin(), p.rend());
}

bool is_permutation(const Perm& p);

// "3 1 2" <-> {3,1,2}
std::string perm_str(const Perm& p);
Perm perm_parse(const std::string& s);

// Ranks values by a strict order given as indices sorted by key; callers
// build Perms from sorted index lists directly.

} // namespace seqtype
