#include "seqtype/perm.hpp"

#include <sstream>

namespace seqtype {

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

std::string perm_str(const Perm& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

Perm perm_parse(const std::string& s) {
    Perm p;
    std::istringstream in(s);
    int v;
    while (in >> v) p.push_back(v);
    if (!in.eof() || !is_permutation(p))
        throw io_error("bad permutation literal: '" + s + "'");
    return p;
}

} // namespace seqtype
